//! Validation and clamping tolerances, stated for `f64`.
//!
//! Double precision leaves roughly six orders of magnitude of headroom above
//! these thresholds for the chained eigendecomposition / matrix square root
//! operations, so a violation signals an invalid input rather than round-off.

/// Ket normalization and unit-trace deviation: `||<ψ|ψ>| - 1|`, `|tr ρ - 1|`.
pub const NORM_TOL: f64 = 1e-9;

/// Hermiticity deviation `‖ρ - ρ†‖_max`.
pub const HERM_TOL: f64 = 1e-9;

/// Orthogonality deviation `|<k1|k2>|` for basis kets and eigenvectors.
pub const ORTHO_TOL: f64 = 1e-9;

/// Most negative admissible eigenvalue of a nominally PSD matrix.
pub const PSD_TOL: f64 = 1e-10;

/// Reconstruction residual for eigendecomposition and matrix square root.
pub const RECON_TOL: f64 = 1e-10;

/// Admissible negative slack in the trade-off inequalities. The bound
/// formulas involve a single square root.
pub const SLACK_TOL: f64 = 1e-9;

/// Saturation detection for the trade-off bounds; looser than `SLACK_TOL`
/// because it chains two independently computed quantities.
pub const SAT_TOL: f64 = 1e-7;

/// Ensemble weight below which the induced ensemble degenerates to a single
/// element (the state is then a basis projector and carries no coherence).
pub const WEIGHT_TOL: f64 = 1e-10;

/// Round-off window for provably nonnegative radicands: values in
/// `[-RADICAND_TOL, 0)` clamp to zero, anything lower is a logic error.
pub const RADICAND_TOL: f64 = 1e-12;

/// Round-off window for clamping quantities onto closed ranges whose bounds
/// are theorems (incompatibility >= 1/2, case-split boundaries).
pub const CLAMP_EPS: f64 = 1e-12;

/// Width of the dead phase: amplitudes at most this large (relative to a unit
/// vector) are treated as zero when fixing the global phase.
pub const PHASE_EPS: f64 = 1e-14;
