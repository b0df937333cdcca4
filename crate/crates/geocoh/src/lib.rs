//! Geometric coherence of qubit states and its trade-off relations.
//!
//! The geometric coherence of a state `ρ` relative to an orthonormal basis
//! `X = {|x1>, |x2>}` is one minus the best fidelity achievable by any state
//! diagonal in `X`. For qubits it has a closed form in the purity and the
//! basis diagonals, and it obeys sharp trade-offs:
//!
//! - a basis-independent ceiling in terms of the purity, equivalently a
//!   complementarity relation with the normalized linear entropy;
//! - lower bounds on the coherence summed over two or three measurement
//!   bases, controlled by the bases' incompatibility (their maximal squared
//!   overlap);
//! - an exact correspondence with the minimum error probability of
//!   discriminating an induced two-element pure-state ensemble, which turns
//!   the purity ceiling into a limit on discrimination error.
//!
//! Every closed form ships with an independent brute-force check: the
//! coherence formula against direct optimization over diagonal states, and
//! the two-/three-basis bounds against dense grid maximization over the
//! overlap-constraint polytopes. See [`coherence::geometric_coherence_oracle`],
//! [`tradeoffs::two_basis_bound_oracle`] and
//! [`tradeoffs::three_basis_bound_oracle`].
//!
//! All numerics are generic over the scalar type through [`Real`]; concrete
//! `f64`/`f32` aliases are exported at the crate root (`QubitState64`,
//! `QubitState32`, ...). The `f64` aliases are the production configuration;
//! every tolerance in [`tol`] is stated for `f64`.

pub mod coherence;
pub mod diag;
pub mod discrimination;
mod error;
mod gridopt;
pub mod qubit;
pub mod sampling;
mod scalar;
pub mod tol;
pub mod tradeoffs;

pub use error::{Error, Result};
pub use num_complex::Complex;
pub use scalar::Real;

pub use coherence::CoherenceResult;
pub use discrimination::{DiscriminationResult, PureEnsemble};
pub use qubit::{Eigensystem2, Matrix2, OrthonormalBasis, PureKet, QubitState};
pub use sampling::{SampleConfig, SampleFamily, Sampler};
pub use tradeoffs::{BoundReport, Incompatibility, IncompatibilityVector};

/// `f64` is the production scalar; all documented tolerances apply to it.
pub type Complex64 = Complex<f64>;
pub type Matrix64 = Matrix2<f64>;
pub type Ket64 = PureKet<f64>;
pub type QubitState64 = QubitState<f64>;
pub type Basis64 = OrthonormalBasis<f64>;
pub type Ensemble64 = PureEnsemble<f64>;
pub type Sampler64 = Sampler<f64>;

/// Reduced-precision aliases; useful for embedding, not for the certified
/// tolerances.
pub type Complex32 = Complex<f32>;
pub type Matrix32 = Matrix2<f32>;
pub type Ket32 = PureKet<f32>;
pub type QubitState32 = QubitState<f32>;
pub type Basis32 = OrthonormalBasis<f32>;
