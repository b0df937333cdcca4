//! Minimum-error discrimination of two-element pure-state ensembles under von
//! Neumann measurement, the bijection between states-with-basis and
//! ensembles, and the purity ceiling on the error probability.
//!
//! Discriminating the ensemble induced by `(ρ, X)` — weights
//! `η_i = <x_i|ρ|x_i>`, kets `η_i^{-1/2}·√ρ|x_i>` — has minimum error
//! probability exactly equal to `C_g^X(ρ)`. Running the purity ceiling
//! through that correspondence bounds the error of discriminating *any*
//! two-element pure ensemble by the purity of its average state.

use num_complex::Complex;

use crate::coherence::geometric_coherence;
use crate::diag::{self, ClampEvent};
use crate::qubit::{sqrt_psd, Matrix2, OrthonormalBasis, PureKet, QubitState};
use crate::scalar::Real;
use crate::tol;
use crate::tradeoffs::{coherence_ceiling, mixedness, BoundReport};
use crate::{Error, Result};

/// Weighted pair of pure states `{(p_1, |ψ_1>), (p_2, |ψ_2>)}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureEnsemble<T> {
    elements: [(T, PureKet<T>); 2],
}

impl<T: Real> PureEnsemble<T> {
    /// Requires nonnegative weights summing to 1 within `NORM_TOL`; the kets
    /// are normalized by construction.
    pub fn new(elements: [(T, PureKet<T>); 2]) -> Result<Self> {
        let (w1, w2) = (elements[0].0, elements[1].0);
        if !w1.is_finite() || !w2.is_finite() || w1 < T::zero() || w2 < T::zero() {
            return Err(Error::BadWeights {
                deviation: f64::NAN,
            });
        }
        let deviation = (w1 + w2 - T::one()).abs();
        if deviation > T::lit(tol::NORM_TOL) {
            return Err(Error::BadWeights {
                deviation: deviation.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { elements })
    }

    pub fn element(&self, i: usize) -> (T, &PureKet<T>) {
        (self.elements[i].0, &self.elements[i].1)
    }

    pub fn weights(&self) -> [T; 2] {
        [self.elements[0].0, self.elements[1].0]
    }
}

/// Outcome of a Helstrom optimization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscriminationResult<T> {
    /// Minimum error probability over von Neumann measurements, in `[0, 1/2]`.
    pub error_probability: T,
    /// Bloch vector of the optimal projector `Π = (I + n·σ)/2` identifying
    /// the first ensemble member. When the two hypotheses coincide every
    /// measurement is optimal and `(0, 0, 1)` is reported.
    pub optimal_projector_bloch: [T; 3],
}

/// Exact minimum-error discrimination of a two-element pure ensemble:
/// success `= p_2 + Σ (positive eigenvalues of p_1ρ_1 - p_2ρ_2)`, with the
/// optimal projector the positive eigenprojector of that weighted difference.
pub fn min_error_probability<T: Real>(ensemble: &PureEnsemble<T>) -> DiscriminationResult<T> {
    let (p1, psi1) = ensemble.element(0);
    let (p2, psi2) = ensemble.element(1);
    let d = (psi1.projector().scaled(p1) - psi2.projector().scaled(p2)).hermitized();

    // Pauli decomposition D = w0·I + w·σ gives eigenvalues w0 ± |w| and the
    // positive eigenprojector (I + ŵ·σ)/2 directly.
    let e = d.entries();
    let w0 = T::half() * (e[0][0].re + e[1][1].re);
    let wx = e[0][1].re;
    let wy = -e[0][1].im;
    let wz = T::half() * (e[0][0].re - e[1][1].re);
    let wnorm = (wx * wx + wy * wy + wz * wz).sqrt();

    let hi = w0 + wnorm;
    let lo = w0 - wnorm;
    let success = p2 + hi.max(T::zero()) + lo.max(T::zero());
    let pe = T::one() - success;
    if pe < T::zero() || pe > T::half() {
        diag::record(ClampEvent::ErrorProbability);
    }
    let bloch = if wnorm > T::lit(tol::WEIGHT_TOL) {
        [wx / wnorm, wy / wnorm, wz / wnorm]
    } else {
        [T::zero(), T::zero(), T::one()]
    };
    DiscriminationResult {
        error_probability: pe.clamped(T::zero(), T::half()),
        optimal_projector_bloch: bloch,
    }
}

/// The pure-state ensemble of `ρ` induced by the basis `X`: weights
/// `η_i = <x_i|ρ|x_i>` and kets `η_i^{-1/2}·√ρ|x_i>`, which reconstruct
/// `ρ = Σ η_i |ψ_i><ψ_i|`.
///
/// A weight below `WEIGHT_TOL` means `ρ` is the other basis projector; the
/// ensemble degenerates to a single element and both the error probability
/// and the coherence are zero. That case is reported as
/// [`Error::DegenerateWeight`] so callers can special-case it explicitly.
pub fn ensemble_from_state<T: Real>(
    rho: &QubitState<T>,
    basis: &OrthonormalBasis<T>,
) -> Result<PureEnsemble<T>> {
    let s = sqrt_psd(rho.matrix())?;
    let cutoff = T::lit(tol::WEIGHT_TOL);
    let mut parts: [(T, PureKet<T>); 2] = [
        (T::zero(), PureKet::zero_ket()),
        (T::zero(), PureKet::zero_ket()),
    ];
    for (part, ket) in parts.iter_mut().zip(basis.kets()) {
        let eta = rho.expectation(ket);
        if eta < cutoff {
            return Err(Error::DegenerateWeight {
                weight: eta.to_f64().unwrap_or(f64::NAN),
                cutoff: tol::WEIGHT_TOL,
            });
        }
        let [a0, a1] = ket.amplitudes();
        let se = s.entries();
        let v0 = se[0][0] * a0 + se[0][1] * a1;
        let v1 = se[1][0] * a0 + se[1][1] * a1;
        let inv = Complex::new(eta.sqrt().recip(), T::zero());
        let psi = PureKet::new(v0 * inv, v1 * inv)?;
        *part = (eta, psi);
    }
    // Weights are basis diagonals of a unit-trace state, so they sum to 1.
    PureEnsemble::new(parts)
}

/// Average state `ρ = Σ p_i |ψ_i><ψ_i|` of an ensemble, validated.
pub fn state_from_ensemble<T: Real>(ensemble: &PureEnsemble<T>) -> Result<QubitState<T>> {
    let (p1, psi1) = ensemble.element(0);
    let (p2, psi2) = ensemble.element(1);
    let m = (psi1.projector().scaled(p1) + psi2.projector().scaled(p2)).hermitized();
    QubitState::new(m)
}

/// Evaluates both sides of the coherence / discrimination correspondence:
/// returns `(C_g^X(ρ), P_e of the induced ensemble)`, which agree to `1e-8`.
/// A degenerate weight means `ρ` is a basis projector and both sides are
/// exactly zero.
pub fn coherence_discrimination_pair<T: Real>(
    rho: &QubitState<T>,
    basis: &OrthonormalBasis<T>,
) -> Result<(T, T)> {
    match ensemble_from_state(rho, basis) {
        Ok(ensemble) => {
            let c = geometric_coherence(rho, basis)?.value;
            let pe = min_error_probability(&ensemble).error_probability;
            Ok((c, pe))
        }
        Err(Error::DegenerateWeight { .. }) => Ok((T::zero(), T::zero())),
        Err(e) => Err(e),
    }
}

/// Ceiling report for discrimination, plus the complementarity left-hand side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscriminationCeiling<T> {
    /// `P_e` against the purity ceiling `1/2 - √((1-P)/2)` of the average
    /// state; `lower_bound` carries the ceiling, `slack = ceiling - P_e`.
    pub report: BoundReport<T>,
    /// `P_e + (1/2)√S_L`, the complementarity form; at most `1/2`.
    pub complementarity_lhs: T,
}

/// Purity ceiling on the discrimination error:
/// `P_e <= 1/2 - √((1-P)/2)` with `P` the purity of the average state,
/// equivalently `P_e + (1/2)√S_L <= 1/2`.
pub fn error_probability_ceiling<T: Real>(
    ensemble: &PureEnsemble<T>,
) -> Result<DiscriminationCeiling<T>> {
    let rho = state_from_ensemble(ensemble)?;
    let pe = min_error_probability(ensemble).error_probability;
    let ceiling = coherence_ceiling(rho.purity())?;
    // Saturation happens exactly when the average state has both diagonals
    // 1/2 in the basis induced by the ensemble decomposition; detect it from
    // the report slack, consistent with the ceiling's saturation tolerance.
    let saturated = (ceiling - pe).abs() <= T::lit(tol::SAT_TOL);
    let report = BoundReport::from_ceiling(pe, ceiling, saturated);
    let complementarity_lhs = pe + T::half() * mixedness(&rho).sqrt();
    Ok(DiscriminationCeiling {
        report,
        complementarity_lhs,
    })
}

/// Success probability of a projective measurement `{Π, I-Π}` on the
/// ensemble, recomputed from first principles: `p_1 tr(Πρ_1) + p_2 tr((I-Π)ρ_2)`.
/// Tests use it to certify the optimality of the reported projector.
pub fn measurement_success<T: Real>(ensemble: &PureEnsemble<T>, bloch: [T; 3]) -> T {
    let half = T::half();
    let [x, y, z] = bloch;
    let proj = Matrix2::from_entries_unchecked([
        [
            Complex::new(half * (T::one() + z), T::zero()),
            Complex::new(half * x, -half * y),
        ],
        [
            Complex::new(half * x, half * y),
            Complex::new(half * (T::one() - z), T::zero()),
        ],
    ]);
    let complement = Matrix2::identity() - proj;
    let (p1, psi1) = ensemble.element(0);
    let (p2, psi2) = ensemble.element(1);
    let t1 = (proj * psi1.projector()).trace().re;
    let t2 = (complement * psi2.projector()).trace().re;
    p1 * t1 + p2 * t2
}

/// Closed Helstrom form `(1/2)(1 - √(1 - 4 p_1 p_2 |<ψ_1|ψ_2>|²))`; the
/// independent second route against [`min_error_probability`].
pub fn helstrom_closed_form<T: Real>(ensemble: &PureEnsemble<T>) -> T {
    let (p1, psi1) = ensemble.element(0);
    let (p2, psi2) = ensemble.element(1);
    let overlap = psi1.inner(psi2).norm_sqr();
    let radicand = (T::one() - T::lit(4.0) * p1 * p2 * overlap).max(T::zero());
    T::half() * (T::one() - radicand.sqrt())
}
