//! Geometric coherence: fidelity, the qubit closed form, and a brute-force
//! oracle that evaluates the defining optimization directly.
//!
//! The closed form
//!
//! ```text
//! C_g^X(ρ) = 1/2 - (1/2)·√(1 - 2(tr ρ² - Σ_i <x_i|ρ|x_i>²))
//! ```
//!
//! is the production path. [`geometric_coherence_oracle`] never touches it:
//! it maximizes the fidelity against the diagonal family
//! `σ(t) = t|x1><x1| + (1-t)|x2><x2|` by coarse grid plus golden-section
//! refinement, so agreement between the two is evidence, not tautology.

use crate::diag::{self, ClampEvent};
use crate::qubit::{hermitian_eigenvalues, sqrt_psd, OrthonormalBasis, PureKet, QubitState};
use crate::scalar::Real;
use crate::tol;
use crate::{Error, Result};

/// Coherence value together with the basis diagonals it was computed from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherenceResult<T> {
    /// `C_g^X(ρ) ∈ [0, 1/2]`.
    pub value: T,
    /// `(<x1|ρ|x1>, <x2|ρ|x2>)`; sums to 1 within `NORM_TOL`.
    pub basis_diagonals: [T; 2],
}

/// Fidelity `F(ρ,σ) = (tr √(√ρ σ √ρ))²`, the square of the Uhlmann fidelity.
///
/// Clamped to `[0, 1]`; symmetric in its arguments to within `1e-10`.
pub fn fidelity<T: Real>(rho: &QubitState<T>, sigma: &QubitState<T>) -> Result<T> {
    let s = sqrt_psd(rho.matrix())?;
    let inner = (s * *sigma.matrix() * s).hermitized();
    let root = sqrt_psd(&inner)?;
    let tr = root.trace().re;
    let f = tr * tr;
    if f < T::zero() || f > T::one() {
        diag::record(ClampEvent::Fidelity);
    }
    Ok(f.clamped(T::zero(), T::one()))
}

fn radicand_check<T: Real>(r: T) -> Result<T> {
    if r < -T::lit(tol::RADICAND_TOL) {
        return Err(Error::NumericalDomain {
            what: "coherence radicand",
            value: r.to_f64().unwrap_or(f64::NAN),
        });
    }
    if r < T::zero() || r > T::one() {
        diag::record(ClampEvent::Radicand);
    }
    Ok(r.clamped(T::zero(), T::one()))
}

/// Qubit closed form of the geometric coherence.
///
/// The radicand is provably in `[0, 1]` for valid inputs; round-off inside
/// `[-RADICAND_TOL, 0)` clamps to zero, anything lower is reported as a
/// numerical-domain error rather than masked.
pub fn geometric_coherence<T: Real>(
    rho: &QubitState<T>,
    basis: &OrthonormalBasis<T>,
) -> Result<CoherenceResult<T>> {
    let d1 = rho.expectation(basis.ket(0));
    let d2 = rho.expectation(basis.ket(1));
    // For Hermitian ρ, tr ρ² - Σ_i <x_i|ρ|x_i>² = |<x1|ρ|x2>|² + |<x2|ρ|x1>|²
    // identically, so the radicand is 1 - 2(|r12|² + |r21|²). Evaluating the
    // off-diagonal elements directly sidesteps the cancellation in
    // tr ρ² - Σ d_i², which costs half the significant digits near maximal
    // coherence; keeping both conjugate elements makes the value bit-exact
    // under swapping the basis kets.
    let r12 = rho.matrix_element(basis.ket(0), basis.ket(1));
    let r21 = rho.matrix_element(basis.ket(1), basis.ket(0));
    let radicand = radicand_check(T::one() - T::two() * (r12.norm_sqr() + r21.norm_sqr()))?;
    let value = T::half() * (T::one() - radicand.sqrt());
    Ok(CoherenceResult {
        value,
        basis_diagonals: [d1, d2],
    })
}

/// Pure-state specialization `1 - max_i |<x_i|ψ>|²`.
pub fn pure_state_coherence<T: Real>(psi: &PureKet<T>, basis: &OrthonormalBasis<T>) -> T {
    let o1 = crate::qubit::overlap_sq(basis.ket(0), psi);
    let o2 = crate::qubit::overlap_sq(basis.ket(1), psi);
    T::one() - o1.max(o2)
}

/// Number of points in the oracle's coarse scan of `t ∈ [0, 1]`.
const ORACLE_GRID: usize = 4001;
/// Golden-section refinement stops once the bracket is this narrow.
const ORACLE_WIDTH: f64 = 1e-12;

/// Brute-force evaluation of the defining optimization: maximizes
/// `F(ρ, σ(t))` over the incoherent family `σ(t) = t|x1><x1| + (1-t)|x2><x2|`
/// and returns `1 - F_max`.
///
/// A 4001-point coarse scan localizes the global maximum (no unimodality
/// assumption), then golden-section search refines the bracketing interval to
/// width `1e-12`. Deterministic for a fixed input.
pub fn geometric_coherence_oracle<T: Real>(
    rho: &QubitState<T>,
    basis: &OrthonormalBasis<T>,
) -> Result<T> {
    let s = sqrt_psd(rho.matrix())?;
    // F(ρ, σ(t)) = (tr √(t·A + (1-t)·B))² with A = √ρ P1 √ρ, B = √ρ P2 √ρ.
    let a = (s * basis.ket(0).projector() * s).hermitized();
    let b = (s * basis.ket(1).projector() * s).hermitized();

    let eval = |t: T| -> T {
        let m = (a.scaled(t) + b.scaled(T::one() - t)).hermitized();
        let (hi, lo) = hermitian_eigenvalues(&m);
        let tr = hi.max(T::zero()).sqrt() + lo.max(T::zero()).sqrt();
        (tr * tr).clamped(T::zero(), T::one())
    };

    let n = ORACLE_GRID;
    let step = T::one() / T::lit((n - 1) as f64);
    let mut best_i = 0usize;
    let mut best = T::neg_infinity();
    for i in 0..n {
        let t = if i == n - 1 {
            T::one()
        } else {
            T::lit(i as f64) * step
        };
        let f = eval(t);
        if f > best {
            best = f;
            best_i = i;
        }
    }

    let lo_t = if best_i == 0 {
        T::zero()
    } else {
        T::lit((best_i - 1) as f64) * step
    };
    let hi_t = if best_i >= n - 2 {
        T::one()
    } else {
        T::lit((best_i + 1) as f64) * step
    };
    let f_max = golden_section_max(eval, lo_t, hi_t, T::lit(ORACLE_WIDTH)).max(best);
    Ok(T::one() - f_max)
}

/// Golden-section maximization on `[lo, hi]`; returns the best value seen.
fn golden_section_max<T: Real>(f: impl Fn(T) -> T, mut lo: T, mut hi: T, width: T) -> T {
    let inv_phi = T::lit(0.618_033_988_749_894_9);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > width {
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    f1.max(f2)
}
