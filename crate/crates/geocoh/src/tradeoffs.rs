//! Trade-off relations of the geometric coherence: the purity ceiling and its
//! saturation geometry, the complementarity with mixedness, overlap
//! feasibility for vector triples, and the two- and three-basis uncertainty
//! relations with their grid-search proof oracles.
//!
//! All bounds share the kernel `f(x) = √(1 + 4(2P−1)(x²−x))`, convex and
//! symmetric about `x = 1/2`; each closed-form bound is the value of a convex
//! maximization of sums of `f` over an overlap-constraint polytope, and the
//! `*_bound_oracle` functions re-solve those maximizations numerically.

use crate::coherence::geometric_coherence;
use crate::diag::{self, ClampEvent};
use crate::gridopt::grid_max;
use crate::qubit::{overlap_sq, OrthonormalBasis, QubitState};
use crate::scalar::Real;
use crate::tol;
use crate::{Error, Result};

/// Maximal squared overlap between the kets of two bases functioning as their
/// commutativity measure: `1/2` for mutually unbiased bases, `1` for
/// compatible ones.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Incompatibility<T> {
    /// The maximum overlap, clamped to `[1/2, 1]`.
    pub value: T,
    /// Index pair `(i, j)` attaining it; ties break to the lexicographically
    /// smallest pair.
    pub argmax_pair: (usize, usize),
}

/// The three pairwise incompatibilities of three bases, sorted descending.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IncompatibilityVector<T> {
    c: [T; 3],
}

impl<T: Real> IncompatibilityVector<T> {
    /// Requires a descending triple inside `[1/2, 1]` (round-off within
    /// `CLAMP_EPS` of the range edges is absorbed).
    pub fn new(c1: T, c2: T, c3: T) -> Result<Self> {
        let eps = T::lit(tol::CLAMP_EPS);
        let lo = T::half() - eps;
        let hi = T::one() + eps;
        let in_range = |c: T| c >= lo && c <= hi;
        if !(in_range(c1) && in_range(c2) && in_range(c3)) || c1 < c2 || c2 < c3 {
            return Err(Error::NotDescendingIncompatibility(
                c1.to_f64().unwrap_or(f64::NAN),
                c2.to_f64().unwrap_or(f64::NAN),
                c3.to_f64().unwrap_or(f64::NAN),
            ));
        }
        let clamp = |c: T| c.clamped(T::half(), T::one());
        Ok(Self {
            c: [clamp(c1), clamp(c2), clamp(c3)],
        })
    }

    pub fn components(&self) -> [T; 3] {
        self.c
    }
}

/// One verdict of a trade-off inequality.
///
/// For the lower-bound relations `slack = lhs - lower_bound`; for the ceiling
/// relations the `lower_bound` field carries the ceiling and
/// `slack = ceiling - lhs`. Either way `slack >= -SLACK_TOL` on every valid
/// input — a violation falsifies the relation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport<T> {
    /// Sum of coherences (or error probability) being bounded.
    pub lhs: T,
    /// The bound it is compared against.
    pub lower_bound: T,
    /// Nonnegative distance from the bound.
    pub slack: T,
    /// Whether the inequality is saturated within `SAT_TOL`.
    pub saturated: bool,
}

impl<T: Real> BoundReport<T> {
    pub(crate) fn from_lower(lhs: T, lower_bound: T) -> Self {
        let slack = lhs - lower_bound;
        Self {
            lhs,
            lower_bound,
            slack,
            saturated: slack <= T::lit(tol::SAT_TOL),
        }
    }

    pub(crate) fn from_ceiling(lhs: T, ceiling: T, saturated: bool) -> Self {
        Self {
            lhs,
            lower_bound: ceiling,
            slack: ceiling - lhs,
            saturated,
        }
    }
}

/// The bound kernel `f(x) = √(1 + 4(2P−1)(x²−x))` for `x ∈ [0,1]` and purity
/// `P ∈ [1/2, 1]`.
///
/// The radicand cannot go negative: `4(2P−1)(x²−x) >= −1`. Equivalently
/// `f² = (2−2P) + (2P−1)(2x−1)²`, which also shows `|f'| <= 2` everywhere —
/// the Lipschitz constant the grid oracles rely on.
pub fn f_convex<T: Real>(x: T, purity: T) -> T {
    let four = T::lit(4.0);
    let radicand = T::one() + four * (T::two() * purity - T::one()) * (x * x - x);
    radicand.max(T::zero()).sqrt()
}

fn check_unit_range<T: Real>(value: T, name: &'static str, lo: f64) -> Result<T> {
    let eps = T::lit(tol::NORM_TOL);
    if !value.is_finite() || value < T::lit(lo) - eps || value > T::one() + eps {
        return Err(Error::Domain {
            name,
            value: value.to_f64().unwrap_or(f64::NAN),
            domain: if lo == 0.5 { "[1/2, 1]" } else { "[0, 1]" },
        });
    }
    Ok(value.clamped(T::lit(lo), T::one()))
}

/// Basis-independent ceiling on the geometric coherence:
/// `C_g <= 1/2 - √((1-P)/2)`.
pub fn coherence_ceiling<T: Real>(purity: T) -> Result<T> {
    let p = check_unit_range(purity, "purity", 0.5)?;
    Ok(T::half() - ((T::one() - p) * T::half()).sqrt())
}

/// Whether `(ρ, X)` attains the purity ceiling: true exactly when both basis
/// diagonals equal `1/2` (within `SAT_TOL`), i.e. the eigenbasis of a
/// nonmaximally mixed `ρ` is mutually unbiased to `X`.
pub fn ceiling_saturated<T: Real>(rho: &QubitState<T>, basis: &OrthonormalBasis<T>) -> bool {
    let d1 = rho.expectation(basis.ket(0));
    (d1 - T::half()).abs() <= T::lit(tol::SAT_TOL)
}

/// Normalized linear entropy `S_L = 2(1 - P)` for qubits, clamped to `[0, 1]`.
pub fn mixedness<T: Real>(rho: &QubitState<T>) -> T {
    let s = T::two() * (T::one() - rho.purity());
    if s < T::zero() || s > T::one() {
        diag::record(ClampEvent::Mixedness);
    }
    s.clamped(T::zero(), T::one())
}

/// Complementarity between coherence and mixedness:
/// `C_g + (1/2)√S_L <= 1/2`.
///
/// The report's `lower_bound` field carries the ceiling `1/2` and
/// `slack = 1/2 - lhs`; `saturated` mirrors [`ceiling_saturated`].
pub fn complementarity_check<T: Real>(
    rho: &QubitState<T>,
    basis: &OrthonormalBasis<T>,
) -> Result<BoundReport<T>> {
    let c = geometric_coherence(rho, basis)?.value;
    let lhs = c + T::half() * mixedness(rho).sqrt();
    Ok(BoundReport::from_ceiling(
        lhs,
        T::half(),
        ceiling_saturated(rho, basis),
    ))
}

/// Feasibility of a squared-overlap triple `a = |<x|r>|²`, `b = |<z|r>|²`,
/// `c = |<z|x>|²` coming from three normalized vectors:
/// `a + b <= 1 + √c` and `|a - b| <= √(1-c)`, plus `1 - √c <= a + b` when the
/// vectors live in a two-dimensional space (`qubit = true`). Each inequality
/// is tested with `SLACK_TOL` of slack.
pub fn overlap_triple_feasible<T: Real>(a: T, b: T, c: T, qubit: bool) -> bool {
    let eps = T::lit(tol::SLACK_TOL);
    let sc = c.max(T::zero()).sqrt();
    let s1c = (T::one() - c).max(T::zero()).sqrt();
    let sum_hi = a + b <= T::one() + sc + eps;
    let diff = (a - b).abs() <= s1c + eps;
    let sum_lo = !qubit || T::one() - sc <= a + b + eps;
    sum_hi && diff && sum_lo
}

/// Incompatibility of two bases: the maximum of the four squared overlaps.
pub fn incompatibility<T: Real>(
    x: &OrthonormalBasis<T>,
    y: &OrthonormalBasis<T>,
) -> Incompatibility<T> {
    let mut value = T::neg_infinity();
    let mut argmax = (0usize, 0usize);
    for i in 0..2 {
        for j in 0..2 {
            let o = overlap_sq(x.ket(i), y.ket(j));
            if o > value {
                value = o;
                argmax = (i, j);
            }
        }
    }
    // The max overlap of two orthonormal qubit bases is >= 1/2; anything
    // below is round-off.
    if value < T::half() || value > T::one() {
        diag::record(ClampEvent::Incompatibility);
    }
    Incompatibility {
        value: value.clamped(T::half(), T::one()),
        argmax_pair: argmax,
    }
}

/// Pairwise incompatibilities of `(X,Y)`, `(Y,Z)`, `(X,Z)`, sorted descending.
pub fn incompatibility_vector<T: Real>(
    x: &OrthonormalBasis<T>,
    y: &OrthonormalBasis<T>,
    z: &OrthonormalBasis<T>,
) -> IncompatibilityVector<T> {
    let mut cs = [
        incompatibility(x, y).value,
        incompatibility(y, z).value,
        incompatibility(x, z).value,
    ];
    cs.sort_by(|a, b| b.partial_cmp(a).unwrap_or(core::cmp::Ordering::Equal));
    IncompatibilityVector::new(cs[0], cs[1], cs[2])
        .expect("sorted clamped overlaps form a valid incompatibility vector")
}

/// Two-basis uncertainty bound:
/// `C_g^X + C_g^Y >= (1/2)[1 - √(1 + 4(2P−1)(c - √c))]`.
///
/// Zero exactly at `P = 1/2` or `c = 1`; at `P = 1` it reduces to the
/// state-independent pure-state form `(1/2)[1 - √(1 + 4(c - √c))]`.
pub fn two_basis_lower_bound<T: Real>(purity: T, c: T) -> Result<T> {
    let p = check_unit_range(purity, "purity", 0.5)?;
    let c = check_unit_range(c, "incompatibility", 0.5)?;
    let four = T::lit(4.0);
    let radicand = T::one() + four * (T::two() * p - T::one()) * (c - c.sqrt());
    Ok(T::half() * (T::one() - radicand.max(T::zero()).sqrt()))
}

/// Evaluates the two-basis relation on concrete inputs.
pub fn two_basis_check<T: Real>(
    rho: &QubitState<T>,
    x: &OrthonormalBasis<T>,
    y: &OrthonormalBasis<T>,
) -> Result<BoundReport<T>> {
    let cx = geometric_coherence(rho, x)?.value;
    let cy = geometric_coherence(rho, y)?.value;
    let bound = two_basis_lower_bound(rho.purity(), incompatibility(x, y).value)?;
    Ok(BoundReport::from_lower(cx + cy, bound))
}

/// Grid re-derivation of the two-basis bound: maximizes
/// `g(a,b) = f(a) + f(b)` over the polygon
/// `{a+b >= 1-√c, |b-a| <= √(1-c), a,b ∈ [0,1/2]}` by a 2001² dense grid with
/// feasibility filtering plus zoom refinement, and returns `1 - max/2`.
/// Must agree with [`two_basis_lower_bound`] to `1e-4`.
pub fn two_basis_bound_oracle<T: Real>(purity: T, c: T) -> Result<T> {
    let p = check_unit_range(purity, "purity", 0.5)?;
    let c = check_unit_range(c, "incompatibility", 0.5)?;
    let sc = c.sqrt();
    let s1c = (T::one() - c).max(T::zero()).sqrt();
    let feasible = move |q: &[T; 2]| {
        let (a, b) = (q[0], q[1]);
        a + b >= T::one() - sc && (b - a).abs() <= s1c
    };
    let value = move |q: &[T; 2]| f_convex(q[0], p) + f_convex(q[1], p);
    let (max_g, _) = grid_max(
        [T::zero(); 2],
        [T::half(); 2],
        2001,
        T::two(),
        &feasible,
        &value,
    )
    .expect("two-basis polygon contains grid points for every c in [1/2,1]");
    Ok(T::one() - T::half() * max_g)
}

/// Three-basis uncertainty bound with its case split on
/// `1 + √c3  vs  √c1 + √c2`.
///
/// Within `CLAMP_EPS` of the boundary both branches are evaluated and the
/// smaller one is returned, so round-off can only understate the bound.
pub fn three_basis_lower_bound<T: Real>(purity: T, cv: &IncompatibilityVector<T>) -> Result<T> {
    let p = check_unit_range(purity, "purity", 0.5)?;
    let [c1, c2, c3] = cv.components();
    let (s1, s2, s3) = (c1.sqrt(), c2.sqrt(), c3.sqrt());

    let case1 = |p: T| T::one() - T::half() * (f_convex(s1, p) + f_convex(s1 - s3, p));
    let case2 = |p: T| {
        let corner = f_convex((T::one() - s1 - s2 + s3) * T::half(), p)
            + f_convex((T::one() - s1 + s2 - s3) * T::half(), p)
            + f_convex((T::one() + s1 - s2 - s3) * T::half(), p);
        let edge = T::one() + f_convex(s1, p) + f_convex(s2, p);
        T::lit(1.5) - T::half() * edge.max(corner)
    };

    let gap = (s1 + s2) - (T::one() + s3);
    let eps = T::lit(tol::CLAMP_EPS);
    Ok(if gap > eps {
        case1(p)
    } else if gap < -eps {
        case2(p)
    } else {
        // On the boundary the theorem routes to case 2; within round-off of
        // it, never overstate a lower bound.
        case1(p).min(case2(p))
    })
}

/// Evaluates the three-basis relation on concrete inputs.
pub fn three_basis_check<T: Real>(
    rho: &QubitState<T>,
    x: &OrthonormalBasis<T>,
    y: &OrthonormalBasis<T>,
    z: &OrthonormalBasis<T>,
) -> Result<BoundReport<T>> {
    let cx = geometric_coherence(rho, x)?.value;
    let cy = geometric_coherence(rho, y)?.value;
    let cz = geometric_coherence(rho, z)?.value;
    let cv = incompatibility_vector(x, y, z);
    let bound = three_basis_lower_bound(rho.purity(), &cv)?;
    Ok(BoundReport::from_lower(cx + cy + cz, bound))
}

/// Grid re-derivation of the three-basis maximization: maximizes
/// `G(a,b,n) = f(a) + f(b) + f(n)` over the relaxed polyhedron
///
/// ```text
/// a+b ∈ [1-√c1, 1+√c1]    b-a ∈ [-√(1-c1), √(1-c1)]
/// a+n ∈ [1-√c2, 1+√c2]    n-a ∈ [-√(1-c2), √(1-c2)]
/// b+n ∈ [1-√c3, 1+√c3]    a,b,n ∈ [0, 1/2]
/// ```
///
/// by a 201³ dense grid with feasibility filtering plus zoom refinement, and
/// returns `3/2 - max/2`. The closed-form bound never exceeds this value by
/// more than `1e-3`, and matches it to `1e-3` wherever the case-1 derivation
/// is tight (`c1 <= 3/4`).
pub fn three_basis_bound_oracle<T: Real>(purity: T, cv: &IncompatibilityVector<T>) -> Result<T> {
    let p = check_unit_range(purity, "purity", 0.5)?;
    let [c1, c2, c3] = cv.components();
    let (s1, s2, s3) = (c1.sqrt(), c2.sqrt(), c3.sqrt());
    let (t1, t2) = (
        (T::one() - c1).max(T::zero()).sqrt(),
        (T::one() - c2).max(T::zero()).sqrt(),
    );
    let one = T::one();
    let feasible = move |q: &[T; 3]| {
        let (a, b, n) = (q[0], q[1], q[2]);
        a + b >= one - s1
            && a + b <= one + s1
            && a + n >= one - s2
            && a + n <= one + s2
            && b + n >= one - s3
            && b + n <= one + s3
            && (b - a).abs() <= t1
            && (n - a).abs() <= t2
    };
    let value = move |q: &[T; 3]| f_convex(q[0], p) + f_convex(q[1], p) + f_convex(q[2], p);
    let (max_g, _) = grid_max(
        [T::zero(); 3],
        [T::half(); 3],
        201,
        T::two(),
        &feasible,
        &value,
    )
    .expect("three-basis polyhedron contains grid points for every valid vector");
    Ok(T::lit(1.5) - T::half() * max_g)
}
