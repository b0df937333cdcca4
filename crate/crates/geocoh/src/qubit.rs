//! Validated qubit types and closed-form 2×2 Hermitian linear algebra.
//!
//! Everything downstream (coherence, trade-off bounds, discrimination) runs
//! on the types defined here. Construction validates; once built, a value is
//! immutable and satisfies its invariants, so the numeric operations never
//! re-check.

use core::ops::{Add, Mul, Sub};

use num_complex::Complex;

use crate::diag::{self, ClampEvent};
use crate::scalar::Real;
use crate::tol;
use crate::{Error, Result};

fn c_from_f64<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::lit(re), T::lit(im))
}

fn is_finite_c<T: Real>(z: Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

fn to_f64<T: Real>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// 2×2 complex matrix, row-major.
///
/// Finiteness of the entries is the only invariant; Hermiticity, trace and
/// positivity are the business of [`QubitState`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2<T> {
    e: [[Complex<T>; 2]; 2],
}

impl<T: Real> Matrix2<T> {
    /// Builds from row-major entries, rejecting NaN and infinity.
    pub fn new(entries: [[Complex<T>; 2]; 2]) -> Result<Self> {
        for row in &entries {
            for z in row {
                if !is_finite_c(*z) {
                    return Err(Error::NonFinite);
                }
            }
        }
        Ok(Self { e: entries })
    }

    pub(crate) fn from_entries_unchecked(entries: [[Complex<T>; 2]; 2]) -> Self {
        Self { e: entries }
    }

    pub fn identity() -> Self {
        Self {
            e: [
                [c_from_f64(1.0, 0.0), c_from_f64(0.0, 0.0)],
                [c_from_f64(0.0, 0.0), c_from_f64(1.0, 0.0)],
            ],
        }
    }

    pub fn zero() -> Self {
        let z = Complex::new(T::zero(), T::zero());
        Self {
            e: [[z, z], [z, z]],
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex<T> {
        self.e[row][col]
    }

    pub fn entries(&self) -> [[Complex<T>; 2]; 2] {
        self.e
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self {
            e: [
                [self.e[0][0].conj(), self.e[1][0].conj()],
                [self.e[0][1].conj(), self.e[1][1].conj()],
            ],
        }
    }

    pub fn trace(&self) -> Complex<T> {
        self.e[0][0] + self.e[1][1]
    }

    pub fn scaled(&self, s: T) -> Self {
        let s = Complex::new(s, T::zero());
        Self {
            e: [
                [self.e[0][0] * s, self.e[0][1] * s],
                [self.e[1][0] * s, self.e[1][1] * s],
            ],
        }
    }

    /// `max_ij |self_ij - other_ij|`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut worst = T::zero();
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((self.e[i][j] - other.e[i][j]).norm());
            }
        }
        worst
    }

    /// Deviation from Hermiticity, `‖m - m†‖_max`.
    pub fn hermiticity_deviation(&self) -> T {
        self.max_abs_diff(&self.adjoint())
    }

    /// `(m + m†)/2`; used to scrub round-off before eigendecomposition of
    /// matrices that are Hermitian by construction.
    pub fn hermitized(&self) -> Self {
        let half = T::half();
        let d0 = Complex::new(self.e[0][0].re, T::zero());
        let d1 = Complex::new(self.e[1][1].re, T::zero());
        let off = (self.e[0][1] + self.e[1][0].conj()).scale(half);
        Self {
            e: [[d0, off], [off.conj(), d1]],
        }
    }
}

impl<T: Real> Add for Matrix2<T> {
    type Output = Matrix2<T>;
    fn add(self, rhs: Self) -> Self {
        Self {
            e: [
                [self.e[0][0] + rhs.e[0][0], self.e[0][1] + rhs.e[0][1]],
                [self.e[1][0] + rhs.e[1][0], self.e[1][1] + rhs.e[1][1]],
            ],
        }
    }
}

impl<T: Real> Sub for Matrix2<T> {
    type Output = Matrix2<T>;
    fn sub(self, rhs: Self) -> Self {
        Self {
            e: [
                [self.e[0][0] - rhs.e[0][0], self.e[0][1] - rhs.e[0][1]],
                [self.e[1][0] - rhs.e[1][0], self.e[1][1] - rhs.e[1][1]],
            ],
        }
    }
}

impl<T: Real> Mul for Matrix2<T> {
    type Output = Matrix2<T>;
    fn mul(self, rhs: Self) -> Self {
        let mut out = [[Complex::new(T::zero(), T::zero()); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = self.e[i][0] * rhs.e[0][j] + self.e[i][1] * rhs.e[1][j];
            }
        }
        Self { e: out }
    }
}

/// Normalized two-component complex vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PureKet<T> {
    a: [Complex<T>; 2],
}

impl<T: Real> PureKet<T> {
    /// Builds from amplitudes, requiring `||<ψ|ψ> - 1| <= NORM_TOL`.
    pub fn new(a0: Complex<T>, a1: Complex<T>) -> Result<Self> {
        if !is_finite_c(a0) || !is_finite_c(a1) {
            return Err(Error::NonFinite);
        }
        let norm_sq = a0.norm_sqr() + a1.norm_sqr();
        let deviation = (norm_sq.sqrt() - T::one()).abs();
        if deviation > T::lit(tol::NORM_TOL) {
            return Err(Error::NotNormalized {
                deviation: to_f64(deviation),
                tolerance: tol::NORM_TOL,
            });
        }
        Ok(Self { a: [a0, a1] })
    }

    /// Builds from real amplitudes.
    pub fn from_real(a0: T, a1: T) -> Result<Self> {
        Self::new(Complex::new(a0, T::zero()), Complex::new(a1, T::zero()))
    }

    /// Normalizes an arbitrary nonzero vector; rejects the zero vector and
    /// non-finite input.
    pub fn normalized(a0: Complex<T>, a1: Complex<T>) -> Result<Self> {
        if !is_finite_c(a0) || !is_finite_c(a1) {
            return Err(Error::NonFinite);
        }
        let norm = (a0.norm_sqr() + a1.norm_sqr()).sqrt();
        if norm <= T::lit(tol::PHASE_EPS) {
            return Err(Error::NotNormalized {
                deviation: 1.0,
                tolerance: tol::NORM_TOL,
            });
        }
        let inv = Complex::new(norm.recip(), T::zero());
        Ok(Self {
            a: [a0 * inv, a1 * inv],
        })
    }

    pub fn zero_ket() -> Self {
        Self {
            a: [c_from_f64(1.0, 0.0), c_from_f64(0.0, 0.0)],
        }
    }

    pub fn one_ket() -> Self {
        Self {
            a: [c_from_f64(0.0, 0.0), c_from_f64(1.0, 0.0)],
        }
    }

    pub fn amplitude(&self, i: usize) -> Complex<T> {
        self.a[i]
    }

    pub fn amplitudes(&self) -> [Complex<T>; 2] {
        self.a
    }

    /// Inner product `<self|other>`.
    pub fn inner(&self, other: &Self) -> Complex<T> {
        self.a[0].conj() * other.a[0] + self.a[1].conj() * other.a[1]
    }

    /// Rank-1 projector `|ψ><ψ|`.
    pub fn projector(&self) -> Matrix2<T> {
        let [a0, a1] = self.a;
        Matrix2::from_entries_unchecked([
            [Complex::new(a0.norm_sqr(), T::zero()), a0 * a1.conj()],
            [a1 * a0.conj(), Complex::new(a1.norm_sqr(), T::zero())],
        ])
    }

    /// The orthogonal ket `(-conj(a1), conj(a0))`, phase-fixed.
    pub fn orthogonal(&self) -> Self {
        Self {
            a: [-self.a[1].conj(), self.a[0].conj()],
        }
        .phase_canonical()
    }

    /// Rotates the global phase so the first amplitude of non-negligible
    /// modulus becomes real positive. Deterministic outputs for eigenvectors
    /// and samples hang on this convention.
    pub fn phase_canonical(&self) -> Self {
        let eps = T::lit(tol::PHASE_EPS);
        let [a0, a1] = self.a;
        let pivot = if a0.norm() > eps { a0 } else { a1 };
        let r = pivot.norm();
        if r <= T::zero() {
            return *self;
        }
        let phase = pivot.conj() / Complex::new(r, T::zero());
        Self {
            a: [a0 * phase, a1 * phase],
        }
    }
}

/// Squared overlap `|<a|b>|²`, clamped to `[0, 1]`.
pub fn overlap_sq<T: Real>(a: &PureKet<T>, b: &PureKet<T>) -> T {
    let raw = a.inner(b).norm_sqr();
    if raw < T::zero() || raw > T::one() {
        diag::record(ClampEvent::Overlap);
    }
    raw.clamped(T::zero(), T::one())
}

/// Ordered pair of orthonormal kets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthonormalBasis<T> {
    k: [PureKet<T>; 2],
}

impl<T: Real> OrthonormalBasis<T> {
    /// Requires `|<k1|k2>| <= ORTHO_TOL`; normalization is already enforced
    /// by [`PureKet`].
    pub fn new(k1: PureKet<T>, k2: PureKet<T>) -> Result<Self> {
        let cross = k1.inner(&k2).norm();
        if cross > T::lit(tol::ORTHO_TOL) {
            return Err(Error::NotOrthogonal {
                deviation: to_f64(cross),
                tolerance: tol::ORTHO_TOL,
            });
        }
        Ok(Self { k: [k1, k2] })
    }

    /// `{|0>, |1>}`.
    pub fn computational() -> Self {
        Self {
            k: [PureKet::zero_ket(), PureKet::one_ket()],
        }
    }

    /// `{|+>, |->}` with `|±> = (|0> ± |1>)/√2`.
    pub fn hadamard() -> Self {
        let s = T::lit(core::f64::consts::FRAC_1_SQRT_2);
        Self {
            k: [
                PureKet {
                    a: [Complex::new(s, T::zero()), Complex::new(s, T::zero())],
                },
                PureKet {
                    a: [Complex::new(s, T::zero()), Complex::new(-s, T::zero())],
                },
            ],
        }
    }

    /// `{(|0> + i|1>)/√2, (|0> - i|1>)/√2}`.
    pub fn circular() -> Self {
        let s = T::lit(core::f64::consts::FRAC_1_SQRT_2);
        Self {
            k: [
                PureKet {
                    a: [Complex::new(s, T::zero()), Complex::new(T::zero(), s)],
                },
                PureKet {
                    a: [Complex::new(s, T::zero()), Complex::new(T::zero(), -s)],
                },
            ],
        }
    }

    pub fn ket(&self, i: usize) -> &PureKet<T> {
        &self.k[i]
    }

    pub fn kets(&self) -> &[PureKet<T>; 2] {
        &self.k
    }

    /// Same basis with the two kets exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            k: [self.k[1], self.k[0]],
        }
    }
}

/// Validated 2×2 density matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QubitState<T> {
    m: Matrix2<T>,
}

impl<T: Real> QubitState<T> {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(m: Matrix2<T>) -> Result<Self> {
        let herm = m.hermiticity_deviation();
        if herm > T::lit(tol::HERM_TOL) {
            return Err(Error::NonHermitian {
                deviation: to_f64(herm),
                tolerance: tol::HERM_TOL,
            });
        }
        let tr = m.trace();
        let tr_dev = (tr - Complex::new(T::one(), T::zero())).norm();
        if tr_dev > T::lit(tol::NORM_TOL) {
            return Err(Error::NonUnitTrace {
                deviation: to_f64(tr_dev),
                tolerance: tol::NORM_TOL,
            });
        }
        let m = m.hermitized();
        let (_, lo) = hermitian_eigenvalues(&m);
        if lo < -T::lit(tol::PSD_TOL) {
            return Err(Error::NotPositiveSemidefinite {
                min_eigenvalue: to_f64(lo),
            });
        }
        Ok(Self { m })
    }

    /// `ρ = (I + r·σ)/2` from a Bloch vector with `|r| <= 1`.
    pub fn from_bloch(x: T, y: T, z: T) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::NonFinite);
        }
        let r = (x * x + y * y + z * z).sqrt();
        if r > T::one() + T::lit(tol::NORM_TOL) {
            return Err(Error::Domain {
                name: "bloch radius",
                value: to_f64(r),
                domain: "[0, 1]",
            });
        }
        let half = T::half();
        let m = Matrix2::from_entries_unchecked([
            [
                Complex::new(half * (T::one() + z), T::zero()),
                Complex::new(half * x, -half * y),
            ],
            [
                Complex::new(half * x, half * y),
                Complex::new(half * (T::one() - z), T::zero()),
            ],
        ]);
        Ok(Self { m })
    }

    /// Projector onto a pure state.
    pub fn from_pure(psi: &PureKet<T>) -> Self {
        Self {
            m: psi.projector().hermitized(),
        }
    }

    pub fn maximally_mixed() -> Self {
        Self {
            m: Matrix2::identity().scaled(T::half()),
        }
    }

    /// The maximally coherent mixed state family
    /// `ρ_m(q) = (1-q)/2 · I + q |+><+|`, i.e. `[[1/2, q/2], [q/2, 1/2]]`
    /// in the computational basis, for `q ∈ [0, 1]`.
    pub fn maximally_coherent_mixed(q: T) -> Result<Self> {
        if !q.is_finite() || q < T::zero() || q > T::one() {
            return Err(Error::Domain {
                name: "q",
                value: to_f64(q),
                domain: "[0, 1]",
            });
        }
        let half = T::half();
        let off = Complex::new(half * q, T::zero());
        let m = Matrix2::from_entries_unchecked([
            [Complex::new(half, T::zero()), off],
            [off, Complex::new(half, T::zero())],
        ]);
        Ok(Self { m })
    }

    pub fn matrix(&self) -> &Matrix2<T> {
        &self.m
    }

    /// Bloch coordinates `(tr(ρσx), tr(ρσy), tr(ρσz))`.
    pub fn bloch(&self) -> [T; 3] {
        let e = self.m.entries();
        let x = (e[0][1] + e[1][0]).re;
        let y = (e[1][0] - e[0][1]).im;
        let z = e[0][0].re - e[1][1].re;
        [x, y, z]
    }

    /// Diagonal element `<k|ρ|k>` (real by Hermiticity).
    pub fn expectation(&self, k: &PureKet<T>) -> T {
        let e = self.m.entries();
        let [a0, a1] = k.amplitudes();
        let diag = a0.norm_sqr() * e[0][0].re + a1.norm_sqr() * e[1][1].re;
        let cross = (a0.conj() * e[0][1] * a1).re;
        diag + cross + cross
    }

    /// Matrix element `<bra|ρ|ket>`.
    pub fn matrix_element(&self, bra: &PureKet<T>, ket: &PureKet<T>) -> Complex<T> {
        let e = self.m.entries();
        let [b0, b1] = bra.amplitudes();
        let [k0, k1] = ket.amplitudes();
        b0.conj() * (e[0][0] * k0 + e[0][1] * k1) + b1.conj() * (e[1][0] * k0 + e[1][1] * k1)
    }

    /// Purity `tr(ρ²)`, clamped to `[1/2, 1]`.
    pub fn purity(&self) -> T {
        let e = self.m.entries();
        let mut p = T::zero();
        for row in &e {
            for z in row {
                p = p + z.norm_sqr();
            }
        }
        if p < T::half() || p > T::one() {
            diag::record(ClampEvent::Purity);
        }
        p.clamped(T::half(), T::one())
    }

    /// Spectral decomposition; see [`eig_hermitian`].
    pub fn eig(&self) -> Eigensystem2<T> {
        // Hermitian by construction, so the tolerance check cannot fire.
        eig_hermitian(&self.m).expect("validated state is Hermitian")
    }
}

/// Eigenvalues (descending) and matching orthonormal eigenvectors of a
/// Hermitian 2×2 matrix.
#[derive(Debug, Clone)]
pub struct Eigensystem2<T> {
    values: [T; 2],
    vectors: [PureKet<T>; 2],
}

impl<T: Real> Eigensystem2<T> {
    pub fn values(&self) -> [T; 2] {
        self.values
    }

    pub fn vector(&self, i: usize) -> &PureKet<T> {
        &self.vectors[i]
    }

    /// Eigenbasis as an [`OrthonormalBasis`], largest eigenvalue first.
    pub fn basis(&self) -> OrthonormalBasis<T> {
        OrthonormalBasis::new(self.vectors[0], self.vectors[1])
            .expect("eigenvectors are orthonormal by construction")
    }

    /// `Σ λ_i |v_i><v_i|`.
    pub fn reconstruct(&self) -> Matrix2<T> {
        self.vectors[0].projector().scaled(self.values[0])
            + self.vectors[1].projector().scaled(self.values[1])
    }
}

/// Eigenvalues only (descending); cheaper than [`eig_hermitian`] when the
/// vectors are not needed. Assumes `m` is exactly Hermitian.
pub(crate) fn hermitian_eigenvalues<T: Real>(m: &Matrix2<T>) -> (T, T) {
    let e = m.entries();
    let a = e[0][0].re;
    let d = e[1][1].re;
    let half = T::half();
    let mean = half * (a + d);
    let gap = half * (a - d);
    let disc = (gap * gap + e[0][1].norm_sqr()).sqrt();
    (mean + disc, mean - disc)
}

/// Closed-form eigendecomposition of a Hermitian 2×2 matrix.
///
/// Eigenvalues come out descending; eigenvectors are exactly orthogonal (the
/// second is the complement of the first) and phase-fixed so the first
/// non-negligible amplitude is real positive. For a degenerate spectrum the
/// computational basis is returned, which keeps outputs deterministic.
pub fn eig_hermitian<T: Real>(m: &Matrix2<T>) -> Result<Eigensystem2<T>> {
    let herm = m.hermiticity_deviation();
    if herm > T::lit(tol::HERM_TOL) {
        return Err(Error::NonHermitian {
            deviation: to_f64(herm),
            tolerance: tol::HERM_TOL,
        });
    }
    let m = m.hermitized();
    let e = m.entries();
    let a = e[0][0].re;
    let d = e[1][1].re;
    let b = e[0][1];
    let (hi, lo) = hermitian_eigenvalues(&m);

    let scale = T::one().max(a.abs()).max(d.abs());
    let degenerate = (hi - lo) <= T::lit(tol::CLAMP_EPS) * scale;

    let v1 = if degenerate {
        PureKet::zero_ket()
    } else {
        // (b, hi - a) and (hi - d, conj b) both solve (m - hi)v = 0; pick the
        // larger one for stability.
        let va = (b.norm_sqr() + (hi - a) * (hi - a)).sqrt();
        let vb = ((hi - d) * (hi - d) + b.norm_sqr()).sqrt();
        let raw = if va >= vb {
            PureKet::normalized(b, Complex::new(hi - a, T::zero()))
        } else {
            PureKet::normalized(Complex::new(hi - d, T::zero()), b.conj())
        };
        raw.expect("nondegenerate eigenvector has positive norm")
            .phase_canonical()
    };
    let v2 = if degenerate {
        PureKet::one_ket()
    } else {
        v1.orthogonal()
    };

    Ok(Eigensystem2 {
        values: [hi, lo],
        vectors: [v1, v2],
    })
}

/// Hermitian PSD square root: `S` with `S·S = m`.
///
/// Negative eigenvalues within `PSD_TOL` clamp to zero before the root;
/// anything lower is rejected.
pub fn sqrt_psd<T: Real>(m: &Matrix2<T>) -> Result<Matrix2<T>> {
    let sys = eig_hermitian(m)?;
    let [hi, lo] = sys.values();
    if lo < -T::lit(tol::PSD_TOL) {
        return Err(Error::NotPositiveSemidefinite {
            min_eigenvalue: to_f64(lo),
        });
    }
    let clamp = |x: T| {
        if x < T::zero() {
            diag::record(ClampEvent::Eigenvalue);
            T::zero()
        } else {
            x
        }
    };
    let s = sys.vector(0).projector().scaled(clamp(hi).sqrt())
        + sys.vector(1).projector().scaled(clamp(lo).sqrt());
    Ok(s.hermitized())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    type M = Matrix2<f64>;
    type C = Complex<f64>;

    fn cx(re: f64, im: f64) -> C {
        Complex::new(re, im)
    }

    fn diag(a: f64, d: f64) -> M {
        Matrix2::new([[cx(a, 0.0), cx(0.0, 0.0)], [cx(0.0, 0.0), cx(d, 0.0)]]).unwrap()
    }

    fn mcm(q: f64) -> QubitState<f64> {
        QubitState::maximally_coherent_mixed(q).unwrap()
    }

    #[test]
    fn eig_identity() {
        let sys = eig_hermitian(&M::identity()).unwrap();
        assert_eq!(sys.values(), [1.0, 1.0]);
        // Degenerate spectrum returns the computational basis.
        assert_eq!(sys.vector(0).amplitudes(), [cx(1.0, 0.0), cx(0.0, 0.0)]);
        assert_eq!(sys.vector(1).amplitudes(), [cx(0.0, 0.0), cx(1.0, 0.0)]);
    }

    #[test]
    fn eig_diagonal() {
        let sys = eig_hermitian(&diag(0.8, 0.2)).unwrap();
        assert_abs_diff_eq!(sys.values()[0], 0.8, epsilon = 1e-15);
        assert_abs_diff_eq!(sys.values()[1], 0.2, epsilon = 1e-15);
        assert_abs_diff_eq!(sys.vector(0).amplitude(0).re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(sys.vector(1).amplitude(1).re, 1.0, epsilon = 1e-15);

        // Order flips when the diagonal does.
        let sys = eig_hermitian(&diag(0.2, 0.8)).unwrap();
        assert_abs_diff_eq!(sys.values()[0], 0.8, epsilon = 1e-15);
        assert_abs_diff_eq!(sys.values()[1], 0.2, epsilon = 1e-15);
        assert_abs_diff_eq!(sys.vector(0).amplitude(1).re, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn eig_mcm() {
        // Eigenvalues (1±q)/2 and eigenvectors (|0> ± |1>)/√2 at q = 0.6,
        // cross-checked against the explicit matrix by reconstruction below.
        let rho = mcm(0.6);
        let sys = rho.eig();
        assert_abs_diff_eq!(sys.values()[0], 0.8, epsilon = 1e-15);
        assert_abs_diff_eq!(sys.values()[1], 0.2, epsilon = 1e-15);
        let s = core::f64::consts::FRAC_1_SQRT_2;
        for (i, sign) in [(0usize, 1.0), (1usize, -1.0)] {
            let v = sys.vector(i).amplitudes();
            assert_abs_diff_eq!(v[0].re, s, epsilon = 1e-12);
            assert_abs_diff_eq!(v[1].re, sign * s, epsilon = 1e-12);
            assert_abs_diff_eq!(v[0].im, 0.0, epsilon = 1e-15);
        }
        let recon = sys.reconstruct();
        assert!(recon.max_abs_diff(rho.matrix()) < tol::RECON_TOL);
    }

    #[test]
    fn eig_rejects_non_hermitian() {
        let m = Matrix2::new([[cx(1.0, 0.0), cx(0.5, 0.0)], [cx(0.0, 0.0), cx(0.0, 0.0)]]).unwrap();
        assert!(matches!(eig_hermitian(&m), Err(Error::NonHermitian { .. })));
    }

    #[test]
    fn sqrt_identity_and_diagonal() {
        let s = sqrt_psd(&M::identity()).unwrap();
        assert!(s.max_abs_diff(&M::identity()) < 1e-15);

        let s = sqrt_psd(&diag(0.64, 0.36)).unwrap();
        assert_abs_diff_eq!(s.entry(0, 0).re, 0.8, epsilon = 1e-14);
        assert_abs_diff_eq!(s.entry(1, 1).re, 0.6, epsilon = 1e-14);
    }

    #[test]
    fn sqrt_clamps_eigenvalues_inside_the_psd_window() {
        crate::diag::reset();
        // Min eigenvalue -3e-11 is admissible (PSD_TOL = 1e-10); the square
        // root clamps it to zero and records the clamp.
        let eps = 3e-11;
        let m = Matrix2::new([
            [cx(0.5, 0.0), cx(0.5 + eps, 0.0)],
            [cx(0.5 + eps, 0.0), cx(0.5, 0.0)],
        ])
        .unwrap();
        let s = sqrt_psd(&m).unwrap();
        assert!((s * s).max_abs_diff(&m) < 1e-9);
        assert!(crate::diag::count(crate::diag::ClampEvent::Eigenvalue) >= 1);
    }

    #[test]
    fn sqrt_rejects_indefinite() {
        let m =
            Matrix2::new([[cx(0.5, 0.0), cx(0.0, 0.0)], [cx(0.0, 0.0), cx(-0.5, 0.0)]]).unwrap();
        assert!(matches!(
            sqrt_psd(&m),
            Err(Error::NotPositiveSemidefinite { .. })
        ));
    }

    #[test]
    fn purity_clamp_is_counted() {
        crate::diag::reset();
        // A Bloch radius a hair over 1 passes validation (within NORM_TOL)
        // and pushes tr ρ² just past 1; the clamp records itself.
        let r = 1.0 + 5e-10;
        let rho = QubitState::from_bloch(r, 0.0, 0.0).unwrap();
        assert_eq!(rho.purity(), 1.0);
        assert!(crate::diag::count(crate::diag::ClampEvent::Purity) >= 1);
    }

    #[test]
    fn purity_examples() {
        assert_abs_diff_eq!(
            QubitState::<f64>::maximally_mixed().purity(),
            0.5,
            epsilon = 1e-15
        );
        let plus = PureKet::from_real(
            core::f64::consts::FRAC_1_SQRT_2,
            core::f64::consts::FRAC_1_SQRT_2,
        )
        .unwrap();
        assert_abs_diff_eq!(QubitState::from_pure(&plus).purity(), 1.0, epsilon = 1e-15);
        // Eigenvalues (1±q)/2 give P = (1+q²)/2.
        assert_abs_diff_eq!(mcm(0.6).purity(), 0.68, epsilon = 1e-15);
    }

    #[test]
    fn overlap_examples() {
        let plus = PureKet::from_real(
            core::f64::consts::FRAC_1_SQRT_2,
            core::f64::consts::FRAC_1_SQRT_2,
        )
        .unwrap();
        assert_eq!(overlap_sq(&plus, &plus), 1.0);
        let zero = PureKet::<f64>::zero_ket();
        let one = PureKet::<f64>::one_ket();
        assert_eq!(overlap_sq(&zero, &one), 0.0);

        let s5 = 5.0f64.sqrt();
        let tilted = PureKet::from_real(1.0 / s5, 2.0 / s5).unwrap();
        assert_abs_diff_eq!(overlap_sq(&plus, &tilted), 0.9, epsilon = 1e-14);
    }

    #[test]
    fn overlap_symmetry_and_phase_invariance() {
        let a = PureKet::new(cx(0.6, 0.0), cx(0.0, 0.8)).unwrap();
        let b = PureKet::new(cx(0.28, 0.0), cx(0.96, 0.0)).unwrap();
        assert_eq!(overlap_sq(&a, &b), overlap_sq(&b, &a));

        let theta = 0.7f64;
        let phase = cx(theta.cos(), theta.sin());
        let a_rot = PureKet::new(a.amplitude(0) * phase, a.amplitude(1) * phase).unwrap();
        assert_abs_diff_eq!(overlap_sq(&a_rot, &b), overlap_sq(&a, &b), epsilon = 1e-15);
    }

    #[test]
    fn state_validation_errors() {
        let not_herm =
            Matrix2::new([[cx(0.5, 0.0), cx(0.4, 0.1)], [cx(0.4, 0.3), cx(0.5, 0.0)]]).unwrap();
        assert!(matches!(
            QubitState::new(not_herm),
            Err(Error::NonHermitian { .. })
        ));

        let bad_trace = diag(0.8, 0.3);
        assert!(matches!(
            QubitState::new(bad_trace),
            Err(Error::NonUnitTrace { .. })
        ));

        let indefinite = diag(1.2, -0.2);
        assert!(matches!(
            QubitState::new(indefinite),
            Err(Error::NotPositiveSemidefinite { .. })
        ));

        assert!(matches!(
            QubitState::from_bloch(0.9, 0.9, 0.9),
            Err(Error::Domain { .. })
        ));

        assert!(matches!(
            PureKet::from_real(1.0, 1.0),
            Err(Error::NotNormalized { .. })
        ));

        let plus = PureKet::from_real(
            core::f64::consts::FRAC_1_SQRT_2,
            core::f64::consts::FRAC_1_SQRT_2,
        )
        .unwrap();
        assert!(matches!(
            OrthonormalBasis::new(PureKet::zero_ket(), plus),
            Err(Error::NotOrthogonal { .. })
        ));

        assert!(matches!(
            PureKet::new(cx(f64::NAN, 0.0), cx(0.0, 0.0)),
            Err(Error::NonFinite)
        ));
    }

    #[test]
    fn bloch_round_trip() {
        let rho = QubitState::from_bloch(0.3, -0.4, 0.5).unwrap();
        let [x, y, z] = rho.bloch();
        assert_abs_diff_eq!(x, 0.3, epsilon = 1e-15);
        assert_abs_diff_eq!(y, -0.4, epsilon = 1e-15);
        assert_abs_diff_eq!(z, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn expectation_matches_matrix_form() {
        let rho = mcm(0.37);
        let basis = OrthonormalBasis::circular();
        for k in basis.kets() {
            let direct = {
                let p = k.projector();
                (*rho.matrix() * p).trace().re
            };
            assert_abs_diff_eq!(rho.expectation(k), direct, epsilon = 1e-15);
        }
    }

    #[test]
    fn phase_canonical_pivots() {
        let k = PureKet::new(cx(0.0, 0.6), cx(0.8, 0.0))
            .unwrap()
            .phase_canonical();
        assert_abs_diff_eq!(k.amplitude(0).re, 0.6, epsilon = 1e-15);
        assert_abs_diff_eq!(k.amplitude(0).im, 0.0, epsilon = 1e-15);

        let k = PureKet::new(cx(0.0, 0.0), cx(0.0, -1.0))
            .unwrap()
            .phase_canonical();
        assert_abs_diff_eq!(k.amplitude(1).re, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn f32_smoke() {
        let rho = QubitState::<f32>::from_bloch(0.6, 0.0, 0.0).unwrap();
        let sys = rho.eig();
        assert!((sys.values()[0] - 0.8).abs() < 1e-6);
        let s = sqrt_psd(rho.matrix()).unwrap();
        assert!((s * s).max_abs_diff(rho.matrix()) < 1e-6);
    }
}
