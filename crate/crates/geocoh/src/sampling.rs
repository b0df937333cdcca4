//! Deterministic, seeded generators for the property campaigns.
//!
//! The generator is xoshiro256++ seeded through SplitMix64
//! (`Xoshiro256PlusPlus::seed_from_u64`), both with published reference
//! outputs, so alternate implementations can reproduce every stream exactly.
//! Raw `u64` draws map to doubles as `(x >> 11) · 2⁻⁵³`, giving uniforms on
//! `[0, 1)`; Gaussians come from the Marsaglia polar transform of those
//! uniforms (no trigonometric tail). All randomness is generated in `f64`
//! and converted to the target scalar afterwards, so the `f64` streams are
//! the reference ones.
//!
//! Campaign shards never share a stream: shard `k` takes the base seed and
//! applies the generator's `jump()` (a documented 2¹²⁸-step polynomial
//! jump) `k` times, which guarantees non-overlap.

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::qubit::{OrthonormalBasis, PureKet, QubitState};
use crate::scalar::Real;
use crate::tol;
use crate::{Complex, Error, PureEnsemble, Result};

/// What a campaign draws.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SampleFamily<T> {
    /// Projector of a Haar-uniform pure ket.
    HaarPure,
    /// Bloch vector uniform in the unit ball.
    UniformBlochBall,
    /// Bloch radius fixed at `√(2P-1)`, direction uniform.
    FixedPurity(T),
    /// Haar-uniform orthonormal basis.
    HaarBasis,
    /// Two Haar kets with a uniform weight split.
    RandomEnsemble,
}

/// Declarative campaign configuration (seed, size, family).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleConfig<T> {
    pub seed: u64,
    pub count: u64,
    pub family: SampleFamily<T>,
}

impl<T: Real> SampleConfig<T> {
    pub fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::Domain {
                name: "count",
                value: 0.0,
                domain: "[1, ∞)",
            });
        }
        if let SampleFamily::FixedPurity(p) = self.family {
            if !p.is_finite() || p < T::half() || p > T::one() {
                return Err(Error::Domain {
                    name: "fixed purity",
                    value: p.to_f64().unwrap_or(f64::NAN),
                    domain: "[1/2, 1]",
                });
            }
        }
        Ok(())
    }
}

/// Seeded stream of kets, states, bases and ensembles.
#[derive(Debug, Clone)]
pub struct Sampler<T> {
    rng: Xoshiro256PlusPlus,
    spare_gaussian: Option<f64>,
    _scalar: core::marker::PhantomData<T>,
}

impl<T: Real> Sampler<T> {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: Xoshiro256PlusPlus::seed_from_u64(seed),
            spare_gaussian: None,
            _scalar: core::marker::PhantomData,
        }
    }

    /// Stream for shard `k` of a campaign: the base stream jumped `k` times.
    pub fn shard(seed: u64, k: u64) -> Self {
        let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
        for _ in 0..k {
            rng.jump();
        }
        Self {
            rng,
            spare_gaussian: None,
            _scalar: core::marker::PhantomData,
        }
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    pub fn uniform(&mut self) -> f64 {
        const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
        (self.rng.next_u64() >> 11) as f64 * SCALE
    }

    /// Standard Gaussian via the Marsaglia polar method.
    pub fn gaussian(&mut self) -> f64 {
        if let Some(g) = self.spare_gaussian.take() {
            return g;
        }
        loop {
            let u = 2.0 * self.uniform() - 1.0;
            let v = 2.0 * self.uniform() - 1.0;
            let s = u * u + v * v;
            if s > 0.0 && s < 1.0 {
                let factor = (-2.0 * s.ln() / s).sqrt();
                self.spare_gaussian = Some(v * factor);
                return u * factor;
            }
        }
    }

    /// Haar-uniform pure ket: two complex Gaussian amplitudes, normalized and
    /// phase-fixed. Consumes four Gaussians in the order
    /// `(re a0, im a0, re a1, im a1)`.
    pub fn pure_ket(&mut self) -> PureKet<T> {
        loop {
            let g = [
                self.gaussian(),
                self.gaussian(),
                self.gaussian(),
                self.gaussian(),
            ];
            let norm = (g[0] * g[0] + g[1] * g[1] + g[2] * g[2] + g[3] * g[3]).sqrt();
            if norm < 1e-6 {
                continue;
            }
            let a0 = Complex::new(T::lit(g[0] / norm), T::lit(g[1] / norm));
            let a1 = Complex::new(T::lit(g[2] / norm), T::lit(g[3] / norm));
            let ket = PureKet::normalized(a0, a1).expect("Gaussian ket has positive norm");
            return ket.phase_canonical();
        }
    }

    /// Uniform direction on the sphere from three Gaussians.
    fn direction(&mut self) -> [f64; 3] {
        loop {
            let g = [self.gaussian(), self.gaussian(), self.gaussian()];
            let norm = (g[0] * g[0] + g[1] * g[1] + g[2] * g[2]).sqrt();
            if norm > 1e-6 {
                return [g[0] / norm, g[1] / norm, g[2] / norm];
            }
        }
    }

    /// Draws a state from one of the state families. `HaarBasis` and
    /// `RandomEnsemble` are not state families; configs route those to
    /// [`Sampler::basis`] / [`Sampler::ensemble`].
    pub fn state(&mut self, family: SampleFamily<T>) -> QubitState<T> {
        let bloch = |r: f64, d: [f64; 3]| {
            QubitState::from_bloch(T::lit(r * d[0]), T::lit(r * d[1]), T::lit(r * d[2]))
                .expect("sampled Bloch vector is inside the ball")
        };
        match family {
            SampleFamily::HaarPure => QubitState::from_pure(&self.pure_ket()),
            SampleFamily::UniformBlochBall => {
                let d = self.direction();
                let r = self.uniform().cbrt();
                bloch(r, d)
            }
            SampleFamily::FixedPurity(p) => {
                let d = self.direction();
                let p = p.to_f64().unwrap_or(0.5).clamp(0.5, 1.0);
                let r = (2.0 * p - 1.0).max(0.0).sqrt();
                bloch(r, d)
            }
            SampleFamily::HaarBasis | SampleFamily::RandomEnsemble => {
                QubitState::from_pure(&self.pure_ket())
            }
        }
    }

    /// Haar-uniform orthonormal basis: a Gaussian ket, a second Gaussian ket
    /// Gram-Schmidt-orthogonalized against it, both phase-fixed.
    pub fn basis(&mut self) -> OrthonormalBasis<T> {
        loop {
            let k1 = self.pure_ket();
            let g = [
                self.gaussian(),
                self.gaussian(),
                self.gaussian(),
                self.gaussian(),
            ];
            let b0 = Complex::new(T::lit(g[0]), T::lit(g[1]));
            let b1 = Complex::new(T::lit(g[2]), T::lit(g[3]));
            let proj = k1.amplitude(0).conj() * b0 + k1.amplitude(1).conj() * b1;
            let r0 = b0 - k1.amplitude(0) * proj;
            let r1 = b1 - k1.amplitude(1) * proj;
            let Ok(k2) = PureKet::normalized(r0, r1) else {
                continue;
            };
            let k2 = k2.phase_canonical();
            if let Ok(basis) = OrthonormalBasis::new(k1, k2) {
                return basis;
            }
        }
    }

    /// Two Haar kets with first weight uniform on
    /// `[10·WEIGHT_TOL, 1 - 10·WEIGHT_TOL]`.
    pub fn ensemble(&mut self) -> PureEnsemble<T> {
        let margin = 10.0 * tol::WEIGHT_TOL;
        let w1 = margin + (1.0 - 2.0 * margin) * self.uniform();
        let psi1 = self.pure_ket();
        let psi2 = self.pure_ket();
        PureEnsemble::new([(T::lit(w1), psi1), (T::lit(1.0 - w1), psi2)])
            .expect("weights sum to 1 by construction")
    }
}
