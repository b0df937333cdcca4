//! Byte-exact golden values for the seeded sampler.
//!
//! The stream is pinned by the generator spec (xoshiro256++ seeded through
//! SplitMix64, uniforms `(x >> 11)·2⁻⁵³`, Marsaglia polar Gaussians), so these
//! values must reproduce on any platform. If one of these tests ever fails,
//! the generator contract changed and every recorded campaign is suspect.

use geocoh::{SampleFamily, Sampler};

fn bits(x: f64) -> u64 {
    x.to_bits()
}

#[test]
fn first_ket_at_seed_42() {
    let mut s = Sampler::<f64>::new(42);
    let k = s.pure_ket();
    assert_eq!(bits(k.amplitude(0).re), 0x3fe4223073c59272);
    assert_eq!(bits(k.amplitude(0).im), 0x0000000000000000);
    assert_eq!(bits(k.amplitude(1).re), 0x3fe1116190b433b4);
    assert_eq!(bits(k.amplitude(1).im), 0x3fe217993e7f5991);
}

#[test]
fn first_basis_at_seed_42() {
    let mut s = Sampler::<f64>::new(42);
    let b = s.basis();
    // First ket of the basis is the first Haar ket of the stream.
    assert_eq!(bits(b.ket(0).amplitude(0).re), 0x3fe4223073c59272);
    assert_eq!(bits(b.ket(0).amplitude(1).re), 0x3fe1116190b433b4);
    assert_eq!(bits(b.ket(0).amplitude(1).im), 0x3fe217993e7f5991);
    // Second ket: Gram-Schmidt complement of the next Gaussian draw.
    assert_eq!(bits(b.ket(1).amplitude(0).re), 0x3fe8df5a9ff7a3d3);
    assert_eq!(bits(b.ket(1).amplitude(1).re), 0xbfdba1c698fe5223);
    assert_eq!(bits(b.ket(1).amplitude(1).im), 0xbfdd4a4a6f30fb27);
}

#[test]
fn first_ensemble_at_seed_42() {
    let mut s = Sampler::<f64>::new(42);
    let e = s.ensemble();
    assert_eq!(bits(e.weights()[0]), 0x3fea0ec9a992298a);
    let (_, psi0) = e.element(0);
    let (_, psi1) = e.element(1);
    assert_eq!(bits(psi0.amplitude(0).re), 0x3fe80ec5a2b6a10d);
    assert_eq!(bits(psi0.amplitude(1).re), 0xbfdc6d14718af59f);
    assert_eq!(bits(psi0.amplitude(1).im), 0xbfdf30d71ace863b);
    assert_eq!(bits(psi1.amplitude(0).re), 0x3fec46463b1ebae0);
    assert_eq!(bits(psi1.amplitude(1).re), 0x3fb8d6f01c3a7eeb);
    assert_eq!(bits(psi1.amplitude(1).im), 0x3fdd51d8d27c550f);
}

#[test]
fn first_ball_state_at_seed_42() {
    let mut s = Sampler::<f64>::new(42);
    let rho = s.state(SampleFamily::UniformBlochBall);
    let [x, y, z] = rho.bloch();
    assert_eq!(bits(x), 0x3fd1e98df1653463);
    assert_eq!(bits(y), 0xbfc4a69ecf7603c0);
    assert_eq!(bits(z), 0x3fd876a19a30b597);
}
