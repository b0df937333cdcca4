//! Acceptance suite: one test per release criterion, each printing a PASS
//! line with the measured worst case. Every tolerance is pinned in code.

use std::time::Instant;

use geocoh::coherence::{geometric_coherence, geometric_coherence_oracle};
use geocoh::discrimination::{error_probability_ceiling, min_error_probability};
use geocoh::qubit::{Matrix2, QubitState};
use geocoh::tradeoffs::{
    coherence_ceiling, incompatibility_vector, three_basis_bound_oracle, three_basis_lower_bound,
    two_basis_bound_oracle, two_basis_lower_bound, IncompatibilityVector,
};
use geocoh::{Basis64, Complex64, Ensemble64, Ket64, QubitState64, SampleFamily, Sampler};
use geocoh_cli::specs::ex2y_basis;
use geocoh_cli::verify::{run as run_campaign, CampaignKind};

fn mcm(q: f64) -> QubitState64 {
    QubitState::maximally_coherent_mixed(q).unwrap()
}

fn q_grid() -> Vec<f64> {
    (0..=10).map(|i| i as f64 / 10.0).collect()
}

/// Eq-style closed forms of the worked mcm family, frozen independently of
/// the library path they certify.
mod reference {
    /// Exact two-basis sum for X = hadamard (eigenbasis), Y = ex2y.
    pub fn exact_sum_2a(q: f64) -> f64 {
        0.5 * (1.0 - (1.0 - 9.0 * q * q / 25.0).sqrt())
    }

    /// Two-basis lower bound at incompatibility 9/10.
    pub fn lower_2a(q: f64) -> f64 {
        0.5 * (1.0 - (1.0 + 6.0 * (3.0 - 10.0f64.sqrt()) * q * q / 5.0).sqrt())
    }

    /// Exact two-basis sum for X = circular, Y = ex2y.
    pub fn exact_sum_2b(q: f64) -> f64 {
        0.5 * (1.0 - (1.0 - q * q).sqrt()) + exact_sum_2a(q)
    }

    /// Two-basis lower bound at incompatibility 1/2.
    pub fn lower_2b(q: f64) -> f64 {
        0.5 * (1.0 - (1.0 + 2.0 * (1.0 - 2.0f64.sqrt()) * q * q).sqrt())
    }

    /// Purity upper bound on the sum (twice the single-basis ceiling).
    pub fn upper_2(q: f64) -> f64 {
        1.0 - (1.0 - q * q).sqrt()
    }

    /// Exact three-basis sum for X = ex2y, Y = hadamard, Z = computational.
    pub fn exact_sum_3(q: f64) -> f64 {
        0.5 * (1.0 - (1.0 - 9.0 * q * q / 25.0).sqrt()) + 0.5 * (1.0 - (1.0 - q * q).sqrt())
    }

    /// Three-basis lower bound at the vector (9/10, 4/5, 1/2).
    pub fn lower_3(q: f64) -> f64 {
        let t1 = (1.0 + 6.0 * (3.0 - 10.0f64.sqrt()) * q * q / 5.0).sqrt();
        let coeff = 14.0 - 6.0 * 5.0f64.sqrt() - 3.0 * 10.0f64.sqrt() + 5.0 * 2.0f64.sqrt();
        let t2 = (1.0 + 2.0 * coeff * q * q / 5.0).sqrt();
        1.0 - 0.5 * (t1 + t2)
    }
}

/// A state with both diagonals exactly 1/2 in `basis`, off-diagonal
/// magnitude `m < 1/2` at phase `phi`: the ceiling-saturating manifold.
fn equal_diagonal_state(basis: &Basis64, m: f64, phi: f64) -> QubitState64 {
    skewed_diagonal_state(basis, 0.5, m, phi)
}

/// diag (d, 1-d) in `basis` with off-diagonal m·e^{iφ} (PSD for
/// m² <= d(1-d)).
fn skewed_diagonal_state(basis: &Basis64, d: f64, m: f64, phi: f64) -> QubitState64 {
    let gamma = Complex64::new(m * phi.cos(), m * phi.sin());
    let [a0, a1] = basis.ket(0).amplitudes();
    let [b0, b1] = basis.ket(1).amplitudes();
    // d·|x1><x1| + (1-d)·|x2><x2| + γ|x1><x2| + γ*|x2><x1|, assembled
    // entrywise.
    let mut entries = [[Complex64::new(0.0, 0.0); 2]; 2];
    let ket1 = [a0, a1];
    let ket2 = [b0, b1];
    for i in 0..2 {
        for j in 0..2 {
            let p11 = ket1[i] * ket1[j].conj();
            let p22 = ket2[i] * ket2[j].conj();
            let p12 = ket1[i] * ket2[j].conj();
            let p21 = ket2[i] * ket1[j].conj();
            entries[i][j] = p11 * Complex64::new(d, 0.0)
                + p22 * Complex64::new(1.0 - d, 0.0)
                + p12 * gamma
                + p21 * gamma.conj();
        }
    }
    QubitState::new(Matrix2::new(entries).unwrap()).unwrap()
}

#[test]
fn c01_mcm_coherence_closed_form() {
    let start = Instant::now();
    let basis = Basis64::computational();
    let mut worst = 0.0f64;
    for q in q_grid() {
        let got = geometric_coherence(&mcm(q), &basis).unwrap().value;
        let want = 0.5 * (1.0 - (1.0 - q * q).sqrt());
        worst = worst.max((got - want).abs());
    }
    assert!(worst <= 1e-10, "worst |got - closed form| = {worst:e}");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}, budget 1 s");
    println!("acceptance mcm coherence closed form: PASS (worst {worst:.2e}, {elapsed:?})");
}

#[test]
fn c02_oracle_certifies_closed_form() {
    let start = Instant::now();
    let mut sampler = Sampler::<f64>::new(20_602);
    let mut worst = 0.0f64;
    let mut violations = 0u32;
    for _ in 0..10_000 {
        let rho = sampler.state(SampleFamily::UniformBlochBall);
        let basis = sampler.basis();
        let closed = geometric_coherence(&rho, &basis).unwrap().value;
        let oracle = geometric_coherence_oracle(&rho, &basis).unwrap();
        let delta = (closed - oracle).abs();
        worst = worst.max(delta);
        if delta >= 1e-6 {
            violations += 1;
        }
    }
    let elapsed = start.elapsed();
    assert_eq!(violations, 0, "worst |closed - oracle| = {worst:e}");
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "took {elapsed:?}, budget 60 s"
    );
    println!("acceptance oracle certification: PASS (worst {worst:.2e}, {elapsed:?})");
}

#[test]
fn c03_purity_ceiling_and_complementarity() {
    // Sampled ceiling and complementarity, zero violations.
    let t1 = run_campaign(CampaignKind::T1, 10_000, 3001).unwrap();
    assert_eq!(
        t1.violations, 0,
        "ceiling violated, worst slack {}",
        t1.worst
    );
    let c1 = run_campaign(CampaignKind::C1, 10_000, 3002).unwrap();
    assert_eq!(
        c1.violations, 0,
        "complementarity violated, worst slack {}",
        c1.worst
    );

    // Constructed equal-diagonal states saturate within 1e-9.
    let mut sampler = Sampler::<f64>::new(3003);
    let mut worst_sat = 0.0f64;
    for _ in 0..1000 {
        let basis = sampler.basis();
        let m = 0.5 * sampler.uniform() * 0.999_999;
        let phi = core::f64::consts::TAU * sampler.uniform();
        let rho = equal_diagonal_state(&basis, m, phi);
        let c = geometric_coherence(&rho, &basis).unwrap().value;
        let ceiling = coherence_ceiling(rho.purity()).unwrap();
        worst_sat = worst_sat.max((c - ceiling).abs());
    }
    assert!(worst_sat <= 1e-9, "saturation gap {worst_sat:e}");

    // Diagonal imbalance 0.05 leaves strict slack > 1e-4.
    let mut worst_off = f64::INFINITY;
    for _ in 0..1000 {
        let basis = sampler.basis();
        let m = (0.55f64 * 0.45).sqrt() * 0.999 * sampler.uniform();
        let phi = core::f64::consts::TAU * sampler.uniform();
        let rho = skewed_diagonal_state(&basis, 0.55, m, phi);
        let c = geometric_coherence(&rho, &basis).unwrap().value;
        let ceiling = coherence_ceiling(rho.purity()).unwrap();
        worst_off = worst_off.min(ceiling - c);
    }
    assert!(worst_off > 1e-4, "perturbed slack {worst_off:e} not strict");

    println!(
        "acceptance purity ceiling + complementarity: PASS \
         (ceiling slack {:.2e}, complementarity slack {:.2e}, saturation gap {:.2e}, \
         perturbed slack {:.2e})",
        t1.worst, c1.worst, worst_sat, worst_off
    );
}

#[test]
fn c04_ceiling_beats_reference_bounds_on_mcm() {
    let q: f64 = 0.5;
    let rho = mcm(q);
    let c = geometric_coherence(&rho, &Basis64::computational())
        .unwrap()
        .value;
    let ceiling = coherence_ceiling(rho.purity()).unwrap();
    let c_closed = 0.5 * (1.0 - (1.0 - q * q).sqrt());
    assert!((c - c_closed).abs() <= 1e-10);
    assert!(
        (ceiling - c).abs() <= 1e-10,
        "ceiling is exact on this family"
    );

    // The two comparison bounds from the cited evaluation: q²/2 and q.
    let l3 = q * q / 2.0;
    let l4 = q;
    assert!((l3 - 0.125).abs() <= 1e-10);
    assert!((l4 - 0.5).abs() <= 1e-10);
    assert!(l3 > c + 1e-3, "q²/2 bound should exceed the coherence");
    assert!(l4 > c + 1e-3, "q bound should exceed the coherence");
    println!(
        "acceptance ceiling comparison: PASS (C_g {c:.6}, ceiling {ceiling:.6}, l3 {l3}, l4 {l4})"
    );
}

#[test]
fn c05_two_basis_relation() {
    // Sampled relation, zero violations.
    let t2 = run_campaign(CampaignKind::T2, 10_000, 3005).unwrap();
    assert_eq!(t2.violations, 0, "worst slack {}", t2.worst);

    // Worked-example sums and bound across the q grid.
    let hadamard = Basis64::hadamard();
    let circular = Basis64::circular();
    let tilted = ex2y_basis();
    let mut worst = 0.0f64;
    for q in q_grid() {
        let rho = mcm(q);
        let purity = rho.purity();

        let sum_a = geometric_coherence(&rho, &hadamard).unwrap().value
            + geometric_coherence(&rho, &tilted).unwrap().value;
        worst = worst.max((sum_a - reference::exact_sum_2a(q)).abs());

        let bound_a = two_basis_lower_bound(purity, 0.9).unwrap();
        worst = worst.max((bound_a - reference::lower_2a(q)).abs());

        let sum_b = geometric_coherence(&rho, &circular).unwrap().value
            + geometric_coherence(&rho, &tilted).unwrap().value;
        worst = worst.max((sum_b - reference::exact_sum_2b(q)).abs());
    }
    assert!(worst <= 1e-10, "worked-example deviation {worst:e}");

    // Pure-state specialization equals the purity-1 bound on a c grid.
    let mut worst_pure = 0.0f64;
    for i in 0..20 {
        let c = 0.5 + 0.5 * i as f64 / 19.0;
        let pure_form = 0.5 * (1.0 - (1.0 + 4.0 * (c - c.sqrt())).sqrt());
        worst_pure = worst_pure.max((two_basis_lower_bound(1.0, c).unwrap() - pure_form).abs());
    }
    assert!(
        worst_pure <= 1e-12,
        "pure-state form deviation {worst_pure:e}"
    );

    println!(
        "acceptance two-basis relation: PASS (slack {:.2e}, worked-example dev {worst:.2e}, \
         pure-state dev {worst_pure:.2e})",
        t2.worst
    );
}

#[test]
fn c06_two_basis_proof_oracle_sweep() {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for i in 0..=10 {
        let c = 0.5 + 0.05 * i as f64;
        for p in [0.5, 0.75, 1.0] {
            let oracle = two_basis_bound_oracle(p, c).unwrap();
            let formula = two_basis_lower_bound(p, c).unwrap();
            let delta = (oracle - formula).abs();
            worst = worst.max(delta);
            assert!(delta < 1e-4, "P={p} c={c}: |oracle - formula| = {delta:e}");
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 120.0,
        "took {elapsed:?}, budget 120 s"
    );
    println!("acceptance two-basis proof oracle: PASS (worst {worst:.2e}, {elapsed:?})");
}

#[test]
fn c07_three_basis_relation_and_proof_oracle() {
    // Sampled relation, zero violations.
    let t3 = run_campaign(CampaignKind::T3, 10_000, 3007).unwrap();
    assert_eq!(t3.violations, 0, "worst slack {}", t3.worst);

    // Worked-example configuration: incompatibility vector and the curves.
    let (x, y, z) = (ex2y_basis(), Basis64::hadamard(), Basis64::computational());
    let cv = incompatibility_vector(&x, &y, &z);
    let [c1, c2, c3] = cv.components();
    assert!((c1 - 0.9).abs() <= 1e-12 && (c2 - 0.8).abs() <= 1e-12 && (c3 - 0.5).abs() <= 1e-12);

    let mut worst = 0.0f64;
    for q in q_grid() {
        let rho = mcm(q);
        let sum = geometric_coherence(&rho, &x).unwrap().value
            + geometric_coherence(&rho, &y).unwrap().value
            + geometric_coherence(&rho, &z).unwrap().value;
        worst = worst.max((sum - reference::exact_sum_3(q)).abs());
        let bound = three_basis_lower_bound(rho.purity(), &cv).unwrap();
        worst = worst.max((bound - reference::lower_3(q)).abs());
    }
    assert!(worst <= 1e-10, "worked-example deviation {worst:e}");

    // The grid oracle never sits more than 1e-3 below the closed form:
    // on the worked vector across purities, and on random basis triples.
    let mut worst_under = f64::NEG_INFINITY;
    for p in [0.5, 0.82, 1.0] {
        let under =
            three_basis_lower_bound(p, &cv).unwrap() - three_basis_bound_oracle(p, &cv).unwrap();
        worst_under = worst_under.max(under);
    }
    let mut sampler = Sampler::<f64>::new(3107);
    for _ in 0..8 {
        let p = 0.5 + 0.5 * sampler.uniform();
        let cv = incompatibility_vector(&sampler.basis(), &sampler.basis(), &sampler.basis());
        let under =
            three_basis_lower_bound(p, &cv).unwrap() - three_basis_bound_oracle(p, &cv).unwrap();
        worst_under = worst_under.max(under);
    }
    assert!(
        worst_under <= 1e-3,
        "formula overshoots oracle by {worst_under:e}"
    );

    // Where the derivation is tight (first case, c1 <= 3/4) the two agree.
    let mut worst_tight = 0.0f64;
    let tight_vectors: [(f64, f64, f64); 3] =
        [(0.75, 0.75, 0.5), (0.75, 0.73, 0.5), (0.74, 0.74, 0.5)];
    for (c1, c2, c3) in tight_vectors {
        let cv = IncompatibilityVector::new(c1, c2, c3).unwrap();
        assert!(
            1.0 + c3.sqrt() < c1.sqrt() + c2.sqrt(),
            "test vector must be in the first case"
        );
        for p in [0.6, 0.85, 1.0] {
            let delta = (three_basis_lower_bound(p, &cv).unwrap()
                - three_basis_bound_oracle(p, &cv).unwrap())
            .abs();
            worst_tight = worst_tight.max(delta);
        }
    }
    assert!(worst_tight < 1e-3, "tight-case deviation {worst_tight:e}");

    println!(
        "acceptance three-basis relation: PASS (slack {:.2e}, worked dev {worst:.2e}, \
         max undershoot {worst_under:.2e}, tight-case dev {worst_tight:.2e})",
        t3.worst
    );
}

#[test]
fn c08_overlap_feasibility_campaign() {
    let l1 = run_campaign(CampaignKind::L1, 100_000, 3008).unwrap();
    assert_eq!(l1.violations, 0, "worst margin {}", l1.worst);
    assert!(l1.worst >= -1e-9);
    println!(
        "acceptance overlap feasibility: PASS (worst margin {:.2e})",
        l1.worst
    );
}

#[test]
fn c09_discrimination_equivalence_and_ceiling() {
    // Coherence = discrimination error at scale, plus ensemble round trips.
    let lemma2 = run_campaign(CampaignKind::Lemma2, 10_000, 3009).unwrap();
    assert_eq!(lemma2.violations, 0, "max |C_g - P_e| = {}", lemma2.worst);
    assert!(lemma2.worst < 1e-8);

    let mut sampler = Sampler::<f64>::new(3109);
    let mut worst_rt = 0.0f64;
    for _ in 0..10_000 {
        let rho = sampler.state(SampleFamily::UniformBlochBall);
        let basis = sampler.basis();
        match geocoh::discrimination::ensemble_from_state(&rho, &basis) {
            Ok(e) => {
                let back = geocoh::discrimination::state_from_ensemble(&e).unwrap();
                worst_rt = worst_rt.max(back.matrix().max_abs_diff(rho.matrix()));
            }
            Err(geocoh::Error::DegenerateWeight { .. }) => {}
            Err(e) => panic!("{e}"),
        }
    }
    assert!(worst_rt < 1e-10, "round-trip residual {worst_rt:e}");

    // Worked family: error sin²θ, ceiling saturated.
    let mut worst_theta = 0.0f64;
    let mut worst_slack = 0.0f64;
    for i in 0..=3 {
        let theta = i as f64 * core::f64::consts::FRAC_PI_4 / 3.0;
        let psi1 = Ket64::from_real(theta.cos(), theta.sin()).unwrap();
        let psi2 = Ket64::from_real(theta.sin(), theta.cos()).unwrap();
        let e = Ensemble64::new([(0.5, psi1), (0.5, psi2)]).unwrap();
        let pe = min_error_probability(&e).error_probability;
        worst_theta = worst_theta.max((pe - theta.sin().powi(2)).abs());
        worst_slack = worst_slack.max(error_probability_ceiling(&e).unwrap().report.slack.abs());
    }
    assert!(
        worst_theta <= 1e-10,
        "worked-family deviation {worst_theta:e}"
    );
    assert!(
        worst_slack <= 1e-9,
        "worked-family ceiling slack {worst_slack:e}"
    );

    // Random ensembles never violate the ceiling.
    let c4 = run_campaign(CampaignKind::C4, 10_000, 3209).unwrap();
    assert_eq!(c4.violations, 0, "worst slack {}", c4.worst);

    println!(
        "acceptance discrimination: PASS (max |C_g - P_e| {:.2e}, round trip {:.2e}, \
         worked dev {worst_theta:.2e}, ceiling slack {:.2e})",
        lemma2.worst, worst_rt, c4.worst
    );
}

#[test]
fn c10_figure_data() {
    use geocoh_cli::figures::{figure_rows, FigureKind};

    let steps = 101;
    let mut worst = 0.0f64;
    for kind in [FigureKind::Fig2a, FigureKind::Fig2b, FigureKind::Fig4] {
        let rows = figure_rows(kind, steps).unwrap();
        assert_eq!(rows.len(), steps);
        let mut prev: Option<(f64, f64, Option<f64>)> = None;
        for row in &rows {
            let q = row.q;
            let (exact_ref, lower_ref, upper_ref) = match kind {
                FigureKind::Fig2a => (
                    reference::exact_sum_2a(q),
                    reference::lower_2a(q),
                    Some(reference::upper_2(q)),
                ),
                FigureKind::Fig2b => (
                    reference::exact_sum_2b(q),
                    reference::lower_2b(q),
                    Some(reference::upper_2(q)),
                ),
                FigureKind::Fig4 => (reference::exact_sum_3(q), reference::lower_3(q), None),
            };
            worst = worst.max((row.exact - exact_ref).abs());
            worst = worst.max((row.lower - lower_ref).abs());
            match (row.upper, upper_ref) {
                (Some(u), Some(ur)) => worst = worst.max((u - ur).abs()),
                (None, None) => {}
                _ => panic!("upper column mismatch"),
            }
            if q == 0.0 {
                assert!(row.exact.abs() < 1e-12 && row.lower.abs() < 1e-12);
                if let Some(u) = row.upper {
                    assert!(u.abs() < 1e-12);
                }
            }
            if let Some((pe, pl, pu)) = prev {
                assert!(row.exact >= pe - 1e-12, "exact not monotone at q = {q}");
                assert!(row.lower >= pl - 1e-12, "lower not monotone at q = {q}");
                if let (Some(u), Some(pu)) = (row.upper, pu) {
                    assert!(u >= pu - 1e-12, "upper not monotone at q = {q}");
                }
            }
            prev = Some((row.exact, row.lower, row.upper));
        }
    }
    assert!(worst <= 1e-10, "column deviation {worst:e}");
    println!("acceptance figure data: PASS (worst column deviation {worst:.2e})");
}
