//! Verification campaigns: sample the statement of each trade-off relation at
//! scale and count violations beyond tolerance.

use geocoh::coherence::geometric_coherence;
use geocoh::discrimination::{coherence_discrimination_pair, error_probability_ceiling};
use geocoh::qubit::overlap_sq;
use geocoh::tradeoffs::{
    ceiling_saturated, coherence_ceiling, complementarity_check, incompatibility_vector,
    three_basis_bound_oracle, three_basis_check, three_basis_lower_bound, two_basis_bound_oracle,
    two_basis_check, two_basis_lower_bound,
};
use geocoh::{SampleFamily, Sampler};

/// The campaigns exposed by `geocoh verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CampaignKind {
    /// Purity ceiling on the coherence.
    T1,
    /// Complementarity with mixedness.
    C1,
    /// Overlap-triple feasibility.
    L1,
    /// Two-basis uncertainty relation.
    T2,
    /// Three-basis uncertainty relation.
    T3,
    /// Coherence equals discrimination error.
    Lemma2,
    /// Purity ceiling on the discrimination error.
    C4,
    /// Two-basis grid oracle against the closed form.
    Oracle2,
    /// Three-basis grid oracle against the closed form.
    Oracle3,
}

impl CampaignKind {
    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "t1" => CampaignKind::T1,
            "c1" => CampaignKind::C1,
            "l1" => CampaignKind::L1,
            "t2" => CampaignKind::T2,
            "t3" => CampaignKind::T3,
            "lemma2" => CampaignKind::Lemma2,
            "c4" => CampaignKind::C4,
            "oracle2" => CampaignKind::Oracle2,
            "oracle3" => CampaignKind::Oracle3,
            _ => return None,
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            CampaignKind::T1 => "t1",
            CampaignKind::C1 => "c1",
            CampaignKind::L1 => "l1",
            CampaignKind::T2 => "t2",
            CampaignKind::T3 => "t3",
            CampaignKind::Lemma2 => "lemma2",
            CampaignKind::C4 => "c4",
            CampaignKind::Oracle2 => "oracle2",
            CampaignKind::Oracle3 => "oracle3",
        }
    }

    pub const ALL_NAMES: [&'static str; 9] = [
        "t1", "c1", "l1", "t2", "t3", "lemma2", "c4", "oracle2", "oracle3",
    ];
}

/// Aggregated campaign outcome.
#[derive(Debug, Clone)]
pub struct CampaignReport {
    pub campaign: CampaignKind,
    pub samples: u64,
    pub seed: u64,
    /// Worst value of the per-sample statistic.
    pub worst: f64,
    /// What `worst` measures, e.g. `min slack` or `max |delta|`.
    pub statistic: &'static str,
    /// Violation threshold on the statistic.
    pub tolerance: f64,
    pub violations: u64,
    /// Saturation census for bound campaigns.
    pub saturated: Option<u64>,
}

/// Runs one campaign. Deterministic for fixed `(kind, samples, seed)`.
pub fn run(kind: CampaignKind, samples: u64, seed: u64) -> geocoh::Result<CampaignReport> {
    let mut sampler = Sampler::<f64>::new(seed);
    match kind {
        CampaignKind::T1 => {
            let mut worst = f64::INFINITY;
            let mut violations = 0;
            let mut saturated = 0;
            for _ in 0..samples {
                let rho = sampler.state(SampleFamily::UniformBlochBall);
                let basis = sampler.basis();
                let c = geometric_coherence(&rho, &basis)?.value;
                let slack = coherence_ceiling(rho.purity())? - c;
                worst = worst.min(slack);
                if slack < -1e-9 {
                    violations += 1;
                }
                if ceiling_saturated(&rho, &basis) {
                    saturated += 1;
                }
            }
            Ok(CampaignReport {
                campaign: kind,
                samples,
                seed,
                worst,
                statistic: "min slack",
                tolerance: 1e-9,
                violations,
                saturated: Some(saturated),
            })
        }
        CampaignKind::C1 => bound_campaign(kind, samples, seed, &mut |s| {
            let rho = s.state(SampleFamily::UniformBlochBall);
            let basis = s.basis();
            let report = complementarity_check(&rho, &basis)?;
            Ok((report.slack, report.saturated))
        }),
        CampaignKind::L1 => {
            let mut worst = f64::INFINITY;
            let mut violations = 0;
            for _ in 0..samples {
                let x = sampler.pure_ket();
                let z = sampler.pure_ket();
                let r = sampler.pure_ket();
                let a = overlap_sq(&x, &r);
                let b = overlap_sq(&z, &r);
                let c = overlap_sq(&z, &x);
                let margin = (1.0 + c.sqrt() - (a + b))
                    .min((1.0 - c).max(0.0).sqrt() - (a - b).abs())
                    .min(a + b - (1.0 - c.sqrt()));
                worst = worst.min(margin);
                if margin < -1e-9 {
                    violations += 1;
                }
            }
            Ok(CampaignReport {
                campaign: kind,
                samples,
                seed,
                worst,
                statistic: "min margin",
                tolerance: 1e-9,
                violations,
                saturated: None,
            })
        }
        CampaignKind::T2 => bound_campaign(kind, samples, seed, &mut |s| {
            let rho = s.state(SampleFamily::UniformBlochBall);
            let x = s.basis();
            let y = s.basis();
            let report = two_basis_check(&rho, &x, &y)?;
            Ok((report.slack, report.saturated))
        }),
        CampaignKind::T3 => bound_campaign(kind, samples, seed, &mut |s| {
            let rho = s.state(SampleFamily::UniformBlochBall);
            let x = s.basis();
            let y = s.basis();
            let z = s.basis();
            let report = three_basis_check(&rho, &x, &y, &z)?;
            Ok((report.slack, report.saturated))
        }),
        CampaignKind::Lemma2 => {
            let mut worst = 0.0f64;
            let mut violations = 0;
            for _ in 0..samples {
                let rho = sampler.state(SampleFamily::UniformBlochBall);
                let basis = sampler.basis();
                let (c, pe) = coherence_discrimination_pair(&rho, &basis)?;
                let delta = (c - pe).abs();
                worst = worst.max(delta);
                if delta > 1e-8 {
                    violations += 1;
                }
            }
            Ok(CampaignReport {
                campaign: kind,
                samples,
                seed,
                worst,
                statistic: "max |C_g - P_e|",
                tolerance: 1e-8,
                violations,
                saturated: None,
            })
        }
        CampaignKind::C4 => bound_campaign(kind, samples, seed, &mut |s| {
            let ensemble = s.ensemble();
            let c = error_probability_ceiling(&ensemble)?;
            Ok((c.report.slack, c.report.saturated))
        }),
        CampaignKind::Oracle2 => {
            let mut worst = 0.0f64;
            let mut violations = 0;
            for _ in 0..samples {
                let p = 0.5 + 0.5 * sampler.uniform();
                let c = 0.5 + 0.5 * sampler.uniform();
                let delta = (two_basis_bound_oracle(p, c)? - two_basis_lower_bound(p, c)?).abs();
                worst = worst.max(delta);
                if delta > 1e-4 {
                    violations += 1;
                }
            }
            Ok(CampaignReport {
                campaign: kind,
                samples,
                seed,
                worst,
                statistic: "max |oracle - formula|",
                tolerance: 1e-4,
                violations,
                saturated: None,
            })
        }
        CampaignKind::Oracle3 => {
            let mut worst = f64::NEG_INFINITY;
            let mut violations = 0;
            for _ in 0..samples {
                let p = 0.5 + 0.5 * sampler.uniform();
                let x = sampler.basis();
                let y = sampler.basis();
                let z = sampler.basis();
                let cv = incompatibility_vector(&x, &y, &z);
                // How far the closed form overshoots the grid; must stay
                // below 1e-3 (the bound may legitimately sit strictly under
                // the oracle, so only one side is checked).
                let overshoot =
                    three_basis_lower_bound(p, &cv)? - three_basis_bound_oracle(p, &cv)?;
                worst = worst.max(overshoot);
                if overshoot > 1e-3 {
                    violations += 1;
                }
            }
            Ok(CampaignReport {
                campaign: kind,
                samples,
                seed,
                worst,
                statistic: "max (formula - oracle)",
                tolerance: 1e-3,
                violations,
                saturated: None,
            })
        }
    }
}

type SlackSample<'a> = &'a mut dyn FnMut(&mut Sampler<f64>) -> geocoh::Result<(f64, bool)>;

fn bound_campaign(
    kind: CampaignKind,
    samples: u64,
    seed: u64,
    sample_one: SlackSample,
) -> geocoh::Result<CampaignReport> {
    let mut sampler = Sampler::<f64>::new(seed);
    let mut worst = f64::INFINITY;
    let mut violations = 0;
    let mut saturated = 0;
    for _ in 0..samples {
        let (slack, sat) = sample_one(&mut sampler)?;
        worst = worst.min(slack);
        if slack < -1e-9 {
            violations += 1;
        }
        if sat {
            saturated += 1;
        }
    }
    Ok(CampaignReport {
        campaign: kind,
        samples,
        seed,
        worst,
        statistic: "min slack",
        tolerance: 1e-9,
        violations,
        saturated: Some(saturated),
    })
}
