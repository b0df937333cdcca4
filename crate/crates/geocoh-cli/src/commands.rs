//! Report builders: each subcommand's stdout is assembled here as a string.

use geocoh::coherence::{geometric_coherence, geometric_coherence_oracle};
use geocoh::discrimination::{
    error_probability_ceiling, min_error_probability, state_from_ensemble,
};
use geocoh::tradeoffs::{
    ceiling_saturated, coherence_ceiling, incompatibility, incompatibility_vector, mixedness,
    three_basis_check, two_basis_check,
};

use crate::output::{fmt_sig, json_object, table, JsonValue};
use crate::specs::{BasisSpec, EnsembleSpec, StateSpec};
use crate::verify::CampaignReport;

/// `geocoh coherence`: the coherence of one state in one basis, with the
/// purity ceiling; optionally the defining-optimization oracle cross-check.
pub fn coherence_report(
    state: &StateSpec,
    basis: &BasisSpec,
    oracle: bool,
    json: bool,
) -> geocoh::Result<String> {
    let rho = state.state();
    let c = geometric_coherence(rho, basis.basis())?;
    let purity = rho.purity();
    let ceiling = coherence_ceiling(purity)?;
    let saturated = ceiling_saturated(rho, basis.basis());
    let mix = mixedness(rho);
    let oracle_value = if oracle {
        Some(geometric_coherence_oracle(rho, basis.basis())?)
    } else {
        None
    };

    if json {
        let mut fields = vec![
            ("state", JsonValue::str(state.raw())),
            ("basis", JsonValue::str(basis.raw())),
            ("coherence", JsonValue::num(c.value)),
            ("basis_diagonals", JsonValue::num_array(&c.basis_diagonals)),
            ("purity", JsonValue::num(purity)),
            ("mixedness", JsonValue::num(mix)),
            ("ceiling", JsonValue::num(ceiling)),
            ("saturated", JsonValue::bool(saturated)),
        ];
        if let Some(o) = oracle_value {
            fields.push(("oracle", JsonValue::num(o)));
            fields.push(("oracle_delta", JsonValue::num((c.value - o).abs())));
        }
        Ok(json_object(&fields))
    } else {
        let mut rows = vec![
            ("state", state.raw().to_string()),
            ("basis", basis.raw().to_string()),
            ("coherence", fmt_sig(c.value)),
            (
                "basis diagonals",
                format!(
                    "{}, {}",
                    fmt_sig(c.basis_diagonals[0]),
                    fmt_sig(c.basis_diagonals[1])
                ),
            ),
            ("purity", fmt_sig(purity)),
            ("mixedness", fmt_sig(mix)),
            ("ceiling", fmt_sig(ceiling)),
            ("saturated", saturated.to_string()),
        ];
        if let Some(o) = oracle_value {
            rows.push(("oracle", fmt_sig(o)));
            rows.push(("oracle |delta|", fmt_sig((c.value - o).abs())));
        }
        Ok(table(&rows))
    }
}

/// `geocoh uncertainty`: per-basis coherences, their sum, the incompatibility
/// (scalar or vector), the lower bound, slack and saturation.
pub fn uncertainty_report(
    state: &StateSpec,
    bases: &[BasisSpec],
    json: bool,
) -> geocoh::Result<String> {
    let rho = state.state();
    let coherences: Vec<f64> = bases
        .iter()
        .map(|b| geometric_coherence(rho, b.basis()).map(|r| r.value))
        .collect::<geocoh::Result<_>>()?;
    let sum: f64 = coherences.iter().sum();

    let (incompat, report) = match bases {
        [x, y] => {
            let c = incompatibility(x.basis(), y.basis());
            (
                JsonValue::num(c.value),
                two_basis_check(rho, x.basis(), y.basis())?,
            )
        }
        [x, y, z] => {
            let cv = incompatibility_vector(x.basis(), y.basis(), z.basis());
            (
                JsonValue::num_array(&cv.components()),
                three_basis_check(rho, x.basis(), y.basis(), z.basis())?,
            )
        }
        _ => unreachable!("clap enforces 2 or 3 bases"),
    };

    if json {
        let names: Vec<String> = bases.iter().map(|b| format!("\"{}\"", b.raw())).collect();
        let fields = vec![
            ("state", JsonValue::str(state.raw())),
            ("bases", JsonValue::Raw(format!("[{}]", names.join(",")))),
            ("coherences", JsonValue::num_array(&coherences)),
            ("sum", JsonValue::num(sum)),
            ("incompatibility", incompat),
            ("lower_bound", JsonValue::num(report.lower_bound)),
            ("slack", JsonValue::num(report.slack)),
            ("saturated", JsonValue::bool(report.saturated)),
        ];
        Ok(json_object(&fields))
    } else {
        let incompat_text = match incompat {
            JsonValue::Raw(r) | JsonValue::Str(r) => r,
        };
        let names: Vec<&str> = bases.iter().map(|b| b.raw()).collect();
        let coh_text: Vec<String> = coherences.iter().map(|c| fmt_sig(*c)).collect();
        let rows = vec![
            ("state", state.raw().to_string()),
            ("bases", names.join(", ")),
            ("coherences", coh_text.join(", ")),
            ("sum", fmt_sig(sum)),
            ("incompatibility", incompat_text),
            ("lower bound", fmt_sig(report.lower_bound)),
            ("slack", fmt_sig(report.slack)),
            ("saturated", report.saturated.to_string()),
        ];
        Ok(table(&rows))
    }
}

/// `geocoh discriminate`: Helstrom optimum, the optimal projector, and the
/// purity ceiling of the induced average state.
pub fn discriminate_report(spec: &EnsembleSpec, json: bool) -> geocoh::Result<String> {
    let ensemble = spec.ensemble();
    let result = min_error_probability(ensemble);
    let rho = state_from_ensemble(ensemble)?;
    let ceiling = error_probability_ceiling(ensemble)?;

    if json {
        let fields = vec![
            ("ensemble", JsonValue::str(spec.raw())),
            (
                "error_probability",
                JsonValue::num(result.error_probability),
            ),
            (
                "optimal_projector_bloch",
                JsonValue::num_array(&result.optimal_projector_bloch),
            ),
            ("purity", JsonValue::num(rho.purity())),
            ("ceiling", JsonValue::num(ceiling.report.lower_bound)),
            ("slack", JsonValue::num(ceiling.report.slack)),
            (
                "complementarity_lhs",
                JsonValue::num(ceiling.complementarity_lhs),
            ),
            ("saturated", JsonValue::bool(ceiling.report.saturated)),
        ];
        Ok(json_object(&fields))
    } else {
        let [bx, by, bz] = result.optimal_projector_bloch;
        let rows = vec![
            ("ensemble", spec.raw().to_string()),
            ("error probability", fmt_sig(result.error_probability)),
            (
                "optimal projector (bloch)",
                format!("{}, {}, {}", fmt_sig(bx), fmt_sig(by), fmt_sig(bz)),
            ),
            ("purity", fmt_sig(rho.purity())),
            ("ceiling", fmt_sig(ceiling.report.lower_bound)),
            ("slack", fmt_sig(ceiling.report.slack)),
            ("complementarity lhs", fmt_sig(ceiling.complementarity_lhs)),
            ("saturated", ceiling.report.saturated.to_string()),
        ];
        Ok(table(&rows))
    }
}

/// `geocoh verify`: campaign summary.
pub fn verify_report(report: &CampaignReport, json: bool) -> String {
    if json {
        let mut fields = vec![
            ("campaign", JsonValue::str(report.campaign.name())),
            ("samples", JsonValue::int(report.samples)),
            ("seed", JsonValue::int(report.seed)),
            ("statistic", JsonValue::str(report.statistic)),
            ("worst", JsonValue::num(report.worst)),
            ("tolerance", JsonValue::num(report.tolerance)),
            ("violations", JsonValue::int(report.violations)),
        ];
        if let Some(sat) = report.saturated {
            fields.push(("saturated", JsonValue::int(sat)));
        }
        json_object(&fields)
    } else {
        let mut rows = vec![
            ("campaign", report.campaign.name().to_string()),
            ("samples", report.samples.to_string()),
            ("seed", report.seed.to_string()),
            (report.statistic, fmt_sig(report.worst)),
            ("tolerance", fmt_sig(report.tolerance)),
            ("violations", report.violations.to_string()),
        ];
        if let Some(sat) = report.saturated {
            rows.push(("saturated", sat.to_string()));
        }
        table(&rows)
    }
}
