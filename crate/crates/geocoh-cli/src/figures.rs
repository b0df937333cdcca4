//! CSV data behind the paper-style coherence evaluation plots: the exact
//! two- and three-basis coherence sums of the maximally coherent mixed family
//! against their trade-off bounds, swept over `q ∈ [0, 1]`.

use std::io::Write;

use geocoh::coherence::geometric_coherence;
use geocoh::tradeoffs::{
    coherence_ceiling, incompatibility, incompatibility_vector, three_basis_lower_bound,
    two_basis_lower_bound,
};
use geocoh::{Basis64, QubitState64};

use crate::output::fmt_sig;
use crate::specs::ex2y_basis;

/// Which data set to emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FigureKind {
    /// Two bases `X = hadamard`, `Y = ex2y` (incompatibility 9/10):
    /// columns `q,exact,lower,upper`.
    Fig2a,
    /// Two bases `X = circular`, `Y = ex2y` (incompatibility 1/2):
    /// columns `q,exact,lower,upper`.
    Fig2b,
    /// Three bases `X = ex2y`, `Y = hadamard`, `Z = computational`
    /// (incompatibility vector (9/10, 4/5, 1/2)): columns `q,exact,lower`.
    Fig4,
}

impl FigureKind {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "fig2a" => Some(FigureKind::Fig2a),
            "fig2b" => Some(FigureKind::Fig2b),
            "fig4" => Some(FigureKind::Fig4),
            _ => None,
        }
    }

    pub fn header(&self) -> &'static str {
        match self {
            FigureKind::Fig2a | FigureKind::Fig2b => "q,exact,lower,upper",
            FigureKind::Fig4 => "q,exact,lower",
        }
    }
}

/// One CSV row: `q`, the exact coherence sum, the lower bound, and (for the
/// two-basis figures) the purity upper bound.
#[derive(Debug, Clone, Copy)]
pub struct FigureRow {
    pub q: f64,
    pub exact: f64,
    pub lower: f64,
    pub upper: Option<f64>,
}

/// Computes the rows at `steps` uniform values of `q` on `[0, 1]` inclusive.
pub fn figure_rows(kind: FigureKind, steps: usize) -> geocoh::Result<Vec<FigureRow>> {
    assert!(steps >= 2);
    let mut rows = Vec::with_capacity(steps);
    for i in 0..steps {
        let q = i as f64 / (steps - 1) as f64;
        let rho = QubitState64::maximally_coherent_mixed(q)?;
        let purity = rho.purity();
        rows.push(match kind {
            FigureKind::Fig2a => two_basis_row(q, &rho, purity, &Basis64::hadamard())?,
            FigureKind::Fig2b => two_basis_row(q, &rho, purity, &Basis64::circular())?,
            FigureKind::Fig4 => {
                let (x, y, z) = (ex2y_basis(), Basis64::hadamard(), Basis64::computational());
                let exact = geometric_coherence(&rho, &x)?.value
                    + geometric_coherence(&rho, &y)?.value
                    + geometric_coherence(&rho, &z)?.value;
                let cv = incompatibility_vector(&x, &y, &z);
                FigureRow {
                    q,
                    exact,
                    lower: three_basis_lower_bound(purity, &cv)?,
                    upper: None,
                }
            }
        });
    }
    Ok(rows)
}

fn two_basis_row(
    q: f64,
    rho: &QubitState64,
    purity: f64,
    x: &Basis64,
) -> geocoh::Result<FigureRow> {
    let y = ex2y_basis();
    let exact = geometric_coherence(rho, x)?.value + geometric_coherence(rho, &y)?.value;
    let c = incompatibility(x, &y).value;
    Ok(FigureRow {
        q,
        exact,
        lower: two_basis_lower_bound(purity, c)?,
        // The ceiling applies to each term separately, so the sum gets twice
        // the single-basis ceiling, which is 1 - √(1-q²) for this family.
        upper: Some(2.0 * coherence_ceiling(purity)?),
    })
}

/// Writes the CSV (header plus `steps` rows, 12 significant digits, `\n`
/// line endings) to `out`.
pub fn write_figure(kind: FigureKind, steps: usize, out: &mut dyn Write) -> std::io::Result<()> {
    let rows = figure_rows(kind, steps)
        .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidInput, e.to_string()))?;
    writeln!(out, "{}", kind.header())?;
    for row in rows {
        match row.upper {
            Some(upper) => writeln!(
                out,
                "{},{},{},{}",
                fmt_sig(row.q),
                fmt_sig(row.exact),
                fmt_sig(row.lower),
                fmt_sig(upper)
            )?,
            None => writeln!(
                out,
                "{},{},{}",
                fmt_sig(row.q),
                fmt_sig(row.exact),
                fmt_sig(row.lower)
            )?,
        }
    }
    Ok(())
}
