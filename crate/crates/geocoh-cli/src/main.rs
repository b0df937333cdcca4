use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use geocoh_cli::commands::{
    coherence_report, discriminate_report, uncertainty_report, verify_report,
};
use geocoh_cli::exit_code;
use geocoh_cli::figures::{write_figure, FigureKind};
use geocoh_cli::output::{json_object, JsonValue};
use geocoh_cli::specs::{BasisSpec, EnsembleSpec, StateSpec};
use geocoh_cli::verify::{run as run_campaign, CampaignKind};

/// Geometric coherence of qubit states: closed forms, trade-off bounds, and
/// brute-force verification campaigns.
#[derive(Parser)]
#[command(name = "geocoh", version, about, max_term_width = 100)]
struct Cli {
    /// Emit a single-line JSON object instead of a human table.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coherence, purity, mixedness and the purity ceiling for one state.
    Coherence {
        /// State: bloch:x,y,z | matrix:8 numbers row-major | mcm:q.
        #[arg(long)]
        state: String,
        /// Basis: computational | hadamard | circular | ex2y | kets:...
        #[arg(long)]
        basis: String,
        /// Also run the defining-optimization oracle and report |delta|.
        #[arg(long)]
        oracle: bool,
    },
    /// Coherence sum over two or three bases against the uncertainty bound.
    Uncertainty {
        /// State: bloch:x,y,z | matrix:8 numbers row-major | mcm:q.
        #[arg(long)]
        state: String,
        /// Two or three bases.
        #[arg(long, num_args = 2..=3, required = true)]
        bases: Vec<String>,
    },
    /// Sampled verification campaign for one trade-off relation.
    ///
    /// Campaigns: t1 (purity ceiling), c1 (mixedness complementarity),
    /// l1 (overlap feasibility), t2/t3 (two-/three-basis relations),
    /// lemma2 (coherence = discrimination error), c4 (error ceiling),
    /// oracle2/oracle3 (grid oracles vs closed forms; ~0.1-0.5 s per sample).
    Verify {
        /// Campaign name.
        campaign: String,
        /// Number of samples.
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        /// Base PRNG seed.
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Emit CSV data for the coherence-evaluation figures.
    Figure {
        /// Which data set: fig2a | fig2b | fig4.
        which: String,
        /// Number of q samples on [0, 1], endpoints included.
        #[arg(long, default_value_t = 101)]
        steps: usize,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Minimum-error discrimination of a two-element pure ensemble.
    Discriminate {
        /// Worked family at angle theta in [-π/4, π/4]: equal weights,
        /// ψ1 = cosθ|0> + sinθ|1>, ψ2 = sinθ|0> + cosθ|1>.
        #[arg(long, conflicts_with = "ensemble")]
        example4: Option<f64>,
        /// Inline ensemble `w1:re,im,re,im|w2:re,im,re,im`.
        #[arg(long)]
        ensemble: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(exit_code::INPUT_ERROR as u8)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<i32, String> {
    match &cli.command {
        Command::Coherence {
            state,
            basis,
            oracle,
        } => {
            let state = StateSpec::parse(state).map_err(|e| e.to_string())?;
            let basis = BasisSpec::parse(basis).map_err(|e| e.to_string())?;
            let text =
                coherence_report(&state, &basis, *oracle, cli.json).map_err(|e| e.to_string())?;
            print_report(&text, cli.json);
            Ok(exit_code::SUCCESS)
        }
        Command::Uncertainty { state, bases } => {
            let state = StateSpec::parse(state).map_err(|e| e.to_string())?;
            let bases: Vec<BasisSpec> = bases
                .iter()
                .map(|b| BasisSpec::parse(b))
                .collect::<Result<_, _>>()
                .map_err(|e| e.to_string())?;
            let text = uncertainty_report(&state, &bases, cli.json).map_err(|e| e.to_string())?;
            print_report(&text, cli.json);
            Ok(exit_code::SUCCESS)
        }
        Command::Verify {
            campaign,
            samples,
            seed,
        } => {
            let kind = CampaignKind::parse(campaign).ok_or_else(|| {
                format!(
                    "unknown campaign `{campaign}`; expected one of {}",
                    CampaignKind::ALL_NAMES.join(", ")
                )
            })?;
            if *samples == 0 {
                return Err("--samples must be at least 1".to_string());
            }
            let report = run_campaign(kind, *samples, *seed).map_err(|e| e.to_string())?;
            print_report(&verify_report(&report, cli.json), cli.json);
            Ok(if report.violations == 0 {
                exit_code::SUCCESS
            } else {
                exit_code::VERIFICATION_FAILURE
            })
        }
        Command::Figure { which, steps, out } => {
            let kind = FigureKind::parse(which)
                .ok_or_else(|| format!("unknown figure `{which}`; expected fig2a, fig2b, fig4"))?;
            if *steps < 2 {
                return Err("--steps must be at least 2".to_string());
            }
            let file =
                File::create(out).map_err(|e| format!("cannot write `{}`: {e}", out.display()))?;
            let mut writer = BufWriter::new(file);
            write_figure(kind, *steps, &mut writer)
                .and_then(|_| writer.flush())
                .map_err(|e| format!("cannot write `{}`: {e}", out.display()))?;
            if cli.json {
                println!(
                    "{}",
                    json_object(&[
                        ("figure", JsonValue::str(which.clone())),
                        ("steps", JsonValue::int(*steps as u64)),
                        ("out", JsonValue::str(out.display().to_string())),
                    ])
                );
            } else {
                println!("wrote {} ({} rows)", out.display(), steps);
            }
            Ok(exit_code::SUCCESS)
        }
        Command::Discriminate { example4, ensemble } => {
            let spec = match (example4, ensemble) {
                (Some(theta), None) => EnsembleSpec::example4(*theta).map_err(|e| e.to_string())?,
                (None, Some(raw)) => EnsembleSpec::parse(raw).map_err(|e| e.to_string())?,
                _ => return Err("provide exactly one of --example4 or --ensemble".to_string()),
            };
            let text = discriminate_report(&spec, cli.json).map_err(|e| e.to_string())?;
            print_report(&text, cli.json);
            Ok(exit_code::SUCCESS)
        }
    }
}

fn print_report(text: &str, json: bool) {
    if json {
        println!("{text}");
    } else {
        print!("{text}");
    }
}
