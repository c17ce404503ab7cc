//! `gmono`: Gaussian tangle and monogamy checks from the command line.
//!
//! Every flag can also be set through an environment variable named
//! `GMONO_<FLAG>` (for example `GMONO_SEED`); an explicit flag wins.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gaussian_tangle::io::{self as state_io, StateFormat};
use gaussian_tangle::monogamy::{DEFAULT_MONOGAMY_TOL, SweepConfig};
use gaussian_tangle::two_mode::StandardForm;
use gaussian_tangle::{monogamy_residual, sweep, GaussianState, Result};

#[derive(Parser)]
#[command(name = "gmono", version, about = "Gaussian tangle and monogamy checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Write a random pure n-mode state to a file.
    Gen {
        #[arg(long, env = "GMONO_MODES")]
        modes: usize,
        #[arg(long, env = "GMONO_SQUEEZE_MAX")]
        squeeze_max: f64,
        #[arg(long, env = "GMONO_SEED")]
        seed: u64,
        #[arg(long, env = "GMONO_OUT")]
        out: PathBuf,
        #[arg(long, env = "GMONO_FORMAT", value_enum, default_value = "json")]
        format: Format,
    },
    /// Monogamy residual of a pure state for one pivot mode (0-based).
    Check {
        #[arg(long = "in", env = "GMONO_IN")]
        input: PathBuf,
        #[arg(long, env = "GMONO_PIVOT")]
        pivot: usize,
        #[arg(long, env = "GMONO_TOL", default_value_t = DEFAULT_MONOGAMY_TOL)]
        tol: f64,
    },
    /// Standard form, tangle and bound chain of a two-mode state.
    Tangle {
        #[arg(long = "in", env = "GMONO_IN")]
        input: PathBuf,
    },
    /// Monte Carlo monogamy campaign over random pure states.
    Sweep {
        #[arg(long, env = "GMONO_MODES")]
        modes: usize,
        #[arg(long, env = "GMONO_SAMPLES")]
        samples: usize,
        #[arg(long, env = "GMONO_SQUEEZE_MAX")]
        squeeze_max: f64,
        #[arg(long, env = "GMONO_SEED")]
        seed: u64,
        #[arg(long, env = "GMONO_TOL", default_value_t = DEFAULT_MONOGAMY_TOL)]
        tol: f64,
        /// Write one row per (sample, pivot) here.
        #[arg(long, env = "GMONO_CSV")]
        csv: Option<PathBuf>,
    },
    /// Symplectic spectrum, optionally after partial transposition.
    Spectrum {
        #[arg(long = "in", env = "GMONO_IN")]
        input: PathBuf,
        /// Comma-separated 0-based modes to transpose.
        #[arg(long, env = "GMONO_PT", value_delimiter = ',')]
        pt: Option<Vec<usize>>,
    },
}

#[derive(Serialize)]
struct SpectrumOutput {
    modes: usize,
    transposed: Vec<usize>,
    spectrum: Vec<f64>,
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| gaussian_tangle::Error::InvalidInput(e.to_string()))?;
    let mut out = io::stdout().lock();
    writeln!(out, "{text}")?;
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen {
            modes,
            squeeze_max,
            seed,
            out,
            format,
        } => {
            let state = GaussianState::random_pure(modes, squeeze_max, seed)?;
            let format = match format {
                Format::Json => StateFormat::Json,
                Format::Text => StateFormat::Text,
            };
            state_io::save_state(&state, &out, format)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { input, pivot, tol } => {
            let state = state_io::load_state(&input)?;
            let result = monogamy_residual(&state, pivot, tol)?;
            print_json(&result)?;
            Ok(if result.holds(tol) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::Tangle { input } => {
            let state = state_io::load_state(&input)?;
            let sf = StandardForm::from_state(&state)?;
            print_json(&sf.bound_report()?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep {
            modes,
            samples,
            squeeze_max,
            seed,
            tol,
            csv,
        } => {
            let mut cfg = SweepConfig::new(modes, samples, squeeze_max, seed);
            cfg.tol = tol;
            cfg.keep_records = csv.is_some();
            let report = sweep(&cfg)?;
            if let Some(path) = csv {
                let file = fs::File::create(path)?;
                state_io::write_csv(&report, io::BufWriter::new(file))?;
            }
            print_json(&report)?;
            Ok(if report.violations == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::Spectrum { input, pt } => {
            let state = state_io::load_state(&input)?;
            let transposed = pt.unwrap_or_default();
            let target = if transposed.is_empty() {
                state
            } else {
                state.partial_transpose(&transposed)?
            };
            print_json(&SpectrumOutput {
                modes: target.modes(),
                transposed,
                spectrum: target.symplectic_spectrum()?.values().to_vec(),
            })?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("gmono: {e}");
            ExitCode::FAILURE
        }
    }
}
