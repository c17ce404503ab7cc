//! Seeded Monte Carlo check of `τ(A₁ : rest) ≥ Σ τ(A₁ : A_l)`.
//!
//! Usage: `monogamy_sweep [modes] [samples] [squeeze_max] [seed]`.

use std::time::Instant;

use gaussian_tangle::io::report_to_json;
use gaussian_tangle::{sweep, Result, SweepConfig};

fn main() -> Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: &str| args.get(i).cloned().unwrap_or_else(|| default.to_string());
    let parse_err = |e: std::num::ParseIntError| gaussian_tangle::Error::InvalidInput(e.to_string());
    let modes: usize = arg(0, "4").parse().map_err(parse_err)?;
    let samples: usize = arg(1, "2000").parse().map_err(parse_err)?;
    let squeeze: f64 = arg(2, "1.0")
        .parse()
        .map_err(|e: std::num::ParseFloatError| gaussian_tangle::Error::InvalidInput(e.to_string()))?;
    let seed: u64 = arg(3, "1").parse().map_err(parse_err)?;

    let mut cfg = SweepConfig::new(modes, samples, squeeze, seed);
    cfg.keep_records = false;
    let start = Instant::now();
    let report = sweep(&cfg)?;
    eprintln!("{} evaluations in {:.2?}", report.evaluations, start.elapsed());
    println!("{}", report_to_json(&report)?);
    Ok(())
}
