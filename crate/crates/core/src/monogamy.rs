//! Monogamy residual of one pivot mode and seeded Monte Carlo sweeps.
//!
//! For a pure state the left-hand side `τ_G(A₁ : rest)` is the pure-state
//! tangle of the pivot; each right-hand term is the convex-roof tangle of the
//! reduced two-mode state `(A₁, A_l)`. The residual
//! `τ_G(A₁ : rest) − Σ_l τ_G(A₁ : A_l)` is the distributed multipartite
//! entanglement left over once the pairwise shares are accounted for.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::state::GaussianState;
use crate::tangle;
use crate::two_mode::{StandardForm, TangleBoundReport, TwoModeOptions};

/// Default tolerance for declaring a monogamy violation.
pub const DEFAULT_MONOGAMY_TOL: f64 = 1e-8;

/// Default tolerance for the bound chain and the appendix slacks.
pub const DEFAULT_BOUND_TOL: f64 = 1e-9;

/// Odd multiplier mixing the sample index into the master seed.
const SEED_STRIDE: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PartnerTangle {
    pub mode: usize,
    pub tau: f64,
}

/// Both sides of the monogamy inequality for one pivot.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonogamyResult {
    pub pivot: usize,
    pub lhs: f64,
    pub per_partner: Vec<PartnerTangle>,
    pub sum_rhs: f64,
    pub residual: f64,
}

impl MonogamyResult {
    pub fn holds(&self, tol: f64) -> bool {
        self.residual >= -tol
    }
}

/// Pair-level detail gathered alongside a [`MonogamyResult`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairAnalysis {
    pub partner: usize,
    /// `None` when the reduction is separable.
    pub report: Option<TangleBoundReport>,
}

fn check_pure_pivot(state: &GaussianState, pivot: usize, tol: f64) -> Result<()> {
    if state.modes() < 2 {
        return Err(Error::InvalidDimension(
            "monogamy needs at least two modes".into(),
        ));
    }
    if pivot >= state.modes() {
        return Err(Error::ModeOutOfRange {
            index: pivot,
            modes: state.modes(),
        });
    }
    let deviation = state.purity_deviation();
    if deviation > tol {
        return Err(Error::NotPure { deviation });
    }
    Ok(())
}

/// Monogamy residual of a pure state for the given pivot mode.
///
/// Mixed global states are rejected: their one-versus-rest convex roof has
/// no closed form beyond two modes.
pub fn monogamy_residual(state: &GaussianState, pivot: usize, tol: f64) -> Result<MonogamyResult> {
    monogamy_residual_with(state, pivot, tol, &TwoModeOptions::default())
}

pub fn monogamy_residual_with(
    state: &GaussianState,
    pivot: usize,
    tol: f64,
    opts: &TwoModeOptions,
) -> Result<MonogamyResult> {
    check_pure_pivot(state, pivot, tol)?;
    let lhs = tangle::pure_tangle_tol(state, pivot, tol)?;
    let per_partner = (0..state.modes())
        .filter(|&l| l != pivot)
        .map(|l| {
            let sf = StandardForm::of_pair(state, pivot, l)?;
            Ok(PartnerTangle {
                mode: l,
                tau: sf.mixed_tangle_with(opts)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(pivot, lhs, per_partner))
}

fn assemble(pivot: usize, lhs: f64, per_partner: Vec<PartnerTangle>) -> MonogamyResult {
    let sum_rhs: f64 = per_partner.iter().map(|p| p.tau).sum();
    MonogamyResult {
        pivot,
        lhs,
        per_partner,
        sum_rhs,
        residual: lhs - sum_rhs,
    }
}

/// Residual plus the bound report of every entangled reduction.
pub fn analyze_pivot(
    state: &GaussianState,
    pivot: usize,
    tol: f64,
    opts: &TwoModeOptions,
) -> Result<(MonogamyResult, Vec<PairAnalysis>)> {
    check_pure_pivot(state, pivot, tol)?;
    let lhs = tangle::pure_tangle_tol(state, pivot, tol)?;
    let mut per_partner = Vec::with_capacity(state.modes() - 1);
    let mut pairs = Vec::with_capacity(state.modes() - 1);
    for l in (0..state.modes()).filter(|&l| l != pivot) {
        let sf = StandardForm::of_pair(state, pivot, l)?;
        let report = if sf.is_entangled(opts.tol)? {
            Some(sf.bound_report_with(opts)?)
        } else {
            None
        };
        per_partner.push(PartnerTangle {
            mode: l,
            tau: report.map_or(0.0, |r| r.tau),
        });
        pairs.push(PairAnalysis { partner: l, report });
    }
    Ok((assemble(pivot, lhs, per_partner), pairs))
}

/// Seed of sample `index` in a sweep with the given master seed.
pub fn sample_seed(master_seed: u64, index: u64) -> u64 {
    master_seed ^ index.wrapping_mul(SEED_STRIDE)
}

/// Parameters of a Monte Carlo campaign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub modes: usize,
    pub samples: usize,
    pub squeeze_max: f64,
    pub seed: u64,
    /// Residuals below `−tol` count as violations.
    pub tol: f64,
    /// Tolerance of the bound chain and appendix checks.
    pub bound_tol: f64,
    /// Retain one record per (sample, pivot).
    pub keep_records: bool,
    pub two_mode: TwoModeOptions,
}

impl SweepConfig {
    pub fn new(modes: usize, samples: usize, squeeze_max: f64, seed: u64) -> Self {
        Self {
            modes,
            samples,
            squeeze_max,
            seed,
            tol: DEFAULT_MONOGAMY_TOL,
            bound_tol: DEFAULT_BOUND_TOL,
            keep_records: true,
            two_mode: TwoModeOptions::default(),
        }
    }
}

/// One evaluated (sample, pivot) pair; also the CSV row layout.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRecord {
    pub sample_index: usize,
    pub seed: u64,
    pub n_modes: usize,
    pub pivot: usize,
    pub lhs: f64,
    pub sum_rhs: f64,
    pub residual: f64,
}

/// A sample whose evaluation failed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepDiagnostic {
    pub sample_index: usize,
    pub seed: u64,
    pub pivot: Option<usize>,
    pub message: String,
}

/// Aggregate statistics of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub n_modes: usize,
    pub squeeze_max: f64,
    pub master_seed: u64,
    pub tol: f64,
    pub samples: usize,
    /// Number of (sample, pivot) residuals evaluated.
    pub evaluations: usize,
    pub min_residual: f64,
    pub max_residual: f64,
    pub mean_residual: f64,
    pub violations: usize,
    /// Entangled two-mode reductions that went through the bound report.
    pub entangled_pairs: usize,
    /// Of those, reductions that were pure and took the closed-form branch.
    pub pure_pairs: usize,
    pub bound_chain_violations: usize,
    pub appendix_violations: usize,
    /// Smallest appendix slack seen (`+∞` if none).
    pub min_appendix_slack: f64,
    /// Largest of `τ − f(4ζ₁²/ζ₂)` and `f(4ζ₁²/ζ₂) − f(Δ)` seen.
    pub max_chain_excess: f64,
    /// Reductions where the two sine-term exponents give different minima.
    pub variant_disagreements: usize,
    pub diagnostics: Vec<SweepDiagnostic>,
    #[serde(skip)]
    pub records: Vec<SweepRecord>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.diagnostics.is_empty()
    }
}

struct SampleOutcome {
    records: Vec<SweepRecord>,
    pairs: Vec<TangleBoundReport>,
    diagnostics: Vec<SweepDiagnostic>,
}

fn evaluate_sample(cfg: &SweepConfig, index: usize) -> SampleOutcome {
    let seed = sample_seed(cfg.seed, index as u64);
    let mut out = SampleOutcome {
        records: Vec::with_capacity(cfg.modes),
        pairs: Vec::new(),
        diagnostics: Vec::new(),
    };
    let state = match GaussianState::random_pure(cfg.modes, cfg.squeeze_max, seed) {
        Ok(s) => s,
        Err(e) => {
            out.diagnostics.push(SweepDiagnostic {
                sample_index: index,
                seed,
                pivot: None,
                message: e.to_string(),
            });
            return out;
        }
    };
    for pivot in 0..cfg.modes {
        match analyze_pivot(&state, pivot, cfg.tol, &cfg.two_mode) {
            Ok((result, pairs)) => {
                out.records.push(SweepRecord {
                    sample_index: index,
                    seed,
                    n_modes: cfg.modes,
                    pivot,
                    lhs: result.lhs,
                    sum_rhs: result.sum_rhs,
                    residual: result.residual,
                });
                out.pairs.extend(pairs.into_iter().filter_map(|p| p.report));
            }
            Err(e) => out.diagnostics.push(SweepDiagnostic {
                sample_index: index,
                seed,
                pivot: Some(pivot),
                message: e.to_string(),
            }),
        }
    }
    out
}

/// Runs a seeded campaign over random pure states, cycling the pivot over
/// every mode of every sample. Samples are evaluated in parallel and reduced
/// in index order, so identical configurations give identical reports.
pub fn sweep(cfg: &SweepConfig) -> Result<SweepReport> {
    if cfg.modes < 2 {
        return Err(Error::InvalidInput(format!(
            "sweep needs at least two modes, got {}",
            cfg.modes
        )));
    }
    if cfg.samples == 0 {
        return Err(Error::InvalidInput("sweep needs at least one sample".into()));
    }
    if !(cfg.squeeze_max >= 0.0) || !cfg.squeeze_max.is_finite() {
        return Err(Error::InvalidInput(format!(
            "squeeze_max must be finite and non-negative, got {}",
            cfg.squeeze_max
        )));
    }

    let outcomes: Vec<SampleOutcome> = (0..cfg.samples)
        .into_par_iter()
        .map(|i| evaluate_sample(cfg, i))
        .collect();

    let mut report = SweepReport {
        n_modes: cfg.modes,
        squeeze_max: cfg.squeeze_max,
        master_seed: cfg.seed,
        tol: cfg.tol,
        samples: cfg.samples,
        evaluations: 0,
        min_residual: f64::INFINITY,
        max_residual: f64::NEG_INFINITY,
        mean_residual: 0.0,
        violations: 0,
        entangled_pairs: 0,
        pure_pairs: 0,
        bound_chain_violations: 0,
        appendix_violations: 0,
        min_appendix_slack: f64::INFINITY,
        max_chain_excess: f64::NEG_INFINITY,
        variant_disagreements: 0,
        diagnostics: Vec::new(),
        records: Vec::new(),
    };
    let mut total = 0.0;
    for outcome in outcomes {
        for rec in &outcome.records {
            report.evaluations += 1;
            report.min_residual = report.min_residual.min(rec.residual);
            report.max_residual = report.max_residual.max(rec.residual);
            total += rec.residual;
            if rec.residual < -cfg.tol {
                report.violations += 1;
            }
        }
        for pair in &outcome.pairs {
            report.entangled_pairs += 1;
            if pair.pure_reduced {
                report.pure_pairs += 1;
            }
            if !pair.chain_holds(cfg.bound_tol) {
                report.bound_chain_violations += 1;
            }
            let excess = match pair.bound_zeta {
                Some(bz) => (pair.tau - bz).max(bz - pair.bound_delta),
                None => pair.tau - pair.bound_delta,
            };
            report.max_chain_excess = report.max_chain_excess.max(excess);
            if let Some(app) = pair.appendix {
                report.min_appendix_slack = report.min_appendix_slack.min(app.min_slack());
                if !app.all_hold(cfg.bound_tol) {
                    report.appendix_violations += 1;
                }
            }
            if pair.variants_agree == Some(false) {
                report.variant_disagreements += 1;
            }
        }
        report.diagnostics.extend(outcome.diagnostics);
        if cfg.keep_records {
            report.records.extend(outcome.records);
        }
    }
    if report.evaluations > 0 {
        report.mean_residual = total / report.evaluations as f64;
    }
    Ok(report)
}
