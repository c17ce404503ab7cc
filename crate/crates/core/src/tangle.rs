//! Scalar tangle functions and the pure-state Gaussian tangle.
//!
//! For a pure state split as one mode against the rest, the tangle is the
//! squared negativity `τ = ¼(1/ν̃₋ − 1)²`, where `ν̃₋ = √det α − √(det α − 1)`
//! is the smallest symplectic eigenvalue of the partial transpose. Written in
//! terms of `t = 4 det α − 4 = Σ_l Δ_l` this is `f(t) = (1/g(t) − ½)²` with
//! `g(t) = √(t + 4) − √t`.

use crate::error::{Error, Result};
use crate::state::GaussianState;
use crate::symplectic::{SymplecticSpectrum, DEFAULT_TOL};

fn check_nonnegative(t: f64, what: &str) -> Result<()> {
    if t.is_nan() || t < 0.0 {
        return Err(Error::InvalidInput(format!(
            "{what} requires a non-negative argument, got {t}"
        )));
    }
    Ok(())
}

/// `g(t) = √(t + 4) − √t`, evaluated as `4 / (√(t + 4) + √t)`.
pub fn g(t: f64) -> Result<f64> {
    check_nonnegative(t, "g")?;
    Ok(4.0 / ((t + 4.0).sqrt() + t.sqrt()))
}

/// `1/g(t) = (√(t + 4) + √t) / 4`.
pub fn reciprocal_g(t: f64) -> Result<f64> {
    check_nonnegative(t, "1/g")?;
    Ok(((t + 4.0).sqrt() + t.sqrt()) / 4.0)
}

/// `f(t) = (1/g(t) − ½)²`.
///
/// Computed as `((t / (√(t + 4) + 2) + √t) / 4)²`, which is the same quantity
/// without the cancellation in `√(t + 4) − 2` near zero.
pub fn f(t: f64) -> Result<f64> {
    check_nonnegative(t, "f")?;
    let root = t / ((t + 4.0).sqrt() + 2.0) + t.sqrt();
    Ok((root / 4.0).powi(2))
}

/// Negativity `(∏_{ν̃_k < 1} 1/ν̃_k − 1) / 2` from the symplectic spectrum of a
/// partially transposed covariance matrix.
pub fn negativity_from_pt_spectrum(nu_tilde: &SymplecticSpectrum) -> Result<f64> {
    if let Some(bad) = nu_tilde.iter().find(|v| !(*v > 0.0)) {
        return Err(Error::InvalidInput(format!(
            "partially transposed spectrum has non-positive value {bad}"
        )));
    }
    let trace_norm: f64 = nu_tilde.iter().filter(|&v| v < 1.0).map(|v| 1.0 / v).product();
    Ok((trace_norm - 1.0) / 2.0)
}

/// Squared negativity of `pivot` against the rest, from the full partially
/// transposed symplectic spectrum. Valid for any state, pure or mixed.
pub fn squared_negativity(state: &GaussianState, pivot: usize) -> Result<f64> {
    let pt = state.partial_transpose(&[pivot])?;
    let n = negativity_from_pt_spectrum(&pt.symplectic_spectrum()?)?;
    Ok(n * n)
}

/// Tangle of a pure one-mode-versus-rest split with local determinant `det α`.
/// Values in `[1 − tol, 1)` are treated as exactly 1.
pub fn pure_tangle_from_local_det(det_alpha: f64, tol: f64) -> Result<f64> {
    if !det_alpha.is_finite() || det_alpha < 1.0 - tol {
        return Err(Error::Inconsistent(format!(
            "local determinant {det_alpha} is below 1; not a physical state"
        )));
    }
    let d = det_alpha.max(1.0);
    let inv_nu = d.sqrt() + (d - 1.0).sqrt();
    Ok(0.25 * (inv_nu - 1.0).powi(2))
}

/// Gaussian tangle of a pure state across `pivot : rest`.
pub fn pure_tangle(state: &GaussianState, pivot: usize) -> Result<f64> {
    pure_tangle_tol(state, pivot, DEFAULT_TOL)
}

pub fn pure_tangle_tol(state: &GaussianState, pivot: usize, tol: f64) -> Result<f64> {
    let deviation = state.purity_deviation();
    if deviation > tol {
        return Err(Error::NotPure { deviation });
    }
    pure_tangle_from_local_det(state.local_determinant(pivot)?, tol)
}
