//! Scalar minimization of smooth periodic functions.

use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// Inverse golden ratio, `(√5 − 1) / 2`.
const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Result of a one-dimensional minimization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub x: f64,
    pub value: f64,
    pub evaluations: usize,
}

/// Golden-section search for a local minimum of `func` on `[lo, hi]`.
///
/// Stops once the bracket is narrower than `xtol`. Errors from `func`
/// abort the search.
pub fn golden_section<F>(mut func: F, lo: f64, hi: f64, xtol: f64) -> Result<Minimum>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(lo < hi) || !xtol.is_finite() || xtol <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "bad golden-section bracket [{lo}, {hi}] with xtol {xtol}"
        )));
    }
    let (mut a, mut b) = (lo, hi);
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = func(x1)?;
    let mut f2 = func(x2)?;
    let mut evaluations = 2;
    while b - a > xtol {
        if f1 <= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = func(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = func(x2)?;
        }
        evaluations += 1;
    }
    let (x, value) = if f1 <= f2 { (x1, f1) } else { (x2, f2) };
    Ok(Minimum {
        x,
        value,
        evaluations,
    })
}

/// Global minimum of a `2π`-periodic function.
///
/// Scans `grid` equispaced points of `[0, 2π)`, then refines the best
/// bracket by golden-section search until its width is below `rel_tol · 2π`.
/// The returned abscissa is reduced to `[0, 2π)`.
pub fn minimize_periodic<F>(mut func: F, grid: usize, rel_tol: f64) -> Result<Minimum>
where
    F: FnMut(f64) -> Result<f64>,
{
    if grid < 3 {
        return Err(Error::InvalidInput(format!(
            "periodic scan needs at least 3 points, got {grid}"
        )));
    }
    let step = TAU / grid as f64;
    let mut best = (0, f64::INFINITY);
    for k in 0..grid {
        let value = func(k as f64 * step)?;
        if value < best.1 {
            best = (k, value);
        }
    }
    let center = best.0 as f64 * step;
    let refined = golden_section(&mut func, center - step, center + step, rel_tol * TAU)?;
    let mut min = if refined.value <= best.1 {
        refined
    } else {
        Minimum {
            x: center,
            value: best.1,
            evaluations: 0,
        }
    };
    min.x = min.x.rem_euclid(TAU);
    min.evaluations += grid;
    Ok(min)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_parabola_vertex() {
        let m = golden_section(|x| Ok((x - 0.3).powi(2) + 2.0), -1.0, 2.0, 1e-10).unwrap();
        assert!((m.x - 0.3).abs() < 1e-7);
        assert!((m.value - 2.0).abs() < 1e-15);
    }

    #[test]
    fn golden_rejects_empty_bracket() {
        assert!(golden_section(Ok, 1.0, 1.0, 1e-6).is_err());
        assert!(golden_section(Ok, 0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn periodic_minimum_across_wraparound() {
        // Minimum at θ = 0 ≡ 2π.
        let m = minimize_periodic(|t| Ok(-t.cos()), 720, 1e-12).unwrap();
        assert!((m.value + 1.0).abs() < 1e-15);
        assert!(m.x < 1e-7 || TAU - m.x < 1e-7);
    }

    #[test]
    fn periodic_picks_global_of_multimodal() {
        // Two wells, the deeper one at 4.0.
        let func = |t: f64| Ok(-(t - 1.0).cos().max(0.0) * 0.5 - (t - 4.0).cos().max(0.0));
        let m = minimize_periodic(func, 720, 1e-12).unwrap();
        assert!((m.x - 4.0).abs() < 1e-7);
    }

    #[test]
    fn errors_propagate() {
        let r = minimize_periodic(|_| Err(Error::Evaluation("boom".into())), 10, 1e-6);
        assert!(matches!(r, Err(Error::Evaluation(_))));
    }
}
