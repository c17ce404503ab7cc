//! The `θ`-minimization behind the mixed-state tangle: scan `m(θ)` for one
//! reduction, then compare the two radicand exponents and the
//! partial-transpose lower bound `((ν̃ + 1/ν̃)/2)²` on `det α⁽ᵖ⁾`.

use gaussian_tangle::two_mode::RadicandExponent;
use gaussian_tangle::{GaussianState, Result, StandardForm, TwoModeOptions};

fn pt_bound(sf: &StandardForm) -> f64 {
    let d = sf.a * sf.a + sf.b * sf.b - 2.0 * sf.c_plus * sf.c_minus;
    let nu2 = 0.5 * (d - (d * d - 4.0 * sf.det_gamma()).sqrt());
    let nu = nu2.sqrt();
    (0.5 * (nu + 1.0 / nu)).powi(2)
}

fn main() -> Result<()> {
    let sf = StandardForm::new(2.0, 2.0, 1.5, -1.0);
    println!("standard form {sf:?}, entangled: {}", sf.is_entangled(1e-9)?);
    for k in 0..=8 {
        let theta = std::f64::consts::PI * k as f64 / 4.0;
        println!("  m({:>5.3}) = {:.8}", theta, sf.m_theta(theta)?);
    }
    for exponent in [RadicandExponent::Squared, RadicandExponent::Linear] {
        let opts = TwoModeOptions { exponent, ..TwoModeOptions::default() };
        let min = sf.min_m_with(&opts)?;
        println!("{exponent:?}: min m = {:.10} at theta = {:.6}", min.m, min.theta);
    }
    println!("partial-transpose lower bound: {:.10}", pt_bound(&sf));

    let state = GaussianState::random_pure(3, 1.0, 11)?;
    let sf = StandardForm::of_pair(&state, 0, 1)?;
    if sf.is_entangled(1e-9)? {
        println!("reduction (0, 1): min m = {:.10}, bound {:.10}", sf.min_m(1e-10)?.m, pt_bound(&sf));
    }
    Ok(())
}
