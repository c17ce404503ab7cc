//! For an entangled two-mode reduction of a random pure three-mode state,
//! print the standard form, the tangle from `min m(θ)`, the `θ = π` bound
//! `f(4ζ₁²/ζ₂)`, the `Δ` bound, and every inequality slack along the way.

use gaussian_tangle::{GaussianState, Result, StandardForm};

fn main() -> Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let state = GaussianState::random_pure(3, 1.0, seed)?;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let sf = StandardForm::of_pair(&state, i, j)?;
        if !sf.is_entangled(1e-9)? {
            println!("modes ({i}, {j}): separable");
            continue;
        }
        let report = sf.bound_report()?;
        println!("modes ({i}, {j}): a={:.6} b={:.6} c+={:.6} c-={:.6}", sf.a, sf.b, sf.c_plus, sf.c_minus);
        println!("  tau          {:.10}", report.tau);
        if let Some(bz) = report.bound_zeta {
            println!("  f(4z1^2/z2)  {bz:.10}");
        }
        println!("  f(Delta)     {:.10}", report.bound_delta);
        println!("  chain holds: {}", report.chain_holds(1e-9));
        if let Some(app) = report.appendix {
            for (name, slack) in app.slacks() {
                println!("    {name:<24} slack {slack:+.3e}");
            }
        }
    }
    Ok(())
}
