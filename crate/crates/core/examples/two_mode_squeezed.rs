//! Tangle of a two-mode squeezed vacuum along three routes: the pure-state
//! formula, the squared negativity of the partial transpose, and the two-mode
//! standard-form engine.

use gaussian_tangle::tangle::squared_negativity;
use gaussian_tangle::{f, pure_tangle, GaussianState, Result, StandardForm};

fn main() -> Result<()> {
    println!("{:>6} {:>14} {:>14} {:>14} {:>14}", "r", "closed form", "pure", "neg²", "two-mode");
    for r in [0.1, 0.25, 0.5 * 2f64.ln(), 0.6, 1.0] {
        let state = GaussianState::two_mode_squeezed_vacuum(r);
        let closed = 0.25 * ((2.0 * r).exp() - 1.0).powi(2);
        let sf = StandardForm::from_state(&state)?;
        println!(
            "{r:>6.4} {closed:>14.10} {:>14.10} {:>14.10} {:>14.10}",
            pure_tangle(&state, 0)?,
            squared_negativity(&state, 0)?,
            sf.mixed_tangle()?,
        );
    }
    println!("f(9/4) = {}", f(9.0 / 4.0)?);
    Ok(())
}
