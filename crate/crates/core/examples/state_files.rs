//! Write a random state in both file formats, read it back, and query it.

use gaussian_tangle::io::{load_state, save_state, state_to_text, StateFormat};
use gaussian_tangle::{monogamy_residual, GaussianState, Result};

fn main() -> Result<()> {
    let dir = std::env::temp_dir().join("gaussian-tangle-example");
    std::fs::create_dir_all(&dir)?;
    let state = GaussianState::random_pure(2, 0.8, 42)?;

    let json = dir.join("state.json");
    let text = dir.join("state.txt");
    save_state(&state, &json, StateFormat::Json)?;
    save_state(&state, &text, StateFormat::Text)?;
    print!("{}", state_to_text(&state));

    let a = load_state(&json)?;
    let b = load_state(&text)?;
    println!("round trip exact: json {}, text {}", a == state, b == state);

    let result = monogamy_residual(&a, 0, 1e-8)?;
    println!("lhs {:.12} sum {:.12} residual {:.3e}", result.lhs, result.sum_rhs, result.residual);
    println!("files in {}", dir.display());
    Ok(())
}
