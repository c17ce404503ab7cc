//! Williamson normal form: build `γ = S diag(ν) Sᵀ` from a random symplectic
//! `S` and recover the symplectic eigenvalues two independent ways.

use gaussian_tangle::symplectic::{symplectic_spectrum_via_square, symplectic_defect};
use gaussian_tangle::{is_valid_cm, random_symplectic, symplectic_spectrum, Result};
use nalgebra::{DMatrix, DVector};

fn main() -> Result<()> {
    let nus = [1.0, 1.7, 3.2];
    let s = random_symplectic(3, 1.0, 2024)?;
    println!("symplectic defect of S: {:.2e}", symplectic_defect(&s)?);

    let d = DMatrix::from_diagonal(&DVector::from_iterator(6, nus.iter().flat_map(|&v| [v, v])));
    let gamma = &s * d * s.transpose();
    let gamma = (&gamma + gamma.transpose()) * 0.5;

    println!("valid covariance matrix: {}", is_valid_cm(&gamma, 1e-9)?);
    println!("spectrum (eigen of iJγ): {:?}", symplectic_spectrum(&gamma)?.values());
    println!("spectrum (via (Jγ)²):    {:?}", symplectic_spectrum_via_square(&gamma)?.values());
    println!("det γ = {:.12}, product of ν² = {:.12}", gamma.determinant(), nus.iter().map(|v| v * v).product::<f64>());
    Ok(())
}
