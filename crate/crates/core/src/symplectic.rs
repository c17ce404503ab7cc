//! Symplectic linear algebra on real phase space.
//!
//! Phase-space coordinates are ordered mode by mode, `(q₁, p₁, …, qₙ, pₙ)`,
//! and covariance matrices are normalized so that the vacuum is the identity.
//! With that convention a real symmetric `γ` is a physical covariance matrix
//! iff `γ + iJ ≥ 0`, equivalently iff every symplectic eigenvalue is ≥ 1.

use nalgebra::{Cholesky, DMatrix};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// Tolerance used wherever the caller does not supply one.
pub const DEFAULT_TOL: f64 = 1e-9;

/// The symplectic form `Jₙ = ⊕ J₁` with `J₁ = [[0, 1], [−1, 0]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticForm {
    modes: usize,
    matrix: DMatrix<f64>,
}

impl SymplecticForm {
    pub fn new(modes: usize) -> Result<Self> {
        if modes == 0 {
            return Err(Error::InvalidDimension(
                "symplectic form needs at least one mode".into(),
            ));
        }
        let mut matrix = DMatrix::zeros(2 * modes, 2 * modes);
        for k in 0..modes {
            matrix[(2 * k, 2 * k + 1)] = 1.0;
            matrix[(2 * k + 1, 2 * k)] = -1.0;
        }
        Ok(Self { modes, matrix })
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn dim(&self) -> usize {
        2 * self.modes
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.matrix
    }
}

/// Builds `Jₙ`. Fails for `n = 0`.
pub fn symplectic_form(n: usize) -> Result<SymplecticForm> {
    SymplecticForm::new(n)
}

/// Symplectic eigenvalues `ν₁ ≤ … ≤ νₙ`, one per mode.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticSpectrum(Vec<f64>);

impl SymplecticSpectrum {
    /// Wraps raw values, sorting them ascending.
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        Self(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Smallest symplectic eigenvalue.
    pub fn min(&self) -> f64 {
        self.0.first().copied().unwrap_or(f64::NAN)
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.0.iter().copied()
    }
}

/// Number of modes of a square even-dimensional matrix with finite entries.
pub(crate) fn check_phase_space_matrix(m: &DMatrix<f64>) -> Result<usize> {
    if m.nrows() != m.ncols() {
        return Err(Error::InvalidDimension(format!(
            "expected a square matrix, got {}×{}",
            m.nrows(),
            m.ncols()
        )));
    }
    if m.nrows() == 0 || !m.nrows().is_multiple_of(2) {
        return Err(Error::InvalidDimension(format!(
            "phase-space dimension must be positive and even, got {}",
            m.nrows()
        )));
    }
    if m.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidInput("matrix has non-finite entries".into()));
    }
    Ok(m.nrows() / 2)
}

fn asymmetry(m: &DMatrix<f64>) -> f64 {
    let n = m.nrows();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            worst = worst.max((m[(i, j)] - m[(j, i)]).abs());
        }
    }
    worst
}

/// Smallest eigenvalue of the Hermitian matrix `γ + iJ`.
pub fn min_eigenvalue_gamma_plus_ij(gamma: &DMatrix<f64>) -> Result<f64> {
    let n = check_phase_space_matrix(gamma)?;
    let j = SymplecticForm::new(n)?.into_matrix();
    let dim = 2 * n;
    // Symmetrize so that tiny asymmetries do not leak into the eigen solver.
    let h = DMatrix::from_fn(dim, dim, |r, c| {
        Complex64::new(0.5 * (gamma[(r, c)] + gamma[(c, r)]), j[(r, c)])
    });
    let eig = h.symmetric_eigenvalues();
    Ok(eig.iter().copied().fold(f64::INFINITY, f64::min))
}

/// Physicality test through the Hermitian eigenvalue route:
/// `γ` symmetric within `tol` and `λ_min(γ + iJ) ≥ −tol`.
pub fn is_valid_cm(gamma: &DMatrix<f64>, tol: f64) -> Result<bool> {
    check_phase_space_matrix(gamma)?;
    if asymmetry(gamma) > tol {
        return Ok(false);
    }
    Ok(min_eigenvalue_gamma_plus_ij(gamma)? >= -tol)
}

/// Physicality test through the symplectic spectrum: `γ` symmetric, positive
/// definite and `ν_min ≥ 1 − tol`. Agrees with [`is_valid_cm`] away from the
/// tolerance band.
pub fn is_valid_cm_by_spectrum(gamma: &DMatrix<f64>, tol: f64) -> Result<bool> {
    check_phase_space_matrix(gamma)?;
    if asymmetry(gamma) > tol {
        return Ok(false);
    }
    match symplectic_spectrum(gamma) {
        Ok(spectrum) => Ok(spectrum.min() >= 1.0 - tol),
        Err(Error::InvalidInput(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

fn symmetric_cholesky(gamma: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    if asymmetry(gamma) > DEFAULT_TOL * gamma.amax().max(1.0) {
        return Err(Error::InvalidInput("matrix is not symmetric".into()));
    }
    let sym = (gamma + gamma.transpose()) * 0.5;
    Cholesky::new(sym)
        .map(|c| c.l())
        .ok_or_else(|| Error::InvalidInput("matrix is not positive definite".into()))
}

/// Symplectic eigenvalues as the moduli of the eigenvalues of `iJγ`.
///
/// With `γ = L Lᵀ`, `iJγ` is similar to the Hermitian matrix `i Lᵀ J L`, whose
/// spectrum is `{±ν_k}`; the positive half is returned in ascending order.
pub fn symplectic_spectrum(gamma: &DMatrix<f64>) -> Result<SymplecticSpectrum> {
    let n = check_phase_space_matrix(gamma)?;
    let l = symmetric_cholesky(gamma)?;
    let j = SymplecticForm::new(n)?.into_matrix();
    let a = l.transpose() * j * &l;
    let h = a.map(|x| Complex64::new(0.0, x));
    let mut eig: Vec<f64> = h.symmetric_eigenvalues().iter().copied().collect();
    eig.sort_by(f64::total_cmp);
    // eig = (−νₙ, …, −ν₁, ν₁, …, νₙ); average the pair to symmetrize rounding.
    let values = (0..n)
        .map(|k| 0.5 * (eig[n + k] - eig[n - 1 - k]))
        .collect();
    Ok(SymplecticSpectrum::new(values))
}

/// Symplectic eigenvalues as square roots of the eigenvalues of `−(Jγ)²`,
/// each of which appears twice. Independent of [`symplectic_spectrum`].
pub fn symplectic_spectrum_via_square(gamma: &DMatrix<f64>) -> Result<SymplecticSpectrum> {
    let n = check_phase_space_matrix(gamma)?;
    symmetric_cholesky(gamma)?;
    let j = SymplecticForm::new(n)?.into_matrix();
    let jg = j * gamma;
    let m = -(&jg * &jg);
    let mut eig: Vec<f64> = m.complex_eigenvalues().iter().map(|z| z.re).collect();
    eig.sort_by(f64::total_cmp);
    let values = eig
        .chunks(2)
        .map(|pair| (0.5 * (pair[0] + pair[1])).max(0.0).sqrt())
        .collect();
    Ok(SymplecticSpectrum::new(values))
}

/// Max-norm of `S J Sᵀ − J`.
pub fn symplectic_defect(s: &DMatrix<f64>) -> Result<f64> {
    let n = check_phase_space_matrix(s)?;
    let j = SymplecticForm::new(n)?.into_matrix();
    Ok((s * &j * s.transpose() - j).amax())
}

/// `true` iff `‖S J Sᵀ − J‖_max ≤ tol`.
pub fn is_symplectic(s: &DMatrix<f64>, tol: f64) -> Result<bool> {
    Ok(symplectic_defect(s)? <= tol)
}

/// Haar-random `n × n` unitary: QR of a complex Ginibre matrix with the
/// phases of `R`'s diagonal pushed into `Q`.
fn haar_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DMatrix<Complex64> {
    let z = DMatrix::from_fn(n, n, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re, im)
    });
    let qr = z.qr();
    let mut q = qr.q();
    let r = qr.r();
    for k in 0..n {
        let d = r[(k, k)];
        let norm = d.norm();
        let phase = if norm > 0.0 { d / norm } else { Complex64::new(1.0, 0.0) };
        for i in 0..n {
            q[(i, k)] *= phase;
        }
    }
    q
}

/// Real `2n × 2n` representation of a unitary acting on `a = (q + ip)/√2`.
/// The result is orthogonal and symplectic.
fn unitary_to_real(u: &DMatrix<Complex64>) -> DMatrix<f64> {
    let n = u.nrows();
    let mut k = DMatrix::zeros(2 * n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            let z = u[(r, c)];
            k[(2 * r, 2 * c)] = z.re;
            k[(2 * r, 2 * c + 1)] = -z.im;
            k[(2 * r + 1, 2 * c)] = z.im;
            k[(2 * r + 1, 2 * c + 1)] = z.re;
        }
    }
    k
}

/// Random orthogonal-symplectic (passive) transformation on `n` modes.
pub fn random_orthogonal_symplectic<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DMatrix<f64> {
    unitary_to_real(&haar_unitary(n, rng))
}

/// Euler-decomposed random symplectic `K₁ Z K₂` drawn from `rng`.
pub fn random_symplectic_with<R: Rng + ?Sized>(
    n: usize,
    squeeze_max: f64,
    rng: &mut R,
) -> Result<DMatrix<f64>> {
    if n == 0 {
        return Err(Error::InvalidDimension("need at least one mode".into()));
    }
    if !(squeeze_max >= 0.0) || !squeeze_max.is_finite() {
        return Err(Error::InvalidInput(format!(
            "squeeze_max must be finite and non-negative, got {squeeze_max}"
        )));
    }
    let k1 = random_orthogonal_symplectic(n, rng);
    let mut z = DMatrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        let r = squeeze_max * rng.random::<f64>();
        z[(2 * k, 2 * k)] = r.exp();
        z[(2 * k + 1, 2 * k + 1)] = (-r).exp();
    }
    let k2 = random_orthogonal_symplectic(n, rng);
    Ok(k1 * z * k2)
}

/// Seeded random symplectic matrix. The same `(n, squeeze_max, seed)` gives
/// the same matrix bit for bit.
pub fn random_symplectic(n: usize, squeeze_max: f64, seed: u64) -> Result<DMatrix<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_symplectic_with(n, squeeze_max, &mut rng)
}

/// Random local symplectic `S₁ ⊕ … ⊕ Sₙ`, one independent single-mode
/// symplectic per mode.
pub fn random_local_symplectic_with<R: Rng + ?Sized>(
    n: usize,
    squeeze_max: f64,
    rng: &mut R,
) -> Result<DMatrix<f64>> {
    if n == 0 {
        return Err(Error::InvalidDimension("need at least one mode".into()));
    }
    let mut s = DMatrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        let block = random_symplectic_with(1, squeeze_max, rng)?;
        s.view_mut((2 * k, 2 * k), (2, 2)).copy_from(&block);
    }
    Ok(s)
}

pub fn random_local_symplectic(n: usize, squeeze_max: f64, seed: u64) -> Result<DMatrix<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_local_symplectic_with(n, squeeze_max, &mut rng)
}
