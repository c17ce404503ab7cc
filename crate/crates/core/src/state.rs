//! Gaussian states described by their covariance matrix and displacement.

use nalgebra::{DMatrix, DVector, Matrix2, Matrix4};
use rand::Rng;

use crate::error::{Error, Result};
use crate::symplectic::{
    self, check_phase_space_matrix, min_eigenvalue_gamma_plus_ij, SymplecticForm,
    SymplecticSpectrum, DEFAULT_TOL,
};

/// An `n`-mode Gaussian state.
///
/// The displacement vector is carried along but never enters any
/// entanglement quantity: it can be removed by local displacements.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianState {
    cm: DMatrix<f64>,
    displacement: DVector<f64>,
}

impl GaussianState {
    /// Validates `γ + iJ ≥ 0` (within [`DEFAULT_TOL`]) and a finite displacement.
    pub fn new(cm: DMatrix<f64>, displacement: DVector<f64>) -> Result<Self> {
        let n = check_phase_space_matrix(&cm)?;
        if displacement.len() != 2 * n {
            return Err(Error::InvalidDimension(format!(
                "displacement has length {}, expected {}",
                displacement.len(),
                2 * n
            )));
        }
        if displacement.iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidInput("displacement has non-finite entries".into()));
        }
        if !symplectic::is_valid_cm(&cm, DEFAULT_TOL)? {
            return Err(Error::NotPhysical {
                min_eigenvalue: min_eigenvalue_gamma_plus_ij(&cm)?,
            });
        }
        Ok(Self { cm, displacement })
    }

    /// State with zero displacement.
    pub fn from_cm(cm: DMatrix<f64>) -> Result<Self> {
        let dim = cm.nrows();
        Self::new(cm, DVector::zeros(dim))
    }

    pub fn vacuum(modes: usize) -> Result<Self> {
        if modes == 0 {
            return Err(Error::InvalidDimension("need at least one mode".into()));
        }
        Ok(Self {
            cm: DMatrix::identity(2 * modes, 2 * modes),
            displacement: DVector::zeros(2 * modes),
        })
    }

    /// Two-mode squeezed vacuum with squeezing `r`:
    /// `α = β = cosh 2r · 1`, `δ = sinh 2r · diag(1, −1)`.
    pub fn two_mode_squeezed_vacuum(r: f64) -> Self {
        let (c, s) = ((2.0 * r).cosh(), (2.0 * r).sinh());
        #[rustfmt::skip]
        let cm = DMatrix::from_row_slice(4, 4, &[
            c, 0.0, s, 0.0,
            0.0, c, 0.0, -s,
            s, 0.0, c, 0.0,
            0.0, -s, 0.0, c,
        ]);
        Self {
            cm,
            displacement: DVector::zeros(4),
        }
    }

    /// Pure state `S Sᵀ` for a seeded random symplectic `S`.
    pub fn random_pure(modes: usize, squeeze_max: f64, seed: u64) -> Result<Self> {
        let s = symplectic::random_symplectic(modes, squeeze_max, seed)?;
        Ok(Self::pure_from_symplectic(&s))
    }

    pub fn random_pure_with<R: Rng + ?Sized>(
        modes: usize,
        squeeze_max: f64,
        rng: &mut R,
    ) -> Result<Self> {
        let s = symplectic::random_symplectic_with(modes, squeeze_max, rng)?;
        Ok(Self::pure_from_symplectic(&s))
    }

    fn pure_from_symplectic(s: &DMatrix<f64>) -> Self {
        let cm = s * s.transpose();
        let dim = cm.nrows();
        Self {
            cm: symmetrized(cm),
            displacement: DVector::zeros(dim),
        }
    }

    pub fn modes(&self) -> usize {
        self.cm.nrows() / 2
    }

    pub fn cm(&self) -> &DMatrix<f64> {
        &self.cm
    }

    pub fn displacement(&self) -> &DVector<f64> {
        &self.displacement
    }

    pub fn into_parts(self) -> (DMatrix<f64>, DVector<f64>) {
        (self.cm, self.displacement)
    }

    fn check_mode(&self, index: usize) -> Result<()> {
        if index >= self.modes() {
            return Err(Error::ModeOutOfRange {
                index,
                modes: self.modes(),
            });
        }
        Ok(())
    }

    /// `‖−JγJγ − 1‖_max`; zero for pure states.
    pub fn purity_deviation(&self) -> f64 {
        let j = SymplecticForm::new(self.modes())
            .expect("state has at least one mode")
            .into_matrix();
        let jg = j * &self.cm;
        let dim = self.cm.nrows();
        (-(&jg * &jg) - DMatrix::<f64>::identity(dim, dim)).amax()
    }

    pub fn is_pure(&self, tol: f64) -> bool {
        self.purity_deviation() <= tol
    }

    pub fn symplectic_spectrum(&self) -> Result<SymplecticSpectrum> {
        symplectic::symplectic_spectrum(&self.cm)
    }

    /// `S γ Sᵀ`, `S d` for a symplectic `S`.
    pub fn transformed(&self, s: &DMatrix<f64>) -> Result<Self> {
        if s.nrows() != self.cm.nrows() || s.ncols() != self.cm.ncols() {
            return Err(Error::InvalidDimension(format!(
                "transformation is {}×{}, state has dimension {}",
                s.nrows(),
                s.ncols(),
                self.cm.nrows()
            )));
        }
        Ok(Self {
            cm: symmetrized(s * &self.cm * s.transpose()),
            displacement: s * &self.displacement,
        })
    }

    /// Partial transposition of the listed modes: `γ ↦ F γ F` where `F` flips
    /// the sign of each listed mode's momentum. The result need not be a
    /// physical state, so it is not validated.
    pub fn partial_transpose(&self, transposed_modes: &[usize]) -> Result<Self> {
        let mut cm = self.cm.clone();
        let mut displacement = self.displacement.clone();
        let mut flipped = vec![false; self.modes()];
        for &k in transposed_modes {
            self.check_mode(k)?;
            if std::mem::replace(&mut flipped[k], true) {
                continue;
            }
            let p = 2 * k + 1;
            cm.row_mut(p).neg_mut();
            cm.column_mut(p).neg_mut();
            displacement[p] = -displacement[p];
        }
        Ok(Self { cm, displacement })
    }

    /// Partial trace: keeps the principal submatrix on `kept_modes`, in the
    /// order given.
    pub fn reduce(&self, kept_modes: &[usize]) -> Result<Self> {
        if kept_modes.is_empty() {
            return Err(Error::InvalidInput("cannot reduce to zero modes".into()));
        }
        let mut seen = vec![false; self.modes()];
        for &k in kept_modes {
            self.check_mode(k)?;
            if std::mem::replace(&mut seen[k], true) {
                return Err(Error::InvalidInput(format!("mode {k} listed twice")));
            }
        }
        let rows: Vec<usize> = kept_modes
            .iter()
            .flat_map(|&k| [2 * k, 2 * k + 1])
            .collect();
        let m = rows.len();
        let cm = DMatrix::from_fn(m, m, |r, c| self.cm[(rows[r], rows[c])]);
        let displacement = DVector::from_fn(m, |r, _| self.displacement[rows[r]]);
        Ok(Self { cm, displacement })
    }

    fn block(&self, i: usize, j: usize) -> Matrix2<f64> {
        Matrix2::from_fn(|r, c| self.cm[(2 * i + r, 2 * j + c)])
    }

    /// `α`, `β`, `δ` blocks of the reduced covariance matrix on `(pivot, partner)`.
    pub fn two_mode_blocks(&self, pivot: usize, partner: usize) -> Result<TwoModeBlocks> {
        self.check_mode(pivot)?;
        self.check_mode(partner)?;
        if pivot == partner {
            return Err(Error::InvalidInput(format!(
                "pivot and partner are both mode {pivot}"
            )));
        }
        Ok(TwoModeBlocks {
            alpha: self.block(pivot, pivot),
            beta: self.block(partner, partner),
            delta: self.block(pivot, partner),
        })
    }

    /// `Δ = −4 det δ` for the `(pivot, partner)` cross block.
    pub fn delta_invariant(&self, pivot: usize, partner: usize) -> Result<f64> {
        Ok(self.two_mode_blocks(pivot, partner)?.delta_invariant())
    }

    /// Determinant of the pivot mode's reduced covariance matrix.
    pub fn local_determinant(&self, mode: usize) -> Result<f64> {
        self.check_mode(mode)?;
        Ok(self.block(mode, mode).determinant())
    }

    /// `|det α + Σ_{l≠pivot} det δ_l − 1|`, which vanishes for pure states.
    pub fn purity_identity_residual(&self, pivot: usize) -> Result<f64> {
        self.purity_identity_residual_tol(pivot, DEFAULT_TOL)
    }

    pub fn purity_identity_residual_tol(&self, pivot: usize, tol: f64) -> Result<f64> {
        self.check_mode(pivot)?;
        let deviation = self.purity_deviation();
        if deviation > tol {
            return Err(Error::NotPure { deviation });
        }
        let sum: f64 = (0..self.modes())
            .map(|l| self.block(pivot, l).determinant())
            .sum();
        Ok((sum - 1.0).abs())
    }
}

fn symmetrized(m: DMatrix<f64>) -> DMatrix<f64> {
    (&m + m.transpose()) * 0.5
}

/// Blocks of a two-mode covariance matrix `[[α, δ], [δᵀ, β]]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoModeBlocks {
    pub alpha: Matrix2<f64>,
    pub beta: Matrix2<f64>,
    pub delta: Matrix2<f64>,
}

impl TwoModeBlocks {
    pub fn assemble(&self) -> Matrix4<f64> {
        let mut m = Matrix4::zeros();
        m.fixed_view_mut::<2, 2>(0, 0).copy_from(&self.alpha);
        m.fixed_view_mut::<2, 2>(0, 2).copy_from(&self.delta);
        m.fixed_view_mut::<2, 2>(2, 0).copy_from(&self.delta.transpose());
        m.fixed_view_mut::<2, 2>(2, 2).copy_from(&self.beta);
        m
    }

    pub fn delta_invariant(&self) -> f64 {
        -4.0 * self.delta.determinant()
    }
}
