//! Two-mode Gaussian tangle.
//!
//! Every two-mode covariance matrix can be brought by local symplectic
//! operations to the standard form
//!
//! ```text
//! α = diag(a, a),  β = diag(b, b),  δ = diag(c₊, c₋),  c₊ ≥ |c₋|
//! ```
//!
//! and every quantity in this module is a function of `(a, b, c₊, c₋)` only.
//! The mixed-state tangle is the convex roof over pure Gaussian
//! decompositions, which reduces to minimizing the local determinant of a
//! pure covariance matrix lying below `γ`:
//!
//! ```text
//! min det α⁽ᵖ⁾ = min_θ m(θ),  m(θ) = 1 + h₁(θ)² / h₂(θ)
//! h₁(θ) = ξ₋ + √η cos θ
//! h₂(θ) = 2(ab − c₋²)(a² + b² + 2c₊c₋) − (ζ/√η) cos θ + (a² − b²) √(1 − ξ₊²/η^k) sin θ
//! ```
//!
//! The exponent `k` on `η` in the sine term is selectable, see
//! [`RadicandExponent`]. At `θ = π` the sine term vanishes, which gives the
//! closed-form upper bound `τ ≤ f(4ζ₁²/ζ₂) ≤ f(Δ)` with `Δ = −4c₊c₋`.
//!
//! Known limitation: away from `c₊ = −c₋`, `min_θ m(θ)` as written can fall
//! below the true minimum of `det α⁽ᵖ⁾`, and even below the lower bound
//! `((ν̃ + 1/ν̃)/2)²` set by the smallest partially transposed symplectic
//! eigenvalue `ν̃`. For `(a, b, c₊, c₋) = (2, 2, 1.5, −1)` the exact value is
//! `9/8` while `min m = 1.0804`. Mixed-state tangles from this module are then
//! underestimates. The brute-force comparison lives in the `acceptance` test.

use std::f64::consts::PI;

use nalgebra::{DMatrix, Matrix2};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::optimize::{minimize_periodic, Minimum};
use crate::state::GaussianState;
use crate::symplectic::{self, min_eigenvalue_gamma_plus_ij, DEFAULT_TOL};
use crate::tangle;

/// Number of equispaced points in the coarse `θ` scan.
pub const THETA_GRID: usize = 720;

/// Default relative tolerance of the golden-section refinement in `θ`.
pub const DEFAULT_REL_TOL: f64 = 1e-10;

/// Maximum relative disagreement tolerated between the two sine-term variants.
pub const VARIANT_AGREEMENT_TOL: f64 = 1e-4;

/// Exponent of `η` inside the sine-term radicand `√(1 − ξ₊²/η^k)` of `h₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RadicandExponent {
    /// `1 − ξ₊²/η²`.
    #[default]
    Squared,
    /// `1 − ξ₊²/η`, the degree-balanced variant.
    Linear,
}

/// Tolerances for the two-mode engine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoModeOptions {
    /// Band used by the physicality, separability and purity decisions.
    pub tol: f64,
    /// Relative tolerance of the `θ` refinement.
    pub rel_tol: f64,
    pub exponent: RadicandExponent,
}

impl Default for TwoModeOptions {
    fn default() -> Self {
        Self {
            tol: DEFAULT_TOL,
            rel_tol: DEFAULT_REL_TOL,
            exponent: RadicandExponent::default(),
        }
    }
}

/// Local symplectic invariants of a two-mode covariance matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LocalInvariants {
    pub det_alpha: f64,
    pub det_beta: f64,
    pub det_delta: f64,
    pub det_gamma: f64,
}

/// Standard-form parameters `(a, b, c₊, c₋)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StandardForm {
    pub a: f64,
    pub b: f64,
    pub c_plus: f64,
    pub c_minus: f64,
}

/// `ξ±`, `η`, `ζ` of a standard form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct XiEtaZeta {
    pub xi_plus: f64,
    pub xi_minus: f64,
    pub eta: f64,
    pub zeta: f64,
}

/// Minimizer and minimum of `m(θ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MinM {
    pub theta: f64,
    pub m: f64,
}

/// `(√det m, m^{−1/2})` of a positive-definite 2×2 block.
fn normalizer(m: &Matrix2<f64>) -> Result<(f64, Matrix2<f64>)> {
    let eig = m.symmetric_eigen();
    if eig.eigenvalues.iter().any(|&l| !(l > 0.0)) {
        return Err(Error::Inconsistent(format!(
            "local block has non-positive eigenvalues {:?}",
            eig.eigenvalues.as_slice()
        )));
    }
    let inv_sqrt = Matrix2::from_diagonal(&eig.eigenvalues.map(|l| 1.0 / l.sqrt()));
    let det = eig.eigenvalues[0] * eig.eigenvalues[1];
    Ok((det.sqrt(), eig.eigenvectors * inv_sqrt * eig.eigenvectors.transpose()))
}

impl StandardForm {
    pub fn new(a: f64, b: f64, c_plus: f64, c_minus: f64) -> Self {
        Self {
            a,
            b,
            c_plus,
            c_minus,
        }
    }

    /// Standard form of a physical 4×4 covariance matrix.
    ///
    /// The local symplectics `√a·α^{−1/2}` and `√b·β^{−1/2}` bring the
    /// diagonal blocks to `a·1` and `b·1`; the singular values of the
    /// transformed off-diagonal block are `c₊ ≥ |c₋|`, and `c₋` carries the
    /// sign of `det δ`. This keeps `c₊ = |c₋|` exact to rounding, where the
    /// route through the invariants loses half the digits.
    pub fn from_cm(cm: &DMatrix<f64>) -> Result<Self> {
        Self::from_cm_tol(cm, DEFAULT_TOL)
    }

    pub fn from_cm_tol(cm: &DMatrix<f64>, tol: f64) -> Result<Self> {
        if cm.nrows() != 4 || cm.ncols() != 4 {
            return Err(Error::InvalidDimension(format!(
                "standard form needs a 4×4 covariance matrix, got {}×{}",
                cm.nrows(),
                cm.ncols()
            )));
        }
        if !symplectic::is_valid_cm(cm, tol)? {
            return Err(Error::NotPhysical {
                min_eigenvalue: min_eigenvalue_gamma_plus_ij(cm)?,
            });
        }
        let block = |i: usize, j: usize| Matrix2::from_fn(|r, c| cm[(2 * i + r, 2 * j + c)]);
        let (alpha, beta, delta) = (block(0, 0), block(1, 1), block(0, 1));
        let (a, alpha_isqrt) = normalizer(&alpha)?;
        let (b, beta_isqrt) = normalizer(&beta)?;
        let off = alpha_isqrt * delta * beta_isqrt * (a * b).sqrt();
        let sv = off.singular_values();
        let (hi, lo) = (sv[0].max(sv[1]), sv[0].min(sv[1]));
        let det_delta = delta.determinant();
        let c_minus = if det_delta < 0.0 { -lo } else { lo };
        Ok(Self::new(a, b, hi, c_minus))
    }

    /// `a`, `b` and `c±²` from the local invariants: `a = √det α`,
    /// `b = √det β`, and `c₊²`, `c₋²` the roots of
    /// `u + v = (a²b² + det δ² − det γ)/(ab)`, `uv = det δ²`, with `c₋`
    /// carrying the sign of `det δ`.
    pub fn from_invariants(inv: &LocalInvariants, tol: f64) -> Result<Self> {
        let a = inv.det_alpha.max(0.0).sqrt();
        let b = inv.det_beta.max(0.0).sqrt();
        let ab = a * b;
        if !(ab > 0.0) {
            return Err(Error::Inconsistent(format!(
                "local determinants {} and {} must be positive",
                inv.det_alpha, inv.det_beta
            )));
        }
        let i3 = inv.det_delta;
        let sum = (ab * ab + i3 * i3 - inv.det_gamma) / ab;
        let product = i3 * i3;
        let mut disc = sum * sum - 4.0 * product;
        let scale = (sum * sum).max(1.0);
        if disc < -tol * scale || sum < -tol * scale.sqrt() {
            return Err(Error::Inconsistent(format!(
                "standard-form quadratic has no real non-negative roots (sum {sum}, product {product})"
            )));
        }
        disc = disc.max(0.0);
        let u = 0.5 * (sum.max(0.0) + disc.sqrt());
        let v = if u > 0.0 { product / u } else { 0.0 };
        let c_minus = if i3 == 0.0 {
            0.0
        } else {
            i3.signum() * v.sqrt()
        };
        Ok(Self::new(a, b, u.sqrt(), c_minus))
    }

    /// Standard form of a two-mode state.
    pub fn from_state(state: &GaussianState) -> Result<Self> {
        if state.modes() != 2 {
            return Err(Error::InvalidDimension(format!(
                "expected a two-mode state, got {} modes",
                state.modes()
            )));
        }
        Self::from_cm(state.cm())
    }

    /// Standard form of the reduced state on `(pivot, partner)`.
    pub fn of_pair(state: &GaussianState, pivot: usize, partner: usize) -> Result<Self> {
        let blocks = state.two_mode_blocks(pivot, partner)?;
        let m = blocks.assemble();
        Self::from_cm(&DMatrix::from_column_slice(4, 4, m.as_slice()))
    }

    /// The covariance matrix `[[a·1, diag(c₊, c₋)], [diag(c₊, c₋), b·1]]`.
    pub fn to_cm(&self) -> DMatrix<f64> {
        let (a, b, cp, cm) = (self.a, self.b, self.c_plus, self.c_minus);
        #[rustfmt::skip]
        let m = DMatrix::from_row_slice(4, 4, &[
            a, 0.0, cp, 0.0,
            0.0, a, 0.0, cm,
            cp, 0.0, b, 0.0,
            0.0, cm, 0.0, b,
        ]);
        m
    }

    pub fn invariants(&self) -> LocalInvariants {
        LocalInvariants {
            det_alpha: self.a * self.a,
            det_beta: self.b * self.b,
            det_delta: self.c_plus * self.c_minus,
            det_gamma: self.det_gamma(),
        }
    }

    /// `det γ = (ab − c₊²)(ab − c₋²)`.
    pub fn det_gamma(&self) -> f64 {
        let ab = self.a * self.b;
        (ab - self.c_plus * self.c_plus) * (ab - self.c_minus * self.c_minus)
    }

    /// `Δ = −4 det δ = −4c₊c₋`.
    pub fn delta(&self) -> f64 {
        -4.0 * self.c_plus * self.c_minus
    }

    /// Scale of degree-four expressions, for tolerance bands.
    fn quartic_scale(&self) -> f64 {
        (self.a * self.b).powi(2).max(1.0)
    }

    /// `a ≥ 1`, `b ≥ 1`, `ab − c±² ≥ 1` and `det γ + 1 ≥ a² + b² + 2c₊c₋`,
    /// each within `tol` (scaled to the size of the expression).
    pub fn check_physical(&self, tol: f64) -> bool {
        let (a, b, cp, cm) = (self.a, self.b, self.c_plus, self.c_minus);
        let ab = a * b;
        let all_finite = [a, b, cp, cm].iter().all(|x| x.is_finite());
        all_finite
            && a >= 1.0 - tol
            && b >= 1.0 - tol
            && ab - cp * cp >= 1.0 - tol * ab.max(1.0)
            && ab - cm * cm >= 1.0 - tol * ab.max(1.0)
            && self.det_gamma() + 1.0 >= a * a + b * b + 2.0 * cp * cm - tol * self.quartic_scale()
    }

    fn require_physical(&self, tol: f64) -> Result<()> {
        if self.check_physical(tol) {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "standard form {self:?} violates the physicality conditions"
            )))
        }
    }

    /// `a² + b² − 2c₊c₋ − (det γ + 1)`; positive exactly for entangled states.
    pub fn separability_margin(&self) -> f64 {
        let (a, b) = (self.a, self.b);
        a * a + b * b - 2.0 * self.c_plus * self.c_minus - (self.det_gamma() + 1.0)
    }

    /// PPT criterion `(ab − c₊²)(ab − c₋²) + 1 < a² + b² − 2c₊c₋`. Margins
    /// inside the tolerance band count as separable.
    pub fn is_entangled(&self, tol: f64) -> Result<bool> {
        self.require_physical(tol)?;
        let entangled = self.separability_margin() > tol * self.quartic_scale();
        if entangled && self.c_minus >= 0.0 {
            return Err(Error::Inconsistent(format!(
                "entangled standard form with c₋ = {} ≥ 0",
                self.c_minus
            )));
        }
        Ok(entangled)
    }

    fn require_entangled(&self, tol: f64) -> Result<()> {
        if self.is_entangled(tol)? {
            Ok(())
        } else {
            Err(Error::Separable)
        }
    }

    fn xez_unchecked(&self) -> XiEtaZeta {
        let (a, b, cp, cm) = (self.a, self.b, self.c_plus, self.c_minus);
        let ab = a * b;
        let w = ab - cm * cm;
        let s2 = a * a + b * b;
        XiEtaZeta {
            xi_plus: cp * w + cm,
            xi_minus: cp * w - cm,
            eta: (a - b * w) * (b - a * w),
            zeta: 2.0 * ab * cm.powi(3) + s2 * cp * cm * cm + (s2 - 2.0 * ab * ab) * cm
                - ab * (s2 - 2.0) * cp,
        }
    }

    /// `ξ± = c₊(ab − c₋²) ± c₋`, `η = [a − b(ab − c₋²)][b − a(ab − c₋²)]`,
    /// `ζ = 2abc₋³ + (a² + b²)c₊c₋² + (a² + b² − 2a²b²)c₋ − ab(a² + b² − 2)c₊`.
    pub fn xi_eta_zeta(&self, tol: f64) -> Result<XiEtaZeta> {
        self.require_entangled(tol)?;
        Ok(self.xez_unchecked())
    }

    fn m_function(&self, tol: f64, exponent: RadicandExponent) -> Result<MFunction> {
        let xez = self.xi_eta_zeta(tol)?;
        MFunction::new(self, &xez, tol, exponent)
    }

    /// `m(θ) = 1 + h₁²(θ)/h₂(θ)` with the default sine-term exponent.
    pub fn m_theta(&self, theta: f64) -> Result<f64> {
        self.m_theta_with(theta, &TwoModeOptions::default())
    }

    pub fn m_theta_with(&self, theta: f64, opts: &TwoModeOptions) -> Result<f64> {
        self.m_function(opts.tol, opts.exponent)?.eval(theta)
    }

    /// Global minimum of `m` over `[0, 2π)`: a 720-point scan refined by
    /// golden-section search to relative tolerance `rel_tol`.
    pub fn min_m(&self, rel_tol: f64) -> Result<MinM> {
        self.min_m_with(&TwoModeOptions {
            rel_tol,
            ..TwoModeOptions::default()
        })
    }

    pub fn min_m_with(&self, opts: &TwoModeOptions) -> Result<MinM> {
        let m = self.m_function(opts.tol, opts.exponent)?;
        let Minimum { x, value, .. } =
            minimize_periodic(|theta| m.eval(theta), THETA_GRID, opts.rel_tol)?;
        Ok(MinM { theta: x, m: value })
    }

    /// Whether the reduced state is pure within `tol`: `det γ = 1` or `ξ₊ = 0`.
    pub fn is_pure(&self, tol: f64) -> bool {
        (self.det_gamma() - 1.0).abs() <= tol * self.quartic_scale()
            || self.xez_unchecked().xi_plus.abs() <= tol
    }

    /// Gaussian tangle of the two-mode state.
    pub fn mixed_tangle(&self) -> Result<f64> {
        self.mixed_tangle_with(&TwoModeOptions::default())
    }

    pub fn mixed_tangle_with(&self, opts: &TwoModeOptions) -> Result<f64> {
        Ok(self.tangle_parts(opts)?.0)
    }

    /// Tangle together with the minimizer when the `m(θ)` machinery was used.
    fn tangle_parts(&self, opts: &TwoModeOptions) -> Result<(f64, Option<MinM>)> {
        if !self.is_entangled(opts.tol)? {
            return Ok((0.0, None));
        }
        if self.is_pure(opts.tol) {
            let t = (4.0 * self.a * self.a - 4.0).max(0.0);
            return Ok((tangle::f(t)?, None));
        }
        let min = self.min_m_with(opts)?;
        let t = (4.0 * min.m - 4.0).max(0.0);
        Ok((tangle::f(t)?, Some(min)))
    }

    /// Tangle, the `θ = π` bound, the `Δ` bound, and the slack of each
    /// inequality used to order them.
    pub fn bound_report(&self) -> Result<TangleBoundReport> {
        self.bound_report_with(&TwoModeOptions::default())
    }

    pub fn bound_report_with(&self, opts: &TwoModeOptions) -> Result<TangleBoundReport> {
        self.require_entangled(opts.tol)?;
        let delta = self.delta();
        let bound_delta = tangle::f(delta.max(0.0))?;
        let (tau, min) = self.tangle_parts(opts)?;
        let mut report = TangleBoundReport {
            standard_form: *self,
            delta,
            tau,
            bound_zeta: None,
            bound_delta,
            m_star: min.map(|m| m.m),
            theta_star: min.map(|m| m.theta),
            zeta1: None,
            zeta2: None,
            zeta2_prime: None,
            pure_reduced: min.is_none(),
            variants_agree: None,
            appendix: None,
        };
        if report.pure_reduced {
            return Ok(report);
        }

        let xez = self.xez_unchecked();
        let (a, b, cp, cm) = (self.a, self.b, self.c_plus, self.c_minus);
        let m = MFunction::new(self, &xez, opts.tol, opts.exponent)?;
        let zeta1 = m.h1(PI);
        let zeta2 = m.h2(PI);
        let zeta2_prime = 2.0 * (a * a + b * b + 2.0 * cp * cm) + xez.zeta / xez.xi_plus;
        let ratio = zeta1 * zeta1 / zeta2;
        report.zeta1 = Some(zeta1);
        report.zeta2 = Some(zeta2);
        report.zeta2_prime = Some(zeta2_prime);
        report.bound_zeta = Some(tangle::f((4.0 * ratio).max(0.0))?);
        report.appendix = Some(AppendixChecks {
            zeta1_positive: zeta1,
            zeta1_below_minus_two_c_minus: -2.0 * cm - zeta1,
            minus_two_c_minus_below_root: 2.0 * (-cp * cm).max(0.0).sqrt() + 2.0 * cm,
            zeta2_above_zeta2_prime: zeta2 - zeta2_prime,
            zeta2_prime_at_least_four: zeta2_prime - 4.0,
            ratio_below_minus_c_plus_c_minus: -cp * cm - ratio,
        });

        let other = match opts.exponent {
            RadicandExponent::Squared => RadicandExponent::Linear,
            RadicandExponent::Linear => RadicandExponent::Squared,
        };
        let alt = self.min_m_with(&TwoModeOptions {
            exponent: other,
            ..*opts
        })?;
        let base = report.m_star.expect("mixed branch has a minimizer");
        report.variants_agree = Some((alt.m - base).abs() <= VARIANT_AGREEMENT_TOL * base);
        Ok(report)
    }
}

/// Precomputed coefficients of `m(θ)`.
struct MFunction {
    xi_minus: f64,
    sqrt_eta: f64,
    h2_const: f64,
    h2_cos: f64,
    h2_sin: f64,
}

impl MFunction {
    fn new(sf: &StandardForm, xez: &XiEtaZeta, tol: f64, exponent: RadicandExponent) -> Result<Self> {
        let (a, b, cp, cm) = (sf.a, sf.b, sf.c_plus, sf.c_minus);
        let eta_scale = (a * b).powi(3).max(1.0);
        if xez.eta < -tol * eta_scale {
            return Err(Error::Evaluation(format!("η = {} is negative", xez.eta)));
        }
        let sqrt_eta = xez.eta.max(0.0).sqrt();
        if !(sqrt_eta > 0.0) {
            return Err(Error::Evaluation(
                "η vanishes; the reduced state is pure".into(),
            ));
        }
        let eta_power = match exponent {
            RadicandExponent::Squared => xez.eta * xez.eta,
            RadicandExponent::Linear => xez.eta,
        };
        let radicand = (1.0 - xez.xi_plus * xez.xi_plus / eta_power).clamp(0.0, 1.0);
        Ok(Self {
            xi_minus: xez.xi_minus,
            sqrt_eta,
            h2_const: 2.0 * (a * b - cm * cm) * (a * a + b * b + 2.0 * cp * cm),
            h2_cos: -xez.zeta / sqrt_eta,
            h2_sin: (a * a - b * b) * radicand.sqrt(),
        })
    }

    fn h1(&self, theta: f64) -> f64 {
        self.xi_minus + self.sqrt_eta * theta.cos()
    }

    fn h2(&self, theta: f64) -> f64 {
        self.h2_const + self.h2_cos * theta.cos() + self.h2_sin * theta.sin()
    }

    fn eval(&self, theta: f64) -> Result<f64> {
        let h2 = self.h2(theta);
        if !(h2 > 0.0) {
            return Err(Error::Evaluation(format!("h₂({theta}) = {h2} is not positive")));
        }
        let h1 = self.h1(theta);
        Ok(1.0 + h1 * h1 / h2)
    }
}

/// Slack of each inequality in the chain `ζ₁²/ζ₂ ≤ −c₊c₋`. An inequality
/// holds when its slack is non-negative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AppendixChecks {
    /// `ζ₁ > 0`.
    pub zeta1_positive: f64,
    /// `ζ₁ ≤ ξ₋ − ξ₊ = −2c₋`.
    pub zeta1_below_minus_two_c_minus: f64,
    /// `−2c₋ ≤ 2√(−c₊c₋)`.
    pub minus_two_c_minus_below_root: f64,
    /// `ζ₂ ≥ ζ₂′`.
    pub zeta2_above_zeta2_prime: f64,
    /// `ζ₂′ ≥ 4`.
    pub zeta2_prime_at_least_four: f64,
    /// `ζ₁²/ζ₂ ≤ −c₊c₋`.
    pub ratio_below_minus_c_plus_c_minus: f64,
}

impl AppendixChecks {
    pub fn slacks(&self) -> [(&'static str, f64); 6] {
        [
            ("zeta1 > 0", self.zeta1_positive),
            ("zeta1 <= -2c-", self.zeta1_below_minus_two_c_minus),
            ("-2c- <= 2 sqrt(-c+c-)", self.minus_two_c_minus_below_root),
            ("zeta2 >= zeta2'", self.zeta2_above_zeta2_prime),
            ("zeta2' >= 4", self.zeta2_prime_at_least_four),
            ("zeta1^2/zeta2 <= -c+c-", self.ratio_below_minus_c_plus_c_minus),
        ]
    }

    /// Every slack is at least `−tol`, and `ζ₁` is strictly positive.
    pub fn all_hold(&self, tol: f64) -> bool {
        self.zeta1_positive > 0.0 && self.slacks().iter().all(|(_, s)| *s >= -tol)
    }

    pub fn min_slack(&self) -> f64 {
        self.slacks().iter().map(|(_, s)| *s).fold(f64::INFINITY, f64::min)
    }
}

/// Tangle of one entangled two-mode reduction and its upper bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TangleBoundReport {
    pub standard_form: StandardForm,
    /// `Δ = −4c₊c₋`.
    pub delta: f64,
    pub tau: f64,
    /// `f(4ζ₁²/ζ₂)`; absent for pure reduced states, where `η = 0`.
    pub bound_zeta: Option<f64>,
    /// `f(Δ)`.
    pub bound_delta: f64,
    pub m_star: Option<f64>,
    pub theta_star: Option<f64>,
    pub zeta1: Option<f64>,
    pub zeta2: Option<f64>,
    pub zeta2_prime: Option<f64>,
    /// The reduced state is pure and the tangle was taken from `f(4a² − 4)`.
    pub pure_reduced: bool,
    /// The minimum of `m` agrees for both sine-term exponents.
    pub variants_agree: Option<bool>,
    pub appendix: Option<AppendixChecks>,
}

impl TangleBoundReport {
    /// `τ ≤ f(4ζ₁²/ζ₂) + tol` and `f(4ζ₁²/ζ₂) ≤ f(Δ) + tol`; on the pure
    /// path `τ ≤ f(Δ) + tol`.
    pub fn chain_holds(&self, tol: f64) -> bool {
        match self.bound_zeta {
            Some(bz) => self.tau <= bz + tol && bz <= self.bound_delta + tol,
            None => self.tau <= self.bound_delta + tol,
        }
    }
}
