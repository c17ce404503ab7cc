//! Shared helpers for the integration suites, including the brute-force
//! convex-roof oracle. Nothing here calls into the `m(θ)` machinery.

#![allow(dead_code)]

use gaussian_tangle::two_mode::StandardForm;
use gaussian_tangle::{GaussianState, DEFAULT_TOL};
use nalgebra::{DMatrix, Matrix2, Matrix4, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

pub fn to_matrix4(m: &DMatrix<f64>) -> Matrix4<f64> {
    Matrix4::from_fn(|r, c| m[(r, c)])
}

/// Entangled, genuinely mixed two-mode reductions of random pure 3-mode
/// states, with the global state and the pair they came from.
pub fn entangled_reductions(count: usize, squeeze_max: f64, seed: u64) -> Vec<(GaussianState, usize, usize)> {
    let mut out = Vec::with_capacity(count);
    let mut s = seed;
    while out.len() < count {
        let state = GaussianState::random_pure(3, squeeze_max, s).unwrap();
        s += 1;
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let sf = StandardForm::of_pair(&state, i, j).unwrap();
            if sf.is_entangled(DEFAULT_TOL).unwrap() && !sf.is_pure(1e-6) {
                out.push((state.clone(), i, j));
                break;
            }
        }
    }
    out
}

fn rotation(t: f64) -> Matrix2<f64> {
    let (s, c) = t.sin_cos();
    Matrix2::new(c, -s, s, c)
}

/// `R(φ) diag(e^s, e^{−s}) R(ψ)`.
fn single_mode_symplectic(phi: f64, sq: f64, psi: f64) -> Matrix2<f64> {
    rotation(phi) * Matrix2::new(sq.exp(), 0.0, 0.0, (-sq).exp()) * rotation(psi)
}

fn inverse_det_one(m: &Matrix2<f64>) -> Matrix2<f64> {
    Matrix2::new(m[(1, 1)], -m[(0, 1)], -m[(1, 0)], m[(0, 0)])
}

fn tmsv(r: f64) -> (Matrix4<f64>, Matrix4<f64>) {
    let (c, s) = ((2.0 * r).cosh(), (2.0 * r).sinh());
    #[rustfmt::skip]
    let t = Matrix4::new(
        c, 0.0, s, 0.0,
        0.0, c, 0.0, -s,
        s, 0.0, c, 0.0,
        0.0, -s, 0.0, c,
    );
    #[rustfmt::skip]
    let dt = Matrix4::new(
        s, 0.0, c, 0.0,
        0.0, s, 0.0, -c,
        c, 0.0, s, 0.0,
        0.0, -c, 0.0, s,
    ) * 2.0;
    (t, dt)
}

/// Brute-force minimum of `det α⁽ᵖ⁾` over pure two-mode covariance matrices
/// `γ⁽ᵖ⁾ ≤ γ`.
///
/// Pure states are parametrized as `L T(r) Lᵀ` with `L = S₁ ⊕ S₂` local and
/// `T(r)` a two-mode squeezed vacuum, so `det α⁽ᵖ⁾ = cosh² 2r`. For fixed
/// `L`, `h(r) = λ_max(T(r) − L⁻¹γL⁻ᵀ)` is convex in `r`, so the feasible
/// squeezings form an interval whose nearest end is found by Newton's method
/// from `r = 0`. That end is then minimized over the six parameters of `L` by
/// multistart Nelder–Mead.
///
/// The search needs a feasible set with interior. Reductions of pure
/// three-mode states have a unit symplectic eigenvalue, which pins every
/// feasible `γ⁽ᵖ⁾` to a lower-dimensional family; use [`PurificationOracle`]
/// for those.
pub struct RoofOracle {
    gamma: Matrix4<f64>,
    r_max: f64,
}

impl RoofOracle {
    pub fn new(gamma: &DMatrix<f64>) -> Self {
        let g = to_matrix4(gamma);
        let det_a = g.fixed_view::<2, 2>(0, 0).determinant();
        let det_b = g.fixed_view::<2, 2>(2, 2).determinant();
        // γ⁽ᵖ⁾ ≤ γ implies det α⁽ᵖ⁾ ≤ det α and det β⁽ᵖ⁾ ≤ det β.
        let r_max = 0.5 * det_a.min(det_b).sqrt().acosh();
        Self { gamma: g, r_max }
    }

    fn transformed(&self, x: &[f64]) -> Matrix4<f64> {
        let s1 = inverse_det_one(&single_mode_symplectic(x[0], x[1], x[2]));
        let s2 = inverse_det_one(&single_mode_symplectic(x[3], x[4], x[5]));
        let mut l = Matrix4::zeros();
        l.fixed_view_mut::<2, 2>(0, 0).copy_from(&s1);
        l.fixed_view_mut::<2, 2>(2, 2).copy_from(&s2);
        let g = l * self.gamma * l.transpose();
        (g + g.transpose()) * 0.5
    }

    /// `(h(r), h'(r))` for the transformed target `g`.
    fn h(g: &Matrix4<f64>, r: f64) -> (f64, f64) {
        let (t, dt) = tmsv(r);
        let eig = SymmetricEigen::new(t - g);
        let (k, value) = eig
            .eigenvalues
            .iter()
            .copied()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |best, (i, v)| if v > best.1 { (i, v) } else { best });
        let v = eig.eigenvectors.column(k);
        (value, (v.transpose() * dt * v)[(0, 0)])
    }

    /// Smallest feasible `|r|` for local parameters `x`, as `cosh² 2r`, or a
    /// penalty above every feasible value.
    ///
    /// `h(0) > 0` for entangled `γ`; Newton's method on the convex `h`, started
    /// at 0 and moving downhill, never overshoots the nearest root.
    pub fn objective(&self, x: &[f64]) -> f64 {
        let g = self.transformed(x);
        let penalty_base = (2.0 * self.r_max).cosh().powi(2) + 1.0;
        let (mut h, mut dh) = Self::h(&g, 0.0);
        if h <= 0.0 {
            // Product vacuum fits below γ: separable.
            return 1.0;
        }
        if dh == 0.0 {
            return penalty_base + self.min_h(&g);
        }
        let direction = -dh.signum();
        let mut r: f64 = 0.0;
        for _ in 0..200 {
            if dh * direction >= 0.0 || r.abs() > self.r_max {
                return penalty_base + self.min_h(&g);
            }
            let step = -h / dh;
            r += step;
            let next = Self::h(&g, r);
            h = next.0;
            dh = next.1;
            if h <= 1e-15 || step.abs() <= 1e-16 * r.abs().max(1e-300) {
                break;
            }
        }
        if h > 1e-9 {
            return penalty_base + h;
        }
        (2.0 * r).cosh().powi(2)
    }

    fn min_h(&self, g: &Matrix4<f64>) -> f64 {
        let reach = self.r_max.max(1e-3) * 2.0;
        let (mut a, mut b) = (-reach, reach);
        let inv_phi = 0.5 * (5f64.sqrt() - 1.0);
        for _ in 0..60 {
            let x1 = b - inv_phi * (b - a);
            let x2 = a + inv_phi * (b - a);
            if Self::h(g, x1).0 <= Self::h(g, x2).0 {
                b = x2;
            } else {
                a = x1;
            }
        }
        Self::h(g, 0.5 * (a + b)).0
    }

    /// `min_r h(r)` for local parameters `x`; negative iff some squeezing fits.
    pub fn infeasibility(&self, x: &[f64]) -> f64 {
        self.min_h(&self.transformed(x))
    }

    /// Multistart minimization; returns the smallest `det α⁽ᵖ⁾` found.
    ///
    /// Starts that are infeasible are first pushed into the feasible region
    /// by minimizing [`Self::infeasibility`].
    pub fn minimize(&self, starts: usize, seed: u64) -> f64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let penalty_base = (2.0 * self.r_max).cosh().powi(2) + 1.0;
        let mut best = (vec![0.0; 6], f64::INFINITY);
        for k in 0..starts {
            let mut x0: Vec<f64> = if k == 0 {
                vec![0.0; 6]
            } else {
                (0..6).map(|_| rng.sample::<f64, _>(StandardNormal)).collect()
            };
            if self.objective(&x0) >= penalty_base {
                let (x, v) = nelder_mead(|x| self.infeasibility(x).max(-1e-3), &x0, 0.3, 3000);
                if v >= 0.0 {
                    continue;
                }
                x0 = x;
            }
            let (x, v) = nelder_mead(|x| self.objective(x), &x0, 0.2, 4000);
            if v < best.1 {
                best = (x, v);
            }
        }
        // Polish the winner with fresh simplices until it stops improving.
        for scale in [0.05, 0.01, 0.002, 0.0005, 0.0001] {
            let (x, v) = nelder_mead(|x| self.objective(x), &best.0, scale, 4000);
            if v < best.1 {
                best = (x, v);
            }
        }
        best.1
    }
}

/// Plain Nelder–Mead with standard coefficients.
pub fn nelder_mead<F: Fn(&[f64]) -> f64>(
    func: F,
    x0: &[f64],
    step: f64,
    max_evals: usize,
) -> (Vec<f64>, f64) {
    let n = x0.len();
    let mut simplex: Vec<(Vec<f64>, f64)> = (0..=n)
        .map(|i| {
            let mut x = x0.to_vec();
            if i > 0 {
                x[i - 1] += step;
            }
            let v = func(&x);
            (x, v)
        })
        .collect();
    let mut evals = n + 1;
    while evals < max_evals {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let spread = simplex[n].1 - simplex[0].1;
        let size = simplex
            .iter()
            .skip(1)
            .map(|(x, _)| x.iter().zip(&simplex[0].0).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max))
            .fold(0.0, f64::max);
        if spread.abs() <= 1e-15 * simplex[0].1.abs().max(1e-300) && size < 1e-10 {
            break;
        }
        if size < 1e-12 {
            break;
        }
        let centroid: Vec<f64> = (0..n)
            .map(|d| simplex[..n].iter().map(|(x, _)| x[d]).sum::<f64>() / n as f64)
            .collect();
        let point = |t: f64| -> Vec<f64> {
            centroid
                .iter()
                .zip(&simplex[n].0)
                .map(|(c, w)| c + t * (c - w))
                .collect()
        };
        let xr = point(1.0);
        let fr = func(&xr);
        evals += 1;
        if fr < simplex[0].1 {
            let xe = point(2.0);
            let fe = func(&xe);
            evals += 1;
            simplex[n] = if fe < fr { (xe, fe) } else { (xr, fr) };
        } else if fr < simplex[n - 1].1 {
            simplex[n] = (xr, fr);
        } else {
            let (xc, fc) = if fr < simplex[n].1 {
                let xc = point(0.5);
                let fc = func(&xc);
                (xc, fc)
            } else {
                let xc = point(-0.5);
                let fc = func(&xc);
                (xc, fc)
            };
            evals += 1;
            if fc < simplex[n].1.min(fr) {
                simplex[n] = (xc, fc);
            } else {
                let best = simplex[0].0.clone();
                for item in simplex.iter_mut().skip(1) {
                    let x: Vec<f64> = item.0.iter().zip(&best).map(|(x, b)| b + 0.5 * (x - b)).collect();
                    let v = func(&x);
                    *item = (x, v);
                }
                evals += n;
            }
        }
    }
    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    simplex.swap_remove(0)
}

/// Brute-force minimum of `det α⁽ᵖ⁾` for a two-mode reduction of a pure
/// three-mode state.
///
/// Every pure `γ⁽ᵖ⁾ ≤ γ_AB` arises from a pure Gaussian measurement `σ` on
/// the purifying mode C, as the conditional covariance
/// `γ⁽ᵖ⁾ = A − C (B + σ)⁻¹ Cᵀ`. With `σ = R(φ) diag(1/μ, μ) R(φ)ᵀ` the
/// search space is the compact strip `φ ∈ [0, π)`, `μ ∈ [0, 1]`, where
/// `μ = 0` is homodyne detection. The strip is scanned on a grid and the best
/// cells are polished with Nelder–Mead.
pub struct PurificationOracle {
    a: Matrix4<f64>,
    b: Matrix2<f64>,
    c: nalgebra::Matrix4x2<f64>,
}

impl PurificationOracle {
    /// Oracle for the pair `(i, j)` of a pure three-mode `state`.
    pub fn new(state: &GaussianState, i: usize, j: usize) -> Self {
        let k = 3 - i - j;
        let g = state.reduce(&[i, j, k]).unwrap();
        let g = g.cm();
        Self {
            a: Matrix4::from_fn(|r, c| g[(r, c)]),
            b: Matrix2::from_fn(|r, c| g[(4 + r, 4 + c)]),
            c: nalgebra::Matrix4x2::from_fn(|r, c| g[(r, 4 + c)]),
        }
    }

    /// Conditional two-mode covariance matrix after measuring `σ(φ, μ)`.
    pub fn conditional(&self, phi: f64, mu: f64) -> Matrix4<f64> {
        let mu = mu.clamp(0.0, 1.0);
        let r = rotation(phi);
        let b = r.transpose() * self.b * r;
        // (b + diag(1/μ, μ))⁻¹ with numerator and denominator scaled by μ.
        let det = (mu * b[(0, 0)] + 1.0) * (b[(1, 1)] + mu) - mu * b[(0, 1)] * b[(1, 0)];
        let inv = Matrix2::new(
            mu * (b[(1, 1)] + mu),
            -mu * b[(0, 1)],
            -mu * b[(1, 0)],
            mu * b[(0, 0)] + 1.0,
        ) / det;
        let g = self.a - self.c * (r * inv * r.transpose()) * self.c.transpose();
        (g + g.transpose()) * 0.5
    }

    fn det_alpha(&self, phi: f64, mu: f64) -> f64 {
        self.conditional(phi, mu).fixed_view::<2, 2>(0, 0).determinant()
    }

    /// Returns `(min det α⁽ᵖ⁾, φ, μ)`.
    pub fn minimize(&self) -> (f64, f64, f64) {
        let (nphi, nmu) = (360, 201);
        let mut cells: Vec<(f64, f64, f64)> = Vec::with_capacity(nphi * nmu);
        for p in 0..nphi {
            let phi = std::f64::consts::PI * p as f64 / nphi as f64;
            for q in 0..nmu {
                let u = q as f64 / (nmu - 1) as f64;
                cells.push((self.det_alpha(phi, u * u), phi, u));
            }
        }
        cells.sort_by(|x, y| x.0.total_cmp(&y.0));
        let objective = |x: &[f64]| self.det_alpha(x[0], x[1].clamp(0.0, 1.0).powi(2));
        let mut best = (cells[0].0, cells[0].1, cells[0].2 * cells[0].2);
        for &(_, phi, u) in cells.iter().take(6) {
            let mut x = vec![phi, u];
            for step in [0.01, 0.001, 0.0001] {
                x = nelder_mead(objective, &x, step, 2000).0;
            }
            let mu = x[1].clamp(0.0, 1.0).powi(2);
            let v = self.det_alpha(x[0], mu);
            if v < best.0 {
                best = (v, x[0], mu);
            }
        }
        best
    }
}

/// `((ν̃ + 1/ν̃)/2)²` for the smallest partially transposed symplectic
/// eigenvalue `ν̃` of a standard form.
///
/// Symplectic eigenvalues are monotone under `γ⁽ᵖ⁾ ≤ γ`, so this bounds the
/// minimal `det α⁽ᵖ⁾` from below; it is attained for `a = b`.
pub fn pt_lower_bound(sf: &StandardForm) -> f64 {
    let (a, b, cp, cm) = (sf.a, sf.b, sf.c_plus, sf.c_minus);
    let sum = a * a + b * b - 2.0 * cp * cm;
    let det = (a * b - cp * cp) * (a * b - cm * cm);
    let nu = ((sum - (sum * sum - 4.0 * det).max(0.0).sqrt()) / 2.0).sqrt();
    ((nu + 1.0 / nu) / 2.0).powi(2)
}

/// `max |−JγJγ − 1|` of a two-mode covariance matrix.
pub fn purity_defect(g: &Matrix4<f64>) -> f64 {
    #[rustfmt::skip]
    let j = Matrix4::new(
        0.0, 1.0, 0.0, 0.0,
        -1.0, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, 1.0,
        0.0, 0.0, -1.0, 0.0,
    );
    (-(j * g * j * g) - Matrix4::identity()).amax()
}
