//! Maximization of the success gap `q4 − q1` over constraint-satisfying
//! settings, the Hardy-case maximum, and β sweeps.
//!
//! After imposing `q2 = q3 = 0` the gap depends only on `β`, `θ_D`, `θ_E`
//! and the sign `s = cos(φ_D + φ_E − γ)`. With `u = tan(θ_D/2)`,
//! `v = tan(θ_E/2)` and `a = tan β`:
//!
//! ```text
//! gap = cos²β [ k2 (1 + s a u v)² − k1 (1 + s a³ u v)² ]
//! k1  = 1 / ((1 + a²u²)(1 + a²v²)),   k2 = 1 / ((1 + u²)(1 + v²))
//! ```
//!
//! The search is a deterministic coarse grid followed by alternating
//! golden-section line searches, so repeated runs are bit-identical.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{cabello_probs, solve_constraints, Branch, ConstraintSolution};
use crate::error::{Error, Result};
use crate::quantum::{joint_probability_oracle, Outcome, SchmidtState};

/// Golden ratio conjugate, `(√5 − 1) / 2`.
const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Largest θ considered; `tan(θ/2)` is singular at π.
const THETA_MAX: f64 = PI - 1e-9;

/// Central finite-difference step for stationarity checks.
pub const FD_STEP: f64 = 1e-6;

/// Tolerance for the `θ_D = ±θ_E` optimum test.
pub const SYMMETRY_TOL: f64 = 1e-6;

const MAX_SWEEPS: usize = 10_000;

/// Line-search directions: the two axes, then the diagonal and
/// anti-diagonal. The gap is symmetric under `θ_D ↔ ±θ_E`, so the last two
/// are the principal axes of the curvature at the optimum.
const SEARCH_DIRECTIONS: [[f64; 2]; 4] = [
    [1.0, 0.0],
    [0.0, 1.0],
    [FRAC_1_SQRT_2, FRAC_1_SQRT_2],
    [FRAC_1_SQRT_2, -FRAC_1_SQRT_2],
];

/// Parameter interval `[lo, hi]` within `[−width, width]` keeping
/// `x + t·dir` inside the box. `None` if the interval is empty.
fn line_bracket(x: [f64; 2], dir: [f64; 2], width: f64, domains: &[(f64, f64); 2]) -> Option<(f64, f64)> {
    let (mut lo, mut hi) = (-width, width);
    for k in 0..2 {
        if dir[k] == 0.0 {
            continue;
        }
        let (dlo, dhi) = domains[k];
        let (a, b) = ((dlo - x[k]) / dir[k], (dhi - x[k]) / dir[k]);
        lo = lo.max(a.min(b));
        hi = hi.min(a.max(b));
    }
    (hi > lo).then_some((lo, hi))
}

fn check_beta(beta: f64) -> Result<()> {
    if !beta.is_finite() || !(0.0..=FRAC_PI_2).contains(&beta) {
        return Err(Error::invalid(format!("beta = {beta} outside (0, pi/2)")));
    }
    let state = SchmidtState::new(beta, 0.0)?;
    if state.is_product() {
        return Err(Error::ProductState { beta });
    }
    Ok(())
}

fn check_theta(name: &str, theta: f64) -> Result<()> {
    if !theta.is_finite() || theta.abs() >= PI {
        return Err(Error::invalid(format!("{name} = {theta} outside (-pi, pi)")));
    }
    Ok(())
}

/// The reduced gap for fixed `β` and branch.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapObjective {
    beta: f64,
    branch: Branch,
    cos2: f64,
    a: f64,
    a2: f64,
    a3: f64,
}

impl GapObjective {
    pub fn new(beta: f64, branch: Branch) -> Result<Self> {
        check_beta(beta)?;
        let a = beta.tan();
        Ok(Self {
            beta,
            branch,
            cos2: beta.cos().powi(2),
            a,
            a2: a * a,
            a3: a * a * a,
        })
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    /// Gap in terms of the half-angle tangents.
    #[inline]
    pub fn eval_tangents(&self, u: f64, v: f64) -> f64 {
        let s = self.branch.sign();
        let x = u * v;
        let k2 = 1.0 / ((1.0 + u * u) * (1.0 + v * v));
        let k1 = 1.0 / ((1.0 + self.a2 * u * u) * (1.0 + self.a2 * v * v));
        let p = 1.0 + s * self.a * x;
        let q = 1.0 + s * self.a3 * x;
        self.cos2 * (k2 * p * p - k1 * q * q)
    }

    pub fn eval(&self, theta_d: f64, theta_e: f64) -> f64 {
        self.eval_tangents((0.5 * theta_d).tan(), (0.5 * theta_e).tan())
    }

    /// `∂gap/∂θ_D` in factored form: the product of the two stationarity
    /// factors `(a v + u)` and `(L − R)` over their common denominator, where
    /// `L = (a u v − 1)(a²v² + 1)(a²u² + 1)²` and
    /// `R = a² (1 + u²)² (1 + v²) (a³ u v − 1)`. Branch −1 only.
    fn d_theta_first(&self, u: f64, v: f64) -> f64 {
        let (a, a2, a3) = (self.a, self.a2, self.a3);
        let (uu, vv) = (1.0 + u * u, 1.0 + v * v);
        let (au, av) = (1.0 + a2 * u * u, 1.0 + a2 * v * v);
        let first = a * v + u;
        let lhs = (a * u * v - 1.0) * av * au * au;
        let rhs = a2 * uu * uu * vv * (a3 * u * v - 1.0);
        let norm = uu * vv * au * au * av;
        self.cos2 * first * (lhs - rhs) / norm
    }
}

/// The gap for a general phase cosine `c = cos(φ_D + φ_E − γ)`:
///
/// `cos²β [ (k2 − k1) + a²u²v² (k2 − k1 a⁴) + 2 a u v (k2 − k1 a²) c ]`.
pub fn gap_general(beta: f64, theta_d: f64, theta_e: f64, phase_cos: f64) -> Result<f64> {
    check_beta(beta)?;
    check_theta("theta_d", theta_d)?;
    check_theta("theta_e", theta_e)?;
    if !(-1.0..=1.0).contains(&phase_cos) {
        return Err(Error::invalid(format!("phase cosine {phase_cos} outside [-1, 1]")));
    }
    let a = beta.tan();
    let (a2, a4) = (a * a, a.powi(4));
    let u = (0.5 * theta_d).tan();
    let v = (0.5 * theta_e).tan();
    let k1 = 1.0 / ((a2 * u * u + 1.0) * (a2 * v * v + 1.0));
    let k2 = 1.0 / ((u * u + 1.0) * (v * v + 1.0));
    let uv = u * v;
    let inner = (k2 - k1) + a2 * uv * uv * (k2 - k1 * a4) + 2.0 * a * uv * (k2 - k1 * a2) * phase_cos;
    Ok(beta.cos().powi(2) * inner)
}

/// Branch −1 gap on the symmetric line `θ_D = θ_E = θ`.
pub fn gap_symmetric(beta: f64, theta: f64) -> Result<f64> {
    check_beta(beta)?;
    check_theta("theta", theta)?;
    let a = beta.tan();
    let t2 = (0.5 * theta).tan().powi(2);
    let first = (1.0 - a * t2).powi(2) / (t2 + 1.0).powi(2);
    let second = (1.0 - a.powi(3) * t2).powi(2) / (a * a * t2 + 1.0).powi(2);
    Ok(beta.cos().powi(2) * (first - second))
}

/// Gradient of the gap evaluated two ways.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Stationarity {
    /// `(∂/∂θ_D, ∂/∂θ_E)` from the factored stationarity conditions.
    pub analytic: [f64; 2],
    /// The same from central differences with step [`FD_STEP`].
    pub finite_difference: [f64; 2],
}

impl Stationarity {
    pub fn residual(&self) -> f64 {
        self.analytic
            .iter()
            .chain(self.finite_difference.iter())
            .fold(0.0, |m, g| m.max(g.abs()))
    }

    /// Largest disagreement between the two gradient evaluations.
    pub fn discrepancy(&self) -> f64 {
        (0..2)
            .map(|k| (self.analytic[k] - self.finite_difference[k]).abs())
            .fold(0.0, f64::max)
    }
}

/// Gradient of the gap at `(θ_D, θ_E)`. For branch +1 the branch −1 forms
/// are evaluated at `(θ_D, −θ_E)`, which has the same gap and gradient
/// magnitudes.
pub fn stationarity_residual(
    beta: f64,
    theta_d: f64,
    theta_e: f64,
    branch: Branch,
) -> Result<Stationarity> {
    check_theta("theta_d", theta_d)?;
    check_theta("theta_e", theta_e)?;
    let obj = GapObjective::new(beta, Branch::Minus)?;
    let te = match branch {
        Branch::Minus => theta_e,
        Branch::Plus => -theta_e,
    };
    let (u, v) = ((0.5 * theta_d).tan(), (0.5 * te).tan());
    let analytic = [obj.d_theta_first(u, v), obj.d_theta_first(v, u)];
    let h = FD_STEP;
    let finite_difference = [
        (obj.eval(theta_d + h, te) - obj.eval(theta_d - h, te)) / (2.0 * h),
        (obj.eval(theta_d, te + h) - obj.eval(theta_d, te - h)) / (2.0 * h),
    ];
    Ok(Stationarity {
        analytic,
        finite_difference,
    })
}

/// Golden-section search for a maximum on `[lo, hi]`. Returns the best point
/// evaluated and its value.
pub fn golden_section_max<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let (mut best_x, mut best_f) = if f2 > f1 { (x2, f2) } else { (x1, f1) };
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
            if f2 > best_f {
                best_x = x2;
                best_f = f2;
            }
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
            if f1 > best_f {
                best_x = x1;
                best_f = f1;
            }
        }
    }
    (best_x, best_f)
}

/// Finite-difference step for the local quadratic model used to pick
/// adaptive search directions.
const MODEL_STEP: f64 = 1e-5;

/// Directions from a local quadratic model built from function values: the
/// Newton step (when the model is concave) and the two curvature axes.
/// Each entry is a unit direction and the line-search half-width to use.
fn model_directions(obj: &GapObjective, x: [f64; 2], width: f64) -> Vec<([f64; 2], f64)> {
    let h = MODEL_STEP;
    let f = |a: f64, b: f64| obj.eval(a, b);
    let f0 = f(x[0], x[1]);
    let (fp0, fm0) = (f(x[0] + h, x[1]), f(x[0] - h, x[1]));
    let (f0p, f0m) = (f(x[0], x[1] + h), f(x[0], x[1] - h));
    let g = [(fp0 - fm0) / (2.0 * h), (f0p - f0m) / (2.0 * h)];
    let h11 = (fp0 - 2.0 * f0 + fm0) / (h * h);
    let h22 = (f0p - 2.0 * f0 + f0m) / (h * h);
    let h12 = (f(x[0] + h, x[1] + h) - f(x[0] + h, x[1] - h) - f(x[0] - h, x[1] + h)
        + f(x[0] - h, x[1] - h))
        / (4.0 * h * h);
    if ![g[0], g[1], h11, h22, h12].iter().all(|v| v.is_finite()) {
        return Vec::new();
    }

    let mut out = Vec::with_capacity(3);
    let det = h11 * h22 - h12 * h12;
    if h11 < 0.0 && det > 0.0 {
        let d = [-(h22 * g[0] - h12 * g[1]) / det, -(h11 * g[1] - h12 * g[0]) / det];
        let norm = d[0].hypot(d[1]);
        if norm > 0.0 {
            out.push(([d[0] / norm, d[1] / norm], (2.0 * norm).min(width)));
        }
    }
    // eigenvectors of the symmetric 2x2 Hessian
    let angle = 0.5 * (2.0 * h12).atan2(h11 - h22);
    let (s, c) = angle.sin_cos();
    out.push(([c, s], width));
    out.push(([-s, c], width));
    out
}

/// Alternating golden-section line searches from `x` until a full pass
/// neither improves the objective nor moves by more than `tol`.
fn refine(
    obj: &GapObjective,
    mut x: [f64; 2],
    domains: &[(f64, f64); 2],
    width: f64,
    tol: f64,
) -> ([f64; 2], f64) {
    let mut fx = obj.eval(x[0], x[1]);
    for _ in 0..MAX_SWEEPS {
        let mut improved = false;
        let mut max_move: f64 = 0.0;
        let mut dirs: Vec<([f64; 2], f64)> = SEARCH_DIRECTIONS.iter().map(|d| (*d, width)).collect();
        dirs.extend(model_directions(obj, x, width));
        for (dir, w) in dirs {
            let Some((lo, hi)) = line_bracket(x, dir, w, domains) else {
                continue;
            };
            let along = |t: f64| obj.eval(x[0] + t * dir[0], x[1] + t * dir[1]);
            let (t, ft) = golden_section_max(along, lo, hi, tol);
            if ft > fx {
                max_move = max_move.max(t.abs());
                x = [x[0] + t * dir[0], x[1] + t * dir[1]];
                fx = ft;
                improved = true;
            }
        }
        if !improved || max_move < tol {
            break;
        }
    }
    (x, fx)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MaximizeOptions {
    /// Grid points per θ axis.
    pub grid_size: usize,
    /// Golden-section termination width in radians.
    pub refine_tol: f64,
    pub branch: Branch,
    pub hardy: HardyOptions,
}

impl Default for MaximizeOptions {
    fn default() -> Self {
        Self {
            grid_size: 400,
            refine_tol: 1e-10,
            branch: Branch::Minus,
            hardy: HardyOptions::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HardyOptions {
    pub grid_size: usize,
    pub refine_tol: f64,
}

impl Default for HardyOptions {
    fn default() -> Self {
        Self {
            grid_size: 2000,
            refine_tol: 1e-12,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimumRecord {
    pub beta: f64,
    pub cos_beta: f64,
    pub theta_d_star: f64,
    pub theta_e_star: f64,
    pub gap_star: f64,
    pub q1_star: f64,
    pub q4_star: f64,
    pub hardy_star: f64,
    pub stationarity_residual: f64,
    pub branch: Branch,
    /// `θ_D* = θ_E*` (branch −1) or `θ_D* = −θ_E*` (branch +1) within [`SYMMETRY_TOL`].
    pub symmetric_optimum: bool,
    /// β is maximal; no setting gives a positive gap.
    pub no_go: bool,
}

/// Maximizes the gap over `(θ_D, θ_E)` for one state.
///
/// Branch −1 searches `[0, π)²`. Branch +1 searches `θ_D ∈ [0, π)`,
/// `θ_E ∈ (−π, 0]`, the half-plane where the `θ_D = −θ_E` optimum lives.
pub fn maximize_gap(beta: f64, opts: &MaximizeOptions) -> Result<OptimumRecord> {
    if opts.grid_size < 2 {
        return Err(Error::invalid("grid_size must be at least 2"));
    }
    if !(opts.refine_tol > 0.0) {
        return Err(Error::invalid("refine_tol must be positive"));
    }
    let obj = GapObjective::new(beta, opts.branch)?;
    let state = SchmidtState::new(beta, 0.0)?;
    let hardy_star = hardy_max(beta, &opts.hardy)?;

    if state.is_maximal() {
        let sol = solve_constraints(&state, 0.0, 0.0, opts.branch, 0.0)?;
        let p = cabello_probs(&state, &sol.settings);
        return Ok(OptimumRecord {
            beta,
            cos_beta: beta.cos(),
            theta_d_star: 0.0,
            theta_e_star: 0.0,
            gap_star: 0.0,
            q1_star: p.q1,
            q4_star: p.q4,
            hardy_star,
            stationarity_residual: 0.0,
            branch: opts.branch,
            symmetric_optimum: true,
            no_go: true,
        });
    }

    let e_sign = match opts.branch {
        Branch::Minus => 1.0,
        Branch::Plus => -1.0,
    };
    let n = opts.grid_size;
    let step = PI / n as f64;
    let thetas: Vec<f64> = (0..n).map(|i| i as f64 * step).collect();
    let tans: Vec<f64> = thetas.iter().map(|t| (0.5 * t).tan()).collect();

    let (mut bi, mut bj, mut best) = (0, 0, f64::NEG_INFINITY);
    for (i, &u) in tans.iter().enumerate() {
        for (j, &v) in tans.iter().enumerate() {
            let g = obj.eval_tangents(u, e_sign * v);
            if g > best {
                best = g;
                bi = i;
                bj = j;
            }
        }
    }

    let x = [thetas[bi], e_sign * thetas[bj]];
    let domains = [
        (0.0, THETA_MAX),
        if e_sign > 0.0 { (0.0, THETA_MAX) } else { (-THETA_MAX, 0.0) },
    ];
    let (x, fx) = refine(&obj, x, &domains, step, opts.refine_tol);

    let sol = solve_constraints(&state, x[0], x[1], opts.branch, 0.0)?;
    let p = cabello_probs(&state, &sol.settings);
    let stat = stationarity_residual(beta, x[0], x[1], opts.branch)?;
    let symmetric_optimum = (x[0] - e_sign * x[1]).abs() <= SYMMETRY_TOL;

    Ok(OptimumRecord {
        beta,
        cos_beta: beta.cos(),
        theta_d_star: x[0],
        theta_e_star: x[1],
        gap_star: fx,
        q1_star: p.q1,
        q4_star: p.q4,
        hardy_star,
        stationarity_residual: stat.residual(),
        branch: opts.branch,
        symmetric_optimum,
        no_go: false,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HardyOptimum {
    pub beta: f64,
    pub theta_d: f64,
    pub theta_e: f64,
    /// q4 with q1 = q2 = q3 = 0.
    pub probability: f64,
}

/// `θ_E` paired with `θ_D` by the Hardy constraint
/// `tan(θ_D/2) tan(θ_E/2) = cot³β`, which makes q1 vanish on branch −1.
fn hardy_partner(beta: f64, theta_d: f64) -> f64 {
    let cot3 = beta.tan().powi(-3);
    2.0 * (cot3 / (0.5 * theta_d).tan()).atan()
}

fn hardy_q4(state: &SchmidtState, theta_d: f64) -> Result<f64> {
    let theta_e = hardy_partner(state.beta(), theta_d);
    let sol = solve_constraints(state, theta_d, theta_e, Branch::Minus, 0.0)?;
    Ok(cabello_probs(state, &sol.settings).q4)
}

/// Maximum of q4 subject to q1 = q2 = q3 = 0, found by a 1-D grid over
/// `θ_D ∈ (0, π)` and golden-section refinement.
pub fn hardy_optimum(beta: f64, opts: &HardyOptions) -> Result<HardyOptimum> {
    check_beta(beta)?;
    if opts.grid_size < 2 {
        return Err(Error::invalid("hardy grid_size must be at least 2"));
    }
    let state = SchmidtState::new(beta, 0.0)?;
    let n = opts.grid_size;
    let step = PI / n as f64;
    let mut best = (0.5 * step, f64::NEG_INFINITY);
    for i in 0..n {
        let t = (i as f64 + 0.5) * step;
        let q = hardy_q4(&state, t)?;
        if q > best.1 {
            best = (t, q);
        }
    }
    let lo = (best.0 - step).max(1e-12);
    let hi = (best.0 + step).min(THETA_MAX);
    let (t, q) = golden_section_max(
        |t| hardy_q4(&state, t).unwrap_or(f64::NEG_INFINITY),
        lo,
        hi,
        opts.refine_tol,
    );
    let (theta_d, probability) = if q > best.1 { (t, q) } else { best };
    Ok(HardyOptimum {
        beta,
        theta_d,
        theta_e: hardy_partner(beta, theta_d),
        probability,
    })
}

pub fn hardy_max(beta: f64, opts: &HardyOptions) -> Result<f64> {
    Ok(hardy_optimum(beta, opts)?.probability)
}

/// Brute-force Hardy maximum on a uniform `θ_D` grid, evaluating q4 with the
/// trace oracle instead of the closed forms.
pub fn hardy_brute_force(beta: f64, points: usize) -> Result<HardyOptimum> {
    check_beta(beta)?;
    if points == 0 {
        return Err(Error::invalid("points must be positive"));
    }
    let state = SchmidtState::new(beta, 0.0)?;
    let step = PI / points as f64;
    let mut best = HardyOptimum {
        beta,
        theta_d: 0.0,
        theta_e: 0.0,
        probability: f64::NEG_INFINITY,
    };
    for i in 0..points {
        let td = (i as f64 + 0.5) * step;
        let te = hardy_partner(beta, td);
        let s = solve_constraints(&state, td, te, Branch::Minus, 0.0)?.settings;
        let q4 = joint_probability_oracle(&state, &s.d, Outcome::Plus, &s.e, Outcome::Plus)?;
        if q4 > best.probability {
            best = HardyOptimum {
                beta,
                theta_d: td,
                theta_e: te,
                probability: q4,
            };
        }
    }
    Ok(best)
}

/// Hardy maximum over all states: a scan of `points` values of `cos β`
/// followed by golden-section refinement in β.
pub fn hardy_global_max(points: usize, opts: &HardyOptions) -> Result<HardyOptimum> {
    let grid = cos_beta_grid(points)?;
    let values: Vec<Result<f64>> = grid.par_iter().map(|&b| hardy_max(b, opts)).collect();
    let mut best = (0, f64::NEG_INFINITY);
    for (i, v) in values.into_iter().enumerate() {
        let v = v?;
        if v > best.1 {
            best = (i, v);
        }
    }
    let lo = grid[(best.0 + 1).min(grid.len() - 1)];
    let hi = grid[best.0.saturating_sub(1)];
    let (b, _) = golden_section_max(
        |b| hardy_max(b, opts).unwrap_or(f64::NEG_INFINITY),
        lo,
        hi,
        1e-10,
    );
    let refined = hardy_optimum(b, opts)?;
    if refined.probability >= best.1 {
        Ok(refined)
    } else {
        hardy_optimum(grid[best.0], opts)
    }
}

/// β values with `cos β = k / (n + 1)` for `k = 1..=n`, in increasing `cos β`.
pub fn cos_beta_grid(n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::invalid("a grid needs at least 2 points"));
    }
    let denom = (n + 1) as f64;
    Ok((1..=n).map(|k| (k as f64 / denom).acos()).collect())
}

/// Per-point sweep results, in grid order.
pub fn sweep_points(beta_grid: &[f64], opts: &MaximizeOptions) -> Vec<Result<OptimumRecord>> {
    beta_grid
        .par_iter()
        .enumerate()
        .map(|(index, &beta)| {
            maximize_gap(beta, opts).map_err(|e| Error::GridPoint {
                index,
                source: Box::new(e),
            })
        })
        .collect()
}

/// [`maximize_gap`] (with the Hardy value) at every grid point. Fails on the
/// first grid point that fails.
pub fn sweep(beta_grid: &[f64], opts: &MaximizeOptions) -> Result<Vec<OptimumRecord>> {
    if beta_grid.len() < 2 {
        return Err(Error::invalid("a sweep grid needs at least 2 points"));
    }
    sweep_points(beta_grid, opts).into_iter().collect()
}

/// Index of the record with the largest gap; the first one wins ties.
pub fn argmax_gap(records: &[OptimumRecord]) -> Option<usize> {
    let mut best: Option<(usize, f64)> = None;
    for (i, r) in records.iter().enumerate() {
        if best.map_or(true, |(_, g)| r.gap_star > g) {
            best = Some((i, r.gap_star));
        }
    }
    best.map(|(i, _)| i)
}

/// `cos β` of the representative with `cos β ≤ 1/√2` among `β` and its
/// mirror `π/2 − β`. Both states have identical gaps.
pub fn folded_cos_beta(beta: f64) -> f64 {
    let c = beta.cos();
    if c > FRAC_1_SQRT_2 {
        beta.sin()
    } else {
        c
    }
}

/// Helper for callers that need the full settings of an optimum.
pub fn optimum_settings(record: &OptimumRecord, gamma: f64) -> Result<ConstraintSolution> {
    let state = SchmidtState::new(record.beta, gamma)?;
    solve_constraints(&state, record.theta_d_star, record.theta_e_star, record.branch, 0.0)
}
