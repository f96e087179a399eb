//! Test-side reference computations, written without the library's closed
//! forms or matrix code.

#![allow(dead_code)]

use std::f64::consts::PI;

use cabello::{Branch, Direction, Outcome, Settings};

/// Spinor components of the `outcome` eigenvector of `n(θ, φ)·σ`, as
/// `(real first component, magnitude of second, phase of second)`.
fn eigvec(dir: &Direction, outcome: Outcome) -> (f64, f64, f64) {
    let (s, c) = (0.5 * dir.theta).sin_cos();
    match outcome {
        Outcome::Plus => (c, s, dir.phi),
        Outcome::Minus => (s, -c, dir.phi),
    }
}

/// `|(⟨a| ⊗ ⟨b|) ψ|²` for `ψ = cos β |00⟩ + e^{iγ} sin β |11⟩`.
pub fn spinor_prob(beta: f64, gamma: f64, a: &Direction, oa: Outcome, b: &Direction, ob: Outcome) -> f64 {
    let (a0, a1, pa) = eigvec(a, oa);
    let (b0, b1, pb) = eigvec(b, ob);
    let x = beta.cos() * a0 * b0;
    let y = beta.sin() * a1 * b1;
    let psi = gamma - pa - pb;
    x * x + y * y + 2.0 * x * y * psi.cos()
}

/// `[q1, q2, q3, q4]` from [`spinor_prob`].
pub fn spinor_probs(beta: f64, gamma: f64, s: &Settings) -> [f64; 4] {
    use Outcome::*;
    [
        spinor_prob(beta, gamma, &s.f, Plus, &s.g, Plus),
        spinor_prob(beta, gamma, &s.d, Plus, &s.g, Minus),
        spinor_prob(beta, gamma, &s.f, Minus, &s.e, Plus),
        spinor_prob(beta, gamma, &s.d, Plus, &s.e, Plus),
    ]
}

/// Settings with `q2 = q3 = 0` built directly from the tangent relations,
/// for `θ_d, θ_e ∈ [0, π)`.
pub fn constrained_settings(beta: f64, gamma: f64, theta_d: f64, theta_e: f64, branch: Branch) -> Settings {
    let t = beta.tan();
    let partner = |th: f64| 2.0 * (t * (0.5 * th).tan()).atan();
    let phi_d = 0.0;
    let phi_e = match branch {
        Branch::Minus => gamma + PI,
        Branch::Plus => gamma,
    };
    Settings {
        f: Direction::canonical(partner(theta_e), gamma - phi_e),
        d: Direction::canonical(theta_d, phi_d),
        g: Direction::canonical(partner(theta_d), gamma - phi_d),
        e: Direction::canonical(theta_e, phi_e),
    }
}

/// `q4 − q1` at [`constrained_settings`], from [`spinor_probs`].
pub fn spinor_gap(beta: f64, theta_d: f64, theta_e: f64, branch: Branch) -> f64 {
    let s = constrained_settings(beta, 0.0, theta_d, theta_e, branch);
    let q = spinor_probs(beta, 0.0, &s);
    q[3] - q[0]
}

/// Maximum of a unimodal function by ternary search.
pub fn ternary_max(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> (f64, f64) {
    for _ in 0..200 {
        let m1 = lo + (hi - lo) / 3.0;
        let m2 = hi - (hi - lo) / 3.0;
        if f(m1) < f(m2) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    let x = 0.5 * (lo + hi);
    (x, f(x))
}

/// Symmetric-slice maximum of [`spinor_gap`] on branch −1: a dense scan
/// followed by ternary search around the best cell.
pub fn reference_symmetric_max(beta: f64) -> (f64, f64) {
    let n = 4000;
    let step = PI / n as f64;
    let g = |t: f64| spinor_gap(beta, t, t, Branch::Minus);
    let mut best = (0.0, f64::NEG_INFINITY);
    for i in 0..n {
        let t = i as f64 * step;
        let v = g(t);
        if v > best.1 {
            best = (t, v);
        }
    }
    ternary_max(g, (best.0 - step).max(0.0), (best.0 + step).min(PI - 1e-9))
}
