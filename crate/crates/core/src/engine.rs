//! Closed-form Cabello probabilities and the constructions built on them.
//!
//! Observables F and D act on particle A, G and E on particle B. The four
//! probabilities are
//!
//! * `q1 = P(F=+1, G=+1)`
//! * `q2 = P(D=+1, G=−1)`
//! * `q3 = P(F=−1, E=+1)`
//! * `q4 = P(D=+1, E=+1)`
//!
//! and the argument runs when `q2 = q3 = 0`, `q1 > 0` and `q4 > q1`.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quantum::{Direction, SchmidtState, ANGLE_TOL};

/// Exact-zero clauses.
pub const ZERO_TOL: f64 = 1e-12;
/// Strict-positivity clauses.
pub const POSITIVE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Settings {
    pub f: Direction,
    pub d: Direction,
    pub g: Direction,
    pub e: Direction,
}

impl Settings {
    pub fn is_valid(&self) -> bool {
        [self.f, self.d, self.g, self.e].iter().all(Direction::is_valid)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CabelloProbs {
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
    pub q4: f64,
}

impl CabelloProbs {
    /// Success gap `q4 − q1`.
    pub fn gap(&self) -> f64 {
        self.q4 - self.q1
    }

    /// `q4 − q1 − q2 − q3`; positive values are impossible for any local model.
    pub fn local_violation(&self) -> f64 {
        self.q4 - self.q1 - self.q2 - self.q3
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.q1, self.q2, self.q3, self.q4]
    }
}

/// Sign `s` in `cos(φ_D + φ_E − γ) = s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "i8", try_from = "i8")]
pub enum Branch {
    Minus,
    Plus,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Minus => -1.0,
            Branch::Plus => 1.0,
        }
    }
}

impl From<Branch> for i8 {
    fn from(b: Branch) -> i8 {
        match b {
            Branch::Minus => -1,
            Branch::Plus => 1,
        }
    }
}

impl TryFrom<i8> for Branch {
    type Error = String;

    fn try_from(v: i8) -> std::result::Result<Self, String> {
        match v {
            -1 => Ok(Branch::Minus),
            1 => Ok(Branch::Plus),
            other => Err(format!("branch must be -1 or +1, got {other}")),
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Minus => "-1",
            Branch::Plus => "+1",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstraintSolution {
    pub settings: Settings,
    pub branch: Branch,
    pub free_phase: f64,
    /// The cosine coefficient of q2 or q3 vanishes, so the corresponding
    /// phase sum is not forced; the default phase formulas were applied anyway.
    pub degenerate_phase: bool,
}

/// One half-angle factor pair `(cos(θ/2), sin(θ/2))`.
fn half(dir: &Direction) -> (f64, f64) {
    let (s, c) = (0.5 * dir.theta).sin_cos();
    (c, s)
}

/// `cos²β·a² + sin²β·b² + 2 cosβ sinβ · (cross) · cos(phase)`
fn two_term(cb: f64, sb: f64, a: f64, b: f64, cross: f64, phase: f64) -> f64 {
    let v = cb * cb * a * a + sb * sb * b * b + 2.0 * cb * sb * cross * phase.cos();
    v.clamp(0.0, 1.0)
}

/// The four closed-form joint probabilities.
pub fn cabello_probs(state: &SchmidtState, settings: &Settings) -> CabelloProbs {
    let (cb, sb, gamma) = (state.cos_beta(), state.sin_beta(), state.gamma());
    let (cf, sf) = half(&settings.f);
    let (cd, sd) = half(&settings.d);
    let (cg, sg) = half(&settings.g);
    let (ce, se) = half(&settings.e);
    let Settings { f, d, g, e } = settings;

    CabelloProbs {
        q1: two_term(cb, sb, cf * cg, sf * sg, cf * sf * cg * sg, f.phi + g.phi - gamma),
        q2: two_term(cb, sb, cd * sg, sd * cg, cd * sd * cg * sg, d.phi + g.phi + PI - gamma),
        q3: two_term(cb, sb, ce * sf, se * cf, cf * sf * ce * se, f.phi + e.phi + PI - gamma),
        q4: two_term(cb, sb, cd * ce, sd * se, cd * sd * ce * se, d.phi + e.phi - gamma),
    }
}

/// Tolerances for [`check_conditions`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConditionTolerance {
    /// Upper bound for q2 and q3.
    pub zero: f64,
    /// Lower bound that q1 and q4 − q1 must exceed.
    pub positive: f64,
}

impl ConditionTolerance {
    pub fn uniform(tol: f64) -> Self {
        Self {
            zero: tol,
            positive: tol,
        }
    }
}

impl Default for ConditionTolerance {
    fn default() -> Self {
        Self {
            zero: ZERO_TOL,
            positive: POSITIVE_TOL,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Clause {
    Q2Nonzero,
    Q3Nonzero,
    GapNotPositive,
    Q1NotPositive,
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Clause::Q2Nonzero => "q2 nonzero",
            Clause::Q3Nonzero => "q3 nonzero",
            Clause::GapNotPositive => "gap not positive",
            Clause::Q1NotPositive => "q1 not positive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Clause),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => f.write_str("holds"),
            Verdict::Fails(c) => write!(f, "fails({c})"),
        }
    }
}

/// Checks the clauses in the order q2, q3, gap, q1 and reports the first failure.
/// A point with q1 = 0 is a Hardy point, not a Cabello one, and fails here.
pub fn check_conditions(probs: &CabelloProbs, tol: ConditionTolerance) -> Verdict {
    if probs.q2 > tol.zero {
        Verdict::Fails(Clause::Q2Nonzero)
    } else if probs.q3 > tol.zero {
        Verdict::Fails(Clause::Q3Nonzero)
    } else if probs.gap() <= tol.positive {
        Verdict::Fails(Clause::GapNotPositive)
    } else if probs.q1 <= tol.positive {
        Verdict::Fails(Clause::Q1NotPositive)
    } else {
        Verdict::Holds
    }
}

/// Half-angle partner `θ'` with `tan(θ'/2) = tan β · tan(θ/2)`, on the
/// branch `θ'/2 ∈ (−π/2, π/2)`.
pub fn partner_theta(tan_beta: f64, theta: f64) -> f64 {
    2.0 * (tan_beta * (0.5 * theta).tan()).atan()
}

fn check_signed_theta(name: &str, theta: f64) -> Result<()> {
    if !theta.is_finite() || theta.abs() >= PI {
        return Err(Error::invalid(format!("{name} = {theta} outside (-pi, pi)")));
    }
    Ok(())
}

/// Completes `(θ_D, θ_E)` to a full setting with `q2 = q3 = 0` and
/// `cos(φ_D + φ_E − γ) = branch`.
///
/// `θ_G` and `θ_F` follow from the half-angle tangent relations; the phases
/// are `φ_D = free_phase`, `φ_G = γ − φ_D`, `φ_E = γ − φ_D + (0 | π)` and
/// `φ_F = γ − φ_E`. Signed `θ` inputs in `(−π, π)` are accepted and
/// canonicalized, which flips the affected azimuth by π.
pub fn solve_constraints(
    state: &SchmidtState,
    theta_d: f64,
    theta_e: f64,
    branch: Branch,
    free_phase: f64,
) -> Result<ConstraintSolution> {
    if state.is_product() {
        return Err(Error::ProductState { beta: state.beta() });
    }
    check_signed_theta("theta_d", theta_d)?;
    check_signed_theta("theta_e", theta_e)?;
    if !free_phase.is_finite() {
        return Err(Error::invalid("free_phase must be finite"));
    }

    let tb = state.tan_beta();
    let gamma = state.gamma();
    let theta_g = partner_theta(tb, theta_d);
    let theta_f = partner_theta(tb, theta_e);

    let phi_d = free_phase;
    let phi_g = gamma - phi_d;
    let phi_e = match branch {
        Branch::Plus => gamma - phi_d,
        Branch::Minus => gamma - phi_d + PI,
    };
    let phi_f = gamma - phi_e;

    let settings = Settings {
        f: Direction::canonical(theta_f, phi_f),
        d: Direction::canonical(theta_d, phi_d),
        g: Direction::canonical(theta_g, phi_g),
        e: Direction::canonical(theta_e, phi_e),
    };
    let degenerate_phase = theta_d.sin().abs() < ANGLE_TOL || theta_e.sin().abs() < ANGLE_TOL;

    Ok(ConstraintSolution {
        settings,
        branch,
        free_phase,
        degenerate_phase,
    })
}

fn check_entangled_non_maximal(state: &SchmidtState) -> Result<()> {
    if state.is_product() {
        return Err(Error::ProductState { beta: state.beta() });
    }
    if state.is_maximal() {
        return Err(Error::MaximallyEntangled { beta: state.beta() });
    }
    Ok(())
}

/// Explicit settings satisfying all four conditions for a non-maximally
/// entangled state.
///
/// For `tan β > 1` the D and G observables point along `+z` and the gap is
/// `cos²β (cos²(θ_E/2) − cos²(θ_F/2))`; for `tan β < 1` they point along `−z`
/// and the gap is `sin²β (sin²(θ_E/2) − sin²(θ_F/2))`. `θ_F` must be the
/// partner of `θ_E` (so that q3 = 0).
pub fn witness_settings(state: &SchmidtState, theta_e: f64, theta_f: f64) -> Result<Settings> {
    check_entangled_non_maximal(state)?;
    if !(theta_e.is_finite() && theta_f.is_finite())
        || !(0.0..=PI).contains(&theta_e)
        || !(0.0..=PI).contains(&theta_f)
    {
        return Err(Error::invalid("witness angles must lie in [0, pi]"));
    }
    let tb = state.tan_beta();
    let expected_f = partner_theta(tb, theta_e);
    if (theta_f - expected_f).abs() > ZERO_TOL {
        return Err(Error::invalid(format!(
            "theta_f = {theta_f} does not satisfy tan(theta_f/2) = tan(beta) tan(theta_e/2) (expected {expected_f})"
        )));
    }

    let (hd, theta_dg) = if tb > 1.0 {
        let ok = (0.5 * theta_e).cos() > (0.5 * theta_f).cos();
        (ok, 0.0)
    } else {
        let ok = (0.5 * theta_e).sin() > (0.5 * theta_f).sin();
        (ok, PI)
    };
    if !hd {
        return Err(Error::invalid(format!(
            "theta_e = {theta_e}, theta_f = {theta_f} violate the witness inequality for tan(beta) = {tb}"
        )));
    }

    let gamma = state.gamma();
    let (phi_d, phi_g, phi_e) = (0.0, gamma, gamma + PI);
    Ok(Settings {
        f: Direction::canonical(theta_f, gamma - phi_e),
        d: Direction::canonical(theta_dg, phi_d),
        g: Direction::canonical(theta_dg, phi_g),
        e: Direction::canonical(theta_e, phi_e),
    })
}

/// [`witness_settings`] with `θ_F` derived from `θ_E`.
pub fn witness_from_theta_e(state: &SchmidtState, theta_e: f64) -> Result<Settings> {
    check_entangled_non_maximal(state)?;
    let theta_f = partner_theta(state.tan_beta(), theta_e);
    witness_settings(state, theta_e, theta_f)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NoGoReport {
    pub settings: Settings,
    pub probs: CabelloProbs,
    pub gap: f64,
    /// q1 and q4 from the reduced maximal-state expressions.
    pub q1_reduced: f64,
    pub q4_reduced: f64,
}

/// Evaluates q1 and q4 at `β = π/4` on the constraint-satisfying family
/// `θ_G = θ_D`, `θ_F = θ_E`, `φ_G = γ − φ_D`, `φ_F = γ − φ_E`.
pub fn nogo_verify(gamma: f64, theta_d: f64, theta_e: f64, phi_d: f64, phi_e: f64) -> Result<NoGoReport> {
    if ![theta_d, theta_e, phi_d, phi_e].iter().all(|v| v.is_finite()) {
        return Err(Error::invalid("no-go parameters must be finite"));
    }
    let state = SchmidtState::maximally_entangled(gamma)?;
    let gamma = state.gamma();
    let settings = Settings {
        f: Direction::canonical(theta_e, gamma - phi_e),
        d: Direction::canonical(theta_d, phi_d),
        g: Direction::canonical(theta_d, gamma - phi_d),
        e: Direction::canonical(theta_e, phi_e),
    };
    let probs = cabello_probs(&state, &settings);

    let (sd, cd) = (0.5 * theta_d).sin_cos();
    let (se, ce) = (0.5 * theta_e).sin_cos();
    let base = 0.5 * cd * cd * ce * ce + 0.5 * sd * sd * se * se;
    let cross = cd * sd * ce * se;
    let phase_fg = settings.f.phi + settings.g.phi - gamma;
    let phase_de = settings.d.phi + settings.e.phi - gamma;

    Ok(NoGoReport {
        settings,
        probs,
        gap: probs.gap(),
        q1_reduced: base + cross * phase_fg.cos(),
        q4_reduced: base + cross * phase_de.cos(),
    })
}

#[cfg(test)]
mod tests {
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, TAU};

    use super::*;
    use crate::quantum::{joint_probability_oracle, Outcome};

    fn dir(theta: f64, phi: f64) -> Direction {
        Direction::new(theta, phi).unwrap()
    }

    fn oracle_probs(state: &SchmidtState, s: &Settings) -> [f64; 4] {
        use Outcome::*;
        let o = |a: &Direction, oa, b: &Direction, ob| {
            joint_probability_oracle(state, a, oa, b, ob).unwrap()
        };
        [
            o(&s.f, Plus, &s.g, Plus),
            o(&s.d, Plus, &s.g, Minus),
            o(&s.f, Minus, &s.e, Plus),
            o(&s.d, Plus, &s.e, Plus),
        ]
    }

    #[test]
    fn bell_state_all_z() {
        let state = SchmidtState::new(FRAC_PI_4, 0.0).unwrap();
        let z = dir(0.0, 0.0);
        let p = cabello_probs(&state, &Settings { f: z, d: z, g: z, e: z });
        assert!((p.q1 - 0.5).abs() < 1e-15);
        assert!(p.q2.abs() < 1e-15);
        assert!(p.q3.abs() < 1e-15);
        assert!((p.q4 - 0.5).abs() < 1e-15);
        assert_eq!(
            check_conditions(&p, ConditionTolerance::default()),
            Verdict::Fails(Clause::GapNotPositive)
        );
    }

    #[test]
    fn closed_form_matches_trace_oracle_at_fixed_points() {
        let state = SchmidtState::new(0.5, 0.0).unwrap();
        let s = Settings {
            f: dir(0.3, 1.2),
            d: dir(2.1, 4.0),
            g: dir(1.7, 0.2),
            e: dir(0.9, 5.5),
        };
        let closed = cabello_probs(&state, &s).as_array();
        let oracle = oracle_probs(&state, &s);
        for k in 0..4 {
            assert!((closed[k] - oracle[k]).abs() < 1e-12, "q{}", k + 1);
        }
    }

    #[test]
    fn check_conditions_examples() {
        let tol = ConditionTolerance::uniform(1e-9);
        let p = |q1, q2, q3, q4| CabelloProbs { q1, q2, q3, q4 };
        assert_eq!(check_conditions(&p(0.05, 0.0, 0.0, 0.15), tol), Verdict::Holds);
        assert_eq!(
            check_conditions(&p(0.0, 0.0, 0.0, 0.09), tol),
            Verdict::Fails(Clause::Q1NotPositive)
        );
        assert_eq!(
            check_conditions(&p(0.1, 0.02, 0.0, 0.2), tol),
            Verdict::Fails(Clause::Q2Nonzero)
        );
        assert_eq!(
            check_conditions(&p(0.1, 0.0, 0.5, 0.2), tol),
            Verdict::Fails(Clause::Q3Nonzero)
        );
        assert_eq!(Verdict::Fails(Clause::Q1NotPositive).to_string(), "fails(q1 not positive)");
    }

    #[test]
    fn solver_zero_theta_d_gives_zero_theta_g() {
        let state = SchmidtState::new(2f64.atan(), 0.0).unwrap();
        let sol = solve_constraints(&state, 0.0, 0.8, Branch::Minus, 0.0).unwrap();
        assert_eq!(sol.settings.g.theta, 0.0);
        assert!(sol.degenerate_phase);
    }

    #[test]
    fn solver_phase_layout_for_minus_branch() {
        let state = SchmidtState::new(1.0, 0.0).unwrap();
        let sol = solve_constraints(&state, 0.7, 0.4, Branch::Minus, 0.0).unwrap();
        let s = sol.settings;
        assert!(s.g.phi.abs() < 1e-15);
        assert!((s.e.phi - PI).abs() < 1e-15);
        assert!((s.f.phi - PI).abs() < 1e-15, "phi_f = -pi mod 2pi");
        assert!(((s.f.phi + s.g.phi - state.gamma()).cos() + 1.0).abs() < 1e-15);
        assert!(!sol.degenerate_phase);
    }

    #[test]
    fn solver_zeroes_q2_and_q3() {
        let state = SchmidtState::new(0.9, 2.3).unwrap();
        for branch in [Branch::Minus, Branch::Plus] {
            for &(td, te, fp) in &[(0.4, 2.5, 0.0), (2.9, 0.1, 1.7), (-1.2, 0.6, 5.0)] {
                let sol = solve_constraints(&state, td, te, branch, fp).unwrap();
                assert!(sol.settings.is_valid());
                let p = cabello_probs(&state, &sol.settings);
                assert!(p.q2 <= 1e-12 && p.q3 <= 1e-12, "{p:?}");
                let phase = sol.settings.d.phi + sol.settings.e.phi - state.gamma();
                // canonicalizing a negative theta flips the branch in canonical angles
                let flips = (td < 0.0) != (te < 0.0);
                let expect = if flips { -branch.sign() } else { branch.sign() };
                assert!((phase.cos() - expect).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn solver_rejects_product_states_and_bad_angles() {
        let product = SchmidtState::new(0.0, 0.0).unwrap();
        assert!(matches!(
            solve_constraints(&product, 0.1, 0.1, Branch::Minus, 0.0),
            Err(Error::ProductState { .. })
        ));
        let ok = SchmidtState::new(0.4, 0.0).unwrap();
        assert!(solve_constraints(&ok, PI, 0.1, Branch::Minus, 0.0).is_err());
        assert!(solve_constraints(&ok, 0.1, f64::NAN, Branch::Minus, 0.0).is_err());
    }

    #[test]
    fn witness_large_tan_beta() {
        let state = SchmidtState::new(2f64.atan(), 0.4).unwrap();
        let te = 1.0;
        let tf = partner_theta(2.0, te);
        assert!((0.5 * te).cos() > (0.5 * tf).cos());
        let s = witness_settings(&state, te, tf).unwrap();
        let p = cabello_probs(&state, &s);
        assert!(check_conditions(&p, ConditionTolerance::uniform(1e-12)).holds(), "{p:?}");
        let q1 = (state.cos_beta() * (0.5 * tf).cos()).powi(2);
        assert!((p.q1 - q1).abs() < 1e-15);
    }

    #[test]
    fn witness_small_tan_beta() {
        let state = SchmidtState::new(0.5f64.atan(), 3.0).unwrap();
        let s = witness_from_theta_e(&state, 1.3).unwrap();
        assert_eq!(s.d.theta, PI);
        assert_eq!(s.g.theta, PI);
        assert!((0.5 * s.e.theta).sin() > (0.5 * s.f.theta).sin());
        let p = cabello_probs(&state, &s);
        assert!(check_conditions(&p, ConditionTolerance::uniform(1e-12)).holds(), "{p:?}");
    }

    #[test]
    fn witness_rejections() {
        let maximal = SchmidtState::new(FRAC_PI_4, 0.0).unwrap();
        assert!(matches!(
            witness_from_theta_e(&maximal, 1.0),
            Err(Error::MaximallyEntangled { .. })
        ));
        let product = SchmidtState::new(FRAC_PI_2, 0.0).unwrap();
        assert!(matches!(
            witness_from_theta_e(&product, 1.0),
            Err(Error::ProductState { .. })
        ));
        let state = SchmidtState::new(1.2, 0.0).unwrap();
        // wrong partner angle
        assert!(witness_settings(&state, 1.0, 1.0).is_err());
        // theta_e = 0 leaves cos(θE/2) = cos(θF/2)
        assert!(witness_from_theta_e(&state, 0.0).is_err());
    }

    #[test]
    fn nogo_examples() {
        let r = nogo_verify(0.0, 0.6, 0.6, 0.0, 0.0).unwrap();
        assert!(r.gap.abs() <= 1e-12);
        assert!(r.probs.q2 <= 1e-12 && r.probs.q3 <= 1e-12);
        assert!((r.q1_reduced - r.probs.q1).abs() < 1e-12);
        assert!((r.q4_reduced - r.probs.q4).abs() < 1e-12);

        let r = nogo_verify(1.3, 0.0, FRAC_PI_2, 2.0, 4.0).unwrap();
        assert!(r.gap.abs() <= 1e-12);
        assert!((r.q1_reduced - r.q4_reduced).abs() <= 1e-12);
    }

    #[test]
    fn gauge_phase_leaves_probabilities_unchanged() {
        let state = SchmidtState::new(1.1, 0.7).unwrap();
        let base = cabello_probs(
            &state,
            &solve_constraints(&state, 0.5, 0.8, Branch::Minus, 0.0).unwrap().settings,
        )
        .as_array();
        for k in 0..16 {
            let fp = TAU * k as f64 / 16.0;
            let p = cabello_probs(
                &state,
                &solve_constraints(&state, 0.5, 0.8, Branch::Minus, fp).unwrap().settings,
            )
            .as_array();
            for i in 0..4 {
                assert!((p[i] - base[i]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn branch_serializes_as_signed_integer() {
        assert_eq!(serde_json::to_string(&Branch::Minus).unwrap(), "-1");
        assert_eq!(serde_json::from_str::<Branch>("1").unwrap(), Branch::Plus);
        assert!(serde_json::from_str::<Branch>("0").is_err());
    }
}
