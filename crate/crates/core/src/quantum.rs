//! Two-qubit pure states in Schmidt form, spin-½ measurement projectors and
//! the Born-rule trace oracle.
//!
//! Basis ordering is `{|00⟩, |01⟩, |10⟩, |11⟩}` with particle A as the left
//! tensor factor. The trace oracle is deliberately built from dense complex
//! matrices so it shares no algebra with the closed-form probabilities in
//! [`crate::engine`].

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};
use std::fmt;

use nalgebra::{Complex, DMatrix};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type C64 = Complex<f64>;

/// Tolerance used when classifying a Schmidt angle as product or maximal.
pub const ANGLE_TOL: f64 = 1e-12;

/// Bound on the imaginary part and range excursion of a raw trace before the
/// oracle reports a consistency failure.
pub const ORACLE_CONSISTENCY_TOL: f64 = 1e-10;

/// `cos β |00⟩ + e^{iγ} sin β |11⟩` with `β ∈ [0, π/2]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SchmidtState {
    beta: f64,
    gamma: f64,
}

impl SchmidtState {
    pub fn new(beta: f64, gamma: f64) -> Result<Self> {
        if !beta.is_finite() || !gamma.is_finite() {
            return Err(Error::invalid("beta and gamma must be finite"));
        }
        if !(0.0..=FRAC_PI_2).contains(&beta) {
            return Err(Error::invalid(format!(
                "beta = {beta} outside [0, pi/2]; normalize the Schmidt decomposition first"
            )));
        }
        Ok(Self {
            beta,
            gamma: wrap_phase(gamma),
        })
    }

    /// Builds the state from `cos β`, the parameterization used on the
    /// comparison plots.
    pub fn from_cos_beta(cos_beta: f64, gamma: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&cos_beta) {
            return Err(Error::invalid(format!("cos(beta) = {cos_beta} outside [0, 1]")));
        }
        Self::new(cos_beta.acos(), gamma)
    }

    pub fn maximally_entangled(gamma: f64) -> Result<Self> {
        Self::new(FRAC_PI_4, gamma)
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn cos_beta(&self) -> f64 {
        self.beta.cos()
    }

    pub fn sin_beta(&self) -> f64 {
        self.beta.sin()
    }

    pub fn tan_beta(&self) -> f64 {
        self.beta.tan()
    }

    pub fn is_product(&self) -> bool {
        self.beta <= ANGLE_TOL || FRAC_PI_2 - self.beta <= ANGLE_TOL
    }

    pub fn is_maximal(&self) -> bool {
        (self.beta - FRAC_PI_4).abs() <= ANGLE_TOL
    }

    /// The locally equivalent state obtained by relabelling `|0⟩ ↔ |1⟩` on
    /// both sides: `β → π/2 − β`, `γ → −γ`.
    pub fn mirror(&self) -> Self {
        Self {
            beta: FRAC_PI_2 - self.beta,
            gamma: wrap_phase(-self.gamma),
        }
    }

    /// State vector in the computational basis.
    pub fn amplitudes(&self) -> [C64; 4] {
        let zero = C64::new(0.0, 0.0);
        [
            C64::new(self.cos_beta(), 0.0),
            zero,
            zero,
            C64::from_polar(self.sin_beta(), self.gamma),
        ]
    }
}

/// Measurement direction `n = (sin θ cos φ, sin θ sin φ, cos θ)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Direction {
    pub theta: f64,
    pub phi: f64,
}

impl Direction {
    /// Requires `θ ∈ [0, π]`; `φ` is wrapped into `[0, 2π)`.
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !theta.is_finite() || !phi.is_finite() {
            return Err(Error::invalid("direction angles must be finite"));
        }
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::invalid(format!("theta = {theta} outside [0, pi]")));
        }
        Ok(Self {
            theta,
            phi: wrap_phase(phi),
        })
    }

    /// Maps arbitrary polar angles onto the same Bloch vector with
    /// `θ ∈ [0, π]`, `φ ∈ [0, 2π)`. Negative `θ` becomes `(|θ|, φ + π)`.
    pub fn canonical(theta: f64, phi: f64) -> Self {
        let mut t = theta.rem_euclid(TAU);
        let mut p = phi;
        if t > PI {
            t = TAU - t;
            p += PI;
        }
        Self {
            theta: t,
            phi: wrap_phase(p),
        }
    }

    pub fn bloch(&self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }

    pub fn is_valid(&self) -> bool {
        self.theta.is_finite()
            && self.phi.is_finite()
            && (0.0..=PI).contains(&self.theta)
            && (0.0..TAU).contains(&self.phi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    Plus,
    Minus,
}

impl Outcome {
    pub const ALL: [Outcome; 2] = [Outcome::Plus, Outcome::Minus];

    pub fn sign(self) -> f64 {
        match self {
            Outcome::Plus => 1.0,
            Outcome::Minus => -1.0,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Outcome::Plus => Outcome::Minus,
            Outcome::Minus => Outcome::Plus,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Plus => "+1",
            Outcome::Minus => "-1",
        })
    }
}

/// Dense square complex matrix of dimension 2 or 4.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix(DMatrix<C64>);

impl ComplexMatrix {
    pub fn from_row_slice(dim: usize, entries: &[C64]) -> Self {
        Self(DMatrix::from_row_slice(dim, dim, entries))
    }

    pub fn identity(dim: usize) -> Self {
        Self(DMatrix::identity(dim, dim))
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.0[(row, col)]
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        Self(self.0.kronecker(&rhs.0))
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        Self(&self.0 * &rhs.0)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self(&self.0 + &rhs.0)
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self(&self.0 * factor)
    }

    pub fn adjoint(&self) -> Self {
        Self(self.0.adjoint())
    }

    pub fn trace(&self) -> C64 {
        self.0.trace()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (&self.0 - &other.0)
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }

    pub fn is_idempotent(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.matmul(self)) <= tol
    }

    /// Smallest eigenvalue, treating the matrix as Hermitian.
    pub fn min_hermitian_eigenvalue(&self) -> f64 {
        self.0
            .clone()
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }
}

pub fn pauli_x() -> ComplexMatrix {
    let (o, l) = (C64::new(0.0, 0.0), C64::new(1.0, 0.0));
    ComplexMatrix::from_row_slice(2, &[o, l, l, o])
}

pub fn pauli_y() -> ComplexMatrix {
    let (o, i) = (C64::new(0.0, 0.0), C64::new(0.0, 1.0));
    ComplexMatrix::from_row_slice(2, &[o, -i, i, o])
}

pub fn pauli_z() -> ComplexMatrix {
    let (o, l) = (C64::new(0.0, 0.0), C64::new(1.0, 0.0));
    ComplexMatrix::from_row_slice(2, &[l, o, o, -l])
}

/// `ρ = |ψ⟩⟨ψ|` from the state vector.
pub fn density_matrix(state: &SchmidtState) -> ComplexMatrix {
    let psi = state.amplitudes();
    let mut entries = [C64::new(0.0, 0.0); 16];
    for (i, a) in psi.iter().enumerate() {
        for (j, b) in psi.iter().enumerate() {
            entries[4 * i + j] = a * b.conj();
        }
    }
    ComplexMatrix::from_row_slice(4, &entries)
}

/// The same density matrix assembled from its Pauli expansion. Kept as an
/// independent derivation to check [`density_matrix`] against.
pub fn density_matrix_pauli(state: &SchmidtState) -> ComplexMatrix {
    let id = ComplexMatrix::identity(2);
    let (x, y, z) = (pauli_x(), pauli_y(), pauli_z());
    let (c, s) = (state.cos_beta(), state.sin_beta());
    let (sg, cg) = state.gamma().sin_cos();
    let polar = c * c - s * s;
    let cross = 2.0 * c * s;
    let re = |v: f64| C64::new(v, 0.0);

    let terms = [
        (1.0, id.kron(&id)),
        (polar, id.kron(&z)),
        (polar, z.kron(&id)),
        (cross * cg, x.kron(&x)),
        (cross * sg, x.kron(&y)),
        (cross * sg, y.kron(&x)),
        (-cross * cg, y.kron(&y)),
        (1.0, z.kron(&z)),
    ];
    let sum = terms
        .iter()
        .fold(ComplexMatrix(DMatrix::zeros(4, 4)), |acc, (coef, m)| {
            acc.add(&m.scale(re(*coef)))
        });
    sum.scale(re(0.25))
}

/// `(I + s n·σ) / 2` for outcome sign `s`.
pub fn projector(direction: &Direction, outcome: Outcome) -> ComplexMatrix {
    let [nx, ny, nz] = direction.bloch();
    let s = outcome.sign();
    let half = 0.5;
    ComplexMatrix::from_row_slice(
        2,
        &[
            C64::new(half * (1.0 + s * nz), 0.0),
            C64::new(half * s * nx, -half * s * ny),
            C64::new(half * s * nx, half * s * ny),
            C64::new(half * (1.0 - s * nz), 0.0),
        ],
    )
}

/// `Tr[ρ (Π_A ⊗ Π_B)]`, checked for a real in-range value and clamped to `[0, 1]`.
pub fn joint_probability_oracle(
    state: &SchmidtState,
    dir_a: &Direction,
    out_a: Outcome,
    dir_b: &Direction,
    out_b: Outcome,
) -> Result<f64> {
    let rho = density_matrix(state);
    trace_probability(&rho, dir_a, out_a, dir_b, out_b)
}

/// All four outcome probabilities for one pair of directions, ordered
/// `(+,+), (+,−), (−,+), (−,−)`.
pub fn joint_distribution(
    state: &SchmidtState,
    dir_a: &Direction,
    dir_b: &Direction,
) -> Result<[f64; 4]> {
    let rho = density_matrix(state);
    let mut out = [0.0; 4];
    for (k, (oa, ob)) in outcome_pairs().into_iter().enumerate() {
        out[k] = trace_probability(&rho, dir_a, oa, dir_b, ob)?;
    }
    Ok(out)
}

pub fn outcome_pairs() -> [(Outcome, Outcome); 4] {
    use Outcome::*;
    [(Plus, Plus), (Plus, Minus), (Minus, Plus), (Minus, Minus)]
}

fn trace_probability(
    rho: &ComplexMatrix,
    dir_a: &Direction,
    out_a: Outcome,
    dir_b: &Direction,
    out_b: Outcome,
) -> Result<f64> {
    let pi = projector(dir_a, out_a).kron(&projector(dir_b, out_b));
    let t = rho.matmul(&pi).trace();
    if t.im.abs() > ORACLE_CONSISTENCY_TOL {
        return Err(Error::Numerical(format!(
            "trace has imaginary part {:e}",
            t.im
        )));
    }
    if !(-ORACLE_CONSISTENCY_TOL..=1.0 + ORACLE_CONSISTENCY_TOL).contains(&t.re) {
        return Err(Error::Numerical(format!(
            "trace {} is not a probability",
            t.re
        )));
    }
    Ok(t.re.clamp(0.0, 1.0))
}

/// Wraps a phase into `[0, 2π)`.
pub fn wrap_phase(phi: f64) -> f64 {
    let w = phi.rem_euclid(TAU);
    // rem_euclid can return TAU itself for tiny negative inputs
    if w >= TAU {
        0.0
    } else {
        w
    }
}
