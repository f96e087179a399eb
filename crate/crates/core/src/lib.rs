//! Cabello-type nonlocality without inequality for two-qubit pure states.
//!
//! * [`quantum`]: Schmidt states, spin projectors and a Born-rule trace oracle.
//! * [`engine`]: closed-form probabilities, the zero-probability constraint
//!   solver, witness settings and the maximal-entanglement no-go check.
//! * [`optimize`]: maximization of the success gap `q4 − q1`, the Hardy
//!   special case, stationarity checks and β sweeps.
//! * [`lhv`]: the local deterministic-strategy bound and Monte Carlo sampling.
//! * [`cli`]: the `cabello` command-line front end.

pub mod cli;
pub mod engine;
pub mod error;
pub mod lhv;
pub mod optimize;
pub mod quantum;

pub use engine::{
    cabello_probs, check_conditions, nogo_verify, solve_constraints, witness_from_theta_e,
    witness_settings, Branch, CabelloProbs, Clause, ConditionTolerance, ConstraintSolution,
    NoGoReport, Settings, Verdict,
};
pub use error::{Error, Result};
pub use optimize::{
    gap_general, gap_symmetric, hardy_max, maximize_gap, stationarity_residual, sweep,
    MaximizeOptions, OptimumRecord,
};
pub use quantum::{
    density_matrix, joint_probability_oracle, projector, ComplexMatrix, Direction, Outcome,
    SchmidtState,
};
