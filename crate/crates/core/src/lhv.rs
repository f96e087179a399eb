//! The local-hidden-variable side of the argument.
//!
//! Every local deterministic strategy satisfies
//! `1[D=+1, E=+1] ≤ 1[F=+1, G=+1] + 1[D=+1, G=−1] + 1[F=−1, E=+1]`,
//! so every local model obeys `q4 ≤ q1 + q2 + q3`. With `q2 = q3 = 0` this
//! is `q4 ≤ q1`, and any quantum setting with `q4 > q1` is nonlocal.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};

use crate::engine::{cabello_probs, CabelloProbs, Settings};
use crate::error::{Error, Result};
use crate::quantum::{joint_distribution, Direction, Outcome, SchmidtState};

/// Pre-assigned outcomes for all four observables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DeterministicStrategy {
    pub f: Outcome,
    pub d: Outcome,
    pub g: Outcome,
    pub e: Outcome,
}

impl DeterministicStrategy {
    /// All 16 strategies, indexed by the bits `(f, d, g, e)` with 1 meaning −1.
    pub fn all() -> Vec<Self> {
        (0u8..16).map(Self::from_index).collect()
    }

    pub fn from_index(index: u8) -> Self {
        let bit = |k: u8| {
            if index >> k & 1 == 1 {
                Outcome::Minus
            } else {
                Outcome::Plus
            }
        };
        Self {
            f: bit(3),
            d: bit(2),
            g: bit(1),
            e: bit(0),
        }
    }

    /// Event indicators `[F+G+, D+G−, F−E+, D+E+]`.
    pub fn indicators(&self) -> [u8; 4] {
        use Outcome::*;
        let ind = |b: bool| b as u8;
        [
            ind(self.f == Plus && self.g == Plus),
            ind(self.d == Plus && self.g == Minus),
            ind(self.f == Minus && self.e == Plus),
            ind(self.d == Plus && self.e == Plus),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyRow {
    pub strategy: DeterministicStrategy,
    pub lhs: u8,
    pub rhs: u8,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalBoundReport {
    pub all_hold: bool,
    pub per_strategy: Vec<StrategyRow>,
}

pub fn local_bound_check() -> LocalBoundReport {
    let per_strategy: Vec<StrategyRow> = DeterministicStrategy::all()
        .into_iter()
        .map(|strategy| {
            let [fg, dg, fe, de] = strategy.indicators();
            let rhs = fg + dg + fe;
            StrategyRow {
                strategy,
                lhs: de,
                rhs,
                holds: de <= rhs,
            }
        })
        .collect();
    LocalBoundReport {
        all_hold: per_strategy.iter().all(|r| r.holds),
        per_strategy,
    }
}

/// The four probabilities of a convex mixture of deterministic strategies,
/// with `weights[i]` applied to `DeterministicStrategy::from_index(i)`.
pub fn mixture_probs(weights: &[f64; 16]) -> Result<CabelloProbs> {
    if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
        return Err(Error::invalid("mixture weights must be non-negative"));
    }
    let total: f64 = weights.iter().sum();
    if total <= 0.0 {
        return Err(Error::invalid("mixture weights sum to zero"));
    }
    let mut q = [0.0; 4];
    for (i, w) in weights.iter().enumerate() {
        let ind = DeterministicStrategy::from_index(i as u8).indicators();
        for k in 0..4 {
            q[k] += w / total * ind[k] as f64;
        }
    }
    Ok(CabelloProbs {
        q1: q[0],
        q2: q[1],
        q3: q[2],
        q4: q[3],
    })
}

/// `q4 − q1 − q2 − q3`; strictly positive values rule out every local model.
pub fn quantum_violation(state: &SchmidtState, settings: &Settings) -> f64 {
    cabello_probs(state, settings).local_violation()
}

/// Observable pairs in event order: (F,G), (D,G), (F,E), (D,E).
pub const PAIR_LABELS: [&str; 4] = ["FG", "DG", "FE", "DE"];

/// Outcome pattern counted for each pair: `F+G+`, `D+G−`, `F−E+`, `D+E+`,
/// as an index into [`crate::quantum::outcome_pairs`] ordering.
const EVENT_SLOT: [usize; 4] = [0, 1, 2, 0];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleStats {
    pub seed: u64,
    pub trials_per_pair: u64,
    /// Outcome counts per pair, ordered `(+,+), (+,−), (−,+), (−,−)`.
    pub outcome_counts: [[u64; 4]; 4],
}

impl SampleStats {
    /// Counts of the four Cabello events.
    pub fn event_counts(&self) -> [u64; 4] {
        let mut out = [0; 4];
        for p in 0..4 {
            out[p] = self.outcome_counts[p][EVENT_SLOT[p]];
        }
        out
    }

    /// Estimated `(q̂1, q̂2, q̂3, q̂4)`.
    pub fn estimates(&self) -> CabelloProbs {
        let n = self.trials_per_pair as f64;
        let [a, b, c, d] = self.event_counts().map(|k| k as f64 / n);
        CabelloProbs {
            q1: a,
            q2: b,
            q3: c,
            q4: d,
        }
    }
}

fn pair_directions(settings: &Settings) -> [(Direction, Direction); 4] {
    [
        (settings.f, settings.g),
        (settings.d, settings.g),
        (settings.f, settings.e),
        (settings.d, settings.e),
    ]
}

/// Samples outcome pairs from the exact joint distributions by inverse CDF.
/// Pair `p` draws from `ChaCha20Rng` seeded with `seed` on stream `p`.
pub fn sample_probs(
    state: &SchmidtState,
    settings: &Settings,
    trials_per_pair: u64,
    seed: u64,
) -> Result<SampleStats> {
    if trials_per_pair == 0 {
        return Err(Error::invalid("trials_per_pair must be at least 1"));
    }
    let mut outcome_counts = [[0u64; 4]; 4];
    for (p, (a, b)) in pair_directions(settings).iter().enumerate() {
        let dist = joint_distribution(state, a, b)?;
        let total: f64 = dist.iter().sum();
        let mut cdf = [0.0; 4];
        let mut acc = 0.0;
        for k in 0..4 {
            acc += dist[k] / total;
            cdf[k] = acc;
        }
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        rng.set_stream(p as u64);
        for _ in 0..trials_per_pair {
            let u: f64 = rng.random();
            let k = cdf.iter().position(|&c| u < c).unwrap_or(3);
            outcome_counts[p][k] += 1;
        }
    }
    Ok(SampleStats {
        seed,
        trials_per_pair,
        outcome_counts,
    })
}
