//! Computational-basis measurement sampling.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{QuantumError, StateVector};
use crate::bits::BitString;

/// Outcome tally of repeated measurements; counts always sum to `shots` and
/// every key has the register's bit length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MeasurementRecord {
    pub shots: u64,
    pub counts: BTreeMap<String, u64>,
}

impl MeasurementRecord {
    pub fn count(&self, bitstring: &str) -> u64 {
        self.counts.get(bitstring).copied().unwrap_or(0)
    }

    /// Empirical frequency of an outcome.
    pub fn frequency(&self, bitstring: &str) -> f64 {
        self.count(bitstring) as f64 / self.shots as f64
    }
}

/// Sample one basis outcome from the state's Born distribution.
pub fn sample_outcome<R: Rng>(state: &StateVector, rng: &mut R) -> BitString {
    let r: f64 = rng.gen();
    let mut acc = 0.0;
    let n = state.n_qubits();
    let last = state.dim() - 1;
    for (idx, amp) in state.amplitudes().iter().enumerate() {
        acc += amp.norm_sqr();
        if r < acc || idx == last {
            return BitString::from_index(idx, n);
        }
    }
    unreachable!("cumulative probability covers [0, 1)")
}

/// Measure `shots` times in the computational basis; deterministic for a
/// fixed seed.
pub fn measure(
    state: &StateVector,
    shots: u64,
    seed: u64,
) -> Result<MeasurementRecord, QuantumError> {
    if shots == 0 {
        return Err(QuantumError::ZeroShots);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    for _ in 0..shots {
        let outcome = sample_outcome(state, &mut rng);
        *counts.entry(outcome.to_string()).or_insert(0) += 1;
    }
    Ok(MeasurementRecord { shots, counts })
}
