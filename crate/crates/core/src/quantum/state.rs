//! Pure states of an n-qubit register as dense amplitude vectors.

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{Gate, QuantumError, MAX_QUBITS};
use crate::bits::BitString;

const NORM_TOL: f64 = 1e-9;

/// A normalized pure state on `n_qubits` qubits, 2^n complex amplitudes.
///
/// Serialized as `{n_qubits, amplitudes: [[re, im], ...]}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "StateVectorRepr", into = "StateVectorRepr")]
pub struct StateVector {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
struct StateVectorRepr {
    n_qubits: usize,
    amplitudes: Vec<[f64; 2]>,
}

impl From<StateVector> for StateVectorRepr {
    fn from(s: StateVector) -> Self {
        StateVectorRepr {
            n_qubits: s.n_qubits,
            amplitudes: s.amplitudes.iter().map(|a| [a.re, a.im]).collect(),
        }
    }
}

impl TryFrom<StateVectorRepr> for StateVector {
    type Error = QuantumError;

    fn try_from(repr: StateVectorRepr) -> Result<Self, Self::Error> {
        let amps = repr
            .amplitudes
            .iter()
            .map(|&[re, im]| Complex64::new(re, im))
            .collect::<Vec<_>>();
        let state = StateVector::from_amplitudes(amps)?;
        if state.n_qubits != repr.n_qubits {
            return Err(QuantumError::DimensionMismatch(
                1 << repr.n_qubits,
                state.dim(),
            ));
        }
        Ok(state)
    }
}

impl StateVector {
    /// |0...0> on `n_qubits` qubits.
    pub fn zero(n_qubits: usize) -> Result<Self, QuantumError> {
        check_register(n_qubits)?;
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amplitudes[0] = Complex64::new(1.0, 0.0);
        Ok(StateVector {
            n_qubits,
            amplitudes,
        })
    }

    /// Computational basis state |index> on `n_qubits` qubits.
    pub fn basis(n_qubits: usize, index: usize) -> Result<Self, QuantumError> {
        check_register(n_qubits)?;
        if index >= 1 << n_qubits {
            return Err(QuantumError::QubitOutOfRange {
                index,
                n_qubits,
            });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(StateVector {
            n_qubits,
            amplitudes,
        })
    }

    /// Basis state |bits>.
    pub fn from_bits(bits: &BitString) -> Result<Self, QuantumError> {
        if bits.is_empty() {
            return Err(QuantumError::EmptyRegister);
        }
        Self::basis(bits.len(), bits.to_index())
    }

    /// Build a state from raw amplitudes; the vector must be a power-of-two
    /// length and normalized within 1e-9.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self, QuantumError> {
        let dim = amplitudes.len();
        if dim == 0 || !dim.is_power_of_two() {
            return Err(QuantumError::NotPowerOfTwo(dim));
        }
        let n_qubits = dim.trailing_zeros() as usize;
        check_register(n_qubits)?;
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > NORM_TOL {
            return Err(QuantumError::NotNormalized(norm_sq.sqrt()));
        }
        Ok(StateVector {
            n_qubits,
            amplitudes,
        })
    }

    /// Haar-like random pure state: complex Gaussian components, normalized.
    pub fn random<R: Rng>(n_qubits: usize, rng: &mut R) -> Result<Self, QuantumError> {
        check_register(n_qubits)?;
        let dim = 1 << n_qubits;
        let mut amplitudes = Vec::with_capacity(dim);
        for _ in 0..dim {
            amplitudes.push(Complex64::new(gaussian(rng), gaussian(rng)));
        }
        let norm: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        for a in &mut amplitudes {
            *a /= norm;
        }
        Ok(StateVector {
            n_qubits,
            amplitudes,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    /// Born-rule probabilities per basis outcome.
    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// <self|other>.
    pub fn inner(&self, other: &StateVector) -> Result<Complex64, QuantumError> {
        if self.dim() != other.dim() {
            return Err(QuantumError::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Equality up to a global phase: |<self|other>| = 1 within `tol`.
    pub fn approx_eq_up_to_phase(&self, other: &StateVector, tol: f64) -> bool {
        match self.inner(other) {
            Ok(ip) => (ip.norm() - 1.0).abs() <= tol,
            Err(_) => false,
        }
    }

    /// Apply a single gate, returning the new state.
    pub fn apply_gate(&self, gate: &Gate) -> Result<Self, QuantumError> {
        gate.validate(self.n_qubits)?;
        let mut amps = self.amplitudes.clone();
        gate.apply_in_place(&mut amps, self.n_qubits);
        Ok(StateVector {
            n_qubits: self.n_qubits,
            amplitudes: amps,
        })
    }

    /// Apply a gate sequence left to right.
    pub fn apply_gates(&self, gates: &[Gate]) -> Result<Self, QuantumError> {
        let mut amps = self.amplitudes.clone();
        for gate in gates {
            gate.validate(self.n_qubits)?;
            gate.apply_in_place(&mut amps, self.n_qubits);
        }
        Ok(StateVector {
            n_qubits: self.n_qubits,
            amplitudes: amps,
        })
    }

    /// Tensor product self (x) other, self occupying the leading qubits.
    pub fn tensor(&self, other: &StateVector) -> Result<Self, QuantumError> {
        let n = self.n_qubits + other.n_qubits;
        check_register(n)?;
        let mut amplitudes = Vec::with_capacity(1 << n);
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amplitudes.push(a * b);
            }
        }
        Ok(StateVector {
            n_qubits: n,
            amplitudes,
        })
    }

    /// Bit mask selecting qubit `q` inside an amplitude index.
    pub(crate) fn qubit_mask(n_qubits: usize, q: usize) -> usize {
        1 << (n_qubits - 1 - q)
    }
}

fn check_register(n_qubits: usize) -> Result<(), QuantumError> {
    if n_qubits == 0 {
        return Err(QuantumError::EmptyRegister);
    }
    if n_qubits > MAX_QUBITS {
        return Err(QuantumError::TooManyQubits(n_qubits));
    }
    Ok(())
}

/// Standard normal sample via Box-Muller; `rng` drives determinism.
fn gaussian<R: Rng>(rng: &mut R) -> f64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn zero_state_is_basis_zero() {
        let s = StateVector::zero(3).unwrap();
        assert_eq!(s.dim(), 8);
        assert_eq!(s.amplitude(0), Complex64::new(1.0, 0.0));
        assert!((s.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn from_bits_places_single_amplitude() {
        let s = StateVector::from_bits(&"101".parse().unwrap()).unwrap();
        assert_eq!(s.amplitude(5), Complex64::new(1.0, 0.0));
        for (i, a) in s.amplitudes().iter().enumerate() {
            if i != 5 {
                assert_eq!(*a, Complex64::new(0.0, 0.0));
            }
        }
    }

    #[test]
    fn register_caps_enforced() {
        assert_eq!(StateVector::zero(0), Err(QuantumError::EmptyRegister));
        assert_eq!(
            StateVector::zero(MAX_QUBITS + 1),
            Err(QuantumError::TooManyQubits(MAX_QUBITS + 1))
        );
    }

    #[test]
    fn from_amplitudes_rejects_unnormalized() {
        let amps = vec![Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)];
        assert!(matches!(
            StateVector::from_amplitudes(amps),
            Err(QuantumError::NotNormalized(_))
        ));
    }

    #[test]
    fn random_state_is_normalized_and_seeded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let a = StateVector::random(4, &mut rng).unwrap();
        assert!((a.norm() - 1.0).abs() < 1e-12);
        let mut rng2 = ChaCha8Rng::seed_from_u64(7);
        let b = StateVector::random(4, &mut rng2).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn tensor_orders_leading_qubits_first() {
        let zero = StateVector::zero(1).unwrap();
        let one = StateVector::basis(1, 1).unwrap();
        let both = zero.tensor(&one).unwrap();
        // |0> (x) |1> = |01> = index 1
        assert_eq!(both.amplitude(1), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn json_round_trip_matches_schema() {
        let s = StateVector::from_bits(&"10".parse().unwrap()).unwrap();
        let json = serde_json::to_value(&s).unwrap();
        assert_eq!(json["n_qubits"], 2);
        assert_eq!(json["amplitudes"][2][0], 1.0);
        let back: StateVector = serde_json::from_value(json).unwrap();
        assert_eq!(back, s);
    }
}
