//! Tensor products of Pauli X and Z operators, X^a Z^b, indexed by two
//! classical bit strings.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{QuantumError, StateVector};
use crate::bits::BitString;

/// The unitary X^a Z^b = (x) over qubits i of X^{a_i} Z^{b_i}.
///
/// Acting on a basis state: X^a Z^b |x> = (-1)^(b.x) |x (+) a>, the Z layer
/// acting first. The adjoint is Z^b X^a.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PauliString {
    alpha: BitString,
    beta: BitString,
}

impl PauliString {
    pub fn new(alpha: BitString, beta: BitString) -> Result<Self, QuantumError> {
        if alpha.len() != beta.len() {
            return Err(QuantumError::DimensionMismatch(alpha.len(), beta.len()));
        }
        if alpha.is_empty() {
            return Err(QuantumError::EmptyRegister);
        }
        Ok(PauliString { alpha, beta })
    }

    /// All 2^(2n) pauli strings on `n` qubits, enumerated by (alpha, beta)
    /// index pairs.
    pub fn enumerate(n: usize) -> impl Iterator<Item = PauliString> {
        (0..1usize << n).flat_map(move |a| {
            (0..1usize << n).map(move |b| PauliString {
                alpha: BitString::from_index(a, n),
                beta: BitString::from_index(b, n),
            })
        })
    }

    pub fn identity(n: usize) -> Self {
        PauliString {
            alpha: BitString::zeros(n),
            beta: BitString::zeros(n),
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &BitString {
        &self.alpha
    }

    pub fn beta(&self) -> &BitString {
        &self.beta
    }

    fn check_state(&self, state: &StateVector) -> Result<(), QuantumError> {
        if state.n_qubits() != self.n_qubits() {
            return Err(QuantumError::PauliLengthMismatch {
                key_len: self.n_qubits(),
                n_qubits: state.n_qubits(),
            });
        }
        Ok(())
    }

    /// X^a Z^b |psi>.
    pub fn apply(&self, state: &StateVector) -> Result<StateVector, QuantumError> {
        self.check_state(state)?;
        let n = state.n_qubits();
        let amask = self.alpha.to_index();
        let bmask = self.beta.to_index();
        let mut out = vec![Complex64::new(0.0, 0.0); state.dim()];
        for (idx, amp) in state.amplitudes().iter().enumerate() {
            let sign = if (idx & bmask).count_ones() % 2 == 1 {
                -1.0
            } else {
                1.0
            };
            out[idx ^ amask] = amp * sign;
        }
        // Index arithmetic preserves power-of-two length and the norm.
        StateVector::from_amplitudes(out).map_err(|_| QuantumError::NotPowerOfTwo(1 << n))
    }

    /// The adjoint (X^a Z^b)^dag = Z^b X^a applied to |psi>.
    pub fn apply_dagger(&self, state: &StateVector) -> Result<StateVector, QuantumError> {
        self.check_state(state)?;
        let amask = self.alpha.to_index();
        let bmask = self.beta.to_index();
        let mut out = vec![Complex64::new(0.0, 0.0); state.dim()];
        for (idx, amp) in state.amplitudes().iter().enumerate() {
            let flipped = idx ^ amask;
            let sign = if (flipped & bmask).count_ones() % 2 == 1 {
                -1.0
            } else {
                1.0
            };
            out[flipped] = amp * sign;
        }
        StateVector::from_amplitudes(out)
            .map_err(|_| QuantumError::NotPowerOfTwo(state.dim()))
    }

    /// Dense 2^n x 2^n matrix, row-major. Intended for small n (tests,
    /// orthonormality checks).
    pub fn matrix(&self) -> Vec<Complex64> {
        let n = self.n_qubits();
        let dim = 1usize << n;
        let amask = self.alpha.to_index();
        let bmask = self.beta.to_index();
        let mut m = vec![Complex64::new(0.0, 0.0); dim * dim];
        for col in 0..dim {
            let row = col ^ amask;
            let sign = if (col & bmask).count_ones() % 2 == 1 {
                -1.0
            } else {
                1.0
            };
            m[row * dim + col] = Complex64::new(sign, 0.0);
        }
        m
    }
}

/// Operation form: X^a Z^b applied qubit-wise to the state.
pub fn apply_pauli_string(
    state: &StateVector,
    p: &PauliString,
) -> Result<StateVector, QuantumError> {
    p.apply(state)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pauli(alpha: &str, beta: &str) -> PauliString {
        PauliString::new(alpha.parse().unwrap(), beta.parse().unwrap()).unwrap()
    }

    #[test]
    fn identity_pad_leaves_state() {
        let s = StateVector::from_bits(&"0110".parse().unwrap()).unwrap();
        let out = pauli("0000", "0000").apply(&s).unwrap();
        assert_eq!(out, s);
    }

    #[test]
    fn bit_flip() {
        let s = StateVector::zero(1).unwrap();
        let out = pauli("1", "0").apply(&s).unwrap();
        assert_eq!(out.amplitude(1), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn phase_flip_on_plus() {
        let plus = StateVector::zero(1)
            .unwrap()
            .apply_gate(&super::super::Gate::H { target: 0 })
            .unwrap();
        let out = pauli("0", "1").apply(&plus).unwrap();
        // (|0> - |1>)/sqrt(2)
        assert!((out.amplitude(0).re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
        assert!((out.amplitude(1).re + std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn dagger_inverts_apply() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let s = StateVector::random(4, &mut rng).unwrap();
        let p = pauli("1011", "0110");
        let round = p.apply_dagger(&p.apply(&s).unwrap()).unwrap();
        for (a, b) in s.amplitudes().iter().zip(round.amplitudes()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn length_mismatch_rejected() {
        let s = StateVector::zero(2).unwrap();
        let p = pauli("1", "0");
        assert!(matches!(
            p.apply(&s),
            Err(QuantumError::PauliLengthMismatch { .. })
        ));
    }

    #[test]
    fn matrix_matches_apply_on_basis_states() {
        let p = pauli("10", "11");
        let m = p.matrix();
        for col in 0..4 {
            let basis = StateVector::basis(2, col).unwrap();
            let applied = p.apply(&basis).unwrap();
            for row in 0..4 {
                assert!((m[row * 4 + col] - applied.amplitude(row)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn orthonormal_under_trace_inner_product() {
        // Tr(M1 M2^dag)/2^n = 1 iff (alpha,beta) pairs match, else 0, over
        // all 16x16 pairs at n = 2.
        let all: Vec<PauliString> = PauliString::enumerate(2).collect();
        assert_eq!(all.len(), 16);
        for (i, p1) in all.iter().enumerate() {
            let m1 = p1.matrix();
            for (j, p2) in all.iter().enumerate() {
                let m2 = p2.matrix();
                let mut tr = Complex64::new(0.0, 0.0);
                for r in 0..4 {
                    for k in 0..4 {
                        // (M1 M2^dag)[r,r] = sum_k M1[r,k] conj(M2[r,k])
                        tr += m1[r * 4 + k] * m2[r * 4 + k].conj();
                    }
                }
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!(
                    (tr / 4.0 - Complex64::new(expected, 0.0)).norm() < 1e-10,
                    "pair {i},{j}"
                );
            }
        }
    }
}
