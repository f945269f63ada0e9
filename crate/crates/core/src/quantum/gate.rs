//! Primitive gates on statevector registers.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{QuantumError, StateVector};

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// A single primitive gate. Rotation angles are radians.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Gate {
    X { target: usize },
    Z { target: usize },
    H { target: usize },
    Identity { target: usize },
    Cnot { control: usize, target: usize },
    RotX { target: usize, angle: f64 },
    RotY { target: usize, angle: f64 },
    RotZ { target: usize, angle: f64 },
}

impl Gate {
    pub fn validate(&self, n_qubits: usize) -> Result<(), QuantumError> {
        let check = |index: usize| {
            if index >= n_qubits {
                Err(QuantumError::QubitOutOfRange { index, n_qubits })
            } else {
                Ok(())
            }
        };
        match *self {
            Gate::X { target }
            | Gate::Z { target }
            | Gate::H { target }
            | Gate::Identity { target }
            | Gate::RotX { target, .. }
            | Gate::RotY { target, .. }
            | Gate::RotZ { target, .. } => check(target),
            Gate::Cnot { control, target } => {
                check(control)?;
                check(target)?;
                if control == target {
                    return Err(QuantumError::ControlEqualsTarget(control));
                }
                Ok(())
            }
        }
    }

    /// The 2x2 matrix of a single-qubit gate, row-major.
    pub fn single_qubit_matrix(&self) -> Option<[Complex64; 4]> {
        let c = |re: f64, im: f64| Complex64::new(re, im);
        match *self {
            Gate::X { .. } => Some([c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]),
            Gate::Z { .. } => Some([c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)]),
            Gate::H { .. } => Some([
                c(FRAC_1_SQRT_2, 0.0),
                c(FRAC_1_SQRT_2, 0.0),
                c(FRAC_1_SQRT_2, 0.0),
                c(-FRAC_1_SQRT_2, 0.0),
            ]),
            Gate::Identity { .. } => Some([c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]),
            Gate::RotX { angle, .. } => {
                let (h, s) = ((angle / 2.0).cos(), (angle / 2.0).sin());
                Some([c(h, 0.0), c(0.0, -s), c(0.0, -s), c(h, 0.0)])
            }
            Gate::RotY { angle, .. } => {
                let (h, s) = ((angle / 2.0).cos(), (angle / 2.0).sin());
                Some([c(h, 0.0), c(-s, 0.0), c(s, 0.0), c(h, 0.0)])
            }
            Gate::RotZ { angle, .. } => Some([
                Complex64::from_polar(1.0, -angle / 2.0),
                c(0.0, 0.0),
                c(0.0, 0.0),
                Complex64::from_polar(1.0, angle / 2.0),
            ]),
            Gate::Cnot { .. } => None,
        }
    }

    /// Apply the gate in place to a dense amplitude vector.
    pub(crate) fn apply_in_place(&self, amps: &mut [Complex64], n_qubits: usize) {
        match *self {
            Gate::Cnot { control, target } => {
                let cmask = StateVector::qubit_mask(n_qubits, control);
                let tmask = StateVector::qubit_mask(n_qubits, target);
                // Swap each |c=1, t=0> with its |c=1, t=1> partner.
                for i in 0..amps.len() {
                    if i & cmask != 0 && i & tmask == 0 {
                        amps.swap(i, i | tmask);
                    }
                }
            }
            Gate::Identity { .. } => {}
            _ => {
                let target = match *self {
                    Gate::X { target }
                    | Gate::Z { target }
                    | Gate::H { target }
                    | Gate::RotX { target, .. }
                    | Gate::RotY { target, .. }
                    | Gate::RotZ { target, .. } => target,
                    _ => unreachable!(),
                };
                let [g00, g01, g10, g11] = self
                    .single_qubit_matrix()
                    .expect("single-qubit gate has a 2x2 matrix");
                let mask = StateVector::qubit_mask(n_qubits, target);
                for i in 0..amps.len() {
                    if i & mask == 0 {
                        let j = i | mask;
                        let a0 = amps[i];
                        let a1 = amps[j];
                        amps[i] = g00 * a0 + g01 * a1;
                        amps[j] = g10 * a0 + g11 * a1;
                    }
                }
            }
        }
    }
}

/// Convenience for applying a gate to a state (operation form of
/// [`StateVector::apply_gate`]).
pub fn apply_gate(state: &StateVector, gate: &Gate) -> Result<StateVector, QuantumError> {
    state.apply_gate(gate)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn assert_close(a: Complex64, b: Complex64, tol: f64) {
        assert!((a - b).norm() < tol, "{a} vs {b}");
    }

    #[test]
    fn hadamard_on_zero_gives_plus() {
        let s = StateVector::zero(1).unwrap();
        let s = s.apply_gate(&Gate::H { target: 0 }).unwrap();
        assert_close(s.amplitude(0), Complex64::new(FRAC_1_SQRT_2, 0.0), 1e-12);
        assert_close(s.amplitude(1), Complex64::new(FRAC_1_SQRT_2, 0.0), 1e-12);
    }

    #[test]
    fn cnot_truth_table() {
        // |10> -> |11>
        let s = StateVector::from_bits(&"10".parse().unwrap()).unwrap();
        let s = s
            .apply_gate(&Gate::Cnot {
                control: 0,
                target: 1,
            })
            .unwrap();
        assert_close(s.amplitude(0b11), Complex64::new(1.0, 0.0), 1e-12);
        // |01> stays |01> for control 0
        let s = StateVector::from_bits(&"01".parse().unwrap()).unwrap();
        let s = s
            .apply_gate(&Gate::Cnot {
                control: 0,
                target: 1,
            })
            .unwrap();
        assert_close(s.amplitude(0b01), Complex64::new(1.0, 0.0), 1e-12);
    }

    #[test]
    fn rotz_inverse_restores_state() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let s = StateVector::random(3, &mut rng).unwrap();
        let theta = 0.731;
        let fwd = s
            .apply_gate(&Gate::RotZ {
                target: 1,
                angle: theta,
            })
            .unwrap();
        let back = fwd
            .apply_gate(&Gate::RotZ {
                target: 1,
                angle: -theta,
            })
            .unwrap();
        for (a, b) in s.amplitudes().iter().zip(back.amplitudes()) {
            assert_close(*a, *b, 1e-10);
        }
    }

    #[test]
    fn index_errors() {
        let s = StateVector::zero(2).unwrap();
        assert!(matches!(
            s.apply_gate(&Gate::X { target: 2 }),
            Err(QuantumError::QubitOutOfRange { .. })
        ));
        assert_eq!(
            s.apply_gate(&Gate::Cnot {
                control: 1,
                target: 1
            }),
            Err(QuantumError::ControlEqualsTarget(1))
        );
    }

    #[test]
    fn single_qubit_matrices_are_unitary() {
        let gates = [
            Gate::X { target: 0 },
            Gate::Z { target: 0 },
            Gate::H { target: 0 },
            Gate::Identity { target: 0 },
            Gate::RotX {
                target: 0,
                angle: 0.913,
            },
            Gate::RotY {
                target: 0,
                angle: -2.17,
            },
            Gate::RotZ {
                target: 0,
                angle: 4.44,
            },
        ];
        for g in gates {
            let m = g.single_qubit_matrix().unwrap();
            // U U^dag = I
            let entries = [
                m[0] * m[0].conj() + m[1] * m[1].conj(),
                m[0] * m[2].conj() + m[1] * m[3].conj(),
                m[2] * m[0].conj() + m[3] * m[1].conj(),
                m[2] * m[2].conj() + m[3] * m[3].conj(),
            ];
            assert_close(entries[0], Complex64::new(1.0, 0.0), 1e-10);
            assert_close(entries[1], Complex64::new(0.0, 0.0), 1e-10);
            assert_close(entries[2], Complex64::new(0.0, 0.0), 1e-10);
            assert_close(entries[3], Complex64::new(1.0, 0.0), 1e-10);
        }
    }

    #[test]
    fn norm_preserved_under_long_random_sequence() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut state = StateVector::random(6, &mut rng).unwrap();
        for step in 0..100 {
            let q = step % 6;
            let gate = match step % 5 {
                0 => Gate::H { target: q },
                1 => Gate::RotX {
                    target: q,
                    angle: 0.1 + step as f64 * 0.07,
                },
                2 => Gate::Cnot {
                    control: q,
                    target: (q + 1) % 6,
                },
                3 => Gate::RotY {
                    target: q,
                    angle: -1.3 + step as f64 * 0.11,
                },
                _ => Gate::Z { target: q },
            };
            state = state.apply_gate(&gate).unwrap();
        }
        assert!((state.norm() - 1.0).abs() < 1e-8);
    }
}
