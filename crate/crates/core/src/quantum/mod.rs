//! Dense statevector and density-matrix simulation of small qubit registers.
//!
//! Everything is exact (no sampling noise except where measurement is
//! explicitly requested) and capped at [`MAX_QUBITS`] qubits, which keeps the
//! largest state at 4096 amplitudes. Qubit 0 is the leftmost bit of a basis
//! bitstring, i.e. the most significant bit of the amplitude index; this
//! convention is fixed here and used everywhere in the crate.
//!
//! All values are immutable after construction; operations are pure functions
//! returning new values, so everything is safe to share across threads.

mod density;
mod gate;
mod linalg;
mod measure;
mod pauli;
mod state;

pub use density::{
    fidelity, mix_ensemble, partial_trace, pauli_coefficient, DensityMatrix,
    DensityValidationError,
};
pub use gate::{apply_gate, Gate};
pub use linalg::hermitian_eigenvalues;
pub use measure::{measure, sample_outcome, MeasurementRecord};
pub use pauli::{apply_pauli_string, PauliString};
pub use state::StateVector;

use thiserror::Error;

/// Hard cap on register width for dense simulation.
pub const MAX_QUBITS: usize = 12;

#[derive(Debug, Error, PartialEq)]
pub enum QuantumError {
    #[error("register of {0} qubits exceeds the {MAX_QUBITS}-qubit simulation cap")]
    TooManyQubits(usize),
    #[error("register must hold at least one qubit")]
    EmptyRegister,
    #[error("qubit index {index} out of range for {n_qubits}-qubit register")]
    QubitOutOfRange { index: usize, n_qubits: usize },
    #[error("control and target qubits must differ (both {0})")]
    ControlEqualsTarget(usize),
    #[error("amplitude vector length {0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("state norm {0} deviates from 1 beyond tolerance")]
    NotNormalized(f64),
    #[error("operand dimensions disagree: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("pauli string length {key_len} does not match register of {n_qubits} qubits")]
    PauliLengthMismatch { key_len: usize, n_qubits: usize },
    #[error("ensemble probabilities sum to {0}, expected 1")]
    BadProbabilitySum(f64),
    #[error("ensemble probability {0} is negative")]
    NegativeProbability(f64),
    #[error("ensemble must contain at least one entry")]
    EmptyEnsemble,
    #[error("cannot trace out all {0} qubits of a register")]
    TraceAllQubits(usize),
    #[error("duplicate qubit index {0} in trace set")]
    DuplicateTraceQubit(usize),
    #[error("measurement requires at least one shot")]
    ZeroShots,
}
