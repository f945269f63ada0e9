//! Quantum one-time-pad protection for classical records.
//!
//! A record's bits become a computational basis state (or a dataset becomes a
//! uniform superposition of its rows), fresh pad keys come from a simulated
//! Hadamard-measure QRNG, and the pad itself is the per-qubit X^a Z^b
//! conjugation whose exhaustive key average is the maximally mixed state.
//! [`verify_perfect_secrecy`] checks that average directly.
//!
//! Keys never travel with ciphertext: the ciphertext rows carry only a
//! `key_id` resolved through a separate [`KeyLedger`].

mod cipher;
mod encode;
mod keys;
mod schema;
mod secrecy;

pub use cipher::{
    decrypt, decrypt_record, encrypt, encrypt_record, CipherPayload, CipherRecord, CipherState,
    DecryptedPayload,
};
pub use encode::{basis_encode_record, superpose_dataset, DatasetSuperposition, EncodedRecord};
pub use keys::{qrng_generate, KeyLedger, KeyLedgerEntry, KeyOrigin, PaddingKey};
pub use schema::{DatasetSchema, FieldKind, FieldSpec};
pub use secrecy::{verify_perfect_secrecy, SecrecyMode, SecrecyReport};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum QotpError {
    #[error(transparent)]
    Quantum(#[from] crate::quantum::QuantumError),
    #[error(transparent)]
    Bits(#[from] crate::bits::BitStringError),
    #[error("record bits must be 1..={max} long, got {len}")]
    BadRecordLength { len: usize, max: usize },
    #[error("dataset rows must share one length; row {index} has {len}, expected {expected}")]
    RowLengthMismatch {
        index: usize,
        len: usize,
        expected: usize,
    },
    #[error("duplicate bit string {0} in dataset")]
    DuplicateRow(String),
    #[error("dataset must contain at least one row")]
    EmptyDataset,
    #[error("key length {key_len} does not match payload of {n_qubits} qubits")]
    KeyLengthMismatch { key_len: usize, n_qubits: usize },
    #[error("exhaustive secrecy verification supports at most 4 qubits, got {0}")]
    ExhaustiveTooLarge(usize),
    #[error("sampled secrecy verification needs 1..={max} keys, got {requested}")]
    BadSampleCount { requested: usize, max: usize },
    #[error("unknown key id {0}")]
    UnknownKeyId(String),
    #[error("duplicate key id {0}")]
    DuplicateKeyId(String),
    #[error("schema error: {0}")]
    Schema(String),
}
