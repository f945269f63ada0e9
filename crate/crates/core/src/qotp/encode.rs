//! Basis encoding of classical records and dataset superpositions.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::QotpError;
use crate::bits::BitString;
use crate::quantum::{StateVector, MAX_QUBITS};

/// A classical record prepared as the basis state |bits>.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EncodedRecord {
    pub record_id: String,
    pub bits: BitString,
    pub state: StateVector,
}

/// Uniform superposition (1/sqrt(d)) sum_i |x_i> over distinct rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DatasetSuperposition {
    pub d: usize,
    pub states: Vec<BitString>,
    pub state: StateVector,
}

/// Encode one record's bits as a computational basis state.
pub fn basis_encode_record(record_id: &str, bits: BitString) -> Result<EncodedRecord, QotpError> {
    if bits.is_empty() || bits.len() > MAX_QUBITS {
        return Err(QotpError::BadRecordLength {
            len: bits.len(),
            max: MAX_QUBITS,
        });
    }
    let state = StateVector::from_bits(&bits)?;
    Ok(EncodedRecord {
        record_id: record_id.to_string(),
        bits,
        state,
    })
}

/// Superpose a dataset of equal-length, duplicate-free bit strings.
pub fn superpose_dataset(bitstrings: &[BitString]) -> Result<DatasetSuperposition, QotpError> {
    let Some(first) = bitstrings.first() else {
        return Err(QotpError::EmptyDataset);
    };
    let n = first.len();
    if n == 0 || n > MAX_QUBITS {
        return Err(QotpError::BadRecordLength {
            len: n,
            max: MAX_QUBITS,
        });
    }
    let d = bitstrings.len();
    let mut seen = vec![false; 1 << n];
    for (index, row) in bitstrings.iter().enumerate() {
        if row.len() != n {
            return Err(QotpError::RowLengthMismatch {
                index,
                len: row.len(),
                expected: n,
            });
        }
        let idx = row.to_index();
        if seen[idx] {
            return Err(QotpError::DuplicateRow(row.to_string()));
        }
        seen[idx] = true;
    }
    let amp = Complex64::new(1.0 / (d as f64).sqrt(), 0.0);
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n];
    for row in bitstrings {
        amplitudes[row.to_index()] = amp;
    }
    let state = StateVector::from_amplitudes(amplitudes)?;
    Ok(DatasetSuperposition {
        d,
        states: bitstrings.to_vec(),
        state,
    })
}
