//! Mixed states: dense density matrices with the operations the padding and
//! network layers need (ensemble mixing, partial trace, fidelity, Pauli-basis
//! coefficients).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::linalg::hermitian_eigenvalues;
use super::{Gate, PauliString, QuantumError, StateVector, MAX_QUBITS};

/// A density operator on `n_qubits` qubits, stored row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityMatrix {
    n_qubits: usize,
    #[serde(with = "matrix_repr")]
    matrix: Vec<Complex64>,
}

mod matrix_repr {
    use super::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
        m.iter()
            .map(|z| [z.re, z.im])
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Complex64>, D::Error> {
        let raw = Vec::<[f64; 2]>::deserialize(d)?;
        Ok(raw
            .into_iter()
            .map(|[re, im]| Complex64::new(re, im))
            .collect())
    }
}

impl DensityMatrix {
    /// |psi><psi|.
    pub fn from_pure(state: &StateVector) -> Self {
        let dim = state.dim();
        let mut matrix = vec![Complex64::new(0.0, 0.0); dim * dim];
        for (i, a) in state.amplitudes().iter().enumerate() {
            for (j, b) in state.amplitudes().iter().enumerate() {
                matrix[i * dim + j] = a * b.conj();
            }
        }
        DensityMatrix {
            n_qubits: state.n_qubits(),
            matrix,
        }
    }

    /// Maximally mixed state I/2^n.
    pub fn maximally_mixed(n_qubits: usize) -> Result<Self, QuantumError> {
        if n_qubits == 0 {
            return Err(QuantumError::EmptyRegister);
        }
        if n_qubits > MAX_QUBITS {
            return Err(QuantumError::TooManyQubits(n_qubits));
        }
        let dim = 1usize << n_qubits;
        let mut matrix = vec![Complex64::new(0.0, 0.0); dim * dim];
        let p = 1.0 / dim as f64;
        for i in 0..dim {
            matrix[i * dim + i] = Complex64::new(p, 0.0);
        }
        Ok(DensityMatrix { n_qubits, matrix })
    }

    pub(crate) fn from_raw(n_qubits: usize, matrix: Vec<Complex64>) -> Self {
        debug_assert_eq!(matrix.len(), (1 << n_qubits) * (1 << n_qubits));
        DensityMatrix { n_qubits, matrix }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.matrix[row * self.dim() + col]
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.matrix
    }

    pub fn trace(&self) -> Complex64 {
        let dim = self.dim();
        (0..dim).map(|i| self.matrix[i * dim + i]).sum()
    }

    /// Diagonal of the matrix: basis-outcome probabilities.
    pub fn diagonal_probabilities(&self) -> Vec<f64> {
        let dim = self.dim();
        (0..dim).map(|i| self.matrix[i * dim + i].re).collect()
    }

    /// Largest elementwise deviation from Hermitian symmetry.
    pub fn hermiticity_error(&self) -> f64 {
        let dim = self.dim();
        let mut worst = 0.0f64;
        for i in 0..dim {
            for j in i..dim {
                let d = (self.matrix[i * dim + j] - self.matrix[j * dim + i].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// Eigenvalues (ascending) of the Hermitian part.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.matrix, self.dim())
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }

    /// Check the density-matrix invariants: Hermitian within `tol`
    /// elementwise, unit trace within `tol`, eigenvalues >= -`tol`.
    pub fn validate(&self, tol: f64) -> Result<(), DensityValidationError> {
        let herm = self.hermiticity_error();
        if herm > tol {
            return Err(DensityValidationError::NotHermitian(herm));
        }
        let tr = self.trace();
        if (tr.re - 1.0).abs() > tol || tr.im.abs() > tol {
            return Err(DensityValidationError::TraceNotOne(tr.re));
        }
        let min = self.min_eigenvalue();
        if min < -tol {
            return Err(DensityValidationError::NegativeEigenvalue(min));
        }
        Ok(())
    }

    /// Frobenius distance ||self - other||_F.
    pub fn frobenius_distance(&self, other: &DensityMatrix) -> Result<f64, QuantumError> {
        if self.dim() != other.dim() {
            return Err(QuantumError::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(self
            .matrix
            .iter()
            .zip(&other.matrix)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt())
    }

    /// Conjugation U rho U^dag by a single gate.
    pub fn apply_gate(&self, gate: &Gate) -> Result<Self, QuantumError> {
        gate.validate(self.n_qubits)?;
        let dim = self.dim();
        let mut m = self.matrix.clone();
        // Columns transform with U acting from the left on each column
        // vector; rows then with U^dag from the right, which is the same
        // kernel applied to conjugated rows. Using the statevector kernel on
        // strided views keeps one implementation.
        // Left multiply: for each column c, m[:, c] <- U m[:, c].
        let mut col = vec![Complex64::new(0.0, 0.0); dim];
        for c in 0..dim {
            for r in 0..dim {
                col[r] = m[r * dim + c];
            }
            gate.apply_in_place(&mut col, self.n_qubits);
            for r in 0..dim {
                m[r * dim + c] = col[r];
            }
        }
        // Right multiply by U^dag: row r as a vector v, v <- conj(U conj(v)).
        let mut row = vec![Complex64::new(0.0, 0.0); dim];
        for r in 0..dim {
            for c in 0..dim {
                row[c] = m[r * dim + c].conj();
            }
            gate.apply_in_place(&mut row, self.n_qubits);
            for c in 0..dim {
                m[r * dim + c] = row[c].conj();
            }
        }
        Ok(DensityMatrix {
            n_qubits: self.n_qubits,
            matrix: m,
        })
    }

    pub fn apply_gates(&self, gates: &[Gate]) -> Result<Self, QuantumError> {
        let mut rho = self.clone();
        for g in gates {
            rho = rho.apply_gate(g)?;
        }
        Ok(rho)
    }

    /// Conjugation (X^a Z^b) rho (X^a Z^b)^dag.
    pub fn conjugate_by_pauli(&self, p: &PauliString) -> Result<Self, QuantumError> {
        if p.n_qubits() != self.n_qubits {
            return Err(QuantumError::PauliLengthMismatch {
                key_len: p.n_qubits(),
                n_qubits: self.n_qubits,
            });
        }
        let dim = self.dim();
        let amask = p.alpha().to_index();
        let bmask = p.beta().to_index();
        let mut out = vec![Complex64::new(0.0, 0.0); dim * dim];
        // (U rho U^dag)[i^a, j^a] = (-1)^(b.i) (-1)^(b.j) rho[i, j]
        for i in 0..dim {
            let si = if (i & bmask).count_ones() % 2 == 1 {
                -1.0
            } else {
                1.0
            };
            for j in 0..dim {
                let sj = if (j & bmask).count_ones() % 2 == 1 {
                    -1.0
                } else {
                    1.0
                };
                out[(i ^ amask) * dim + (j ^ amask)] = self.matrix[i * dim + j] * (si * sj);
            }
        }
        Ok(DensityMatrix {
            n_qubits: self.n_qubits,
            matrix: out,
        })
    }

    /// Tensor product self (x) other, self occupying the leading qubits.
    pub fn tensor(&self, other: &DensityMatrix) -> Result<Self, QuantumError> {
        let n = self.n_qubits + other.n_qubits;
        if n > MAX_QUBITS {
            return Err(QuantumError::TooManyQubits(n));
        }
        let (da, db) = (self.dim(), other.dim());
        let dim = da * db;
        let mut matrix = vec![Complex64::new(0.0, 0.0); dim * dim];
        for ra in 0..da {
            for ca in 0..da {
                let x = self.matrix[ra * da + ca];
                for rb in 0..db {
                    for cb in 0..db {
                        matrix[(ra * db + rb) * dim + (ca * db + cb)] =
                            x * other.matrix[rb * db + cb];
                    }
                }
            }
        }
        Ok(DensityMatrix { n_qubits: n, matrix })
    }
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum DensityValidationError {
    #[error("matrix deviates from Hermitian symmetry by {0}")]
    NotHermitian(f64),
    #[error("trace {0} deviates from 1")]
    TraceNotOne(f64),
    #[error("negative eigenvalue {0}")]
    NegativeEigenvalue(f64),
}

/// Convex combination sum_k p_k rho_k of density matrices.
pub fn mix_ensemble(entries: &[(f64, DensityMatrix)]) -> Result<DensityMatrix, QuantumError> {
    let Some((_, first)) = entries.first() else {
        return Err(QuantumError::EmptyEnsemble);
    };
    let n_qubits = first.n_qubits();
    let dim = first.dim();
    let mut psum = 0.0;
    let mut matrix = vec![Complex64::new(0.0, 0.0); dim * dim];
    for (p, rho) in entries {
        if *p < 0.0 {
            return Err(QuantumError::NegativeProbability(*p));
        }
        if rho.dim() != dim {
            return Err(QuantumError::DimensionMismatch(dim, rho.dim()));
        }
        psum += p;
        for (dst, src) in matrix.iter_mut().zip(rho.as_slice()) {
            *dst += src * *p;
        }
    }
    if (psum - 1.0).abs() > 1e-6 {
        return Err(QuantumError::BadProbabilitySum(psum));
    }
    Ok(DensityMatrix::from_raw(n_qubits, matrix))
}

/// Trace out the given qubits, returning the state of the remainder.
pub fn partial_trace(
    rho: &DensityMatrix,
    traced_qubits: &[usize],
) -> Result<DensityMatrix, QuantumError> {
    let n = rho.n_qubits();
    let mut traced = traced_qubits.to_vec();
    traced.sort_unstable();
    for w in traced.windows(2) {
        if w[0] == w[1] {
            return Err(QuantumError::DuplicateTraceQubit(w[0]));
        }
    }
    if let Some(&bad) = traced.iter().find(|&&q| q >= n) {
        return Err(QuantumError::QubitOutOfRange {
            index: bad,
            n_qubits: n,
        });
    }
    if traced.len() == n {
        return Err(QuantumError::TraceAllQubits(n));
    }

    let kept: Vec<usize> = (0..n).filter(|q| !traced.contains(q)).collect();
    let k = kept.len();
    let t = traced.len();
    // Compose a full index from (kept bits, traced bits); qubit q occupies
    // bit n-1-q of the index.
    let compose = |kept_bits: usize, traced_bits: usize| -> usize {
        let mut idx = 0usize;
        for (j, &q) in kept.iter().enumerate() {
            if (kept_bits >> (k - 1 - j)) & 1 == 1 {
                idx |= 1 << (n - 1 - q);
            }
        }
        for (j, &q) in traced.iter().enumerate() {
            if (traced_bits >> (t - 1 - j)) & 1 == 1 {
                idx |= 1 << (n - 1 - q);
            }
        }
        idx
    };

    let out_dim = 1usize << k;
    let dim = rho.dim();
    let mut matrix = vec![Complex64::new(0.0, 0.0); out_dim * out_dim];
    for kr in 0..out_dim {
        for kc in 0..out_dim {
            let mut sum = Complex64::new(0.0, 0.0);
            for tb in 0..(1usize << t) {
                let r = compose(kr, tb);
                let c = compose(kc, tb);
                sum += rho.as_slice()[r * dim + c];
            }
            matrix[kr * out_dim + kc] = sum;
        }
    }
    Ok(DensityMatrix::from_raw(k, matrix))
}

/// <target| rho |target>, clamped into [0, 1].
pub fn fidelity(target: &StateVector, rho: &DensityMatrix) -> Result<f64, QuantumError> {
    if target.dim() != rho.dim() {
        return Err(QuantumError::DimensionMismatch(target.dim(), rho.dim()));
    }
    let dim = rho.dim();
    let mut value = Complex64::new(0.0, 0.0);
    for i in 0..dim {
        let ai = target.amplitude(i).conj();
        for j in 0..dim {
            value += ai * rho.as_slice()[i * dim + j] * target.amplitude(j);
        }
    }
    debug_assert!(value.im.abs() < 1e-10, "imaginary residue {}", value.im);
    Ok(value.re.clamp(0.0, 1.0))
}

/// Pauli-basis coefficient A_{a,b} = Tr(rho Z^b X^a)/2^n; the expansion
/// rho = sum_{a,b} A_{a,b} X^a Z^b reconstructs the state.
pub fn pauli_coefficient(
    rho: &DensityMatrix,
    p: &PauliString,
) -> Result<Complex64, QuantumError> {
    if p.n_qubits() != rho.n_qubits() {
        return Err(QuantumError::PauliLengthMismatch {
            key_len: p.n_qubits(),
            n_qubits: rho.n_qubits(),
        });
    }
    let dim = rho.dim();
    let amask = p.alpha().to_index();
    let bmask = p.beta().to_index();
    // M = Z^b X^a has M[r^a, r] = (-1)^(b.(r^a)); Tr(rho M) =
    // sum_r rho[r, r^a] (-1)^(b.(r^a)).
    let mut tr = Complex64::new(0.0, 0.0);
    for r in 0..dim {
        let c = r ^ amask;
        let sign = if (c & bmask).count_ones() % 2 == 1 {
            -1.0
        } else {
            1.0
        };
        tr += rho.as_slice()[r * dim + c] * sign;
    }
    Ok(tr / dim as f64)
}
