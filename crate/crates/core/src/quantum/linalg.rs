//! Minimal dense linear algebra for Hermitian matrices: a cyclic Jacobi
//! eigenvalue sweep, enough for validating density matrices up to the
//! register cap.

use num_complex::Complex64;

/// Eigenvalues of a Hermitian matrix (row-major, `dim` x `dim`), ascending.
///
/// Uses cyclic complex Jacobi rotations; the input is assumed Hermitian and
/// only its Hermitian part influences the result.
pub fn hermitian_eigenvalues(matrix: &[Complex64], dim: usize) -> Vec<f64> {
    assert_eq!(matrix.len(), dim * dim, "matrix shape");
    let mut a = matrix.to_vec();
    let scale = frobenius(&a).max(1.0);
    let tol = 1e-14 * scale;

    for _sweep in 0..100 {
        if off_diagonal_norm(&a, dim) < tol {
            break;
        }
        for p in 0..dim {
            for q in (p + 1)..dim {
                let apq = a[p * dim + q];
                let m = apq.norm();
                if m < tol / (dim as f64) {
                    continue;
                }
                let phi = apq.arg();
                let app = a[p * dim + p].re;
                let aqq = a[q * dim + q].re;
                let tau = (aqq - app) / (2.0 * m);
                let t = if tau == 0.0 {
                    1.0
                } else {
                    tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let e_pos = Complex64::from_polar(1.0, phi);
                let e_neg = e_pos.conj();

                // A <- V^H A V with V the identity except
                // V[p][p]=c, V[p][q]=s e^{i phi}, V[q][p]=-s e^{-i phi},
                // V[q][q]=c.
                for k in 0..dim {
                    let akp = a[k * dim + p];
                    let akq = a[k * dim + q];
                    a[k * dim + p] = c * akp - s * e_neg * akq;
                    a[k * dim + q] = s * e_pos * akp + c * akq;
                }
                for k in 0..dim {
                    let apk = a[p * dim + k];
                    let aqk = a[q * dim + k];
                    a[p * dim + k] = c * apk - s * e_pos * aqk;
                    a[q * dim + k] = s * e_neg * apk + c * aqk;
                }
            }
        }
    }

    let mut eigs: Vec<f64> = (0..dim).map(|i| a[i * dim + i].re).collect();
    eigs.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    eigs
}

fn frobenius(a: &[Complex64]) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn off_diagonal_norm(a: &[Complex64], dim: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..dim {
        for j in 0..dim {
            if i != j {
                sum += a[i * dim + j].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn diagonal_matrix_is_fixed_point() {
        let m = vec![c(3.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)];
        let e = hermitian_eigenvalues(&m, 2);
        assert!((e[0] + 1.0).abs() < 1e-12);
        assert!((e[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn pauli_x_eigenvalues() {
        let m = vec![c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)];
        let e = hermitian_eigenvalues(&m, 2);
        assert!((e[0] + 1.0).abs() < 1e-12);
        assert!((e[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn complex_hermitian_2x2_against_closed_form() {
        // [[a, b],[conj(b), d]] has eigenvalues
        // (a+d)/2 +- sqrt(((a-d)/2)^2 + |b|^2)
        let (a, d) = (0.7, -0.2);
        let b = c(0.31, -0.54);
        let m = vec![c(a, 0.0), b, b.conj(), c(d, 0.0)];
        let mid = (a + d) / 2.0;
        let rad = (((a - d) / 2.0).powi(2) + b.norm_sqr()).sqrt();
        let e = hermitian_eigenvalues(&m, 2);
        assert!((e[0] - (mid - rad)).abs() < 1e-12);
        assert!((e[1] - (mid + rad)).abs() < 1e-12);
    }

    #[test]
    fn eigenvalue_sum_matches_trace_on_random_hermitian() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let dim = 8;
        let mut m = vec![c(0.0, 0.0); dim * dim];
        for i in 0..dim {
            m[i * dim + i] = c(rng.gen_range(-1.0..1.0), 0.0);
            for j in (i + 1)..dim {
                let z = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                m[i * dim + j] = z;
                m[j * dim + i] = z.conj();
            }
        }
        let trace: f64 = (0..dim).map(|i| m[i * dim + i].re).sum();
        let e = hermitian_eigenvalues(&m, dim);
        let sum: f64 = e.iter().sum();
        assert!((sum - trace).abs() < 1e-10);
        // Sum of squares matches the Frobenius norm of a Hermitian matrix.
        let fro_sq: f64 = m.iter().map(|z| z.norm_sqr()).sum();
        let e_sq: f64 = e.iter().map(|x| x * x).sum();
        assert!((fro_sq - e_sq).abs() < 1e-9);
    }
}
