//! Small numerical helpers shared by the norm kernels and probes.

use nalgebra::DMatrix;
use num_complex::Complex64;

/// Neumaier-compensated summation. The probes compare quantities that agree
/// to one part in 1e12 or better at large radii, so naive left-to-right
/// accumulation error would eat directly into the reported defects.
pub(crate) fn comp_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Smallest eigenvalue of a Hermitian matrix given in row-major order.
///
/// Uses the real embedding `H = A + iB  ->  [[A, -B], [B, A]]`, which is
/// symmetric with the same spectrum (each eigenvalue doubled), so one real
/// symmetric eigensolver covers both fields.
pub(crate) fn hermitian_min_eig(dim: usize, entries: &[Complex64]) -> f64 {
    debug_assert_eq!(entries.len(), dim * dim);
    let mut m = DMatrix::<f64>::zeros(2 * dim, 2 * dim);
    for i in 0..dim {
        for j in 0..dim {
            let a = entries[i * dim + j];
            m[(i, j)] = a.re;
            m[(i, dim + j)] = -a.im;
            m[(dim + i, j)] = a.im;
            m[(dim + i, dim + j)] = a.re;
        }
    }
    m.symmetric_eigen()
        .eigenvalues
        .iter()
        .fold(f64::INFINITY, |acc, &e| acc.min(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comp_sum_recovers_cancelling_tail() {
        // 1e16 + 1 - 1e16 loses the 1 under naive summation.
        let naive: f64 = [1e16, 1.0, -1e16].iter().sum();
        assert_eq!(naive, 0.0);
        assert_eq!(comp_sum([1e16, 1.0, -1e16]), 1.0);
    }

    #[test]
    fn min_eig_of_real_diagonal() {
        let entries: Vec<Complex64> = [4.0, 0.0, 0.0, 1.0]
            .iter()
            .map(|&r| Complex64::new(r, 0.0))
            .collect();
        let min = hermitian_min_eig(2, &entries);
        assert!((min - 1.0).abs() < 1e-12, "min eig {min}");
    }

    #[test]
    fn min_eig_of_hermitian_with_imaginary_coupling() {
        // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
        let entries = vec![
            Complex64::new(2.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(2.0, 0.0),
        ];
        let min = hermitian_min_eig(2, &entries);
        assert!((min - 1.0).abs() < 1e-12, "min eig {min}");
    }
}
