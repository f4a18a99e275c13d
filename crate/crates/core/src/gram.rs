//! Gram matrices of reproducing kernels over finite point sets.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use crate::error::Result;
use crate::space::{FunctionSpace, KernelOptions};

/// `G[i][j] = K(z_i, z_j)`, row-major.
pub fn gram_matrix<S: FunctionSpace + ?Sized>(
    space: &S,
    points: &[Complex64],
    opts: &KernelOptions,
) -> Result<Vec<Vec<Complex64>>> {
    points
        .iter()
        .map(|&zi| {
            points
                .iter()
                .map(|&zj| space.kernel(zi, zj, opts))
                .collect()
        })
        .collect()
}

/// Eigenvalues of the Hermitian part of `g`, ascending.
pub fn hermitian_eigenvalues(g: &[Vec<Complex64>]) -> Vec<f64> {
    let n = g.len();
    if n == 0 {
        return Vec::new();
    }
    let m = DMatrix::from_fn(n, n, |i, j| 0.5 * (g[i][j] + g[j][i].conj()));
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

pub fn trace(g: &[Vec<Complex64>]) -> f64 {
    g.iter().enumerate().map(|(i, row)| row[i].re).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_matrix_eigenvalues() {
        let z = Complex64::new(0.0, 0.0);
        let g = vec![
            vec![Complex64::new(3.0, 0.0), z],
            vec![z, Complex64::new(-1.0, 0.0)],
        ];
        assert_eq!(hermitian_eigenvalues(&g), vec![-1.0, 3.0]);
        assert_eq!(trace(&g), 2.0);
    }

    #[test]
    fn hermitian_rank_one() {
        // v v* with v = (1, i) has eigenvalues 0 and 2
        let i = Complex64::new(0.0, 1.0);
        let one = Complex64::new(1.0, 0.0);
        let g = vec![vec![one, -i], vec![i, one]];
        let ev = hermitian_eigenvalues(&g);
        assert!(ev[0].abs() < 1e-15 && (ev[1] - 2.0).abs() < 1e-15);
    }

    #[test]
    fn empty() {
        assert!(hermitian_eigenvalues(&[]).is_empty());
    }
}
