//! LU factorization with partial pivoting for dense complex matrices.

use num_complex::Complex64;

use super::ComplexMatrix;
use crate::error::{Error, Result};

/// Packed LU factors of a square matrix, `P A = L U`.
#[derive(Debug, Clone)]
pub struct LuFactors {
    lu: ComplexMatrix,
    perm: Vec<usize>,
}

impl LuFactors {
    /// Factor `a` in place with partial (row) pivoting.
    pub fn factor(mut a: ComplexMatrix) -> Result<Self> {
        let n = a.dim();
        let mut perm: Vec<usize> = (0..n).collect();
        let data = a.as_mut_slice();
        for k in 0..n {
            // Pivot search on column k.
            let mut best = k;
            let mut best_mag = data[k * n + k].norm_sqr();
            for i in k + 1..n {
                let mag = data[i * n + k].norm_sqr();
                if mag > best_mag {
                    best_mag = mag;
                    best = i;
                }
            }
            if best_mag == 0.0 {
                return Err(Error::Singular { step: k, pivot: 0.0 });
            }
            if best != k {
                for j in 0..n {
                    data.swap(k * n + j, best * n + j);
                }
                perm.swap(k, best);
            }
            let pivot = data[k * n + k];
            let inv_pivot = Complex64::ONE / pivot;
            // Rank-one update of the trailing block; row-contiguous inner loop.
            for i in k + 1..n {
                let l = data[i * n + k] * inv_pivot;
                data[i * n + k] = l;
                if l == Complex64::ZERO {
                    continue;
                }
                let (upper, lower) = data.split_at_mut(i * n);
                let krow = &upper[k * n + k + 1..k * n + n];
                let irow = &mut lower[k + 1..n];
                for (dst, src) in irow.iter_mut().zip(krow) {
                    *dst -= l * src;
                }
            }
        }
        Ok(Self { lu: a, perm })
    }

    pub fn dim(&self) -> usize {
        self.lu.dim()
    }

    /// Solve `A x = b` for a single right-hand side.
    pub fn solve_vec(&self, b: &[Complex64]) -> Result<Vec<Complex64>> {
        let n = self.dim();
        if b.len() != n {
            return Err(Error::DimensionMismatch { left: n, right: b.len() });
        }
        let lu = self.lu.as_slice();
        let mut x: Vec<Complex64> = self.perm.iter().map(|&p| b[p]).collect();
        for k in 0..n {
            let xk = x[k];
            for i in k + 1..n {
                x[i] -= lu[i * n + k] * xk;
            }
        }
        for k in (0..n).rev() {
            let mut acc = x[k];
            for j in k + 1..n {
                acc -= lu[k * n + j] * x[j];
            }
            x[k] = acc / lu[k * n + k];
        }
        Ok(x)
    }

    /// Full inverse via simultaneous solves; all inner loops run over
    /// contiguous rows of the right-hand-side block.
    pub fn inverse(&self) -> Result<ComplexMatrix> {
        let n = self.dim();
        let lu = self.lu.as_slice();
        // B starts as the row-permuted identity.
        let mut b = ComplexMatrix::zeros(n);
        for i in 0..n {
            b.set(i, self.perm[i], Complex64::ONE);
        }
        let data = b.as_mut_slice();
        // Forward: B := L^{-1} B.
        for k in 0..n {
            for i in k + 1..n {
                let l = lu[i * n + k];
                if l == Complex64::ZERO {
                    continue;
                }
                let (head, tail) = data.split_at_mut(i * n);
                let krow = &head[k * n..k * n + n];
                let irow = &mut tail[..n];
                for (dst, src) in irow.iter_mut().zip(krow) {
                    *dst -= l * src;
                }
            }
        }
        // Backward: B := U^{-1} B.
        for k in (0..n).rev() {
            for j in k + 1..n {
                let u = lu[k * n + j];
                if u == Complex64::ZERO {
                    continue;
                }
                let (head, tail) = data.split_at_mut(j * n);
                let krow = &mut head[k * n..k * n + n];
                let jrow = &tail[..n];
                for (dst, src) in krow.iter_mut().zip(jrow) {
                    *dst -= u * src;
                }
            }
            let inv_diag = Complex64::ONE / lu[k * n + k];
            for v in &mut data[k * n..k * n + n] {
                *v *= inv_diag;
            }
        }
        Ok(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_matches_inverse() {
        let n = 8;
        let a = ComplexMatrix::from_fn(n, |i, j| {
            Complex64::new(
                ((i * 13 + j * 7) % 11) as f64 - 5.0 + if i == j { 8.0 } else { 0.0 },
                ((i + 3 * j) % 5) as f64 - 2.0,
            )
        });
        let lu = LuFactors::factor(a.clone()).unwrap();
        let inv = lu.inverse().unwrap();
        let prod = a.matmul(&inv).unwrap();
        for i in 0..n {
            for j in 0..n {
                let expect = if i == j { Complex64::ONE } else { Complex64::ZERO };
                assert!((prod.get(i, j) - expect).norm() < 1e-12);
            }
        }
        let b: Vec<Complex64> = (0..n).map(|i| Complex64::new(i as f64, -(i as f64))).collect();
        let x = lu.solve_vec(&b).unwrap();
        // Inverse applied to b must agree with the direct solve.
        for i in 0..n {
            let mut acc = Complex64::ZERO;
            for j in 0..n {
                acc += inv.get(i, j) * b[j];
            }
            assert!((acc - x[i]).norm() < 1e-12);
        }
    }

    #[test]
    fn singular_reported() {
        let a = ComplexMatrix::zeros(3);
        assert!(matches!(LuFactors::factor(a), Err(Error::Singular { .. })));
    }
}
