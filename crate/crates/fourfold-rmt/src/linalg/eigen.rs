//! Hermitian eigensolver: Householder tridiagonalization followed by
//! implicit-shift QL.
//!
//! The real-symmetric path runs directly on the input. Complex Hermitian
//! input `H = A + iB` is handled through the real embedding
//! `[[A, -B], [B, A]]`, whose spectrum is that of `H` with every
//! eigenvalue doubled; eigenvectors `(p; q)` of the embedding map back to
//! `p + iq`.

use num_complex::Complex64;

use super::ComplexMatrix;
use crate::consts;
use crate::error::{Error, Result};

/// Eigenvalues of a Hermitian matrix, sorted ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }
}

/// Eigenvalues of a Hermitian matrix (to tolerance `1e-12`), ascending.
pub fn hermitian_eigenvalues(h: &ComplexMatrix) -> Result<Spectrum> {
    Ok(hermitian_eigen_impl(h, false)?.0)
}

/// Eigenvalues and orthonormal eigenvectors (as columns) of a Hermitian matrix.
pub fn hermitian_eigenpairs(h: &ComplexMatrix) -> Result<(Spectrum, Vec<Vec<Complex64>>)> {
    let (spec, vecs) = hermitian_eigen_impl(h, true)?;
    Ok((spec, vecs.expect("vectors requested")))
}

fn hermitian_eigen_impl(
    h: &ComplexMatrix,
    want_vectors: bool,
) -> Result<(Spectrum, Option<Vec<Vec<Complex64>>>)> {
    let defect = h.hermitian_defect();
    if defect > consts::HERMITICITY_TOL {
        return Err(Error::NotHermitian { max_asym: defect, tol: consts::HERMITICITY_TOL });
    }
    let n = h.dim();
    if n == 0 {
        return Ok((Spectrum { eigenvalues: vec![] }, Some(vec![])));
    }
    let is_real = h.as_slice().iter().all(|v| v.im == 0.0);
    if is_real {
        let mut a: Vec<f64> = h.as_slice().iter().map(|v| v.re).collect();
        let (d, v) = sym_eigen(&mut a, n, want_vectors)?;
        let vectors = v.map(|v| {
            (0..n)
                .map(|col| (0..n).map(|row| Complex64::new(v[row * n + col], 0.0)).collect())
                .collect()
        });
        return Ok((Spectrum { eigenvalues: d }, vectors));
    }

    // Real embedding of the complex Hermitian matrix.
    let m = 2 * n;
    let mut a = vec![0.0f64; m * m];
    for i in 0..n {
        for j in 0..n {
            let v = h.get(i, j);
            a[i * m + j] = v.re;
            a[i * m + (j + n)] = -v.im;
            a[(i + n) * m + j] = v.im;
            a[(i + n) * m + (j + n)] = v.re;
        }
    }
    let (d, v) = sym_eigen(&mut a, m, want_vectors)?;
    // Every eigenvalue appears twice; keep one representative per pair.
    let eigenvalues: Vec<f64> = (0..n).map(|i| d[2 * i]).collect();
    let vectors = v.map(|v| {
        (0..n)
            .map(|col| {
                let src = 2 * col;
                (0..n)
                    .map(|row| Complex64::new(v[row * m + src], v[(row + n) * m + src]))
                    .collect()
            })
            .collect()
    });
    Ok((Spectrum { eigenvalues }, vectors))
}

/// Eigen decomposition of a real symmetric matrix stored row-major in `a`.
/// Returns eigenvalues ascending and, if requested, the eigenvector matrix
/// (columns are eigenvectors, row-major storage).
fn sym_eigen(a: &mut [f64], n: usize, want_vectors: bool) -> Result<(Vec<f64>, Option<Vec<f64>>)> {
    let mut d = vec![0.0f64; n];
    let mut e = vec![0.0f64; n];
    tred2(a, n, &mut d, &mut e);
    tql_implicit(&mut d, &mut e, if want_vectors { Some(a) } else { None }, n)?;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| d[i].partial_cmp(&d[j]).unwrap());
    let sorted: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let vectors = want_vectors.then(|| {
        let mut v = vec![0.0f64; n * n];
        for (new_col, &old_col) in order.iter().enumerate() {
            for row in 0..n {
                v[row * n + new_col] = a[row * n + old_col];
            }
        }
        v
    });
    Ok((sorted, vectors))
}

/// Householder reduction to symmetric tridiagonal form with accumulation
/// of the orthogonal transformation (EISPACK `tred2` lineage).
fn tred2(v: &mut [f64], n: usize, d: &mut [f64], e: &mut [f64]) {
    for j in 0..n {
        d[j] = v[(n - 1) * n + j];
    }
    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for item in d.iter().take(i) {
            scale += item.abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[(i - 1) * n + j];
                v[i * n + j] = 0.0;
                v[j * n + i] = 0.0;
            }
        } else {
            for k in 0..i {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for item in e.iter_mut().take(i) {
                *item = 0.0;
            }
            for j in 0..i {
                f = d[j];
                v[j * n + i] = f;
                g = e[j] + v[j * n + j] * f;
                for k in j + 1..i {
                    g += v[k * n + j] * d[k];
                    e[k] += v[k * n + j] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                for k in j..i {
                    v[k * n + j] -= f * e[k] + g * d[k];
                }
                d[j] = v[(i - 1) * n + j];
                v[i * n + j] = 0.0;
            }
        }
        d[i] = h;
    }
    for i in 0..n.saturating_sub(1) {
        v[(n - 1) * n + i] = v[i * n + i];
        v[i * n + i] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[k * n + i + 1] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[k * n + i + 1] * v[k * n + j];
                }
                for k in 0..=i {
                    v[k * n + j] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[k * n + i + 1] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[(n - 1) * n + j];
        v[(n - 1) * n + j] = 0.0;
    }
    v[(n - 1) * n + (n - 1)] = 1.0;
    e[0] = 0.0;
}

/// Implicit-shift QL on a symmetric tridiagonal matrix (EISPACK `tql2`
/// lineage); optionally accumulates rotations into `v`.
fn tql_implicit(d: &mut [f64], e: &mut [f64], mut v: Option<&mut [f64]>, n: usize) -> Result<()> {
    if n <= 1 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;

    let mut f = 0.0f64;
    let mut tst1 = 0.0f64;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > 60 {
                    return Err(Error::InvalidConfig(format!(
                        "QL iteration failed to converge at index {l}"
                    )));
                }
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for item in d.iter_mut().take(n).skip(l + 2) {
                    *item -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0f64;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0f64;
                let mut s2 = 0.0f64;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if let Some(v) = v.as_deref_mut() {
                        for k in 0..n {
                            h = v[k * n + i + 1];
                            v[k * n + i + 1] = s * v[k * n + i] + c * h;
                            v[k * n + i] = c * v[k * n + i] - s * h;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_matrix_sorted() {
        let h = ComplexMatrix::from_diagonal(&[3.0, 1.0, 2.0]);
        let spec = hermitian_eigenvalues(&h).unwrap();
        assert_eq!(spec.eigenvalues(), &[1.0, 2.0, 3.0]);
    }

    #[test]
    fn two_by_two_symmetric() {
        let h = ComplexMatrix::from_rows(&[
            vec![Complex64::ZERO, Complex64::ONE],
            vec![Complex64::ONE, Complex64::ZERO],
        ])
        .unwrap();
        let spec = hermitian_eigenvalues(&h).unwrap();
        assert!((spec.eigenvalues()[0] + 1.0).abs() < 1e-14);
        assert!((spec.eigenvalues()[1] - 1.0).abs() < 1e-14);
    }

    #[test]
    fn rejects_non_hermitian() {
        let h = ComplexMatrix::from_rows(&[
            vec![Complex64::ZERO, Complex64::ONE],
            vec![Complex64::new(0.5, 0.0), Complex64::ZERO],
        ])
        .unwrap();
        assert!(matches!(hermitian_eigenvalues(&h), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn complex_hermitian_backward_error() {
        let n = 12;
        let mut state = 0xdeadbeefdeadbeefu64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let mut h = ComplexMatrix::zeros(n);
        for i in 0..n {
            h.set(i, i, Complex64::new(next(), 0.0));
            for j in i + 1..n {
                let v = Complex64::new(next(), next());
                h.set(i, j, v);
                h.set(j, i, v.conj());
            }
        }
        let (spec, vecs) = hermitian_eigenpairs(&h).unwrap();
        let hnorm = h.frobenius_norm();
        let trace: f64 = h.trace().re;
        assert!((spec.sum() - trace).abs() < 1e-9 * hnorm.max(1.0));
        for (lambda, v) in spec.eigenvalues().iter().zip(&vecs) {
            let mut resid = 0.0f64;
            for i in 0..n {
                let mut acc = Complex64::ZERO;
                for j in 0..n {
                    acc += h.get(i, j) * v[j];
                }
                resid += (acc - lambda * v[i]).norm_sqr();
            }
            assert!(resid.sqrt() <= 1e-9 * hnorm, "residual {}", resid.sqrt());
        }
    }
}
