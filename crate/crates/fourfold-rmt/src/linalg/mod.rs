//! Dense complex linear algebra: shifted inversion via LU with partial
//! pivoting, a Hermitian eigensolver, and the `l-infinity -> l-infinity`
//! operator norm.
//!
//! Matrices are square, row-major and immutable after construction; all
//! operations are pure functions of their inputs.

mod eigen;
mod lu;

pub use eigen::{hermitian_eigenpairs, hermitian_eigenvalues, Spectrum};
pub use lu::LuFactors;

use num_complex::Complex64;

use crate::consts;
use crate::error::{Error, Result};

/// Square complex matrix in row-major storage.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, data: vec![Complex64::ZERO; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::ONE;
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    /// Builds a matrix from nested rows; errors unless the shape is square.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n = rows.len();
        for row in rows {
            if row.len() != n {
                return Err(Error::NonSquare { rows: n, cols: row.len() });
            }
        }
        let data = rows.iter().flatten().copied().collect();
        Ok(Self { n, data })
    }

    /// Real diagonal matrix.
    pub fn from_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(diag[i], 0.0);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.n + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).conj())
    }

    /// Largest entry modulus of `H - H^dagger`; zero iff Hermitian.
    pub fn hermitian_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            for j in i..self.n {
                let d = (self.get(i, j) - self.get(j, i).conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermitian_defect() <= tol
    }

    /// `self - z*I`.
    pub fn sub_scaled_identity(&self, z: Complex64) -> Self {
        let mut m = self.clone();
        for i in 0..m.n {
            m.data[i * m.n + i] -= z;
        }
        m
    }

    /// Dense product `self * other`.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        let n = self.n;
        let mut out = Self::zeros(n);
        // i-k-j order keeps both the multiplier row and the output row
        // contiguous in the inner loop.
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == Complex64::ZERO {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                let crow = &mut out.data[i * n..(i + 1) * n];
                for j in 0..n {
                    crow[j] += a * brow[j];
                }
            }
        }
        Ok(out)
    }

    /// Applies the index flip `x -> -x (mod n)` to both rows and columns.
    pub fn flip_conjugate(&self) -> Self {
        let n = self.n;
        Self::from_fn(n, |i, j| self.get((n - i) % n, (n - j) % n))
    }
}

/// Green function `G(z) = (H - z)^{-1}` of a Hermitian matrix.
///
/// Partial-pivoted LU; `Im z != 0` guarantees invertibility. The residual
/// `|(H - z)G - I|_max` stays below `1e-10 * n` for Hermitian inputs.
pub fn invert_shifted(h: &ComplexMatrix, z: Complex64) -> Result<ComplexMatrix> {
    if z.im == 0.0 {
        return Err(Error::RealShift);
    }
    let shifted = h.sub_scaled_identity(z);
    let lu = LuFactors::factor(shifted)?;
    lu.inverse()
}

/// The `l-infinity -> l-infinity` operator norm: max over rows of the sum
/// of entry moduli.
pub fn inf_operator_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut worst = 0.0f64;
    for i in 0..n {
        let s: f64 = a.row(i).iter().map(|v| v.norm()).sum();
        worst = worst.max(s);
    }
    worst
}

/// Residual `|(H - z)G - I|_max`, the oracle for shifted inversion.
pub fn inversion_residual(h: &ComplexMatrix, z: Complex64, g: &ComplexMatrix) -> Result<f64> {
    let prod = h.sub_scaled_identity(z).matmul(g)?;
    let n = h.dim();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let expect = if i == j { Complex64::ONE } else { Complex64::ZERO };
            worst = worst.max((prod.get(i, j) - expect).norm());
        }
    }
    Ok(worst)
}

/// Checks the Hermiticity gate used by resolvent entry points.
pub fn require_hermitian(h: &ComplexMatrix) -> Result<()> {
    let defect = h.hermitian_defect();
    if defect > consts::HERMITICITY_TOL {
        return Err(Error::NotHermitian { max_asym: defect, tol: consts::HERMITICITY_TOL });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// CSV interchange format: first line `n,<dim>`, then one line per row with
// re,im pairs at 17 significant digits.
// ---------------------------------------------------------------------------

pub fn write_matrix_csv(m: &ComplexMatrix, w: &mut impl std::io::Write) -> Result<()> {
    writeln!(w, "n,{}", m.dim())?;
    for i in 0..m.dim() {
        let mut line = String::new();
        for (j, v) in m.row(i).iter().enumerate() {
            if j > 0 {
                line.push(',');
            }
            line.push_str(&format!("{:.16e},{:.16e}", v.re, v.im));
        }
        writeln!(w, "{line}")?;
    }
    Ok(())
}

pub fn read_matrix_csv(r: &mut impl std::io::BufRead) -> Result<ComplexMatrix> {
    let mut header = String::new();
    r.read_line(&mut header)?;
    let n: usize = header
        .trim()
        .strip_prefix("n,")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::InvalidConfig(format!("bad matrix CSV header: {header:?}")))?;
    let mut m = ComplexMatrix::zeros(n);
    for i in 0..n {
        let mut line = String::new();
        r.read_line(&mut line)?;
        let fields: Vec<&str> = line.trim().split(',').collect();
        if fields.len() != 2 * n {
            return Err(Error::InvalidConfig(format!(
                "matrix CSV row {i} has {} fields, expected {}",
                fields.len(),
                2 * n
            )));
        }
        for j in 0..n {
            let re: f64 = fields[2 * j]
                .parse()
                .map_err(|e| Error::InvalidConfig(format!("row {i} col {j}: {e}")))?;
            let im: f64 = fields[2 * j + 1]
                .parse()
                .map_err(|e| Error::InvalidConfig(format!("row {i} col {j}: {e}")))?;
            m.set(i, j, Complex64::new(re, im));
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn invert_shifted_scalar() {
        // H = [[0]], z = i: G = 1/(0 - i) = i.
        let h = ComplexMatrix::zeros(1);
        let g = invert_shifted(&h, c(0.0, 1.0)).unwrap();
        assert!((g.get(0, 0) - c(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn invert_shifted_diagonal() {
        let h = ComplexMatrix::from_diagonal(&[1.0, -1.0]);
        let z = c(0.0, 2.0);
        let g = invert_shifted(&h, z).unwrap();
        let expect0 = Complex64::ONE / (c(1.0, 0.0) - z);
        let expect1 = Complex64::ONE / (c(-1.0, 0.0) - z);
        assert!((g.get(0, 0) - expect0).norm() < 1e-15);
        assert!((g.get(1, 1) - expect1).norm() < 1e-15);
        assert!(g.get(0, 1).norm() == 0.0 && g.get(1, 0).norm() == 0.0);
    }

    #[test]
    fn invert_shifted_rejects_real_shift() {
        let h = ComplexMatrix::zeros(3);
        assert!(matches!(invert_shifted(&h, c(1.0, 0.0)), Err(Error::RealShift)));
    }

    #[test]
    fn from_rows_rejects_ragged() {
        let rows = vec![vec![Complex64::ONE], vec![Complex64::ONE, Complex64::ZERO]];
        assert!(matches!(
            ComplexMatrix::from_rows(&rows),
            Err(Error::NonSquare { .. })
        ));
    }

    #[test]
    fn invert_shifted_residual_random_hermitian() {
        // Residual oracle by direct multiplication at N = 16.
        let n = 16;
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 - 0.5
        };
        let mut h = ComplexMatrix::zeros(n);
        for i in 0..n {
            h.set(i, i, c(next(), 0.0));
            for j in i + 1..n {
                let v = c(next(), next());
                h.set(i, j, v);
                h.set(j, i, v.conj());
            }
        }
        let z = c(0.7, 0.3);
        let g = invert_shifted(&h, z).unwrap();
        let res = inversion_residual(&h, z, &g).unwrap();
        assert!(res < consts::INVERSION_RESIDUAL * n as f64, "residual {res}");

        // G_ij(conj z) = conj(G_ji(z)) for Hermitian H.
        let g_conj = invert_shifted(&h, z.conj()).unwrap();
        for i in 0..n {
            for j in 0..n {
                assert!((g_conj.get(i, j) - g.get(j, i).conj()).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn inf_norm_identity_and_row_sums() {
        assert_eq!(inf_operator_norm(&ComplexMatrix::identity(5)), 1.0);
        // [[1, -2], [0, 3i]]: row sums 3 and 3.
        let a = ComplexMatrix::from_rows(&[
            vec![c(1.0, 0.0), c(-2.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 3.0)],
        ])
        .unwrap();
        assert!((inf_operator_norm(&a) - 3.0).abs() < 1e-15);
    }

    #[test]
    fn inf_norm_permutation_invariant() {
        // Brute force over random permutations: |PAP^T|_inf = |A|_inf.
        let n = 7;
        let a = ComplexMatrix::from_fn(n, |i, j| c((i * 3 + j) as f64 * 0.17 - 1.0, (i + 2 * j) as f64 * 0.05));
        let base = inf_operator_norm(&a);
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = 12345u64;
        for _ in 0..20 {
            // Fisher-Yates with a tiny LCG.
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                let j = (state >> 33) as usize % (i + 1);
                perm.swap(i, j);
            }
            let p = ComplexMatrix::from_fn(n, |i, j| a.get(perm[i], perm[j]));
            assert!((inf_operator_norm(&p) - base).abs() < 1e-12);
        }
    }

    #[test]
    fn csv_round_trip() {
        let m = ComplexMatrix::from_fn(4, |i, j| c(i as f64 + 0.25, j as f64 - 1.5));
        let mut buf = Vec::new();
        write_matrix_csv(&m, &mut buf).unwrap();
        let back = read_matrix_csv(&mut std::io::BufReader::new(&buf[..])).unwrap();
        assert_eq!(m, back);
    }
}
