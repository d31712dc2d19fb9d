//! Discrete Fourier transform of matrices and the GOE covariance check.

use num_complex::Complex64;

use super::sample::{mix_seed, sample_goe};
use crate::linalg::ComplexMatrix;

/// `hat h_pq = N^{-1} sum_{x,y} h_xy exp(-i 2 pi (p x - q y) / N)`,
/// evaluated as `W H W^dagger / N` with `W_px = exp(-i 2 pi p x / N)`.
pub fn fourier_transform(h: &ComplexMatrix) -> ComplexMatrix {
    let n = h.dim();
    let roots: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = -2.0 * std::f64::consts::PI * k as f64 / n as f64;
            let (s, c) = angle.sin_cos();
            Complex64::new(c, s)
        })
        .collect();
    let w = ComplexMatrix::from_fn(n, |p, x| roots[(p * x) % n]);
    let wh = w.matmul(h).expect("same dimension");
    let mut out = wh.matmul(&w.conj_transpose()).expect("same dimension");
    let scale = 1.0 / n as f64;
    for v in out.as_mut_slice() {
        *v *= scale;
    }
    out
}

/// Covariance statistics of the Fourier transform of GOE samples.
#[derive(Debug, Clone)]
pub struct FourierGoeReport {
    pub n: usize,
    pub samples: usize,
    /// Worst fourfold-relation defect across all samples.
    pub max_symmetry_defect: f64,
    /// Worst relative deviation of `E|hat h_pq|^2` from `1/N` over all `(p, q)`.
    pub max_variance_rel_err: f64,
    /// Worst `|mean hat h_pr^2| / SE` over entries with `p != r`.
    pub max_offdiag_zscore: f64,
    /// Worst cross-orbit covariance z-score among the spot-checked pairs.
    pub max_cross_zscore: f64,
}

impl FourierGoeReport {
    /// Pass thresholds: exact symmetry to `1e-10`, variances within 5
    /// percent, second moments and cross covariances below 3 standard
    /// errors.
    pub fn passes(&self) -> bool {
        self.max_symmetry_defect <= 1e-10
            && self.max_variance_rel_err <= 0.05
            && self.max_offdiag_zscore <= 3.0
            && self.max_cross_zscore <= 3.0
    }
}

/// Empirically verifies the GOE Fourier covariance structure:
/// `E|hat h_pq|^2 = 1/N`, `E hat h_pr^2 = 0` for `p != r`, independence
/// across orbits, and the fourfold symmetry of every transform.
pub fn fourier_goe_check(n: usize, samples: usize, seed: u64) -> FourierGoeReport {
    let nn = n * n;
    let mut sum_abs2 = vec![0.0f64; nn];
    let mut sum_sq = vec![Complex64::ZERO; nn];
    let mut sum_abs4 = vec![0.0f64; nn];

    // Spot-checked pairs of entries from distinct orbits.
    let cross_pairs: [((usize, usize), (usize, usize)); 3] =
        [((1, 2), (1, 3)), ((0, 1), (2, 3)), ((1, 2), (2, 4))];
    let mut cross_sum = [Complex64::ZERO; 3];
    let mut cross_sum_conj = [Complex64::ZERO; 3];
    let mut cross_abs2 = [0.0f64; 3];

    let mut max_defect = 0.0f64;
    for s in 0..samples {
        let goe = sample_goe(n, mix_seed(&[seed, s as u64]));
        let f = fourier_transform(&goe);
        max_defect = max_defect.max(fourfold_defect(&f));
        for p in 0..n {
            for q in 0..n {
                let v = f.get(p, q);
                let idx = p * n + q;
                let a2 = v.norm_sqr();
                sum_abs2[idx] += a2;
                sum_sq[idx] += v * v;
                sum_abs4[idx] += a2 * a2;
            }
        }
        for (i, &((p1, q1), (p2, q2))) in cross_pairs.iter().enumerate() {
            let a = f.get(p1, q1);
            let b = f.get(p2, q2);
            cross_sum[i] += a * b;
            cross_sum_conj[i] += a * b.conj();
            cross_abs2[i] += (a * b).norm_sqr();
        }
    }

    let count = samples as f64;
    let expect = 1.0 / n as f64;
    let mut max_var_err = 0.0f64;
    let mut max_z = 0.0f64;
    for p in 0..n {
        for q in 0..n {
            let idx = p * n + q;
            let mean_abs2 = sum_abs2[idx] / count;
            max_var_err = max_var_err.max((mean_abs2 - expect).abs() / expect);
            if p != q {
                let mean_sq = sum_sq[idx] / count;
                let var = (sum_abs4[idx] / count - mean_sq.norm_sqr()).max(0.0);
                let se = (var / count).sqrt();
                if se > 0.0 {
                    max_z = max_z.max(mean_sq.norm() / se);
                }
            }
        }
    }

    let mut max_cross = 0.0f64;
    for i in 0..cross_pairs.len() {
        let mean = cross_sum[i] / count;
        let mean_conj = cross_sum_conj[i] / count;
        let se = (cross_abs2[i] / count).sqrt() / count.sqrt();
        if se > 0.0 {
            max_cross = max_cross.max(mean.norm() / se).max(mean_conj.norm() / se);
        }
    }

    FourierGoeReport {
        n,
        samples,
        max_symmetry_defect: max_defect,
        max_variance_rel_err: max_var_err,
        max_offdiag_zscore: max_z,
        max_cross_zscore: max_cross,
    }
}

/// Max deviation from the fourfold relations, without allocating orbits.
fn fourfold_defect(m: &ComplexMatrix) -> f64 {
    let n = m.dim();
    let neg = |a: usize| (n - a) % n;
    let mut worst = 0.0f64;
    for p in 0..n {
        worst = worst.max(m.get(p, p).im.abs());
        for q in 0..n {
            let v = m.get(p, q);
            worst = worst
                .max((v - m.get(q, p).conj()).norm())
                .max((v - m.get(neg(q), neg(p))).norm())
                .max((v - m.get(neg(p), neg(q)).conj()).norm());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_transform_has_unit_diagonal() {
        for n in [4usize, 7, 16] {
            let f = fourier_transform(&ComplexMatrix::identity(n));
            for p in 0..n {
                for q in 0..n {
                    let expect = if p == q { Complex64::ONE } else { Complex64::ZERO };
                    assert!(
                        (f.get(p, q) - expect).norm() < 1e-12,
                        "n={n} entry ({p},{q}) = {}",
                        f.get(p, q)
                    );
                }
            }
        }
    }

    #[test]
    fn matches_direct_summation_oracle() {
        // Literal quadruple-loop evaluation of the defining formula at N = 4.
        let n = 4;
        let h = ComplexMatrix::from_fn(n, |x, y| {
            Complex64::new((x * 7 + y * 3) as f64 * 0.1 - 0.9, 0.0)
        });
        // Symmetrize.
        let h = ComplexMatrix::from_fn(n, |x, y| (h.get(x, y) + h.get(y, x)) * 0.5);
        let fast = fourier_transform(&h);
        for p in 0..n {
            for q in 0..n {
                let mut acc = Complex64::ZERO;
                for x in 0..n {
                    for y in 0..n {
                        let phase = -2.0 * std::f64::consts::PI
                            * (p as f64 * x as f64 - q as f64 * y as f64)
                            / n as f64;
                        acc += h.get(x, y) * Complex64::new(phase.cos(), phase.sin());
                    }
                }
                acc /= n as f64;
                assert!((fast.get(p, q) - acc).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn real_symmetric_input_yields_fourfold_output() {
        let goe = sample_goe(12, 5);
        let f = fourier_transform(&goe);
        assert!(fourfold_defect(&f) <= 1e-10);
    }

    #[test]
    fn goe_covariance_smoke() {
        // Small-sample smoke run; the acceptance suite runs the full check.
        let report = fourier_goe_check(8, 2000, 31);
        assert!(report.max_symmetry_defect <= 1e-10);
        assert!(report.max_variance_rel_err <= 0.2, "{}", report.max_variance_rel_err);
        assert!(report.max_offdiag_zscore <= 4.5, "{}", report.max_offdiag_zscore);
    }
}
