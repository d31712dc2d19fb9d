//! Variance profiles, entry distributions and fourfold-symmetric samplers.

mod fourier;
mod orbits;
mod sample;

pub use fourier::{fourier_goe_check, fourier_transform, FourierGoeReport};
pub use orbits::{
    free_real_parameters, is_self_paired, orbit_representatives, orbits_touching,
    self_paired_indices, Orbit,
};
pub use sample::{
    resample_touching, sample_flip_model, sample_fourfold, sample_goe, validate_fourfold,
    validate_fourfold_with_tol, FourfoldMatrix, FourfoldViolation, Provenance,
};

use serde::{Deserialize, Serialize};

use crate::consts;
use crate::error::{Error, Result};

/// Entry distribution of the normalized variables: mean zero, unit second
/// absolute moment. The complex-gaussian kind additionally has vanishing
/// plain second moment off the forced-real entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EntryDistribution {
    RealGaussian,
    ComplexGaussian,
    Rademacher,
    Uniform,
}

impl EntryDistribution {
    pub fn is_complex(self) -> bool {
        matches!(self, EntryDistribution::ComplexGaussian)
    }

    /// Absolute moment bound `mu_p = E|zeta|^p` for `p <= 8`.
    pub fn moment_bound(self, p: usize) -> Option<f64> {
        use EntryDistribution::*;
        if p == 0 || p > 8 {
            return None;
        }
        let v = match self {
            // 2^{p/2} Gamma((p+1)/2) / sqrt(pi)
            RealGaussian => [
                0.7978845608028654,
                1.0,
                1.5957691216057308,
                3.0,
                6.383076486422923,
                15.0,
                38.29845891853754,
                105.0,
            ][p - 1],
            // Gamma(p/2 + 1)
            ComplexGaussian => [
                0.8862269254527580,
                1.0,
                1.3293403881791370,
                2.0,
                3.3233509704478426,
                6.0,
                11.631728396567449,
                24.0,
            ][p - 1],
            Rademacher => 1.0,
            // Uniform on [-sqrt(3), sqrt(3)]: 3^{p/2} / (p + 1)
            Uniform => {
                let s = 3.0f64.powf(p as f64 / 2.0);
                s / (p as f64 + 1.0)
            }
        };
        Some(v)
    }

    pub fn name(self) -> &'static str {
        match self {
            EntryDistribution::RealGaussian => "real-gaussian",
            EntryDistribution::ComplexGaussian => "complex-gaussian",
            EntryDistribution::Rademacher => "rademacher",
            EntryDistribution::Uniform => "uniform",
        }
    }
}

impl std::str::FromStr for EntryDistribution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "real-gaussian" => Ok(EntryDistribution::RealGaussian),
            "complex-gaussian" => Ok(EntryDistribution::ComplexGaussian),
            "rademacher" => Ok(EntryDistribution::Rademacher),
            "uniform" => Ok(EntryDistribution::Uniform),
            other => Err(Error::InvalidConfig(format!("unknown distribution {other:?}"))),
        }
    }
}

/// Named construction recipe of a profile, kept for provenance and JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProfileKind {
    Wigner,
    Band { w: usize },
    Explicit,
}

/// Variance profile `S = (s_xy)`: fourfold-symmetric, row-stochastic, with
/// `M = (max s_xy)^{-1}` satisfying `N^delta <= M <= N`.
#[derive(Debug, Clone, PartialEq)]
pub struct VarianceProfile {
    n: usize,
    s: Vec<f64>,
    delta: f64,
    kind: ProfileKind,
}

impl VarianceProfile {
    /// Uniform profile `s_xy = 1/n`, so `M = n`.
    pub fn wigner(n: usize) -> Self {
        let s = vec![1.0 / n as f64; n * n];
        let p = Self { n, s, delta: default_delta(n, n as f64), kind: ProfileKind::Wigner };
        debug_assert!(p.validate().is_ok());
        p
    }

    /// Band profile: `s_xy` uniform on circular distance `<= w`, row
    /// normalized. `M = min(2w + 1, n)`, within a factor 4 of `w`.
    pub fn band(n: usize, w: usize) -> Result<Self> {
        if w < 1 || w > n {
            return Err(Error::BandwidthOutOfRange { w, n });
        }
        let count = (2 * w + 1).min(n);
        let val = 1.0 / count as f64;
        let mut s = vec![0.0; n * n];
        for x in 0..n {
            for y in 0..n {
                let d = (x as isize - y as isize).unsigned_abs() % n;
                let dist = d.min(n - d);
                if dist <= w {
                    s[x * n + y] = val;
                }
            }
        }
        let p = Self { n, s, delta: default_delta(n, count as f64), kind: ProfileKind::Band { w } };
        p.validate()?;
        Ok(p)
    }

    /// Profile from an explicit row-major variance matrix.
    pub fn explicit(n: usize, s: Vec<f64>, delta: f64) -> Result<Self> {
        if s.len() != n * n {
            return Err(Error::InvalidProfile(format!(
                "variance matrix has {} entries, expected {}",
                s.len(),
                n * n
            )));
        }
        let p = Self { n, s, delta, kind: ProfileKind::Explicit };
        p.validate()?;
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn kind(&self) -> &ProfileKind {
        &self.kind
    }

    #[inline]
    pub fn s(&self, x: usize, y: usize) -> f64 {
        self.s[(x % self.n) * self.n + (y % self.n)]
    }

    pub fn s_matrix(&self) -> &[f64] {
        &self.s
    }

    /// `M = (max_xy s_xy)^{-1}`.
    pub fn m_param(&self) -> f64 {
        let max = self.s.iter().cloned().fold(0.0f64, f64::max);
        1.0 / max
    }

    /// Checks every profile invariant: exact fourfold symmetry of `S`,
    /// row-stochasticity within `1e-12`, and `N^delta <= M <= N`.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if n == 0 {
            return Err(Error::InvalidProfile("empty profile".into()));
        }
        for &v in &self.s {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidProfile(format!("entry {v} not a finite nonnegative")));
            }
        }
        let neg = |a: usize| (n - a % n) % n;
        for x in 0..n {
            for y in 0..n {
                let v = self.s[x * n + y];
                for (a, b) in [(y, x), (neg(y), neg(x)), (neg(x), neg(y))] {
                    if self.s[a * n + b] != v {
                        return Err(Error::InvalidProfile(format!(
                            "symmetry violated at ({x},{y}) vs ({a},{b})"
                        )));
                    }
                }
            }
        }
        for x in 0..n {
            let sum: f64 = self.s[x * n..(x + 1) * n].iter().sum();
            if (sum - 1.0).abs() > consts::ROW_SUM_TOL {
                return Err(Error::InvalidProfile(format!(
                    "row {x} sums to {sum}, expected 1"
                )));
            }
        }
        if self.delta <= 0.0 {
            return Err(Error::InvalidProfile(format!("delta must be positive, got {}", self.delta)));
        }
        let m = self.m_param();
        let lower = (n as f64).powf(self.delta);
        if !(lower <= m * (1.0 + 1e-12) && m <= n as f64 * (1.0 + 1e-12)) {
            return Err(Error::InvalidProfile(format!(
                "M = {m} violates N^delta = {lower} <= M <= N = {n}"
            )));
        }
        Ok(())
    }

    /// Short label used in provenance records.
    pub fn label(&self) -> String {
        match self.kind {
            ProfileKind::Wigner => format!("wigner({})", self.n),
            ProfileKind::Band { w } => format!("band({},{})", self.n, w),
            ProfileKind::Explicit => format!("explicit({})", self.n),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let doc = ProfileJson {
            n: self.n,
            kind: match self.kind {
                ProfileKind::Wigner => "wigner".into(),
                ProfileKind::Band { .. } => "band".into(),
                ProfileKind::Explicit => "explicit".into(),
            },
            w: match self.kind {
                ProfileKind::Band { w } => Some(w),
                _ => None,
            },
            s: match self.kind {
                ProfileKind::Explicit => Some(self.s.clone()),
                _ => None,
            },
            delta: self.delta,
        };
        Ok(serde_json::to_string_pretty(&doc)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ProfileJson = serde_json::from_str(text)?;
        match doc.kind.as_str() {
            "wigner" => {
                let mut p = Self::wigner(doc.n);
                p.delta = doc.delta;
                p.validate()?;
                Ok(p)
            }
            "band" => {
                let w = doc
                    .w
                    .ok_or_else(|| Error::InvalidProfile("band profile requires W".into()))?;
                let mut p = Self::band(doc.n, w)?;
                p.delta = doc.delta;
                p.validate()?;
                Ok(p)
            }
            "explicit" => {
                let s = doc
                    .s
                    .ok_or_else(|| Error::InvalidProfile("explicit profile requires s".into()))?;
                Self::explicit(doc.n, s, doc.delta)
            }
            other => Err(Error::InvalidProfile(format!("unknown profile kind {other:?}"))),
        }
    }
}

fn default_delta(n: usize, m: f64) -> f64 {
    if n <= 1 {
        return 0.5;
    }
    let cap = m.ln() / (n as f64).ln();
    (0.99 * cap).min(0.5).max(1e-6)
}

#[derive(Serialize, Deserialize)]
struct ProfileJson {
    n: usize,
    kind: String,
    #[serde(rename = "W", skip_serializing_if = "Option::is_none", default)]
    w: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    s: Option<Vec<f64>>,
    delta: f64,
}

/// Plain second moment `r_xy = E h_xy^2` of a sampled entry.
///
/// Real kinds have `r = s` everywhere. The complex-gaussian kind has
/// `E zeta^2 = 0`, so `r` vanishes except on entries the symmetry forces
/// to be real: the diagonal, and pairs of self-paired indices.
pub fn second_moment(
    profile: &VarianceProfile,
    dist: EntryDistribution,
    x: usize,
    y: usize,
) -> f64 {
    if !dist.is_complex() {
        return profile.s(x, y);
    }
    let n = profile.n();
    let forced_real = x % n == y % n || (is_self_paired(n, x) && is_self_paired(n, y));
    if forced_real {
        profile.s(x, y)
    } else {
        0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wigner_profile_m() {
        let p = VarianceProfile::wigner(100);
        assert_eq!(p.m_param(), 100.0);
        p.validate().unwrap();
    }

    #[test]
    fn band_full_width_equals_wigner() {
        let b = VarianceProfile::band(12, 12).unwrap();
        let w = VarianceProfile::wigner(12);
        assert_eq!(b.s_matrix(), w.s_matrix());
    }

    #[test]
    fn band_rows_sum_to_one() {
        let p = VarianceProfile::band(64, 8).unwrap();
        for x in 0..64 {
            let sum: f64 = (0..64).map(|y| p.s(x, y)).sum();
            assert!((sum - 1.0).abs() <= 1e-12, "row {x} sums to {sum}");
        }
        // M within a factor 4 of W.
        let m = p.m_param();
        assert!(m >= 8.0 / 4.0 && m <= 8.0 * 4.0, "M = {m}");
    }

    #[test]
    fn band_rejects_out_of_range() {
        assert!(matches!(
            VarianceProfile::band(8, 0),
            Err(Error::BandwidthOutOfRange { .. })
        ));
        assert!(matches!(
            VarianceProfile::band(8, 9),
            Err(Error::BandwidthOutOfRange { .. })
        ));
    }

    #[test]
    fn profile_json_round_trip() {
        for p in [
            VarianceProfile::wigner(10),
            VarianceProfile::band(10, 3).unwrap(),
            VarianceProfile::explicit(2, vec![0.5, 0.5, 0.5, 0.5], 0.5).unwrap(),
        ] {
            let text = p.to_json().unwrap();
            let back = VarianceProfile::from_json(&text).unwrap();
            assert_eq!(p, back);
        }
    }

    #[test]
    fn second_moment_rules() {
        let p = VarianceProfile::wigner(8);
        // Real kinds: r = s on every entry.
        assert_eq!(second_moment(&p, EntryDistribution::RealGaussian, 1, 5), p.s(1, 5));
        // Complex-gaussian: zero on free entries, s on forced-real ones.
        assert_eq!(second_moment(&p, EntryDistribution::ComplexGaussian, 1, 5), 0.0);
        assert_eq!(second_moment(&p, EntryDistribution::ComplexGaussian, 3, 3), p.s(3, 3));
        assert_eq!(second_moment(&p, EntryDistribution::ComplexGaussian, 0, 4), p.s(0, 4));
        // Counterdiagonal entries are free complex scalars.
        assert_eq!(second_moment(&p, EntryDistribution::ComplexGaussian, 1, 7), 0.0);
    }

    #[test]
    fn moment_bounds_table() {
        assert_eq!(EntryDistribution::RealGaussian.moment_bound(2), Some(1.0));
        assert_eq!(EntryDistribution::RealGaussian.moment_bound(4), Some(3.0));
        assert_eq!(EntryDistribution::ComplexGaussian.moment_bound(4), Some(2.0));
        assert_eq!(EntryDistribution::Rademacher.moment_bound(8), Some(1.0));
        let u4 = EntryDistribution::Uniform.moment_bound(4).unwrap();
        assert!((u4 - 9.0 / 5.0).abs() < 1e-15);
        assert_eq!(EntryDistribution::Uniform.moment_bound(9), None);
    }
}
