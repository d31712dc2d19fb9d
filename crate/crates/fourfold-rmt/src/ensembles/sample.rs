//! Samplers for the fourfold-symmetric ensembles, the GOE, and the flip
//! model.
//!
//! Sampling is driven by a counter-based generator (ChaCha8) with one
//! stream per orbit: stream `k` is dedicated to the `k`-th orbit in
//! canonical order, so samples are deterministic in `(profile, dist,
//! seed)` and independent of evaluation order; resampling a subset of
//! orbits never disturbs the remaining entries.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::orbits::{orbit_representatives, Orbit};
use super::{EntryDistribution, VarianceProfile};
use crate::consts;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

/// How a matrix was produced; enough to reproduce it bit for bit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub profile: String,
    pub dist: EntryDistribution,
    pub seed: u64,
}

/// A sampled Hermitian matrix obeying the fourfold symmetry exactly.
#[derive(Debug, Clone)]
pub struct FourfoldMatrix {
    matrix: ComplexMatrix,
    provenance: Provenance,
}

impl FourfoldMatrix {
    pub fn n(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    #[inline]
    pub fn entry(&self, x: usize, y: usize) -> Complex64 {
        self.matrix.get(x % self.n(), y % self.n())
    }

    pub fn dist(&self) -> EntryDistribution {
        self.provenance.dist
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Deterministic all-zero matrix; useful as a degenerate ensemble.
    pub fn zeros(n: usize, dist: EntryDistribution) -> Self {
        Self {
            matrix: ComplexMatrix::zeros(n),
            provenance: Provenance { profile: format!("zero({n})"), dist, seed: 0 },
        }
    }

    /// Wraps an explicit matrix after checking the symmetry exactly.
    pub fn from_matrix(matrix: ComplexMatrix, dist: EntryDistribution) -> Result<Self> {
        let violations = validate_fourfold(&matrix);
        if let Some(v) = violations.first() {
            return Err(Error::InvalidProfile(format!(
                "matrix violates the fourfold symmetry at orbit {:?} by {:.3e}",
                v.orbit_representative, v.max_deviation
            )));
        }
        Ok(Self {
            matrix,
            provenance: Provenance { profile: "explicit".into(), dist, seed: 0 },
        })
    }
}

/// SplitMix64 step; the basis for deriving sub-seeds from a base seed.
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Deterministically mixes a list of integers into one sub-seed.
pub fn mix_seed(parts: &[u64]) -> u64 {
    let mut state = 0x853c49e6748fea9bu64;
    let mut out = 0u64;
    for &p in parts {
        state ^= p;
        out = splitmix64(&mut state);
    }
    out
}

fn draw_real_unit(dist: EntryDistribution, rng: &mut ChaCha8Rng) -> f64 {
    match dist {
        EntryDistribution::RealGaussian | EntryDistribution::ComplexGaussian => {
            rng.sample(StandardNormal)
        }
        EntryDistribution::Rademacher => {
            if rng.random::<bool>() {
                1.0
            } else {
                -1.0
            }
        }
        EntryDistribution::Uniform => {
            let u: f64 = rng.random();
            (2.0 * u - 1.0) * 3.0f64.sqrt()
        }
    }
}

/// Unit-variance draw; forced-real entries always draw a real scalar.
pub(crate) fn draw_unit(
    dist: EntryDistribution,
    forced_real: bool,
    rng: &mut ChaCha8Rng,
) -> Complex64 {
    if forced_real || !dist.is_complex() {
        Complex64::new(draw_real_unit(dist, rng), 0.0)
    } else {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
    }
}

fn write_orbit(
    matrix: &mut ComplexMatrix,
    profile: &VarianceProfile,
    dist: EntryDistribution,
    orbit: &Orbit,
    rng: &mut ChaCha8Rng,
) {
    let (rx, ry) = orbit.representative;
    let scale = profile.s(rx, ry).sqrt();
    let value = draw_unit(dist, orbit.forced_real, rng) * scale;
    for &((a, b), conj) in &orbit.members {
        matrix.set(a, b, if conj { value.conj() } else { value });
    }
}

/// Samples a fourfold-symmetric matrix `h_xy = s_xy^{1/2} zeta_xy`.
pub fn sample_fourfold(
    profile: &VarianceProfile,
    dist: EntryDistribution,
    seed: u64,
) -> Result<FourfoldMatrix> {
    profile.validate()?;
    let n = profile.n();
    let mut matrix = ComplexMatrix::zeros(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (stream, orbit) in orbit_representatives(n).iter().enumerate() {
        rng.set_stream(stream as u64);
        rng.set_word_pos(0);
        write_orbit(&mut matrix, profile, dist, orbit, &mut rng);
    }
    Ok(FourfoldMatrix {
        matrix,
        provenance: Provenance { profile: profile.label(), dist, seed },
    })
}

/// Redraws exactly the orbits in `touched` (stream indices from the
/// canonical enumeration) with a fresh seed, leaving all other entries
/// untouched. This is the symmetry-respecting resampling behind the
/// partial expectations.
pub fn resample_touching(
    base: &FourfoldMatrix,
    profile: &VarianceProfile,
    touched: &[(usize, Orbit)],
    reseed: u64,
) -> FourfoldMatrix {
    let mut matrix = base.matrix.clone();
    let mut rng = ChaCha8Rng::seed_from_u64(reseed);
    for (stream, orbit) in touched {
        rng.set_stream(*stream as u64);
        rng.set_word_pos(0);
        write_orbit(&mut matrix, profile, base.provenance.dist, orbit, &mut rng);
    }
    FourfoldMatrix { matrix, provenance: base.provenance.clone() }
}

/// Gaussian orthogonal ensemble normalized so each row's variances sum to
/// `1 + 1/n`: off-diagonal variance `1/n`, diagonal variance `2/n`.
pub fn sample_goe(n: usize, seed: u64) -> ComplexMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let off = (1.0 / n as f64).sqrt();
    let diag = (2.0 / n as f64).sqrt();
    let mut m = ComplexMatrix::zeros(n);
    for x in 0..n {
        for y in x..n {
            let g: f64 = rng.sample(StandardNormal);
            let v = if x == y { g * diag } else { g * off };
            m.set(x, y, Complex64::new(v, 0.0));
            m.set(y, x, Complex64::new(v, 0.0));
        }
    }
    m
}

/// Flip model: fourfold-symmetric off-diagonal part over the uniform
/// profile with every diagonal entry pinned to a constant.
pub fn sample_flip_model(n: usize, diagonal_value: f64, seed: u64) -> Result<FourfoldMatrix> {
    let profile = VarianceProfile::wigner(n);
    let mut sample = sample_fourfold(&profile, EntryDistribution::RealGaussian, seed)?;
    for x in 0..n {
        sample.matrix.set(x, x, Complex64::new(diagonal_value, 0.0));
    }
    sample.provenance.profile = format!("flip({n},{diagonal_value})");
    Ok(sample)
}

/// A detected violation of the fourfold relations, reported per orbit.
#[derive(Debug, Clone, PartialEq)]
pub struct FourfoldViolation {
    pub orbit_representative: (usize, usize),
    pub max_deviation: f64,
}

/// Checks `h_xy = conj(h_yx) = h_{-y,-x} = conj(h_{-x,-y})` and the real
/// diagonal within `1e-12`; empty iff the matrix is fourfold symmetric.
pub fn validate_fourfold(m: &ComplexMatrix) -> Vec<FourfoldViolation> {
    validate_fourfold_with_tol(m, consts::FOURFOLD_TOL)
}

pub fn validate_fourfold_with_tol(m: &ComplexMatrix, tol: f64) -> Vec<FourfoldViolation> {
    let n = m.dim();
    let mut out = Vec::new();
    for orbit in orbit_representatives(n) {
        let rep = m.get(orbit.representative.0, orbit.representative.1);
        let mut worst = 0.0f64;
        for &((a, b), conj) in &orbit.members {
            let expect = if conj { rep.conj() } else { rep };
            worst = worst.max((m.get(a, b) - expect).norm());
        }
        if orbit.forced_real {
            worst = worst.max(rep.im.abs());
        }
        if worst > tol {
            out.push(FourfoldViolation {
                orbit_representative: orbit.representative,
                max_deviation: worst,
            });
        }
    }
    out
}
