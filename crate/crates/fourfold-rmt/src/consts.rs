//! Central table of numerical tolerances.
//!
//! Every default tolerance used by the library lives here so that the
//! dimension- and eta-scaling conventions are visible in one place.
//! Functions that scale a tolerance document the scaling next to the use.

/// Residual bound for shifted inversion: `|(H - z)G - I|_max <= INVERSION_RESIDUAL * n`.
pub const INVERSION_RESIDUAL: f64 = 1e-10;

/// Hermiticity gate for the eigensolver and resolvent entry points.
pub const HERMITICITY_TOL: f64 = 1e-12;

/// Backward error for eigenpairs: `|Hv - lambda v| <= EIGEN_BACKWARD * |H|`.
pub const EIGEN_BACKWARD: f64 = 1e-9;

/// Exactness gate for the fourfold symmetry relations.
pub const FOURFOLD_TOL: f64 = 1e-12;

/// Row-stochasticity gate for variance profiles.
pub const ROW_SUM_TOL: f64 = 1e-12;

/// Fixed-point residual for the semicircle Stieltjes transform.
pub const STIELTJES_RESIDUAL: f64 = 1e-12;

/// Agreement between the trace- and eigenvalue-based empirical transforms.
pub const EMPIRICAL_M_CROSS_TOL: f64 = 1e-8;

/// Base residual for the algebraic resolvent identities; callers scale by
/// a conditioning factor `max(1, 1/eta)^2`.
pub const IDENTITY_RESIDUAL: f64 = 1e-9;

/// Ward identity residual per row, scaled by the dimension.
pub const WARD_RESIDUAL: f64 = 1e-10;

/// Base residual for both self-consistent equations; scaled by
/// `max(1, 1/eta)^2` to account for resolvent conditioning.
pub const SELF_CONSISTENT_RESIDUAL: f64 = 1e-9;

/// Default lower floor asserted on the fitted constant of the m-estimates.
pub const M_ESTIMATE_C_FLOOR: f64 = 0.01;

/// Points per decade for the geometric eta grids of the spectral domain.
pub const ETA_GRID_PER_DECADE: usize = 32;

/// Default number of conditional resamples for partial expectations.
pub const DEFAULT_RESAMPLES: usize = 2000;

/// Default conditional resamples inside the fluctuation-averaging harness.
pub const HARNESS_RESAMPLES: usize = 500;
