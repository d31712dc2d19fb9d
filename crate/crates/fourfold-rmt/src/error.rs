use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows} rows, {cols} columns")]
    NonSquare { rows: usize, cols: usize },

    #[error("matrix dimensions do not match: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("shift has zero imaginary part; resolvents require Im z != 0")]
    RealShift,

    #[error("spectral point requires eta > 0, got {eta}")]
    NonPositiveEta { eta: f64 },

    #[error("matrix is singular (pivot {pivot:.3e} at step {step})")]
    Singular { step: usize, pivot: f64 },

    #[error("matrix is not Hermitian: max asymmetry {max_asym:.3e} exceeds {tol:.3e}")]
    NotHermitian { max_asym: f64, tol: f64 },

    #[error("invalid variance profile: {0}")]
    InvalidProfile(String),

    #[error("bandwidth {w} out of range 1..={n}")]
    BandwidthOutOfRange { w: usize, n: usize },

    #[error("index {index} lies inside the minor set; its resolvent entries are undefined")]
    IndexInMinor { index: usize },

    #[error("index {index} is self-paired (x = -x mod {n}); operation requires x != -x")]
    SelfPairedIndex { index: usize, n: usize },

    #[error("grid is empty or degenerate: {0}")]
    EmptyGrid(String),

    #[error("breakdowns must cover every index 0..{n}, got {got}")]
    IncompleteBreakdowns { n: usize, got: usize },

    #[error("invalid experiment config: {0}")]
    InvalidConfig(String),

    #[error("weight matrix does not commute with {with}: max residual {residual:.3e}")]
    NonCommutingWeights { with: &'static str, residual: f64 },

    #[error("gamma parameter must lie in (0, 1/2), got {0}")]
    GammaOutOfRange(f64),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
