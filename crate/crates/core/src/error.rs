use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("site index {index} out of range for N = {n_sites}")]
    IndexOutOfRange { index: usize, n_sites: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("loop weight mismatch: {left} vs {right}")]
    BetaMismatch { left: String, right: String },

    #[error("N = {n_sites}, d = {defects} violates parity (N - d must be even, 0 <= d <= N)")]
    ParityViolation { n_sites: usize, defects: usize },

    #[error("N = {n_sites} exceeds the enumeration guard {max}")]
    EnumerationGuard { n_sites: usize, max: usize },

    #[error("configuration is not admissible")]
    NotAdmissible,

    #[error("step sequence is not a Dyck path")]
    NotDyck,

    #[error("invalid mode label {label} for N = {n_sites}")]
    InvalidMode { label: i64, n_sites: usize },

    #[error("duplicate mode {label} in Fock word")]
    DuplicateMode { label: i64 },

    #[error("Gram certificate requires |L| > 2|I| - 1, got |L| = {l_size}, |I| = {i_size}")]
    GramPathology { l_size: usize, i_size: usize },

    #[error("eigenvalue solver failed: {0}")]
    EigenFailure(String),

    #[error("rank computation unstable near threshold (gap ratio {gap:.3e})")]
    RankUnstable { gap: f64 },

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
