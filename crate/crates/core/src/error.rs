use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("symmetric truncation requires odd d, got d = {0}")]
    EvenDimension(usize),
    #[error("local dimension must be at least 3, got d = {0}")]
    DimensionTooSmall(usize),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("index {index} out of range for {what} (limit {limit})")]
    OutOfRange {
        what: &'static str,
        index: usize,
        limit: usize,
    },
    #[error("coefficient beta_{r} vanishes (|beta_r| = {magnitude:e}); expansion is not irreducible")]
    Reducible { r: usize, magnitude: f64 },
    #[error("sign pattern of c_r disagrees with the comparator threshold at r = {r}")]
    SignPatternMismatch { r: usize },
    #[error("state-preparation ratio {ratio} exceeds 1 at r = {r}")]
    PrepRatio { r: usize, ratio: f64 },
    #[error("schedule contains a non-Z rotation at position {0}")]
    NonDiagonalRotation(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("register of {0} qubits is too large for dense enumeration")]
    RegisterTooLarge(u32),
    #[error("empty scan range")]
    EmptyRange,
    #[error("unknown {kind} '{name}'")]
    UnknownStrategy { kind: &'static str, name: String },
}

pub(crate) fn check_unit_interval(name: &str, value: f64) -> Result<()> {
    if value > 0.0 && value < 1.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must lie in (0, 1), got {value}")))
    }
}
