//! Error type shared by every module in the crate.

use thiserror::Error;

/// Crate-wide error type.
///
/// Constructors validate eagerly, so evaluation methods only fail on
/// out-of-domain inputs or on genuine numerical breakdown.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A model parameter is outside its admissible range.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// An evaluation input is outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Vector inputs have inconsistent lengths or dimensions.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    /// A grid specification is unusable (empty, inverted, bad spacing).
    #[error("invalid grid: {0}")]
    Grid(String),

    /// Two models that must share structure do not.
    #[error("incompatible inputs: {0}")]
    Incompatible(String),

    /// An iterative routine failed to converge or produced non-finite values.
    #[error("numerical failure: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
