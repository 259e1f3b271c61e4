//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum CoreError {
    /// A constructor or operation received an argument outside its domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// `log_gamma` was evaluated at a nonpositive integer.
    #[error("log-gamma pole at z = {re} + {im}i (nonpositive integer)")]
    LogGammaPole { re: f64, im: f64 },

    /// A `(p, q)` pair violating `p >= 0`, `p +- q` nonnegative even.
    #[error("invalid K-type index (p, q) = ({p}, {q})")]
    InvalidKType { p: i64, q: i64 },

    /// A truncated integral failed to meet the requested tolerance.
    /// `tail_estimate` bounds the neglected mass.
    #[error("truncated integral did not converge (tail estimate {tail_estimate:.3e})")]
    TruncationNotConverged { tail_estimate: f64 },

    /// Closed-form evaluation requested on a space that has none.
    #[error("no closed form available for space {space}")]
    NoClosedForm { space: String },

    /// Spatial synthesis of a heat-derivative form with non-trivial K-types.
    #[error("spatial synthesis only implemented for the trivial K-type; form contains ({p}, {q})")]
    SpatialSynthesisUnsupported { p: u32, q: i32 },

    /// A tabulated profile was evaluated outside its grid.
    #[error("evaluation at {at} outside tabulated grid [{lo}, {hi}]")]
    OutsideGrid { at: f64, lo: f64, hi: f64 },

    /// The (f, fhat) pair handed to a functional is not a transform pair.
    #[error("profile pair inconsistent: |fhat - transform(f)| = {deviation:.3e} at lambda = {lambda}")]
    InconsistentPair { lambda: f64, deviation: f64 },
}

pub type Result<T> = std::result::Result<T, CoreError>;
