//! Exact computations with Gelfand-Tsetlin bases of gl(m|n) modules and
//! modules over the super Yangian Y(gl(m|n)).
//!
//! Everything is computed over the rationals; there is no floating point.

pub mod arith;
pub mod drinfeld;
pub mod glmn;
pub mod gt;
pub mod report;
pub mod spectra;
pub mod yangian;

pub use arith::{ri, rq, ArithError, Poly, RFMatrix, Rat, RatFunc, RatMatrix, SparseMat};
pub use gt::{GTPattern, GtError, SuperShape, Weight, ZZDegree};
pub use report::Report;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Gt(#[from] GtError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("modules are over different shapes")]
    ShapeMismatch,
    #[error("pole hit at u = {0}")]
    PoleHit(Rat),
    #[error("singular subspace is not invariant")]
    InvarianceViolation,
    #[error("no highest vector")]
    NoHighestVector,
    #[error("highest vector is not a t_ii eigenvector")]
    NotEigen,
    #[error("ratio {0} admits no Drinfeld polynomial")]
    NotDominant(usize),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("factors are not ordered as required: {0}")]
    OrderingViolation(String),
    #[error("collection does not satisfy the strong non-crossing condition")]
    NotNoncrossing,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Whether the error points at a bug rather than at bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::InternalInvariantViolation(_)
                | Error::InvarianceViolation
                | Error::Arith(ArithError::InternalCheck(_))
        )
    }
}
