//! Exact arithmetic: rationals, polynomials, rational functions and matrices.

pub mod dense;
pub mod interp;
pub mod poly;
pub mod rat;
pub mod ratfunc;
pub mod rfmatrix;
pub mod sparse;

pub use dense::RatMatrix;
pub use poly::Poly;
pub use rat::{ri, rq, Rat};
pub use ratfunc::RatFunc;
pub use rfmatrix::{rf_from_samples, RFMatrix};
pub use sparse::SparseMat;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArithError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("pole at {0}")]
    Pole(Rat),
    #[error("need {need} samples, have {have}")]
    InsufficientSamples { have: usize, need: usize },
    #[error("no rational function of the declared degree fits the samples")]
    InconsistentSamples,
    #[error("polynomial does not split over the rationals")]
    IrrationalRoots,
    #[error("cannot parse rational {0:?}")]
    Parse(String),
    #[error("internal check failed: {0}")]
    InternalCheck(&'static str),
}
