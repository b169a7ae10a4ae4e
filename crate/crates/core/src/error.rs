use thiserror::Error;

use crate::ring::RingSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingSpec, RingSpec),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("operation `{op}` is not supported over {ring}")]
    UnsupportedRing { op: &'static str, ring: RingSpec },
    #[error("morphism is not well defined: {0}")]
    IllDefined(String),
    #[error("not composable: {0}")]
    NotComposable(String),
    #[error("differentials do not square to zero at degree {0}")]
    NotAComplex(i64),
    #[error("projective resolution exceeded length {0}")]
    ResolutionTooLong(usize),
    #[error("non-free entries: {0}")]
    NonFree(String),
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
