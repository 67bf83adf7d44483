use thiserror::Error;

use crate::ext::FunctorDescriptor;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("composite of consecutive maps is not zero{0}")]
    CompositionNotZero(String),

    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("complexes have different orientations")]
    OrientationMismatch,

    #[error("map does not commute with the differentials at degree {degree}")]
    NotAChainMap { degree: i64 },

    #[error("index {index} out of range (valid: {valid})")]
    IndexOutOfRange { index: usize, valid: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("not a group action: {0}")]
    NotAnAction(String),

    #[error("unsupported pair Ext({source_functor}, {target}); supported: {supported}")]
    UnsupportedPair {
        source_functor: FunctorDescriptor,
        target: FunctorDescriptor,
        supported: String,
    },

    #[error("unsupported functor {functor} for {context}")]
    UnsupportedFunctor {
        functor: FunctorDescriptor,
        context: String,
    },

    #[error("Ext({source_functor}, {target}) has only one evaluation method")]
    OnlyOneMethod {
        source_functor: FunctorDescriptor,
        target: FunctorDescriptor,
    },

    #[error("methods disagree in degree {degree}: closed form {closed}, chain level {chain}")]
    MethodMismatch {
        degree: i64,
        closed: String,
        chain: String,
    },

    #[error("malformed complex document: {0}")]
    Json(String),
}
