use alloc::string::String;
use alloc::vec::Vec;

use crate::periodic::Witness;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("invalid braid: {0}")]
    InvalidBraid(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("crossing {index} out of range (diagram has {count} crossings)")]
    CrossingOutOfRange { index: usize, count: usize },

    #[error("component {index} out of range (link has {count} components)")]
    ComponentOutOfRange { index: usize, count: usize },

    #[error("linking number of component {0} with itself is a framing, not a diagram quantity")]
    SameComponent(usize),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("invalid component subset {0:?}")]
    InvalidSubset(Vec<usize>),

    #[error("polynomial has a term of degree {degree} outside the z^(n-1)*(even series) support for {components} components")]
    MalformedPolynomial { degree: i32, components: usize },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("need at least {needed} components, got {got}")]
    TooFewComponents { needed: usize, got: usize },

    #[error("diagram has {crossings} crossings, over the skein budget of {budget}")]
    CrossingBudget { crossings: usize, budget: usize },

    #[error("link has {components} components, over the subset budget of {budget}")]
    SubsetBudget { components: usize, budget: usize },

    #[error("expected {expected} framings, got {got}")]
    FramingCount { expected: usize, got: usize },

    #[error("diagram carries no braid form; the Seifert route needs one")]
    NoBraidForm,

    #[error("invalid triple linking tensor: {0}")]
    InvalidTensor(String),

    #[error("convention not fixed: {0}")]
    ConventionNotFixed(String),

    #[error("calibration failed: {0}")]
    Calibration(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("hypothesis violated: {reason}; witnesses {witnesses:?}")]
    NotPeriodic { reason: String, witnesses: Vec<Witness> },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
