//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in cyclotomic field")]
    DivisionByZero,

    #[error("value does not lie in the cyclotomic subfield of conductor {target}")]
    NotInSubfield { target: u32 },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("group closure exceeded safety bound {bound}; generators do not close")]
    ClosureDiverged { bound: usize },

    #[error("group does not contain -I; not a binary polyhedral group")]
    MissingMinusIdentity,

    #[error("no splitting prime p = 1 mod {exponent} below {bound}")]
    NoSplittingPrime { exponent: u64, bound: u64 },

    #[error("matrix dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("class function is not a character: multiplicity of row {row} is not a non-negative integer")]
    NonIntegerMultiplicity { row: usize },

    #[error("quotient is not finite-dimensional: no leading term is a pure power of {variable}")]
    InfiniteQuotient { variable: String },

    #[error("ideal is not invariant: generator `{generator}` moved by group element {element}")]
    NotInvariant { generator: String, element: usize },

    #[error("ideal containment violated: {message}")]
    Containment { message: String },

    #[error("copies {i} and {j} are not isomorphic (intertwiner vanished after {retries} retries)")]
    NotIsomorphic { i: usize, j: usize, retries: usize },

    #[error("not a cluster: {reason}")]
    NotCluster { reason: String },

    #[error("contraction postcondition failed (implementation bug): {reason}")]
    ContractionPostcondition { reason: String },

    #[error("curve family has mixed contraction outcome; colliding parameters {collisions:?}")]
    MixedContraction { collisions: Vec<String> },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
