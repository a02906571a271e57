use thiserror::Error;

use crate::chain_core::{Generator, Violation};

/// Errors raised by the constructions in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: i32, found: i32 },

    #[error("complex mismatch: {0}")]
    ComplexMismatch(String),

    #[error("generator {0:?} is not a basis element of the complex")]
    UnknownGenerator(Generator),

    #[error("morphism of degree {0} where degree 0 is required")]
    NonzeroDegree(i32),

    #[error("structure error: {0}")]
    Structure(String),

    #[error("invalid reduction ({leg}): {violation}")]
    InvalidReduction { leg: String, violation: Violation },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("face index {index} out of range for a simplex of dimension {dim}")]
    FaceIndex { index: usize, dim: usize },

    #[error("invalid simplicial set: {0}")]
    InvalidSimplicial(String),

    #[error("invalid simplicial morphism: {0}")]
    InvalidMorphism(String),

    #[error("invalid cover: {0}")]
    InvalidCover(String),

    #[error("unknown space or space kind: {0}")]
    UnknownSpace(String),

    #[error("join of an empty space")]
    DegenerateJoin,

    #[error("assembly error: {0}")]
    Assembly(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
