use thiserror::Error;

use crate::biposet::MissingEnvelope;
use crate::order::OrderViolation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element index {index} out of range for a carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("relation matrix has {len} entries, expected {size}x{size}")]
    MatrixShape { size: usize, len: usize },

    #[error("the {order} relation is not a partial order: {violation}")]
    NotPartialOrder {
        order: &'static str,
        violation: OrderViolation,
    },

    #[error("label table has {labels} entries but the relations have size {size}")]
    LabelCount { labels: usize, size: usize },

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("empty subset")]
    EmptySubset,

    #[error("not a mixed lattice: {0}")]
    NotMixedLattice(MissingEnvelope),

    #[error("condition r0 fails: y <= x in the second order and x <= y in the first, but x != y at (x, y) = ({x}, {y})")]
    R0Fails { x: usize, y: usize },

    #[error("axiom {axiom} fails at {witness:?}")]
    AxiomFails {
        axiom: &'static str,
        witness: Vec<usize>,
    },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Input(String),

    #[error("enumeration limited to n <= {limit}, got {n}")]
    TooLarge { n: usize, limit: usize },
}
