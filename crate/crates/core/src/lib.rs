//! Finite mixed lattices: sets carrying two partial orders `≤` and `≼`,
//! the mixed envelopes they induce, exhaustive checking of the laws that
//! relate them, and the equivalent presentation as an algebra with two
//! binary operations.
//!
//! The positive rationals under multiplication, with the numeric order and
//! divisibility, are provided in [`ratgroup`] with exact arithmetic.

pub mod algebra;
pub mod biposet;
pub mod cli;
pub mod error;
pub mod gen;
pub mod io;
pub mod laws;
pub mod order;
pub mod ratgroup;
pub mod verdict;

pub use algebra::{AlgebraTables, AxiomId, AxiomReport};
pub use biposet::{EnvelopeKind, EnvelopeTables, FiniteBiPoset, MixedLattice, SublatticeVerdict};
pub use error::{Error, Result};
pub use laws::{LawId, LawReport};
pub use order::{OrderViolation, Relation, ViolationKind};
pub use ratgroup::PosRational;
pub use verdict::Verdict;
