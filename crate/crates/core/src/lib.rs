//! Generalized permutation-pattern avoidance with begin and end constraints.
//!
//! [`oracle`] counts by exhaustive search. [`counting`] holds recurrences and
//! closed forms, [`series`] the generating functions. [`verify`] checks both
//! against the oracle.

pub mod constraint;
pub mod counting;
pub mod engine;
pub mod error;
pub mod oracle;
pub mod pattern;
pub mod perm;
pub mod series;
pub mod verify;

pub use constraint::{ConstraintSpec, Provenance, SequenceRecord};
pub use engine::{Dispatcher, Engine};
pub use error::{Error, Result};
pub use oracle::{Oracle, Schedule};
pub use pattern::GeneralizedPattern;
pub use perm::{Direction, Permutation, Symmetry};
