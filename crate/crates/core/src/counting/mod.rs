//! Recurrences and closed-form counts, all in exact integer arithmetic.

pub mod classical123;
pub mod exactly_once;
pub mod pairs;
pub mod recurrences;
pub mod special;

use num_bigint::BigInt;

use crate::constraint::ConstraintSpec;
use crate::error::Result;
use crate::oracle::Oracle;

pub use classical123::{count_123_one_sided, count_123_two_sided, g_aux, h_aux, s_first_letter};
pub use exactly_once::exactly_once_identities;
pub use pairs::{pair_avoidance, PairId, PUBLISHED_TABLES};
pub use recurrences::{recurrence_two_sided, FamilyPattern, TwoSidedFamily};
pub use special::{bell, binomial, catalan, special_number, Special};

/// Supplies the one-sided sequences that the recurrences are built on.
pub trait BaseSequences: Sync {
    fn base(&self, spec: &ConstraintSpec, n: usize) -> Result<BigInt>;
}

impl BaseSequences for Oracle {
    fn base(&self, spec: &ConstraintSpec, n: usize) -> Result<BigInt> {
        self.count(spec, n)
    }
}
