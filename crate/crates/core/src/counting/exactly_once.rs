//! Permutations containing 12-3 exactly once, by the length of their initial run.

use num_bigint::BigInt;
use num_traits::Zero;

use super::special::bell_numbers;
use super::BaseSequences;
use crate::constraint::ConstraintSpec;
use crate::error::{Error, Result};

/// The spec whose counts are `F_n`, permutations with exactly one occurrence of 12-3.
pub fn exactly_once_spec() -> ConstraintSpec {
    ConstraintSpec::new()
        .with_exactly("12-3".parse().expect("valid pattern"), 1)
        .expect("no avoided patterns")
}

/// Count of length-`n` permutations with exactly one 12-3 occurrence that begin
/// with `12...k` and end with `1`, expressed through `F` and Bell numbers.
///
/// `k = 1` gives `F_n`, `k = 2` gives `(n-1) F_{n-2} + (n-2) B_{n-2}`,
/// `k = 3` gives `(n-2) B_{n-3}`, and longer initial runs are impossible.
pub fn exactly_once_identities(n: usize, k: usize, base: &dyn BaseSequences) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::OutOfRange {
            what: "n",
            detail: format!("n = {n}, the identities start at n = 3"),
        });
    }
    if k == 0 {
        return Err(Error::OutOfRange {
            what: "k",
            detail: "window length must be at least 1".to_string(),
        });
    }
    let f = |m: usize| base.base(&exactly_once_spec(), m);
    let bell = bell_numbers(n);
    Ok(match k {
        1 => f(n)?,
        2 => (n - 1) * f(n - 2)? + (n - 2) * &bell[n - 2],
        3 => (n - 2) * &bell[n - 3],
        _ => BigInt::zero(),
    })
}
