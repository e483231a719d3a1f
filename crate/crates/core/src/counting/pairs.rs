//! Avoidance of two contiguous 3-letter patterns, by first-letter refinement.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::constraint::{ConstraintSpec, Provenance, SequenceRecord};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairId {
    P123_231,
    P132_213,
    P132_312,
    /// Reverse of 132&312, served from the same table.
    P213_231,
}

impl PairId {
    pub const ALL: [PairId; 4] = [PairId::P123_231, PairId::P132_213, PairId::P132_312, PairId::P213_231];

    pub fn patterns(self) -> (&'static str, &'static str) {
        match self {
            PairId::P123_231 => ("123", "231"),
            PairId::P132_213 => ("132", "213"),
            PairId::P132_312 => ("132", "312"),
            PairId::P213_231 => ("213", "231"),
        }
    }

    pub fn spec(self) -> ConstraintSpec {
        let (a, b) = self.patterns();
        ConstraintSpec::avoiding_str(&format!("{a},{b}")).expect("registered patterns parse")
    }

    /// Matches an unordered pair of contiguous patterns.
    pub fn from_patterns(a: &str, b: &str) -> Option<PairId> {
        PairId::ALL.into_iter().find(|id| {
            let (x, y) = id.patterns();
            (a, b) == (x, y) || (a, b) == (y, x)
        })
    }
}

impl fmt::Display for PairId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.patterns();
        write!(f, "{a}&{b}")
    }
}

impl FromStr for PairId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_once('&')
            .and_then(|(a, b)| PairId::from_patterns(a.trim(), b.trim()))
            .ok_or_else(|| Error::Unknown {
                kind: "pair",
                name: s.to_string(),
            })
    }
}

/// The published values for `n = 0..=10`.
pub const PUBLISHED_TABLES: [(PairId, [u64; 11]); 3] = [
    (PairId::P123_231, [1, 1, 2, 4, 11, 39, 161, 784, 4368, 27260, 189540]),
    (PairId::P132_213, [1, 1, 2, 4, 11, 37, 149, 705, 3814, 23199, 156940]),
    (PairId::P132_312, [1, 1, 2, 4, 10, 30, 108, 454, 2186, 11840, 71254]),
];

pub fn pair_avoidance(pair: PairId, n_max: usize) -> SequenceRecord {
    let values = match pair {
        PairId::P123_231 => first_letter_table(n_max),
        PairId::P132_213 => two_letter_table(n_max, Rule::P132_213),
        PairId::P132_312 | PairId::P213_231 => two_letter_table(n_max, Rule::P132_312),
    };
    SequenceRecord {
        name: format!("avoid {pair}"),
        spec: pair.spec().canonical(),
        provenance: Provenance::Recurrence,
        values,
    }
}

// s[n][i]: avoiders of 123 and 231 of length n that start with i.
fn first_letter_table(n_max: usize) -> Vec<BigInt> {
    let mut totals = vec![BigInt::one(), BigInt::one(), BigInt::from(2), BigInt::from(4)];
    let mut rows: Vec<Vec<BigInt>> = vec![
        vec![],
        vec![0.into(), 1.into()],
        vec![0.into(), 1.into(), 1.into()],
        vec![0.into(), 1.into(), 1.into(), 2.into()],
    ];
    for n in 4..=n_max {
        let mut row = vec![BigInt::zero(); n + 1];
        for i in 1..n {
            let low: BigInt = (1..i).map(|j| &rows[n - 1][j]).sum();
            let high: BigInt = (i..=n - 2).map(|j| &rows[n - 2][j] * (n - 1 - j)).sum();
            row[i] = low + high;
        }
        row[n] = totals[n - 1].clone();
        totals.push(row.iter().sum());
        rows.push(row);
    }
    totals.truncate(n_max + 1);
    totals
}

#[derive(Clone, Copy)]
enum Rule {
    P132_213,
    P132_312,
}

// t[i][j]: avoiders of length n starting with the letters i, j. Zero on the diagonal.
fn two_letter_table(n_max: usize, rule: Rule) -> Vec<BigInt> {
    let mut totals = vec![BigInt::one(), BigInt::one(), BigInt::from(2)];
    let mut prev = vec![vec![BigInt::zero(); 3]; 3];
    prev[1][2] = BigInt::one();
    prev[2][1] = BigInt::one();
    for n in 3..=n_max {
        let mut t = vec![vec![BigInt::zero(); n + 1]; n + 1];
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                t[i][j] = if i > j {
                    match rule {
                        Rule::P132_213 => (1..i).map(|k| &prev[j][k]).sum(),
                        Rule::P132_312 => (1..j).chain(i..n).map(|k| &prev[j][k]).sum(),
                    }
                } else {
                    (1..i).chain(j..n).map(|k| &prev[j - 1][k]).sum()
                };
            }
        }
        totals.push(t.iter().flatten().sum());
        prev = t;
    }
    totals.truncate(n_max + 1);
    totals
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vals(id: PairId) -> Vec<u64> {
        pair_avoidance(id, 10)
            .values
            .iter()
            .map(|v| v.try_into().unwrap())
            .collect()
    }

    #[test]
    fn tables() {
        for (id, table) in PUBLISHED_TABLES {
            assert_eq!(vals(id), table);
        }
        assert_eq!(vals(PairId::P213_231), vals(PairId::P132_312));
    }

    #[test]
    fn short_requests() {
        assert_eq!(pair_avoidance(PairId::P132_213, 1).values.len(), 2);
        assert_eq!("231&123".parse::<PairId>().unwrap(), PairId::P123_231);
        assert!("123&132".parse::<PairId>().is_err());
    }
}
