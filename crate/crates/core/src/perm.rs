use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `1..=n` in one-line notation. The empty permutation is allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    letters: Vec<u32>,
}

/// Direction of a monotone window `12...k` or `k...21`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Inc,
    Dec,
}

impl Direction {
    pub fn window(self, k: usize) -> Permutation {
        match self {
            Direction::Inc => Permutation::increasing(k),
            Direction::Dec => Permutation::decreasing(k),
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Direction::Inc => Direction::Dec,
            Direction::Dec => Direction::Inc,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Inc => "inc",
            Direction::Dec => "dec",
        })
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inc" => Ok(Direction::Inc),
            "dec" => Ok(Direction::Dec),
            _ => Err(Error::Unknown {
                kind: "direction",
                name: s.to_string(),
            }),
        }
    }
}

/// The trivial bijections on permutations and patterns.
pub trait Symmetry: Sized {
    fn reverse(&self) -> Self;
    fn complement(&self) -> Self;
    fn reverse_complement(&self) -> Self {
        self.reverse().complement()
    }
}

impl Permutation {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let n = letters.len();
        let mut seen = vec![false; n + 1];
        for &a in &letters {
            let a = a as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::NotAPermutation { letters, len: n });
            }
            seen[a] = true;
        }
        Ok(Permutation { letters })
    }

    pub fn empty() -> Self {
        Permutation { letters: Vec::new() }
    }

    /// `12...k`
    pub fn increasing(k: usize) -> Self {
        Permutation {
            letters: (1..=k as u32).collect(),
        }
    }

    /// `k...21`
    pub fn decreasing(k: usize) -> Self {
        Permutation {
            letters: (1..=k as u32).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn is_increasing(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_decreasing(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] > w[1])
    }

    /// Direction and length if this is `12...k` or `k...21`. Length one reads as increasing.
    pub fn as_monotone(&self) -> Option<(Direction, usize)> {
        if self.is_empty() {
            None
        } else if self.is_increasing() {
            Some((Direction::Inc, self.len()))
        } else if self.is_decreasing() {
            Some((Direction::Dec, self.len()))
        } else {
            None
        }
    }

    /// True iff the first `|q|` letters are order-isomorphic to `q`.
    pub fn begins_with(&self, q: &Permutation) -> Result<bool> {
        if q.is_empty() {
            return Err(Error::Empty("begin pattern"));
        }
        Ok(self.len() >= q.len() && order_isomorphic(&self.letters[..q.len()], &q.letters))
    }

    /// True iff the last `|r|` letters are order-isomorphic to `r`.
    pub fn ends_with(&self, r: &Permutation) -> Result<bool> {
        if r.is_empty() {
            return Err(Error::Empty("end pattern"));
        }
        let n = self.len();
        Ok(n >= r.len() && order_isomorphic(&self.letters[n - r.len()..], &r.letters))
    }

    /// All permutations of length `n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some((1..=n as u32).collect::<Vec<_>>());
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut succ = cur.clone();
            if next_permutation(&mut succ) {
                next = Some(succ);
            }
            Some(Permutation { letters: cur })
        })
    }
}

fn next_permutation(a: &mut [u32]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// True iff `a` and `b` have the same length and the same relative order.
pub fn order_isomorphic<T: Ord, U: Ord>(a: &[T], b: &[U]) -> bool {
    a.len() == b.len() && (0..a.len()).all(|i| (i + 1..a.len()).all(|j| (a[i] < a[j]) == (b[i] < b[j])))
}

impl Symmetry for Permutation {
    fn reverse(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        Permutation { letters }
    }

    fn complement(&self) -> Self {
        let n = self.len() as u32 + 1;
        Permutation {
            letters: self.letters.iter().map(|&a| n - a).collect(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for a in &self.letters {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|a| a.to_string()).collect();
            f.write_str(&parts.join(" "))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts a digit string (`13254`) or integers separated by spaces or commas.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_err = |position: usize, reason: &str| Error::Parse {
            what: "permutation",
            input: s.to_string(),
            position,
            reason: reason.to_string(),
        };
        let letters: Vec<u32> = if s.contains([' ', ',']) {
            let mut out = Vec::new();
            let mut offset = 0;
            for tok in s.split([' ', ',']) {
                if !tok.is_empty() {
                    out.push(tok.parse().map_err(|_| parse_err(offset, "expected an integer"))?);
                }
                offset += tok.len() + 1;
            }
            out
        } else {
            s.chars()
                .enumerate()
                .map(|(i, c)| c.to_digit(10).ok_or_else(|| parse_err(i, "expected a digit")))
                .collect::<Result<_>>()?
        };
        Permutation::new(letters).map_err(|_| parse_err(0, "letters are not exactly 1..n"))
    }
}
