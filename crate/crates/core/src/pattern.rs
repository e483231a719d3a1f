use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{Permutation, Symmetry};

/// A permutation pattern where each gap between neighbouring letters is either a
/// dash (letters may be far apart in an occurrence) or absent (letters must be adjacent).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneralizedPattern {
    letters: Permutation,
    adjacent: Vec<bool>,
}

pub const MAX_PATTERN_LEN: usize = 9;

impl GeneralizedPattern {
    pub fn new(letters: Permutation, adjacent: Vec<bool>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::Empty("pattern"));
        }
        if adjacent.len() + 1 != letters.len() {
            return Err(Error::OutOfRange {
                what: "adjacency flags",
                detail: format!("{} flags for {} letters", adjacent.len(), letters.len()),
            });
        }
        Ok(GeneralizedPattern { letters, adjacent })
    }

    /// Every gap is a dash.
    pub fn classical(letters: Permutation) -> Result<Self> {
        let gaps = letters.len().saturating_sub(1);
        Self::new(letters, vec![false; gaps])
    }

    /// No gap is a dash: occurrences are factors of the permutation.
    pub fn contiguous(letters: Permutation) -> Result<Self> {
        let gaps = letters.len().saturating_sub(1);
        Self::new(letters, vec![true; gaps])
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn letters(&self) -> &Permutation {
        &self.letters
    }

    pub fn adjacent(&self) -> &[bool] {
        &self.adjacent
    }

    pub fn is_classical(&self) -> bool {
        self.adjacent.iter().all(|a| !a)
    }

    pub fn is_contiguous(&self) -> bool {
        self.adjacent.iter().all(|&a| a)
    }

    pub fn occurrences(&self, pi: &Permutation) -> u64 {
        self.count_in(pi.letters())
    }

    pub fn avoids(&self, pi: &Permutation) -> bool {
        let w = pi.letters();
        (0..w.len()).all(|e| self.count_ending_at(&w[..=e], 1) == 0)
    }

    /// Number of occurrences in an arbitrary word of distinct comparable letters.
    pub fn count_in<T: Ord>(&self, word: &[T]) -> u64 {
        (0..word.len())
            .map(|e| self.count_ending_at(&word[..=e], u64::MAX))
            .sum()
    }

    /// Occurrences whose last index is the last position of `word`, counting
    /// stops early once `limit` is reached.
    pub fn count_ending_at<T: Ord>(&self, word: &[T], limit: u64) -> u64 {
        let m = self.len();
        if word.len() < m {
            return 0;
        }
        let mut idx = [0usize; MAX_PATTERN_LEN];
        idx[m - 1] = word.len() - 1;
        let mut found = 0;
        self.fill(word, m - 1, &mut idx, &mut found, limit);
        found
    }

    // Chooses positions right to left; `j` is the most recently fixed pattern slot.
    fn fill<T: Ord>(&self, word: &[T], j: usize, idx: &mut [usize], found: &mut u64, limit: u64) {
        if j == 0 {
            *found += 1;
            return;
        }
        let slot = j - 1;
        let pat = self.letters.letters();
        let ok = |i: usize, idx: &[usize]| (j..self.len()).all(|t| (pat[slot] < pat[t]) == (word[i] < word[idx[t]]));
        if self.adjacent[slot] {
            let i = idx[j] - 1;
            if i >= slot && ok(i, idx) {
                idx[slot] = i;
                self.fill(word, slot, idx, found, limit);
            }
        } else {
            for i in (slot..idx[j]).rev() {
                if *found >= limit {
                    return;
                }
                if ok(i, idx) {
                    idx[slot] = i;
                    self.fill(word, slot, idx, found, limit);
                }
            }
        }
    }
}

impl Symmetry for GeneralizedPattern {
    fn reverse(&self) -> Self {
        let mut adjacent = self.adjacent.clone();
        adjacent.reverse();
        GeneralizedPattern {
            letters: self.letters.reverse(),
            adjacent,
        }
    }

    fn complement(&self) -> Self {
        GeneralizedPattern {
            letters: self.letters.complement(),
            adjacent: self.adjacent.clone(),
        }
    }
}

impl fmt::Display for GeneralizedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.letters.letters().iter().enumerate() {
            if i > 0 && !self.adjacent[i - 1] {
                f.write_str("-")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for GeneralizedPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |position: usize, reason: &str| Error::Parse {
            what: "pattern",
            input: s.to_string(),
            position,
            reason: reason.to_string(),
        };
        let mut digits: Vec<(usize, u32)> = Vec::new();
        let mut adjacent = Vec::new();
        let mut dash_pending = false;
        for (i, c) in s.char_indices() {
            match c {
                '-' => {
                    if digits.is_empty() || dash_pending {
                        return Err(err(i, "dash must sit between two digits"));
                    }
                    dash_pending = true;
                }
                '1'..='9' => {
                    if !digits.is_empty() {
                        adjacent.push(!dash_pending);
                    }
                    dash_pending = false;
                    digits.push((i, c as u32 - '0' as u32));
                }
                _ => return Err(err(i, "expected a digit 1-9 or a dash")),
            }
        }
        if digits.is_empty() {
            return Err(err(0, "empty pattern"));
        }
        if dash_pending {
            return Err(err(s.len() - 1, "trailing dash"));
        }
        let m = digits.len();
        if m > MAX_PATTERN_LEN {
            return Err(err(digits[MAX_PATTERN_LEN].0, "patterns have at most 9 letters"));
        }
        let mut seen = [false; MAX_PATTERN_LEN + 1];
        for &(pos, d) in &digits {
            if d as usize > m {
                return Err(err(pos, "digit larger than the pattern length"));
            }
            if seen[d as usize] {
                return Err(err(pos, "repeated digit"));
            }
            seen[d as usize] = true;
        }
        let letters = Permutation::new(digits.iter().map(|&(_, d)| d).collect())?;
        GeneralizedPattern::new(letters, adjacent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> GeneralizedPattern {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn parse_flags() {
        assert_eq!(pat("1-3-2").adjacent(), &[false, false]);
        assert_eq!(pat("2-31").adjacent(), &[false, true]);
        assert_eq!(pat("123").adjacent(), &[true, true]);
        assert_eq!(pat("2-31").letters(), &perm("231"));
        for s in ["1-3-2", "2-31", "123", "12-3", "1"] {
            assert_eq!(pat(s).to_string(), s);
        }
    }

    #[test]
    fn parse_errors_name_the_position() {
        let position = |s: &str| match s.parse::<GeneralizedPattern>() {
            Err(Error::Parse { position, .. }) => position,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(position("-12"), 0);
        assert_eq!(position("1--2"), 2);
        assert_eq!(position("12-"), 2);
        assert_eq!(position("121"), 2);
        assert_eq!(position("13"), 1);
        assert_eq!(position("1x2"), 1);
        assert_eq!(position(""), 0);
    }

    #[test]
    fn occurrence_examples() {
        assert_eq!(pat("2-31").occurrences(&perm("516423")), 1);
        assert_eq!(pat("2-3-1").occurrences(&perm("516423")), 3);
        assert_eq!(pat("123").occurrences(&perm("123456")), 4);
        assert!(pat("1-3-2").avoids(&perm("21")));
        assert!(!pat("123").avoids(&perm("123")));
        assert_eq!(pat("1").occurrences(&perm("3142")), 4);
        assert_eq!(pat("1-2").occurrences(&perm("3142")), 3);
    }

    #[test]
    fn reverse_complement_of_dashed_pattern() {
        assert_eq!(pat("12-3").reverse_complement(), pat("1-23"));
        assert_eq!(pat("132").reverse_complement(), pat("213"));
        assert_eq!(pat("1-32").reverse_complement(), pat("21-3"));
        assert_eq!(pat("2-13").reverse_complement(), pat("13-2"));
    }
}
