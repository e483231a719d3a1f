//! Two-sided counts as binomial convolutions over one-sided base sequences.
//!
//! The base sequences (one monotone window only) come from a
//! [`BaseSequences`] provider, normally the oracle.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::special::binomial;
use super::BaseSequences;
use crate::constraint::{ConstraintSpec, Provenance, SequenceRecord};
use crate::error::{Error, Result};
use crate::perm::Direction::{self, Dec, Inc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyPattern {
    C213,
    C132,
    C123,
    D1_32,
    D21_3,
    D1_23,
    D12_3,
}

impl FamilyPattern {
    pub const ALL: [FamilyPattern; 7] = [
        FamilyPattern::C213,
        FamilyPattern::C132,
        FamilyPattern::C123,
        FamilyPattern::D1_32,
        FamilyPattern::D21_3,
        FamilyPattern::D1_23,
        FamilyPattern::D12_3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyPattern::C213 => "213",
            FamilyPattern::C132 => "132",
            FamilyPattern::C123 => "123",
            FamilyPattern::D1_32 => "1-32",
            FamilyPattern::D21_3 => "21-3",
            FamilyPattern::D1_23 => "1-23",
            FamilyPattern::D12_3 => "12-3",
        }
    }
}

/// An avoided pattern together with the directions of the two windows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoSidedFamily {
    pub pattern: FamilyPattern,
    pub begin: Direction,
    pub end: Direction,
}

impl TwoSidedFamily {
    pub fn new(pattern: FamilyPattern, begin: Direction, end: Direction) -> Result<Self> {
        let f = TwoSidedFamily { pattern, begin, end };
        if Self::registered().contains(&f) {
            Ok(f)
        } else {
            Err(Error::Unknown {
                kind: "recurrence family",
                name: f.to_string(),
            })
        }
    }

    /// Every family with a recurrence.
    pub fn registered() -> Vec<TwoSidedFamily> {
        let mut out = Vec::new();
        for pattern in FamilyPattern::ALL {
            for begin in [Inc, Dec] {
                for end in [Inc, Dec] {
                    if pattern == FamilyPattern::C123 && begin == Inc {
                        continue;
                    }
                    out.push(TwoSidedFamily { pattern, begin, end });
                }
            }
        }
        out
    }

    pub fn spec(&self, k: usize, l: usize) -> ConstraintSpec {
        spec(self.pattern.as_str(), Some((self.begin, k)), Some((self.end, l)))
    }
}

impl fmt::Display for TwoSidedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}/{}", self.pattern.as_str(), self.begin, self.end)
    }
}

impl FromStr for TwoSidedFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::Unknown {
            kind: "recurrence family",
            name: s.to_string(),
        };
        let mut parts = s.split('/');
        let (Some(p), Some(b), Some(e), None) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
            return Err(unknown());
        };
        let pattern = FamilyPattern::ALL
            .into_iter()
            .find(|f| f.as_str() == p)
            .ok_or_else(unknown)?;
        TwoSidedFamily::new(pattern, b.parse()?, e.parse()?)
    }
}

type Window = Option<(Direction, usize)>;

fn spec(pattern: &str, begin: Window, end: Window) -> ConstraintSpec {
    let mut s = ConstraintSpec::avoiding_str(pattern).expect("registered patterns parse");
    if let Some((d, k)) = begin {
        s = s.with_begin(d.window(k)).expect("window is nonempty");
    }
    if let Some((d, l)) = end {
        s = s.with_end(d.window(l)).expect("window is nonempty");
    }
    s
}

/// Values for `n = 0..=n_max` of a registered family at window lengths `k`, `l`.
pub fn recurrence_two_sided(
    family: &TwoSidedFamily,
    k: usize,
    l: usize,
    n_max: usize,
    base: &dyn BaseSequences,
) -> Result<SequenceRecord> {
    if k == 0 || l == 0 {
        return Err(Error::OutOfRange {
            what: "window lengths",
            detail: format!("k = {k}, l = {l}"),
        });
    }
    let mut solver = Solver {
        base,
        memo: HashMap::new(),
    };
    let values = (0..=n_max as i64)
        .map(|n| solver.eval(*family, k as i64, l as i64, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(SequenceRecord {
        name: format!("{family} k={k} l={l}"),
        spec: family.spec(k, l).canonical(),
        provenance: Provenance::Recurrence,
        values,
    })
}

fn ind(b: bool) -> BigInt {
    BigInt::from(b as u8)
}

// Tags for intermediate tables that are not themselves family values.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Key {
    Family(TwoSidedFamily),
    Raw123,
    Raw1_23,
}

struct Solver<'a> {
    base: &'a dyn BaseSequences,
    memo: HashMap<(Key, i64, i64, i64), BigInt>,
}

impl Solver<'_> {
    fn one(&self, pattern: &str, begin: Window, end: Window, n: i64) -> Result<BigInt> {
        if n < 0 {
            return Ok(BigInt::zero());
        }
        self.base.base(&spec(pattern, begin, end), n as usize)
    }

    fn begin(&self, pattern: &str, d: Direction, k: i64, n: i64) -> Result<BigInt> {
        self.one(pattern, Some((d, k as usize)), None, n)
    }

    fn end(&self, pattern: &str, d: Direction, l: i64, n: i64) -> Result<BigInt> {
        self.one(pattern, None, Some((d, l as usize)), n)
    }

    fn eval(&mut self, f: TwoSidedFamily, k: i64, l: i64, n: i64) -> Result<BigInt> {
        if n <= 0 || k <= 0 || l <= 0 {
            return Ok(BigInt::zero());
        }
        let key = (Key::Family(f), k, l, n);
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let v = match f.pattern {
            FamilyPattern::C213 => self.c213(f.begin, f.end, k, l, n)?,
            FamilyPattern::C132 => self.mirror(FamilyPattern::C213, f, k, l, n)?,
            FamilyPattern::C123 => self.c123(f.begin, f.end, k, l, n)?,
            FamilyPattern::D1_32 => self.d1_32(f.begin, f.end, k, l, n)?,
            FamilyPattern::D21_3 => self.mirror(FamilyPattern::D1_32, f, k, l, n)?,
            FamilyPattern::D1_23 => self.d1_23(f.begin, f.end, k, l, n)?,
            FamilyPattern::D12_3 => self.mirror(FamilyPattern::D1_23, f, k, l, n)?,
        };
        self.memo.insert(key, v.clone());
        Ok(v)
    }

    // Reverse-complement fixes monotone windows and swaps begin with end.
    fn mirror(&mut self, image: FamilyPattern, f: TwoSidedFamily, k: i64, l: i64, n: i64) -> Result<BigInt> {
        let g = TwoSidedFamily {
            pattern: image,
            begin: f.end,
            end: f.begin,
        };
        self.eval(g, l, k, n)
    }

    fn fam(
        &mut self,
        pattern: FamilyPattern,
        begin: Direction,
        end: Direction,
        k: i64,
        l: i64,
        n: i64,
    ) -> Result<BigInt> {
        self.eval(TwoSidedFamily { pattern, begin, end }, k, l, n)
    }

    // sum_{i=0}^{m} binom(m, i) a(i) b(m - i)
    fn convolve(
        &mut self,
        m: i64,
        mut a: impl FnMut(&mut Self, i64) -> Result<BigInt>,
        mut b: impl FnMut(&mut Self, i64) -> Result<BigInt>,
    ) -> Result<BigInt> {
        let mut acc = BigInt::zero();
        for i in 0..=m {
            let x = a(self, i)?;
            if x.is_zero() {
                continue;
            }
            acc += binomial(m, i) * x * b(self, m - i)?;
        }
        Ok(acc)
    }

    fn c213(&mut self, b: Direction, e: Direction, k: i64, l: i64, n: i64) -> Result<BigInt> {
        use FamilyPattern::C213 as P;
        if k == 1 {
            return self.end("213", e, l, n);
        }
        if l == 1 {
            return self.begin("213", b, k, n);
        }
        let m = n - 1;
        let tail = |s: &Self, j: i64| s.begin("132", e, l, j);
        let (self_kind, lead) = match b {
            Inc => (Inc, None),
            Dec => (Dec, Some(self.fam(P, Dec, e, k - 1, l, m)?)),
        };
        // Avoiders that begin with the window and end with 12.
        let two = move |s: &mut Self, i: i64| s.fam(P, self_kind, Inc, k, 2, i);
        let conv = self.convolve(m, two, |s, j| tail(s, j))?;
        let v = match (b, e) {
            (Inc, Inc) => {
                binomial(m, k - 1) * tail(self, m - k + 1)?
                    + conv
                    + self.fam(P, Inc, Inc, k, (l - 1).max(2), m)?
                    + ind(n == k && l <= k)
            }
            (Inc, Dec) => {
                binomial(m, k - 1) * tail(self, m - k + 1)?
                    + binomial(m, l - 1) * self.fam(P, Inc, Inc, k, 2, m - l + 1)?
                    + conv
                    + binomial(k + l - 2, k - 1) * ind(m == k + l - 2)
            }
            (Dec, Inc) => lead.unwrap() + conv + self.fam(P, Dec, Inc, k, (l - 1).max(2), m)?,
            (Dec, Dec) => {
                lead.unwrap()
                    + conv
                    + binomial(m, l - 1) * self.fam(P, Dec, Inc, k, 2, m - l + 1)?
                    + ind(n == l && k <= l)
            }
        };
        Ok(v)
    }

    fn c123(&mut self, b: Direction, e: Direction, k: i64, l: i64, n: i64) -> Result<BigInt> {
        use FamilyPattern::C123 as P;
        debug_assert_eq!(b, Dec);
        match e {
            Inc => {
                if l >= 3 {
                    return Ok(BigInt::zero());
                }
                if l == 1 {
                    return self.begin("123", Dec, k, n);
                }
                if k == 1 {
                    return self.end("123", Inc, l, n);
                }
                let m = n - 1;
                let conv = self.convolve(m, |s, i| s.begin("123", Dec, k, i), |s, j| s.fam(P, Dec, Inc, 2, 2, j))?;
                Ok(conv
                    + m * self.begin("123", Dec, k, m - 1)?
                    + binomial(m, k - 1) * self.fam(P, Dec, Inc, 2, 2, m - k + 1)?
                    + k * ind(m == k))
            }
            Dec => {
                if k == 1 {
                    return self.end("123", Dec, l, n);
                }
                if l == 1 {
                    return self.begin("123", Dec, k, n);
                }
                if l == 2 {
                    return Ok(self.begin("123", Dec, k, n)? - self.fam(P, Dec, Inc, k, 2, n)?);
                }
                let overlap = ind(k.max(l) <= n && n <= k + l - 2);
                Ok(self.raw123(k, l, n)? + overlap)
            }
        }
    }

    // Dec/dec contiguous-123 recursion without the overlap term.
    fn raw123(&mut self, k: i64, l: i64, n: i64) -> Result<BigInt> {
        use FamilyPattern::C123 as P;
        if n <= 0 {
            return Ok(BigInt::zero());
        }
        if k == 1 {
            return self.begin("123", Dec, l, n);
        }
        let key = (Key::Raw123, k, l, n);
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let m = n - 1;
        let v = self.raw123(k - 1, l, m)?
            + self.convolve(m, |s, i| s.fam(P, Dec, Dec, k, 2, i), |s, j| s.begin("123", Dec, l, j))?
            + binomial(m, l - 1) * self.fam(P, Dec, Dec, k, 2, m - l + 1)?;
        self.memo.insert(key, v.clone());
        Ok(v)
    }

    fn d1_32(&mut self, b: Direction, e: Direction, k: i64, l: i64, n: i64) -> Result<BigInt> {
        if l == 1 {
            return self.begin("1-32", b, k, n);
        }
        let v = match (b, e) {
            (_, Inc) => {
                let mut acc = BigInt::zero();
                for i in l..=n - k {
                    acc += binomial(n - 1, i - 1) * self.begin("1-32", b, k, n - i)?;
                }
                acc + match b {
                    Inc => ind(n >= k.max(l)),
                    Dec => binomial(n - 1, k - 1) * ind(n >= k + l - 1),
                }
            }
            (Inc, Dec) => self.begin("1-32", Inc, k, n - l + 1)?,
            (Dec, Dec) => self.begin("1-32", Dec, k, n - l + 1)? + ind(k.max(l) <= n && n <= k + l - 2),
        };
        Ok(v)
    }

    fn d1_23(&mut self, b: Direction, e: Direction, k: i64, l: i64, n: i64) -> Result<BigInt> {
        use FamilyPattern::D1_23 as P;
        const PAT: &str = "1-23";
        let v = match (b, e) {
            (Inc, Inc) => match (k, l) {
                _ if k >= 3 || l >= 3 => BigInt::zero(),
                (_, 1) => self.begin(PAT, Inc, k, n)?,
                (1, _) => self.end(PAT, Inc, l, n)?,
                _ => {
                    let m = n - 1;
                    m * self.begin(PAT, Inc, 2, m - 1)? + ind(m == 1)
                }
            },
            (Inc, Dec) => match (k, l) {
                _ if k >= 3 => BigInt::zero(),
                (1, _) => self.end(PAT, Dec, l, n)?,
                (_, 1) => self.begin(PAT, Inc, 2, n)?,
                _ if n <= l => BigInt::zero(),
                _ => {
                    let mut acc = 1 + self.fam(P, Inc, Dec, 2, l - 1, n - 1)?;
                    for j in l + 1..=n - 2 {
                        acc += binomial(n - 1, j - 1) * self.begin(PAT, Inc, 2, n - j)?;
                    }
                    acc
                }
            },
            (Dec, Inc) => match (k, l) {
                _ if l >= 3 => BigInt::zero(),
                (_, 1) => self.begin(PAT, Dec, k, n)?,
                (1, _) => self.end(PAT, Inc, 2, n)?,
                _ => {
                    let m = n - 1;
                    m * self.begin(PAT, Dec, k, m - 1)? + m * ind(m == k)
                }
            },
            (Dec, Dec) => match (k, l) {
                (1, _) => self.end(PAT, Dec, l, n)?,
                (_, 1) => self.begin(PAT, Dec, k, n)?,
                _ => self.raw1_23(k, l, n)? + ind(k.max(l) <= n && n <= k + l - 2),
            },
        };
        Ok(v)
    }

    // Dec/dec 1-23 recursion without the overlap term.
    fn raw1_23(&mut self, k: i64, l: i64, n: i64) -> Result<BigInt> {
        if n <= 0 {
            return Ok(BigInt::zero());
        }
        if l == 1 {
            return self.begin("1-23", Dec, k, n);
        }
        let key = (Key::Raw1_23, k, l, n);
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        let mut v = self.raw1_23(k, l - 1, n - 1)?;
        for i in l + 1..=n - k {
            v += binomial(n - 1, i - 1) * self.begin("1-23", Dec, k, n - i)?;
        }
        v += binomial(n - 1, k - 1) * ind(n - k >= l);
        self.memo.insert(key, v.clone());
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_and_names() {
        assert_eq!(TwoSidedFamily::registered().len(), 26);
        let f: TwoSidedFamily = "1-32/inc/dec".parse().unwrap();
        assert_eq!(f.to_string(), "1-32/inc/dec");
        assert!("123/inc/inc".parse::<TwoSidedFamily>().is_err());
        assert!("1-3-2/inc/inc".parse::<TwoSidedFamily>().is_err());
    }
}
