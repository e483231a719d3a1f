//! Ordinary generating functions built from the Catalan series, in exact
//! rational arithmetic.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Coefficient, RationalSeries};
use crate::constraint::ConstraintSpec;
use crate::counting::binomial;
use crate::counting::special::catalan_numbers;
use crate::error::{Error, Result};
use crate::perm::Direction::{self, Dec, Inc};

pub const OGF_DEFAULT_ORDER: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OgfPattern {
    P1_3_2,
    P2_1_3,
    P2_13,
    P13_2,
    P1_2_3,
    P12_3,
}

impl OgfPattern {
    pub const ALL: [OgfPattern; 6] = [
        OgfPattern::P1_3_2,
        OgfPattern::P2_1_3,
        OgfPattern::P2_13,
        OgfPattern::P13_2,
        OgfPattern::P1_2_3,
        OgfPattern::P12_3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            OgfPattern::P1_3_2 => "1-3-2",
            OgfPattern::P2_1_3 => "2-1-3",
            OgfPattern::P2_13 => "2-13",
            OgfPattern::P13_2 => "13-2",
            OgfPattern::P1_2_3 => "1-2-3",
            OgfPattern::P12_3 => "12-3",
        }
    }

    /// 2-13 has the same avoiders as 2-1-3, and 13-2 the same as 1-3-2.
    fn classical(self) -> OgfPattern {
        match self {
            OgfPattern::P2_13 => OgfPattern::P2_1_3,
            OgfPattern::P13_2 => OgfPattern::P1_3_2,
            p => p,
        }
    }
}

/// An avoided pattern with a begin window and an optional end window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OgfFamily {
    pub pattern: OgfPattern,
    pub begin: Direction,
    pub end: Option<Direction>,
}

impl OgfFamily {
    /// Window lengths are `k` for the begin window and `l` for the end window;
    /// `l` is ignored by one-sided families.
    pub fn spec(&self, k: usize, l: usize) -> ConstraintSpec {
        let mut s = ConstraintSpec::avoiding_str(self.pattern.as_str())
            .expect("registered patterns parse")
            .with_begin(self.begin.window(k))
            .expect("window is nonempty");
        if let Some(e) = self.end {
            s = s.with_end(e.window(l)).expect("window is nonempty");
        }
        s
    }

    pub fn is_two_sided(&self) -> bool {
        self.end.is_some()
    }
}

impl fmt::Display for OgfFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.pattern.as_str(), self.begin)?;
        if let Some(e) = self.end {
            write!(f, "/{e}")?;
        }
        Ok(())
    }
}

impl FromStr for OgfFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::Unknown {
            kind: "OGF family",
            name: s.to_string(),
        };
        let parts: Vec<&str> = s.split('/').collect();
        if !(2..=3).contains(&parts.len()) {
            return Err(unknown());
        }
        let pattern = OgfPattern::ALL
            .into_iter()
            .find(|p| p.as_str() == parts[0])
            .ok_or_else(unknown)?;
        let begin = parts[1].parse()?;
        let end = parts.get(2).map(|e| e.parse()).transpose()?;
        let f = OgfFamily { pattern, begin, end };
        if ogf_families().contains(&f) {
            Ok(f)
        } else {
            Err(unknown())
        }
    }
}

/// Every family with an OGF.
pub fn ogf_families() -> Vec<OgfFamily> {
    let mut out = Vec::new();
    let catalan_like = [
        OgfPattern::P1_3_2,
        OgfPattern::P2_1_3,
        OgfPattern::P2_13,
        OgfPattern::P13_2,
    ];
    for pattern in catalan_like {
        for begin in [Inc, Dec] {
            out.push(OgfFamily {
                pattern,
                begin,
                end: None,
            });
        }
    }
    for pattern in [OgfPattern::P1_2_3, OgfPattern::P12_3] {
        out.push(OgfFamily {
            pattern,
            begin: Inc,
            end: None,
        });
    }
    for pattern in catalan_like {
        for begin in [Inc, Dec] {
            for end in [Inc, Dec] {
                out.push(OgfFamily {
                    pattern,
                    begin,
                    end: Some(end),
                });
            }
        }
    }
    out
}

/// Families whose per-window OGFs are also coefficients of one trivariate series.
pub fn trivariate_families() -> Vec<OgfFamily> {
    ogf_families()
        .into_iter()
        .filter(|f| {
            matches!(
                (f.pattern.classical(), f.begin, f.end),
                (OgfPattern::P1_3_2, Dec, Some(Inc)) | (OgfPattern::P2_1_3, Inc, Some(Dec))
            )
        })
        .collect()
}

fn q(v: i64) -> BigRational {
    BigRational::from_i64(v)
}

/// `sum_n C_n x^n`
pub fn catalan_series(order: usize) -> RationalSeries {
    let c = catalan_numbers(order);
    RationalSeries::from_fn(order, |n| BigRational::from_integer(c[n].clone()))
}

/// `sum_{n=m}^{k+l-2} x^n`, the monotone permutations both windows fit.
fn overlap(k: usize, l: usize, order: usize) -> RationalSeries {
    let m = k.max(l);
    RationalSeries::from_fn(order, |n| q((m <= n && n + 2 <= k + l) as i64))
}

/// Counts of 12-3 avoiders beginning with `12...k`, from the rational sums
/// over the number of left-to-right blocks.
pub fn bell_rational_sum(k: usize, order: usize) -> RationalSeries {
    if !(1..=2).contains(&k) {
        return RationalSeries::zero(order);
    }
    let mut total = vec![BigInt::zero(); order];
    let geometric = |s: &mut Vec<BigInt>, j: usize| {
        for n in 1..s.len() {
            let prev = s[n - 1].clone();
            s[n] += prev * j;
        }
    };
    for d in 0..order {
        // x^d / prod_{i=1}^{d} (1 - i x)
        let mut s = vec![BigInt::zero(); order];
        s[d] = BigInt::from(1);
        for i in 1..=d {
            geometric(&mut s, i);
        }
        let term = if k == 1 {
            s
        } else {
            let mut acc = vec![BigInt::zero(); order];
            for j in 0..=d {
                let mut t = s.clone();
                geometric(&mut t, j);
                for (a, b) in acc.iter_mut().zip(t) {
                    *a += b;
                }
            }
            let mut shifted = vec![BigInt::zero(); order];
            for (s, a) in shifted.iter_mut().skip(2).zip(&acc) {
                *s = a.clone();
            }
            shifted
        };
        for (a, b) in total.iter_mut().zip(term) {
            *a += b;
        }
    }
    if k == 1 && order > 0 {
        total[0] -= 1;
    }
    RationalSeries::from_fn(order, |n| BigRational::from_integer(total[n].clone()))
}

fn require_window(k: usize, name: &'static str) -> Result<()> {
    if k == 0 {
        Err(Error::OutOfRange {
            what: name,
            detail: "window length must be at least 1".to_string(),
        })
    } else {
        Ok(())
    }
}

struct Catalan {
    c: RationalSeries,
    powers: Vec<RationalSeries>,
    dec_inc: HashMap<(i64, i64), RationalSeries>,
}

impl Catalan {
    fn new(order: usize) -> Self {
        let c = catalan_series(order);
        Catalan {
            powers: vec![RationalSeries::one(order)],
            c,
            dec_inc: HashMap::new(),
        }
    }

    fn order(&self) -> usize {
        self.c.order()
    }

    fn pow(&mut self, e: usize) -> RationalSeries {
        while self.powers.len() <= e {
            let next = self.powers.last().expect("seeded") * &self.c;
            self.powers.push(next);
        }
        self.powers[e].clone()
    }

    /// 1-3-2 avoiders beginning `k...1` and ending `1...l`.
    fn dec_inc(&mut self, k: i64, l: i64) -> RationalSeries {
        if k < 0 || l < 0 {
            return RationalSeries::zero(self.order());
        }
        if let Some(s) = self.dec_inc.get(&(k, l)) {
            return s.clone();
        }
        let mut r = self.pow((k + l + 2) as usize).shift((k + l + 1) as usize);
        r = r + self.dec_inc(k - 1, l).shift(1) + self.dec_inc(k, l - 1).shift(1);
        if matches!((k, l), (1, 0) | (0, 1) | (1, 1)) {
            r = r + RationalSeries::x(self.order());
        }
        self.dec_inc.insert((k, l), r.clone());
        r
    }
}

/// The OGF of `family` at window lengths `k` and `l`, to the given order.
pub fn ogf_formula(family: &OgfFamily, k: usize, l: usize, order: usize) -> Result<RationalSeries> {
    require_window(k, "k")?;
    let not_registered = || Error::NotRegistered(format!("OGF {family}"));
    let mut cat = Catalan::new(order);
    let Some(end) = family.end else {
        return match (family.pattern.classical(), family.begin) {
            (OgfPattern::P1_3_2, Inc) | (OgfPattern::P2_1_3, Dec) => Ok(cat.pow(2).shift(k)),
            (OgfPattern::P1_3_2, Dec) | (OgfPattern::P2_1_3, Inc) => Ok(cat.pow(k + 1).shift(k)),
            (OgfPattern::P1_2_3, Inc) if k <= 2 => Ok(cat.pow(2).shift(k)),
            (OgfPattern::P1_2_3, Inc) => Ok(RationalSeries::zero(order)),
            (OgfPattern::P12_3, Inc) => Ok(bell_rational_sum(k, order)),
            _ => Err(not_registered()),
        };
    };
    require_window(l, "l")?;
    let s = k + l - 1;
    let (ki, li) = (k as i64, l as i64);
    let poly = overlap(k, l, order);
    match (family.pattern.classical(), family.begin, end) {
        (OgfPattern::P1_3_2, Inc, Inc) => Ok(cat.pow(l + 1).shift(s) + poly),
        (OgfPattern::P1_3_2, Inc, Dec) => Ok(cat.pow(2).shift(s)),
        (OgfPattern::P1_3_2, Dec, Dec) => Ok(cat.pow(k + 1).shift(s) + poly),
        (OgfPattern::P1_3_2, Dec, Inc) => Ok(cat.dec_inc(ki, li)),
        (OgfPattern::P2_1_3, Inc, Inc) => Ok(cat.pow(k + 1).shift(s) + poly),
        (OgfPattern::P2_1_3, Dec, Inc) => Ok(cat.pow(2).shift(s)),
        (OgfPattern::P2_1_3, Dec, Dec) => Ok(cat.pow(l + 1).shift(s) + poly),
        (OgfPattern::P2_1_3, Inc, Dec) => Ok(cat.dec_inc(li, ki)),
        _ => Err(not_registered()),
    }
}

/// Coefficient of `y^k z^l` in the trivariate series of a dec/inc 1-3-2
/// family (or its inc/dec 2-1-3 mirror, with `k` and `l` swapped).
pub fn trivariate_coeff(family: &OgfFamily, k: usize, l: usize, order: usize) -> Result<RationalSeries> {
    let (k, l) = match (family.pattern.classical(), family.begin, family.end) {
        (OgfPattern::P1_3_2, Dec, Some(Inc)) => (k, l),
        (OgfPattern::P2_1_3, Inc, Some(Dec)) => (l, k),
        _ => return Err(Error::NotRegistered(format!("trivariate OGF {family}"))),
    };
    let c = catalan_series(order);
    let c_minus_1 = c.add_constant(q(-1));
    let xc = c.shift(1);
    let mut xc_pow = vec![RationalSeries::one(order)];
    for _ in 0..k + l {
        let next = xc_pow.last().expect("seeded") * &xc;
        xc_pow.push(next);
    }
    let inner = |i: usize, j: usize| {
        let mut s = &c_minus_1 * &xc_pow[i + j];
        if matches!((i, j), (1, 0) | (0, 1) | (1, 1)) {
            s = s + RationalSeries::x(order);
        }
        s
    };
    let mut total = RationalSeries::zero(order);
    for a in 0..=k {
        for b in 0..=l {
            let w = BigRational::from_integer(binomial((a + b) as i64, a as i64));
            total = total + inner(k - a, l - b).shift(a + b).scale(&w);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &RationalSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_integer().try_into().unwrap()).collect()
    }

    #[test]
    fn catalan_numbers_appear() {
        assert_eq!(ints(&catalan_series(8)), vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn bell_sums() {
        assert_eq!(ints(&bell_rational_sum(1, 8)), vec![0, 1, 2, 5, 15, 52, 203, 877]);
        // (n-1) B_{n-2}
        assert_eq!(ints(&bell_rational_sum(2, 8)), vec![0, 0, 1, 2, 6, 20, 75, 312]);
        assert_eq!(ints(&bell_rational_sum(3, 8)), vec![0; 8]);
    }

    #[test]
    fn dec_inc_base_is_catalan_minus_one() {
        let mut cat = Catalan::new(8);
        assert_eq!(cat.dec_inc(0, 0), catalan_series(8).add_constant(q(-1)));
    }

    #[test]
    fn family_round_trip() {
        for f in ogf_families() {
            assert_eq!(f.to_string().parse::<OgfFamily>().unwrap(), f);
        }
        assert!("1-2-3/dec".parse::<OgfFamily>().is_err());
        assert_eq!(trivariate_families().len(), 4);
    }
}
