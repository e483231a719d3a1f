//! Exponential generating functions for the contiguous and dashed families,
//! in floating point.

use std::f64::consts::{FRAC_PI_3, FRAC_PI_6};
use std::fmt;
use std::str::FromStr;

use super::float::{float_transcendental, Transcendental};
use super::ogf::bell_rational_sum;
use super::FloatSeries;
use crate::constraint::ConstraintSpec;
use crate::error::{Error, Result};
use crate::perm::Direction::{self, Dec, Inc};

pub const EGF_DEFAULT_ORDER: usize = 14;
pub const EGF_MAX_ORDER: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EgfPattern {
    C123,
    D1_32,
    D21_3,
    D1_23,
    D12_3,
    /// 12-3 and 21-3 avoided together.
    Pair12_3,
}

impl EgfPattern {
    pub const ALL: [EgfPattern; 6] = [
        EgfPattern::C123,
        EgfPattern::D1_32,
        EgfPattern::D21_3,
        EgfPattern::D1_23,
        EgfPattern::D12_3,
        EgfPattern::Pair12_3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EgfPattern::C123 => "123",
            EgfPattern::D1_32 => "1-32",
            EgfPattern::D21_3 => "21-3",
            EgfPattern::D1_23 => "1-23",
            EgfPattern::D12_3 => "12-3",
            EgfPattern::Pair12_3 => "12-3,21-3",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EgfFamily {
    pub pattern: EgfPattern,
    pub begin: Direction,
    pub end: Direction,
}

impl EgfFamily {
    pub fn spec(&self, k: usize, l: usize) -> ConstraintSpec {
        ConstraintSpec::avoiding_str(self.pattern.as_str())
            .expect("registered patterns parse")
            .with_begin(self.begin.window(k))
            .expect("window is nonempty")
            .with_end(self.end.window(l))
            .expect("window is nonempty")
    }
}

impl fmt::Display for EgfFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}/{}", self.pattern.as_str(), self.begin, self.end)
    }
}

impl FromStr for EgfFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::Unknown {
            kind: "EGF family",
            name: s.to_string(),
        };
        let mut parts = s.split('/');
        let (Some(p), Some(b), Some(e), None) = (parts.next(), parts.next(), parts.next(), parts.next()) else {
            return Err(unknown());
        };
        let pattern = EgfPattern::ALL
            .into_iter()
            .find(|x| x.as_str() == p)
            .ok_or_else(unknown)?;
        let f = EgfFamily {
            pattern,
            begin: b.parse()?,
            end: e.parse()?,
        };
        if egf_families().contains(&f) {
            Ok(f)
        } else {
            Err(unknown())
        }
    }
}

/// Every family with an EGF.
pub fn egf_families() -> Vec<EgfFamily> {
    let mut out = Vec::new();
    for pattern in EgfPattern::ALL {
        for begin in [Inc, Dec] {
            for end in [Inc, Dec] {
                let registered = match pattern {
                    EgfPattern::D1_23 => (begin, end) != (Inc, Dec),
                    EgfPattern::D12_3 => (begin, end) != (Dec, Inc),
                    EgfPattern::Pair12_3 => (begin, end) == (Inc, Inc),
                    _ => true,
                };
                if registered {
                    out.push(EgfFamily { pattern, begin, end });
                }
            }
        }
    }
    out
}

fn inv_factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc / i as f64)
}

const R3: f64 = 0.866_025_403_784_438_6;

struct Basis {
    order: usize,
    x: FloatSeries,
    sec: FloatSeries,
    tan: FloatSeries,
    /// `sin(R3 x + pi/3)`
    sin3: FloatSeries,
    ex2: FloatSeries,
    exm2: FloatSeries,
    ee: FloatSeries,
    eex: FloatSeries,
    emex: FloatSeries,
}

impl Basis {
    fn new(order: usize) -> Result<Self> {
        let t = |kind, a, b| float_transcendental(kind, a, b, order);
        let ee = t(Transcendental::Exp, 1.0, 0.0)?;
        Ok(Basis {
            order,
            x: FloatSeries::x(order),
            sec: t(Transcendental::Sec, R3, FRAC_PI_6)?,
            tan: t(Transcendental::Tan, R3, FRAC_PI_6)?,
            sin3: t(Transcendental::Sin, R3, FRAC_PI_3)?,
            ex2: t(Transcendental::Exp, 0.5, 0.0)?,
            exm2: t(Transcendental::Exp, -0.5, 0.0)?,
            eex: ee.exp(),
            emex: (-&ee).exp(),
            ee,
        })
    }

    fn zero(&self) -> FloatSeries {
        FloatSeries::zero(self.order)
    }

    fn c(&self, v: f64) -> FloatSeries {
        FloatSeries::constant(v, self.order)
    }

    /// `x^k / k!`
    fn mono(&self, k: usize) -> FloatSeries {
        FloatSeries::monomial(k, inv_factorial(k), self.order)
    }

    /// `e^x` without its terms below `x^j`.
    fn tail(&self, j: usize) -> FloatSeries {
        FloatSeries::from_fn(self.order, |n| if n >= j { inv_factorial(n) } else { 0.0 })
    }

    /// `sum_{n=m}^{k+l-2} x^n / n!`
    fn overlap(&self, k: usize, l: usize) -> FloatSeries {
        let m = k.max(l);
        FloatSeries::from_fn(self.order, |n| {
            if m <= n && n + 2 <= k + l {
                inv_factorial(n)
            } else {
                0.0
            }
        })
    }

    fn int(&self, s: FloatSeries) -> FloatSeries {
        s.integrate().truncate(self.order)
    }

    fn int_times(&self, s: FloatSeries, j: usize) -> FloatSeries {
        s.integrate_times(j).truncate(self.order)
    }

    // Contiguous 123.

    fn phi(&self, k: usize) -> FloatSeries {
        let inner = self.int(&(&self.exm2 * &self.mono(k - 1)) * &self.sin3);
        &(&self.ex2 * &self.sec) * &inner
    }

    fn sec_shape(&self) -> FloatSeries {
        &self.sec * &(&self.sin3 - &self.exm2.scale(&R3))
    }

    fn c123_ii(&self, k: usize, l: usize) -> FloatSeries {
        let base = (&self.ex2 * &self.sec).scale(&R3);
        match (k, l) {
            (1, 1) => base.add_constant(-1.0),
            (1, 2) | (2, 1) => (&base - &self.tan.scale(&R3)).add_constant(-0.5),
            (2, 2) => {
                let inner = &(&self.ex2 + &self.exm2).scale(&R3) - &self.sin3;
                (&self.x - &self.tan.scale(&R3)).add_constant(-0.5) + &self.sec * &inner
            }
            _ => self.zero(),
        }
    }

    fn c123_id(&self, k: usize, l: usize) -> FloatSeries {
        match k {
            1 => self.phi(l),
            2 => self.int(&self.sec_shape() * &(self.phi(l) + self.mono(l - 1))),
            _ => self.zero(),
        }
    }

    fn c123_dd(&self, k: usize, l: usize) -> FloatSeries {
        match (k, l) {
            (1, _) => self.phi(l),
            (_, 1) => self.phi(k),
            (_, 2) => self.phi(k) - self.c123_id(2, k),
            _ => self.c123_dd_rec(k, l) + self.overlap(k, l),
        }
    }

    fn c123_dd_rec(&self, k: usize, l: usize) -> FloatSeries {
        let prev = if k == 2 {
            self.phi(l)
        } else {
            self.c123_dd_rec(k - 1, l)
        };
        let left = self.phi(l) + self.mono(l - 1);
        let right = self.phi(k) - self.c123_id(2, k);
        self.int(&left * &right + prev)
    }

    // Dashed 1-32.

    fn a(&self, k: usize) -> FloatSeries {
        if k == 1 {
            return self.ee.add_constant(-1.0).exp().add_constant(-1.0);
        }
        &self.eex * &self.int(&self.emex * &self.tail(k - 1))
    }

    fn d(&self, k: usize) -> FloatSeries {
        if k == 1 {
            return self.a(1);
        }
        let weight = (&self.x - &self.ee).exp();
        &self.eex * &self.int(&self.mono(k - 1) * &weight)
    }

    fn d1_32(&self, begin: Direction, end: Direction, k: usize, l: usize) -> FloatSeries {
        let m = k.max(l);
        match (begin, end) {
            (Inc, _) if l == 1 => self.a(k),
            (Dec, _) if l == 1 => self.d(k),
            (Inc, Inc) => self.int(&self.tail(l - 1) * &self.a(k) + self.tail(m - 1)),
            (Inc, Dec) => self.int_times(self.a(k), l - 1),
            (Dec, Inc) => self.int(&self.tail(l - 1) * &(self.d(k) + self.mono(k - 1))),
            (Dec, Dec) => self.int_times(self.d(k), l - 1) + self.overlap(k, l),
        }
    }

    // Dashed 1-23.

    fn u(&self, k: usize) -> FloatSeries {
        match k {
            1 => self.a(1),
            2 => &self.eex * &self.int(&self.emex * &self.ee.add_constant(-1.0)),
            _ => self.zero(),
        }
    }

    fn w(&self, l: usize) -> FloatSeries {
        let exact = bell_rational_sum(l, self.order);
        let f = FloatSeries::from_rational(&exact);
        FloatSeries::from_fn(self.order, |n| f.coeffs()[n] * inv_factorial(n))
    }

    fn d1_23(&self, begin: Direction, end: Direction, k: usize, l: usize) -> Option<FloatSeries> {
        Some(match (begin, end) {
            (Inc, Inc) => match (k, l) {
                (1, _) => self.w(l),
                (_, 1) => self.u(k),
                (2, 2) => self.int(&self.x * &self.u(2)) + self.mono(2),
                _ => self.zero(),
            },
            (Dec, Inc) => match l {
                1 => self.d(k),
                2 => {
                    let weight = (&self.x - &self.ee).exp();
                    let inner = self.int(&self.mono(k - 1) * &weight);
                    self.int(&(&self.x * &self.eex) * &inner) + self.mono(k + 1).scale(&(k as f64))
                }
                _ => self.zero(),
            },
            (Dec, Dec) => match (k, l) {
                (_, 1) => self.d(k),
                (1, _) => return None,
                _ => self.d1_23_dd_rec(k, l) + self.overlap(k, l),
            },
            (Inc, Dec) => return None,
        })
    }

    fn d1_23_dd_rec(&self, k: usize, l: usize) -> FloatSeries {
        let prev = if l == 2 { self.d(k) } else { self.d1_23_dd_rec(k, l - 1) };
        let step = &self.tail(l) * &(self.d(k) + self.mono(k - 1));
        self.int(prev + step)
    }

    // 12-3 and 21-3 together.

    fn pair(&self, k: usize, l: usize) -> FloatSeries {
        let g = (&self.x + &self.mono(2)).exp();
        let gi = self.int((-(&self.x + &self.mono(2))).exp());
        let g_end = (&g * &(self.c(1.0) - gi)).add_constant(-1.0);
        match (k, l) {
            (1, 1) => g.add_constant(-1.0),
            (1, 2) => g_end,
            (2, 1) => self.int(&self.x * &g),
            (2, 2) => self.mono(2) + self.int(&self.x * &g_end),
            _ => self.zero(),
        }
    }
}

/// The EGF of `family` at window lengths `k` and `l`, to the given order.
pub fn egf_formula(family: &EgfFamily, k: usize, l: usize, order: usize) -> Result<FloatSeries> {
    if order > EGF_MAX_ORDER {
        return Err(Error::AboveCap {
            n: order,
            cap: EGF_MAX_ORDER,
        });
    }
    if k == 0 || l == 0 {
        return Err(Error::OutOfRange {
            what: "window",
            detail: format!("k = {k}, l = {l}; both must be at least 1"),
        });
    }
    let not_registered = || Error::NotRegistered(format!("EGF {family}"));
    let b = Basis::new(order)?;
    let (begin, end) = (family.begin, family.end);
    let s = match family.pattern {
        EgfPattern::C123 => match (begin, end) {
            (Inc, Inc) => b.c123_ii(k, l),
            (Inc, Dec) => b.c123_id(k, l),
            // Reverse-complement swaps the windows and keeps their directions.
            (Dec, Inc) => b.c123_id(l, k),
            (Dec, Dec) => b.c123_dd(k, l),
        },
        EgfPattern::D1_32 => b.d1_32(begin, end, k, l),
        EgfPattern::D21_3 => b.d1_32(end, begin, l, k),
        EgfPattern::D1_23 => b.d1_23(begin, end, k, l).ok_or_else(not_registered)?,
        EgfPattern::D12_3 => b.d1_23(end, begin, l, k).ok_or_else(not_registered)?,
        EgfPattern::Pair12_3 if (begin, end) == (Inc, Inc) => b.pair(k, l),
        EgfPattern::Pair12_3 => return Err(not_registered()),
    };
    Ok(s.truncate(order))
}
