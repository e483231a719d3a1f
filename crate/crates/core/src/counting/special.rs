use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Special {
    Catalan,
    Bell,
}

impl FromStr for Special {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "catalan" => Ok(Special::Catalan),
            "bell" => Ok(Special::Bell),
            _ => Err(Error::Unknown {
                kind: "special number",
                name: s.to_string(),
            }),
        }
    }
}

pub fn special_number(kind: Special, n: usize) -> BigInt {
    match kind {
        Special::Catalan => catalan(n),
        Special::Bell => bell(n),
    }
}

/// `C_0..=C_{n_max}` from `C_{n+1} = sum_i C_i C_{n-i}`.
pub fn catalan_numbers(n_max: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::one()];
    for n in 0..n_max {
        let next = (0..=n).map(|i| &c[i] * &c[n - i]).sum();
        c.push(next);
    }
    c
}

pub fn catalan(n: usize) -> BigInt {
    catalan_numbers(n).pop().unwrap()
}

/// `B_0..=B_{n_max}` from the Bell triangle.
pub fn bell_numbers(n_max: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    let mut row = vec![BigInt::one()];
    for _ in 0..n_max {
        let mut next = vec![row.last().unwrap().clone()];
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        out.push(next[0].clone());
        row = next;
    }
    out
}

pub fn bell(n: usize) -> BigInt {
    bell_numbers(n).pop().unwrap()
}

/// Binomial coefficient, zero whenever `k < 0`, `k > n` or `n < 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Kronecker delta as an integer.
pub fn delta(a: i64, b: i64) -> BigInt {
    BigInt::from((a == b) as u8)
}
