//! Taylor series of elementary functions of an affine argument.

use std::f64::consts::FRAC_PI_2;
use std::str::FromStr;

use super::FloatSeries;
use crate::error::{Error, Result};

/// Below this `|cos b|` the secant expansion is refused.
const COS_FLOOR: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transcendental {
    Exp,
    Sin,
    Cos,
    Sec,
    Tan,
}

impl FromStr for Transcendental {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exp" => Ok(Transcendental::Exp),
            "sin" => Ok(Transcendental::Sin),
            "cos" => Ok(Transcendental::Cos),
            "sec" => Ok(Transcendental::Sec),
            "tan" => Ok(Transcendental::Tan),
            _ => Err(Error::Unknown {
                kind: "function",
                name: s.to_string(),
            }),
        }
    }
}

fn taylor(order: usize, a: f64, f: impl Fn(usize) -> f64) -> FloatSeries {
    let mut fact = 1.0;
    FloatSeries::from_fn(order, |n| {
        if n > 0 {
            fact *= n as f64;
        }
        a.powi(n as i32) * f(n) / fact
    })
}

/// `f(a x + b)` to the given order. `sec` and `tan` fail when `cos b` vanishes.
pub fn float_transcendental(kind: Transcendental, a: f64, b: f64, order: usize) -> Result<FloatSeries> {
    let phase = |n: usize| b + n as f64 * FRAC_PI_2;
    let cos = || taylor(order, a, |n| phase(n).cos());
    let sec = || {
        if b.cos().abs() < COS_FLOOR {
            return Err(Error::OutOfRange {
                what: "secant offset",
                detail: format!("cos({b}) is zero"),
            });
        }
        cos().reciprocal()
    };
    Ok(match kind {
        Transcendental::Exp => taylor(order, a, |_| b.exp()),
        Transcendental::Sin => taylor(order, a, |n| phase(n).sin()),
        Transcendental::Cos => cos(),
        Transcendental::Sec => sec()?,
        Transcendental::Tan => &taylor(order, a, |n| phase(n).sin()) * &sec()?,
    })
}
