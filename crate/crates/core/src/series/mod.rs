//! Truncated power series over exact rationals (ordinary generating functions)
//! and over `f64` (exponential generating functions).
//!
//! A series of order `N` knows its coefficients of `x^0..x^{N-1}`; nothing
//! beyond is read or invented. Binary operations return the smaller order and
//! integration gains one.

mod egf;
mod extract;
mod float;
mod ogf;

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use egf::{egf_families, egf_formula, EgfFamily, EgfPattern, EGF_DEFAULT_ORDER, EGF_MAX_ORDER};
pub use extract::{counts_from_series, egf_count, ogf_count, CountSeries, Flavor, EGF_RELATIVE_TOLERANCE};
pub use float::{float_transcendental, Transcendental};
pub use ogf::{
    bell_rational_sum, catalan_series, ogf_families, ogf_formula, trivariate_coeff, trivariate_families, OgfFamily,
    OgfPattern, OGF_DEFAULT_ORDER,
};

/// Scalars a series can be built over.
pub trait Coefficient:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;
}

impl Coefficient for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

impl Coefficient for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Series<T> {
    coeffs: Vec<T>,
}

pub type RationalSeries = Series<BigRational>;
pub type FloatSeries = Series<f64>;

impl<T: Coefficient> Series<T> {
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        Series { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> T) -> Self {
        Series {
            coeffs: (0..order).map(f).collect(),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_fn(order, |_| T::zero())
    }

    pub fn constant(c: T, order: usize) -> Self {
        Self::monomial(0, c, order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(T::one(), order)
    }

    /// `c x^k`
    pub fn monomial(k: usize, c: T, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k < order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn x(order: usize) -> Self {
        Self::monomial(1, T::one(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&T> {
        self.coeffs.get(n).ok_or(Error::BeyondOrder { n, order: self.order() })
    }

    pub fn truncate(mut self, order: usize) -> Self {
        self.coeffs.truncate(order);
        self
    }

    pub fn scale(&self, c: &T) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn add_constant(&self, c: T) -> Self {
        let mut s = self.clone();
        if let Some(a) = s.coeffs.first_mut() {
            *a = a.clone() + c;
        }
        s
    }

    /// Multiplies by `x^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        Self::from_fn(self.order(), |n| {
            if n >= k {
                self.coeffs[n - k].clone()
            } else {
                T::zero()
            }
        })
    }

    pub fn reciprocal(&self) -> Result<Self> {
        let Some(a0) = self.coeffs.first() else {
            return Ok(self.clone());
        };
        if a0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let inv0 = T::one() / a0.clone();
        let mut r: Vec<T> = vec![inv0.clone()];
        for n in 1..self.order() {
            let mut acc = T::zero();
            for i in 1..=n {
                acc = acc + self.coeffs[i].clone() * r[n - i].clone();
            }
            r.push(-(acc * inv0.clone()));
        }
        Ok(Series { coeffs: r })
    }

    /// Definite integral from 0.
    pub fn integrate(&self) -> Self {
        let mut coeffs = vec![T::zero()];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs.push(a.clone() / T::from_i64(i as i64 + 1));
        }
        Series { coeffs }
    }

    /// `j`-fold integral from 0.
    pub fn integrate_times(&self, j: usize) -> Self {
        (0..j).fold(self.clone(), |s, _| s.integrate())
    }

    pub fn differentiate(&self) -> Self {
        Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a.clone() * T::from_i64(i as i64))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl FloatSeries {
    /// `exp` of this series, from `r' = s' r`.
    pub fn exp(&self) -> Self {
        let order = self.order();
        if order == 0 {
            return self.clone();
        }
        let d = self.differentiate();
        let mut r = vec![self.coeffs[0].exp()];
        for n in 1..order {
            let acc: f64 = (0..n).map(|i| d.coeffs[i] * r[n - 1 - i]).sum();
            r.push(acc / n as f64);
        }
        Series { coeffs: r }
    }

    /// Converts an exact series coefficientwise.
    pub fn from_rational(s: &RationalSeries) -> Self {
        Series {
            coeffs: s.coeffs.iter().map(ratio_to_f64).collect(),
        }
    }

    pub fn max_abs_diff(&self, other: &FloatSeries) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

fn zip_with<T: Coefficient>(a: &Series<T>, b: &Series<T>, f: impl Fn(T, T) -> T) -> Series<T> {
    Series {
        coeffs: a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| f(x.clone(), y.clone()))
            .collect(),
    }
}

impl<T: Coefficient> Add for &Series<T> {
    type Output = Series<T>;
    fn add(self, rhs: Self) -> Series<T> {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl<T: Coefficient> Sub for &Series<T> {
    type Output = Series<T>;
    fn sub(self, rhs: Self) -> Series<T> {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl<T: Coefficient> Mul for &Series<T> {
    type Output = Series<T>;
    fn mul(self, rhs: Self) -> Series<T> {
        let order = self.order().min(rhs.order());
        Series::from_fn(order, |n| {
            let mut acc = T::zero();
            for i in 0..=n {
                if !self.coeffs[i].is_zero() {
                    acc = acc + self.coeffs[i].clone() * rhs.coeffs[n - i].clone();
                }
            }
            acc
        })
    }
}

impl<T: Coefficient> Neg for &Series<T> {
    type Output = Series<T>;
    fn neg(self) -> Series<T> {
        Series {
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Coefficient> $tr for Series<T> {
            type Output = Series<T>;
            fn $m(self, rhs: Self) -> Series<T> {
                (&self).$m(&rhs)
            }
        }
        impl<T: Coefficient> $tr<&Series<T>> for Series<T> {
            type Output = Series<T>;
            fn $m(self, rhs: &Series<T>) -> Series<T> {
                (&self).$m(rhs)
            }
        }
        impl<T: Coefficient> $tr<Series<T>> for &Series<T> {
            type Output = Series<T>;
            fn $m(self, rhs: Series<T>) -> Series<T> {
                self.$m(&rhs)
            }
        }
    )*};
}

owned_ops!(Add add, Sub sub, Mul mul);

impl<T: Coefficient> Neg for Series<T> {
    type Output = Series<T>;
    fn neg(self) -> Series<T> {
        -&self
    }
}

impl<T: Coefficient + Display> Display for Series<T> {
    /// One `n: coefficient` line per known coefficient.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, a) in self.coeffs.iter().enumerate() {
            writeln!(f, "{n}: {a}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_i64(n)
    }

    #[test]
    fn integrate_constant_one() {
        let s = RationalSeries::one(3).integrate();
        assert_eq!(s, RationalSeries::x(4));
    }

    #[test]
    fn geometric_series() {
        let one_minus_x = &RationalSeries::one(6) - &RationalSeries::x(6);
        let g = one_minus_x.reciprocal().unwrap();
        assert!(g.coeffs().iter().all(|c| *c == q(1)));
        assert!(RationalSeries::x(4).reciprocal().is_err());
    }

    #[test]
    fn orders_follow_the_rules() {
        let a = RationalSeries::one(5);
        let b = RationalSeries::one(3);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!(a.integrate().order(), 6);
        assert_eq!(a.differentiate().order(), 4);
        assert!(b.coeff(3).is_err());
    }

    #[test]
    fn exp_of_zero_series_is_one() {
        let s = FloatSeries::zero(5).exp();
        assert_eq!(s.coeffs(), &[1.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn render_lines() {
        let s = RationalSeries::from_coeffs(vec![q(1), BigRational::new(1.into(), 2.into())]);
        assert_eq!(s.to_string(), "0: 1\n1: 1/2\n");
    }
}
