//! Reading integer counts off generating functions.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::{FloatSeries, RationalSeries};
use crate::error::{Error, Result};

/// Largest relative residual accepted when rounding `n! c_n`.
pub const EGF_RELATIVE_TOLERANCE: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// Coefficients are the counts.
    Ogf,
    /// Coefficients times `n!` are the counts.
    Egf,
}

/// A series whose coefficients encode counts.
pub trait CountSeries {
    const FLAVOR: Flavor;
    fn count(&self, n: usize) -> Result<BigInt>;
}

impl CountSeries for RationalSeries {
    const FLAVOR: Flavor = Flavor::Ogf;
    fn count(&self, n: usize) -> Result<BigInt> {
        ogf_count(self, n)
    }
}

impl CountSeries for FloatSeries {
    const FLAVOR: Flavor = Flavor::Egf;
    fn count(&self, n: usize) -> Result<BigInt> {
        egf_count(self, n)
    }
}

/// The coefficient of `x^n`, which must be an integer.
pub fn ogf_count(s: &RationalSeries, n: usize) -> Result<BigInt> {
    let c = s.coeff(n)?;
    if !c.denom().is_one() {
        return Err(Error::NonInteger {
            n,
            value: c.to_string(),
        });
    }
    Ok(c.numer().clone())
}

/// `n!` times the coefficient of `x^n`, rounded. Fails unless the rounding
/// error is below one half and the relative residual below
/// [`EGF_RELATIVE_TOLERANCE`].
pub fn egf_count(s: &FloatSeries, n: usize) -> Result<BigInt> {
    let c = *s.coeff(n)?;
    let scaled = (1..=n).fold(c, |acc, i| acc * i as f64);
    let rounded = scaled.round();
    let abs = (scaled - rounded).abs();
    let residual = abs / rounded.abs().max(1.0);
    if !(abs < 0.5 && residual < EGF_RELATIVE_TOLERANCE) {
        return Err(Error::Tolerance { n, scaled, residual });
    }
    let v = rounded.to_i128().ok_or(Error::Tolerance { n, scaled, residual })?;
    Ok(BigInt::from(v))
}

/// Counts for `n = 0..=n_max`.
pub fn counts_from_series<S: CountSeries>(s: &S, n_max: usize) -> Result<Vec<BigInt>> {
    (0..=n_max).map(|n| s.count(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn ogf_rejects_fractions() {
        let s = RationalSeries::from_coeffs(vec![BigRational::new(1.into(), 2.into())]);
        assert!(matches!(ogf_count(&s, 0), Err(Error::NonInteger { .. })));
        assert!(matches!(ogf_count(&s, 1), Err(Error::BeyondOrder { .. })));
    }

    #[test]
    fn egf_rounds_within_tolerance() {
        let e = FloatSeries::from_fn(8, |n| 1.0 / (1..=n).product::<usize>() as f64);
        assert_eq!(counts_from_series(&e, 7).unwrap(), vec![BigInt::from(1); 8]);
        let off = FloatSeries::from_coeffs(vec![0.0, 0.0, 0.3]);
        assert!(matches!(egf_count(&off, 2), Err(Error::Tolerance { .. })));
    }
}
