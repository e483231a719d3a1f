//! Closed-form counts for permutations avoiding the classical pattern 1-2-3
//! with monotone prefix and suffix windows.

use num_bigint::BigInt;
use num_traits::Zero;

use super::special::{binomial, catalan, delta};
use crate::error::{Error, Result};
use crate::perm::Direction;

fn c(m: i64) -> BigInt {
    if m < 0 {
        BigInt::zero()
    } else {
        catalan(m as usize)
    }
}

fn sign(j: i64) -> i64 {
    if j % 2 == 0 {
        1
    } else {
        -1
    }
}

fn s_raw(m: i64, t: i64) -> BigInt {
    if !(1 <= t && t <= m) {
        return BigInt::zero();
    }
    (0..=m - t)
        .map(|j| sign(j) * binomial(m - t - j, j) * c(m - 1 - j))
        .sum()
}

/// Number of 1-2-3 avoiders of length `n` whose first letter is `t`.
pub fn s_first_letter(n: usize, t: usize) -> Result<BigInt> {
    if !(1 <= t && t <= n) {
        return Err(Error::OutOfRange {
            what: "first letter",
            detail: format!("t = {t} with n = {n}"),
        });
    }
    Ok(s_raw(n as i64, t as i64))
}

fn dec_begin(n: i64, k: i64) -> BigInt {
    if k < 1 || n < k {
        return BigInt::zero();
    }
    (1..=n + 1 - k)
        .map(|t| binomial(n - t, k - 1) * s_raw(n - k + 1, t))
        .sum()
}

fn inc_begin(n: i64, k: i64) -> BigInt {
    match k {
        1 if n >= 1 => c(n),
        2 if n >= 2 => c(n - 1),
        _ => BigInt::zero(),
    }
}

fn require_positive(k: usize, name: &'static str) -> Result<()> {
    if k == 0 {
        Err(Error::OutOfRange {
            what: name,
            detail: "window length must be at least 1".to_string(),
        })
    } else {
        Ok(())
    }
}

/// 1-2-3 avoiders of length `n` that begin with `12...k` or `k...21`.
pub fn count_123_one_sided(n: usize, dir: Direction, k: usize) -> Result<BigInt> {
    require_positive(k, "k")?;
    let (n, k) = (n as i64, k as i64);
    Ok(match dir {
        Direction::Inc => inc_begin(n, k),
        Direction::Dec => dec_begin(n, k),
    })
}

fn g_raw(n: i64, a: i64, b: i64) -> BigInt {
    if n == 1 {
        return BigInt::from((a == 1 && b == 1) as u8);
    }
    if n < 2 || !(1 <= a && a <= n && 1 <= b && b <= n) || a == b || b > a + 1 {
        return BigInt::zero();
    }
    if b == a + 1 {
        return binomial(n - 2, a - 1);
    }
    (0..=n - a)
        .map(|j| {
            let inner: BigInt = (0..b)
                .map(|i| sign(i) * binomial(b - 1 - i, i) * c(n - 2 - j - i))
                .sum();
            sign(j) * binomial(n - a - j, j) * inner
        })
        .sum()
}

/// 1-2-3 avoiders of length `n` with first letter `a` and last letter `b`.
pub fn g_aux(n: usize, a: usize, b: usize) -> Result<BigInt> {
    if !(1 <= a && a <= n && 1 <= b && b <= n) {
        return Err(Error::OutOfRange {
            what: "g indices",
            detail: format!("a = {a}, b = {b} with n = {n}"),
        });
    }
    Ok(g_raw(n as i64, a as i64, b as i64))
}

fn h_raw(n: i64, k: i64, l: i64, t: i64, s: i64) -> BigInt {
    if k <= 0 || l <= 0 || !(1 <= t && t <= n && 1 <= s && s <= n) {
        return BigInt::zero();
    }
    if s < t {
        binomial(n - t, k - 1) * binomial(s - 1, l - 1) * g_raw(n + 2 - k - l, t - l + 1, s - l + 1)
    } else if s == t + 1 {
        h_raw(n, k, l, t + 1, t)
    } else if s == t {
        BigInt::zero()
    } else {
        h_raw(n - 1, k, l - 1, t, s - 1) + h_raw(n - 1, k - 1, l, t, s - 1)
    }
}

/// 1-2-3 avoiders of length `n` beginning with `k...21`, ending with `l...21`,
/// with `t` at position `k` and `s` at position `n - l + 1`. The windows must
/// not overlap (`k + l <= n`).
pub fn h_aux(n: usize, k: usize, l: usize, t: usize, s: usize) -> Result<BigInt> {
    if !(1 <= t && t <= n && 1 <= s && s <= n) {
        return Err(Error::OutOfRange {
            what: "h indices",
            detail: format!("t = {t}, s = {s} with n = {n}"),
        });
    }
    if k + l > n {
        return Err(Error::OutOfRange {
            what: "h windows",
            detail: format!("k + l = {} exceeds n = {n}", k + l),
        });
    }
    Ok(h_raw(n as i64, k as i64, l as i64, t as i64, s as i64))
}

fn dec_dec(n: i64, k: i64, l: i64) -> BigInt {
    if n >= k + l {
        (1..=n - k + 1)
            .flat_map(|t| (l..=n).map(move |s| (t, s)))
            .map(|(t, s)| h_raw(n, k, l, t, s))
            .sum()
    } else if n >= k.max(l) {
        // Overlapping windows leave only the decreasing permutation.
        BigInt::from(1)
    } else {
        BigInt::zero()
    }
}

fn dec_inc(n: i64, k: i64, l: i64) -> BigInt {
    match l {
        1 => dec_begin(n, k),
        2 => dec_begin(n - 1, k) + (k - 1) * delta(n, k + 1),
        _ => BigInt::zero(),
    }
}

fn inc_inc(n: i64, k: i64, l: i64) -> BigInt {
    match (k, l) {
        (1, 1) if n >= 1 => c(n),
        (1, 2) | (2, 1) if n >= 2 => c(n - 1),
        (2, 2) if n >= 2 && n != 3 => c(n - 2),
        _ => BigInt::zero(),
    }
}

/// 1-2-3 avoiders of length `n` with a monotone prefix of length `k` and a
/// monotone suffix of length `l`.
pub fn count_123_two_sided(n: usize, begin: Direction, end: Direction, k: usize, l: usize) -> Result<BigInt> {
    require_positive(k, "k")?;
    require_positive(l, "l")?;
    let (n, k, l) = (n as i64, k as i64, l as i64);
    Ok(match (begin, end) {
        (Direction::Inc, Direction::Inc) => inc_inc(n, k, l),
        (Direction::Dec, Direction::Inc) => dec_inc(n, k, l),
        // Reverse-complement swaps the windows and keeps their directions.
        (Direction::Inc, Direction::Dec) => dec_inc(n, l, k),
        (Direction::Dec, Direction::Dec) => dec_dec(n, k, l),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::special::catalan_numbers;

    #[test]
    fn first_letter_rows_sum_to_catalan() {
        let cat = catalan_numbers(10);
        for n in 1..=10 {
            let row: BigInt = (1..=n).map(|t| s_first_letter(n, t).unwrap()).sum();
            assert_eq!(row, cat[n], "n = {n}");
            assert_eq!(s_first_letter(n, n).unwrap(), cat[n - 1]);
            if n >= 2 {
                assert_eq!(s_first_letter(n, n - 1).unwrap(), cat[n - 1]);
            }
        }
        assert_eq!(s_first_letter(5, 5).unwrap(), 14.into());
        assert_eq!(s_first_letter(3, 1).unwrap(), 1.into());
        assert!(s_first_letter(3, 4).is_err());
        assert!(s_first_letter(3, 0).is_err());
    }

    #[test]
    fn lemma_values() {
        assert_eq!(g_aux(6, 2, 5).unwrap(), 0.into());
        assert_eq!(g_aux(5, 3, 4).unwrap(), 3.into());
        assert!(g_aux(5, 6, 1).is_err());
        assert!(h_aux(4, 2, 3, 1, 1).is_err());
    }

    #[test]
    fn one_and_two_sided_examples() {
        assert_eq!(count_123_one_sided(7, Direction::Inc, 3).unwrap(), 0.into());
        assert_eq!(count_123_one_sided(5, Direction::Inc, 2).unwrap(), 14.into());
        assert_eq!(
            count_123_two_sided(3, Direction::Inc, Direction::Inc, 2, 2).unwrap(),
            0.into()
        );
        assert_eq!(
            count_123_two_sided(6, Direction::Inc, Direction::Inc, 2, 2).unwrap(),
            14.into()
        );
        assert!(count_123_one_sided(3, Direction::Dec, 0).is_err());
    }
}
