//! Checked integer helpers shared by the lattice and ideal code.

use alloc::vec::Vec;

use crate::{Error, Result};

#[inline]
pub fn add(a: i64, b: i64) -> Result<i64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

#[inline]
pub fn sub(a: i64, b: i64) -> Result<i64> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

#[inline]
pub fn mul(a: i64, b: i64) -> Result<i64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

/// `a + b * c`, checked.
#[inline]
pub fn mul_add(a: i64, b: i64, c: i64) -> Result<i64> {
    add(a, mul(b, c)?)
}

pub fn pow_u64(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp).ok_or(Error::Overflow)
}

/// Floor division for a positive divisor.
#[inline]
pub fn floor_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i64
}

/// Returns `(g, x, y)` with `g = gcd(a, b) >= 0` and `a*x + b*y = g`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn is_squarefree(n: i64) -> bool {
    let mut m = n.unsigned_abs();
    if m == 0 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d * d) {
            return false;
        }
        if m.is_multiple_of(d) {
            m /= d;
        }
        d += 1;
    }
    true
}

/// Factors `n` by trial division with divisors up to `bound`.
///
/// The cofactor left after dividing out all small primes is accepted as prime
/// only when its square root is within the bound; otherwise the factorization
/// cannot be certified and an error is returned.
pub fn factor_u64(n: u64, bound: u64) -> Result<Vec<(u64, u32)>> {
    let mut out = Vec::new();
    let mut m = n;
    let mut d = 2u64;
    while d <= bound && d.saturating_mul(d) <= m {
        if m.is_multiple_of(d) {
            let mut e = 0;
            while m.is_multiple_of(d) {
                m /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if m > 1 {
        if d.saturating_mul(d) <= m {
            return Err(Error::TrialDivisionBound { norm: n, bound });
        }
        out.push((m, 1));
    }
    Ok(out)
}

/// Exact rational `num/den` in lowest terms with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub num: i128,
    pub den: i128,
}

impl Ratio {
    pub const ZERO: Ratio = Ratio { num: 0, den: 1 };
    pub const ONE: Ratio = Ratio { num: 1, den: 1 };

    pub fn new(num: i128, den: i128) -> Result<Ratio> {
        if den == 0 {
            return Err(Error::Precondition("zero denominator".into()));
        }
        let g = gcd128(num, den);
        let s = if den < 0 { -1 } else { 1 };
        Ok(Ratio { num: s * num / g, den: s * den / g })
    }

    pub fn checked_add(self, other: Ratio) -> Result<Ratio> {
        let g = gcd128(self.den, other.den);
        let l = (self.den / g).checked_mul(other.den).ok_or(Error::Overflow)?;
        let a = self.num.checked_mul(l / self.den).ok_or(Error::Overflow)?;
        let b = other.num.checked_mul(l / other.den).ok_or(Error::Overflow)?;
        Ratio::new(a.checked_add(b).ok_or(Error::Overflow)?, l)
    }
}

fn gcd128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a.max(1) as i128
}
