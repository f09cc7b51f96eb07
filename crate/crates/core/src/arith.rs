//! Small integer helpers: primality, p-adic digits, modular inverses.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Deterministic trial division; inputs here never exceed 2^32.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `p^e`, or `None` on overflow.
pub fn checked_pow(p: u64, e: u32) -> Option<u64> {
    let mut acc = 1u64;
    for _ in 0..e {
        acc = acc.checked_mul(p)?;
    }
    Some(acc)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inverse_mod(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (i128::from(a % m), i128::from(m));
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    let m = i128::from(m);
    Some(old_s.rem_euclid(m) as u64)
}

fn check_range(t: u64, p: u64, m: u32) -> Result<()> {
    if let Some(bound) = checked_pow(p, m) {
        if t >= bound {
            return Err(Error::OutOfRange { what: "t", value: t, bound });
        }
    }
    Ok(())
}

/// Base-`p` digits `(t[0], ..., t[m-1])` of `t`, least significant first.
pub fn digits(t: u64, p: u64, m: u32) -> Result<Vec<u64>> {
    check_range(t, p, m)?;
    let mut out = Vec::with_capacity(m as usize);
    let mut rest = t;
    for _ in 0..m {
        out.push(rest % p);
        rest /= p;
    }
    Ok(out)
}

/// Index of the lowest nonzero base-`p` digit of `t`; `None` for zero.
pub fn valuation(t: u64, p: u64, m: u32) -> Result<Option<u32>> {
    check_range(t, p, m)?;
    Ok(valuation_unchecked(t, p))
}

pub(crate) fn valuation_unchecked(mut t: u64, p: u64) -> Option<u32> {
    if t == 0 {
        return None;
    }
    let mut v = 0;
    while t.is_multiple_of(p) {
        t /= p;
        v += 1;
    }
    Some(v)
}

/// Rebuilds an integer from base-`p` digits, least significant first.
pub fn from_digits(ds: &[u64], p: u64) -> u64 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}
