//! Consequences of the zero set: the divisibility bound, size classes and
//! the digit-deletion projections onto `Z_p x Z_{p^(n-1)}`.

use core::fmt;

use crate::arith;
use crate::charsum::ZeroProfile;
use crate::error::{Error, Result};
use crate::group::{Element, GroupParams};
use crate::set::GroupSet;

/// Largest `s` certified by a zero pattern `(a, p^i1), (0, p^i2), ..., (0, p^is)`
/// with `i1 < i2 < ... < is`; then `p^s` divides `|A|`.
pub fn divisibility_exponent(profile: &ZeroProfile) -> u32 {
    let params = profile.params();
    exponent_from_levels(
        params.n(),
        |i| profile.level_has_zero(i),
        |i| profile.has_mixed(0, i),
    )
}

/// Shared by the profile path and the enumeration kernel.
pub(crate) fn exponent_from_levels(
    n: u32,
    level_has_zero: impl Fn(u32) -> bool,
    axis_zero: impl Fn(u32) -> bool,
) -> u32 {
    let mut best = 0;
    // Axis zeros strictly above each level, accumulated from the top down.
    let mut above = 0;
    for i in (0..n).rev() {
        if level_has_zero(i) {
            best = best.max(1 + above);
        }
        if axis_zero(i) {
            above += 1;
        }
    }
    best
}

/// Size of a subset factored as `m p^s`, `gcd(m, p) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SizeClass {
    /// `|A| = 1` or `|A| = p^(n+1)`.
    Trivial,
    /// `|A| = p^s`, `1 <= s <= n`.
    PurePower { s: u32 },
    /// `|A| = m p^s` with `2 <= m <= p-1`.
    MixedSize { m: u64, s: u32 },
    OtherSize,
}

impl fmt::Display for SizeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SizeClass::Trivial => f.write_str("Trivial"),
            SizeClass::PurePower { s } => write!(f, "PurePower({s})"),
            SizeClass::MixedSize { m, s } => write!(f, "MixedSize(m={m}, s={s})"),
            SizeClass::OtherSize => f.write_str("OtherSize"),
        }
    }
}

pub fn classify_size(cardinality: u64, params: &GroupParams) -> Result<SizeClass> {
    if cardinality == 0 || cardinality > params.order() {
        return Err(Error::OutOfRange {
            what: "cardinality",
            value: cardinality,
            bound: params.order() + 1,
        });
    }
    if cardinality == 1 || cardinality == params.order() {
        return Ok(SizeClass::Trivial);
    }
    let p = u64::from(params.p());
    let s = arith::valuation_unchecked(cardinality, p).unwrap_or(0);
    let m = cardinality / p.pow(s);
    Ok(match m {
        1 => SizeClass::PurePower { s },
        m if m < p => SizeClass::MixedSize { m, s },
        _ => SizeClass::OtherSize,
    })
}

/// Which digit of the second coordinate a projection deletes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DigitProjection {
    /// Deletes digit `r`.
    DeleteLevel,
    /// Deletes digit `n - 1 - r`.
    DeleteMirror,
}

/// Deletes one base-`p` digit of `y`, shifting the higher digits down.
pub fn delete_digit(y: u64, p: u64, digit: u32) -> u64 {
    let low = y % p.pow(digit);
    let high = y / p.pow(digit + 1);
    low + high * p.pow(digit)
}

/// `{(x, phi(y)) : (x, y) in A}` in `Z_p x Z_{p^(n-1)}`.
pub fn project_delete_digit(a: &GroupSet, r: u32, variant: DigitProjection) -> Result<GroupSet> {
    let params = a.params();
    let n = params.n();
    if n < 2 {
        return Err(Error::OutOfRange { what: "n for projection", value: u64::from(n), bound: 2 });
    }
    if r >= n {
        return Err(Error::OutOfRange { what: "r", value: u64::from(r), bound: u64::from(n) });
    }
    let digit = match variant {
        DigitProjection::DeleteLevel => r,
        DigitProjection::DeleteMirror => n - 1 - r,
    };
    let smaller = GroupParams::new(params.p(), n - 1)?;
    let p = u64::from(params.p());
    let image = a.iter().map(|e| Element::new(e.x, delete_digit(u64::from(e.y), p, digit) as u32));
    GroupSet::from_elements(smaller, image)
}
