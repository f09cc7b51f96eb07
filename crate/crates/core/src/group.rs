//! Arithmetic of `Z_p x Z_{p^n}`.
//!
//! Elements are pairs `(x, y)` with `x` in `Z_p` and `y` in `Z_{p^n}`. They are
//! laid out linearly as `x * p^n + y`, which is the index used by
//! [`GroupSet`](crate::GroupSet) bitmaps and by every "scan order" in the crate.
//!
//! Units of `Z_{p^n}` act componentwise: `s * (x, y) = (s*x mod p, s*y mod p^n)`.
//! Every nonzero element is a unit multiple of exactly one of `(1, 0)` or
//! `(c, p^i)` with `c` in `Z_p` and `0 <= i < n`; these are the [`ClassRep`]s.

use core::fmt;

use alloc::vec::Vec;

use crate::arith::{self, checked_pow, inverse_mod};
use crate::error::{Error, Result};

/// The pair `(p, n)` fixing the ambient group `Z_p x Z_{p^n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupParams {
    p: u32,
    n: u32,
    modulus: u64,
    order: u64,
}

impl GroupParams {
    /// Default cap on `p^(n+1)`.
    pub const DEFAULT_ORDER_LIMIT: u64 = 1 << 32;

    pub fn new(p: u32, n: u32) -> Result<Self> {
        Self::with_order_limit(p, n, Self::DEFAULT_ORDER_LIMIT)
    }

    pub fn with_order_limit(p: u32, n: u32, limit: u64) -> Result<Self> {
        if !arith::is_prime(u64::from(p)) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 {
            return Err(Error::ZeroExponent);
        }
        let order = checked_pow(u64::from(p), n + 1)
            .filter(|&o| o <= limit)
            .ok_or(Error::OrderTooLarge { p, n, limit })?;
        Ok(GroupParams { p, n, modulus: order / u64::from(p), order })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    /// `p^n`, the modulus of the second coordinate.
    #[inline]
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `p^(n-1)`.
    #[inline]
    pub fn top(&self) -> u64 {
        self.modulus / u64::from(self.p)
    }

    /// `p^(n+1)`.
    #[inline]
    pub fn order(&self) -> u64 {
        self.order
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.order as usize
    }

    /// `p^i` for `i <= n`.
    #[inline]
    pub fn pow(&self, i: u32) -> u64 {
        debug_assert!(i <= self.n);
        u64::from(self.p).pow(i)
    }

    pub fn element(&self, x: u64, y: u64) -> Result<Element> {
        if x >= u64::from(self.p) {
            return Err(Error::OutOfRange { what: "x", value: x, bound: u64::from(self.p) });
        }
        if y >= self.modulus {
            return Err(Error::OutOfRange { what: "y", value: y, bound: self.modulus });
        }
        Ok(Element { x: x as u32, y: y as u32 })
    }

    pub fn contains(&self, e: Element) -> bool {
        e.x < self.p && u64::from(e.y) < self.modulus
    }

    #[inline]
    pub fn index(&self, e: Element) -> usize {
        debug_assert!(self.contains(e));
        (u64::from(e.x) * self.modulus + u64::from(e.y)) as usize
    }

    #[inline]
    pub fn element_at(&self, index: usize) -> Element {
        debug_assert!((index as u64) < self.order);
        let i = index as u64;
        Element { x: (i / self.modulus) as u32, y: (i % self.modulus) as u32 }
    }

    /// All elements in ascending index order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.size()).map(move |i| self.element_at(i))
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        let p = u64::from(self.p);
        Element {
            x: ((u64::from(a.x) + u64::from(b.x)) % p) as u32,
            y: ((u64::from(a.y) + u64::from(b.y)) % self.modulus) as u32,
        }
    }

    #[inline]
    pub fn neg(&self, a: Element) -> Element {
        let p = u64::from(self.p);
        Element {
            x: ((p - u64::from(a.x)) % p) as u32,
            y: ((self.modulus - u64::from(a.y)) % self.modulus) as u32,
        }
    }

    #[inline]
    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    /// `s * e` for any integer scalar `s` (not necessarily a unit).
    #[inline]
    pub fn scale(&self, s: u64, e: Element) -> Element {
        let p = u64::from(self.p);
        let m = self.modulus;
        Element {
            x: ((s % p) * u64::from(e.x) % p) as u32,
            y: (((s % m) as u128 * u128::from(e.y)) % u128::from(m)) as u32,
        }
    }

    /// `<u, v> = p^(n-1) u.x v.x + u.y v.y  (mod p^n)`.
    #[inline]
    pub fn inner_product(&self, u: Element, v: Element) -> u64 {
        let p = u64::from(self.p);
        let m = self.modulus;
        let first = (u64::from(u.x) * u64::from(v.x) % p) * self.top();
        let second = u64::from(u.y) * u64::from(v.y) % m;
        (first + second) % m
    }

    /// Whether `a` is a unit of `Z_{p^n}`.
    #[inline]
    pub fn is_unit(&self, a: u64) -> bool {
        !a.is_multiple_of(u64::from(self.p))
    }

    /// Units of `Z_{p^n}` in ascending order.
    pub fn units(&self) -> impl Iterator<Item = u64> + '_ {
        (1..self.modulus).filter(move |&a| self.is_unit(a))
    }

    /// Number of unit-equivalence classes of nonzero elements, `1 + p*n`.
    #[inline]
    pub fn rep_count(&self) -> usize {
        1 + (self.p as usize) * (self.n as usize)
    }

    /// Dense id of a nonzero class: `UnitAxis` is 0, `Mixed { c, level }` is
    /// `1 + level * p + c`. Ids ascend in report order.
    #[inline]
    pub fn rep_id(&self, rep: ClassRep) -> Option<usize> {
        match rep {
            ClassRep::Zero => None,
            ClassRep::UnitAxis => Some(0),
            ClassRep::Mixed { c, level } => {
                Some(1 + level as usize * self.p as usize + c as usize)
            }
        }
    }

    #[inline]
    pub fn rep_at(&self, id: usize) -> ClassRep {
        if id == 0 {
            ClassRep::UnitAxis
        } else {
            let k = id - 1;
            ClassRep::Mixed { c: (k % self.p as usize) as u32, level: (k / self.p as usize) as u32 }
        }
    }

    /// All nonzero class representatives in report order.
    pub fn reps(&self) -> impl Iterator<Item = ClassRep> + '_ {
        (0..self.rep_count()).map(move |id| self.rep_at(id))
    }

    /// The element a representative stands for.
    pub fn rep_element(&self, rep: ClassRep) -> Element {
        match rep {
            ClassRep::Zero => Element::ZERO,
            ClassRep::UnitAxis => Element { x: 1, y: 0 },
            ClassRep::Mixed { c, level } => Element { x: c, y: self.pow(level) as u32 },
        }
    }

    /// The representative of the unit orbit of `u`.
    pub fn canonical_rep(&self, u: Element) -> ClassRep {
        if u.y == 0 {
            return if u.x == 0 { ClassRep::Zero } else { ClassRep::UnitAxis };
        }
        let p = u64::from(self.p);
        let mut w = u64::from(u.y);
        let mut level = 0;
        while w % p == 0 {
            w /= p;
            level += 1;
        }
        // s*y = p^level needs s = w^-1 mod p^(n-level); only s mod p matters for x.
        let w_inv = inverse_mod(w % p, p).expect("unit part is invertible");
        let c = (u64::from(u.x) * w_inv % p) as u32;
        ClassRep::Mixed { c, level }
    }

    /// Every element in the unit orbit of `rep`, ascending by index.
    pub fn class_members(&self, rep: ClassRep) -> Vec<Element> {
        let r = self.rep_element(rep);
        let mut out: Vec<Element> = self.units().map(|s| self.scale(s, r)).collect();
        out.sort_by_key(|&e| self.index(e));
        out.dedup();
        out
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{} x Z_{}^{}", self.p, self.p, self.n)
    }
}

/// A group element `(x, y)`; validity is relative to a [`GroupParams`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    pub x: u32,
    pub y: u32,
}

impl Element {
    pub const ZERO: Element = Element { x: 0, y: 0 };

    pub const fn new(x: u32, y: u32) -> Self {
        Element { x, y }
    }

    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Representative of a unit-scaling class: `(1,0)`, `(c, p^level)` or zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassRep {
    Zero,
    UnitAxis,
    Mixed { c: u32, level: u32 },
}

impl fmt::Display for ClassRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassRep::Zero => f.write_str("(0,0)"),
            ClassRep::UnitAxis => f.write_str("(1,0)"),
            ClassRep::Mixed { c, level } => write!(f, "({c},p^{level})"),
        }
    }
}
