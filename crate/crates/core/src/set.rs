use core::cmp::Ordering;
use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{Element, GroupParams};

/// A subset of the group as a membership bitmap over element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupSet {
    params: GroupParams,
    words: Vec<u64>,
}

impl GroupSet {
    pub fn empty(params: GroupParams) -> Self {
        GroupSet { params, words: vec![0; params.size().div_ceil(64)] }
    }

    pub fn full(params: GroupParams) -> Self {
        let mut s = Self::empty(params);
        for i in 0..params.size() {
            s.insert_index(i);
        }
        s
    }

    pub fn singleton(params: GroupParams, e: Element) -> Self {
        let mut s = Self::empty(params);
        s.insert(e);
        s
    }

    /// Builds a set, rejecting elements outside the group. Repeats collapse.
    pub fn from_elements<I: IntoIterator<Item = Element>>(params: GroupParams, elems: I) -> Result<Self> {
        let mut s = Self::empty(params);
        for e in elems {
            if !params.contains(e) {
                return Err(Error::OutOfRange {
                    what: "element index",
                    value: u64::from(e.x) * params.modulus() + u64::from(e.y),
                    bound: params.order(),
                });
            }
            s.insert(e);
        }
        Ok(s)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(params: GroupParams, idx: I) -> Self {
        let mut s = Self::empty(params);
        for i in idx {
            s.insert_index(i);
        }
        s
    }

    /// Set from the low `|G|` bits of a mask; bit `i` is element index `i`.
    pub fn from_mask(params: GroupParams, mask: u64) -> Self {
        debug_assert!(params.size() <= 64);
        let mut s = Self::empty(params);
        if let Some(w) = s.words.first_mut() {
            *w = mask;
        }
        s
    }

    /// The inverse of [`from_mask`](Self::from_mask); `None` for groups over 64 elements.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.as_slice() {
            [] => Some(0),
            [w] => Some(*w),
            _ => None,
        }
    }

    #[inline]
    pub fn params(&self) -> GroupParams {
        self.params
    }

    #[inline]
    pub fn contains_index(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn contains(&self, e: Element) -> bool {
        self.params.contains(e) && self.contains_index(self.params.index(e))
    }

    #[inline]
    pub fn insert_index(&mut self, i: usize) -> bool {
        let bit = 1u64 << (i % 64);
        let w = &mut self.words[i / 64];
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn insert(&mut self, e: Element) -> bool {
        let i = self.params.index(e);
        self.insert_index(i)
    }

    pub fn remove(&mut self, e: Element) -> bool {
        let i = self.params.index(e);
        let bit = 1u64 << (i % 64);
        let w = &mut self.words[i / 64];
        let had = *w & bit != 0;
        *w &= !bit;
        had
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Member indices in ascending order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut rest = w;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(k * 64 + b)
            })
        })
    }

    /// Members in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.indices().map(move |i| self.params.element_at(i))
    }

    pub fn first(&self) -> Option<Element> {
        self.iter().next()
    }

    fn check_same(&self, other: &GroupSet) -> Result<()> {
        if self.params != other.params {
            return Err(Error::ParamsMismatch { left: self.params, right: other.params });
        }
        Ok(())
    }

    fn zip_words(&self, other: &GroupSet, f: impl Fn(u64, u64) -> u64) -> Result<GroupSet> {
        self.check_same(other)?;
        let words = self.words.iter().zip(&other.words).map(|(&a, &b)| f(a, b)).collect();
        Ok(GroupSet { params: self.params, words })
    }

    pub fn union(&self, other: &GroupSet) -> Result<GroupSet> {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &GroupSet) -> Result<GroupSet> {
        self.zip_words(other, |a, b| a & b)
    }

    /// `self \ other`.
    pub fn minus(&self, other: &GroupSet) -> Result<GroupSet> {
        self.zip_words(other, |a, b| a & !b)
    }

    /// `G \ self`.
    pub fn complement(&self) -> GroupSet {
        let full = GroupSet::full(self.params);
        full.minus(self).expect("same params")
    }

    pub fn is_subset(&self, other: &GroupSet) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.words.iter().zip(&other.words).all(|(&a, &b)| a & !b == 0))
    }

    pub fn translate(&self, g: Element) -> GroupSet {
        let mut out = GroupSet::empty(self.params);
        for e in self.iter() {
            out.insert(self.params.add(e, g));
        }
        out
    }

    /// `{a*e + g : e in self}` for a unit `a` of `Z_{p^n}`.
    pub fn scale_translate(&self, a: u64, g: Element) -> Result<GroupSet> {
        let params = self.params;
        if !params.is_unit(a) {
            return Err(Error::NotAUnit { value: a, modulus: params.modulus() });
        }
        if !params.contains(g) {
            return Err(Error::OutOfRange {
                what: "translation",
                value: u64::from(g.x) * params.modulus() + u64::from(g.y),
                bound: params.order(),
            });
        }
        let mut out = GroupSet::empty(params);
        for e in self.iter() {
            out.insert(params.add(params.scale(a, e), g));
        }
        Ok(out)
    }

    /// `A - A = {a - a' : a, a' in A}`.
    pub fn difference_set(&self) -> GroupSet {
        let members: Vec<Element> = self.iter().collect();
        let mut out = GroupSet::empty(self.params);
        for &a in &members {
            for &b in &members {
                out.insert(self.params.sub(a, b));
            }
        }
        out
    }

    /// Lexicographic order of the ascending member lists.
    ///
    /// For equal-size sets this is decided by the lowest index in the
    /// symmetric difference: whichever set holds it is smaller.
    pub fn cmp_lex(&self, other: &GroupSet) -> Ordering {
        let mut a = self.indices();
        let mut b = other.indices();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) if x != y => return x.cmp(&y),
                _ => {}
            }
        }
    }
}

impl fmt::Debug for GroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|e| (e.x, e.y))).finish()
    }
}

impl fmt::Display for GroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}
