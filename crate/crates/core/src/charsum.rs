//! Character sums `chi_u(A) = sum_{a in A} zeta^<a,u>` and zero sets.
//!
//! The zero test here is the counting criterion: `chi_u(A)` vanishes exactly
//! when, for every residue `t mod p^(n-1)`, the slice sizes
//! `|{a in A : <a,u> = t + j p^(n-1)}|` agree for all `j`. It is pure integer
//! work. The cyclotomic evaluator in [`crate::cyclotomic`] is kept as an
//! independent check of the same predicate.

use alloc::vec;
use alloc::vec::Vec;

use crate::group::{ClassRep, Element, GroupParams};
use crate::set::GroupSet;

/// `counts[t] = |H_A(u, t)|` for every `t` in `Z_{p^n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceCounts {
    pub u: Element,
    pub counts: Vec<u64>,
}

impl SliceCounts {
    /// Counts agree along each residue class mod `p^(n-1)`.
    pub fn is_equidistributed(&self, params: &GroupParams) -> bool {
        let q = params.top() as usize;
        let p = params.p() as usize;
        (0..q).all(|t| {
            let first = self.counts[t];
            (1..p).all(|j| self.counts[t + j * q] == first)
        })
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

pub fn slice_counts(a: &GroupSet, u: Element) -> SliceCounts {
    let params = a.params();
    let mut counts = vec![0u64; params.modulus() as usize];
    for e in a.iter() {
        counts[params.inner_product(e, u) as usize] += 1;
    }
    SliceCounts { u, counts }
}

/// Exact test for `chi_u(A) = 0`.
pub fn is_zero_equidist(a: &GroupSet, u: Element) -> bool {
    slice_counts(a, u).is_equidistributed(&a.params())
}

/// The zero set of a subset, one flag per unit-equivalence class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZeroProfile {
    params: GroupParams,
    present: Vec<bool>,
}

impl ZeroProfile {
    pub fn empty(params: GroupParams) -> Self {
        ZeroProfile { params, present: vec![false; params.rep_count()] }
    }

    pub fn from_reps<I: IntoIterator<Item = ClassRep>>(params: GroupParams, reps: I) -> Self {
        let mut z = Self::empty(params);
        for r in reps {
            if let Some(id) = params.rep_id(r) {
                z.present[id] = true;
            }
        }
        z
    }

    /// Profile from a bit mask over rep ids (bit `k` is rep id `k`).
    pub fn from_bits(params: GroupParams, bits: u64) -> Self {
        let present = (0..params.rep_count()).map(|k| k < 64 && bits >> k & 1 == 1).collect();
        ZeroProfile { params, present }
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    pub fn contains(&self, rep: ClassRep) -> bool {
        self.params.rep_id(rep).is_some_and(|id| self.present[id])
    }

    /// Whether `chi_u(A) = 0`, read off the class of `u`. Never true for zero.
    pub fn contains_element(&self, u: Element) -> bool {
        self.contains(self.params.canonical_rep(u))
    }

    pub fn has_unit_axis(&self) -> bool {
        self.present[0]
    }

    pub fn has_mixed(&self, c: u32, level: u32) -> bool {
        self.contains(ClassRep::Mixed { c, level })
    }

    /// Any `(c, p^level)` in the zero set, `c = 0` included.
    pub fn level_has_zero(&self, level: u32) -> bool {
        (0..self.params.p()).any(|c| self.has_mixed(c, level))
    }

    /// All `(c, p^level)`, `c` in `Z_p`, are in the zero set.
    pub fn level_full(&self, level: u32) -> bool {
        (0..self.params.p()).all(|c| self.has_mixed(c, level))
    }

    /// `I = {i : (0, p^i) in Z_A}`, ascending.
    pub fn index_set(&self) -> Vec<u32> {
        (0..self.params.n()).filter(|&i| self.has_mixed(0, i)).collect()
    }

    /// Present representatives in report order: `(1,0)`, then `(c, p^i)` by `(i, c)`.
    pub fn reps(&self) -> impl Iterator<Item = ClassRep> + '_ {
        self.present
            .iter()
            .enumerate()
            .filter(|(_, &on)| on)
            .map(move |(id, _)| self.params.rep_at(id))
    }

    pub fn len(&self) -> usize {
        self.present.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.present.iter().any(|&b| b)
    }

    /// Number of group elements in the zero set.
    pub fn element_count(&self) -> usize {
        self.elements().len()
    }

    /// The zero set as a set of elements.
    pub fn elements(&self) -> GroupSet {
        let mut out = GroupSet::empty(self.params);
        for r in self.reps() {
            for e in self.params.class_members(r) {
                out.insert(e);
            }
        }
        out
    }

    /// Whether every nonzero element lies in `self` or `other`.
    pub fn covers_with(&self, other: &ZeroProfile) -> bool {
        self.params == other.params
            && self.present.iter().zip(&other.present).all(|(&a, &b)| a || b)
    }
}

/// Zero set of `A`, testing one representative per class.
pub fn zero_set(a: &GroupSet) -> ZeroProfile {
    let params = a.params();
    let mut z = ZeroProfile::empty(params);
    for (id, rep) in params.reps().enumerate() {
        z.present[id] = is_zero_equidist(a, params.rep_element(rep));
    }
    z
}
