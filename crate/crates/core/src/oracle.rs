//! Ground truth: pair verifiers, brute-force partner searches, orbit
//! canonicalization and the exhaustive enumeration kernel.

mod canonical;
mod enumerate;
mod search;

use crate::charsum::zero_set;
use crate::group::Element;
use crate::set::GroupSet;

pub use canonical::{canonicalize, is_canonical};
pub use enumerate::{
    shard_ranges, EnumerationOptions, EnumerationReport, Kernel, SizeTally, Violation,
    ViolationKind, ENUMERATION_CAP, ENUMERATION_FILTERED_CAP,
};
pub use search::{find_complement_bruteforce, find_spectrum_bruteforce, ORACLE_ORDER_CAP};

/// Why a candidate pair fails its defining condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairViolation {
    ParamsMismatch,
    /// `|A| != |B|` for spectral pairs, `|A||T| != |G|` for tilings.
    Size { left: usize, right: usize },
    /// A difference that breaks the pair: outside `Z_A` (spectral) or shared
    /// by both difference sets (tiling).
    Difference(Element),
}

/// First reason `(A, B)` is not a spectral pair, scanning `B` in index order.
pub fn spectral_violation(a: &GroupSet, b: &GroupSet) -> Option<PairViolation> {
    if a.params() != b.params() {
        return Some(PairViolation::ParamsMismatch);
    }
    let (la, lb) = (a.len(), b.len());
    if la != lb {
        return Some(PairViolation::Size { left: la, right: lb });
    }
    let params = a.params();
    let zeros = zero_set(a);
    let members: alloc::vec::Vec<Element> = b.iter().collect();
    for (i, &lo) in members.iter().enumerate() {
        for &hi in &members[i + 1..] {
            let d = params.sub(hi, lo);
            if !zeros.contains_element(d) {
                return Some(PairViolation::Difference(d));
            }
        }
    }
    None
}

/// `|A| = |B|` and every nonzero difference of `B` lies in `Z_A`.
pub fn verify_spectral_pair(a: &GroupSet, b: &GroupSet) -> bool {
    spectral_violation(a, b).is_none()
}

/// First reason `(A, T)` is not a tiling pair: the lowest nonzero element of
/// `(A - A) ∩ (T - T)`.
pub fn tiling_violation(a: &GroupSet, t: &GroupSet) -> Option<PairViolation> {
    if a.params() != t.params() {
        return Some(PairViolation::ParamsMismatch);
    }
    let (la, lt) = (a.len(), t.len());
    if (la as u64) * (lt as u64) != a.params().order() {
        return Some(PairViolation::Size { left: la, right: lt });
    }
    let shared = a.difference_set().intersection(&t.difference_set()).expect("same params");
    let first = shared.iter().find(|e| !e.is_zero());
    first.map(PairViolation::Difference)
}

/// `|A||T| = |G|` and `(A - A) ∩ (T - T) = {0}`.
pub fn verify_tiling_pair(a: &GroupSet, t: &GroupSet) -> bool {
    tiling_violation(a, t).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupParams;

    fn set(params: GroupParams, pts: &[(u32, u32)]) -> GroupSet {
        GroupSet::from_elements(params, pts.iter().map(|&(x, y)| Element::new(x, y))).unwrap()
    }

    #[test]
    fn spectral_pair_examples() {
        let g = GroupParams::new(2, 2).unwrap();
        let a = set(g, &[(0, 0), (0, 1)]);
        assert!(verify_spectral_pair(&a, &set(g, &[(0, 0), (0, 2)])));
        let one = set(g, &[(1, 1)]);
        assert!(verify_spectral_pair(&one, &one));
        assert_eq!(
            spectral_violation(&a, &a),
            Some(PairViolation::Difference(Element::new(0, 1)))
        );
        assert_eq!(
            spectral_violation(&a, &one),
            Some(PairViolation::Size { left: 2, right: 1 })
        );
    }

    #[test]
    fn tiling_pair_examples() {
        let g = GroupParams::new(2, 2).unwrap();
        let a = set(g, &[(0, 0), (0, 1)]);
        assert!(verify_tiling_pair(&a, &set(g, &[(0, 0), (0, 2), (1, 0), (1, 2)])));
        assert!(verify_tiling_pair(&GroupSet::full(g), &set(g, &[(0, 0)])));
        assert_eq!(
            tiling_violation(&a, &set(g, &[(0, 0), (0, 1), (1, 0), (1, 1)])),
            Some(PairViolation::Difference(Element::new(0, 1)))
        );
        let other = GroupParams::new(2, 1).unwrap();
        assert_eq!(
            tiling_violation(&a, &GroupSet::full(other)),
            Some(PairViolation::ParamsMismatch)
        );
    }

    // Independent route: a tiling pair covers every element exactly once.
    #[test]
    fn tiling_matches_unique_sums() {
        let g = GroupParams::new(2, 2).unwrap();
        for am in 1u64..256 {
            let a = GroupSet::from_mask(g, am);
            if 8 % a.len() != 0 {
                continue;
            }
            for tm in 1u64..256 {
                let t = GroupSet::from_mask(g, tm);
                let mut hits = [0u32; 8];
                for x in a.iter() {
                    for y in t.iter() {
                        hits[g.index(g.add(x, y))] += 1;
                    }
                }
                let unique = hits.iter().all(|&h| h == 1);
                assert_eq!(verify_tiling_pair(&a, &t), unique, "A={a} T={t}");
            }
        }
    }
}
