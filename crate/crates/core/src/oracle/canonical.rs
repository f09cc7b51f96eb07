use core::cmp::Ordering;

use crate::set::GroupSet;

/// Least set, in [`GroupSet::cmp_lex`] order, of the orbit of `A` under
/// `e -> a*e + g` (`a` a unit of `Z_{p^n}`, `g` in `G`).
///
/// Sets containing `0` precede all others, so only the translates that move
/// some member onto `0` are candidates.
pub fn canonicalize(a: &GroupSet) -> GroupSet {
    let params = a.params();
    let mut best: Option<GroupSet> = None;
    for unit in params.units() {
        let scaled = a.scale_translate(unit, crate::Element::ZERO).expect("unit");
        for e in scaled.iter() {
            let cand = scaled.translate(params.neg(e));
            if best.as_ref().is_none_or(|b| cand.cmp_lex(b) == Ordering::Less) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_else(|| a.clone())
}

pub fn is_canonical(a: &GroupSet) -> bool {
    canonicalize(a) == *a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Element, GroupParams};

    fn set(params: GroupParams, pts: &[(u32, u32)]) -> GroupSet {
        GroupSet::from_elements(params, pts.iter().map(|&(x, y)| Element::new(x, y))).unwrap()
    }

    #[test]
    fn examples() {
        let g = GroupParams::new(2, 2).unwrap();
        let a = set(g, &[(1, 2), (1, 3)]);
        assert_eq!(canonicalize(&a), set(g, &[(0, 0), (0, 1)]));
        assert_eq!(canonicalize(&GroupSet::full(g)), GroupSet::full(g));
        assert_eq!(canonicalize(&GroupSet::empty(g)), GroupSet::empty(g));
    }

    // Oracle: walk the whole orbit (all units x all translations).
    fn orbit_min(a: &GroupSet) -> GroupSet {
        let params = a.params();
        let mut best = a.clone();
        for unit in params.units() {
            for g in params.elements() {
                let img = a.scale_translate(unit, g).unwrap();
                if img.cmp_lex(&best) == Ordering::Less {
                    best = img;
                }
            }
        }
        best
    }

    #[test]
    fn matches_full_orbit_walk() {
        let g = GroupParams::new(2, 2).unwrap();
        for mask in 0u64..256 {
            let a = GroupSet::from_mask(g, mask);
            let c = canonicalize(&a);
            assert_eq!(c, orbit_min(&a));
            assert_eq!(canonicalize(&c), c);
        }
        let g = GroupParams::new(3, 1).unwrap();
        for mask in 0u64..512 {
            let a = GroupSet::from_mask(g, mask);
            assert_eq!(canonicalize(&a), orbit_min(&a));
        }
    }
}
