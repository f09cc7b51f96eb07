//! Exact arithmetic in `Z[zeta]`, `zeta` a primitive `p^n`-th root of unity.
//!
//! Elements are integer vectors of length `phi(p^n) = p^(n-1)(p-1)` holding
//! the coefficients of `1, X, ..., X^(phi-1)` modulo
//! `Phi_{p^n}(X) = sum_{j<p} X^(j p^(n-1))`. That basis is a `Z`-basis of the
//! ring, so the zero element has exactly one representation.

use alloc::vec;
use alloc::vec::Vec;

use crate::group::{Element, GroupParams};
use crate::set::GroupSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    p: u32,
    n: u32,
    coeffs: Vec<i64>,
}

impl CyclotomicInt {
    pub fn zero(params: &GroupParams) -> Self {
        let degree = (params.modulus() - params.top()) as usize;
        CyclotomicInt { p: params.p(), n: params.n(), coeffs: vec![0; degree] }
    }

    /// Reduces `sum_e weights[e] X^e`, `e < p^n`, into the canonical basis.
    pub fn from_exponent_weights(params: &GroupParams, weights: &[i64]) -> Self {
        let m = params.modulus() as usize;
        assert_eq!(weights.len(), m, "one weight per exponent in [0, p^n)");
        let q = params.top() as usize;
        let degree = m - q;
        let p = params.p() as usize;
        let mut coeffs = weights[..degree].to_vec();
        // X^(q(p-1)) = -(1 + X^q + ... + X^(q(p-2))), applied to X^e for e >= degree.
        for (e, &w) in weights.iter().enumerate().skip(degree) {
            if w == 0 {
                continue;
            }
            let base = e - degree;
            for j in 0..p - 1 {
                coeffs[base + j * q] -= w;
            }
        }
        CyclotomicInt { p: params.p(), n: params.n(), coeffs }
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The integer this element equals, if it lies in `Z`.
    pub fn as_integer(&self) -> Option<i64> {
        let (&c0, rest) = self.coeffs.split_first()?;
        rest.iter().all(|&c| c == 0).then_some(c0)
    }

    pub fn add_assign(&mut self, other: &CyclotomicInt) {
        assert_eq!((self.p, self.n), (other.p, other.n));
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    /// `self * zeta^k`.
    pub fn mul_root_power(&self, params: &GroupParams, k: u64) -> CyclotomicInt {
        let m = params.modulus();
        let mut weights = vec![0i64; m as usize];
        for (e, &c) in self.coeffs.iter().enumerate() {
            weights[((e as u64 + k) % m) as usize] += c;
        }
        CyclotomicInt::from_exponent_weights(params, &weights)
    }
}

/// `chi_u(A)` as an exact cyclotomic integer.
pub fn char_value_exact(a: &GroupSet, u: Element) -> CyclotomicInt {
    let params = a.params();
    let mut weights = vec![0i64; params.modulus() as usize];
    for e in a.iter() {
        weights[params.inner_product(e, u) as usize] += 1;
    }
    CyclotomicInt::from_exponent_weights(&params, &weights)
}

/// `chi_u(A)` for every `u`, indexed by element index.
pub fn character_table(a: &GroupSet) -> Vec<CyclotomicInt> {
    let params = a.params();
    params.elements().map(|u| char_value_exact(a, u)).collect()
}

/// Inverts a full character table: `|G| 1_A(g) = sum_u chi_u(A) zeta^(-<u,g>)`.
///
/// Returns `None` unless every reconstructed value is exactly `0` or `|G|`.
pub fn reconstruct_indicator(params: &GroupParams, table: &[CyclotomicInt]) -> Option<GroupSet> {
    if table.len() != params.size() {
        return None;
    }
    let m = params.modulus();
    let order = params.order() as i64;
    let mut out = GroupSet::empty(*params);
    for g in params.elements() {
        let mut acc = CyclotomicInt::zero(params);
        for (k, chi) in table.iter().enumerate() {
            let u = params.element_at(k);
            let back = (m - params.inner_product(u, g)) % m;
            acc.add_assign(&chi.mul_root_power(params, back));
        }
        match acc.as_integer()? {
            0 => {}
            v if v == order => {
                out.insert(g);
            }
            _ => return None,
        }
    }
    Some(out)
}

/// Fourier inversion round trip: rebuild `A` from its character table.
pub fn inversion_check(a: &GroupSet) -> bool {
    let params = a.params();
    reconstruct_indicator(&params, &character_table(a)).as_ref() == Some(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charsum::is_zero_equidist;

    fn set(params: GroupParams, pts: &[(u32, u32)]) -> GroupSet {
        GroupSet::from_elements(params, pts.iter().map(|&(x, y)| Element::new(x, y))).unwrap()
    }

    #[test]
    fn char_value_examples() {
        let g = GroupParams::new(2, 2).unwrap();
        assert!(char_value_exact(&GroupSet::empty(g), Element::new(0, 1)).is_zero());

        let g1 = GroupParams::new(2, 1).unwrap();
        let a = set(g1, &[(0, 0), (0, 1)]);
        assert!(char_value_exact(&a, Element::new(0, 1)).is_zero());

        // 1 + zeta mod X^2 + 1 stays (1, 1).
        let a = set(g, &[(0, 0), (0, 1)]);
        assert_eq!(char_value_exact(&a, Element::new(0, 1)).coefficients(), [1, 1]);
    }

    #[test]
    fn reduction_hand_checks() {
        // Z[zeta_9]: phi = 6, X^6 = -1 - X^3, so X^8 = -X^2 - X^5.
        let g = GroupParams::new(3, 2).unwrap();
        let mut w = vec![0i64; 9];
        w[8] = 1;
        let z = CyclotomicInt::from_exponent_weights(&g, &w);
        assert_eq!(z.coefficients(), [0, 0, -1, 0, 0, -1]);
        // 1 + zeta^3 + zeta^6 = 0.
        let mut w = vec![0i64; 9];
        w[0] = 1;
        w[3] = 1;
        w[6] = 1;
        assert!(CyclotomicInt::from_exponent_weights(&g, &w).is_zero());
    }

    #[test]
    fn root_power_cycles() {
        let g = GroupParams::new(3, 2).unwrap();
        let mut w = vec![0i64; 9];
        w[1] = 2;
        w[4] = -1;
        let z = CyclotomicInt::from_exponent_weights(&g, &w);
        assert_eq!(z.mul_root_power(&g, 9), z);
        assert_eq!(z.mul_root_power(&g, 4).mul_root_power(&g, 5), z);
    }

    #[test]
    fn counting_agrees_with_cyclotomic_in_z2z4() {
        let g = GroupParams::new(2, 2).unwrap();
        for mask in 0u64..256 {
            let a = GroupSet::from_mask(g, mask);
            for u in g.elements() {
                assert_eq!(is_zero_equidist(&a, u), char_value_exact(&a, u).is_zero());
            }
        }
    }

    #[test]
    fn inversion_round_trips() {
        let g = GroupParams::new(2, 2).unwrap();
        assert!(inversion_check(&GroupSet::empty(g)));
        for mask in 0u64..256 {
            assert!(inversion_check(&GroupSet::from_mask(g, mask)));
        }
    }

    #[test]
    fn corrupted_table_is_rejected() {
        let g = GroupParams::new(3, 1).unwrap();
        let a = set(g, &[(0, 0), (1, 2), (2, 1)]);
        let mut table = character_table(&a);
        let one = CyclotomicInt::from_exponent_weights(&g, &[1, 0, 0]);
        table[4].add_assign(&one);
        assert_ne!(reconstruct_indicator(&g, &table).as_ref(), Some(&a));
        table.pop();
        assert_eq!(reconstruct_indicator(&g, &table), None);
    }
}
