//! Batch drivers: the sharded enumeration and the seeded oracle comparison.

use std::time::Instant;

use fuglede_core::constructions::span;
use fuglede_core::oracle::{shard_ranges, EnumerationOptions, EnumerationReport, Kernel, ORACLE_ORDER_CAP};
use fuglede_core::{char_value_exact, is_zero_equidist, Element, Error, GroupParams, GroupSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Runs the enumeration over `shards` independent ranges on the rayon pool.
///
/// The merged report does not depend on `shards` or on the thread count,
/// apart from `wall_time`.
pub fn enumerate_and_check(params: GroupParams, opts: &EnumerationOptions, shards: usize) -> Result<EnumerationReport, Error> {
    let start = Instant::now();
    let kern = Kernel::new(params)?;
    let total = kern.work_len(opts)?;
    let parts: Vec<Result<EnumerationReport, Error>> =
        shard_ranges(total, shards).into_par_iter().map(|r| kern.scan(r, opts)).collect();
    let mut report = kern.scan(0..0, opts)?;
    for part in parts {
        report.merge(part?);
    }
    report.wall_time = Some(start.elapsed());
    Ok(report)
}

/// The generator behind every seeded sample: ChaCha8 keyed by `seed_from_u64`.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random subset: a fair coin per element, or a union of a few translates
/// of `{0, h, 2h, ..., (p-1)h}` or of a two-generator span. The structured
/// draws are where character sums vanish.
pub fn random_subset(rng: &mut impl Rng, params: GroupParams) -> GroupSet {
    let size = params.size();
    let pick = |rng: &mut dyn rand::RngCore| params.element_at(rng.gen_range(0..size));
    match rng.gen_range(0..3) {
        0 => GroupSet::from_indices(params, (0..size).filter(|_| rng.gen_bool(0.5))),
        kind => {
            let gens: Vec<Element> = (0..kind).map(|_| pick(rng)).collect();
            let block = span(params, &gens);
            let mut out = GroupSet::empty(params);
            for _ in 0..rng.gen_range(1..=4) {
                out = out.union(&block.translate(pick(rng))).expect("same group");
            }
            out
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompareReport {
    pub params: GroupParams,
    pub trials: u64,
    pub seed: u64,
    /// Trials where `chi_u(A) = 0`.
    pub zeros: u64,
    pub discrepancies: Vec<(GroupSet, Element)>,
}

impl CompareReport {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Counting test against exact cyclotomic evaluation on seeded `(A, u)` draws.
pub fn oracle_compare(params: GroupParams, trials: u64, seed: u64) -> Result<CompareReport, Error> {
    oracle_compare_with(params, trials, seed, is_zero_equidist)
}

/// As [`oracle_compare`], with the counting test replaced by `test`.
pub fn oracle_compare_with(
    params: GroupParams,
    trials: u64,
    seed: u64,
    test: impl Fn(&GroupSet, Element) -> bool,
) -> Result<CompareReport, Error> {
    if params.order() > ORACLE_ORDER_CAP {
        return Err(Error::Capacity { order: params.order(), cap: ORACLE_ORDER_CAP });
    }
    let mut rng = rng(seed);
    let mut report = CompareReport { params, trials, seed, zeros: 0, discrepancies: Vec::new() };
    for _ in 0..trials {
        let a = random_subset(&mut rng, params);
        let u = params.element_at(rng.gen_range(0..params.size()));
        let exact = char_value_exact(&a, u).is_zero();
        report.zeros += u64::from(exact);
        if test(&a, u) != exact {
            report.discrepancies.push((a, u));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampler_is_reproducible() {
        let g = GroupParams::new(3, 2).unwrap();
        let draw = |seed| {
            let mut r = rng(seed);
            (0..20).map(|_| random_subset(&mut r, g)).collect::<Vec<_>>()
        };
        assert_eq!(draw(7), draw(7));
        assert_ne!(draw(7), draw(8));
    }

    #[test]
    fn compare_finds_zeros_and_no_discrepancy() {
        let g = GroupParams::new(2, 3).unwrap();
        let rep = oracle_compare(g, 2000, 1).unwrap();
        assert!(rep.is_clean());
        assert!(rep.zeros > 100, "{}", rep.zeros);
        assert!(oracle_compare(g, 0, 1).unwrap().is_clean());
    }

    #[test]
    fn broken_counting_is_caught() {
        let g = GroupParams::new(2, 3).unwrap();
        // Compares only the first residue class.
        let broken = |a: &GroupSet, u: Element| {
            let c = fuglede_core::slice_counts(a, u);
            c.counts[0] == c.counts[g.top() as usize]
        };
        assert!(!oracle_compare_with(g, 500, 3, broken).unwrap().is_clean());
    }

    #[test]
    fn shard_count_does_not_matter() {
        let g = GroupParams::new(2, 2).unwrap();
        let opts = EnumerationOptions { check_constructions: true, ..Default::default() };
        let mut one = enumerate_and_check(g, &opts, 1).unwrap();
        let mut many = enumerate_and_check(g, &opts, 5).unwrap();
        one.wall_time = None;
        many.wall_time = None;
        assert_eq!(one, many);
    }
}
