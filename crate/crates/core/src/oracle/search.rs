//! Brute-force partner searches.
//!
//! Both searches are deterministic and return the first solution of a fixed
//! branch order; the enumeration kernel implements the same orders on bit
//! masks and must agree with these results set for set.

use alloc::vec;
use alloc::vec::Vec;

use crate::charsum::zero_set;
use crate::error::{Error, Result};
use crate::group::GroupParams;
use crate::set::GroupSet;

/// Largest group order the single-set oracles accept.
pub const ORACLE_ORDER_CAP: u64 = 1 << 16;

fn check_cap(params: &GroupParams) -> Result<()> {
    if params.order() > ORACLE_ORDER_CAP {
        return Err(Error::Capacity { order: params.order(), cap: ORACLE_ORDER_CAP });
    }
    Ok(())
}

/// Some spectrum `B` of `A`, or `None` if `A` is not spectral.
///
/// `B` is a clique of size `|A|` in the graph on `G` joining `u, v` when
/// `u - v` lies in `Z_A`. The graph is a Cayley graph, so `0 in B` is assumed.
/// Vertices are branched in ascending index order (include first) and
/// subtrees are cut with a greedy colouring bound, so the answer is the
/// lexicographically first clique through `0`.
pub fn find_spectrum_bruteforce(a: &GroupSet) -> Result<Option<GroupSet>> {
    let params = a.params();
    check_cap(&params)?;
    let k = a.len();
    if k == 0 {
        return Ok(None);
    }
    let zeros = zero_set(a).elements();
    if zeros.len() + 1 < k {
        return Ok(None);
    }
    let search = CliqueSearch { params, zeros: &zeros, target: k };
    let mut clique = vec![0usize];
    let cand: Vec<usize> = zeros.indices().collect();
    if search.extend(&mut clique, &cand) {
        Ok(Some(GroupSet::from_indices(params, clique)))
    } else {
        Ok(None)
    }
}

struct CliqueSearch<'a> {
    params: GroupParams,
    zeros: &'a GroupSet,
    target: usize,
}

impl CliqueSearch<'_> {
    fn adjacent(&self, u: usize, v: usize) -> bool {
        let d = self.params.sub(self.params.element_at(u), self.params.element_at(v));
        self.zeros.contains(d)
    }

    fn colour_bound(&self, cand: &[usize]) -> usize {
        let mut uncoloured: Vec<usize> = cand.to_vec();
        let mut colours = 0;
        while !uncoloured.is_empty() {
            colours += 1;
            let mut class: Vec<usize> = Vec::new();
            uncoloured.retain(|&v| {
                if class.iter().any(|&w| self.adjacent(v, w)) {
                    true
                } else {
                    class.push(v);
                    false
                }
            });
        }
        colours
    }

    fn extend(&self, clique: &mut Vec<usize>, cand: &[usize]) -> bool {
        if clique.len() == self.target {
            return true;
        }
        if clique.len() + cand.len() < self.target {
            return false;
        }
        if clique.len() + self.colour_bound(cand) < self.target {
            return false;
        }
        for (i, &v) in cand.iter().enumerate() {
            let rest = &cand[i + 1..];
            if clique.len() + 1 + rest.len() < self.target {
                break;
            }
            let next: Vec<usize> = rest.iter().copied().filter(|&w| self.adjacent(v, w)).collect();
            clique.push(v);
            if self.extend(clique, &next) {
                return true;
            }
            clique.pop();
        }
        false
    }
}

/// Some tiling complement `T` of `A`, or `None` if `A` does not tile.
///
/// Exact cover of `G` by translates `A + g`. At each node the uncovered
/// element with the fewest compatible translates is covered next (scanning
/// stops early at a count of 0 or 1; ties go to the lowest index), and its
/// translates are tried in ascending order of `g`.
pub fn find_complement_bruteforce(a: &GroupSet) -> Result<Option<GroupSet>> {
    let params = a.params();
    check_cap(&params)?;
    let k = a.len();
    if k == 0 || !params.order().is_multiple_of(k as u64) {
        return Ok(None);
    }
    let cover = ExactCover {
        params,
        members: a.indices().collect(),
    };
    let mut covered = vec![false; params.size()];
    let mut chosen = Vec::new();
    if cover.solve(&mut covered, params.size(), &mut chosen) {
        Ok(Some(GroupSet::from_indices(params, chosen)))
    } else {
        Ok(None)
    }
}

struct ExactCover {
    params: GroupParams,
    members: Vec<usize>,
}

impl ExactCover {
    fn shifted(&self, a: usize, g: usize) -> usize {
        let p = &self.params;
        p.index(p.add(p.element_at(a), p.element_at(g)))
    }

    fn fits(&self, covered: &[bool], g: usize) -> bool {
        self.members.iter().all(|&a| !covered[self.shifted(a, g)])
    }

    /// Translates `g` with `e in A + g` that avoid `covered`, ascending.
    fn options(&self, covered: &[bool], e: usize) -> Vec<usize> {
        let p = &self.params;
        let target = p.element_at(e);
        let mut opts: Vec<usize> = self
            .members
            .iter()
            .map(|&a| p.index(p.sub(target, p.element_at(a))))
            .filter(|&g| self.fits(covered, g))
            .collect();
        opts.sort_unstable();
        opts
    }

    fn mark(&self, covered: &mut [bool], g: usize, on: bool) {
        for &a in &self.members {
            let i = self.shifted(a, g);
            covered[i] = on;
        }
    }

    fn solve(&self, covered: &mut [bool], uncovered: usize, chosen: &mut Vec<usize>) -> bool {
        if uncovered == 0 {
            return true;
        }
        let mut best: Option<Vec<usize>> = None;
        for e in 0..covered.len() {
            if covered[e] {
                continue;
            }
            let opts = self.options(covered, e);
            let better = best.as_ref().is_none_or(|b| opts.len() < b.len());
            if better {
                let stop = opts.len() <= 1;
                best = Some(opts);
                if stop {
                    break;
                }
            }
        }
        let Some(opts) = best else { return false };
        for g in opts {
            self.mark(covered, g, true);
            chosen.push(g);
            if self.solve(covered, uncovered - self.members.len(), chosen) {
                return true;
            }
            chosen.pop();
            self.mark(covered, g, false);
        }
        false
    }
}
