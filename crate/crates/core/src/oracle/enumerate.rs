//! Exhaustive subset enumeration on groups of order at most 32.
//!
//! Subsets are `u64` masks over element indices. The kernel reimplements the
//! zero test, both partner searches and the orbit test on masks; the searches
//! branch in exactly the order of [`find_spectrum_bruteforce`] and
//! [`find_complement_bruteforce`] and so return the same partners.
//!
//! Work is addressed by a flat index: the mask itself for a full scan, or a
//! rank within each requested size (ascending masks) for a filtered scan.
//! [`Kernel::scan`] covers any range of that index and reports merge exactly,
//! so the shard decomposition never shows in the result.
//!
//! [`find_spectrum_bruteforce`]: super::find_spectrum_bruteforce
//! [`find_complement_bruteforce`]: super::find_complement_bruteforce

use core::cmp::Ordering;
use core::ops::Range;
use core::time::Duration;

use alloc::vec;
use alloc::vec::Vec;

use crate::charsum::{zero_set, ZeroProfile};
use crate::constructions::{complement_from_spectrum, spectrum_from_tile};
use crate::error::{Error, Result};
use crate::group::GroupParams;
use crate::set::GroupSet;
use crate::structure::{classify_size, exponent_from_levels, SizeClass};

/// Largest order enumerated over the full power set.
pub const ENUMERATION_CAP: u64 = 27;
/// Largest order enumerated when a size filter is given.
pub const ENUMERATION_FILTERED_CAP: u64 = 32;
/// At most this many offending sets are kept per list; totals are exact.
pub const LIST_CAP: usize = 1024;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Only subsets of these sizes. Sorted and deduplicated by the scan.
    pub size_filter: Option<Vec<usize>>,
    /// Examine one set per orbit under `e -> a e + g`.
    pub use_canonical: bool,
    /// Run the spectrum search on sets whose size alone rules out a spectrum,
    /// instead of rejecting them by the size witness.
    pub search_obstructed: bool,
    /// Build a partner for every tile and spectral set and verify it.
    pub check_constructions: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    /// `p^s` does not divide `|A|` for the certified exponent `s`.
    Divisibility,
    /// Spectral, larger than `p^n`, and not the whole group.
    Pigeonhole,
    /// The size witness rejected a set that has a spectrum.
    WitnessUnsound,
    SpectrumConstruction,
    ComplementConstruction,
    /// `Z_A ∪ Z_T` misses a nonzero element for a constructed tiling pair.
    ZeroCover,
}

impl ViolationKind {
    pub fn id(&self) -> &'static str {
        match self {
            ViolationKind::Divisibility => "divisibility",
            ViolationKind::Pigeonhole => "pigeonhole",
            ViolationKind::WitnessUnsound => "witness-unsound",
            ViolationKind::SpectrumConstruction => "spectrum-construction",
            ViolationKind::ComplementConstruction => "complement-construction",
            ViolationKind::ZeroCover => "zero-cover",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub set: GroupSet,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SizeTally {
    pub size: usize,
    pub examined: u64,
    pub tiles: u64,
    pub spectral: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationReport {
    pub params: GroupParams,
    pub size_filter: Option<Vec<usize>>,
    pub use_canonical: bool,
    pub search_obstructed: bool,
    pub check_constructions: bool,
    /// Subsets visited, including the empty set and non-canonical sets.
    pub subsets_examined: u64,
    /// Sets actually classified: orbit representatives in canonical mode.
    pub orbits_examined: u64,
    pub tiles: u64,
    pub spectral: u64,
    /// Sets declared non-spectral by their size alone.
    pub witness_rejected: u64,
    pub constructions_checked: u64,
    /// Ascending by size; sizes with nothing classified are omitted.
    pub per_size: Vec<SizeTally>,
    /// Sets where the tile and spectral verdicts differ.
    pub mismatches: Vec<GroupSet>,
    pub mismatch_count: u64,
    pub violations: Vec<Violation>,
    pub violation_count: u64,
    pub wall_time: Option<Duration>,
}

impl EnumerationReport {
    fn new(params: GroupParams, opts: &EnumerationOptions) -> Self {
        EnumerationReport {
            params,
            size_filter: opts.size_filter.clone(),
            use_canonical: opts.use_canonical,
            search_obstructed: opts.search_obstructed,
            check_constructions: opts.check_constructions,
            subsets_examined: 0,
            orbits_examined: 0,
            tiles: 0,
            spectral: 0,
            witness_rejected: 0,
            constructions_checked: 0,
            per_size: Vec::new(),
            mismatches: Vec::new(),
            mismatch_count: 0,
            violations: Vec::new(),
            violation_count: 0,
            wall_time: None,
        }
    }

    /// True when no mismatch and no violation was seen.
    pub fn is_clean(&self) -> bool {
        self.mismatch_count == 0 && self.violation_count == 0
    }

    /// Adds `other` into `self`. Lists are re-sorted and truncated.
    pub fn merge(&mut self, other: EnumerationReport) {
        self.subsets_examined += other.subsets_examined;
        self.orbits_examined += other.orbits_examined;
        self.tiles += other.tiles;
        self.spectral += other.spectral;
        self.witness_rejected += other.witness_rejected;
        self.constructions_checked += other.constructions_checked;
        for t in other.per_size {
            match self.per_size.binary_search_by_key(&t.size, |x| x.size) {
                Ok(i) => {
                    let s = &mut self.per_size[i];
                    s.examined += t.examined;
                    s.tiles += t.tiles;
                    s.spectral += t.spectral;
                }
                Err(i) => self.per_size.insert(i, t),
            }
        }
        self.mismatches.extend(other.mismatches);
        self.mismatch_count += other.mismatch_count;
        self.violations.extend(other.violations);
        self.violation_count += other.violation_count;
        self.wall_time = match (self.wall_time, other.wall_time) {
            (Some(a), Some(b)) => Some(a.max(b)),
            (a, b) => a.or(b),
        };
        self.finalize();
    }

    fn finalize(&mut self) {
        self.mismatches.sort_by(|a, b| a.cmp_lex(b));
        self.mismatches.truncate(LIST_CAP);
        self.violations.sort_by(|a, b| a.kind.cmp(&b.kind).then_with(|| a.set.cmp_lex(&b.set)));
        self.violations.truncate(LIST_CAP);
    }

    fn tally(&mut self, size: usize) -> &mut SizeTally {
        let i = match self.per_size.binary_search_by_key(&size, |x| x.size) {
            Ok(i) => i,
            Err(i) => {
                self.per_size.insert(i, SizeTally { size, ..SizeTally::default() });
                i
            }
        };
        &mut self.per_size[i]
    }

    fn violation(&mut self, kind: ViolationKind, set: GroupSet) {
        self.violation_count += 1;
        if self.violations.len() < 4 * LIST_CAP {
            self.violations.push(Violation { kind, set });
        }
    }
}

/// Splits `0..total` into `shards` contiguous ranges of near-equal length.
pub fn shard_ranges(total: u64, shards: usize) -> Vec<Range<u64>> {
    let shards = shards.max(1) as u64;
    (0..shards)
        .map(|k| (total * k / shards)..(total * (k + 1) / shards))
        .filter(|r| !r.is_empty())
        .collect()
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// The `rank`-th `k`-subset of `0..n` in ascending mask order.
fn unrank(mut rank: u64, k: u32, n: u32) -> u64 {
    let mut mask = 0u64;
    let mut hi = n;
    for i in (1..=k).rev() {
        let mut c = hi;
        while c > 0 && binomial(u64::from(c - 1), u64::from(i)) > rank {
            c -= 1;
        }
        // Largest c - 1 with C(c - 1, i) <= rank.
        let pos = c - 1;
        rank -= binomial(u64::from(pos), u64::from(i));
        mask |= 1 << pos;
        hi = pos;
    }
    mask
}

/// Next mask with the same popcount.
fn gosper(m: u64) -> u64 {
    let c = m & m.wrapping_neg();
    let r = m + c;
    (((r ^ m) >> 2) / c) | r
}

fn low_bits(k: u32) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Ascending-member-list order on masks.
fn cmp_masks(a: u64, b: u64) -> Ordering {
    let d = a ^ b;
    if d == 0 {
        return Ordering::Equal;
    }
    let low = d.trailing_zeros();
    let above = !low_bits(low + 1);
    if a >> low & 1 == 1 {
        // `a` holds the smaller element unless `b` stops there.
        if b & above != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else if a & above != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Precomputed tables for one group.
pub struct Kernel {
    params: GroupParams,
    size: usize,
    p: u32,
    rep_count: usize,
    /// `[rep][chunk][byte]`: 8-bit slice counters packed by inner product value.
    chunk_tables: Vec<[u128; 256]>,
    chunks: usize,
    block_bits: u32,
    block_mask: u128,
    class_masks: Vec<u64>,
    add: Vec<u8>,
    neg: Vec<u8>,
    unit_perms: Vec<Vec<u8>>,
}

impl Kernel {
    pub fn new(params: GroupParams) -> Result<Self> {
        let order = params.order();
        if order > ENUMERATION_FILTERED_CAP {
            return Err(Error::Capacity { order, cap: ENUMERATION_FILTERED_CAP });
        }
        let size = params.size();
        let chunks = size.div_ceil(8);
        let rep_count = params.rep_count();
        let mut chunk_tables = Vec::with_capacity(rep_count * chunks);
        for rep in params.reps() {
            let u = params.rep_element(rep);
            let shift: Vec<u32> =
                params.elements().map(|e| 8 * params.inner_product(e, u) as u32).collect();
            for c in 0..chunks {
                let mut table = [0u128; 256];
                for (byte, slot) in table.iter_mut().enumerate() {
                    *slot = (0..8)
                        .filter(|k| byte >> k & 1 == 1 && 8 * c + k < size)
                        .map(|k| 1u128 << shift[8 * c + k])
                        .sum();
                }
                chunk_tables.push(table);
            }
        }
        let class_masks = params
            .reps()
            .map(|r| params.class_members(r).into_iter().fold(0u64, |m, e| m | 1 << params.index(e)))
            .collect();
        let mut add = vec![0u8; size * size];
        for i in 0..size {
            for j in 0..size {
                add[i * size + j] = params.index(params.add(params.element_at(i), params.element_at(j))) as u8;
            }
        }
        let neg = (0..size).map(|i| params.index(params.neg(params.element_at(i))) as u8).collect();
        let unit_perms = params
            .units()
            .map(|a| (0..size).map(|i| params.index(params.scale(a, params.element_at(i))) as u8).collect())
            .collect();
        let block_bits = 8 * params.top() as u32;
        Ok(Kernel {
            params,
            size,
            p: params.p(),
            rep_count,
            chunk_tables,
            chunks,
            block_bits,
            block_mask: (1u128 << block_bits) - 1,
            class_masks,
            add,
            neg,
            unit_perms,
        })
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    /// Zero set of `mask`, bit `k` for rep id `k`.
    pub fn profile_bits(&self, mask: u64) -> u64 {
        let mut out = 0u64;
        for r in 0..self.rep_count {
            let tables = &self.chunk_tables[r * self.chunks..(r + 1) * self.chunks];
            let mut counts = 0u128;
            for (c, table) in tables.iter().enumerate() {
                counts += table[(mask >> (8 * c) & 0xff) as usize];
            }
            let first = counts & self.block_mask;
            let even = (1..self.p).all(|j| (counts >> (self.block_bits * j)) & self.block_mask == first);
            if even {
                out |= 1 << r;
            }
        }
        out
    }

    /// The group elements in the zero set described by `profile`.
    pub fn zero_mask(&self, profile: u64) -> u64 {
        bits(profile).fold(0, |m, r| m | self.class_masks[r])
    }

    fn shift(&self, mask: u64, g: usize) -> u64 {
        let row = &self.add[g * self.size..(g + 1) * self.size];
        bits(mask).fold(0, |m, i| m | 1 << row[i])
    }

    fn negate(&self, mask: u64) -> u64 {
        bits(mask).fold(0, |m, i| m | 1 << self.neg[i])
    }

    /// `A + g` as a mask.
    pub fn translate(&self, mask: u64, g: usize) -> u64 {
        self.shift(mask, g)
    }

    /// Same result as the general exact-cover search.
    pub fn find_complement(&self, mask: u64) -> Option<u64> {
        let k = mask.count_ones() as usize;
        if k == 0 || !self.size.is_multiple_of(k) {
            return None;
        }
        let translates: Vec<u64> = (0..self.size).map(|g| self.shift(mask, g)).collect();
        let neg = self.negate(mask);
        let hitting: Vec<u64> = (0..self.size).map(|e| self.shift(neg, e)).collect();
        let cover = MaskCover { full: low_bits(self.size as u32), translates, hitting };
        let mut chosen = 0u64;
        cover.solve(0, &mut chosen).then_some(chosen)
    }

    /// Same result as the general clique search, given `profile_bits(mask)`.
    pub fn find_spectrum(&self, mask: u64, profile: u64) -> Option<u64> {
        let k = mask.count_ones();
        if k == 0 {
            return None;
        }
        let zeros = self.zero_mask(profile);
        if zeros.count_ones() + 1 < k {
            return None;
        }
        let adj: Vec<u64> = (0..self.size).map(|v| self.shift(zeros, v)).collect();
        let search = MaskClique { adj, target: k };
        let mut clique = 1u64;
        search.extend(&mut clique, 1, zeros).then_some(clique)
    }

    /// Whether `mask` is least in its orbit, as [`super::is_canonical`].
    pub fn is_canonical(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        if mask & 1 == 0 {
            return false;
        }
        for perm in &self.unit_perms {
            let scaled = bits(mask).fold(0u64, |m, i| m | 1 << perm[i]);
            for e in bits(scaled) {
                let cand = self.shift(scaled, self.neg[e] as usize);
                if cmp_masks(cand, mask) == Ordering::Less {
                    return false;
                }
            }
        }
        true
    }

    fn sizes(&self, opts: &EnumerationOptions) -> Option<Vec<usize>> {
        opts.size_filter.as_ref().map(|s| {
            let mut s = s.clone();
            s.sort_unstable();
            s.dedup();
            s
        })
    }

    fn check_options(&self, opts: &EnumerationOptions) -> Result<()> {
        let order = self.params.order();
        match self.sizes(opts) {
            None if order > ENUMERATION_CAP => Err(Error::Capacity { order, cap: ENUMERATION_CAP }),
            Some(sizes) => match sizes.iter().find(|&&k| k > self.size) {
                Some(&k) => Err(Error::OutOfRange { what: "size", value: k as u64, bound: order + 1 }),
                None => Ok(()),
            },
            None => Ok(()),
        }
    }

    /// Length of the flat work index for `opts`.
    pub fn work_len(&self, opts: &EnumerationOptions) -> Result<u64> {
        self.check_options(opts)?;
        Ok(match self.sizes(opts) {
            None => 1u64 << self.size,
            Some(sizes) => sizes.iter().map(|&k| binomial(self.size as u64, k as u64)).sum(),
        })
    }

    /// Masks addressed by `range` of the flat work index, in order.
    fn for_each_mask(&self, opts: &EnumerationOptions, range: Range<u64>, mut f: impl FnMut(u64)) {
        match self.sizes(opts) {
            None => range.for_each(f),
            Some(sizes) => {
                let mut base = 0u64;
                for k in sizes {
                    let count = binomial(self.size as u64, k as u64);
                    let lo = range.start.max(base);
                    let hi = range.end.min(base + count);
                    if lo < hi {
                        let mut m = unrank(lo - base, k as u32, self.size as u32);
                        for step in lo..hi {
                            f(m);
                            if step + 1 < hi {
                                m = gosper(m);
                            }
                        }
                    }
                    base += count;
                }
            }
        }
    }

    /// Classifies every set in `range` of the flat work index.
    pub fn scan(&self, range: Range<u64>, opts: &EnumerationOptions) -> Result<EnumerationReport> {
        let total = self.work_len(opts)?;
        let range = range.start.min(total)..range.end.min(total);
        let mut report = EnumerationReport::new(self.params, opts);
        let modulus = self.params.modulus();
        self.for_each_mask(opts, range, |mask| {
            report.subsets_examined += 1;
            if opts.use_canonical && !self.is_canonical(mask) {
                return;
            }
            report.orbits_examined += 1;
            let k = mask.count_ones() as usize;
            report.tally(k).examined += 1;
            if k == 0 {
                return;
            }
            self.classify(mask, k, modulus, opts, &mut report);
        });
        report.finalize();
        Ok(report)
    }

    fn classify(&self, mask: u64, k: usize, modulus: u64, opts: &EnumerationOptions, report: &mut EnumerationReport) {
        let params = self.params;
        let set = || GroupSet::from_mask(params, mask);
        let profile = self.profile_bits(mask);
        let p = u64::from(self.p);

        let s = exponent_from_levels(
            params.n(),
            |i| (0..self.p).any(|c| profile >> (1 + i * self.p + c) & 1 == 1),
            |i| profile >> (1 + i * self.p) & 1 == 1,
        );
        if !(k as u64).is_multiple_of(p.pow(s)) {
            report.violation(ViolationKind::Divisibility, set());
        }

        let tiling = self.find_complement(mask);
        let obstructed = matches!(classify_size(k as u64, &params), Ok(SizeClass::MixedSize { .. }));
        let spectrum = if obstructed && !opts.search_obstructed {
            report.witness_rejected += 1;
            None
        } else {
            self.find_spectrum(mask, profile)
        };

        if tiling.is_some() {
            report.tiles += 1;
            report.tally(k).tiles += 1;
        }
        if spectrum.is_some() {
            report.spectral += 1;
            report.tally(k).spectral += 1;
            if obstructed {
                report.violation(ViolationKind::WitnessUnsound, set());
            }
            if k as u64 > modulus && k != self.size {
                report.violation(ViolationKind::Pigeonhole, set());
            }
        }
        if tiling.is_some() != spectrum.is_some() {
            report.mismatch_count += 1;
            if report.mismatches.len() < 4 * LIST_CAP {
                report.mismatches.push(set());
            }
        }

        if !opts.check_constructions {
            return;
        }
        if let Some(t) = tiling {
            report.constructions_checked += 1;
            let t = GroupSet::from_mask(params, t);
            if spectrum_from_tile(&set(), Some(&t)).is_err() {
                report.violation(ViolationKind::SpectrumConstruction, set());
            }
        }
        if let Some(b) = spectrum {
            report.constructions_checked += 1;
            let a = set();
            let b = GroupSet::from_mask(params, b);
            match complement_from_spectrum(&a, Some(&b)) {
                Ok(c) => {
                    if !zero_set(&a).covers_with(&zero_set(&c.partner)) {
                        report.violation(ViolationKind::ZeroCover, a);
                    }
                }
                Err(_) => report.violation(ViolationKind::ComplementConstruction, a),
            }
        }
    }

    /// Zero profile of `mask` as a [`ZeroProfile`].
    pub fn zero_profile(&self, mask: u64) -> ZeroProfile {
        ZeroProfile::from_bits(self.params, self.profile_bits(mask))
    }
}

struct MaskCover {
    full: u64,
    translates: Vec<u64>,
    /// `hitting[e]`: translates `g` with `e in A + g`.
    hitting: Vec<u64>,
}

impl MaskCover {
    fn options(&self, covered: u64, e: usize) -> u64 {
        bits(self.hitting[e]).filter(|&g| self.translates[g] & covered == 0).fold(0, |m, g| m | 1 << g)
    }

    fn solve(&self, covered: u64, chosen: &mut u64) -> bool {
        if covered == self.full {
            return true;
        }
        let mut best: Option<u64> = None;
        for e in bits(self.full & !covered) {
            let opts = self.options(covered, e);
            if best.is_none_or(|b| opts.count_ones() < b.count_ones()) {
                best = Some(opts);
                if opts.count_ones() <= 1 {
                    break;
                }
            }
        }
        let Some(opts) = best else { return false };
        for g in bits(opts) {
            *chosen |= 1 << g;
            if self.solve(covered | self.translates[g], chosen) {
                return true;
            }
            *chosen &= !(1 << g);
        }
        false
    }
}

struct MaskClique {
    adj: Vec<u64>,
    target: u32,
}

impl MaskClique {
    fn colour_bound(&self, cand: u64) -> u32 {
        let mut uncoloured = cand;
        let mut colours = 0;
        while uncoloured != 0 {
            colours += 1;
            let mut avail = uncoloured;
            while avail != 0 {
                let v = avail.trailing_zeros() as usize;
                uncoloured &= !(1 << v);
                avail &= !(1 << v) & !self.adj[v];
            }
        }
        colours
    }

    fn extend(&self, clique: &mut u64, len: u32, cand: u64) -> bool {
        if len == self.target {
            return true;
        }
        if len + cand.count_ones() < self.target {
            return false;
        }
        if len + self.colour_bound(cand) < self.target {
            return false;
        }
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if len + 1 + rest.count_ones() < self.target {
                break;
            }
            *clique |= 1 << v;
            if self.extend(clique, len + 1, rest & self.adj[v]) {
                return true;
            }
            *clique &= !(1 << v);
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{canonicalize, find_complement_bruteforce, find_spectrum_bruteforce};

    #[test]
    fn unrank_matches_gosper() {
        let mut m = low_bits(3);
        for r in 0..binomial(7, 3) {
            assert_eq!(unrank(r, 3, 7), m);
            m = gosper(m);
        }
        assert_eq!(unrank(0, 0, 5), 0);
    }

    #[test]
    fn mask_order_matches_set_order() {
        let g = GroupParams::new(2, 2).unwrap();
        for a in 0u64..256 {
            for b in 0u64..256 {
                let sa = GroupSet::from_mask(g, a);
                let sb = GroupSet::from_mask(g, b);
                assert_eq!(cmp_masks(a, b), sa.cmp_lex(&sb));
            }
        }
    }

    #[test]
    fn shards_partition() {
        let r = shard_ranges(10, 4);
        assert_eq!(r, vec![0..2, 2..5, 5..7, 7..10]);
        assert_eq!(shard_ranges(2, 4).iter().map(|r| r.end - r.start).sum::<u64>(), 2);
        assert!(shard_ranges(0, 3).is_empty());
    }

    #[test]
    fn kernel_agrees_with_general_code() {
        for (p, n) in [(2, 1), (2, 2), (3, 1), (2, 3)] {
            let g = GroupParams::new(p, n).unwrap();
            let kern = Kernel::new(g).unwrap();
            let step = if g.size() > 8 { 37 } else { 1 };
            for mask in (0u64..1 << g.size()).step_by(step) {
                let a = GroupSet::from_mask(g, mask);
                assert_eq!(kern.zero_profile(mask), zero_set(&a));
                let spec = find_spectrum_bruteforce(&a).unwrap().map(|b| b.to_mask().unwrap());
                assert_eq!(kern.find_spectrum(mask, kern.profile_bits(mask)), spec, "{a}");
                let comp = find_complement_bruteforce(&a).unwrap().map(|t| t.to_mask().unwrap());
                assert_eq!(kern.find_complement(mask), comp, "{a}");
                assert_eq!(kern.is_canonical(mask), canonicalize(&a) == a, "{a}");
            }
        }
    }

    #[test]
    fn small_counts() {
        let g = GroupParams::new(2, 1).unwrap();
        let kern = Kernel::new(g).unwrap();
        let opts = EnumerationOptions { check_constructions: true, ..Default::default() };
        let rep = kern.scan(0..16, &opts).unwrap();
        assert_eq!((rep.subsets_examined, rep.tiles, rep.spectral), (16, 11, 11));
        assert!(rep.is_clean());
    }

    #[test]
    fn split_scans_merge_to_whole() {
        let g = GroupParams::new(3, 1).unwrap();
        let kern = Kernel::new(g).unwrap();
        let opts = EnumerationOptions {
            size_filter: Some(vec![3, 2, 3]),
            check_constructions: true,
            ..Default::default()
        };
        let total = kern.work_len(&opts).unwrap();
        assert_eq!(total, 84 + 36);
        let whole = kern.scan(0..total, &opts).unwrap();
        let mut parts = kern.scan(0..0, &opts).unwrap();
        for r in shard_ranges(total, 7) {
            parts.merge(kern.scan(r, &opts).unwrap());
        }
        assert_eq!(parts, whole);
        assert_eq!(whole.witness_rejected, 36);
    }

    #[test]
    fn caps() {
        assert!(Kernel::new(GroupParams::new(2, 5).unwrap()).is_err());
        let kern = Kernel::new(GroupParams::new(2, 4).unwrap()).unwrap();
        assert!(kern.work_len(&EnumerationOptions::default()).is_err());
        let filtered = EnumerationOptions { size_filter: Some(vec![2]), ..Default::default() };
        assert_eq!(kern.work_len(&filtered).unwrap(), 496);
        let bad = EnumerationOptions { size_filter: Some(vec![33]), ..Default::default() };
        assert!(kern.work_len(&bad).is_err());
    }
}
