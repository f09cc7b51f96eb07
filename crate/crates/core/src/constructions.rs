//! Explicit partners: a spectrum for every tile and a tiling complement for
//! every spectral set, each chosen by a case split on the zero sets.
//!
//! Every partner built here is a span `{sum s_k g_k : s_k in [0, p-1]}` of a
//! few generators read off the zero sets. Each construction records which
//! case fired in a [`CaseTrace`] and re-verifies its output before returning.
//!
//! Notation: `I = {i : (0, p^i) in Z_A}`, and `J` is the same index set for
//! the partner (`T` for a tile, `B` for a spectral set).

use core::fmt;

use alloc::vec::Vec;

use crate::arith::inverse_mod;
use crate::charsum::{zero_set, ZeroProfile};
use crate::error::{Error, InvalidInput, Result};
use crate::group::{Element, GroupParams};
use crate::oracle::{
    find_complement_bruteforce, find_spectrum_bruteforce, verify_spectral_pair,
    verify_tiling_pair,
};
use crate::set::GroupSet;
use crate::structure::{classify_size, SizeClass};

/// Largest group on which a missing partner is found by brute force.
pub const AUTO_SEARCH_CAP: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Singletons and the whole group.
    Trivial,
    /// Tile to spectrum, `|A| = p`.
    TileToSpectrumPrime,
    /// Tile to spectrum, `|A| = p^t`, `t >= 2`.
    TileToSpectrumPower,
    /// Spectral set with `|A| > p^n`.
    SpectralLarge,
    /// Spectral to tile, `|A| = p`.
    SpectralToTilePrime,
    /// Spectral to tile, `|A| = p^s`, `s >= 2`.
    SpectralToTilePower,
    /// `|A| = m p^s`, `2 <= m <= p-1`: never spectral.
    NonSpectralMixed,
}

impl Theorem {
    pub fn id(&self) -> &'static str {
        match self {
            Theorem::Trivial => "trivial",
            Theorem::TileToSpectrumPrime => "T2S-p",
            Theorem::TileToSpectrumPower => "T2S-pt",
            Theorem::SpectralLarge => "S2T-big",
            Theorem::SpectralToTilePrime => "S2T-p",
            Theorem::SpectralToTilePower => "S2T-ps",
            Theorem::NonSpectralMixed => "S2T-mps",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseId {
    Singleton,
    FullGroup,
    /// `|A| = p`: multiples of one zero.
    Direct,
    /// `|I| = t`: span of the axis zeros.
    FullIndexSet,
    Case1,
    Case2,
    Case3,
    Pigeonhole,
    SizeObstruction,
}

impl CaseId {
    pub fn id(&self) -> &'static str {
        match self {
            CaseId::Singleton => "singleton",
            CaseId::FullGroup => "full-group",
            CaseId::Direct => "direct",
            CaseId::FullIndexSet => "I-full",
            CaseId::Case1 => "Case1",
            CaseId::Case2 => "Case2",
            CaseId::Case3 => "Case3",
            CaseId::Pigeonhole => "pigeonhole",
            CaseId::SizeObstruction => "size-obstruction",
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessValue {
    Element(Element),
    Level(u32),
    Levels(Vec<u32>),
    Residue(u64),
    Elements(Vec<Element>),
}

impl fmt::Display for WitnessValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
            f.write_str("{")?;
            for (k, x) in xs.iter().enumerate() {
                if k > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")
        }
        match self {
            WitnessValue::Element(e) => write!(f, "{e}"),
            WitnessValue::Level(i) => write!(f, "{i}"),
            WitnessValue::Residue(r) => write!(f, "{r}"),
            WitnessValue::Levels(ls) => list(f, ls),
            WitnessValue::Elements(es) => list(f, es),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub name: &'static str,
    pub value: WitnessValue,
}

/// Which case produced a partner, and the data it consumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseTrace {
    pub theorem: Theorem,
    pub case: CaseId,
    pub witnesses: Vec<Witness>,
}

impl CaseTrace {
    fn new(theorem: Theorem, case: CaseId) -> Self {
        CaseTrace { theorem, case, witnesses: Vec::new() }
    }

    fn with(mut self, name: &'static str, value: WitnessValue) -> Self {
        self.witnesses.push(Witness { name, value });
        self
    }

    pub fn witness(&self, name: &str) -> Option<&WitnessValue> {
        self.witnesses.iter().find(|w| w.name == name).map(|w| &w.value)
    }
}

/// A constructed partner with its trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub partner: GroupSet,
    pub trace: CaseTrace,
}

/// Certificate that `|A| = m p^s` with `2 <= m <= p - 1`, so `A` has no spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SizeObstruction {
    pub p: u32,
    pub m: u64,
    pub s: u32,
}

pub fn nonspectral_size_witness(a: &GroupSet) -> Option<SizeObstruction> {
    let params = a.params();
    match classify_size(a.len() as u64, &params).ok()? {
        SizeClass::MixedSize { m, s } => Some(SizeObstruction { p: params.p(), m, s }),
        _ => None,
    }
}

/// `{sum s_k g_k : s_k in [0, p-1]}`.
pub fn span(params: GroupParams, generators: &[Element]) -> GroupSet {
    let mut out = GroupSet::singleton(params, Element::ZERO);
    for &g in generators {
        let mut next = GroupSet::empty(params);
        for base in out.iter() {
            let mut cur = base;
            for _ in 0..params.p() {
                next.insert(cur);
                cur = params.add(cur, g);
            }
        }
        out = next;
    }
    out
}

fn axis(params: &GroupParams, level: u32) -> Element {
    Element::new(0, params.pow(level) as u32)
}

fn mixed(params: &GroupParams, c: u32, level: u32) -> Element {
    Element::new(c, params.pow(level) as u32)
}

const UNIT_AXIS: Element = Element::new(1, 0);

fn check_params(a: &GroupSet, b: &GroupSet) -> Result<()> {
    if a.params() != b.params() {
        return Err(Error::ParamsMismatch { left: a.params(), right: b.params() });
    }
    Ok(())
}

fn auto_partner(
    a: &GroupSet,
    partner: &'static str,
    search: fn(&GroupSet) -> Result<Option<GroupSet>>,
    absent: InvalidInput,
) -> Result<GroupSet> {
    let order = a.params().order();
    if order > AUTO_SEARCH_CAP {
        return Err(Error::MissingPartner { partner, order, cap: AUTO_SEARCH_CAP });
    }
    search(a)?.ok_or(Error::InvalidInput(absent))
}

/// A spectrum for the tile `A`.
///
/// `tiling` is a complement of `A`; it is verified when given, and is only
/// consulted when `|A| = p^t` with `|I| = t - 1`. In that case a missing
/// complement is searched for on groups up to [`AUTO_SEARCH_CAP`].
pub fn spectrum_from_tile(a: &GroupSet, tiling: Option<&GroupSet>) -> Result<Construction> {
    let params = a.params();
    if let Some(t) = tiling {
        check_params(a, t)?;
        if !verify_tiling_pair(a, t) {
            return Err(InvalidInput::NotATile.into());
        }
    }
    if a.is_empty() {
        return Err(InvalidInput::EmptySet.into());
    }
    let built = if a.len() == 1 {
        Construction {
            partner: GroupSet::singleton(params, Element::ZERO),
            trace: CaseTrace::new(Theorem::Trivial, CaseId::Singleton),
        }
    } else if a.len() as u64 == params.order() {
        Construction {
            partner: GroupSet::full(params),
            trace: CaseTrace::new(Theorem::Trivial, CaseId::FullGroup),
        }
    } else {
        let t = match classify_size(a.len() as u64, &params)? {
            SizeClass::PurePower { s } => s,
            _ => return Err(InvalidInput::NotATile.into()),
        };
        let zeros = zero_set(a);
        if t == 1 {
            spectrum_prime(&params, &zeros)?
        } else {
            spectrum_power(a, t, &zeros, tiling)?
        }
    };
    if !verify_spectral_pair(a, &built.partner) {
        return Err(Error::ConstructionFailed { theorem: built.trace.theorem, case: built.trace.case });
    }
    Ok(built)
}

fn spectrum_prime(params: &GroupParams, zeros: &ZeroProfile) -> Result<Construction> {
    let u = params
        .elements()
        .skip(1)
        .find(|&u| zeros.contains_element(u))
        .ok_or(Error::InvalidInput(InvalidInput::NotATile))?;
    Ok(Construction {
        partner: span(*params, &[u]),
        trace: CaseTrace::new(Theorem::TileToSpectrumPrime, CaseId::Direct)
            .with("zero", WitnessValue::Element(u)),
    })
}

fn spectrum_power(
    a: &GroupSet,
    t: u32,
    zeros: &ZeroProfile,
    tiling: Option<&GroupSet>,
) -> Result<Construction> {
    let params = a.params();
    let theorem = Theorem::TileToSpectrumPower;
    let i_set = zeros.index_set();
    let axis_gens: Vec<Element> = i_set.iter().map(|&i| axis(&params, i)).collect();

    if i_set.len() == t as usize {
        return Ok(Construction {
            partner: span(params, &axis_gens),
            trace: CaseTrace::new(theorem, CaseId::FullIndexSet)
                .with("I", WitnessValue::Levels(i_set)),
        });
    }
    if i_set.len() + 1 != t as usize {
        return Err(InvalidInput::NotATile.into());
    }

    let owned;
    let tile_partner = match tiling {
        Some(tp) => tp,
        None => {
            owned = auto_partner(a, "tiling complement", find_complement_bruteforce, InvalidInput::NotATile)?;
            &owned
        }
    };
    let t_zeros = zero_set(tile_partner);
    let j_set = t_zeros.index_set();

    // Case 2: a zero (d, p^b_k), b_k in J, with every level of I below b_k full.
    for &bk in &j_set {
        let below_full = i_set.iter().filter(|&&ai| ai < bk).all(|&ai| zeros.level_full(ai));
        if !below_full {
            continue;
        }
        if let Some(d) = (0..params.p()).find(|&d| zeros.has_mixed(d, bk)) {
            let lead = mixed(&params, d, bk);
            let mut gens = alloc::vec![lead];
            gens.extend_from_slice(&axis_gens);
            return Ok(Construction {
                partner: span(params, &gens),
                trace: CaseTrace::new(theorem, CaseId::Case2)
                    .with("I", WitnessValue::Levels(i_set))
                    .with("J", WitnessValue::Levels(j_set))
                    .with("d", WitnessValue::Residue(u64::from(d)))
                    .with("b_k", WitnessValue::Level(bk)),
            });
        }
    }

    // Case 1 would give T a spectrum larger than T.
    for &ak in &i_set {
        let below_full = j_set.iter().filter(|&&bj| bj < ak).all(|&bj| t_zeros.level_full(bj));
        if below_full && (0..params.p()).any(|d| t_zeros.has_mixed(d, ak)) {
            return Err(Error::Contradiction { theorem, case: CaseId::Case1 });
        }
    }

    // Case 3: every mixed zero on both sides.
    let all_a = i_set.iter().all(|&i| zeros.level_full(i));
    let all_t = j_set.iter().all(|&j| t_zeros.level_full(j));
    if all_a && all_t {
        if t_zeros.has_unit_axis() {
            return Err(Error::Contradiction { theorem, case: CaseId::Case3 });
        }
        if zeros.has_unit_axis() {
            let mut gens = alloc::vec![UNIT_AXIS];
            gens.extend_from_slice(&axis_gens);
            return Ok(Construction {
                partner: span(params, &gens),
                trace: CaseTrace::new(theorem, CaseId::Case3)
                    .with("I", WitnessValue::Levels(i_set))
                    .with("J", WitnessValue::Levels(j_set)),
            });
        }
    }
    Err(InvalidInput::NoCaseMatched.into())
}

/// A tiling complement for the spectral set `A`.
///
/// `spectrum` is a spectrum of `A`; it is verified when given, and is only
/// consulted when `|A| = p^s`, `s >= 2`, and `|I| = s - 1`. A missing
/// spectrum is searched for on groups up to [`AUTO_SEARCH_CAP`].
pub fn complement_from_spectrum(a: &GroupSet, spectrum: Option<&GroupSet>) -> Result<Construction> {
    let params = a.params();
    if let Some(b) = spectrum {
        check_params(a, b)?;
        if !verify_spectral_pair(a, b) {
            return Err(InvalidInput::NotSpectral.into());
        }
    }
    if a.is_empty() {
        return Err(InvalidInput::EmptySet.into());
    }
    let k = a.len() as u64;
    let built = if k == 1 {
        Construction {
            partner: GroupSet::full(params),
            trace: CaseTrace::new(Theorem::Trivial, CaseId::Singleton),
        }
    } else if k > params.modulus() {
        if k != params.order() {
            return Err(InvalidInput::LargeButNotFull.into());
        }
        Construction {
            partner: GroupSet::singleton(params, Element::ZERO),
            trace: CaseTrace::new(Theorem::SpectralLarge, CaseId::Pigeonhole),
        }
    } else {
        match classify_size(k, &params)? {
            SizeClass::MixedSize { m, s } => {
                return Err(Error::NonSpectralSize(SizeObstruction { p: params.p(), m, s }))
            }
            SizeClass::PurePower { s: 1 } => complement_prime(&params, &zero_set(a))?,
            SizeClass::PurePower { s } => complement_power(a, s, spectrum)?,
            SizeClass::OtherSize | SizeClass::Trivial => {
                return Err(InvalidInput::NotSpectral.into())
            }
        }
    };
    if !verify_tiling_pair(a, &built.partner) {
        return Err(Error::ConstructionFailed { theorem: built.trace.theorem, case: built.trace.case });
    }
    Ok(built)
}

fn complement_prime(params: &GroupParams, zeros: &ZeroProfile) -> Result<Construction> {
    let theorem = Theorem::SpectralToTilePrime;
    let n = params.n();
    if zeros.has_unit_axis() {
        let gens: Vec<Element> = (0..n).map(|i| axis(params, i)).collect();
        return Ok(Construction {
            partner: span(*params, &gens),
            trace: CaseTrace::new(theorem, CaseId::Case1),
        });
    }
    if let Some(s) = (0..n).find(|&s| zeros.has_mixed(0, s)) {
        let skip = n - s - 1;
        let mut gens = alloc::vec![UNIT_AXIS];
        gens.extend((0..n).filter(|&i| i != skip).map(|i| axis(params, i)));
        return Ok(Construction {
            partner: span(*params, &gens),
            trace: CaseTrace::new(theorem, CaseId::Case2).with("s", WitnessValue::Level(s)),
        });
    }
    // Scan order of (c, p^s) is by c, then s.
    let hit = (1..params.p()).find_map(|c| (0..n).find(|&s| zeros.has_mixed(c, s)).map(|s| (c, s)));
    if let Some((c, s)) = hit {
        let p = u64::from(params.p());
        let c_inv = inverse_mod(u64::from(c), p).expect("nonzero residue mod a prime");
        let skip = n - s - 1;
        let lead = Element::new(((p - c_inv) % p) as u32, params.pow(skip) as u32);
        let mut gens: Vec<Element> = (0..n).filter(|&i| i != skip).map(|i| axis(params, i)).collect();
        gens.push(lead);
        return Ok(Construction {
            partner: span(*params, &gens),
            trace: CaseTrace::new(theorem, CaseId::Case3)
                .with("c", WitnessValue::Residue(u64::from(c)))
                .with("s", WitnessValue::Level(s)),
        });
    }
    Err(InvalidInput::NotSpectral.into())
}

fn complement_power(a: &GroupSet, s: u32, spectrum: Option<&GroupSet>) -> Result<Construction> {
    let params = a.params();
    let theorem = Theorem::SpectralToTilePower;
    let n = params.n();
    let zeros = zero_set(a);
    let i_set = zeros.index_set();

    // Digits y_i with i outside I, placed at p^(n-1-i).
    let mirrored = |skip: Option<u32>| -> Vec<Element> {
        (0..n)
            .filter(|i| !i_set.contains(i) && Some(*i) != skip)
            .map(|i| axis(&params, n - 1 - i))
            .collect()
    };

    if i_set.len() == s as usize {
        let mut gens = alloc::vec![UNIT_AXIS];
        gens.extend(mirrored(None));
        return Ok(Construction {
            partner: span(params, &gens),
            trace: CaseTrace::new(theorem, CaseId::Case1).with("I", WitnessValue::Levels(i_set)),
        });
    }

    let owned;
    let b = match spectrum {
        Some(b) => b,
        None => {
            owned = auto_partner(a, "spectrum", find_spectrum_bruteforce, InvalidInput::NotSpectral)?;
            &owned
        }
    };
    let j_set = zero_set(b).index_set();

    if j_set.len() + 1 == s as usize {
        let gens: Vec<Element> = (0..n).filter(|i| !j_set.contains(i)).map(|i| axis(&params, i)).collect();
        return Ok(Construction {
            partner: span(params, &gens),
            trace: CaseTrace::new(theorem, CaseId::Case2)
                .with("I", WitnessValue::Levels(i_set))
                .with("J", WitnessValue::Levels(j_set)),
        });
    }

    if i_set.len() + 1 == s as usize && j_set.len() == s as usize {
        let Some((j0, c)) = case3_witness(&params, b, &i_set, &j_set) else {
            return Err(InvalidInput::NoCaseMatched.into());
        };
        let p = u64::from(params.p());
        let lead = Element::new(((p - c) % p) as u32, params.pow(j0) as u32);
        let mut gens = mirrored(Some(n - 1 - j0));
        gens.push(lead);
        return Ok(Construction {
            partner: span(params, &gens),
            trace: CaseTrace::new(theorem, CaseId::Case3)
                .with("I", WitnessValue::Levels(i_set))
                .with("J", WitnessValue::Levels(j_set))
                .with("j0", WitnessValue::Level(j0))
                .with("c", WitnessValue::Residue(c)),
        });
    }
    Err(InvalidInput::NoCaseMatched.into())
}

/// First `(j0, c)`: `j0 in J` ascending with `n-1-j0` not in `I`, then the
/// first ordered pair `(t, x), (t', x')` of `B` in index order with `t != t'`
/// and `x - x' = c' p^(n-1-j0) mod p^(n-j0)`, `c' != 0`; `c = c' (t - t')^-1`.
fn case3_witness(params: &GroupParams, b: &GroupSet, i_set: &[u32], j_set: &[u32]) -> Option<(u32, u64)> {
    let n = params.n();
    let p = u64::from(params.p());
    let m = params.modulus();
    let members: Vec<Element> = b.iter().collect();
    for &j0 in j_set {
        let level = n - 1 - j0;
        if i_set.contains(&level) {
            continue;
        }
        let step = params.pow(level);
        for &hi in &members {
            for &lo in &members {
                if hi.x == lo.x {
                    continue;
                }
                let d = (u64::from(hi.y) + m - u64::from(lo.y)) % m;
                if !d.is_multiple_of(step) {
                    continue;
                }
                let c_prime = (d / step) % p;
                if c_prime == 0 {
                    continue;
                }
                let dt = (u64::from(hi.x) + p - u64::from(lo.x)) % p;
                let c = c_prime * inverse_mod(dt, p).expect("nonzero mod p") % p;
                return Some((j0, c));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(params: GroupParams, pts: &[(u32, u32)]) -> GroupSet {
        GroupSet::from_elements(params, pts.iter().map(|&(x, y)| Element::new(x, y))).unwrap()
    }

    fn z2z4() -> GroupParams {
        GroupParams::new(2, 2).unwrap()
    }

    #[test]
    fn spectrum_examples() {
        let g = z2z4();
        let a = set(g, &[(0, 0), (0, 1)]);
        let c = spectrum_from_tile(&a, None).unwrap();
        assert_eq!(c.partner, set(g, &[(0, 0), (0, 2)]));
        assert_eq!(c.trace.theorem, Theorem::TileToSpectrumPrime);
        assert_eq!(c.trace.witness("zero"), Some(&WitnessValue::Element(Element::new(0, 2))));

        let line = set(g, &[(0, 0), (0, 1), (0, 2), (0, 3)]);
        let c = spectrum_from_tile(&line, None).unwrap();
        assert_eq!(c.partner, line);
        assert_eq!((c.trace.theorem, c.trace.case), (Theorem::TileToSpectrumPower, CaseId::FullIndexSet));

        let full = GroupSet::full(g);
        assert_eq!(spectrum_from_tile(&full, None).unwrap().partner, full);
    }

    #[test]
    fn complement_examples() {
        let g = z2z4();
        let a = set(g, &[(0, 0), (0, 2)]);
        let c = complement_from_spectrum(&a, None).unwrap();
        assert_eq!(c.partner, set(g, &[(0, 0), (0, 1), (1, 0), (1, 1)]));
        assert_eq!(c.trace.case, CaseId::Case2);
        assert_eq!(c.trace.witness("s"), Some(&WitnessValue::Level(0)));

        let b = set(g, &[(0, 0), (1, 0)]);
        let c = complement_from_spectrum(&b, None).unwrap();
        assert_eq!(c.partner, set(g, &[(0, 0), (0, 1), (0, 2), (0, 3)]));
        assert_eq!(c.trace.case, CaseId::Case1);

        let full = GroupSet::full(g);
        let c = complement_from_spectrum(&full, None).unwrap();
        assert_eq!(c.partner, set(g, &[(0, 0)]));
        assert_eq!(c.trace.theorem, Theorem::SpectralLarge);
    }

    #[test]
    fn size_witness_examples() {
        let g = GroupParams::new(3, 2).unwrap();
        let six = set(g, &[(0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
        assert_eq!(nonspectral_size_witness(&six), Some(SizeObstruction { p: 3, m: 2, s: 1 }));
        let nine = GroupSet::from_indices(g, 0..9);
        assert_eq!(nonspectral_size_witness(&nine), None);
        let g2 = GroupParams::new(2, 3).unwrap();
        for k in 1..=16usize {
            assert_eq!(nonspectral_size_witness(&GroupSet::from_indices(g2, 0..k)), None);
        }
        assert!(matches!(
            complement_from_spectrum(&six, None),
            Err(Error::NonSpectralSize(SizeObstruction { m: 2, s: 1, .. }))
        ));
    }

    #[test]
    fn rejects_bad_inputs() {
        let g = z2z4();
        let a = set(g, &[(0, 0), (0, 1)]);
        let not_tiling = set(g, &[(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert_eq!(
            spectrum_from_tile(&a, Some(&not_tiling)),
            Err(Error::InvalidInput(InvalidInput::NotATile))
        );
        assert_eq!(
            complement_from_spectrum(&a, Some(&a)),
            Err(Error::InvalidInput(InvalidInput::NotSpectral))
        );
        let three = set(g, &[(0, 0), (0, 1), (1, 0)]);
        assert_eq!(spectrum_from_tile(&three, None), Err(Error::InvalidInput(InvalidInput::NotATile)));
        assert_eq!(
            complement_from_spectrum(&three, None),
            Err(Error::InvalidInput(InvalidInput::NotSpectral))
        );
        let five = GroupSet::from_indices(g, 0..5);
        assert_eq!(
            complement_from_spectrum(&five, None),
            Err(Error::InvalidInput(InvalidInput::LargeButNotFull))
        );
        assert_eq!(
            spectrum_from_tile(&GroupSet::empty(g), None),
            Err(Error::InvalidInput(InvalidInput::EmptySet))
        );
    }

    #[test]
    fn large_group_needs_partner() {
        // |I| = t - 1 in Z_2 x Z_2^16 with no complement supplied.
        let g = GroupParams::new(2, 16).unwrap();
        let a = set(g, &[(0, 0), (1, 0), (0, 1), (1, 1)]);
        let z = zero_set(&a);
        assert_eq!(z.index_set().len(), 1);
        assert!(matches!(spectrum_from_tile(&a, None), Err(Error::MissingPartner { .. })));
        let t = span(g, &(1..16).map(|i| axis(&g, i)).collect::<Vec<_>>());
        let c = spectrum_from_tile(&a, Some(&t)).unwrap();
        assert!(verify_spectral_pair(&a, &c.partner));
    }

    #[test]
    fn span_sizes() {
        let g = GroupParams::new(3, 2).unwrap();
        assert_eq!(span(g, &[]).len(), 1);
        assert_eq!(span(g, &[axis(&g, 0)]).len(), 3);
        assert_eq!(span(g, &[UNIT_AXIS, axis(&g, 0), axis(&g, 1)]).len(), 27);
    }
}
