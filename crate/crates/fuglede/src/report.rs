//! Reports printed by the commands, as plain `key: value` text or JSON.
//!
//! Sets inside reports use the set text format. Enumeration reports leave
//! out the wall time so that the document depends only on the inputs.

use std::fmt::Write as _;

use fuglede_core::oracle::{EnumerationReport, PairViolation};
use fuglede_core::{
    classify_size, divisibility_exponent, zero_set, Construction, GroupParams, GroupSet, Result,
};
use serde::Serialize;

use crate::run::CompareReport;
use crate::setfile::format_set;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub p: u32,
    pub n: u32,
}

impl From<GroupParams> for Params {
    fn from(g: GroupParams) -> Self {
        Params { p: g.p(), n: g.n() }
    }
}

fn join<T: std::fmt::Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn braces<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    format!("{{{}}}", join(items, ", "))
}

/// Indents a multi-line block under a `key:` line.
fn block(out: &mut String, key: &str, body: &str) {
    let _ = writeln!(out, "{key}:");
    for line in body.lines() {
        let _ = writeln!(out, "  {line}");
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalyzeReport {
    pub params: Params,
    pub size: usize,
    pub size_class: String,
    pub reps: Vec<String>,
    pub has_unit_axis: bool,
    #[serde(rename = "I")]
    pub index_set: Vec<u32>,
    pub zero_set_size: usize,
    pub divisibility_exponent: u32,
    /// `p^s` divides `|A|`.
    pub divisibility_check: bool,
}

impl AnalyzeReport {
    pub fn new(a: &GroupSet) -> Result<Self> {
        let g = a.params();
        let z = zero_set(a);
        let s = divisibility_exponent(&z);
        Ok(AnalyzeReport {
            params: g.into(),
            size: a.len(),
            size_class: classify_size(a.len() as u64, &g)?.to_string(),
            reps: z.reps().map(|r| r.to_string()).collect(),
            has_unit_axis: z.has_unit_axis(),
            index_set: z.index_set(),
            zero_set_size: z.element_count(),
            divisibility_exponent: s,
            divisibility_check: (a.len() as u64).is_multiple_of(u64::from(g.p()).pow(s)),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group: Z_{} x Z_{}^{}", self.params.p, self.params.p, self.params.n);
        let _ = writeln!(out, "size: {}", self.size);
        let _ = writeln!(out, "size_class: {}", self.size_class);
        let _ = writeln!(out, "reps: {}", braces(&self.reps));
        let _ = writeln!(out, "has_unit_axis: {}", self.has_unit_axis);
        let _ = writeln!(out, "I: {}", braces(&self.index_set));
        let _ = writeln!(out, "zero_set_size: {}", self.zero_set_size);
        let _ = writeln!(out, "divisibility_exponent: {}", self.divisibility_exponent);
        let check = if self.divisibility_check { "ok" } else { "FAILED" };
        let _ = writeln!(out, "divisibility_check: {check}");
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessDoc {
    pub name: &'static str,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionReport {
    pub theorem: &'static str,
    pub case: &'static str,
    pub witnesses: Vec<WitnessDoc>,
    pub partner: String,
}

impl ConstructionReport {
    pub fn new(c: &Construction) -> Self {
        ConstructionReport {
            theorem: c.trace.theorem.id(),
            case: c.trace.case.id(),
            witnesses: c.trace.witnesses.iter().map(|w| WitnessDoc { name: w.name, value: w.value.to_string() }).collect(),
            partner: format_set(&c.partner),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "theorem: {}", self.theorem);
        let _ = writeln!(out, "case: {}", self.case);
        for w in &self.witnesses {
            let _ = writeln!(out, "witness {}: {}", w.name, w.value);
        }
        block(&mut out, "partner", &self.partner);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairReport {
    pub mode: &'static str,
    pub verdict: bool,
    /// The first violating difference, or the size mismatch.
    pub witness: Option<String>,
}

impl PairReport {
    pub fn new(mode: &'static str, violation: Option<PairViolation>) -> Self {
        let witness = violation.map(|v| match v {
            PairViolation::ParamsMismatch => "parameters differ".to_owned(),
            PairViolation::Size { left, right } => format!("sizes {left} and {right}"),
            PairViolation::Difference(e) => e.to_string(),
        });
        PairReport { mode, verdict: witness.is_none(), witness }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.mode, self.verdict);
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "witness: {w}");
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub kind: &'static str,
    pub found: bool,
    pub partner: Option<String>,
}

impl SearchReport {
    pub fn new(kind: &'static str, partner: Option<&GroupSet>) -> Self {
        SearchReport { kind, found: partner.is_some(), partner: partner.map(format_set) }
    }

    pub fn to_text(&self) -> String {
        match &self.partner {
            Some(p) => {
                let mut out = String::new();
                block(&mut out, self.kind, p);
                out
            }
            None => format!("{}: none\n", self.kind),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SizeTallyDoc {
    pub size: usize,
    pub examined: u64,
    pub tiles: u64,
    pub spectral: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ViolationDoc {
    pub kind: &'static str,
    pub set: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationDoc {
    pub params: Params,
    pub size_filter: Option<Vec<usize>>,
    pub use_canonical: bool,
    pub search_obstructed: bool,
    pub check_constructions: bool,
    pub subsets_examined: u64,
    pub orbits_examined: u64,
    pub tiles: u64,
    pub spectral: u64,
    pub witness_rejected: u64,
    pub constructions_checked: u64,
    pub per_size: Vec<SizeTallyDoc>,
    pub mismatch_count: u64,
    pub mismatches: Vec<String>,
    pub violation_count: u64,
    pub violations: Vec<ViolationDoc>,
}

impl EnumerationDoc {
    pub fn new(r: &EnumerationReport) -> Self {
        let mut size_filter = r.size_filter.clone();
        if let Some(s) = size_filter.as_mut() {
            s.sort_unstable();
            s.dedup();
        }
        EnumerationDoc {
            params: r.params.into(),
            size_filter,
            use_canonical: r.use_canonical,
            search_obstructed: r.search_obstructed,
            check_constructions: r.check_constructions,
            subsets_examined: r.subsets_examined,
            orbits_examined: r.orbits_examined,
            tiles: r.tiles,
            spectral: r.spectral,
            witness_rejected: r.witness_rejected,
            constructions_checked: r.constructions_checked,
            per_size: r
                .per_size
                .iter()
                .map(|t| SizeTallyDoc { size: t.size, examined: t.examined, tiles: t.tiles, spectral: t.spectral })
                .collect(),
            mismatch_count: r.mismatch_count,
            mismatches: r.mismatches.iter().map(format_set).collect(),
            violation_count: r.violation_count,
            violations: r.violations.iter().map(|v| ViolationDoc { kind: v.kind.id(), set: format_set(&v.set) }).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group: Z_{} x Z_{}^{}", self.params.p, self.params.p, self.params.n);
        let sizes = match &self.size_filter {
            Some(s) => braces(s),
            None => "all".to_owned(),
        };
        let _ = writeln!(out, "size_filter: {sizes}");
        let _ = writeln!(out, "use_canonical: {}", self.use_canonical);
        let _ = writeln!(out, "search_obstructed: {}", self.search_obstructed);
        let _ = writeln!(out, "check_constructions: {}", self.check_constructions);
        let _ = writeln!(out, "subsets_examined: {}", self.subsets_examined);
        let _ = writeln!(out, "orbits_examined: {}", self.orbits_examined);
        let _ = writeln!(out, "tiles: {}", self.tiles);
        let _ = writeln!(out, "spectral: {}", self.spectral);
        let _ = writeln!(out, "witness_rejected: {}", self.witness_rejected);
        let _ = writeln!(out, "constructions_checked: {}", self.constructions_checked);
        let _ = writeln!(out, "per_size:");
        for t in &self.per_size {
            let _ = writeln!(out, "  {}: examined {} tiles {} spectral {}", t.size, t.examined, t.tiles, t.spectral);
        }
        let _ = writeln!(out, "mismatch_count: {}", self.mismatch_count);
        for m in &self.mismatches {
            block(&mut out, "mismatch", m);
        }
        let _ = writeln!(out, "violation_count: {}", self.violation_count);
        for v in &self.violations {
            block(&mut out, &format!("violation {}", v.kind), &v.set);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscrepancyDoc {
    pub set: String,
    pub u: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompareDoc {
    pub params: Params,
    pub generator: &'static str,
    pub seed: u64,
    pub trials: u64,
    pub zeros: u64,
    pub discrepancies: Vec<DiscrepancyDoc>,
}

impl CompareDoc {
    pub fn new(r: &CompareReport) -> Self {
        CompareDoc {
            params: r.params.into(),
            generator: "ChaCha8Rng::seed_from_u64",
            seed: r.seed,
            trials: r.trials,
            zeros: r.zeros,
            discrepancies: r.discrepancies.iter().map(|(a, u)| DiscrepancyDoc { set: format_set(a), u: u.to_string() }).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "group: Z_{} x Z_{}^{}", self.params.p, self.params.p, self.params.n);
        let _ = writeln!(out, "generator: {}", self.generator);
        let _ = writeln!(out, "seed: {}", self.seed);
        let _ = writeln!(out, "trials: {}", self.trials);
        let _ = writeln!(out, "zeros: {}", self.zeros);
        let _ = writeln!(out, "discrepancies: {}", self.discrepancies.len());
        for d in &self.discrepancies {
            block(&mut out, &format!("discrepancy at u = {}", d.u), &d.set);
        }
        out
    }
}
