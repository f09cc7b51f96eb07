//! One pass/fail line per acceptance criterion. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use fuglede::report::EnumerationDoc;
use fuglede::{enumerate_and_check, oracle_compare, random_subset};
use fuglede_core::oracle::{EnumerationOptions, EnumerationReport, ViolationKind};
use fuglede_core::{divisibility_exponent, inversion_check, zero_set, GroupParams, GroupSet};

const SHARDS: usize = 16;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

fn group(p: u32, n: u32) -> GroupParams {
    GroupParams::new(p, n).expect("valid group")
}

fn full_options() -> EnumerationOptions {
    EnumerationOptions { check_constructions: true, ..Default::default() }
}

fn count(r: &EnumerationReport, kind: ViolationKind) -> usize {
    r.violations.iter().filter(|v| v.kind == kind).count()
}

fn describe(r: &EnumerationReport) -> String {
    format!(
        "Z_{}xZ_{}^{}: {} sets, {} tiles, {} spectral, {} mismatches",
        r.params.p(),
        r.params.p(),
        r.params.n(),
        r.orbits_examined,
        r.tiles,
        r.spectral,
        r.mismatch_count
    )
}

fn c1(reports: &[EnumerationReport]) -> Outcome {
    let expected_subsets: u64 = [16u64, 512, 256, 1 << 25, 65536].iter().sum();
    let subsets: u64 = reports.iter().map(|r| r.subsets_examined).sum();
    let clean = reports.iter().all(|r| r.mismatch_count == 0);
    // Z_2 x Z_2: the singletons, all pairs and the whole group.
    let small = reports[0].tiles == 11 && reports[0].spectral == 11;
    outcome(
        clean && small && subsets == expected_subsets,
        reports.iter().map(describe).collect::<Vec<_>>().join("; "),
    )
}

fn c2(main: &EnumerationReport, obstructed: &EnumerationReport) -> Outcome {
    let nine = main.per_size.iter().find(|t| t.size == 9).map_or(0, |t| t.examined);
    let no_spectra = obstructed.spectral == 0
        && obstructed.per_size.iter().map(|t| t.examined).sum::<u64>() == 296_010 + 4_686_825;
    outcome(
        main.mismatch_count == 0 && nine == 4_686_825 && no_spectra && obstructed.mismatch_count == 0,
        format!(
            "{}; sizes 6 and 18: {} searched, {} spectral",
            describe(main),
            obstructed.orbits_examined,
            obstructed.spectral
        ),
    )
}

fn c3(reports: &[&EnumerationReport]) -> Outcome {
    let mut built = 0;
    let mut expected = 0;
    let mut failures = 0;
    for r in reports {
        built += r.constructions_checked;
        expected += r.tiles + r.spectral;
        failures += count(r, ViolationKind::SpectrumConstruction)
            + count(r, ViolationKind::ComplementConstruction)
            + count(r, ViolationKind::ZeroCover);
    }
    outcome(
        failures == 0 && built == expected && built > 0,
        format!("{built} partners built and verified, {failures} failures"),
    )
}

fn c4() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;
    for (p, n) in [(2, 3), (3, 2), (5, 1)] {
        match oracle_compare(group(p, n), 10_000, 2024) {
            Ok(r) => {
                ok &= r.is_clean() && r.zeros > 0;
                parts.push(format!("Z_{p}xZ_{p}^{n}: {} zeros, {} discrepancies", r.zeros, r.discrepancies.len()));
            }
            Err(e) => {
                ok = false;
                parts.push(e.to_string());
            }
        }
    }
    outcome(ok, parts.join("; "))
}

fn c5(reports: &[EnumerationReport]) -> Outcome {
    let flagged: usize = reports.iter().map(|r| count(r, ViolationKind::Divisibility)).sum();
    // Recomputed through the general zero-set path as well.
    let mut rechecked = 0u64;
    let mut exceptions = 0u64;
    for (p, n) in [(2, 1), (3, 1), (2, 2), (2, 3)] {
        let g = group(p, n);
        for mask in 1u64..1 << g.size() {
            let a = GroupSet::from_mask(g, mask);
            let s = divisibility_exponent(&zero_set(&a));
            rechecked += 1;
            if !(a.len() as u64).is_multiple_of(u64::from(p).pow(s)) {
                exceptions += 1;
            }
        }
    }
    outcome(
        flagged == 0 && exceptions == 0,
        format!("{flagged} kernel exceptions; {rechecked} sets rechecked, {exceptions} exceptions"),
    )
}

fn c6(reports: &[&EnumerationReport]) -> Outcome {
    let mut large = 0u64;
    let mut bad = 0u64;
    for r in reports {
        let top = r.params.modulus() as usize;
        let order = r.params.size();
        for t in r.per_size.iter().filter(|t| t.size > top) {
            if t.size == order {
                large += t.spectral;
            } else {
                bad += t.spectral;
            }
        }
        bad += count(r, ViolationKind::Pigeonhole) as u64;
    }
    outcome(bad == 0, format!("{large} spectral sets above p^n, all the whole group; {bad} exceptions"))
}

fn c7() -> Outcome {
    let cases = [
        (group(2, 3), full_options()),
        (group(3, 2), EnumerationOptions { size_filter: Some(vec![3, 6]), use_canonical: true, ..full_options() }),
    ];
    let mut ok = true;
    let mut bytes = 0;
    for (g, opts) in cases {
        let docs: Vec<String> = [1, 4, 16]
            .iter()
            .map(|&s| enumerate_and_check(g, &opts, s).map(|r| EnumerationDoc::new(&r).to_json()).unwrap_or_default())
            .collect();
        ok &= !docs[0].is_empty() && docs.iter().all(|d| *d == docs[0]);
        bytes += docs[0].len();
    }
    outcome(ok, format!("shards 1/4/16 give identical reports ({bytes} bytes compared per run)"))
}

fn c8() -> Outcome {
    let mut rng = fuglede::run::rng(8);
    let mut failures = 0;
    for (p, n) in [(2, 2), (3, 1)] {
        let g = group(p, n);
        for _ in 0..1000 {
            if !inversion_check(&random_subset(&mut rng, g)) {
                failures += 1;
            }
        }
    }
    outcome(failures == 0, format!("2000 subsets reconstructed, {failures} failures"))
}

fn run(name: &str, title: &str, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let o = f();
    let verdict = if o.ok { "PASS" } else { "FAIL" };
    println!("{name} {verdict} {title} [{:.1}s]: {}", start.elapsed().as_secs_f64(), o.detail);
    o.ok
}

fn enumerate(g: GroupParams, opts: &EnumerationOptions) -> EnumerationReport {
    enumerate_and_check(g, opts, SHARDS).unwrap_or_else(|e| panic!("enumeration of {g} failed: {e}"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let exhaustive: Vec<EnumerationReport> =
        [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3)].iter().map(|&(p, n)| enumerate(group(p, n), &full_options())).collect();
    let z3z9 = group(3, 2);
    let filtered = enumerate(z3z9, &EnumerationOptions { size_filter: Some(vec![1, 3, 9, 27]), ..full_options() });
    let obstructed = enumerate(
        z3z9,
        &EnumerationOptions { size_filter: Some(vec![6, 18]), search_obstructed: true, ..full_options() },
    );
    println!("enumerations finished in {:.1}s", start.elapsed().as_secs_f64());
    let all: Vec<&EnumerationReport> = exhaustive.iter().chain([&filtered, &obstructed]).collect();

    let results = [
        run("C1", "tile <=> spectral on every subset of five small groups", || c1(&exhaustive)),
        run("C2", "tile <=> spectral in Z_3xZ_9 by size, sizes 6 and 18 never spectral", || c2(&filtered, &obstructed)),
        run("C3", "every constructed spectrum and complement verifies", || c3(&all)),
        run("C4", "counting zero test agrees with exact cyclotomic evaluation", c4),
        run("C5", "p^s divides |A| for the certified exponent s", || c5(&exhaustive)),
        run("C6", "spectral sets larger than p^n are the whole group", || c6(&all)),
        run("C7", "enumeration reports are independent of the shard count", c7),
        run("C8", "Fourier inversion rebuilds random subsets exactly", c8),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
