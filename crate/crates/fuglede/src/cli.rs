use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use fuglede_core::oracle::{
    find_complement_bruteforce, find_spectrum_bruteforce, spectral_violation, tiling_violation,
    EnumerationOptions,
};
use fuglede_core::{complement_from_spectrum, spectrum_from_tile, GroupParams, GroupSet};

use crate::error::{CliError, EXIT_FAILED, EXIT_OK};
use crate::report::{
    AnalyzeReport, CompareDoc, ConstructionReport, EnumerationDoc, PairReport, SearchReport,
};
use crate::run::{enumerate_and_check, oracle_compare};
use crate::setfile::{read_set, write_set};

#[derive(Debug, Parser)]
#[command(name = "fuglede", version, about = "Spectral sets and tiles in Z_p x Z_{p^n}")]
pub struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Expected group; checked against the set file header.
#[derive(Debug, Clone, Copy, Args)]
pub struct GroupFlags {
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long)]
    pub n: Option<u32>,
}

impl GroupFlags {
    fn load(&self, path: &Path) -> Result<GroupSet, CliError> {
        let a = read_set(path)?;
        let g = a.params();
        for (flag, want, got) in [("p", self.p, g.p()), ("n", self.n, g.n())] {
            if want.is_some_and(|w| w != got) {
                return Err(CliError::Usage(format!(
                    "{}: header has {flag} = {got} but --{flag} {} was given",
                    path.display(),
                    want.unwrap_or_default()
                )));
            }
        }
        Ok(a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PairMode {
    Spectral,
    Tiling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchKind {
    Spectrum,
    Complement,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Zero set, index set I, size class and divisibility exponent of a set.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        group: GroupFlags,
    },
    /// Build a spectrum for a tile.
    Spectrum {
        file: PathBuf,
        /// A tiling complement of the set, when one is known.
        #[arg(long)]
        tiling: Option<PathBuf>,
        /// Write the spectrum to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        group: GroupFlags,
    },
    /// Build a tiling complement for a spectral set.
    Complement {
        file: PathBuf,
        /// A spectrum of the set, when one is known.
        #[arg(long)]
        spectrum: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        group: GroupFlags,
    },
    /// Check whether two sets form a spectral or a tiling pair.
    CheckPair {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum)]
        mode: PairMode,
        #[command(flatten)]
        group: GroupFlags,
    },
    /// Brute-force search for a spectrum or a tiling complement.
    Search {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: SearchKind,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        group: GroupFlags,
    },
    /// Check tile <=> spectral over every subset of a small group.
    Enumerate {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u32,
        /// Only these sizes, comma separated.
        #[arg(long, value_delimiter = ',')]
        sizes: Option<Vec<usize>>,
        /// One set per orbit under translations and unit scalings.
        #[arg(long)]
        canonical: bool,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        /// Also write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Search for spectra of sets whose size already rules one out.
        #[arg(long)]
        search_obstructed: bool,
        /// Skip building and verifying partners.
        #[arg(long)]
        skip_constructions: bool,
    },
    /// Compare the counting zero test with exact cyclotomic evaluation.
    OracleCompare {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn emit<T: serde::Serialize>(out: &mut dyn Write, json: bool, doc: &T, text: impl FnOnce(&T) -> String) -> Result<(), CliError> {
    let body = if json {
        let mut s = serde_json::to_string_pretty(doc).expect("plain data");
        s.push('\n');
        s
    } else {
        text(doc)
    };
    out.write_all(body.as_bytes()).map_err(|source| CliError::Io { path: PathBuf::from("<stdout>"), source })
}

fn same_group(a: &GroupSet, b: &GroupSet) -> Result<(), CliError> {
    if a.params() != b.params() {
        return Err(fuglede_core::Error::ParamsMismatch { left: a.params(), right: b.params() }.into());
    }
    Ok(())
}

/// Runs one command, writing its report to `out`. Returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let json = cli.json;
    match cli.command {
        Command::Analyze { file, group } => {
            let a = group.load(&file)?;
            if a.is_empty() {
                return Err(CliError::Usage(format!("{}: empty set", file.display())));
            }
            let r = AnalyzeReport::new(&a)?;
            emit(out, json, &r, AnalyzeReport::to_text)?;
            Ok(if r.divisibility_check { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Spectrum { file, tiling, out: dest, group } => {
            let a = group.load(&file)?;
            let t = tiling.map(|p| group.load(&p)).transpose()?;
            if let Some(t) = &t {
                same_group(&a, t)?;
            }
            let c = spectrum_from_tile(&a, t.as_ref())?;
            if let Some(dest) = dest {
                write_set(&dest, &c.partner)?;
            }
            emit(out, json, &ConstructionReport::new(&c), ConstructionReport::to_text)?;
            Ok(EXIT_OK)
        }
        Command::Complement { file, spectrum, out: dest, group } => {
            let a = group.load(&file)?;
            let b = spectrum.map(|p| group.load(&p)).transpose()?;
            if let Some(b) = &b {
                same_group(&a, b)?;
            }
            let c = complement_from_spectrum(&a, b.as_ref())?;
            if let Some(dest) = dest {
                write_set(&dest, &c.partner)?;
            }
            emit(out, json, &ConstructionReport::new(&c), ConstructionReport::to_text)?;
            Ok(EXIT_OK)
        }
        Command::CheckPair { first, second, mode, group } => {
            let a = group.load(&first)?;
            let b = group.load(&second)?;
            same_group(&a, &b)?;
            let r = match mode {
                PairMode::Spectral => PairReport::new("spectral", spectral_violation(&a, &b)),
                PairMode::Tiling => PairReport::new("tiling", tiling_violation(&a, &b)),
            };
            emit(out, json, &r, PairReport::to_text)?;
            Ok(if r.verdict { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Search { file, kind, out: dest, group } => {
            let a = group.load(&file)?;
            let (name, found) = match kind {
                SearchKind::Spectrum => ("spectrum", find_spectrum_bruteforce(&a)?),
                SearchKind::Complement => ("complement", find_complement_bruteforce(&a)?),
            };
            if let (Some(dest), Some(found)) = (dest, &found) {
                write_set(&dest, found)?;
            }
            emit(out, json, &SearchReport::new(name, found.as_ref()), SearchReport::to_text)?;
            Ok(EXIT_OK)
        }
        Command::Enumerate { p, n, sizes, canonical, shards, out: dest, search_obstructed, skip_constructions } => {
            let params = GroupParams::new(p, n)?;
            if shards == 0 {
                return Err(CliError::Usage("--shards must be at least 1".into()));
            }
            let opts = EnumerationOptions {
                size_filter: sizes,
                use_canonical: canonical,
                search_obstructed,
                check_constructions: !skip_constructions,
            };
            let report = enumerate_and_check(params, &opts, shards)?;
            let doc = EnumerationDoc::new(&report);
            if let Some(dest) = dest {
                std::fs::write(&dest, doc.to_json()).map_err(|source| CliError::Io { path: dest, source })?;
            }
            if json {
                out.write_all(doc.to_json().as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source })?;
            } else {
                out.write_all(doc.to_text().as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source })?;
            }
            if let Some(t) = report.wall_time {
                let _ = writeln!(err, "wall_time: {:.3}s", t.as_secs_f64());
            }
            Ok(if report.is_clean() { EXIT_OK } else { EXIT_FAILED })
        }
        Command::OracleCompare { p, n, trials, seed } => {
            let params = GroupParams::new(p, n)?;
            let r = oracle_compare(params, trials, seed)?;
            emit(out, json, &CompareDoc::new(&r), CompareDoc::to_text)?;
            Ok(if r.is_clean() { EXIT_OK } else { EXIT_FAILED })
        }
    }
}
