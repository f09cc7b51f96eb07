//! Command-line front end for `fuglede-core`: the set file format, reports,
//! the parallel enumeration driver and the seeded oracle comparison.

pub mod cli;
pub mod error;
pub mod report;
pub mod run;
pub mod setfile;

pub use error::CliError;
pub use run::{enumerate_and_check, oracle_compare, oracle_compare_with, random_subset};
pub use setfile::{format_set, parse_set};
