//! Spectral sets and tiles in `Z_p x Z_{p^n}`.
//!
//! A subset `A` is spectral when some `B` of the same size has every nonzero
//! difference in the zero set `Z_A = {u : chi_u(A) = 0}`, and a tile when
//! some `T` gives every element a unique representation `a + t`. In these
//! groups the two notions coincide; this crate computes zero sets exactly,
//! builds the partner in both directions, and checks the equivalence by
//! exhaustive search on small groups.
#![no_std]

extern crate alloc;

pub mod arith;
pub mod charsum;
pub mod constructions;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod oracle;
pub mod set;
pub mod structure;

pub use charsum::{is_zero_equidist, slice_counts, zero_set, SliceCounts, ZeroProfile};
pub use constructions::{
    complement_from_spectrum, nonspectral_size_witness, spectrum_from_tile, CaseId, CaseTrace,
    Construction, SizeObstruction, Theorem, Witness, WitnessValue,
};
pub use cyclotomic::{char_value_exact, inversion_check, CyclotomicInt};
pub use error::{Error, InvalidInput, Result};
pub use group::{ClassRep, Element, GroupParams};
pub use set::GroupSet;
pub use structure::{classify_size, divisibility_exponent, SizeClass};
