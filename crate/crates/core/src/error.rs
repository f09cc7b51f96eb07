use core::fmt;

use crate::constructions::{CaseId, SizeObstruction, Theorem};
use crate::group::GroupParams;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Why an input was rejected by a construction or verifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InvalidInput {
    EmptySet,
    NotATile,
    NotSpectral,
    /// `|A| > p^n` but `A` is not the whole group.
    LargeButNotFull,
    /// No case of the construction matched the computed zero sets.
    NoCaseMatched,
}

impl fmt::Display for InvalidInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            InvalidInput::EmptySet => "empty set",
            InvalidInput::NotATile => "input is not a tile",
            InvalidInput::NotSpectral => "input is not a spectral set",
            InvalidInput::LargeButNotFull => {
                "set larger than p^n must be the whole group to be spectral"
            }
            InvalidInput::NoCaseMatched => "no construction case matched the zero sets",
        };
        f.write_str(msg)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    NotPrime(u32),
    ZeroExponent,
    OrderTooLarge { p: u32, n: u32, limit: u64 },
    OutOfRange { what: &'static str, value: u64, bound: u64 },
    NotAUnit { value: u64, modulus: u64 },
    ParamsMismatch { left: GroupParams, right: GroupParams },
    /// A search was requested on a group larger than the configured cap.
    Capacity { order: u64, cap: u64 },
    InvalidInput(InvalidInput),
    /// A branch the proof rules out for genuine inputs fired; the input is
    /// not what the caller claimed.
    Contradiction { theorem: Theorem, case: CaseId },
    NonSpectralSize(SizeObstruction),
    MissingPartner { partner: &'static str, order: u64, cap: u64 },
    /// The constructed partner failed its own verification.
    ConstructionFailed { theorem: Theorem, case: CaseId },
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. } | Error::MissingPartner { .. } | Error::OrderTooLarge { .. })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::ZeroExponent => f.write_str("n must be at least 1"),
            Error::OrderTooLarge { p, n, limit } => {
                write!(f, "group order {p}^({n}+1) exceeds the limit {limit}")
            }
            Error::OutOfRange { what, value, bound } => {
                write!(f, "{what} = {value} out of range (must be < {bound})")
            }
            Error::NotAUnit { value, modulus } => {
                write!(f, "{value} is not a unit modulo {modulus}")
            }
            Error::ParamsMismatch { left, right } => {
                write!(f, "group parameters differ: {left} vs {right}")
            }
            Error::Capacity { order, cap } => {
                write!(f, "group order {order} exceeds the search cap {cap}")
            }
            Error::InvalidInput(reason) => write!(f, "invalid input: {reason}"),
            Error::Contradiction { theorem, case } => write!(
                f,
                "contradiction branch {theorem}/{case} matched; the input pair is not genuine"
            ),
            Error::NonSpectralSize(w) => write!(
                f,
                "|A| = {}*{}^{} cannot be spectral",
                w.m, w.p, w.s
            ),
            Error::MissingPartner { partner, order, cap } => write!(
                f,
                "a {partner} is required: group order {order} exceeds the auto-search cap {cap}"
            ),
            Error::ConstructionFailed { theorem, case } => {
                write!(f, "construction {theorem}/{case} produced an unverified partner")
            }
        }
    }
}

impl core::error::Error for Error {}

impl From<InvalidInput> for Error {
    fn from(reason: InvalidInput) -> Self {
        Error::InvalidInput(reason)
    }
}
