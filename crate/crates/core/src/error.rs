//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors raised by the library.
///
/// Stable-category operations reject projective modules with a distinct
/// error instead of treating them as zero, so caller bugs surface early.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Algebra parameters out of range (`n` and `ell` must be positive).
    InvalidAlgebra { n: u32, ell: u32 },
    /// Module coordinates outside `1..=n` x `1..=ell+1`, or a symbol whose
    /// length would exceed the Loewy cap.
    InvalidModule { top: u32, len: u32, n: u32, ell: u32 },
    /// A stable-category operation was applied to a projective module.
    ProjectiveModule { top: u32, len: u32 },
    /// Operation requires a symmetric algebra (`n` dividing `ell`).
    NotSymmetric { n: u32, ell: u32 },
    /// The given blocks do not partition the ground set.
    NotAPartition(String),
    /// The blocks partition the ground set but two blocks cross.
    CrossingPartition(String),
    /// An index argument outside its allowed range.
    OutOfRange {
        what: &'static str,
        value: u32,
        max: u32,
    },
    /// A module set contained a repeated member.
    DuplicateModule { top: u32, len: u32 },
    /// A family was given to `lift` over the wrong base algebra.
    CoveringMismatch { expected_e: u32, found_n: u32, ell: u32 },
    /// The candidate set is not an sms, so the requested derived data
    /// (e.g. its partition) does not exist.
    NotAnSms(String),
    /// Exhaustive search would exceed the feasibility guard.
    SearchGuardExceeded { size: u64, guard: u64 },
    /// Matrix representations over different algebras or fields.
    RepMismatch(String),
    /// Malformed text input (module or partition format).
    Parse(String),
    /// An operation's stated precondition was violated by the arguments.
    PreconditionViolated(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidAlgebra { n, ell } => {
                write!(f, "invalid algebra parameters n={n}, ell={ell}")
            }
            Error::InvalidModule { top, len, n, ell } => write!(
                f,
                "invalid module top={top}, len={len} over A_{n}^{ell}"
            ),
            Error::ProjectiveModule { top, len } => write!(
                f,
                "module top={top}, len={len} is projective; stable-category operations exclude projectives"
            ),
            Error::NotSymmetric { n, ell } => write!(
                f,
                "A_{n}^{ell} is not symmetric (n does not divide ell)"
            ),
            Error::NotAPartition(msg) => write!(f, "not a partition: {msg}"),
            Error::CrossingPartition(msg) => write!(f, "crossing partition: {msg}"),
            Error::OutOfRange { what, value, max } => {
                write!(f, "{what} = {value} out of range 1..={max}")
            }
            Error::DuplicateModule { top, len } => {
                write!(f, "duplicate module top={top}, len={len}")
            }
            Error::CoveringMismatch { expected_e, found_n, ell } => write!(
                f,
                "family lives over A_{found_n}^{ell} but the covering base is A_{expected_e}^{ell}"
            ),
            Error::NotAnSms(msg) => write!(f, "not an sms: {msg}"),
            Error::SearchGuardExceeded { size, guard } => write!(
                f,
                "search space n*ell = {size} exceeds guard {guard}; pass the override to force"
            ),
            Error::RepMismatch(msg) => write!(f, "representation mismatch: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::PreconditionViolated(msg) => write!(f, "precondition violated: {msg}"),
        }
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
