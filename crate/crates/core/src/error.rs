//! Error type shared by every module.

use core::fmt;

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;

/// Every failure mode of the numeric routines.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// Argument sits exactly on a pole of a principal branch (atanh at ±1, log at 0).
    PoleInput,
    /// A closed form of G or S is evaluated within the guard band of a pole,
    /// branch point or branch cut.
    SingularConfiguration(&'static str),
    /// Real argument outside the domain of the operation.
    Domain(&'static str),
    /// Pair of ends for which no gap width is defined.
    InvalidCombination(&'static str),
    /// Boundary parameter outside its admissible range.
    Range(&'static str),
    /// The symmetric structure degenerates (largest root of the seed cubic ≤ 2).
    DegenerateStructure,
    /// A visited trace is ≤ 2, so the triple is not a hyperbolic cone-torus.
    InvalidStructure {
        /// The offending trace.
        trace: f64,
    },
    /// Override seed does not carry the Fricke invariant of the boundary.
    SeedMismatch {
        /// Invariant of the seed.
        seed_mu: f64,
        /// Invariant required by the boundary.
        boundary_mu: f64,
    },
    /// A computation produced a non-finite value.
    NonFinite(&'static str),
    /// Slope coordinates left the `i64` range.
    SlopeOverflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::PoleInput => write!(f, "argument is a pole of the principal branch"),
            Error::SingularConfiguration(what) => write!(f, "singular configuration: {what}"),
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::InvalidCombination(what) => write!(f, "invalid end combination: {what}"),
            Error::Range(what) => write!(f, "out of range: {what}"),
            Error::DegenerateStructure => {
                write!(
                    f,
                    "symmetric structure degenerates (largest seed root <= 2)"
                )
            }
            Error::InvalidStructure { trace } => write!(
                f,
                "visited trace {trace} <= 2: not a hyperbolic cone/hole/cusp torus"
            ),
            Error::SeedMismatch {
                seed_mu,
                boundary_mu,
            } => write!(
                f,
                "seed Fricke invariant {seed_mu} does not match boundary invariant {boundary_mu}"
            ),
            Error::NonFinite(what) => write!(f, "non-finite result in {what}"),
            Error::SlopeOverflow => write!(f, "slope coordinates overflow i64"),
        }
    }
}

impl core::error::Error for Error {}
