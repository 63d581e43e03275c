//! Numerical machinery for McShane-type identities on hyperbolic cone-surfaces.
//!
//! The crate is `no_std` (it needs `alloc` for the geodesic enumerator) and does
//! all floating point work through [`libm`], so results are bit-identical on
//! every platform.
//!
//! - [`kernel`]: principal complex branches and the G/S functions.
//! - [`gapcat`]: gap widths for every pair-of-pants configuration.
//! - [`pants`]: perpendicular feet and width decomposition of one pair of pants.
//! - [`markoff`]: simple closed geodesics on a one-boundary torus via trace triples.
//! - [`verify`]: partial sums of the torus identities with convergence reports.

#![no_std]
#![deny(unsafe_code)]
#![warn(missing_docs)]
// `!(x > y)` is used on purpose so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod complex;
pub mod error;
pub mod gapcat;
pub mod kernel;
pub mod markoff;
pub mod pants;
pub mod verify;

pub use complex::ComplexValue;
pub use error::{Error, Result};
pub use gapcat::{BoundaryKind, BoundarySpec, EndDescriptor, EndKind};
pub use markoff::{GeodesicRecord, Slope, TraceTriple, WeierstrassClass};
pub use pants::{FootLayout, PantsSpec};
pub use verify::{Identity, TermRow, VerificationReport};
