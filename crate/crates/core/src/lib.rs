//! Quantum cohomology of flag varieties G/B and G/P: quantum Chevalley
//! products, Peterson-Woodward lifts, and the parabolic grading gr on
//! `W x Q^vee` together with checks of its filtration properties.
//!
//! Simple-root indices are 0-based in the API and 1-based in all text and
//! JSON output.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod format;
pub mod grading;
pub mod lattice;
pub mod linalg;
pub mod qchev;
pub mod qclass;
pub mod pwlift;
pub mod rootsys;
pub mod scalar;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use lattice::{Coroot, IVec, Root, MAX_RANK};
pub use rootsys::{RootSystem, Series};
pub use weyl::WeylElt;

/// Exact rationals used for Gaussian elimination and intermediate classes.
pub type Rational = num_rational::Ratio<i64>;
