//! Exact arithmetic for generic A4 quartics and their embedding obstruction.
//!
//! The crate is `no_std` (it needs `alloc`). It covers:
//!
//! - [`arith`]: rationals, bounded factorization, Hilbert symbols and 2-torsion
//!   Brauer classes over Q.
//! - [`poly`]: sparse multivariate polynomials, their fraction field and
//!   univariate polynomials over either, with resultants and discriminants.
//! - [`resolvent`]: the cubic resolvent `Q = P'^2 mod P` of a monic quartic and
//!   the identities around it.
//! - [`galois`]: Galois groups of rational cubics and quartics, Sturm counts.
//! - [`traceform`]: the trace form `Tr(x^2)` and its Hasse invariant.
//! - [`generic`]: the two-parameter A4 family, its obstruction class and the
//!   five-parameter family of embeddable specializations.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
mod error;
pub mod galois;
pub mod generic;
pub mod poly;
pub mod report;
pub mod resolvent;
pub mod traceform;

pub use arith::{BrauerClass, FactorConfig, Place, Rational};
pub use error::{Error, Result};
pub use poly::{MultiPoly, RatFunc, UniPoly, Var};
pub use report::IdentityReport;
