//! Exact polynomial arithmetic over Q.
//!
//! [`MultiPoly`] is sparse over the fixed variable set [`Var`] in graded
//! lexicographic order; [`RatFunc`] is its (unreduced) fraction field;
//! [`UniPoly`] is univariate over any [`Coeff`] ring, which is how the
//! quartics and cubics with symbolic coefficients are handled.

mod multi;
mod ratfunc;
mod uni;
mod var;

pub use multi::{Monomial, MultiPoly};
pub use ratfunc::RatFunc;
pub use uni::{Coeff, Field, UniPoly};
pub use var::{Var, NVARS};

/// Square root in Q[vars], normalized to a positive leading coefficient;
/// `None` when `f` is not a square.
pub fn poly_square_root(f: &MultiPoly) -> Option<MultiPoly> {
    f.square_root()
}
