//! Exact scalars over Q: rationals, factorization, squares, Hilbert symbols and
//! 2-torsion Brauer classes.

mod brauer;
mod factor;
mod rational;
mod symbol;

pub use brauer::{class_add, BrauerClass};
pub use factor::{factorize, is_prime, FactorConfig, Factorization};
pub use rational::{height, int, is_square, parse_rational, rat, rational_sqrt, Rational};
pub(crate) use symbol::{class_on_support, square_class};
pub use symbol::{hilbert_symbol, jacobi, squarefree_part, symbol_class, Place};
