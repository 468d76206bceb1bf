//! Seeded generators for the randomized suites.

use a4witt_core::generic::{obstruction_symbol_args, prop1_quartic, uv_from_symbols, Sign, SymbolParams};
use a4witt_core::resolvent::QuarticCoeffs;
use a4witt_core::Rational;
use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Independent stream `stream` of the run seeded with `seed`.
pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

/// Numerator in `[-h, h]`, denominator in `[1, h]`.
pub fn rational(rng: &mut impl Rng, h: i64) -> Rational {
    Rational::new(BigInt::from(rng.gen_range(-h..=h)), BigInt::from(rng.gen_range(1..=h)))
}

pub fn nonzero_rational(rng: &mut impl Rng, h: i64) -> Rational {
    loop {
        let r = rational(rng, h);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Monic integer quartic with coefficients in `[-bound, bound]` and nonzero
/// discriminant.
pub fn quartic(rng: &mut impl Rng, bound: i64) -> QuarticCoeffs<Rational> {
    loop {
        let a = [0; 4].map(|_| rng.gen_range(-bound..=bound));
        let p = QuarticCoeffs::from_ints(a);
        if !p.discriminant().is_zero() {
            return p;
        }
    }
}

/// `(U, V)` of height at most `h` off the loci where the obstruction formula
/// is undefined or the family's discriminant vanishes.
pub fn family_point(rng: &mut impl Rng, h: i64) -> (Rational, Rational) {
    loop {
        let u = nonzero_rational(rng, h);
        let v = nonzero_rational(rng, h);
        if obstruction_symbol_args(&u, &v).is_ok() && !prop1_quartic(&u, &v).discriminant().is_zero() {
            return (u, v);
        }
    }
}

/// Parameters with `D, E` nonzero; `A, B, C, D, E` of height at most `h`.
pub fn symbol_params(rng: &mut impl Rng, h: i64, sign: Sign) -> SymbolParams {
    let a = rational(rng, h);
    let b = rational(rng, h);
    let c = rational(rng, h);
    let d = nonzero_rational(rng, h);
    let e = nonzero_rational(rng, h);
    SymbolParams::new(a, b, c, d, e, sign)
}

/// Parameters whose image `(U, V)` is defined.
pub fn mappable_params(rng: &mut impl Rng, h: i64, sign: Sign) -> SymbolParams {
    loop {
        let p = symbol_params(rng, h, sign);
        if let Ok((u, v, _)) = uv_from_symbols(&p) {
            if obstruction_symbol_args(&u, &v).is_ok() {
                return p;
            }
        }
    }
}
