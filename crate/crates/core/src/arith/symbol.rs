use alloc::collections::BTreeSet;
use alloc::string::ToString;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::factor::{factorize, is_prime, FactorConfig};
use super::{BrauerClass, Rational};
use crate::{Error, Result};

/// A place of Q. Finite places sort by prime; the real place sorts last.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Prime(BigUint),
    Real,
}

impl Place {
    pub fn prime(p: impl Into<BigUint>) -> Result<Place> {
        let p = p.into();
        if is_prime(&p) {
            Ok(Place::Prime(p))
        } else {
            Err(Error::NotPrime(p.to_string()))
        }
    }

    pub(crate) fn two() -> Place {
        Place::Prime(BigUint::from(2u8))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Real => f.write_str("real"),
        }
    }
}

/// The squarefree integer `d` with `q = d * s^2` for a rational `s`.
pub fn squarefree_part(q: &Rational, cfg: &FactorConfig) -> Result<BigInt> {
    Ok(square_class(q, cfg)?.0)
}

/// `squarefree_part(q)` together with its prime divisors. Perfect squares in
/// the numerator or denominator are recognized without factoring.
pub(crate) fn square_class(q: &Rational, cfg: &FactorConfig) -> Result<(BigInt, BTreeSet<BigUint>)> {
    if q.is_zero() {
        return Err(Error::ZeroArgument("squarefree_part"));
    }
    // n/d = n*d / d^2
    let mut out = BigInt::from(if q.is_negative() { -1 } else { 1 });
    let mut primes = BTreeSet::new();
    for part in [q.numer(), q.denom()] {
        let part = part.abs();
        if part.sqrt().pow(2) == part {
            continue;
        }
        for (p, e) in factorize(&part, cfg)?.primes {
            if e % 2 == 1 {
                out *= BigInt::from(p.clone());
                primes.insert(p);
            }
        }
    }
    Ok((out, primes))
}

/// Jacobi symbol `(a | n)` for odd positive `n`.
pub fn jacobi(a: &BigInt, n: &BigUint) -> i8 {
    assert!(n.is_odd(), "Jacobi symbol needs an odd modulus");
    let modulus = BigInt::from(n.clone());
    let mut a = a.mod_floor(&modulus).to_biguint().expect("nonnegative after mod_floor");
    let mut n = n.clone();
    let mut result = 1i8;
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        a >>= tz;
        let n8 = (&n % 8u8).to_u8().expect("small");
        if tz % 2 == 1 && (n8 == 3 || n8 == 5) {
            result = -result;
        }
        if (&a % 4u8).to_u8() == Some(3) && n8 % 4 == 3 {
            result = -result;
        }
        core::mem::swap(&mut a, &mut n);
        a %= &n;
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// `(a, b)_v` for squarefree nonzero integers.
pub(crate) fn local_symbol(a: &BigInt, b: &BigInt, place: &Place) -> i8 {
    let p = match place {
        Place::Real => return if a.is_negative() && b.is_negative() { -1 } else { 1 },
        Place::Prime(p) => p,
    };
    let pi = BigInt::from(p.clone());
    let split = |x: &BigInt| -> (u32, BigInt) {
        if x.is_multiple_of(&pi) {
            (1, x / &pi)
        } else {
            (0, x.clone())
        }
    };
    let (alpha, u) = split(a);
    let (beta, v) = split(b);
    if p == &BigUint::from(2u8) {
        let m = |x: &BigInt, k: u8| x.mod_floor(&BigInt::from(k)).to_u8().expect("small");
        let eps = |x: &BigInt| u32::from(m(x, 4) == 3);
        let omega = |x: &BigInt| u32::from(matches!(m(x, 8), 3 | 5));
        let e = eps(&u) * eps(&v) + alpha * omega(&v) + beta * omega(&u);
        return if e % 2 == 1 { -1 } else { 1 };
    }
    let mut s = 1i8;
    if alpha * beta == 1 && (p % 4u8).to_u8() == Some(3) {
        s = -s;
    }
    if beta == 1 {
        s *= jacobi(&u, p);
    }
    if alpha == 1 {
        s *= jacobi(&v, p);
    }
    s
}

/// The local Hilbert symbol `(a, b)_v`, returned as `1` or `-1`.
pub fn hilbert_symbol(a: &Rational, b: &Rational, place: &Place, cfg: &FactorConfig) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroArgument("hilbert_symbol"));
    }
    let a = squarefree_part(a, cfg)?;
    let b = squarefree_part(b, cfg)?;
    Ok(local_symbol(&a, &b, place))
}

/// The quaternion class `(a, b)` as the set of places where it ramifies.
pub fn symbol_class(a: &Rational, b: &Rational, cfg: &FactorConfig) -> Result<BrauerClass> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroArgument("symbol_class"));
    }
    let a = squarefree_part(a, cfg)?;
    let b = squarefree_part(b, cfg)?;
    symbol_class_squarefree(&a, &b, cfg)
}

pub(crate) fn symbol_class_squarefree(a: &BigInt, b: &BigInt, cfg: &FactorConfig) -> Result<BrauerClass> {
    let mut support = BTreeSet::new();
    for x in [a, b] {
        if !x.abs().is_one() {
            support.extend(factorize(x, cfg)?.primes.into_keys());
        }
    }
    class_on_support(a, b, &support)
}

/// `(a, b)` for squarefree `a`, `b` whose odd prime divisors all lie in
/// `support`.
pub(crate) fn class_on_support(a: &BigInt, b: &BigInt, support: &BTreeSet<BigUint>) -> Result<BrauerClass> {
    let candidates =
        support.iter().map(|p| Place::Prime(p.clone())).chain([Place::two(), Place::Real]).collect::<BTreeSet<Place>>();
    let ramified: BTreeSet<Place> = candidates.into_iter().filter(|v| local_symbol(a, b, v) == -1).collect();
    BrauerClass::from_places(ramified)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use alloc::vec;

    const CFG: FactorConfig = FactorConfig::DEFAULT;

    fn places(ps: &[Option<u32>]) -> BrauerClass {
        BrauerClass::from_places(ps.iter().map(|p| match p {
            Some(p) => Place::Prime(BigUint::from(*p)),
            None => Place::Real,
        }))
        .unwrap()
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&int(18), &CFG).unwrap(), BigInt::from(2));
        assert_eq!(squarefree_part(&rat(1, 2), &CFG).unwrap(), BigInt::from(2));
        assert_eq!(squarefree_part(&rat(-75, 4), &CFG).unwrap(), BigInt::from(-3));
        assert_eq!(squarefree_part(&int(-1), &CFG).unwrap(), BigInt::from(-1));
        assert!(squarefree_part(&int(0), &CFG).is_err());
    }

    #[test]
    fn hilbert_examples() {
        let h = |a: i64, b: i64, v: &Place| hilbert_symbol(&int(a), &int(b), v, &CFG).unwrap();
        let two = Place::prime(2u32).unwrap();
        let three = Place::prime(3u32).unwrap();
        assert_eq!(h(-1, -1, &Place::Real), -1);
        assert_eq!(h(-1, -1, &two), -1);
        assert_eq!(h(2, 3, &three), -1);
        assert_eq!(h(2, 3, &two), -1);
        assert_eq!(h(2, 3, &Place::Real), 1);
        // (p, p)_p = (p, -1)_p = (-1 | p)
        assert_eq!(h(5, 5, &Place::prime(5u32).unwrap()), 1);
        assert_eq!(h(7, 7, &Place::prime(7u32).unwrap()), -1);
        assert_eq!(hilbert_symbol(&int(0), &int(1), &two, &CFG), Err(Error::ZeroArgument("hilbert_symbol")));
    }

    #[test]
    fn class_examples() {
        let c = |a: i64, b: i64| symbol_class(&int(a), &int(b), &CFG).unwrap();
        assert_eq!(c(-1, -1), places(&[Some(2), None]));
        assert_eq!(c(9, 9), BrauerClass::trivial());
        assert_eq!(c(2, 3), places(&[Some(2), Some(3)]));
        assert_eq!(c(-8, 16), BrauerClass::trivial());
        assert!(symbol_class(&int(3), &int(0), &CFG).is_err());
    }

    #[test]
    fn jacobi_matches_euler_criterion() {
        for p in [3u32, 5, 7, 11, 13, 101] {
            for a in 1..p {
                let euler = BigUint::from(a).modpow(&BigUint::from((p - 1) / 2), &BigUint::from(p));
                let expected = if euler.is_one() { 1 } else { -1 };
                assert_eq!(jacobi(&BigInt::from(a), &BigUint::from(p)), expected, "({a}|{p})");
                assert_eq!(jacobi(&BigInt::from(i64::from(a) - i64::from(p)), &BigUint::from(p)), expected);
            }
            assert_eq!(jacobi(&BigInt::from(p), &BigUint::from(p)), 0);
        }
        let _ = vec![0u8];
    }

    #[test]
    fn place_requires_prime() {
        assert!(Place::prime(9u32).is_err());
        assert!(Place::prime(1u32).is_err());
        assert_eq!(Place::prime(13u32).unwrap().to_string(), "13");
        assert!(Place::Prime(BigUint::from(97u32)) < Place::Real);
    }
}
