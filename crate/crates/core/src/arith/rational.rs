use alloc::string::ToString;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::{Error, Result};

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `max(|numerator|, denominator)`.
pub fn height(q: &Rational) -> BigInt {
    let n = q.numer().abs();
    if &n > q.denom() {
        n
    } else {
        q.denom().clone()
    }
}

/// Parses `p/q` or `p`: digits only, optional leading minus on `p`, no
/// whitespace, `q` nonzero.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let err = |position| Error::ParseRational { input: input.to_string(), position };
    let (numer_str, denom_str, denom_start) = match input.find('/') {
        Some(i) => (&input[..i], Some(&input[i + 1..]), i + 1),
        None => (input, None, 0),
    };
    let digits_start = usize::from(numer_str.starts_with('-'));
    check_digits(&numer_str[digits_start..], digits_start).map_err(err)?;
    let numer: BigInt = numer_str.parse().map_err(|_| err(0))?;
    let denom = match denom_str {
        None => BigInt::from(1),
        Some(d) => {
            check_digits(d, denom_start).map_err(err)?;
            let d: BigInt = d.parse().map_err(|_| err(denom_start))?;
            if d.is_zero() {
                return Err(err(denom_start));
            }
            d
        }
    };
    Ok(Rational::new(numer, denom))
}

fn check_digits(s: &str, offset: usize) -> core::result::Result<(), usize> {
    if s.is_empty() {
        return Err(offset);
    }
    match s.bytes().position(|b| !b.is_ascii_digit()) {
        Some(i) => Err(offset + i),
        None => Ok(()),
    }
}

fn integer_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Non-negative square root, if `q` is the square of a rational.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    // lowest terms: q is a square iff numerator and denominator both are
    let n = integer_sqrt(q.numer())?;
    let d = integer_sqrt(q.denom())?;
    Some(Rational::new(n, d))
}

/// True iff `q` is the square of a rational; zero counts.
pub fn is_square(q: &Rational) -> bool {
    rational_sqrt(q).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares() {
        assert!(is_square(&int(331776)));
        assert_eq!(rational_sqrt(&int(331776)), Some(int(576)));
        assert!(!is_square(&int(229)));
        assert!(is_square(&int(0)));
        assert!(is_square(&rat(9, 4)));
        assert!(!is_square(&rat(-9, 4)));
        assert!(!is_square(&rat(1, 2)));
    }

    #[test]
    fn parse_accepts_canonical_forms() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-12/5").unwrap(), rat(-12, 5));
        assert_eq!(parse_rational("4/8").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-463/162").unwrap().to_string(), "-463/162");
        assert_eq!(int(7).to_string(), "7");
    }

    #[test]
    fn parse_rejects_with_position() {
        let pos = |s: &str| match parse_rational(s) {
            Err(Error::ParseRational { position, .. }) => position,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(pos("1/0"), 2);
        assert_eq!(pos(" 1"), 0);
        assert_eq!(pos("1/-2"), 2);
        assert_eq!(pos("+3"), 0);
        assert_eq!(pos("12x"), 2);
        assert_eq!(pos(""), 0);
        assert_eq!(pos("3/"), 2);
    }

    #[test]
    fn height_is_max_of_parts() {
        assert_eq!(height(&rat(-463, 162)), BigInt::from(463));
        assert_eq!(height(&rat(1, 50)), BigInt::from(50));
    }
}
