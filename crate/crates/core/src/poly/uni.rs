use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{MultiPoly, RatFunc, Var};
use crate::arith::Rational;
use crate::{Error, Result};

/// Coefficient ring for [`UniPoly`]: a commutative ring with exact division
/// where it exists.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_rational(q: &Rational) -> Self;

    /// `self / other` if the quotient lies in the ring; `None` for a zero
    /// divisor.
    fn exact_div(&self, other: &Self) -> Option<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }
}

/// Coefficient rings in which every nonzero element is invertible.
pub trait Field: Coeff {}

impl Coeff for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        (!other.is_zero()).then(|| self / other)
    }
}

impl Field for Rational {}

impl Coeff for MultiPoly {
    fn from_rational(q: &Rational) -> Self {
        MultiPoly::constant(q.clone())
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        MultiPoly::exact_div(self, other)
    }
}

impl Coeff for RatFunc {
    fn from_rational(q: &Rational) -> Self {
        RatFunc::from(q.clone())
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        self.checked_div(other).ok()
    }
}

impl Field for RatFunc {}

/// Univariate polynomial; `coeffs[i]` is the coefficient of `X^i`. The last
/// stored coefficient is nonzero.
#[derive(Clone, PartialEq)]
pub struct UniPoly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> UniPoly<C> {
    pub fn new(mut ascending: Vec<C>) -> Self {
        while ascending.last().is_some_and(Zero::is_zero) {
            ascending.pop();
        }
        UniPoly { coeffs: ascending }
    }

    pub fn from_descending(mut descending: Vec<C>) -> Self {
        descending.reverse();
        Self::new(descending)
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// `c * X^n`
    pub fn monomial(c: C, n: usize) -> Self {
        let mut v = vec![C::zero(); n];
        v.push(c);
        Self::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn ascending(&self) -> &[C] {
        &self.coeffs
    }

    pub fn descending(&self) -> Vec<C> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> UniPoly<D> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|k| k.clone() * c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.clone() * C::from_int(i as i64)).collect())
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Euclidean division `self = q * divisor + r` with `deg r < deg divisor`.
    ///
    /// Over a ring the leading coefficient of `divisor` must divide every
    /// intermediate leading coefficient; monic divisors always work.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc = divisor.leading().expect("nonzero");
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return Ok((Self::zero(), self.clone()));
        };
        let mut quot = vec![C::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let q = if lc.is_one() { top.clone() } else { top.exact_div(lc).ok_or(Error::InexactDivision)? };
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - q.clone() * d.clone();
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    /// `Res(f, g) = lc(f)^deg(g) * prod g(alpha)` over the roots `alpha` of
    /// `f`, computed as the Sylvester determinant by fraction-free Bareiss
    /// elimination.
    pub fn resultant(&self, g: &Self) -> Result<C> {
        let n = self.degree().ok_or(Error::ZeroPolynomial("resultant"))?;
        let m = g.degree().ok_or(Error::ZeroPolynomial("resultant"))?;
        let size = n + m;
        if size == 0 {
            return Ok(C::one());
        }
        let f_desc = self.descending();
        let g_desc = g.descending();
        let mut rows: Vec<Vec<C>> = Vec::with_capacity(size);
        for i in 0..m {
            let mut row = vec![C::zero(); size];
            row[i..i + n + 1].clone_from_slice(&f_desc);
            rows.push(row);
        }
        for i in 0..n {
            let mut row = vec![C::zero(); size];
            row[i..i + m + 1].clone_from_slice(&g_desc);
            rows.push(row);
        }
        bareiss_determinant(rows)
    }

    /// `(-1)^(n(n-1)/2) * Res(f, f') / lc(f)`.
    pub fn discriminant(&self) -> Result<C> {
        let n = self.degree().ok_or(Error::ConstantPolynomial)?;
        if n == 0 {
            return Err(Error::ConstantPolynomial);
        }
        let res = self.resultant(&self.derivative())?;
        let lc = self.leading().expect("nonzero");
        let d = res.exact_div(lc).ok_or(Error::InexactDivision)?;
        Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
    }
}

/// Determinant over an integral domain with exact division.
pub(crate) fn bareiss_determinant<C: Coeff>(mut a: Vec<Vec<C>>) -> Result<C> {
    let n = a.len();
    let mut sign_flip = false;
    let mut prev = C::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(C::zero());
            };
            a.swap(k, p);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = if prev.is_one() { t } else { t.exact_div(&prev).ok_or(Error::InexactDivision)? };
            }
            a[i][k] = C::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if sign_flip { -det } else { det })
}

impl<C: Field> UniPoly<C> {
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = C::one().exact_div(lc).expect("field");
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor over a field");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree().unwrap_or(0) == 0
    }
}

impl UniPoly<MultiPoly> {
    /// Views `p` as a polynomial in `v`.
    pub fn from_multi(p: &MultiPoly, v: Var) -> Self {
        Self::new(p.coefficients_in(v))
    }

    pub fn to_multi(&self, v: Var) -> MultiPoly {
        MultiPoly::from_coefficients_in(v, &self.coeffs)
    }

    /// Substitutes into every coefficient and the main variable `v`.
    pub fn substitute(&self, v: Var, bindings: &[(Var, RatFunc)]) -> RatFunc {
        self.to_multi(v).substitute(bindings)
    }
}

impl<C: Coeff> Add for &UniPoly<C> {
    type Output = UniPoly<C>;

    fn add(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Sub for &UniPoly<C> {
    type Output = UniPoly<C>;

    fn sub(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Mul for &UniPoly<C> {
    type Output = UniPoly<C>;

    fn mul(self, rhs: &UniPoly<C>) -> UniPoly<C> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniPoly::new(out)
    }
}

impl<C: Coeff> Neg for &UniPoly<C> {
    type Output = UniPoly<C>;

    fn neg(self) -> UniPoly<C> {
        self.map(|c| -c.clone())
    }
}

impl<C: Coeff> fmt::Debug for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Descending powers of `X`, coefficients parenthesized.
impl<C: Coeff> fmt::Display for UniPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*X")?,
                _ => write!(f, "({c})*X^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn q(cs: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_descending(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn divrem_examples() {
        let (quo, r) = q(&[1, 0, 0]).divrem(&q(&[1, 0])).unwrap();
        assert_eq!((quo, r), (q(&[1, 0]), UniPoly::zero()));
        let (quo, r) = q(&[1, 0]).divrem(&q(&[1, 0, 0])).unwrap();
        assert_eq!((quo, r), (UniPoly::zero(), q(&[1, 0])));
        let p = q(&[1, 1, 1, 1, 1]);
        let dp = p.derivative();
        let r = (&dp * &dp).rem(&p).unwrap();
        assert_eq!(r, q(&[-5, -15, -5, 0]));
        assert_eq!(p.divrem(&UniPoly::zero()).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(q(&[1, 0, -1]).resultant(&q(&[1, -2])).unwrap(), int(3));
        assert_eq!(q(&[1, 0, 1]).resultant(&q(&[1, 0, 1])).unwrap(), int(0));
        let alpha = MultiPoly::var(Var::A);
        let beta = MultiPoly::var(Var::B);
        let f = UniPoly::new(vec![-&alpha, MultiPoly::one()]);
        let g = UniPoly::new(vec![-&beta, MultiPoly::one()]);
        assert_eq!(f.resultant(&g).unwrap(), &alpha - &beta);
        assert!(q(&[1]).resultant(&UniPoly::zero()).is_err());
        // constants: Res(c, g) = c^deg g
        assert_eq!(q(&[3]).resultant(&q(&[1, 0, 5])).unwrap(), int(9));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(q(&[1, 0, 0, 8, 12]).discriminant().unwrap(), int(331776));
        assert_eq!(q(&[1, 1, 1, 1, 1]).discriminant().unwrap(), int(125));
        assert_eq!(q(&[1, 0, 1]).discriminant().unwrap(), int(-4));
        assert_eq!(q(&[5]).discriminant().unwrap_err(), Error::ConstantPolynomial);
        let b = MultiPoly::var(Var::B);
        let c = MultiPoly::var(Var::C);
        let f = UniPoly::new(vec![c.clone(), b.clone(), MultiPoly::one()]);
        assert_eq!(f.discriminant().unwrap(), &(&b * &b) - &c.scale(&int(4)));
    }

    #[test]
    fn gcd_and_squarefree() {
        let f = q(&[1, 0, -3, 2]); // (X-1)^2 (X+2)
        assert!(!f.is_squarefree());
        assert_eq!(f.gcd(&f.derivative()), q(&[1, -1]));
        assert!(q(&[1, 0, 0, 8, 12]).is_squarefree());
    }

    #[test]
    fn ring_division_needs_exact_leading_coefficient() {
        let two_x = UniPoly::new(vec![MultiPoly::zero(), MultiPoly::integer(2)]);
        let f = UniPoly::new(vec![MultiPoly::one(), MultiPoly::var(Var::U)]);
        // 1/2 is a unit in Q[U], so this divides
        assert!(f.divrem(&two_x).is_ok());
        let ux = UniPoly::new(vec![MultiPoly::zero(), MultiPoly::var(Var::U)]);
        let g = UniPoly::new(vec![MultiPoly::zero(), MultiPoly::var(Var::V)]);
        assert_eq!(g.divrem(&ux).unwrap_err(), Error::InexactDivision);
    }
}
