use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::var::{Var, NVARS};
use super::RatFunc;
use crate::arith::{rational_sqrt, Rational};

/// Exponent vector over the global variable list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial([u16; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var, e: u16) -> Self {
        let mut m = Self::one();
        m.0[v.index()] = e;
        m
    }

    pub fn exponent(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn with_exponent(&self, v: Var, e: u16) -> Self {
        let mut m = self.clone();
        m.0[v.index()] = e;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = [0u16; NVARS];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(other.0.iter())) {
            *o = a + b;
        }
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = [0u16; NVARS];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(other.0.iter())) {
            *o = a.checked_sub(*b)?;
        }
        Some(Monomial(out))
    }

    /// Halves every exponent; `None` if one is odd.
    fn halve(&self) -> Option<Monomial> {
        let mut out = [0u16; NVARS];
        for (o, &a) in out.iter_mut().zip(self.0.iter()) {
            if a % 2 == 1 {
                return None;
            }
            *o = a / 2;
        }
        Some(Monomial(out))
    }

    pub fn vars(&self) -> impl Iterator<Item = (Var, u16)> + '_ {
        Var::ALL.into_iter().map(|v| (v, self.exponent(v))).filter(|(_, e)| *e > 0)
    }
}

/// Graded lexicographic: total degree first, then the variable order of [`Var`].
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.vars().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial with rational coefficients.
///
/// Zero coefficients are never stored; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn integer(n: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rational::one(), Monomial::var(v, 1))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value if the polynomial is constant (zero included).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, v: Var) -> Option<u16> {
        self.terms.keys().map(|m| m.exponent(v)).max()
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    pub fn variables(&self) -> Vec<Var> {
        Var::ALL.into_iter().filter(|&v| self.involves(v)).collect()
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero();
        }
        MultiPoly { terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    fn mul_term(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(n, k)| (n.mul(m), k * c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut acc = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(v);
            (e > 0).then(|| (m.with_exponent(v, e - 1), c * Rational::from_integer(BigInt::from(e))))
        }))
    }

    /// Coefficients of the polynomial viewed in `v` over the other variables,
    /// ascending by power of `v`.
    pub fn coefficients_in(&self, v: Var) -> Vec<MultiPoly> {
        let Some(d) = self.degree_in(v) else {
            return Vec::new();
        };
        let mut out = vec![MultiPoly::zero(); usize::from(d) + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            out[usize::from(e)].terms.insert(m.with_exponent(v, 0), c.clone());
        }
        out
    }

    /// Inverse of [`MultiPoly::coefficients_in`].
    pub fn from_coefficients_in(v: Var, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            let shift = Monomial::var(v, i as u16);
            for (m, k) in &c.terms {
                debug_assert_eq!(m.exponent(v), 0, "coefficient mentions {v}");
                out.add_term(m.mul(&shift), k.clone());
            }
        }
        out
    }

    /// Polynomial substitution `v -> p` for each binding.
    pub fn compose(&self, bindings: &[(Var, MultiPoly)]) -> MultiPoly {
        let mut powers: Vec<(Var, Vec<MultiPoly>)> = bindings
            .iter()
            .map(|(v, p)| {
                let d = self.degree_in(*v).unwrap_or(0);
                let mut pw = Vec::with_capacity(usize::from(d) + 1);
                pw.push(MultiPoly::one());
                for i in 1..=usize::from(d) {
                    let next = &pw[i - 1] * p;
                    pw.push(next);
                }
                (*v, pw)
            })
            .collect();
        powers.sort_by_key(|(v, _)| *v);
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let mut acc = MultiPoly::constant(c.clone());
            for (v, pw) in &powers {
                let e = m.exponent(*v);
                rest = rest.with_exponent(*v, 0);
                if e > 0 {
                    acc = &acc * &pw[usize::from(e)];
                }
            }
            out = out + acc.mul_term(&rest, &Rational::one());
        }
        out
    }

    /// Specializes variables to rational values.
    pub fn specialize(&self, values: &[(Var, Rational)]) -> MultiPoly {
        let bindings: Vec<(Var, MultiPoly)> =
            values.iter().map(|(v, q)| (*v, MultiPoly::constant(q.clone()))).collect();
        self.compose(&bindings)
    }

    /// Rational-function substitution. Denominators are carried as the product
    /// of binding denominators raised to the maximal exponent that occurs.
    pub fn substitute(&self, bindings: &[(Var, RatFunc)]) -> RatFunc {
        let mut den = MultiPoly::one();
        // (var, max exponent, numerator powers, denominator powers)
        let mut tables: Vec<(Var, u16, Vec<MultiPoly>, Vec<MultiPoly>)> = Vec::new();
        for (v, r) in bindings {
            let d = self.degree_in(*v).unwrap_or(0);
            if d == 0 {
                continue;
            }
            let mut np = vec![MultiPoly::one()];
            let mut dp = vec![MultiPoly::one()];
            for i in 1..=usize::from(d) {
                let n_next = &np[i - 1] * r.numer();
                let d_next = &dp[i - 1] * r.denom();
                np.push(n_next);
                dp.push(d_next);
            }
            den = &den * &dp[usize::from(d)];
            tables.push((*v, d, np, dp));
        }
        let mut num = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let mut acc = MultiPoly::constant(c.clone());
            for (v, d, np, dp) in &tables {
                let e = m.exponent(*v);
                rest = rest.with_exponent(*v, 0);
                if e > 0 {
                    acc = &acc * &np[usize::from(e)];
                }
                if e < *d {
                    acc = &acc * &dp[usize::from(d - e)];
                }
            }
            num = num + acc.mul_term(&rest, &Rational::one());
        }
        RatFunc::new(num, den).expect("products of nonzero denominators are nonzero")
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder (or the divisor is zero).
    pub fn exact_div(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        let (lm, lc) = divisor.leading_term()?;
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(&lm)?;
            let qc = c / &lc;
            let sub = divisor.mul_term(&qm, &qc);
            rem = &rem - &sub;
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Positive content: gcd of numerators over lcm of denominators.
    pub fn content(&self) -> Rational {
        let mut g = BigInt::zero();
        let mut l = BigInt::one();
        for c in self.terms.values() {
            g = g.gcd(c.numer());
            l = l.lcm(c.denom());
        }
        if g.is_zero() {
            return Rational::one();
        }
        Rational::new(g, l)
    }

    /// Sign of the leading coefficient (zero for the zero polynomial).
    pub fn leading_sign(&self) -> i8 {
        match self.leading_term() {
            None => 0,
            Some((_, c)) if c.is_negative() => -1,
            Some(_) => 1,
        }
    }

    pub fn map_coefficients(&self, f: impl Fn(&Rational) -> Rational) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub(crate) fn square_root(&self) -> Option<MultiPoly> {
        let Some((top, top_c)) = self.leading_term() else {
            return Some(MultiPoly::zero());
        };
        let (bottom, _) = self.terms.iter().next().expect("nonzero");
        let min_degree = bottom.degree();
        let root_lm = top.halve()?;
        let root_lc = rational_sqrt(top_c)?;
        let twice_lead = (root_lm.clone(), &root_lc + &root_lc);
        let mut root = MultiPoly::term(root_lc.clone(), root_lm.clone());
        let mut rem = self - &(&root * &root);
        // every further term t of the root satisfies 2*deg(t) >= min_degree
        while let Some((m, c)) = rem.leading_term() {
            let tm = m.div(&twice_lead.0)?;
            if 2 * tm.degree() < min_degree || tm >= root_lm {
                return None;
            }
            let tc = c / &twice_lead.1;
            let t = MultiPoly::term(tc.clone(), tm.clone());
            // rem -= 2*t*root + t^2
            let cross = root.mul_term(&tm, &(&tc + &tc));
            rem = &(&rem - &cross) - &(&t * &t);
            root.add_term(tm, tc);
        }
        Some(root)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Descending monomial order, `*` for products and `^` for powers.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        let (mut big, small) = if self.len() >= rhs.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        let (outer, inner) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = MultiPoly::zero();
        for (m, c) in &outer.terms {
            for (n, k) in &inner.terms {
                out.add_term(m.mul(n), c * k);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;

    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        if self.len() < rhs.len() {
            return rhs + self;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;

    fn sub(mut self, rhs: MultiPoly) -> MultiPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        MultiPoly::one()
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use alloc::string::ToString;

    fn x() -> MultiPoly {
        MultiPoly::var(Var::X)
    }

    #[test]
    fn grlex_order() {
        let a1 = Monomial::var(Var::A1, 1);
        let x2 = Monomial::var(Var::X, 2);
        let e = Monomial::var(Var::E, 1);
        assert!(x2 > a1, "higher degree wins");
        assert!(a1 > e, "earlier variable wins at equal degree");
        assert!(Monomial::one() < e);
    }

    #[test]
    fn display_canonical() {
        let p = &(&x().pow(2) - &MultiPoly::var(Var::A1).scale(&rat(3, 2))) + &MultiPoly::integer(-7);
        assert_eq!(p.to_string(), "X^2 - 3/2*a1 - 7");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        let q = &MultiPoly::var(Var::A1) * &MultiPoly::var(Var::X);
        assert_eq!((-&q).to_string(), "-a1*X");
    }

    #[test]
    fn arithmetic_cancels_to_zero() {
        let u = MultiPoly::var(Var::U);
        let v = MultiPoly::var(Var::V);
        let lhs = &(&u + &v) * &(&u - &v);
        let rhs = &(&u * &u) - &(&v * &v);
        assert_eq!(lhs, rhs);
        assert!((&lhs - &rhs).is_zero());
    }

    #[test]
    fn exact_division() {
        let u = MultiPoly::var(Var::U);
        let v = MultiPoly::var(Var::V);
        let f = &(&u + &v).pow(3) * &(&u - &v.scale(&int(2)));
        assert_eq!(f.exact_div(&(&u + &v)), Some(&(&u + &v).pow(2) * &(&u - &v.scale(&int(2)))));
        assert_eq!(f.exact_div(&(&u + &MultiPoly::one())), None);
        assert_eq!(f.exact_div(&MultiPoly::zero()), None);
        assert_eq!(f.exact_div(&MultiPoly::integer(2)), Some(f.scale(&rat(1, 2))));
    }

    #[test]
    fn square_roots() {
        let u = MultiPoly::var(Var::U);
        let v = MultiPoly::var(Var::V);
        let s = &u + &v;
        assert_eq!((&s * &s).square_root(), Some(s.clone()));
        let neg = -&s;
        assert_eq!((&neg * &neg).square_root(), Some(s));
        assert_eq!((&(&u * &u) + &(&v * &v)).square_root(), None);
        assert_eq!(MultiPoly::integer(2).square_root(), None);
        assert_eq!(MultiPoly::constant(rat(9, 4)).square_root(), Some(MultiPoly::constant(rat(3, 2))));
        let g = &(&u * &v) - &(&u.pow(3) + &MultiPoly::integer(5));
        assert_eq!((&g * &g).square_root(), Some(-&g));
        let almost = &(&g * &g) + &MultiPoly::one();
        assert_eq!(almost.square_root(), None);
    }

    #[test]
    fn substitution() {
        // X^2 at X = 1/2
        let half = RatFunc::from(rat(1, 2));
        assert_eq!(x().pow(2).substitute(&[(Var::X, half)]), RatFunc::from(rat(1, 4)));
        // U^2 - 9 at U = -15/4
        let f = &MultiPoly::var(Var::U).pow(2) - &MultiPoly::integer(9);
        let val = f.substitute(&[(Var::U, RatFunc::from(rat(-15, 4)))]);
        assert_eq!(val, RatFunc::from(rat(81, 16)));
        let comp = f.compose(&[(Var::U, MultiPoly::var(Var::V) + MultiPoly::one())]);
        assert_eq!(comp.to_string(), "V^2 + 2*V - 8");
    }

    #[test]
    fn coefficients_round_trip() {
        let p = &(&x().pow(3) * &MultiPoly::var(Var::A2)) + &MultiPoly::var(Var::A4);
        let cs = p.coefficients_in(Var::X);
        assert_eq!(cs.len(), 4);
        assert_eq!(cs[3], MultiPoly::var(Var::A2));
        assert_eq!(cs[0], MultiPoly::var(Var::A4));
        assert!(cs[1].is_zero());
        assert_eq!(MultiPoly::from_coefficients_in(Var::X, &cs), p);
        assert_eq!(p.derivative(Var::X), &x().pow(2) * &MultiPoly::var(Var::A2).scale(&int(3)));
    }

    #[test]
    fn content_is_positive() {
        let p = &MultiPoly::var(Var::U).scale(&rat(-4, 3)) + &MultiPoly::constant(rat(6, 5));
        assert_eq!(p.content(), rat(2, 15));
        assert_eq!(p.leading_sign(), -1);
    }
}
