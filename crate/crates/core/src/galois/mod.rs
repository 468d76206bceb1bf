//! Galois groups of rational cubics and quartics, and exact real-root counts.

pub mod numeric;

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{is_square, rational_sqrt, Rational};
use crate::poly::UniPoly;
use crate::resolvent::QuarticCoeffs;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GaloisLabel {
    C3,
    S3,
    C4,
    V4,
    D4,
    A4,
    S4,
    /// Degrees of the irreducible factors, ascending.
    Reducible(Vec<usize>),
}

impl fmt::Display for GaloisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GaloisLabel::C3 => f.write_str("C3"),
            GaloisLabel::S3 => f.write_str("S3"),
            GaloisLabel::C4 => f.write_str("C4"),
            GaloisLabel::V4 => f.write_str("V4"),
            GaloisLabel::D4 => f.write_str("D4"),
            GaloisLabel::A4 => f.write_str("A4"),
            GaloisLabel::S4 => f.write_str("S4"),
            GaloisLabel::Reducible(shape) => {
                f.write_str("Reducible[")?;
                for (i, d) in shape.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{d}")?;
                }
                f.write_str("]")
            }
        }
    }
}

/// One squareness test performed during classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareTest {
    pub quantity: &'static str,
    pub value: Rational,
    pub is_square: bool,
}

/// The quantities a quartic classification was decided on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupCertificate {
    pub disc: Rational,
    pub disc_is_square: bool,
    /// `z^3 - a2 z^2 + (a1 a3 - 4 a4) z - (a1^2 a4 - 4 a2 a4 + a3^2)`, whose
    /// roots are `x1 x2 + x3 x4` and its conjugates; descending coefficients.
    pub resolvent: [Rational; 4],
    pub resolvent_rational_roots: Vec<Rational>,
    pub auxiliary: Vec<SquareTest>,
}

impl GroupCertificate {
    /// Recomputes every recorded quantity from `f` and compares.
    pub fn recheck(&self, f: &UniPoly<Rational>) -> Result<bool> {
        let p = QuarticCoeffs::from_poly(f)?;
        let resolvent = classification_resolvent(&p);
        let roots = rational_roots(&UniPoly::from_descending(resolvent.to_vec()))?;
        let disc = p.discriminant();
        let aux_ok = self.auxiliary.iter().all(|t| is_square(&t.value) == t.is_square);
        Ok(disc == self.disc
            && is_square(&disc) == self.disc_is_square
            && resolvent == self.resolvent
            && roots == self.resolvent_rational_roots
            && aux_ok)
    }
}

fn classification_resolvent(p: &QuarticCoeffs<Rational>) -> [Rational; 4] {
    let QuarticCoeffs { a1, a2, a3, a4 } = p;
    let four = Rational::from_integer(BigInt::from(4));
    [Rational::one(), -a2.clone(), a1 * a3 - &four * a4, -(a1 * a1 * a4 - &four * a2 * a4 + a3 * a3)]
}

/// Clears denominators: a primitive integer polynomial with the same roots.
fn integer_coefficients(f: &UniPoly<Rational>) -> Vec<BigInt> {
    let l = f.ascending().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    f.ascending().iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect()
}

/// All distinct rational roots, ascending.
pub fn rational_roots(f: &UniPoly<Rational>) -> Result<Vec<Rational>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("rational_roots"));
    }
    let mut coeffs = integer_coefficients(f);
    let mut roots = BTreeSet::new();
    let lowest = coeffs.iter().position(|c| !c.is_zero()).expect("nonzero");
    if lowest > 0 {
        roots.insert(Rational::zero());
        coeffs.drain(..lowest);
    }
    if coeffs.len() > 1 {
        roots.extend(roots_by_isolation(&coeffs)?);
    }
    Ok(roots.into_iter().collect())
}

/// Sign of `a(m / 2^k)` for integer coefficients `a`, ascending.
fn sign_at_dyadic(a: &[BigInt], m: &BigInt, k: usize) -> i8 {
    let d = a.len() - 1;
    let mut acc = a[d].clone();
    for i in (0..d).rev() {
        acc = acc * m + (&a[i] << (k * (d - i)));
    }
    match acc.sign() {
        num_bigint::Sign::Plus => 1,
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
    }
}

/// Rational roots of an integer polynomial with nonzero constant term. No
/// coefficient is factored. Real roots are isolated by Sturm bisection over
/// dyadic intervals, then each is narrowed by sign bisection until the
/// interval is shorter than `1 / 2|c|`, `c` the leading coefficient. A
/// rational root has denominator dividing `c`, so at most one candidate
/// `y / c` remains per interval, and it is checked exactly.
fn roots_by_isolation(coeffs: &[BigInt]) -> Result<Vec<Rational>> {
    let lead = coeffs.last().expect("nonempty").clone();
    let f = UniPoly::new(coeffs.iter().map(|a| Rational::from_integer(a.clone())).collect());
    let h = f.divrem(&f.gcd(&f.derivative()))?.0;
    let seq: Vec<Vec<BigInt>> = sturm_sequence(&h)?.iter().map(integer_coefficients).collect();
    let h = integer_coefficients(&h);
    let changes = |m: &BigInt, k: usize| sign_changes(seq.iter().map(|s| sign_at_dyadic(s, m, k)));
    // Cauchy bound 1 + max |a_i / c| < 2^e
    let bound = coeffs.iter().map(|a| a.abs()).max().expect("nonempty") / lead.abs() + 2u8;
    let e = bound.bits() as usize;
    let two_lead = BigInt::from(2) * lead.abs();

    // (lo, hi, k) stands for the interval (lo / 2^k, hi / 2^k]
    let mut stack = vec![(-(BigInt::one() << e), BigInt::one() << e, 0usize)];
    let mut candidates = Vec::new();
    while let Some((lo, hi, k)) = stack.pop() {
        match changes(&lo, k) - changes(&hi, k) {
            0 => continue,
            1 => {}
            _ => {
                let mid = &lo + &hi;
                stack.push((lo << 1, mid.clone(), k + 1));
                stack.push((mid, hi << 1, k + 1));
                continue;
            }
        }
        let (mut lo, mut hi, mut k) = (lo, hi, k);
        let s_hi = sign_at_dyadic(&h, &hi, k);
        if s_hi == 0 {
            candidates.push(Rational::new(hi, BigInt::one() << k));
            continue;
        }
        let mut exact = None;
        while exact.is_none() && (&hi - &lo) * &two_lead >= BigInt::one() << k {
            let mid = &lo + &hi;
            k += 1;
            match sign_at_dyadic(&h, &mid, k) {
                0 => exact = Some(Rational::new(mid, BigInt::one() << k)),
                s if s == s_hi => {
                    lo <<= 1;
                    hi = mid;
                }
                _ => {
                    lo = mid;
                    hi <<= 1;
                }
            }
        }
        if let Some(x) = exact {
            candidates.push(x);
            continue;
        }
        let scale = BigInt::one() << k;
        let (a, b) = (Rational::new(&lo * &lead, scale.clone()), Rational::new(&hi * &lead, scale));
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        let y = a.ceil();
        if y <= b {
            candidates.push(y / Rational::from_integer(lead.clone()));
        }
    }
    Ok(candidates.into_iter().filter(|x| f.eval(x).is_zero()).collect())
}

/// `(X^2 + p X + q)(X^2 + s X + t)` over Q, if the root-free monic quartic
/// splits that way.
fn quadratic_split(p: &QuarticCoeffs<Rational>) -> Result<Option<[UniPoly<Rational>; 2]>> {
    let res = classification_resolvent(p);
    let two = Rational::from_integer(BigInt::from(2));
    let four = Rational::from_integer(BigInt::from(4));
    for r in rational_roots(&UniPoly::from_descending(res.to_vec()))? {
        let dq = &r * &r - &four * &p.a4;
        let dp = &p.a1 * &p.a1 - &four * (&p.a2 - &r);
        let (Some(sq), Some(sp)) = (rational_sqrt(&dq), rational_sqrt(&dp)) else {
            continue;
        };
        let (q, t) = ((&r + &sq) / &two, (&r - &sq) / &two);
        let (pp, s) = ((&p.a1 + &sp) / &two, (&p.a1 - &sp) / &two);
        for (q, t) in [(q.clone(), t.clone()), (t, q)] {
            if &pp * &t + &s * &q == p.a3 {
                let f1 = UniPoly::from_descending(vec![Rational::one(), pp.clone(), q]);
                let f2 = UniPoly::from_descending(vec![Rational::one(), s.clone(), t]);
                return Ok(Some([f1, f2]));
            }
        }
    }
    Ok(None)
}

/// Degrees of the irreducible factors of a polynomial of degree at most 4,
/// with multiplicity, ascending.
pub fn factor_shape(f: &UniPoly<Rational>) -> Result<Vec<usize>> {
    let deg = f.degree().ok_or(Error::ZeroPolynomial("factor_shape"))?;
    if deg > 4 {
        return Err(Error::WrongDegree { expected: 4, found: deg });
    }
    let mut g = f.monic();
    let mut shape = Vec::new();
    for r in rational_roots(f)? {
        let lin = UniPoly::from_descending(vec![Rational::one(), -r]);
        loop {
            let (q, rem) = g.divrem(&lin)?;
            if !rem.is_zero() {
                break;
            }
            shape.push(1);
            g = q;
        }
    }
    match g.degree() {
        Some(0) | None => {}
        Some(4) => {
            let p = QuarticCoeffs::from_poly(&g)?;
            if quadratic_split(&p)?.is_some() {
                shape.extend([2, 2]);
            } else {
                shape.push(4);
            }
        }
        Some(d) => shape.push(d),
    }
    shape.sort_unstable();
    Ok(shape)
}

#[derive(Debug, Clone, PartialEq)]
pub struct IrreducibilityCertificate {
    pub irreducible: bool,
    pub shape: Vec<usize>,
    pub rational_roots: Vec<Rational>,
    pub quadratic_factors: Option<[UniPoly<Rational>; 2]>,
}

pub fn is_irreducible_quartic(f: &UniPoly<Rational>) -> Result<IrreducibilityCertificate> {
    let p = QuarticCoeffs::from_poly(f)?;
    if p.discriminant().is_zero() {
        return Err(Error::SingularInput);
    }
    let roots = rational_roots(f)?;
    let quadratic_factors = if roots.is_empty() { quadratic_split(&p)? } else { None };
    let shape = factor_shape(f)?;
    Ok(IrreducibilityCertificate { irreducible: shape == [4], shape, rational_roots: roots, quadratic_factors })
}

/// C3 or S3 for an irreducible rational cubic.
pub fn cubic_galois(f: &UniPoly<Rational>) -> Result<GaloisLabel> {
    if f.degree() != Some(3) {
        return Err(Error::WrongDegree { expected: 3, found: f.degree().unwrap_or(0) });
    }
    if !rational_roots(f)?.is_empty() {
        return Err(Error::ReducibleInput);
    }
    let disc = f.monic().discriminant()?;
    Ok(if is_square(&disc) { GaloisLabel::C3 } else { GaloisLabel::S3 })
}

/// Label for any squarefree quartic; reducible inputs get their factor shape.
pub fn classify_quartic(f: &UniPoly<Rational>) -> Result<(GaloisLabel, GroupCertificate)> {
    let p = QuarticCoeffs::from_poly(f)?;
    let disc = p.discriminant();
    if disc.is_zero() {
        return Err(Error::SingularInput);
    }
    let disc_is_square = is_square(&disc);
    let resolvent = classification_resolvent(&p);
    let res_roots = rational_roots(&UniPoly::from_descending(resolvent.to_vec()))?;
    let mut cert = GroupCertificate {
        disc: disc.clone(),
        disc_is_square,
        resolvent,
        resolvent_rational_roots: res_roots.clone(),
        auxiliary: Vec::new(),
    };
    let shape = factor_shape(f)?;
    if shape != [4] {
        return Ok((GaloisLabel::Reducible(shape), cert));
    }
    let label = match (res_roots.len(), disc_is_square) {
        (0, true) => GaloisLabel::A4,
        (0, false) => GaloisLabel::S4,
        (3, _) => GaloisLabel::V4,
        (1, _) => {
            // C4 iff both (z^2 - r z + a4) and (z^2 + a1 z + a2 - r) split
            // over Q(sqrt(disc))
            let r = &res_roots[0];
            let four = Rational::from_integer(BigInt::from(4));
            let d1 = r * r - &four * &p.a4;
            let d2 = &p.a1 * &p.a1 - &four * (&p.a2 - r);
            let mut splits = true;
            for (name, d) in [("(r^2-4a4)*disc", d1), ("(a1^2-4(a2-r))*disc", d2)] {
                let value = &d * &disc;
                let sq = is_square(&value);
                cert.auxiliary.push(SquareTest { quantity: name, value, is_square: sq });
                splits &= sq;
            }
            if splits {
                GaloisLabel::C4
            } else {
                GaloisLabel::D4
            }
        }
        (n, _) => unreachable!("cubic resolvent with {n} distinct rational roots"),
    };
    Ok((label, cert))
}

/// Group of an irreducible, nonsingular rational quartic.
pub fn quartic_galois(f: &UniPoly<Rational>) -> Result<(GaloisLabel, GroupCertificate)> {
    match classify_quartic(f)? {
        (GaloisLabel::Reducible(_), _) => Err(Error::ReducibleInput),
        found => Ok(found),
    }
}

fn sign_changes(values: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in values.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

fn sign_of(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn sturm_sequence(f: &UniPoly<Rational>) -> Result<Vec<UniPoly<Rational>>> {
    let mut seq = vec![f.clone(), f.derivative()];
    while !seq.last().expect("nonempty").is_zero() {
        let n = seq.len();
        let r = seq[n - 2].rem(&seq[n - 1])?;
        seq.push(-&r);
    }
    seq.pop();
    Ok(seq)
}

/// Number of distinct real roots of a squarefree polynomial, by Sturm's
/// theorem.
pub fn real_root_count(f: &UniPoly<Rational>) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("real_root_count"));
    }
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let seq = sturm_sequence(f)?;
    let at_pos_inf = sign_changes(seq.iter().map(|s| sign_of(s.leading().expect("nonzero"))));
    let at_neg_inf = sign_changes(seq.iter().map(|s| {
        let lead = sign_of(s.leading().expect("nonzero"));
        if s.degree().expect("nonzero") % 2 == 1 {
            -lead
        } else {
            lead
        }
    }));
    Ok(at_neg_inf - at_pos_inf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn q(cs: &[i64]) -> UniPoly<Rational> {
        UniPoly::from_descending(cs.iter().map(|&c| int(c)).collect())
    }

    fn label(cs: &[i64]) -> GaloisLabel {
        classify_quartic(&q(cs)).unwrap().0
    }

    #[test]
    fn rational_root_examples() {
        assert!(rational_roots(&q(&[1, 0, -4, -1])).unwrap().is_empty());
        assert_eq!(rational_roots(&q(&[1, 0, -1, 0])).unwrap(), vec![int(-1), int(0), int(1)]);
        assert_eq!(rational_roots(&q(&[2, -1])).unwrap(), vec![rat(1, 2)]);
        let f = UniPoly::from_descending(vec![rat(1, 3), rat(-1, 2)]);
        assert_eq!(rational_roots(&f).unwrap(), vec![rat(3, 2)]);
    }

    /// Rational root test by brute-force divisor enumeration.
    fn divisor_roots(cs: &[i64]) -> Vec<Rational> {
        let f = q(cs);
        let divisors = |n: i64| (1..=n.abs()).filter(move |d| n % d == 0);
        let mut out: Vec<Rational> = divisors(*cs.last().unwrap())
            .flat_map(|p| divisors(cs[0]).flat_map(move |d| [rat(p, d), rat(-p, d)]))
            .filter(|x| f.eval(x).is_zero())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn isolation_agrees_with_rational_root_test() {
        let cases: [&[i64]; 7] = [
            &[6, -5, -2, 1],
            &[12, -7, -55, 28, 12],
            &[1, 0, -4, -1],
            &[9, 0, -1],
            &[-35, 1, 6, 10],
            &[4, 4, 1],
            &[36, 0, -13, 0, 1],
        ];
        for cs in cases {
            assert_eq!(rational_roots(&q(cs)).unwrap(), divisor_roots(cs), "{cs:?}");
        }
        // roots 10^30 and -1/7
        let big = Rational::from_integer(BigInt::from(10).pow(30));
        let f = &UniPoly::new(vec![-big.clone(), Rational::one()]) * &q(&[7, 1]);
        assert_eq!(rational_roots(&f).unwrap(), vec![rat(-1, 7), big]);
    }

    #[test]
    fn irreducibility_examples() {
        let c = is_irreducible_quartic(&q(&[1, 0, 0, 8, 12])).unwrap();
        assert!(c.irreducible);
        let c = is_irreducible_quartic(&q(&[1, 0, 0, 0, -1])).unwrap();
        assert!(!c.irreducible);
        assert_eq!(c.shape, vec![1, 1, 2]);
        let c = is_irreducible_quartic(&q(&[1, 0, 3, 0, 2])).unwrap();
        assert_eq!(c.shape, vec![2, 2]);
        let [f1, f2] = c.quadratic_factors.unwrap();
        assert_eq!(&f1 * &f2, q(&[1, 0, 3, 0, 2]));
        assert_eq!(is_irreducible_quartic(&q(&[1, 0, 2, 0, 1])).unwrap_err(), Error::SingularInput);
        // X^4 + 4 = (X^2+2X+2)(X^2-2X+2), no linear factor
        assert_eq!(is_irreducible_quartic(&q(&[1, 0, 0, 0, 4])).unwrap().shape, vec![2, 2]);
    }

    #[test]
    fn cubic_examples() {
        assert_eq!(cubic_galois(&q(&[1, 0, -3, -1])).unwrap(), GaloisLabel::C3);
        assert_eq!(cubic_galois(&q(&[1, 0, 0, -2])).unwrap(), GaloisLabel::S3);
        assert_eq!(cubic_galois(&q(&[1, 0, -1, 0])).unwrap_err(), Error::ReducibleInput);
    }

    #[test]
    fn quartic_corpus() {
        assert_eq!(label(&[1, 0, 0, 8, 12]), GaloisLabel::A4);
        assert_eq!(label(&[1, 1, 1, 1, 1]), GaloisLabel::C4);
        assert_eq!(label(&[1, 0, 0, 0, 1]), GaloisLabel::V4);
        assert_eq!(label(&[1, 0, 0, 0, -2]), GaloisLabel::D4);
        assert_eq!(label(&[1, 0, 0, 1, 1]), GaloisLabel::S4);
        // X^4 - 10X^2 + 1, minimal polynomial of sqrt2 + sqrt3
        assert_eq!(label(&[1, 0, -10, 0, 1]), GaloisLabel::V4);
        // X^4 - 5X^2 + 5 is cyclic
        assert_eq!(label(&[1, 0, -5, 0, 5]), GaloisLabel::C4);
        assert_eq!(label(&[1, 0, 0, 0, -1]), GaloisLabel::Reducible(vec![1, 1, 2]));
        assert_eq!(quartic_galois(&q(&[1, 0, 0, 0, -1])).unwrap_err(), Error::ReducibleInput);
    }

    #[test]
    fn certificate_records_criteria() {
        let f = q(&[1, 0, 0, 8, 12]);
        let (_, cert) = quartic_galois(&f).unwrap();
        assert_eq!(cert.disc, int(331776));
        assert!(cert.disc_is_square);
        assert_eq!(cert.resolvent, [int(1), int(0), int(-48), int(-64)]);
        assert!(cert.resolvent_rational_roots.is_empty());
        assert!(cert.recheck(&f).unwrap());
        let s4 = q(&[1, 0, 0, 1, 1]);
        let (_, cert) = quartic_galois(&s4).unwrap();
        assert_eq!(cert.disc, int(229));
        assert_eq!(cert.resolvent, [int(1), int(0), int(-4), int(-1)]);
        let mut forged = cert.clone();
        forged.disc = int(230);
        assert!(!forged.recheck(&s4).unwrap());
    }

    #[test]
    fn sturm_examples() {
        assert_eq!(real_root_count(&q(&[1, 0, -2])).unwrap(), 2);
        assert_eq!(real_root_count(&q(&[1, 0, 1])).unwrap(), 0);
        assert_eq!(real_root_count(&q(&[1, 0, 0, 8, 12])).unwrap(), 0);
        assert_eq!(real_root_count(&q(&[1, 0, -10, 0, 1])).unwrap(), 4);
        assert_eq!(real_root_count(&q(&[1, 0, 0, 0, -2])).unwrap(), 2);
        assert_eq!(real_root_count(&q(&[1, -2, 1])).unwrap_err(), Error::NotSquarefree);
        assert_eq!(real_root_count(&q(&[7])).unwrap(), 0);
    }
}
