//! The cubic resolvent `Q = P'^2 mod P` of a monic quartic and the identities
//! that surround it: closed-form coefficients, `disc(Q) = disc(P) b0^2`, the
//! Hessian relation, the pencil `P - T Q`, the birational change to
//! `(a1, c1, c2, c3)` and the numeric root formula.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::arith::Rational;
use crate::galois::numeric::monic_roots;
use crate::poly::{Coeff, Field, MultiPoly, RatFunc, UniPoly, Var};
use crate::report::IdentityReport;
use crate::{Error, Result};

/// Monic quartic `X^4 + a1 X^3 + a2 X^2 + a3 X + a4`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuarticCoeffs<C> {
    pub a1: C,
    pub a2: C,
    pub a3: C,
    pub a4: C,
}

impl<C: Coeff> QuarticCoeffs<C> {
    pub fn new(a1: C, a2: C, a3: C, a4: C) -> Self {
        QuarticCoeffs { a1, a2, a3, a4 }
    }

    pub fn to_poly(&self) -> UniPoly<C> {
        UniPoly::new(vec![self.a4.clone(), self.a3.clone(), self.a2.clone(), self.a1.clone(), C::one()])
    }

    /// Accepts a degree-4 polynomial, dividing through by its leading
    /// coefficient.
    pub fn from_poly(f: &UniPoly<C>) -> Result<Self> {
        if f.degree() != Some(4) {
            return Err(Error::WrongDegree { expected: 4, found: f.degree().unwrap_or(0) });
        }
        let lc = f.leading().expect("degree 4");
        let c = |i| f.coeff(i).exact_div(lc).ok_or(Error::InexactDivision);
        Ok(QuarticCoeffs { a1: c(3)?, a2: c(2)?, a3: c(1)?, a4: c(0)? })
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> QuarticCoeffs<D> {
        QuarticCoeffs { a1: f(&self.a1), a2: f(&self.a2), a3: f(&self.a3), a4: f(&self.a4) }
    }

    pub fn discriminant(&self) -> C {
        self.to_poly().discriminant().expect("degree 4, monic")
    }
}

impl QuarticCoeffs<MultiPoly> {
    /// The generic quartic over Q(a1, a2, a3, a4).
    pub fn symbolic() -> Self {
        QuarticCoeffs::new(
            MultiPoly::var(Var::A1),
            MultiPoly::var(Var::A2),
            MultiPoly::var(Var::A3),
            MultiPoly::var(Var::A4),
        )
    }
}

impl QuarticCoeffs<Rational> {
    pub fn from_ints(a: [i64; 4]) -> Self {
        let c = |n: i64| Rational::from_integer(n.into());
        QuarticCoeffs::new(c(a[0]), c(a[1]), c(a[2]), c(a[3]))
    }
}

impl<C: Coeff> fmt::Display for QuarticCoeffs<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[1, {}, {}, {}, {}]", self.a1, self.a2, self.a3, self.a4)
    }
}

/// `b0 X^3 + b1 X^2 + b2 X + b3`, the remainder of `P'^2` modulo `P`.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolventCubic<C> {
    pub b0: C,
    pub b1: C,
    pub b2: C,
    pub b3: C,
}

impl<C: Coeff> ResolventCubic<C> {
    pub fn to_poly(&self) -> UniPoly<C> {
        UniPoly::new(vec![self.b3.clone(), self.b2.clone(), self.b1.clone(), self.b0.clone()])
    }

    fn from_poly(q: &UniPoly<C>) -> Self {
        ResolventCubic { b0: q.coeff(3), b1: q.coeff(2), b2: q.coeff(1), b3: q.coeff(0) }
    }

    pub fn as_array(&self) -> [&C; 4] {
        [&self.b0, &self.b1, &self.b2, &self.b3]
    }
}

/// Remainder of `P'^2` by `P`, by polynomial long division.
pub fn resolvent_from_division<C: Coeff>(p: &QuarticCoeffs<C>) -> ResolventCubic<C> {
    let f = p.to_poly();
    let df = f.derivative();
    let r = (&df * &df).rem(&f).expect("P is monic");
    ResolventCubic::from_poly(&r)
}

/// The closed forms of the remainder's coefficients.
pub fn resolvent_from_formulas<C: Coeff>(p: &QuarticCoeffs<C>) -> ResolventCubic<C> {
    let k = |n: i64| C::from_int(n);
    let QuarticCoeffs { a1, a2, a3, a4 } = p.clone();
    let a1sq = a1.clone() * a1.clone();
    let b3 = a3.clone() * a3.clone() - a1sq.clone() * a4.clone();
    let b2 = k(4) * a2.clone() * a3.clone() - a1sq.clone() * a3.clone() - k(8) * a1.clone() * a4.clone();
    let b1 =
        -(a1sq.clone() * a2.clone()) - k(2) * a1.clone() * a3.clone() - k(16) * a4 + k(4) * a2.clone() * a2.clone();
    let b0 = -(k(8) * a3) - a1sq * a1.clone() + k(4) * a1 * a2;
    ResolventCubic { b0, b1, b2, b3 }
}

/// `disc(Q) == disc(P) * lc(Q)^2` for the given pair.
pub fn disc_relation_report<C: Coeff>(p: &QuarticCoeffs<C>, q: &UniPoly<C>) -> Result<IdentityReport> {
    let lhs = q.discriminant()?;
    let b0 = q.leading().cloned().unwrap_or_else(C::zero);
    let rhs = p.discriminant() * b0.clone() * b0;
    Ok(IdentityReport::compare("disc(Q) = disc(P)*b0^2", &lhs, &rhs))
}

/// Checks `disc(Q) = disc(P) b0^2` over Q(a1, a2, a3, a4).
pub fn verify_disc_relation() -> IdentityReport {
    let p = QuarticCoeffs::symbolic();
    let q = resolvent_from_formulas(&p).to_poly();
    disc_relation_report(&p, &q).expect("generic cubic has degree 3")
}

/// Checks that the division remainder equals the closed formulas over
/// Q(a1, a2, a3, a4).
pub fn verify_resolvent_formulas() -> IdentityReport {
    let p = QuarticCoeffs::symbolic();
    let by_division = resolvent_from_division(&p).to_poly();
    let by_formula = resolvent_from_formulas(&p).to_poly();
    IdentityReport::compare("P'^2 mod P = closed-form b0..b3", &by_division, &by_formula)
}

/// Homogenized generic quartic `Y^4 P(X/Y)` as a polynomial in X, Y, a1..a4.
pub fn homogenized_quartic() -> MultiPoly {
    let x = MultiPoly::var(Var::X);
    let y = MultiPoly::var(Var::Y);
    let a = [Var::A1, Var::A2, Var::A3, Var::A4].map(MultiPoly::var);
    let mut out = x.pow(4);
    for (i, ai) in a.iter().enumerate() {
        let k = i as u32 + 1;
        out = out + ai * &(&x.pow(4 - k) * &y.pow(k));
    }
    out
}

/// `f_XX f_YY - f_XY^2`.
pub fn hessian(f: &MultiPoly) -> MultiPoly {
    let fx = f.derivative(Var::X);
    let fy = f.derivative(Var::Y);
    let fxx = fx.derivative(Var::X);
    let fyy = fy.derivative(Var::Y);
    let fxy = fx.derivative(Var::Y);
    &(&fxx * &fyy) - &(&fxy * &fxy)
}

/// Compares a candidate `H(X, 1)` against `(-9 a1^2 + 24 a2) P - 9 Q`.
pub fn hessian_report(h_at_y1: &MultiPoly) -> IdentityReport {
    let p = QuarticCoeffs::symbolic();
    let pm = p.to_poly().to_multi(Var::X);
    let qm = resolvent_from_formulas(&p).to_poly().to_multi(Var::X);
    let a1 = MultiPoly::var(Var::A1);
    let a2 = MultiPoly::var(Var::A2);
    let factor =
        &(&a1 * &a1).scale(&Rational::from_integer((-9).into())) + &a2.scale(&Rational::from_integer(24.into()));
    let rhs = &(&factor * &pm) - &qm.scale(&Rational::from_integer(9.into()));
    IdentityReport::compare("H(X,1) = (-9a1^2+24a2)P - 9Q", h_at_y1, &rhs)
}

pub fn verify_hessian_identity() -> IdentityReport {
    let h = hessian(&homogenized_quartic()).specialize(&[(Var::Y, Rational::from_integer(1.into()))]);
    hessian_report(&h)
}

/// Which polynomial `(P_T')^2` was reduced by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PencilModulus {
    P,
    PT,
}

impl fmt::Display for PencilModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PencilModulus::P => "P",
            PencilModulus::PT => "P_T",
        })
    }
}

#[derive(Debug, Clone)]
pub struct PencilReport {
    /// `U(T)`, a polynomial in T (and in a1..a4 for the generic quartic).
    pub u_of_t: MultiPoly,
    pub modulus_used: PencilModulus,
    /// Outcome of the proportionality test for each modulus tried.
    pub attempts: Vec<(PencilModulus, bool)>,
    pub disc_identity: IdentityReport,
}

impl PencilReport {
    pub fn disc_identity_holds(&self) -> bool {
        self.disc_identity.holds
    }
}

/// Forms `P_T = P - T Q`, looks for a modulus `m` in `{P, P_T}` with
/// `(P_T')^2 mod m = U(T) Q`, then checks `disc(P_T) = disc(P) U(T)^2`.
///
/// The coefficients of `p` must not involve `T`.
pub fn pencil_analysis_for(p: &QuarticCoeffs<MultiPoly>) -> Result<PencilReport> {
    let f = p.to_poly();
    let q = resolvent_from_formulas(p).to_poly();
    let t = MultiPoly::var(Var::T);
    let pt = &f - &q.scale(&t);
    let dpt = pt.derivative();
    let square = &dpt * &dpt;
    let b0 = q.coeff(3);
    let mut attempts = Vec::new();
    let mut found = None;
    for (which, modulus) in [(PencilModulus::P, &f), (PencilModulus::PT, &pt)] {
        let r = square.rem(modulus)?;
        let u = proportionality_factor(&r, &q, &b0);
        attempts.push((which, u.is_some()));
        if let (None, Some(u)) = (&found, u) {
            found = Some((which, u));
        }
    }
    let (modulus_used, u_of_t) = found.ok_or(Error::NoProportionality)?;
    let lhs = pt.discriminant()?;
    let rhs = &p.discriminant() * &(&u_of_t * &u_of_t);
    let disc_identity = IdentityReport::compare("disc(P_T) = disc(P)*U(T)^2", &lhs, &rhs);
    Ok(PencilReport { u_of_t, modulus_used, attempts, disc_identity })
}

fn proportionality_factor(r: &UniPoly<MultiPoly>, q: &UniPoly<MultiPoly>, b0: &MultiPoly) -> Option<MultiPoly> {
    if r.degree().unwrap_or(0) > 3 {
        return None;
    }
    let u = if b0.is_zero() {
        // fall back to the first nonzero coefficient of Q
        let i = (0..=3).rev().find(|&i| !q.coeff(i).is_zero())?;
        r.coeff(i).exact_div(&q.coeff(i))?
    } else {
        r.coeff(3).exact_div(b0)?
    };
    (0..=3).all(|i| r.coeff(i) == &u * &q.coeff(i)).then_some(u)
}

pub fn pencil_analysis() -> Result<PencilReport> {
    pencil_analysis_for(&QuarticCoeffs::symbolic())
}

/// `(a1, c1, c2, c3)` with `ci = bi / b0`.
#[derive(Debug, Clone, PartialEq)]
pub struct CCoords<C> {
    pub a1: C,
    pub c1: C,
    pub c2: C,
    pub c3: C,
}

pub fn to_c_coords<C: Field>(p: &QuarticCoeffs<C>) -> Result<CCoords<C>> {
    let b = resolvent_from_formulas(p);
    if b.b0.is_zero() {
        return Err(Error::DegenerateResolvent);
    }
    let div = |x: &C| x.exact_div(&b.b0).expect("field, nonzero divisor");
    Ok(CCoords { a1: p.a1.clone(), c1: div(&b.b1), c2: div(&b.b2), c3: div(&b.b3) })
}

/// `a2 = c1 a1 - 2 c2`, `a3 = c2 a1 - 8 c3`, `a4 = c3 a1 + c2^2 - 4 c1 c3`.
pub fn from_c_coords<C: Coeff>(c: &CCoords<C>) -> QuarticCoeffs<C> {
    let k = |n: i64| C::from_int(n);
    let CCoords { a1, c1, c2, c3 } = c.clone();
    let a2 = c1.clone() * a1.clone() - k(2) * c2.clone();
    let a3 = c2.clone() * a1.clone() - k(8) * c3.clone();
    let a4 = c3.clone() * a1.clone() + c2.clone() * c2 - k(4) * c1 * c3;
    QuarticCoeffs { a1, a2, a3, a4 }
}

/// Both compositions of the `(a) <-> (c)` maps are the identity, over
/// Q(a1..a4) and Q(a1, c1, c2, c3) respectively.
pub fn verify_birational() -> Vec<IdentityReport> {
    let a = QuarticCoeffs::symbolic().map(|p| RatFunc::from(p.clone()));
    let back = to_c_coords(&a).map(|c| from_c_coords(&c));
    let first = match back {
        Ok(b) => IdentityReport::compare("from_c(to_c(a)) = a", &b.to_poly(), &a.to_poly()),
        Err(e) => IdentityReport::fail("from_c(to_c(a)) = a", format!("{e}"), format!("{a}")),
    };
    let c = CCoords {
        a1: RatFunc::var(Var::A1),
        c1: RatFunc::var(Var::C1),
        c2: RatFunc::var(Var::C2),
        c3: RatFunc::var(Var::C3),
    };
    let there = from_c_coords(&c);
    let second = match to_c_coords(&there) {
        Ok(cc) => IdentityReport::compare(
            "to_c(from_c(c)) = c",
            &UniPoly::new(vec![cc.a1, cc.c1, cc.c2, cc.c3]),
            &UniPoly::new(vec![c.a1.clone(), c.c1.clone(), c.c2.clone(), c.c3.clone()]),
        ),
        Err(e) => IdentityReport::fail("to_c(from_c(c)) = c", format!("{e}"), "c".into()),
    };
    vec![first, second]
}

/// Thresholds for [`verify_root_formula`].
#[derive(Debug, Clone, Copy)]
pub struct RootCheck {
    /// `|Q(value)|` must stay below `tol` times the coefficient scale.
    pub tol: f64,
    /// Pairings whose denominator `x_i + x_j - x_k - x_l` is smaller than this
    /// are not evaluated.
    pub min_denominator: f64,
}

impl Default for RootCheck {
    fn default() -> Self {
        RootCheck { tol: 1e-9, min_denominator: 1e-6 }
    }
}

#[derive(Debug, Clone)]
pub struct RootFormulaReport {
    pub roots: Vec<Complex64>,
    pub values: Vec<Complex64>,
    /// `|Q(value)| / scale` for each pairing.
    pub relative_residuals: Vec<f64>,
    pub holds: bool,
}

const PAIRINGS: [[usize; 4]; 3] = [[0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 1, 2]];

/// Numerically checks that `(x1 x2 - x3 x4) / (x1 + x2 - x3 - x4)` and its two
/// companions are roots of `Q`.
pub fn verify_root_formula(p: &QuarticCoeffs<Rational>, check: &RootCheck) -> Result<RootFormulaReport> {
    if p.discriminant().is_zero() {
        return Err(Error::SingularInput);
    }
    let fl = |q: &Rational| q.to_f64().unwrap_or(f64::NAN);
    let roots = monic_roots(&[fl(&p.a4), fl(&p.a3), fl(&p.a2), fl(&p.a1)]);
    let b = resolvent_from_formulas(p);
    let bf: Vec<f64> = b.as_array().iter().map(|c| fl(c)).collect();
    let coeff_scale_sq = bf.iter().map(|c| c * c).fold(0.0, f64::max);
    let mut values = Vec::with_capacity(3);
    let mut relative_residuals = Vec::with_capacity(3);
    let mut holds = true;
    for [i, j, k, l] in PAIRINGS {
        let (xi, xj, xk, xl) = (roots[i], roots[j], roots[k], roots[l]);
        let den = xi + xj - xk - xl;
        if den.norm_sqr() < check.min_denominator * check.min_denominator {
            return Err(Error::NumericDegenerate(format!(
                "pairing ({},{}|{},{}) has denominator {den}",
                i + 1,
                j + 1,
                k + 1,
                l + 1
            )));
        }
        let value = (xi * xj - xk * xl) / den;
        let qv = bf.iter().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * value + c);
        let growth = value.norm_sqr().max(1.0);
        let scale_sq = coeff_scale_sq * growth * growth * growth;
        let ratio_sq = if scale_sq == 0.0 { qv.norm_sqr() } else { qv.norm_sqr() / scale_sq };
        if ratio_sq >= check.tol * check.tol {
            holds = false;
        }
        relative_residuals.push(sqrt_newton(ratio_sq));
        values.push(value);
    }
    Ok(RootFormulaReport { roots, values, relative_residuals, holds })
}

fn sqrt_newton(x: f64) -> f64 {
    if x <= 0.0 || !x.is_finite() {
        return if x.is_nan() { f64::NAN } else { x.max(0.0) };
    }
    let mut y = if x > 1.0 { x } else { 1.0 };
    loop {
        let next = 0.5 * (y + x / y);
        if next >= y {
            return y;
        }
        y = next;
    }
}
