//! The two-parameter A4 family
//!
//! `P = X^4 - 4X^3 + (36V + 2U^2) X^2 + (4U^2 - 8U^2 V) X + 36U^2V^2 + U^4 - 4U^2 V`,
//!
//! the cubic-side parametrization it is obtained from, its embedding
//! obstruction `(-1,-1) + (U^2 - 9, -2(U^2 V - 9V + 1 - U^2))`, and the
//! five-parameter family `(A, B, C, D, E) -> (U, V)` on which the
//! obstruction vanishes.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{class_add, rational_sqrt, symbol_class, BrauerClass, FactorConfig, Rational};
use crate::galois::{classify_quartic, real_root_count, GaloisLabel};
use crate::poly::{poly_square_root, Coeff, MultiPoly, RatFunc, UniPoly, Var};
use crate::report::IdentityReport;
use crate::resolvent::{from_c_coords, CCoords, QuarticCoeffs};
use crate::{Error, Result};

fn k<C: Coeff>(n: i64, d: i64) -> C {
    C::from_rational(&Rational::new(BigInt::from(n), BigInt::from(d)))
}

/// Coefficients of the family at `(U, V)` over any coefficient ring.
pub fn prop1_coeffs<C: Coeff>(u: &C, v: &C) -> QuarticCoeffs<C> {
    let u2 = u.clone() * u.clone();
    QuarticCoeffs {
        a1: k(-4, 1),
        a2: k::<C>(36, 1) * v.clone() + k::<C>(2, 1) * u2.clone(),
        a3: k::<C>(4, 1) * u2.clone() - k::<C>(8, 1) * u2.clone() * v.clone(),
        a4: k::<C>(36, 1) * u2.clone() * v.clone() * v.clone() + u2.clone() * u2.clone()
            - k::<C>(4, 1) * u2 * v.clone(),
    }
}

pub fn prop1_quartic(u: &Rational, v: &Rational) -> QuarticCoeffs<Rational> {
    prop1_coeffs(u, v)
}

/// The family over Q(U, V).
pub fn prop1_symbolic() -> QuarticCoeffs<MultiPoly> {
    prop1_coeffs(&MultiPoly::var(Var::U), &MultiPoly::var(Var::V))
}

/// Exact square root of the family's discriminant in Q[U, V].
pub fn prop1_disc_sqrt() -> Option<MultiPoly> {
    poly_square_root(&prop1_symbolic().discriminant())
}

/// The second symbol's arguments `(U^2 - 9, -2(U^2 V - 9V + 1 - U^2))`.
pub fn obstruction_symbol_args(u: &Rational, v: &Rational) -> Result<(Rational, Rational)> {
    let u2 = u * u;
    let nine = Rational::from_integer(BigInt::from(9));
    let first = &u2 - &nine;
    if first.is_zero() {
        return Err(Error::UndefinedSymbol("U^2 = 9"));
    }
    let second = Rational::from_integer(BigInt::from(-2)) * (&u2 * v - &nine * v + Rational::one() - &u2);
    if second.is_zero() {
        return Err(Error::UndefinedSymbol("U^2 V - 9V + 1 - U^2 = 0"));
    }
    Ok((first, second))
}

pub fn minus_one_class(cfg: &FactorConfig) -> Result<BrauerClass> {
    let m1 = -Rational::one();
    symbol_class(&m1, &m1, cfg)
}

/// `(-1,-1) + (U^2 - 9, -2(U^2 V - 9V + 1 - U^2))` as a Brauer class.
pub fn obstruction_formula_class(u: &Rational, v: &Rational, cfg: &FactorConfig) -> Result<BrauerClass> {
    let (a, b) = obstruction_symbol_args(u, v)?;
    Ok(class_add(&minus_one_class(cfg)?, &symbol_class(&a, &b, cfg)?))
}

/// `c2 = c1^2/3 - 27u^2/4 - v^2/4` and
/// `c3 = c1^3/27 - c1 v^2/12 - 27u^3/4 - u v^2/4 - 9 c1 u^2/4`.
pub fn c_parametrization<C: Coeff>(c1: &C, u: &C, v: &C) -> (C, C) {
    let c1sq = c1.clone() * c1.clone();
    let usq = u.clone() * u.clone();
    let vsq = v.clone() * v.clone();
    let c2 = k::<C>(1, 3) * c1sq.clone() - k::<C>(27, 4) * usq.clone() - k::<C>(1, 4) * vsq.clone();
    let c3 = k::<C>(1, 27) * c1sq * c1.clone()
        - k::<C>(1, 12) * c1.clone() * vsq.clone()
        - k::<C>(27, 4) * usq.clone() * u.clone()
        - k::<C>(1, 4) * u.clone() * vsq
        - k::<C>(9, 4) * c1.clone() * usq;
    (c2, c3)
}

/// Square root in Q[c1, u, v] of the discriminant of `X^3 + c1 X^2 + c2 X + c3`.
pub fn cubic_disc_sqrt() -> Option<MultiPoly> {
    let c1 = MultiPoly::var(Var::C1);
    let (c2, c3) = c_parametrization(&c1, &MultiPoly::var(Var::LowerU), &MultiPoly::var(Var::LowerV));
    let cubic = UniPoly::new(vec![c3, c2, c1, MultiPoly::one()]);
    poly_square_root(&cubic.discriminant().expect("degree 3"))
}

/// The monic quartic with resolvent direction `(a1, c1, c2, c3)` where
/// `c2, c3` come from [`c_parametrization`].
pub fn quartic_from_params<C: Coeff>(a1: &C, c1: &C, u: &C, v: &C) -> QuarticCoeffs<C> {
    let (c2, c3) = c_parametrization(c1, u, v);
    from_c_coords(&CCoords { a1: a1.clone(), c1: c1.clone(), c2, c3 })
}

/// The change of variables `(c1, v, x) <-> (U, V, X)` with `a1, u` fixed.
#[derive(Debug, Clone)]
pub struct ChangeOfVariables {
    /// `c1`, `v`, `x` in terms of `a1, u, U, V, X`.
    pub forward: [RatFunc; 3],
    /// `U`, `V`, `X` in terms of `a1, u, c1, v, x`.
    pub inverse: [RatFunc; 3],
}

impl ChangeOfVariables {
    pub fn standard() -> Self {
        let var = MultiPoly::var;
        let int = MultiPoly::integer;
        let (a1, u, cap_u, cap_v, cap_x) = (var(Var::A1), var(Var::LowerU), var(Var::U), var(Var::V), var(Var::X));
        let (c1, v, x) = (var(Var::C1), var(Var::LowerV), var(Var::LowerX));
        let rf = |n: MultiPoly, d: MultiPoly| RatFunc::new(n, d).expect("nonzero denominator");
        // c1 = (3 a1 V - 18 u V + 6 u) / (4V)
        let c1_map = rf(
            &(&(&a1 * &cap_v).scale(&Rational::from_integer(3.into()))
                - &(&u * &cap_v).scale(&Rational::from_integer(18.into())))
                + &u.scale(&Rational::from_integer(6.into())),
            &int(4) * &cap_v,
        );
        // v = u U / V
        let v_map = rf(&u * &cap_u, cap_v.clone());
        // x = (-2u - V a1 + 2 X u) / (4V)
        let x_map = rf(
            &(&u.scale(&Rational::from_integer((-2).into())) - &(&cap_v * &a1))
                + &(&cap_x * &u).scale(&Rational::from_integer(2.into())),
            &int(4) * &cap_v,
        );
        // common denominator -18u - 4c1 + 3a1
        let den = &(&u.scale(&Rational::from_integer((-18).into())) - &c1.scale(&Rational::from_integer(4.into())))
            + &a1.scale(&Rational::from_integer(3.into()));
        let inv_u = rf(v.scale(&Rational::from_integer((-6).into())), den.clone());
        let inv_v = rf(u.scale(&Rational::from_integer((-6).into())), den.clone());
        let inv_x = rf(
            (&(&x.scale(&Rational::from_integer(6.into())) + &u.scale(&Rational::from_integer(9.into())))
                + &c1.scale(&Rational::from_integer(2.into())))
                .scale(&Rational::from_integer((-2).into())),
            den,
        );
        ChangeOfVariables { forward: [c1_map, v_map, x_map], inverse: [inv_u, inv_v, inv_x] }
    }

    fn forward_bindings(&self) -> [(Var, RatFunc); 3] {
        let [c1, v, x] = self.forward.clone();
        [(Var::C1, c1), (Var::LowerV, v), (Var::LowerX, x)]
    }

    fn inverse_bindings(&self) -> [(Var, RatFunc); 3] {
        let [u, v, x] = self.inverse.clone();
        [(Var::U, u), (Var::V, v), (Var::X, x)]
    }

    /// `quartic_from_params(a1, c1, u, v)` in `x`, pushed through the forward
    /// map and made monic in `X`.
    pub fn transformed_quartic(&self) -> Result<RatFunc> {
        let params = quartic_from_params(
            &MultiPoly::var(Var::A1),
            &MultiPoly::var(Var::C1),
            &MultiPoly::var(Var::LowerU),
            &MultiPoly::var(Var::LowerV),
        );
        let in_x = params.to_poly().to_multi(Var::LowerX);
        let image = in_x.substitute(&self.forward_bindings());
        // x is linear in X, so the X^4 coefficient is (dx/dX)^4
        let slope = self.forward[2].derivative(Var::X);
        image.checked_div(&slope.pow(4))
    }
}

/// Result of checking the change of variables.
#[derive(Debug, Clone)]
pub struct ChangeOfVariablesReport {
    pub forward: IdentityReport,
    /// The monic result involves neither `a1` nor `u`.
    pub parameters_cancel: IdentityReport,
    pub inverse_after_forward: IdentityReport,
    pub forward_after_inverse: IdentityReport,
}

impl ChangeOfVariablesReport {
    pub fn holds(&self) -> bool {
        self.claims().iter().all(|r| r.holds)
    }

    pub fn claims(&self) -> [&IdentityReport; 4] {
        [&self.forward, &self.parameters_cancel, &self.inverse_after_forward, &self.forward_after_inverse]
    }
}

pub fn verify_change_of_variables() -> Result<ChangeOfVariablesReport> {
    verify_change_of_variables_with(&ChangeOfVariables::standard())
}

pub fn verify_change_of_variables_with(maps: &ChangeOfVariables) -> Result<ChangeOfVariablesReport> {
    let monic = maps.transformed_quartic()?;
    let target = RatFunc::from(prop1_symbolic().to_poly().to_multi(Var::X));
    let forward = IdentityReport::compare("monic image of the parametrized quartic = P(U,V)", &monic, &target);
    let parameters_cancel = match monic.to_poly() {
        Some(p) if !p.involves(Var::A1) && !p.involves(Var::LowerU) => {
            IdentityReport::pass("image is free of a1 and u")
        }
        Some(p) => IdentityReport::fail("image is free of a1 and u", alloc::format!("{p}"), "no a1, u".into()),
        None => IdentityReport::fail("image is free of a1 and u", alloc::format!("{monic}"), "a polynomial".into()),
    };
    let fwd = maps.forward_bindings();
    let mut back = Vec::new();
    for r in &maps.inverse {
        back.push(r.substitute(&fwd)?);
    }
    let identity_uvx = [Var::U, Var::V, Var::X].map(RatFunc::var);
    let inverse_after_forward = IdentityReport::compare(
        "inverse(forward(U,V,X)) = (U,V,X)",
        &UniPoly::new(back),
        &UniPoly::new(identity_uvx.to_vec()),
    );
    let inv = maps.inverse_bindings();
    let mut there = Vec::new();
    for r in &maps.forward {
        there.push(r.substitute(&inv)?);
    }
    let identity_cvx = [Var::C1, Var::LowerV, Var::LowerX].map(RatFunc::var);
    let forward_after_inverse = IdentityReport::compare(
        "forward(inverse(c1,v,x)) = (c1,v,x)",
        &UniPoly::new(there),
        &UniPoly::new(identity_cvx.to_vec()),
    );
    Ok(ChangeOfVariablesReport { forward, parameters_cancel, inverse_after_forward, forward_after_inverse })
}

/// Sign applied to both `a` and `b` of the symbol criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn apply(self, q: Rational) -> Rational {
        match self {
            Sign::Plus => q,
            Sign::Minus => -q,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
    pub e: Rational,
    pub sign: Sign,
}

impl SymbolParams {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational, e: Rational, sign: Sign) -> Self {
        SymbolParams { a, b, c, d, e, sign }
    }

    pub fn from_ints(v: [i64; 5], sign: Sign) -> Self {
        let r = |n: i64| Rational::from_integer(BigInt::from(n));
        SymbolParams::new(r(v[0]), r(v[1]), r(v[2]), r(v[3]), r(v[4]), sign)
    }
}

/// `a = s D^2 (1+A^2+A^2B^2)(1+B^2+B^2C^2)`, `b = s E^2 (1+B^2+B^2C^2)(1+C^2+C^2A^2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ABPair {
    pub a: Rational,
    pub b: Rational,
}

fn three_squares(x: &Rational, y: &Rational) -> Rational {
    Rational::one() + x * x + x * x * y * y
}

pub fn ab_pair(p: &SymbolParams) -> Result<ABPair> {
    if p.d.is_zero() {
        return Err(Error::DegenerateParams("D = 0"));
    }
    if p.e.is_zero() {
        return Err(Error::DegenerateParams("E = 0"));
    }
    let sab = three_squares(&p.a, &p.b);
    let sbc = three_squares(&p.b, &p.c);
    let sca = three_squares(&p.c, &p.a);
    let a = p.sign.apply(&p.d * &p.d * &sab * &sbc);
    let b = p.sign.apply(&p.e * &p.e * &sbc * &sca);
    Ok(ABPair { a, b })
}

/// Inverts `a = (U-3)/(U+3)`, `b = -2(U^2 V - 9V + 1 - U^2)`.
pub fn uv_from_symbols(p: &SymbolParams) -> Result<(Rational, Rational, ABPair)> {
    let pair = ab_pair(p)?;
    let one = Rational::one();
    if pair.a == one {
        return Err(Error::DegenerateParams("a = 1"));
    }
    let three = Rational::from_integer(BigInt::from(3));
    let nine = Rational::from_integer(BigInt::from(9));
    let u = &three * (&one + &pair.a) / (&one - &pair.a);
    let u2 = &u * &u;
    if u2 == nine {
        return Err(Error::DegenerateParams("U^2 = 9"));
    }
    let v = (&u2 - &one - &pair.b / Rational::from_integer(BigInt::from(2))) / (&u2 - &nine);
    debug_assert_eq!((&u - &three) / (&u + &three), pair.a);
    debug_assert_eq!(Rational::from_integer(BigInt::from(-2)) * (&u2 * &v - &nine * &v + &one - &u2), pair.b);
    Ok((u, v, pair))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddabilityReport {
    pub class: BrauerClass,
    pub embeddable: bool,
    /// Present when the quartic is irreducible with nonzero discriminant.
    pub galois: Option<GaloisLabel>,
    pub real_roots: Option<usize>,
}

/// Whether the A4 field cut out by the family at `(U, V)` embeds into an
/// SL2(F3) extension, i.e. whether the obstruction class vanishes.
pub fn embeddable(u: &Rational, v: &Rational, cfg: &FactorConfig) -> Result<EmbeddabilityReport> {
    let class = obstruction_formula_class(u, v, cfg)?;
    let quartic = prop1_quartic(u, v);
    let f = quartic.to_poly();
    let (galois, real_roots) = if quartic.discriminant().is_zero() {
        (None, None)
    } else {
        match classify_quartic(&f)?.0 {
            GaloisLabel::Reducible(_) => (None, None),
            label => (Some(label), Some(real_root_count(&f)?)),
        }
    };
    Ok(EmbeddabilityReport { embeddable: class.is_trivial(), class, galois, real_roots })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignRow {
    pub sign: Sign,
    pub trivial: usize,
    pub total: usize,
}

impl SignRow {
    pub fn rate(&self) -> f64 {
        self.trivial as f64 / self.total as f64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignReport {
    pub rows: Vec<SignRow>,
    pub selected: Sign,
    /// First sample whose `(-1,-1) + (a,b)` is nontrivial under `+`.
    pub plus_counterexample: Option<SymbolParams>,
    /// Every trivial sum seen had `a < 0` and `b < 0`.
    pub negativity_holds: bool,
}

/// Rate at which `(-1,-1) + (a, b)` vanishes under each sign convention.
pub fn calibrate_criterion_sign(samples: &[SymbolParams], cfg: &FactorConfig) -> Result<SignReport> {
    if samples.is_empty() {
        return Err(Error::EmptySamples);
    }
    let m1 = minus_one_class(cfg)?;
    let mut rows = Vec::new();
    let mut plus_counterexample = None;
    let mut negativity_holds = true;
    for sign in [Sign::Plus, Sign::Minus] {
        let mut trivial = 0;
        for s in samples {
            let p = SymbolParams { sign, ..s.clone() };
            let pair = ab_pair(&p)?;
            let sum = class_add(&m1, &symbol_class(&pair.a, &pair.b, cfg)?);
            if sum.is_trivial() {
                trivial += 1;
                negativity_holds &= pair.a.is_negative() && pair.b.is_negative();
            } else if sign == Sign::Plus && plus_counterexample.is_none() {
                plus_counterexample = Some(p);
            }
        }
        rows.push(SignRow { sign, trivial, total: samples.len() });
    }
    let selected = rows.iter().find(|r| r.trivial == r.total).map(|r| r.sign).ok_or(Error::NoSignMatches)?;
    Ok(SignReport { rows, selected, plus_counterexample, negativity_holds })
}

/// Best-effort converse: integers `0 <= A, B, C <= bound` with `a` and `b`
/// of the criterion's shape for rational `D`, `E`.
pub fn find_symbol_params(a: &Rational, b: &Rational, bound: u32) -> Option<SymbolParams> {
    if a.is_zero() || b.is_zero() || a.is_negative() != b.is_negative() {
        return None;
    }
    let sign = if a.is_negative() { Sign::Minus } else { Sign::Plus };
    let (a, b) = (a.abs(), b.abs());
    let r = |n: u32| Rational::from_integer(BigInt::from(n));
    for ai in 0..=bound {
        for bi in 0..=bound {
            for ci in 0..=bound {
                let (pa, pb, pc) = (r(ai), r(bi), r(ci));
                let sab = three_squares(&pa, &pb);
                let sbc = three_squares(&pb, &pc);
                let sca = three_squares(&pc, &pa);
                let Some(d) = rational_sqrt(&(&a / (&sab * &sbc))) else { continue };
                let Some(e) = rational_sqrt(&(&b / (&sbc * &sca))) else { continue };
                return Some(SymbolParams::new(pa, pb, pc, d, e, sign));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, Place};
    use num_bigint::BigUint;

    const CFG: FactorConfig = FactorConfig::DEFAULT;

    fn two_real() -> BrauerClass {
        BrauerClass::from_places([Place::Prime(BigUint::from(2u8)), Place::Real]).unwrap()
    }

    #[test]
    fn family_examples() {
        assert_eq!(prop1_quartic(&int(1), &int(1)), QuarticCoeffs::from_ints([-4, 38, -4, 33]));
        let v = MultiPoly::var(Var::V);
        let at_zero = prop1_coeffs(&MultiPoly::zero(), &v);
        assert_eq!(at_zero.a2, v.scale(&int(36)));
        assert!(at_zero.a3.is_zero() && at_zero.a4.is_zero());
    }

    #[test]
    fn family_matches_displayed_expansion() {
        let (u, v, x) = (MultiPoly::var(Var::U), MultiPoly::var(Var::V), MultiPoly::var(Var::X));
        let t = |c: i64, parts: &[&MultiPoly]| parts.iter().fold(MultiPoly::integer(c), |acc, p| &acc * *p);
        let displayed = [
            t(1, &[&x, &x, &x, &x]),
            t(-4, &[&x, &x, &x]),
            t(36, &[&v, &x, &x]),
            t(2, &[&u, &u, &x, &x]),
            t(4, &[&u, &u, &x]),
            t(-8, &[&u, &u, &v, &x]),
            t(36, &[&u, &u, &v, &v]),
            t(1, &[&u, &u, &u, &u]),
            t(-4, &[&u, &u, &v]),
        ]
        .into_iter()
        .fold(MultiPoly::zero(), |acc, p| acc + p);
        assert_eq!(prop1_symbolic().to_poly().to_multi(Var::X), displayed);
    }

    #[test]
    fn family_discriminant_is_a_square() {
        let root = prop1_disc_sqrt().expect("square discriminant");
        assert_eq!(&root * &root, prop1_symbolic().discriminant());
        assert!(root.variables().iter().all(|v| matches!(v, Var::U | Var::V)));
    }

    #[test]
    fn c_parametrization_examples() {
        assert_eq!(c_parametrization(&int(0), &int(0), &int(0)), (int(0), int(0)));
        assert_eq!(c_parametrization(&int(3), &int(0), &int(0)), (int(3), int(1)));
        let root = cubic_disc_sqrt().expect("square cubic discriminant");
        assert!(!root.is_zero());
    }

    #[test]
    fn quartic_from_params_examples() {
        assert_eq!(quartic_from_params(&int(0), &int(0), &int(0), &int(0)), QuarticCoeffs::from_ints([0, 0, 0, 0]));
        assert_eq!(quartic_from_params(&int(0), &int(3), &int(0), &int(0)), QuarticCoeffs::from_ints([0, -6, -8, -3]));
        let sym = quartic_from_params(
            &MultiPoly::var(Var::A1),
            &MultiPoly::var(Var::C1),
            &MultiPoly::var(Var::LowerU),
            &MultiPoly::var(Var::LowerV),
        );
        assert!(poly_square_root(&sym.discriminant()).is_some());
    }

    #[test]
    fn change_of_variables_holds() {
        let report = verify_change_of_variables().unwrap();
        for c in report.claims() {
            assert!(c.holds, "{c:?}");
        }
    }

    #[test]
    fn change_of_variables_numeric_spot_check() {
        // a1 = 0, u = 1, U = V = 1
        let monic = ChangeOfVariables::standard().transformed_quartic().unwrap();
        let at = monic
            .substitute(&[
                (Var::A1, RatFunc::from(int(0))),
                (Var::LowerU, RatFunc::from(int(1))),
                (Var::U, RatFunc::from(int(1))),
                (Var::V, RatFunc::from(int(1))),
            ])
            .unwrap();
        let expected = QuarticCoeffs::from_ints([-4, 38, -4, 33]).to_poly().map(|c| MultiPoly::constant(c.clone()));
        assert_eq!(at, RatFunc::from(expected.to_multi(Var::X)));
    }

    #[test]
    fn perturbed_x_map_fails() {
        let mut maps = ChangeOfVariables::standard();
        let shifted = &maps.forward[2] + &RatFunc::from(int(1));
        maps.forward[2] = shifted;
        let report = verify_change_of_variables_with(&maps).unwrap();
        assert!(!report.forward.holds);
        assert!(!report.holds());
    }

    #[test]
    fn obstruction_examples() {
        assert_eq!(obstruction_formula_class(&int(1), &int(1), &CFG).unwrap(), two_real());
        assert_eq!(obstruction_formula_class(&int(3), &int(5), &CFG), Err(Error::UndefinedSymbol("U^2 = 9")));
        let c = obstruction_formula_class(&rat(-12, 5), &rat(-463, 162), &CFG).unwrap();
        assert!(c.is_trivial());
    }

    #[test]
    fn uv_examples() {
        let (u, v, pair) = uv_from_symbols(&SymbolParams::from_ints([1, 1, 1, 1, 1], Sign::Plus)).unwrap();
        assert_eq!((pair.a, pair.b), (int(9), int(9)));
        assert_eq!((u, v), (rat(-15, 4), rat(137, 81)));
        let (u, v, pair) = uv_from_symbols(&SymbolParams::from_ints([1, 1, 1, 1, 1], Sign::Minus)).unwrap();
        assert_eq!((pair.a, pair.b), (int(-9), int(-9)));
        assert_eq!((u, v), (rat(-12, 5), rat(-463, 162)));
        for sign in [Sign::Plus, Sign::Minus] {
            let err = uv_from_symbols(&SymbolParams::from_ints([1, 1, 1, 0, 1], sign)).unwrap_err();
            assert_eq!(err, Error::DegenerateParams("D = 0"));
        }
        let err = uv_from_symbols(&SymbolParams::from_ints([1, 1, 1, 1, 0], Sign::Minus)).unwrap_err();
        assert_eq!(err, Error::DegenerateParams("E = 0"));
    }

    #[test]
    fn embeddable_examples() {
        let r = embeddable(&int(1), &int(1), &CFG).unwrap();
        assert!(!r.embeddable);
        assert_eq!(r.class, two_real());
        assert!(matches!(embeddable(&int(3), &int(2), &CFG), Err(Error::UndefinedSymbol(_))));
        let r = embeddable(&rat(-12, 5), &rat(-463, 162), &CFG).unwrap();
        assert!(r.embeddable);
    }

    #[test]
    fn sign_calibration() {
        let samples = [
            SymbolParams::from_ints([1, 1, 1, 1, 1], Sign::Plus),
            SymbolParams::from_ints([2, -3, 5, 1, 7], Sign::Plus),
            SymbolParams::from_ints([0, 4, -1, 3, 2], Sign::Plus),
        ];
        let report = calibrate_criterion_sign(&samples, &CFG).unwrap();
        assert_eq!(report.selected, Sign::Minus);
        assert_eq!(report.rows[1], SignRow { sign: Sign::Minus, trivial: 3, total: 3 });
        assert_eq!(report.rows[0].trivial, 0);
        assert_eq!(report.plus_counterexample, Some(samples[0].clone()));
        assert!(report.negativity_holds);
        assert_eq!(calibrate_criterion_sign(&[], &CFG).unwrap_err(), Error::EmptySamples);
    }

    #[test]
    fn converse_search_recovers_shape() {
        let p = SymbolParams::from_ints([2, 1, 3, 5, 7], Sign::Minus);
        let pair = ab_pair(&p).unwrap();
        let found = find_symbol_params(&pair.a, &pair.b, 5).expect("within bound");
        let again = ab_pair(&found).unwrap();
        assert_eq!(again, pair);
        assert_eq!(find_symbol_params(&int(-1), &int(2), 5), None);
    }
}
