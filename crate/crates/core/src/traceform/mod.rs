//! The trace form `x -> Tr(x^2)` of `Q[X]/(P)` for a monic quartic `P`, its
//! diagonalization and its Hasse-type invariants.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{class_add, class_on_support, height, square_class, BrauerClass, FactorConfig, Rational};
use crate::generic::{obstruction_formula_class, prop1_quartic};
use crate::resolvent::QuarticCoeffs;
use crate::{Error, Result};

/// Power sums `p_0, ..., p_upto` of the roots, by Newton's identities.
pub fn power_sums(p: &QuarticCoeffs<Rational>, upto: usize) -> Vec<Rational> {
    let e = [-p.a1.clone(), p.a2.clone(), -p.a3.clone(), p.a4.clone()];
    let mut s: Vec<Rational> = Vec::with_capacity(upto + 1);
    s.push(Rational::from_integer(BigInt::from(4)));
    for k in 1..=upto {
        // p_k = sum_i (-1)^(i-1) e_i p_(k-i), with k e_k in place of e_k p_0
        let mut acc = Rational::zero();
        for i in 1..=k.min(4) {
            let term = if i == k { &e[i - 1] * Rational::from_integer(BigInt::from(k)) } else { &e[i - 1] * &s[k - i] };
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        s.push(acc);
    }
    s
}

/// Gram matrix of the trace form on the basis `1, x, x^2, x^3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    pub entries: [[Rational; 4]; 4],
}

impl GramMatrix {
    #[allow(clippy::needless_range_loop)]
    pub fn determinant(&self) -> Rational {
        let mut m: Vec<Vec<Rational>> = self.entries.iter().map(|r| r.to_vec()).collect();
        let mut det = Rational::from_integer(BigInt::from(1));
        for col in 0..4 {
            let Some(piv) = (col..4).find(|&r| !m[r][col].is_zero()) else {
                return Rational::zero();
            };
            if piv != col {
                m.swap(piv, col);
                det = -det;
            }
            let pivot = m[col][col].clone();
            det *= &pivot;
            for r in col + 1..4 {
                let factor = &m[r][col] / &pivot;
                for c in col..4 {
                    let sub = &factor * &m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
        det
    }
}

impl From<[[i64; 4]; 4]> for GramMatrix {
    fn from(rows: [[i64; 4]; 4]) -> Self {
        GramMatrix { entries: rows.map(|r| r.map(|x| Rational::from_integer(BigInt::from(x)))) }
    }
}

impl fmt::Display for GramMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "[{}, {}, {}, {}]", row[0], row[1], row[2], row[3])?;
        }
        Ok(())
    }
}

pub fn gram_matrix(p: &QuarticCoeffs<Rational>) -> GramMatrix {
    let s = power_sums(p, 6);
    GramMatrix { entries: core::array::from_fn(|i| core::array::from_fn(|j| s[i + j].clone())) }
}

/// A diagonal form with entries recorded as squarefree integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalForm {
    pub entries: Vec<BigInt>,
    /// Every odd prime dividing some entry (possibly with extras).
    primes: BTreeSet<BigUint>,
}

impl DiagonalForm {
    /// Reduces each entry to its squarefree part.
    pub fn new(entries: &[Rational], cfg: &FactorConfig) -> Result<Self> {
        let mut out = Vec::with_capacity(entries.len());
        let mut primes = BTreeSet::new();
        for q in entries {
            let (d, ps) = square_class(q, cfg)?;
            out.push(d);
            primes.extend(ps);
        }
        Ok(DiagonalForm { entries: out, primes })
    }

    /// Positive entries minus negative entries.
    pub fn signature(&self) -> i64 {
        self.entries.iter().map(|d| if d.is_positive() { 1 } else { -1 }).sum()
    }

    /// Squarefree representative of the determinant modulo squares.
    pub fn determinant_class(&self) -> BigInt {
        self.entries.iter().fold(BigInt::from(1), |acc, d| squarefree_product(&acc, d))
    }
}

/// `x y` modulo squares, for squarefree `x`, `y`.
fn squarefree_product(x: &BigInt, y: &BigInt) -> BigInt {
    let g = x.gcd(y);
    (x / &g) * (y / &g)
}

impl fmt::Display for DiagonalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, d) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(">")
    }
}

/// Congruence diagonalization by symmetric elimination, choosing the
/// smallest-height nonzero diagonal pivot at each step.
///
/// Pivots are reduced through the principal minors `D_k = d_1 ... d_k`,
/// since `d_k = D_k D_(k-1)` modulo squares and the minors are far smaller
/// to factor than the pivots themselves.
pub fn diagonalize(g: &GramMatrix, cfg: &FactorConfig) -> Result<DiagonalForm> {
    let rows: Vec<Vec<Rational>> = g.entries.iter().map(|r| r.to_vec()).collect();
    let pivots = symmetric_pivots(rows)?;
    let mut entries = Vec::with_capacity(pivots.len());
    let mut primes = BTreeSet::new();
    let mut minor = Rational::one();
    let mut prev = BigInt::one();
    for d in &pivots {
        minor *= d;
        let (class, ps) = square_class(&minor, cfg)?;
        primes.extend(ps);
        entries.push(squarefree_product(&prev, &class));
        prev = class;
    }
    Ok(DiagonalForm { entries, primes })
}

#[allow(clippy::needless_range_loop)]
fn symmetric_pivots(mut m: Vec<Vec<Rational>>) -> Result<Vec<Rational>> {
    let n = m.len();
    let mut live: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    while !live.is_empty() {
        let pivot = live.iter().copied().filter(|&i| !m[i][i].is_zero()).min_by_key(|&i| height(&m[i][i]));
        let i = match pivot {
            Some(i) => i,
            None => {
                // zero diagonal: adding row/column j to i makes m[i][i] = 2 m[i][j]
                let Some((i, j)) = live
                    .iter()
                    .flat_map(|&i| live.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !m[i][j].is_zero())
                else {
                    return Err(Error::DegenerateForm);
                };
                for c in 0..n {
                    let add = m[j][c].clone();
                    m[i][c] += add;
                }
                for r in 0..n {
                    let add = m[r][j].clone();
                    m[r][i] += add;
                }
                i
            }
        };
        live.retain(|&r| r != i);
        let d = m[i][i].clone();
        for &r in &live {
            if m[r][i].is_zero() {
                continue;
            }
            let factor = &m[r][i] / &d;
            for &c in &live {
                let sub = &factor * &m[i][c];
                m[r][c] -= sub;
            }
        }
        for &r in &live {
            m[r][i] = Rational::zero();
            m[i][r] = Rational::zero();
        }
        out.push(d);
    }
    Ok(out)
}

/// How the invariant is normalized relative to the Hasse invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WittConvention {
    /// `sum_{i<j} (d_i, d_j)`
    Hasse,
    /// Hasse plus `(-1,-1)`
    HassePlusMinusOne,
    /// Hasse plus `(-1, -disc)`
    HassePlusDisc,
}

impl WittConvention {
    pub const ALL: [WittConvention; 3] =
        [WittConvention::Hasse, WittConvention::HassePlusMinusOne, WittConvention::HassePlusDisc];

    pub fn name(self) -> &'static str {
        match self {
            WittConvention::Hasse => "HASSE",
            WittConvention::HassePlusMinusOne => "HASSE_PLUS_MINUSONE",
            WittConvention::HassePlusDisc => "HASSE_PLUS_DISC",
        }
    }
}

impl fmt::Display for WittConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn hasse_class(d: &DiagonalForm) -> Result<BrauerClass> {
    let mut acc = BrauerClass::trivial();
    for (i, x) in d.entries.iter().enumerate() {
        for y in &d.entries[i + 1..] {
            acc = class_add(&acc, &class_on_support(x, y, &d.primes)?);
        }
    }
    Ok(acc)
}

pub fn witt_class(d: &DiagonalForm, conv: WittConvention) -> Result<BrauerClass> {
    let hasse = hasse_class(d)?;
    let m1 = BigInt::from(-1);
    let correction = match conv {
        WittConvention::Hasse => return Ok(hasse),
        WittConvention::HassePlusMinusOne => class_on_support(&m1, &m1, &d.primes)?,
        WittConvention::HassePlusDisc => class_on_support(&m1, &-d.determinant_class(), &d.primes)?,
    };
    Ok(class_add(&hasse, &correction))
}

/// Diagonalized trace form of a monic quartic.
pub fn trace_form(p: &QuarticCoeffs<Rational>, cfg: &FactorConfig) -> Result<DiagonalForm> {
    diagonalize(&gram_matrix(p), cfg)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConventionRow {
    pub convention: WittConvention,
    pub agree: usize,
    pub total: usize,
}

impl ConventionRow {
    pub fn rate(&self) -> f64 {
        self.agree as f64 / self.total as f64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConventionReport {
    pub rows: Vec<ConventionRow>,
    /// Conventions agreeing on every sample.
    pub matching: Vec<WittConvention>,
}

impl ConventionReport {
    /// The convention, when exactly one matches.
    pub fn selected(&self) -> Option<WittConvention> {
        match self.matching[..] {
            [c] => Some(c),
            _ => None,
        }
    }
}

/// Compares each convention's invariant of the family's trace form with the
/// obstruction formula at every sample `(U, V)`.
pub fn calibrate_convention(samples: &[(Rational, Rational)], cfg: &FactorConfig) -> Result<ConventionReport> {
    if samples.is_empty() {
        return Err(Error::EmptySamples);
    }
    let mut agree = [0usize; 3];
    for (u, v) in samples {
        let expected = obstruction_formula_class(u, v, cfg)?;
        let form = trace_form(&prop1_quartic(u, v), cfg)?;
        for (slot, conv) in agree.iter_mut().zip(WittConvention::ALL) {
            if witt_class(&form, conv)? == expected {
                *slot += 1;
            }
        }
    }
    let rows: Vec<ConventionRow> = WittConvention::ALL
        .iter()
        .zip(agree)
        .map(|(&convention, agree)| ConventionRow { convention, agree, total: samples.len() })
        .collect();
    let matching: Vec<WittConvention> = rows.iter().filter(|r| r.agree == r.total).map(|r| r.convention).collect();
    if matching.is_empty() {
        return Err(Error::NoConventionMatches);
    }
    Ok(ConventionReport { rows, matching })
}

/// The convention fixed by calibration.
pub const CALIBRATED_CONVENTION: WittConvention = WittConvention::Hasse;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, Place};
    use crate::arith::{squarefree_part, symbol_class};
    use crate::galois::real_root_count;
    use alloc::vec;
    use num_bigint::BigUint;

    const CFG: FactorConfig = FactorConfig::DEFAULT;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sums(&QuarticCoeffs::from_ints([0, 0, 0, -2]), 6), ints(&[4, 0, 0, 0, 8, 0, 0]));
        let s = power_sums(&QuarticCoeffs::from_ints([0, 0, 8, 12]), 6);
        assert_eq!((&s[3], &s[4], &s[6]), (&int(-24), &int(-48), &int(192)));
        assert!(power_sums(&QuarticCoeffs::from_ints([0, 0, 0, 0]), 8)[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn power_sums_match_numeric_roots() {
        // X^4 - 3X^3 + X - 5
        let p = QuarticCoeffs::from_ints([-3, 0, 1, -5]);
        let roots = crate::galois::numeric::monic_roots(&[-5.0, 1.0, 0.0, -3.0]);
        let s = power_sums(&p, 7);
        for (k, sk) in s.iter().enumerate() {
            let numeric: f64 = roots.iter().map(|r| r.powi(k as i32).re).sum();
            let exact = num_traits::ToPrimitive::to_f64(sk).unwrap();
            assert!((numeric - exact).abs() < 1e-8 * exact.abs().max(1.0), "p_{k}: {numeric} vs {exact}");
        }
    }

    #[test]
    fn gram_examples() {
        assert_eq!(
            gram_matrix(&QuarticCoeffs::from_ints([0, 0, 0, -2])),
            GramMatrix::from([[4, 0, 0, 0], [0, 0, 0, 8], [0, 0, 8, 0], [0, 8, 0, 0]])
        );
        assert_eq!(
            gram_matrix(&QuarticCoeffs::from_ints([0, 0, 8, 12])),
            GramMatrix::from([[4, 0, 0, -24], [0, 0, -24, -48], [0, -24, -48, 0], [-24, -48, 0, 192]])
        );
    }

    #[test]
    fn diagonalize_examples() {
        let squares = GramMatrix::from([[4, 0, 0, 0], [0, 9, 0, 0], [0, 0, 1, 0], [0, 0, 0, 25]]);
        assert_eq!(diagonalize(&squares, &CFG).unwrap().entries, vec![BigInt::from(1); 4]);
        let d = trace_form(&QuarticCoeffs::from_ints([0, 0, 0, -2]), &CFG).unwrap();
        assert_eq!(d.signature(), 2);
        let rank_two = GramMatrix::from([[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]);
        assert_eq!(diagonalize(&rank_two, &CFG), Err(Error::DegenerateForm));
        let hyperbolic = GramMatrix::from([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 3], [0, 0, 3, 0]]);
        let h = diagonalize(&hyperbolic, &CFG).unwrap();
        assert_eq!(h.signature(), 0);
    }

    #[test]
    fn determinant_matches_discriminant_class() {
        for a in [[0, 0, 0, -2], [0, 0, 8, 12], [1, 1, 1, 1], [-4, 38, -4, 33], [3, -7, 2, 11]] {
            let p = QuarticCoeffs::from_ints(a);
            let g = gram_matrix(&p);
            assert_eq!(g.determinant(), p.discriminant());
            let d = diagonalize(&g, &CFG).unwrap();
            assert_eq!(d.determinant_class(), squarefree_part(&p.discriminant(), &CFG).unwrap(), "{a:?}");
        }
    }

    #[test]
    fn signature_is_real_root_count() {
        for a in [[0, 0, 0, -2], [0, 0, 8, 12], [0, 0, 0, 1], [0, -5, 0, 4], [1, 1, 1, 1]] {
            let p = QuarticCoeffs::from_ints(a);
            let d = trace_form(&p, &CFG).unwrap();
            assert_eq!(d.signature(), real_root_count(&p.to_poly()).unwrap() as i64, "{a:?}");
        }
    }

    fn form(v: &[i64]) -> DiagonalForm {
        DiagonalForm::new(&ints(v), &CFG).unwrap()
    }

    #[test]
    fn witt_examples() {
        let two_real = BrauerClass::from_places([Place::Prime(BigUint::from(2u8)), Place::Real]).unwrap();
        assert!(witt_class(&form(&[1, 1, 1, 1]), WittConvention::Hasse).unwrap().is_trivial());
        assert_eq!(witt_class(&form(&[1, 1, 1, 1]), WittConvention::HassePlusMinusOne).unwrap(), two_real);
        assert!(witt_class(&form(&[-1, -1, -1, -1]), WittConvention::Hasse).unwrap().is_trivial());
    }

    #[test]
    fn hasse_matches_pairwise_symbols() {
        let entries = [6, -35, 11, -2];
        let mut expected = BrauerClass::trivial();
        for i in 0..4 {
            for j in i + 1..4 {
                let c = symbol_class(&int(entries[i]), &int(entries[j]), &CFG).unwrap();
                expected = class_add(&expected, &c);
            }
        }
        assert_eq!(hasse_class(&form(&entries)).unwrap(), expected);
    }

    #[test]
    fn witt_class_ignores_square_factors() {
        let base = form(&[2, -3, 5, 7]);
        let scaled = DiagonalForm::new(&[int(8), rat(-3, 4), rat(45, 49), int(7 * 16)], &CFG).unwrap();
        assert_eq!(scaled.entries, base.entries);
        for conv in WittConvention::ALL {
            let mut perm = base.clone();
            perm.entries.reverse();
            assert_eq!(witt_class(&base, conv).unwrap(), witt_class(&perm, conv).unwrap());
        }
    }

    #[test]
    fn calibration_examples() {
        let expected = obstruction_formula_class(&int(1), &int(1), &CFG).unwrap();
        assert_eq!(expected.len(), 2);
        let samples = [(int(1), int(1)), (rat(2, 3), rat(-5, 7)), (int(4), rat(1, 2)), (rat(-7, 2), int(3))];
        let report = calibrate_convention(&samples, &CFG).unwrap();
        assert_eq!(report.selected(), Some(CALIBRATED_CONVENTION));
        assert_eq!(calibrate_convention(&[], &CFG), Err(Error::EmptySamples));
    }
}
