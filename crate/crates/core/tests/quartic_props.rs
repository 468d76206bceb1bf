use a4witt_core::arith::{int, rat, squarefree_part, FactorConfig, Rational};
use a4witt_core::galois::numeric::monic_roots;
use a4witt_core::galois::{classify_quartic, real_root_count, GaloisLabel};
use a4witt_core::generic::{embeddable, obstruction_formula_class, prop1_quartic};
use a4witt_core::resolvent::QuarticCoeffs;
use a4witt_core::traceform::{diagonalize, gram_matrix, trace_form, witt_class, CALIBRATED_CONVENTION};
use a4witt_core::Error;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

const CFG: FactorConfig = FactorConfig::DEFAULT;

fn quartic() -> impl Strategy<Value = QuarticCoeffs<Rational>> {
    prop::array::uniform4(-20i64..=20).prop_map(QuarticCoeffs::from_ints)
}

fn squarefree_quartic() -> impl Strategy<Value = QuarticCoeffs<Rational>> {
    quartic().prop_filter("nonzero discriminant", |p| !p.discriminant().is_zero())
}

fn numeric_real_roots(p: &QuarticCoeffs<Rational>) -> usize {
    let lower: Vec<f64> = [&p.a4, &p.a3, &p.a2, &p.a1].iter().map(|c| c.to_f64().unwrap()).collect();
    monic_roots(&lower).iter().filter(|z| z.im.abs() < 1e-6 * z.norm_sqr().sqrt().max(1.0)).count()
}

fn height_rational(bound: i64) -> impl Strategy<Value = Rational> {
    ((-bound..=bound).prop_filter("nonzero", |n| *n != 0), 1..=bound).prop_map(|(n, d)| rat(n, d))
}

/// `lambda^4 f(x / lambda + c)`, which generates the same field.
fn transform(p: &QuarticCoeffs<Rational>, c: &Rational, lambda: &Rational) -> QuarticCoeffs<Rational> {
    let f = p.to_poly();
    let shifted = a4witt_core::UniPoly::new(vec![c.clone(), Rational::from_integer(1.into())]);
    let mut acc = a4witt_core::UniPoly::zero();
    for coeff in f.descending() {
        acc = &(&acc * &shifted) + &a4witt_core::UniPoly::constant(coeff);
    }
    let scaled: Vec<Rational> = acc.ascending().iter().enumerate().map(|(i, a)| a * lambda.pow(4 - i as i32)).collect();
    QuarticCoeffs::from_poly(&a4witt_core::UniPoly::new(scaled)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn sturm_agrees_with_numeric_roots(p in squarefree_quartic()) {
        prop_assert_eq!(real_root_count(&p.to_poly()).unwrap(), numeric_real_roots(&p));
    }

    #[test]
    fn gram_determinant_is_discriminant(p in quartic()) {
        let g = gram_matrix(&p);
        prop_assert_eq!(g.determinant(), p.discriminant());
        match diagonalize(&g, &CFG) {
            Ok(d) => prop_assert_eq!(d.determinant_class(), squarefree_part(&p.discriminant(), &CFG).unwrap()),
            Err(e) => {
                prop_assert_eq!(e, Error::DegenerateForm);
                prop_assert!(p.discriminant().is_zero());
            }
        }
    }

    #[test]
    fn signature_counts_real_roots(p in squarefree_quartic()) {
        let d = trace_form(&p, &CFG).unwrap();
        prop_assert_eq!(d.signature(), real_root_count(&p.to_poly()).unwrap() as i64);
    }

    #[test]
    fn classification_survives_change_of_generator(
        p in squarefree_quartic(),
        c in height_rational(5),
        lambda in height_rational(4),
    ) {
        let (label, _) = classify_quartic(&p.to_poly()).unwrap();
        let q = transform(&p, &c, &lambda);
        let (again, cert) = classify_quartic(&q.to_poly()).unwrap();
        prop_assert_eq!(&label, &again);
        prop_assert!(cert.recheck(&q.to_poly()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn calibrated_witt_class_is_the_formula(u in height_rational(50), v in height_rational(50)) {
        let formula = match obstruction_formula_class(&u, &v, &CFG) {
            Ok(c) => c,
            Err(Error::UndefinedSymbol(_)) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(format!("{e}"))),
        };
        let p = prop1_quartic(&u, &v);
        prop_assume!(!p.discriminant().is_zero());
        let form = trace_form(&p, &CFG).unwrap();
        prop_assert_eq!(witt_class(&form, CALIBRATED_CONVENTION).unwrap(), formula);
    }

    #[test]
    fn family_is_a4_or_v4(u in height_rational(30), v in height_rational(30)) {
        let p = prop1_quartic(&u, &v);
        prop_assume!(!p.discriminant().is_zero());
        let (label, _) = classify_quartic(&p.to_poly()).unwrap();
        prop_assert!(
            matches!(label, GaloisLabel::A4 | GaloisLabel::V4 | GaloisLabel::C3 | GaloisLabel::Reducible(_)),
            "{label}"
        );
    }
}

#[test]
fn embeddable_specializations_are_totally_real_in_examples() {
    let r = embeddable(&rat(-12, 5), &rat(-463, 162), &CFG).unwrap();
    assert!(r.embeddable);
    if r.galois.is_some() {
        assert_eq!(r.real_roots, Some(4));
    }
    assert!(!embeddable(&int(1), &int(1), &CFG).unwrap().embeddable);
}

fn big_rational() -> impl Strategy<Value = Rational> {
    (any::<i128>(), 1..=u64::MAX).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_roots_of_split_products(r1 in big_rational(), r2 in big_rational(), c in 1i64..50) {
        use a4witt_core::galois::rational_roots;
        use a4witt_core::UniPoly;
        let one = Rational::from_integer(1.into());
        let linear = |r: &Rational| UniPoly::new(vec![-r.clone(), one.clone()]);
        // X^2 - c X + c^2 + 1 has negative discriminant
        let quadratic = UniPoly::new(vec![Rational::from_integer((c * c + 1).into()), int(-c), one.clone()]);
        let f = &(&linear(&r1) * &linear(&r2)) * &quadratic;
        let mut expected = vec![r1.clone(), r2.clone()];
        expected.sort();
        expected.dedup();
        prop_assert_eq!(rational_roots(&f).unwrap(), expected);
    }
}
