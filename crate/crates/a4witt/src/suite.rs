//! Verification suites. Each check is a function returning one [`Claim`];
//! randomized checks draw from a seeded stream of their own so that adding
//! or reordering checks never changes another check's samples.

use a4witt_core::arith::{class_add, factorize, hilbert_symbol, squarefree_part, symbol_class, FactorConfig, Place};
use a4witt_core::galois::numeric::monic_roots;
use a4witt_core::galois::{classify_quartic, real_root_count, GaloisLabel};
use a4witt_core::generic::{
    ab_pair, calibrate_criterion_sign, cubic_disc_sqrt, embeddable, prop1_disc_sqrt, prop1_quartic, prop1_symbolic,
    uv_from_symbols, verify_change_of_variables, Sign, SymbolParams,
};
use a4witt_core::resolvent::{
    pencil_analysis, verify_birational, verify_disc_relation, verify_hessian_identity, verify_resolvent_formulas,
    verify_root_formula, QuarticCoeffs, RootCheck,
};
use a4witt_core::traceform::{calibrate_convention, ConventionReport};
use a4witt_core::{Error, Rational, UniPoly};
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::report::{class, identity, q, Claim};
use crate::sample;

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
    pub factor: FactorConfig,
}

impl SuiteConfig {
    pub const DEFAULT_SEED: u64 = 0xA4;

    pub fn new(seed: u64, samples: usize) -> Self {
        SuiteConfig { seed, samples, factor: FactorConfig::DEFAULT }
    }
}

/// Height bound for random `(U, V)`.
pub const FAMILY_HEIGHT: i64 = 50;
/// Height bound for random criterion parameters `A..E`.
pub const PARAM_HEIGHT: i64 = 20;
/// Irreducible family members classified by [`family_groups`].
pub const FAMILY_GROUP_SAMPLES: usize = 50;
/// Height bound used by [`family_groups`].
pub const FAMILY_GROUP_HEIGHT: i64 = 20;

mod stream {
    pub const ROOT_FORMULA: u64 = 1;
    pub const FAMILY_GROUPS: u64 = 2;
    pub const WITT_CALIBRATION: u64 = 3;
    pub const WITT_FRESH: u64 = 4;
    pub const CRITERION_SIGN: u64 = 5;
    pub const END_TO_END: u64 = 6;
    pub const RECIPROCITY: u64 = 7;
    pub const BIMULTIPLICATIVE: u64 = 8;
    pub const STEINBERG: u64 = 9;
    pub const SQUARE_STABLE: u64 = 10;
    pub const DIVREM: u64 = 11;
    pub const STURM: u64 = 12;
}

fn guard(id: &str, anchor: &str, f: impl FnOnce() -> Result<Claim, Error>) -> Claim {
    f().unwrap_or_else(|e| Claim::error(id, anchor, e))
}

pub fn resolvent_formulas() -> Claim {
    Claim::from_identities(
        "prop2.resolvent_formulas",
        "closed-form coefficients b0..b3 of the resolvent Q = P'^2 mod P",
        &[verify_resolvent_formulas()],
    )
}

pub fn disc_relation() -> Claim {
    Claim::from_identities("prop2.disc_relation", "disc(Q) = disc(P) * b0^2", &[verify_disc_relation()])
}

pub fn hessian() -> Claim {
    Claim::from_identities(
        "prop2.hessian",
        "Hessian of the homogenized quartic is (-9a1^2 + 24a2) P - 9Q",
        &[verify_hessian_identity()],
    )
}

pub fn birational() -> Claim {
    Claim::from_identities("prop2.birational", "(a1..a4) <-> (a1, c1, c2, c3) round trip", &verify_birational())
}

/// Both pencil claims come from one computation.
pub fn pencil() -> [Claim; 2] {
    let modulus_anchor = "remainder of (P_T')^2 is U(T) Q";
    let disc_anchor = "disc(P_T) = disc(P) * U(T)^2";
    match pencil_analysis() {
        Ok(r) => {
            let attempts: Vec<Value> =
                r.attempts.iter().map(|(m, ok)| json!({"modulus": m.to_string(), "proportional": ok})).collect();
            let modulus = Claim::new(
                "prop2.pencil_modulus",
                modulus_anchor,
                true,
                json!({"modulus": r.modulus_used.to_string(), "attempts": attempts, "U(T)": r.u_of_t.to_string()}),
            );
            let disc = Claim::new("prop2.pencil_disc", disc_anchor, r.disc_identity.holds, identity(&r.disc_identity));
            [modulus, disc]
        }
        Err(e) => [
            Claim::error("prop2.pencil_modulus", modulus_anchor, &e),
            Claim::error("prop2.pencil_disc", disc_anchor, &e),
        ],
    }
}

/// Paired-root values `(x1 x2 - x3 x4) / (x1 + x2 - x3 - x4)` are roots of
/// `Q` for random integer quartics.
pub fn root_formula(cfg: &SuiteConfig) -> Claim {
    let id = "prop2.root_formula";
    let anchor = "(x1x2 - x3x4)/(x1 + x2 - x3 - x4) is a root of Q";
    let mut rng = sample::rng(cfg.seed, stream::ROOT_FORMULA);
    let check = RootCheck::default();
    let (mut tested, mut excluded, mut failures) = (0usize, 0usize, Vec::new());
    let mut worst = 0.0f64;
    while tested < cfg.samples {
        let p = sample::quartic(&mut rng, 20);
        match verify_root_formula(&p, &check) {
            Ok(r) => {
                tested += 1;
                worst = r.relative_residuals.iter().copied().fold(worst, f64::max);
                if !r.holds {
                    failures.push(p.to_string());
                }
            }
            Err(Error::NumericDegenerate(_)) => excluded += 1,
            Err(e) => return Claim::error(id, anchor, e),
        }
    }
    Claim::new(
        id,
        anchor,
        failures.is_empty(),
        json!({"tested": tested, "excluded_small_denominator": excluded, "max_relative_residual": worst,
               "tolerance": check.tol, "failures": failures}),
    )
}

pub fn family_disc_square() -> Claim {
    let id = "prop1.disc_square";
    let anchor = "disc of the two-parameter quartic is a square in Q[U, V]";
    match prop1_disc_sqrt() {
        Some(r) => {
            let holds = &r * &r == prop1_symbolic().discriminant();
            Claim::new(id, anchor, holds, json!({"sqrt": r.to_string()}))
        }
        None => Claim::new(id, anchor, false, json!("no polynomial square root")),
    }
}

pub fn cubic_disc_square() -> Claim {
    let id = "prop1.cubic_disc_square";
    let anchor = "disc of X^3 + c1 X^2 + c2 X + c3 is a square in Q[c1, u, v]";
    match cubic_disc_sqrt() {
        Some(r) => Claim::new(id, anchor, true, json!({"sqrt": r.to_string()})),
        None => Claim::new(id, anchor, false, json!("no polynomial square root")),
    }
}

pub fn change_of_variables() -> Claim {
    let id = "prop1.change_of_variables";
    let anchor = "substitution (c1, v, x) -> (U, V, X) gives the two-parameter quartic";
    guard(id, anchor, || {
        let r = verify_change_of_variables()?;
        let claims: Vec<_> = r.claims().into_iter().cloned().collect();
        Ok(Claim::from_identities(id, anchor, &claims))
    })
}

/// Quartics with known groups, each decided by a rechecked certificate.
pub const GALOIS_CORPUS: [([i64; 4], GaloisLabel); 5] = [
    ([0, 0, 8, 12], GaloisLabel::A4),
    ([1, 1, 1, 1], GaloisLabel::C4),
    ([0, 0, 0, 1], GaloisLabel::V4),
    ([0, 0, 0, -2], GaloisLabel::D4),
    ([0, 0, 1, 1], GaloisLabel::S4),
];

pub fn galois_corpus() -> Claim {
    let id = "galois.corpus";
    let anchor = "Galois groups of a fixed quartic corpus";
    guard(id, anchor, || {
        let mut ok = true;
        let mut rows = Vec::new();
        for (a, expected) in GALOIS_CORPUS {
            let f = QuarticCoeffs::from_ints(a).to_poly();
            let (label, cert) = classify_quartic(&f)?;
            let rechecked = cert.recheck(&f)?;
            ok &= label == expected && rechecked;
            rows.push(json!({"quartic": QuarticCoeffs::from_ints(a).to_string(), "expected": expected.to_string(),
                             "label": label.to_string(), "certificate_rechecked": rechecked}));
        }
        Ok(Claim::new(id, anchor, ok, Value::Array(rows)))
    })
}

/// Irreducible nondegenerate members of the family have group A4 or V4.
pub fn family_groups(cfg: &SuiteConfig) -> Claim {
    let id = "prop1.family_groups";
    let anchor = "specializations of the two-parameter quartic have group inside A4";
    guard(id, anchor, || {
        let mut rng = sample::rng(cfg.seed, stream::FAMILY_GROUPS);
        let (mut a4, mut v4, mut reducible, mut other) = (0usize, 0usize, 0usize, Vec::new());
        while a4 + v4 + other.len() < FAMILY_GROUP_SAMPLES {
            let (u, v) = sample::family_point(&mut rng, FAMILY_GROUP_HEIGHT);
            let (label, _) = classify_quartic(&prop1_quartic(&u, &v).to_poly())?;
            match label {
                GaloisLabel::A4 => a4 += 1,
                GaloisLabel::V4 => v4 += 1,
                GaloisLabel::Reducible(_) => reducible += 1,
                l => other.push(json!({"U": q(&u), "V": q(&v), "label": l.to_string()})),
            }
        }
        Ok(Claim::new(
            id,
            anchor,
            other.is_empty(),
            json!({"A4": a4, "V4": v4, "reducible_skipped": reducible, "unexpected": other}),
        ))
    })
}

fn convention_json(r: &ConventionReport) -> Value {
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| json!({"convention": row.convention.name(), "agree": row.agree, "total": row.total}))
        .collect();
    json!({"rates": rows, "matching": r.matching.iter().map(|c| c.name()).collect::<Vec<_>>()})
}

/// Picks the Witt normalization that reproduces the obstruction formula, then
/// confirms it on fresh samples.
pub fn witt_calibration(cfg: &SuiteConfig) -> Claim {
    let id = "prop1.witt_calibration";
    let anchor = "Witt invariant of Tr(x^2) equals (-1,-1) + (U^2-9, -2(U^2V-9V+1-U^2))";
    guard(id, anchor, || {
        let draw = |stream| {
            let mut rng = sample::rng(cfg.seed, stream);
            (0..cfg.samples).map(|_| sample::family_point(&mut rng, FAMILY_HEIGHT)).collect::<Vec<_>>()
        };
        let calibration = calibrate_convention(&draw(stream::WITT_CALIBRATION), &cfg.factor);
        let fresh = calibrate_convention(&draw(stream::WITT_FRESH), &cfg.factor);
        let (calibration, fresh) = match (calibration, fresh) {
            (Ok(c), Ok(f)) => (c, f),
            (Err(e), _) | (_, Err(e)) => return Ok(Claim::new(id, anchor, false, json!(e.to_string()))),
        };
        let selected = calibration.selected();
        let holds = selected.is_some() && fresh.matching.len() == 1 && selected == fresh.selected();
        Ok(Claim::new(
            id,
            anchor,
            holds,
            json!({"selected": selected.map(|c| c.name()), "calibration": convention_json(&calibration),
                   "fresh": convention_json(&fresh)}),
        ))
    })
}

/// The calibrated-sign claims: sign selection, the `+` counterexample and
/// negativity of `a, b` whenever the class vanishes.
pub fn criterion_sign(cfg: &SuiteConfig) -> [Claim; 3] {
    let ids = ["criterion.sign", "criterion.plus_nontrivial", "criterion.negativity"];
    let anchors = [
        "(-1,-1) + (a,b) vanishes for every parametrized pair under the working sign",
        "the literal + sign leaves a nontrivial class, e.g. a = b = 9",
        "(-1,-1) + (a,b) = 0 forces a < 0 and b < 0",
    ];
    let mut rng = sample::rng(cfg.seed, stream::CRITERION_SIGN);
    let mut samples: Vec<SymbolParams> = vec![SymbolParams::from_ints([1, 1, 1, 1, 1], Sign::Plus)];
    samples.extend((1..cfg.samples).map(|_| sample::symbol_params(&mut rng, PARAM_HEIGHT, Sign::Plus)));
    let report = match calibrate_criterion_sign(&samples, &cfg.factor) {
        Ok(r) => r,
        Err(e) => return [0, 1, 2].map(|i| Claim::error(ids[i], anchors[i], &e)),
    };
    let rates: Vec<Value> = report
        .rows
        .iter()
        .map(|r| json!({"sign": r.sign.to_string(), "trivial": r.trivial, "total": r.total}))
        .collect();
    let sign = Claim::new(
        ids[0],
        anchors[0],
        report.selected == Sign::Minus,
        json!({"selected": report.selected.to_string(), "rates": rates}),
    );
    let plus = match &report.plus_counterexample {
        Some(p) => {
            let pair = ab_pair(p).expect("sampled parameters are nondegenerate");
            let witness = json!({"A": q(&p.a), "B": q(&p.b), "C": q(&p.c), "D": q(&p.d), "E": q(&p.e),
                                 "a": q(&pair.a), "b": q(&pair.b)});
            Claim::new(ids[1], anchors[1], true, witness)
        }
        None => Claim::new(ids[1], anchors[1], false, json!("no nontrivial case under +")),
    };
    let neg = Claim::new(ids[2], anchors[2], report.negativity_holds, json!({"pairs": 2 * samples.len()}));
    [sign, plus, neg]
}

/// Parameters under the working sign give embeddable, totally real fields.
pub fn end_to_end(cfg: &SuiteConfig) -> Claim {
    let id = "criterion.end_to_end";
    let anchor = "parametrized (U, V) are embeddable and totally real";
    guard(id, anchor, || {
        let mut rng = sample::rng(cfg.seed, stream::END_TO_END);
        let (mut embeddable_count, mut irreducible, mut failures) = (0usize, 0usize, Vec::new());
        for _ in 0..cfg.samples {
            let p = sample::mappable_params(&mut rng, PARAM_HEIGHT, Sign::Minus);
            let (u, v, _) = uv_from_symbols(&p)?;
            let r = embeddable(&u, &v, &cfg.factor)?;
            let totally_real = r.real_roots.is_none_or(|n| n == 4);
            if r.embeddable {
                embeddable_count += 1;
            }
            if r.galois.is_some() {
                irreducible += 1;
            }
            if !r.embeddable || !totally_real {
                failures.push(json!({"U": q(&u), "V": q(&v), "class": class(&r.class), "real_roots": r.real_roots}));
            }
        }
        Ok(Claim::new(
            id,
            anchor,
            failures.is_empty(),
            json!({"samples": cfg.samples, "embeddable": embeddable_count, "irreducible": irreducible,
                   "failures": failures}),
        ))
    })
}

fn places_for(a: &Rational, b: &Rational, f: &FactorConfig) -> Result<Vec<Place>, Error> {
    let mut out = vec![Place::Real];
    let mut primes = std::collections::BTreeSet::from([num_bigint::BigUint::from(2u8)]);
    for x in [a, b] {
        let d = squarefree_part(x, f)?;
        if !d.magnitude().is_one() {
            primes.extend(factorize(&d, f)?.primes.into_keys());
        }
    }
    out.extend(primes.into_iter().map(Place::Prime));
    Ok(out)
}

fn counted(id: &str, anchor: &str, tested: usize, failures: Vec<Value>) -> Claim {
    Claim::new(id, anchor, failures.is_empty(), json!({"tested": tested, "failures": failures}))
}

pub fn reciprocity(cfg: &SuiteConfig) -> Claim {
    let (id, anchor) = ("infra.reciprocity", "product of local Hilbert symbols is 1");
    guard(id, anchor, || {
        let mut rng = sample::rng(cfg.seed, stream::RECIPROCITY);
        let mut failures = Vec::new();
        for _ in 0..cfg.samples {
            let a = sample::nonzero_rational(&mut rng, 1_000_000);
            let b = sample::nonzero_rational(&mut rng, 1_000_000);
            let mut product = 1i8;
            for v in places_for(&a, &b, &cfg.factor)? {
                product *= hilbert_symbol(&a, &b, &v, &cfg.factor)?;
            }
            if product != 1 {
                failures.push(json!({"a": q(&a), "b": q(&b)}));
            }
        }
        Ok(counted(id, anchor, cfg.samples, failures))
    })
}

pub fn bimultiplicativity(cfg: &SuiteConfig) -> Claim {
    let (id, anchor) = ("infra.bimultiplicativity", "(a, b1 b2) = (a, b1) (a, b2) at every place");
    guard(id, anchor, || {
        let mut rng = sample::rng(cfg.seed, stream::BIMULTIPLICATIVE);
        let mut failures = Vec::new();
        for _ in 0..cfg.samples {
            let a = sample::nonzero_rational(&mut rng, 1000);
            let b1 = sample::nonzero_rational(&mut rng, 1000);
            let b2 = sample::nonzero_rational(&mut rng, 1000);
            let b = &b1 * &b2;
            let mut places = places_for(&a, &b, &cfg.factor)?;
            places.extend(places_for(&b1, &b2, &cfg.factor)?);
            for v in places {
                let whole = hilbert_symbol(&a, &b, &v, &cfg.factor)?;
                let split = hilbert_symbol(&a, &b1, &v, &cfg.factor)? * hilbert_symbol(&a, &b2, &v, &cfg.factor)?;
                if whole != split {
                    failures.push(json!({"a": q(&a), "b1": q(&b1), "b2": q(&b2), "place": v.to_string()}));
                }
            }
        }
        Ok(counted(id, anchor, cfg.samples, failures))
    })
}

pub fn steinberg(cfg: &SuiteConfig) -> Claim {
    let (id, anchor) = ("infra.steinberg", "(a, -a) = 0 and (a, 1 - a) = 0");
    guard(id, anchor, || {
        let mut rng = sample::rng(cfg.seed, stream::STEINBERG);
        let mut failures = Vec::new();
        for _ in 0..cfg.samples {
            let a = sample::nonzero_rational(&mut rng, 100_000);
            if !symbol_class(&a, &-a.clone(), &cfg.factor)?.is_trivial() {
                failures.push(json!({"a": q(&a), "relation": "(a,-a)"}));
            }
            let one_minus = Rational::one() - &a;
            if !one_minus.is_zero() && !symbol_class(&a, &one_minus, &cfg.factor)?.is_trivial() {
                failures.push(json!({"a": q(&a), "relation": "(a,1-a)"}));
            }
        }
        Ok(counted(id, anchor, cfg.samples, failures))
    })
}

pub fn square_stability(cfg: &SuiteConfig) -> Claim {
    let (id, anchor) = ("infra.square_stability", "symbol classes depend on arguments modulo squares");
    guard(id, anchor, || {
        let mut rng = sample::rng(cfg.seed, stream::SQUARE_STABLE);
        let mut failures = Vec::new();
        for _ in 0..cfg.samples {
            let a = sample::nonzero_rational(&mut rng, 10_000);
            let b = sample::nonzero_rational(&mut rng, 10_000);
            let s = sample::nonzero_rational(&mut rng, 100);
            let t = sample::nonzero_rational(&mut rng, 100);
            let base = symbol_class(&a, &b, &cfg.factor)?;
            let moved = symbol_class(&(&a * &s * &s), &(&b * &t * &t), &cfg.factor)?;
            if base != moved || !class_add(&base, &moved).is_trivial() {
                failures.push(json!({"a": q(&a), "b": q(&b), "s": q(&s), "t": q(&t)}));
            }
        }
        Ok(counted(id, anchor, cfg.samples, failures))
    })
}

pub fn divrem(cfg: &SuiteConfig) -> Claim {
    let (id, anchor) = ("infra.divrem", "f = q g + r with deg r < deg g");
    guard(id, anchor, || {
        let mut rng = sample::rng(cfg.seed, stream::DIVREM);
        let mut failures = Vec::new();
        for _ in 0..cfg.samples {
            let len_f = rand::Rng::gen_range(&mut rng, 1..=9);
            let len_g = rand::Rng::gen_range(&mut rng, 2..=5);
            let f = UniPoly::new((0..len_f).map(|_| sample::rational(&mut rng, 9)).collect());
            let mut gc: Vec<Rational> = (0..len_g).map(|_| sample::rational(&mut rng, 9)).collect();
            gc[len_g - 1] = sample::nonzero_rational(&mut rng, 9);
            let g = UniPoly::new(gc);
            let (quo, rem) = f.divrem(&g)?;
            let degree_ok = rem.degree().is_none_or(|d| d < g.degree().expect("nonzero"));
            if &(&quo * &g) + &rem != f || !degree_ok {
                failures.push(json!({"f": f.to_string(), "g": g.to_string()}));
            }
        }
        Ok(counted(id, anchor, cfg.samples, failures))
    })
}

pub fn sturm(cfg: &SuiteConfig) -> Claim {
    let (id, anchor) = ("infra.sturm", "Sturm real-root count agrees with numeric roots");
    guard(id, anchor, || {
        let mut rng = sample::rng(cfg.seed, stream::STURM);
        let mut failures = Vec::new();
        for _ in 0..cfg.samples {
            let p = sample::quartic(&mut rng, 20);
            let exact = real_root_count(&p.to_poly())?;
            let lower: Vec<f64> =
                [&p.a4, &p.a3, &p.a2, &p.a1].iter().map(|c| c.to_f64().expect("small integers")).collect();
            let numeric =
                monic_roots(&lower).iter().filter(|z| z.im.abs() < 1e-6 * z.norm_sqr().sqrt().max(1.0)).count();
            if exact != numeric {
                failures.push(json!({"quartic": p.to_string(), "sturm": exact, "numeric": numeric}));
            }
        }
        Ok(counted(id, anchor, cfg.samples, failures))
    })
}

pub fn prop2_suite(cfg: &SuiteConfig) -> Vec<Claim> {
    let mut out = vec![resolvent_formulas(), disc_relation(), hessian(), birational()];
    out.extend(pencil());
    out.push(root_formula(cfg));
    out
}

pub fn prop1_suite(cfg: &SuiteConfig) -> Vec<Claim> {
    vec![
        family_disc_square(),
        cubic_disc_square(),
        change_of_variables(),
        galois_corpus(),
        family_groups(cfg),
        witt_calibration(cfg),
    ]
}

pub fn criterion_suite(cfg: &SuiteConfig) -> Vec<Claim> {
    let mut out: Vec<Claim> = criterion_sign(cfg).into();
    out.push(end_to_end(cfg));
    out
}

pub fn infra_suite(cfg: &SuiteConfig) -> Vec<Claim> {
    vec![reciprocity(cfg), bimultiplicativity(cfg), steinberg(cfg), square_stability(cfg), divrem(cfg), sturm(cfg)]
}
