//! One function per CLI subcommand. Each returns the JSON report and whether
//! the command's verdict is positive (exit 0) or negative (exit 1).

use std::time::Instant;

use a4witt_core::arith::FactorConfig;
use a4witt_core::galois::{classify_quartic, cubic_galois};
use a4witt_core::generic::{
    ab_pair, embeddable, obstruction_formula_class, obstruction_symbol_args, prop1_quartic, uv_from_symbols, Sign,
    SymbolParams,
};
use a4witt_core::resolvent::{disc_relation_report, resolvent_from_formulas, to_c_coords, QuarticCoeffs};
use a4witt_core::traceform::{gram_matrix, trace_form, witt_class, CALIBRATED_CONVENTION};
use a4witt_core::{Error, Rational};
use serde_json::{json, Value};
use thiserror::Error as ThisError;

use crate::parse::{parse_quartic, parse_univariate, ParseError};
use crate::report::{class, identity, q, Report};
use crate::suite::{self, SuiteConfig};

/// Failures that map to exit code 2.
#[derive(Debug, ThisError)]
pub enum CommandError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

pub type Outcome = Result<(Report, bool), CommandError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Prop2,
    Prop1,
    Criterion,
    All,
}

impl Scope {
    pub fn name(self) -> &'static str {
        match self {
            Scope::Prop2 => "prop2",
            Scope::Prop1 => "prop1",
            Scope::Criterion => "criterion",
            Scope::All => "all",
        }
    }
}

fn finish(mut report: Report, start: Instant, verdict: bool) -> Outcome {
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok((report, verdict))
}

fn quartic_json(p: &QuarticCoeffs<Rational>) -> Value {
    json!({"text": p.to_string(), "coefficients": [ "1", p.a1.to_string(), p.a2.to_string(), p.a3.to_string(), p.a4.to_string()]})
}

pub fn verify(scope: Scope, cfg: &SuiteConfig) -> Outcome {
    let start = Instant::now();
    let mut report = Report::new("verify").input("scope", scope.name()).input("samples", cfg.samples);
    report.seed = Some(cfg.seed);
    if matches!(scope, Scope::Prop2 | Scope::All) {
        report.claims.extend(suite::prop2_suite(cfg));
    }
    if matches!(scope, Scope::Prop1 | Scope::All) {
        report.claims.extend(suite::prop1_suite(cfg));
    }
    if matches!(scope, Scope::Criterion | Scope::All) {
        report.claims.extend(suite::criterion_suite(cfg));
    }
    if scope == Scope::All {
        report.claims.extend(suite::infra_suite(cfg));
    }
    let verdict = report.all_passed();
    finish(report, start, verdict)
}

pub fn resolvent(input: &str) -> Outcome {
    let start = Instant::now();
    let p = parse_quartic(input)?;
    let b = resolvent_from_formulas(&p);
    let q_poly = b.to_poly();
    let relation = disc_relation_report(&p, &q_poly)?;
    let c = match to_c_coords(&p) {
        Ok(c) => json!({"a1": q(&c.a1), "c1": q(&c.c1), "c2": q(&c.c2), "c3": q(&c.c3)}),
        Err(Error::DegenerateResolvent) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    let mut report = Report::new("resolvent").input("quartic", input);
    report.result = Some(json!({
        "quartic": quartic_json(&p),
        "b": b.as_array().map(q),
        "Q": q_poly.to_string(),
        "disc_P": q(&p.discriminant()),
        "disc_Q": q(&q_poly.discriminant()?),
        "disc_relation": identity(&relation),
        "c_coordinates": c,
    }));
    finish(report, start, relation.holds)
}

pub fn galois(input: &str) -> Outcome {
    let start = Instant::now();
    let f = parse_univariate(input)?;
    let mut report = Report::new("galois").input("polynomial", input);
    report.result = Some(match f.degree() {
        Some(3) => json!({"label": cubic_galois(&f)?.to_string(), "discriminant": q(&f.monic().discriminant()?)}),
        Some(4) => {
            let (label, cert) = classify_quartic(&f)?;
            let aux: Vec<Value> = cert
                .auxiliary
                .iter()
                .map(|t| json!({"quantity": t.quantity, "value": q(&t.value), "is_square": t.is_square}))
                .collect();
            json!({
                "label": label.to_string(),
                "certificate": {
                    "disc": q(&cert.disc),
                    "disc_is_square": cert.disc_is_square,
                    "resolvent": cert.resolvent.iter().map(q).collect::<Vec<_>>(),
                    "resolvent_rational_roots": cert.resolvent_rational_roots.iter().map(q).collect::<Vec<_>>(),
                    "auxiliary": aux,
                    "rechecked": cert.recheck(&f)?,
                },
            })
        }
        d => {
            return Err(CommandError::Usage(format!(
                "galois expects a cubic or quartic, found degree {}",
                d.map_or("-inf".into(), |d| d.to_string())
            )))
        }
    });
    finish(report, start, true)
}

pub fn traceform(input: &str, cfg: &FactorConfig) -> Outcome {
    let start = Instant::now();
    let p = parse_quartic(input)?;
    let g = gram_matrix(&p);
    let d = trace_form(&p, cfg)?;
    let witt = witt_class(&d, CALIBRATED_CONVENTION)?;
    let mut report = Report::new("traceform").input("quartic", input);
    report.result = Some(json!({
        "gram": g.entries.iter().map(|row| row.iter().map(q).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "diagonal": d.entries.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
        "signature": d.signature(),
        "witt": {"convention": CALIBRATED_CONVENTION.name(), "ramified": class(&witt)},
    }));
    finish(report, start, true)
}

pub fn specialize(u: &Rational, v: &Rational, cfg: &FactorConfig) -> Outcome {
    let start = Instant::now();
    let p = prop1_quartic(u, v);
    let mut result = json!({"quartic": quartic_json(&p), "disc": q(&p.discriminant())});
    match obstruction_symbol_args(u, v) {
        Ok((a, b)) => {
            result["symbol"] = json!([q(&a), q(&b)]);
            result["obstruction"] = class(&obstruction_formula_class(u, v, cfg)?);
        }
        Err(e) => result["obstruction"] = json!(e.to_string()),
    }
    let mut report = Report::new("specialize").input("U", q(u)).input("V", q(v));
    report.result = Some(result);
    finish(report, start, true)
}

pub fn param(p: &SymbolParams) -> Outcome {
    let start = Instant::now();
    let pair = ab_pair(p)?;
    let (u, v, _) = uv_from_symbols(p)?;
    let quartic = prop1_quartic(&u, &v);
    let mut report = Report::new("param")
        .input("A", q(&p.a))
        .input("B", q(&p.b))
        .input("C", q(&p.c))
        .input("D", q(&p.d))
        .input("E", q(&p.e))
        .input("sign", p.sign.to_string());
    report.result =
        Some(json!({"a": q(&pair.a), "b": q(&pair.b), "U": q(&u), "V": q(&v), "quartic": quartic_json(&quartic)}));
    finish(report, start, true)
}

pub fn embeddable_cmd(u: &Rational, v: &Rational, cfg: &FactorConfig) -> Outcome {
    let start = Instant::now();
    let r = embeddable(u, v, cfg)?;
    let mut report = Report::new("embeddable").input("U", q(u)).input("V", q(v));
    report.result = Some(json!({
        "embeddable": r.embeddable,
        "class": class(&r.class),
        "galois": r.galois.as_ref().map(|l| l.to_string()),
        "real_roots": r.real_roots,
    }));
    finish(report, start, r.embeddable)
}

pub fn calibrate(cfg: &SuiteConfig) -> Outcome {
    let start = Instant::now();
    let mut report = Report::new("calibrate").input("samples", cfg.samples);
    report.seed = Some(cfg.seed);
    report.claims.push(suite::witt_calibration(cfg));
    report.claims.extend(suite::criterion_sign(cfg));
    let verdict = report.all_passed();
    finish(report, start, verdict)
}

pub fn parse_sign(s: &str) -> Result<Sign, String> {
    match s {
        "+" | "plus" => Ok(Sign::Plus),
        "-" | "minus" => Ok(Sign::Minus),
        _ => Err(format!("expected + or -, found '{s}'")),
    }
}
