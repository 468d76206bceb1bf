use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("factorization exceeded: {0}")]
    FactorizationExceeded(String),
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("ramified set has odd cardinality {0}")]
    OddRamification(usize),
    #[error("zero is not a valid argument to {0}")]
    ZeroArgument(&'static str),
    #[error("cannot parse rational {input:?} at byte {position}")]
    ParseRational { input: String, position: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("leading coefficient does not divide exactly")]
    InexactDivision,
    #[error("zero polynomial passed to {0}")]
    ZeroPolynomial(&'static str),
    #[error("constant polynomial has no discriminant")]
    ConstantPolynomial,
    #[error("binding for {0} has an identically zero denominator")]
    ZeroDenominator(&'static str),
    #[error("neither P nor P_T gives a remainder proportional to Q")]
    NoProportionality,
    #[error("resolvent has b0 = 0; the (a)-(c) map is undefined there")]
    DegenerateResolvent,
    #[error("numeric check skipped: {0}")]
    NumericDegenerate(String),
    #[error("polynomial has zero discriminant")]
    SingularInput,
    #[error("polynomial is reducible")]
    ReducibleInput,
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("expected degree {expected}, got {found}")]
    WrongDegree { expected: usize, found: usize },
    #[error("quadratic form is degenerate")]
    DegenerateForm,
    #[error("no Witt convention agrees on every sample")]
    NoConventionMatches,
    #[error("symbol undefined: {0}")]
    UndefinedSymbol(&'static str),
    #[error("degenerate parameters: {0}")]
    DegenerateParams(&'static str),
    #[error("no criterion sign makes every sample trivial")]
    NoSignMatches,
    #[error("sample list is empty")]
    EmptySamples,
}
