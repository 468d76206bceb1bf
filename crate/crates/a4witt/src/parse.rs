//! Text formats for polynomials: expressions such as
//! `x^4 - 4*x^3 + 38*x^2 - 4*x + 33` and descending coefficient lists such as
//! `[1,-4,38,-4,33]`.

use std::fmt;

use a4witt_core::arith::parse_rational;
use a4witt_core::poly::{MultiPoly, UniPoly, Var};
use a4witt_core::resolvent::QuarticCoeffs;
use a4witt_core::Rational;
use num_traits::Zero;

/// A parse failure at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub input: String,
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(input: &str, position: usize, message: impl Into<String>) -> Self {
        ParseError { input: input.to_string(), position, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} at position {}", self.message, self.position)?;
        writeln!(f, "  {}", self.input)?;
        write!(f, "  {:>width$}", "^", width = self.position + 1)
    }
}

impl std::error::Error for ParseError {}

type Result<T> = std::result::Result<T, ParseError>;

struct Parser<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser { input, bytes: input.as_bytes(), pos: 0 }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.input, self.pos, message)
    }

    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = acc * self.power()?;
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let divisor = self.power()?;
                match divisor.as_constant() {
                    Some(c) if !c.is_zero() => acc = acc.scale(&(Rational::from_integer(1.into()) / c)),
                    Some(_) => return Err(ParseError::new(self.input, at, "division by zero")),
                    None => return Err(ParseError::new(self.input, at, "only division by a constant is supported")),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a nonnegative integer exponent"));
        }
        let e: u32 = self.input[start..self.pos]
            .parse()
            .ok()
            .filter(|e| *e <= 64)
            .ok_or_else(|| ParseError::new(self.input, start, "exponent out of range"))?;
        Ok(base.pow(e))
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                let n: num_bigint::BigInt = self.input[start..self.pos].parse().expect("digits");
                Ok(MultiPoly::constant(Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.bytes.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
                    self.pos += 1;
                }
                let name = &self.input[start..self.pos];
                Var::from_name(name)
                    .map(MultiPoly::var)
                    .ok_or_else(|| ParseError::new(self.input, start, format!("unknown variable '{name}'")))
            }
            Some(c) => Err(self.error(format!("unexpected character '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Parses a polynomial expression over the named variables.
pub fn parse_poly(input: &str) -> Result<MultiPoly> {
    let mut p = Parser::new(input);
    let out = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

fn parse_list(input: &str) -> Result<Vec<Rational>> {
    let open = input.find('[').expect("caller checked");
    let close = input.rfind(']').ok_or_else(|| ParseError::new(input, input.len(), "expected ']'"))?;
    if !input[close + 1..].trim().is_empty() {
        return Err(ParseError::new(input, close + 1, "unexpected trailing input"));
    }
    let body = &input[open + 1..close];
    let mut out = Vec::new();
    let mut offset = open + 1;
    for piece in body.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let item = piece.trim();
        if item.is_empty() {
            return Err(ParseError::new(input, offset + lead, "empty coefficient"));
        }
        match parse_rational(item) {
            Ok(q) => out.push(q),
            Err(a4witt_core::Error::ParseRational { position, .. }) => {
                return Err(ParseError::new(input, offset + lead + position, format!("malformed rational '{item}'")));
            }
            Err(e) => return Err(ParseError::new(input, offset + lead, e.to_string())),
        }
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// A univariate polynomial, as an expression in one variable or as a
/// descending coefficient list.
pub fn parse_univariate(input: &str) -> Result<UniPoly<Rational>> {
    if input.trim_start().starts_with('[') {
        return Ok(UniPoly::from_descending(parse_list(input)?));
    }
    let p = parse_poly(input)?;
    let vars = p.variables();
    match vars[..] {
        [] => Ok(UniPoly::constant(p.as_constant().expect("no variables"))),
        [v] => Ok(UniPoly::from_multi(&p, v).map(|c| c.as_constant().expect("univariate"))),
        _ => Err(ParseError::new(input, 0, "expected a polynomial in one variable")),
    }
}

/// A quartic in either format; a non-monic input is divided by its leading
/// coefficient.
pub fn parse_quartic(input: &str) -> Result<QuarticCoeffs<Rational>> {
    let f = parse_univariate(input)?;
    if f.degree() != Some(4) {
        let found = f.degree().map_or("the zero polynomial".to_string(), |d| format!("degree {d}"));
        return Err(ParseError::new(input, 0, format!("expected a quartic, found {found}")));
    }
    Ok(QuarticCoeffs::from_poly(&f).expect("degree checked"))
}

/// A rational in `p/q` form.
pub fn parse_rational_arg(input: &str) -> Result<Rational> {
    parse_rational(input).map_err(|e| match e {
        a4witt_core::Error::ParseRational { position, .. } => {
            ParseError::new(input, position, "malformed rational (expected p or p/q)")
        }
        other => ParseError::new(input, 0, other.to_string()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use a4witt_core::arith::{int, rat};

    #[test]
    fn both_formats_agree() {
        let a = parse_quartic("x^4 - 4*x^3 + 38*x^2 - 4*x + 33").unwrap();
        let b = parse_quartic("[1,-4,38,-4,33]").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, QuarticCoeffs::from_ints([-4, 38, -4, 33]));
    }

    #[test]
    fn rationals_and_grouping() {
        let f = parse_univariate("3/2*X^2 - (X - 1)^2 + X/3").unwrap();
        assert_eq!(f, UniPoly::new(vec![int(-1), rat(7, 3), rat(1, 2)]));
        let g = parse_univariate("[1/2, 0, -3/4]").unwrap();
        assert_eq!(g, UniPoly::new(vec![rat(-3, 4), int(0), rat(1, 2)]));
        let m = parse_quartic("2*x^4 + 4").unwrap();
        assert_eq!(m, QuarticCoeffs::from_ints([0, 0, 0, 2]));
    }

    #[test]
    fn multivariate() {
        let p = parse_poly("U^2*V - 9*V + 1 - U^2").unwrap();
        assert_eq!(p.variables(), vec![Var::U, Var::V]);
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_poly("x^4 + # 3").unwrap_err().position, 6);
        assert_eq!(parse_poly("x^4 + 3)").unwrap_err().position, 7);
        assert_eq!(parse_poly("x^ + 1").unwrap_err().position, 3);
        assert_eq!(parse_poly("w + 1").unwrap_err().message, "unknown variable 'w'");
        assert_eq!(parse_quartic("[1,2,x,4,5]").unwrap_err().position, 5);
        assert_eq!(parse_quartic("[1, ,3]").unwrap_err().position, 4);
        assert!(parse_quartic("x^3 + 1").unwrap_err().message.contains("degree 3"));
        assert!(parse_quartic("U*x^4 + 1").is_err());
        assert_eq!(parse_rational_arg("3/-4").unwrap_err().position, 2);
        let shown = parse_poly("x + $").unwrap_err().to_string();
        assert!(shown.ends_with("      ^"), "{shown}");
    }
}
