//! Text forms for polynomials and points.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := power (['*'] power)*        implicit product allowed
//! power  := atom ['^' integer]
//! atom   := number | 'z' | 'x' | 'i' | '(' expr ')'
//! number := digits ['.' digits] ['/' digits]
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{Gaussian, ProjectivePoint, RealPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at offset {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        offset,
        message: message.into(),
    })
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigRational),
    Var,
    Imag,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn digits_value(s: &str) -> BigInt {
    s.parse::<BigInt>().unwrap_or_else(|_| BigInt::zero())
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' | b'.' => {
                let int_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let int_part = &text[int_start..i];
                let mut value = BigRational::from_integer(digits_value(if int_part.is_empty() { "0" } else { int_part }));
                if i < bytes.len() && bytes[i] == b'.' {
                    i += 1;
                    let frac_start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let frac = &text[frac_start..i];
                    if frac.is_empty() && int_part.is_empty() {
                        return err(start, "expected digits");
                    }
                    if !frac.is_empty() {
                        let scale = num_traits::pow(BigInt::from(10), frac.len());
                        value += BigRational::new(digits_value(frac), scale);
                    }
                }
                // a/b binds tighter than anything else
                if i < bytes.len() && bytes[i] == b'/' {
                    i += 1;
                    let den_start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if den_start == i {
                        return err(den_start, "expected a denominator");
                    }
                    let den = digits_value(&text[den_start..i]);
                    if den.is_zero() {
                        return err(den_start, "zero denominator");
                    }
                    value /= BigRational::from_integer(den);
                }
                out.push((start, Tok::Num(value)));
                continue;
            }
            b'z' | b'x' | b'Z' | b'X' => out.push((start, Tok::Var)),
            b'i' | b'I' => out.push((start, Tok::Imag)),
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'^' => out.push((start, Tok::Caret)),
            b'(' => out.push((start, Tok::LParen)),
            b')' => out.push((start, Tok::RParen)),
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return err(start, format!("unexpected character '{ch}'"));
            }
        }
        i += 1;
    }
    Ok(out)
}

/// Polynomial in z with Gaussian-rational coefficients, ascending.
#[derive(Clone, Debug)]
struct GPoly(Vec<Gaussian>);

impl GPoly {
    fn constant(c: Gaussian) -> Self {
        GPoly(vec![c])
    }

    fn var() -> Self {
        GPoly(vec![Gaussian::zero(), Gaussian::one()])
    }

    fn trim(mut self) -> Self {
        while self.0.len() > 1 && self.0.last().is_some_and(Gaussian::is_zero) {
            self.0.pop();
        }
        self
    }

    fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let zero = Gaussian::zero();
        GPoly((0..n)
            .map(|k| self.0.get(k).unwrap_or(&zero) + other.0.get(k).unwrap_or(&zero))
            .collect())
        .trim()
    }

    fn neg(&self) -> Self {
        GPoly(self.0.iter().map(|c| -c).collect())
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = vec![Gaussian::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        GPoly(out).trim()
    }

    fn pow(&self, e: u32) -> Self {
        let mut out = GPoly::constant(Gaussian::one());
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    saw_var: bool,
    saw_imag: bool,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn expr(&mut self) -> Result<GPoly, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(Tok::Plus) => self.pos += 1,
            Some(Tok::Minus) => {
                self.pos += 1;
                negate = true;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<GPoly, ParseError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some(Tok::Num(_) | Tok::Var | Tok::Imag | Tok::LParen) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<GPoly, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let at = self.offset();
            match self.peek().cloned() {
                Some(Tok::Num(n)) if n.is_integer() => {
                    self.pos += 1;
                    let e: u32 = n
                        .to_integer()
                        .try_into()
                        .map_err(|_| ParseError { offset: at, message: "exponent too large".into() })?;
                    if e > 4096 {
                        return err(at, "exponent too large");
                    }
                    Ok(base.pow(e))
                }
                _ => err(at, "expected a non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<GPoly, ParseError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(GPoly::constant(Gaussian::real(v)))
            }
            Some(Tok::Var) => {
                self.pos += 1;
                self.saw_var = true;
                Ok(GPoly::var())
            }
            Some(Tok::Imag) => {
                self.pos += 1;
                self.saw_imag = true;
                Ok(GPoly::constant(Gaussian::i()))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return err(self.offset(), "expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => err(at, "expected a number, variable or '('"),
            None => err(at, "unexpected end of input"),
        }
    }
}

fn parse_gpoly(text: &str) -> Result<(GPoly, bool, bool), ParseError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return err(0, "empty input");
    }
    let mut parser = Parser {
        toks,
        pos: 0,
        end: text.len(),
        saw_var: false,
        saw_imag: false,
    };
    let poly = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return err(parser.offset(), "unexpected trailing input");
    }
    Ok((poly, parser.saw_var, parser.saw_imag))
}

/// Parses a polynomial in `z` (or `x`) with rational coefficients, e.g.
/// `"(z^2-1)(z^2-4)(z^2-9)"` or `"-36 + 49*z^2 - 14*z^4 + z^6"`.
/// Products of conjugate factors such as `(z-i)(z+i)` are accepted as long as
/// the expanded coefficients are real.
pub fn parse_polynomial(text: &str) -> Result<RealPolynomial, ParseError> {
    let (poly, _, _) = parse_gpoly(text)?;
    if poly.0.iter().any(|c| !c.is_real()) {
        return err(0, "polynomial has non-real coefficients");
    }
    Ok(RealPolynomial::new(poly.0.into_iter().map(|c| c.re).collect()))
}

/// Parses a polynomial whose coefficients may be Gaussian rationals,
/// returning the ascending coefficient list.
pub fn parse_complex_polynomial(text: &str) -> Result<Vec<Gaussian>, ParseError> {
    parse_gpoly(text).map(|(poly, _, _)| poly.0)
}

/// Parses a real rational such as `-3/2` or `0.25`.
pub fn parse_rational(text: &str) -> Result<BigRational, ParseError> {
    match parse_point(text)? {
        ProjectivePoint::Finite(z) if z.is_real() => Ok(z.re),
        _ => err(0, "expected a real number"),
    }
}

/// Parses a point of the projective line: `inf`, `∞`, a rational, or a
/// Gaussian rational such as `1/2-3i`.
pub fn parse_point(text: &str) -> Result<ProjectivePoint, ParseError> {
    let trimmed = text.trim();
    let lower = trimmed.to_ascii_lowercase();
    if matches!(lower.as_str(), "inf" | "infinity" | "+inf" | "∞") {
        return Ok(ProjectivePoint::Infinity);
    }
    let (poly, saw_var, _) = parse_gpoly(trimmed)?;
    if saw_var && poly.0.len() > 1 {
        return err(0, "a point cannot depend on z");
    }
    Ok(ProjectivePoint::Finite(poly.0.into_iter().next().unwrap_or_else(Gaussian::zero)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn expanded_and_factored_forms_agree() {
        let a = parse_polynomial("(z^2-1)(z^2-4)(z^2-9)").unwrap();
        let b = parse_polynomial("-36 + 49*z^2 - 14*z^4 + z^6").unwrap();
        assert_eq!(a, b);
        let c = parse_polynomial("(x-i)(x+i)").unwrap();
        assert_eq!(c, RealPolynomial::from_i64(&[1, 0, 1]));
    }

    #[test]
    fn rationals_and_decimals() {
        let p = parse_polynomial("1/2 z^2 - 0.25").unwrap();
        assert_eq!(p.coeffs(), &[q(-1, 4), q(0, 1), q(1, 2)]);
        assert_eq!(parse_rational("-3/2").unwrap(), q(-3, 2));
        assert_eq!(parse_rational(" 1.5 ").unwrap(), q(3, 2));
    }

    #[test]
    fn points() {
        assert_eq!(parse_point("inf").unwrap(), ProjectivePoint::Infinity);
        assert_eq!(parse_point("∞").unwrap(), ProjectivePoint::Infinity);
        let z = parse_point("1/2-3i").unwrap();
        assert_eq!(z, ProjectivePoint::Finite(Gaussian::new(q(1, 2), q(-3, 1))));
        assert_eq!(parse_point("-i").unwrap().to_string(), "-i");
        assert_eq!(parse_point("2i").unwrap().to_string(), "2i");
    }

    #[test]
    fn errors_carry_offsets() {
        assert!(parse_polynomial("").is_err());
        assert_eq!(parse_polynomial("z^2 + ?").unwrap_err().offset, 6);
        assert!(parse_polynomial("(z-1").is_err());
        assert!(parse_polynomial("z^1/2").is_err());
        assert!(parse_polynomial("z - i").is_err());
        assert!(parse_point("z+1").is_err());
        assert!(parse_rational("i").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn unary_minus_and_powers() {
        let p = parse_polynomial("-(z+1)^3").unwrap();
        assert_eq!(p, RealPolynomial::from_i64(&[-1, -3, -3, -1]));
        assert_eq!(parse_polynomial("2").unwrap(), RealPolynomial::from_i64(&[2]));
    }
}
