//! Expression parser for phase-space polynomials.
//!
//! Grammar (whitespace insensitive):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := '-' factor | atom ('^' UINT)?
//! atom   := UINT | 'l' | VAR | '(' expr ')'
//! VAR    := 'x' | 'p'            (m = 1)
//!         | 'x1' | 'x2' | 'p1' | 'p2' | …   (m ≥ 2)
//! ```
//!
//! `*` is the commutative pointwise product — expressions denote classical
//! observables. A `/` divisor must be a nonzero constant (possibly
//! involving `l`), so printed coefficients like `1/(2*l)` read back
//! exactly. Error positions are byte offsets into the input.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::phasepoly::{BasePolynomial, PhasePolynomial, Variable};
use crate::scalar::RationalFunction;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Number(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a str,
    tokens: Vec<(usize, Token)>,
}

impl<'a> Lexer<'a> {
    fn tokenize(src: &'a str) -> Result<Self> {
        let bytes = src.as_bytes();
        let mut tokens = Vec::new();
        let mut pos = 0usize;
        while pos < bytes.len() {
            let b = bytes[pos];
            match b {
                b' ' | b'\t' | b'\n' | b'\r' => {
                    pos += 1;
                }
                b'+' => {
                    tokens.push((pos, Token::Plus));
                    pos += 1;
                }
                b'-' => {
                    tokens.push((pos, Token::Minus));
                    pos += 1;
                }
                b'*' => {
                    tokens.push((pos, Token::Star));
                    pos += 1;
                }
                b'/' => {
                    tokens.push((pos, Token::Slash));
                    pos += 1;
                }
                b'^' => {
                    tokens.push((pos, Token::Caret));
                    pos += 1;
                }
                b'(' => {
                    tokens.push((pos, Token::LParen));
                    pos += 1;
                }
                b')' => {
                    tokens.push((pos, Token::RParen));
                    pos += 1;
                }
                b'0'..=b'9' => {
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let digits = &src[start..pos];
                    tokens.push((
                        start,
                        Token::Number(digits.parse::<BigInt>().map_err(|_| Error::Parse {
                            position: start,
                            message: "invalid integer literal".to_string(),
                        })?),
                    ));
                }
                b'a'..=b'z' | b'A'..=b'Z' => {
                    let start = pos;
                    pos += 1;
                    while pos < bytes.len()
                        && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_')
                    {
                        pos += 1;
                    }
                    tokens.push((start, Token::Ident(src[start..pos].to_string())));
                }
                _ => {
                    return Err(Error::Parse {
                        position: pos,
                        message: format!("unexpected character `{}`", src[pos..].chars().next().unwrap()),
                    });
                }
            }
        }
        Ok(Lexer { src, tokens })
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    end: usize,
    cursor: usize,
    m: usize,
}

impl Parser {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.cursor)
    }

    fn next_position(&self) -> usize {
        self.tokens
            .get(self.cursor)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn advance(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.cursor).cloned();
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn eat(&mut self, token: &Token) -> bool {
        if self.peek().map(|(_, t)| t) == Some(token) {
            self.cursor += 1;
            true
        } else {
            false
        }
    }

    fn variable(&self, name: &str, position: usize) -> Result<PhasePolynomial> {
        let v = match (name, self.m) {
            ("l", _) => {
                return Ok(PhasePolynomial::constant(self.m, RationalFunction::lambda()))
            }
            ("x", 1) => Variable::X(0),
            ("p", 1) => Variable::P(0),
            _ if self.m >= 2 => {
                let (kind, index) = name.split_at(1);
                let parsed: Option<usize> = index.parse().ok();
                match (kind, parsed) {
                    ("x", Some(a)) if a >= 1 && a <= self.m => Variable::X(a - 1),
                    ("p", Some(a)) if a >= 1 && a <= self.m => Variable::P(a - 1),
                    _ => {
                        return Err(Error::Parse {
                            position,
                            message: format!("unknown variable `{name}` for m = {}", self.m),
                        })
                    }
                }
            }
            _ => {
                return Err(Error::Parse {
                    position,
                    message: format!("unknown variable `{name}` for m = {}", self.m),
                })
            }
        };
        Ok(PhasePolynomial::variable(self.m, v))
    }

    fn atom(&mut self) -> Result<PhasePolynomial> {
        let position = self.next_position();
        match self.advance() {
            Some((_, Token::Number(v))) => Ok(PhasePolynomial::constant(
                self.m,
                RationalFunction::from_big_int(v),
            )),
            Some((p, Token::Ident(name))) => self.variable(&name, p),
            Some((_, Token::LParen)) => {
                let inner = self.expr()?;
                if !self.eat(&Token::RParen) {
                    return Err(Error::Parse {
                        position: self.next_position(),
                        message: "expected `)`".to_string(),
                    });
                }
                Ok(inner)
            }
            Some((p, other)) => Err(Error::Parse {
                position: p,
                message: format!("unexpected token {other:?}"),
            }),
            None => Err(Error::Parse {
                position,
                message: "unexpected end of input".to_string(),
            }),
        }
    }

    fn factor(&mut self) -> Result<PhasePolynomial> {
        if self.eat(&Token::Minus) {
            return Ok(-&self.factor()?);
        }
        let base = self.atom()?;
        if self.eat(&Token::Caret) {
            let position = self.next_position();
            match self.advance() {
                Some((_, Token::Number(e))) => {
                    // Hard bound far above any supported degree; keeps
                    // absurd exponents from looping before job validation.
                    let exponent: u32 = e
                        .try_into()
                        .ok()
                        .filter(|e: &u32| *e <= 256)
                        .ok_or(Error::Parse {
                            position,
                            message: "exponent out of range".to_string(),
                        })?;
                    let mut acc = PhasePolynomial::one(base.dimensions());
                    for _ in 0..exponent {
                        acc = acc.classical_mul(&base)?;
                    }
                    Ok(acc)
                }
                _ => Err(Error::Parse {
                    position,
                    message: "expected an integer exponent after `^`".to_string(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn term(&mut self) -> Result<PhasePolynomial> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(&Token::Star) {
                acc = acc.classical_mul(&self.factor()?)?;
            } else if let Some(&(slash_pos, Token::Slash)) = self.peek() {
                self.cursor += 1;
                let divisor = self.factor()?;
                let scalar = constant_value(&divisor).ok_or_else(|| Error::Parse {
                    position: slash_pos,
                    message: "division is only defined by nonzero constants".to_string(),
                })?;
                if scalar.is_zero() {
                    return Err(Error::Parse {
                        position: slash_pos,
                        message: "division by zero".to_string(),
                    });
                }
                acc = acc.scale(&scalar.invert().expect("nonzero"));
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn expr(&mut self) -> Result<PhasePolynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Token::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Token::Minus) {
                acc = &acc - &self.term()?;
            } else {
                break;
            }
        }
        Ok(acc)
    }
}

/// The scalar value of a constant polynomial (no x or p dependence).
fn constant_value(f: &PhasePolynomial) -> Option<RationalFunction> {
    if f.degree().unwrap_or(0) == 0 {
        Some(f.coefficient(&crate::phasepoly::Monomial::unit(f.dimensions())))
    } else {
        None
    }
}

/// Parse an expression over x-, p-variables and `l` into a phase
/// polynomial on the m-dimensional base.
pub fn parse_phase_polynomial(src: &str, m: usize) -> Result<PhasePolynomial> {
    if m == 0 {
        return Err(Error::InvalidJob("m must be at least 1".to_string()));
    }
    let lexer = Lexer::tokenize(src)?;
    let mut parser = Parser {
        tokens: lexer.tokens,
        end: lexer.src.len(),
        cursor: 0,
        m,
    };
    let value = parser.expr()?;
    if let Some((p, t)) = parser.peek() {
        return Err(Error::Parse {
            position: *p,
            message: format!("unexpected trailing token {t:?}"),
        });
    }
    Ok(value)
}

/// Parse an expression that must be a polynomial on the base (no fibre
/// variables, no l).
pub fn parse_base_polynomial(src: &str, m: usize) -> Result<BasePolynomial> {
    let f = parse_phase_polynomial(src, m)?;
    if f.terms().any(|(_, c)| !c.is_laurent() || c.pole_order_at_zero().map_or(false, |o| o != 0))
    {
        // Coefficients that genuinely involve l are fine for phase-space
        // observables but not for defining equations of the locus.
        return Err(Error::InvalidJob(
            "ideal generators must not involve l".to_string(),
        ));
    }
    BasePolynomial::from_phase(f).map_err(|_| {
        Error::InvalidJob("ideal generators must not involve fibre variables".to_string())
    })
}

/// Parse a rational number such as `1/2`, `-3`, or `7/4`.
pub fn parse_rational(src: &str) -> Result<num_rational::BigRational> {
    src.trim()
        .parse::<num_rational::BigRational>()
        .map_err(|e| Error::InvalidJob(format!("invalid rational `{src}`: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phasepoly::Variable;

    fn x() -> PhasePolynomial {
        PhasePolynomial::variable(1, Variable::X(0))
    }

    fn p() -> PhasePolynomial {
        PhasePolynomial::variable(1, Variable::P(0))
    }

    #[test]
    fn parses_basic_expressions() {
        assert_eq!(parse_phase_polynomial("x", 1).unwrap(), x());
        assert_eq!(
            parse_phase_polynomial("x*p + l", 1).unwrap(),
            &x().classical_mul(&p()).unwrap()
                + &PhasePolynomial::constant(1, RationalFunction::lambda())
        );
        assert_eq!(
            parse_phase_polynomial("x^3", 1).unwrap(),
            PhasePolynomial::x_power(3)
        );
        assert_eq!(
            parse_phase_polynomial("(x + p)^2 - x^2 - p^2 - 2*x*p", 1).unwrap(),
            PhasePolynomial::zero(1)
        );
        assert_eq!(
            parse_phase_polynomial("-x", 1).unwrap(),
            -&x()
        );
    }

    #[test]
    fn parses_two_dimensional_variables() {
        let f = parse_phase_polynomial("x1*x2 - p1*p2", 2).unwrap();
        assert_eq!(f.degree(), Some(2));
        assert!(parse_phase_polynomial("x3", 2).is_err());
        assert!(parse_phase_polynomial("x1", 1).is_err());
    }

    #[test]
    fn parses_scalar_division() {
        let f = parse_phase_polynomial("p^2/(2*l)", 1).unwrap();
        assert_eq!(
            f,
            PhasePolynomial::p_power(2).scale(&RationalFunction::two_lambda_pow(-1))
        );
        assert_eq!(
            parse_phase_polynomial("1/2", 1).unwrap(),
            PhasePolynomial::constant(1, RationalFunction::from_ratio(1, 2))
        );
        assert!(matches!(
            parse_phase_polynomial("x/p", 1),
            Err(Error::Parse { position: 1, .. })
        ));
        assert!(matches!(
            parse_phase_polynomial("x/0", 1),
            Err(Error::Parse { position: 1, .. })
        ));
    }

    #[test]
    fn error_positions() {
        assert!(matches!(
            parse_phase_polynomial("x^", 1),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            parse_phase_polynomial("x +", 1),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse_phase_polynomial("(x", 1),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            parse_phase_polynomial("x $ p", 1),
            Err(Error::Parse { position: 2, .. })
        ));
        assert!(matches!(
            parse_phase_polynomial("x y", 1),
            Err(Error::Parse { position: 2, .. })
        ));
    }

    #[test]
    fn printer_output_reparses_exactly() {
        let samples = vec![
            x().moyal_star(&p()).unwrap(),
            &PhasePolynomial::x_power(2).scale(&RationalFunction::from_ratio(1, 2))
                - &p().scale(&RationalFunction::two_lambda_pow(-1)),
            PhasePolynomial::zero(1),
            PhasePolynomial::constant(
                1,
                &RationalFunction::lambda() + &RationalFunction::from_int(2),
            ),
            -&PhasePolynomial::constant(
                1,
                &RationalFunction::lambda() - &RationalFunction::from_int(2),
            ),
        ];
        for f in samples {
            let printed = f.to_string();
            let reparsed = parse_phase_polynomial(&printed, 1).unwrap();
            assert_eq!(reparsed, f, "printed form: {printed}");
        }
    }

    #[test]
    fn base_polynomial_constraints() {
        assert!(parse_base_polynomial("x^2", 1).is_ok());
        assert!(parse_base_polynomial("x1*x2", 2).is_ok());
        assert!(parse_base_polynomial("p", 1).is_err());
        assert!(parse_base_polynomial("l*x", 1).is_err());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(
            parse_rational("1/2").unwrap(),
            num_rational::BigRational::new(1.into(), 2.into())
        );
        assert!(parse_rational("x").is_err());
    }
}
