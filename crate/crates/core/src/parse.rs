//! Text syntax for field elements and polynomials.
//!
//! Grammar: sums and differences of products and quotients of powers, with
//! integer literals, parentheses, ring variables and tower generator names.
//! Division is only allowed by nonzero constants. Examples: `2/3`, `a+1`,
//! `X_1 - X_0^2`, `(1+e+e^2)/3`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem};
use crate::poly::{Poly, PolyRing};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token::Num(digits.parse().unwrap()));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ring: &'a PolyRing,
    source: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} in {:?}", self.source))
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = if self.eat('-') {
            self.term()?.neg()
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.factor()?);
            } else if self.eat('/') {
                let d = self.factor()?;
                let c = d.as_constant().ok_or_else(|| self.err("division by a non-constant"))?;
                let inv = c.inv().map_err(|_| self.err("division by zero"))?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Token::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.err("expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(self.ring.constant(self.ring.field().from_bigint(&n)))
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                if let Some(v) = self.ring.var_named(&name) {
                    Ok(v)
                } else if let Some(g) = self.ring.field().generator_named(&name) {
                    Ok(self.ring.constant(g))
                } else {
                    Err(self.err(&format!("unknown name {name}")))
                }
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("missing closing parenthesis"));
                }
                Ok(inner)
            }
            Some(Token::Op('-')) => {
                self.pos += 1;
                Ok(self.atom()?.neg())
            }
            _ => Err(self.err("unexpected end of expression")),
        }
    }
}

pub fn parse_poly(ring: &PolyRing, s: &str) -> Result<Poly> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { tokens, pos: 0, ring, source: s };
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

pub fn parse_elem(field: &Field, s: &str) -> Result<FieldElem> {
    let ring = PolyRing::new(field, Vec::new())?;
    parse_poly(&ring, s)?
        .as_constant()
        .ok_or_else(|| Error::Parse(format!("{s:?} is not a constant")))
}

/// Parses a univariate polynomial in `var` over `field`, returning its
/// coefficients with the constant term first.
pub fn parse_univariate(field: &Field, var: &str, s: &str) -> Result<Vec<FieldElem>> {
    let ring = PolyRing::new(field, vec![var.to_string()])?;
    let p = parse_poly(&ring, s)?;
    let deg = p.total_degree().unwrap_or(0) as usize;
    let mut coeffs = vec![field.zero(); deg + 1];
    for (m, c) in p.terms() {
        coeffs[m[0] as usize] = c.clone();
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_and_generators() {
        let qq = Field::rationals();
        assert_eq!(parse_elem(&qq, "1/3 + 1/6").unwrap().to_string(), "1/2");
        assert_eq!(parse_elem(&qq, "-(2/4)").unwrap().to_string(), "-1/2");
        let mp = parse_univariate(&qq, "z", "z^2+z+1").unwrap();
        let k = qq.extension("z", mp).unwrap();
        assert_eq!(parse_elem(&k, "z*z").unwrap().to_string(), "-z-1");
        assert_eq!(parse_elem(&k, "(z+1)/2").unwrap().to_string(), "1/2*z+1/2");
    }

    #[test]
    fn printed_forms_parse_back() {
        let f2 = Field::prime(2).unwrap();
        let f4 = f2.extension("a", parse_univariate(&f2, "a", "a^2+a+1").unwrap()).unwrap();
        let x = parse_elem(&f4, "a^2").unwrap();
        assert_eq!(x.to_string(), "a+1");
        assert_eq!(parse_elem(&f4, &x.to_string()).unwrap(), x);
        let r = PolyRing::new(&f4, vec!["x".into(), "y".into()]).unwrap();
        let p = parse_poly(&r, "(a+1)*x^2*y + a*y - 1").unwrap();
        assert_eq!(parse_poly(&r, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn errors() {
        let qq = Field::rationals();
        let r = PolyRing::new(&qq, vec!["x".into()]).unwrap();
        assert!(parse_poly(&r, "1/x").is_err());
        assert!(parse_poly(&r, "y").is_err());
        assert!(parse_poly(&r, "x^").is_err());
        assert!(parse_poly(&r, "(x").is_err());
        assert!(parse_poly(&r, "x $ 1").is_err());
        assert!(parse_poly(&r, "1/0").is_err());
        assert!(parse_elem(&qq, "x").is_err());
    }
}
