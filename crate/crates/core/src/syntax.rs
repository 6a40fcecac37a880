//! Tokenizer and expression parser shared by scalar and presentation syntax.
//!
//! Expressions are sums of products. Factors are rational numbers, `i`, the
//! parameters `q`, `p`, `w`, `sqrt(q)`, `sqrt(p)`, generator names (with a
//! directly attached `*` for the adjoint), and parenthesized expressions,
//! each optionally raised to a power `^k`, `^-k` or `^(a/b)`. Products may be
//! written with `*` or by juxtaposition.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::ToPrimitive;

use crate::error::{Error, Result};
use crate::ncpoly::{Element, Letter};
use crate::scalar::{GaussRational, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    /// `adjacent` is true when no whitespace separates it from the previous token.
    Star {
        adjacent: bool,
    },
    Slash,
    Caret,
    LParen,
    RParen,
    Eq,
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

pub(crate) fn syntax_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, col, msg: msg.into() }
}

/// Tokenizes one line. Columns are 1-based.
pub(crate) fn lex(text: &str, line: usize) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    let mut prev_space = true;
    while k < chars.len() {
        let c = chars[k];
        let col = k + 1;
        if c.is_whitespace() {
            prev_space = true;
            k += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            k -= 1;
            Tok::Num(s.parse().expect("digits"))
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            let s: String = chars[start..k].iter().collect();
            k -= 1;
            Tok::Ident(s)
        } else {
            match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star { adjacent: !prev_space },
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '=' => Tok::Eq,
                _ => return Err(syntax_err(line, col, format!("unexpected character `{c}`"))),
            }
        };
        out.push(Token { tok, line, col });
        prev_space = false;
        k += 1;
    }
    Ok(out)
}

/// Names an expression may refer to.
pub(crate) struct Context<'a> {
    pub generators: &'a [String],
    /// Declared parameters among `q`, `p`, `w`.
    pub params: &'a [String],
}

pub(crate) struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
    ctx: &'a Context<'a>,
    /// Line and column reported for errors at end of input.
    end: (usize, usize),
}

impl<'a> Parser<'a> {
    pub fn new(toks: &'a [Token], ctx: &'a Context<'a>, end: (usize, usize)) -> Self {
        Parser { toks, pos: 0, ctx, end }
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map(|t| (t.line, t.col)).unwrap_or(self.end)
    }

    pub fn err(&self, msg: impl Into<String>) -> Error {
        let (l, c) = self.here();
        syntax_err(l, c, msg)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.tok.clone());
        self.pos += 1;
        t
    }

    pub fn expect(&mut self, want: &Tok, what: &str) -> Result<()> {
        match self.peek() {
            Some(t) if t == want => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.err(format!("expected {what}"))),
        }
    }

    /// expr := ['+'|'-'] product (('+'|'-') product)*
    pub fn expr(&mut self) -> Result<Element> {
        let mut acc = Element::zero();
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -1
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let p = self.product()?;
            acc = if sign < 0 { &acc - &p } else { &acc + &p };
            sign = match self.peek() {
                Some(Tok::Plus) => 1,
                Some(Tok::Minus) => -1,
                _ => return Ok(acc),
            };
            self.pos += 1;
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::LParen))
    }

    /// product := power (['*'] power)*
    fn product(&mut self) -> Result<Element> {
        let mut acc = self.power()?;
        loop {
            if matches!(self.peek(), Some(Tok::Star { .. })) {
                self.pos += 1;
                if !self.starts_factor() {
                    return Err(self.err("expected a factor after `*`"));
                }
            } else if !self.starts_factor() {
                return Ok(acc);
            }
            let f = self.power()?;
            acc = &acc * &f;
        }
    }

    /// power := atom ['^' exponent]
    fn power(&mut self) -> Result<Element> {
        let base = self.atom()?;
        if !matches!(self.peek(), Some(Tok::Caret)) {
            return Ok(base);
        }
        self.pos += 1;
        let (num, den) = self.exponent()?;
        let pure_scalar = base.terms().all(|(w, _)| w.is_empty());
        if pure_scalar {
            let s = base.coeff(&[]);
            return s
                .root_pow(num, den)
                .map(Element::scalar)
                .ok_or_else(|| self.err(format!("cannot raise `{s}` to the power {num}/{den}")));
        }
        if den != 1 || num < 0 {
            return Err(self.err("non-scalar factors only take non-negative integer powers"));
        }
        let mut acc = Element::one();
        for _ in 0..num {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn small_int(&mut self) -> Result<i32> {
        match self.bump() {
            Some(Tok::Num(n)) => n.to_i32().ok_or_else(|| self.err("exponent too large")),
            _ => {
                self.pos -= 1;
                Err(self.err("expected an integer"))
            }
        }
    }

    /// exponent := ['-'] int | '(' ['-'] int ['/' int] ')'
    fn exponent(&mut self) -> Result<(i32, i32)> {
        let paren = matches!(self.peek(), Some(Tok::LParen));
        if paren {
            self.pos += 1;
        }
        let neg = matches!(self.peek(), Some(Tok::Minus));
        if neg {
            self.pos += 1;
        }
        let mut num = self.small_int()?;
        if neg {
            num = -num;
        }
        let mut den = 1;
        if paren {
            if matches!(self.peek(), Some(Tok::Slash)) {
                self.pos += 1;
                den = self.small_int()?;
                if den == 0 {
                    return Err(self.err("zero denominator in exponent"));
                }
            }
            self.expect(&Tok::RParen, "`)`")?;
        }
        Ok((num, den))
    }

    fn param(&self, name: &str) -> Result<()> {
        if self.ctx.params.iter().any(|p| p == name) {
            Ok(())
        } else {
            Err(Error::UnknownParameter(name.to_string()))
        }
    }

    fn atom(&mut self) -> Result<Element> {
        let (line, col) = self.here();
        match self.bump() {
            Some(Tok::Num(n)) => {
                let mut r = BigRational::from_integer(n);
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.pos += 1;
                    match self.bump() {
                        Some(Tok::Num(d)) if d != BigInt::from(0) => r /= BigRational::from_integer(d),
                        _ => {
                            self.pos -= 1;
                            return Err(self.err("expected a nonzero denominator"));
                        }
                    }
                }
                Ok(Element::scalar(Scalar::constant(GaussRational::real(r))))
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                if let Some(k) = self.ctx.generators.iter().position(|g| *g == name) {
                    let star = matches!(self.peek(), Some(Tok::Star { adjacent: true }));
                    if star {
                        self.pos += 1;
                    }
                    return Ok(Element::letter(Letter { index: k as u16, star }));
                }
                match name.as_str() {
                    "i" => Ok(Element::scalar(Scalar::i())),
                    "q" => self.param("q").map(|_| Element::scalar(Scalar::q())),
                    "p" => self.param("p").map(|_| Element::scalar(Scalar::p())),
                    "w" => self.param("w").map(|_| Element::scalar(Scalar::w())),
                    "sqrt" => {
                        self.expect(&Tok::LParen, "`(` after sqrt")?;
                        let v = match self.bump() {
                            Some(Tok::Ident(p)) if p == "q" => self.param("q").map(|_| Scalar::t_pow(1))?,
                            Some(Tok::Ident(p)) if p == "p" => self.param("p").map(|_| Scalar::u_pow(1))?,
                            _ => {
                                self.pos -= 1;
                                return Err(self.err("sqrt takes `q` or `p`"));
                            }
                        };
                        self.expect(&Tok::RParen, "`)`")?;
                        Ok(Element::scalar(v))
                    }
                    _ if self.ctx.generators.is_empty() => Err(Error::UnknownParameter(name)),
                    _ => Err(syntax_err(line, col, format!("unknown name `{name}`"))),
                }
            }
            _ => Err(syntax_err(line, col, "expected a number, name or `(`")),
        }
    }
}

/// Parses scalar syntax such as `-(1-q^2)*sqrt(q)^-1` or `3/5+4/5i`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let toks = lex(text, 1)?;
    let params = ["q", "p", "w"].map(String::from);
    let ctx = Context { generators: &[], params: &params };
    let mut p = Parser::new(&toks, &ctx, (1, text.chars().count() + 1));
    if p.at_end() {
        return Err(p.err("empty expression"));
    }
    let e = p.expr()?;
    if !p.at_end() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e.coeff(&[]))
}

/// Parses an element over the given generator names and parameters.
pub fn parse_element(text: &str, generators: &[String], params: &[String]) -> Result<Element> {
    let toks = lex(text, 1)?;
    let ctx = Context { generators, params };
    let mut p = Parser::new(&toks, &ctx, (1, text.chars().count() + 1));
    if p.at_end() {
        return Err(p.err("empty expression"));
    }
    let e = p.expr()?;
    if !p.at_end() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn names(ns: &[&str]) -> Vec<String> {
        ns.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn scalar_examples() {
        let v = parse_scalar("-(1-q^2)*sqrt(q)^-1").unwrap();
        assert_eq!(v, &Scalar::t_pow(3) - &Scalar::t_pow(-1));
        let g = parse_scalar("3/5+4/5i").unwrap();
        assert_eq!(g.as_constant().unwrap(), GaussRational::new(rat(3, 5), rat(4, 5)));
        assert_eq!(parse_scalar("2q").unwrap(), Scalar::q().scale(&GaussRational::from_int(2)));
    }

    #[test]
    fn scalar_errors_have_positions() {
        match parse_scalar("1 + $") {
            Err(Error::Syntax { line: 1, col: 5, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_scalar("x + 1"), Err(Error::UnknownParameter(n)) if n == "x"));
        assert!(parse_scalar("(1 + q").is_err());
        assert!(parse_scalar("(1 + q)^-1").is_err());
    }

    #[test]
    fn attached_star_is_adjoint() {
        let g = names(&["z0", "z1"]);
        let params = names(&["p"]);
        let e = parse_element("z0*z1", &g, &params).unwrap();
        assert_eq!(e, Element::word(vec![Letter::starred(0), Letter::plain(1)]));
        let e = parse_element("z0 * z1", &g, &params).unwrap();
        assert_eq!(e, Element::word(vec![Letter::plain(0), Letter::plain(1)]));
        let e = parse_element("p*z1 z0* - (1 - p^2) z1^2", &g, &params).unwrap();
        assert_eq!(e.len(), 2);
    }

    #[test]
    fn undeclared_parameter_is_rejected() {
        let g = names(&["a"]);
        let err = parse_element("q a", &g, &[]).unwrap_err();
        assert!(matches!(err, Error::UnknownParameter(n) if n == "q"));
    }
}
