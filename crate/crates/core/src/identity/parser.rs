//! Recursive-descent parser for the identity language.
//!
//! ```text
//! identity   := sum "=" "0"
//! sum        := signedterm { ("+"|"-") signedterm }
//! signedterm := [rational] [ "(-1)^{" signpoly "}" ] product
//! signpoly   := mono { "+" mono } ;  mono := var | var "." var | "1"
//! product    := expr [ "*" expr ]
//! expr       := var | "A" ["^" int] "(" product ")" | "(" expr "*" expr ")"
//!             | "[" product "," product "]" | "{" product "," product "," product "}"
//!             | "<" product "," product "," product ">" | "as(" product "," product "," product ")"
//!             | "o(" product "," product ")"
//! ```
//!
//! A bare `a*b` is accepted wherever a single product fits unambiguously;
//! `a*b*c` is rejected and must be parenthesized.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ast::{BinOp, Expr, Identity, Term, TernOp};
use super::sign::SignPoly;
use crate::error::ParseError;
use crate::graded::Scalar;

const RESERVED: [&str; 3] = ["A", "as", "o"];

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(BigInt),
    Punct(char),
    End,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = text[start..i].parse().expect("ascii digits");
            out.push((start, Tok::Num(n)));
        } else if "()[]{}<>,*+-=^/.".contains(c) {
            out.push((i, Tok::Punct(c)));
            i += 1;
        } else {
            return Err(ParseError {
                pos: i,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

/// A sign monomial before variable names are resolved.
enum RawMono {
    One,
    Vars(usize, String, Option<String>),
}

struct RawTerm {
    pos: usize,
    coeff: Scalar,
    sign: Vec<RawMono>,
    expr: Expr,
    /// (variable index, byte position) in reading order
    occurrences: Vec<(usize, usize)>,
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    vars: Vec<String>,
    occurrences: Vec<(usize, usize)>,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn peek_at(&self, k: usize) -> &Tok {
        let idx = (self.at + k).min(self.toks.len() - 1);
        &self.toks[idx].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            message: message.into(),
        })
    }

    fn is_punct(&self, c: char) -> bool {
        *self.peek() == Tok::Punct(c)
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.is_punct(c) {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected `{c}`, found {}", describe(self.peek())))
        }
    }

    fn identity(&mut self) -> Result<Vec<RawTerm>, ParseError> {
        let mut terms = Vec::new();
        // `0 = 0` is the empty identity
        if *self.peek() == Tok::Num(BigInt::zero()) && *self.peek_at(1) == Tok::Punct('=') {
            self.bump();
        } else {
            let mut negative = false;
            if self.is_punct('+') || self.is_punct('-') {
                negative = self.is_punct('-');
                self.bump();
            }
            loop {
                terms.push(self.signed_term(negative)?);
                if self.is_punct('+') || self.is_punct('-') {
                    negative = self.is_punct('-');
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect('=')?;
        match self.bump() {
            Tok::Num(n) if n.is_zero() => {}
            _ => return self.error("right-hand side must be `0`"),
        }
        if *self.peek() != Tok::End {
            return self.error(format!("trailing input: {}", describe(self.peek())));
        }
        Ok(terms)
    }

    fn signed_term(&mut self, negative: bool) -> Result<RawTerm, ParseError> {
        let pos = self.pos();
        let mut coeff = Scalar::one();
        if let Tok::Num(n) = self.peek().clone() {
            self.bump();
            let mut d = BigInt::one();
            if self.is_punct('/') {
                self.bump();
                match self.bump() {
                    Tok::Num(m) if !m.is_zero() => d = m,
                    _ => return self.error("expected a nonzero denominator"),
                }
            }
            coeff = Scalar::new(n, d);
        }
        if negative {
            coeff = -coeff;
        }
        let mut sign = Vec::new();
        if self.at_sign_prefix() {
            for _ in 0..6 {
                self.bump();
            }
            sign = self.sign_poly()?;
        }
        self.occurrences.clear();
        let expr = self.product()?;
        Ok(RawTerm {
            pos,
            coeff,
            sign,
            expr,
            occurrences: std::mem::take(&mut self.occurrences),
        })
    }

    fn at_sign_prefix(&self) -> bool {
        self.is_punct('(')
            && *self.peek_at(1) == Tok::Punct('-')
            && *self.peek_at(2) == Tok::Num(BigInt::one())
            && *self.peek_at(3) == Tok::Punct(')')
            && *self.peek_at(4) == Tok::Punct('^')
            && *self.peek_at(5) == Tok::Punct('{')
    }

    fn sign_poly(&mut self) -> Result<Vec<RawMono>, ParseError> {
        let mut monos = Vec::new();
        loop {
            let pos = self.pos();
            match self.bump() {
                Tok::Num(n) if n.is_one() => monos.push(RawMono::One),
                Tok::Ident(a) => {
                    if self.is_punct('.') {
                        self.bump();
                        match self.bump() {
                            Tok::Ident(b) => monos.push(RawMono::Vars(pos, a, Some(b))),
                            _ => {
                                return Err(ParseError {
                                    pos,
                                    message: "expected a variable after `.`".into(),
                                })
                            }
                        }
                    } else {
                        monos.push(RawMono::Vars(pos, a, None));
                    }
                }
                other => {
                    return Err(ParseError {
                        pos,
                        message: format!(
                            "expected a sign monomial (var, var.var or 1), found {}",
                            describe(&other)
                        ),
                    })
                }
            }
            if self.is_punct('+') {
                self.bump();
            } else {
                break;
            }
        }
        self.expect('}')?;
        Ok(monos)
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let a = self.expr()?;
        if !self.is_punct('*') {
            return Ok(a);
        }
        self.bump();
        let b = self.expr()?;
        if self.is_punct('*') {
            return self.error("chained product: parenthesize as ((a*b)*c) or (a*(b*c))");
        }
        Ok(Expr::bin(BinOp::Star, a, b))
    }

    fn args<const N: usize>(&mut self, close: char) -> Result<[Expr; N], ParseError> {
        let mut out: Vec<Expr> = Vec::with_capacity(N);
        for k in 0..N {
            if k > 0 {
                self.expect(',')?;
            }
            out.push(self.product()?);
        }
        self.expect(close)?;
        Ok(out.try_into().unwrap_or_else(|_| unreachable!()))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.peek().clone() {
            Tok::Punct('(') => {
                self.bump();
                let a = self.expr()?;
                self.expect('*')?;
                let b = self.expr()?;
                self.expect(')')?;
                Ok(Expr::bin(BinOp::Star, a, b))
            }
            Tok::Punct('[') => {
                self.bump();
                let [a, b] = self.args::<2>(']')?;
                Ok(Expr::bin(BinOp::Bracket, a, b))
            }
            Tok::Punct('{') => {
                self.bump();
                let [a, b, c] = self.args::<3>('}')?;
                Ok(Expr::tern(TernOp::Brace, a, b, c))
            }
            Tok::Punct('<') => {
                self.bump();
                let [a, b, c] = self.args::<3>('>')?;
                Ok(Expr::tern(TernOp::Angle, a, b, c))
            }
            Tok::Ident(name) if name == "A" => {
                self.bump();
                let mut n = 1u32;
                if self.is_punct('^') {
                    self.bump();
                    match self.bump() {
                        Tok::Num(k) => {
                            n = u32::try_from(k).or_else(|_| self.error("twist power too large"))?
                        }
                        _ => return self.error("expected an integer power after `A^`"),
                    }
                }
                self.expect('(')?;
                let e = self.product()?;
                self.expect(')')?;
                Ok(Expr::twist(n, e))
            }
            Tok::Ident(name) if name == "as" && *self.peek_at(1) == Tok::Punct('(') => {
                self.bump();
                self.bump();
                let [a, b, c] = self.args::<3>(')')?;
                Ok(Expr::tern(TernOp::Assoc, a, b, c))
            }
            Tok::Ident(name) if name == "o" && *self.peek_at(1) == Tok::Punct('(') => {
                self.bump();
                self.bump();
                let [a, b] = self.args::<2>(')')?;
                Ok(Expr::bin(BinOp::Jordan, a, b))
            }
            Tok::Ident(name) => {
                if RESERVED.contains(&name.as_str()) {
                    return self.error(format!("`{name}` is reserved and cannot be a variable"));
                }
                self.bump();
                let idx = match self.vars.iter().position(|v| *v == name) {
                    Some(i) => i,
                    None => {
                        self.vars.push(name);
                        self.vars.len() - 1
                    }
                };
                self.occurrences.push((idx, pos));
                Ok(Expr::Var(idx))
            }
            other => self.error(format!(
                "expected an expression, found {}",
                describe(&other)
            )),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Num(n) => format!("`{n}`"),
        Tok::Punct(c) => format!("`{c}`"),
        Tok::End => "end of input".into(),
    }
}

/// Parses an identity and checks that every term is multilinear.
pub fn parse_identity(text: &str) -> Result<Identity, ParseError> {
    parse_named("identity", text)
}

pub fn parse_named(name: &str, text: &str) -> Result<Identity, ParseError> {
    let mut p = Parser {
        toks: tokenize(text)?,
        at: 0,
        vars: Vec::new(),
        occurrences: Vec::new(),
    };
    let raw = p.identity()?;
    let vars = p.vars;
    let mut terms = Vec::with_capacity(raw.len());
    for (n, t) in raw.into_iter().enumerate() {
        let mut seen = vec![false; vars.len()];
        for &(v, pos) in &t.occurrences {
            if seen[v] {
                return Err(ParseError {
                    pos,
                    message: format!(
                        "term {} is not multilinear: `{}` occurs more than once",
                        n + 1,
                        vars[v]
                    ),
                });
            }
            seen[v] = true;
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(ParseError {
                pos: t.pos,
                message: format!(
                    "term {} is not multilinear: `{}` does not occur in it",
                    n + 1,
                    vars[missing]
                ),
            });
        }
        let mut sign = SignPoly::zero();
        for mono in t.sign {
            match mono {
                RawMono::One => sign.add_one(),
                RawMono::Vars(pos, a, b) => {
                    let lookup = |name: &str| {
                        vars.iter().position(|v| v == name).ok_or_else(|| ParseError {
                            pos,
                            message: format!(
                                "sign exponent mentions `{name}`, which is not a variable of the identity"
                            ),
                        })
                    };
                    let ia = lookup(&a)?;
                    let ib = match b {
                        Some(b) => lookup(&b)?,
                        None => ia,
                    };
                    sign.add_product(ia, ib);
                }
            }
        }
        terms.push(Term {
            coeff: t.coeff,
            sign,
            expr: t.expr,
        });
    }
    Ok(Identity {
        name: name.to_string(),
        variables: vars,
        terms,
    })
}
