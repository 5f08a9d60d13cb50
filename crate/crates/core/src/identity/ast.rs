use std::fmt;

use num_traits::{One, Signed};

use super::sign::SignPoly;
use crate::graded::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinOp {
    /// `(a*b)`
    Star,
    /// `[a,b]`
    Bracket,
    /// `o(a,b)`
    Jordan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TernOp {
    /// `{a,b,c}`
    Brace,
    /// `<a,b,c>`
    Angle,
    /// `as(a,b,c) = (a*b)*A(c) − A(a)*(b*c)`
    Assoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Var(usize),
    /// `A^n(e)`
    Twist(u32, Box<Expr>),
    Bin(BinOp, Box<Expr>, Box<Expr>),
    Tern(TernOp, Box<[Expr; 3]>),
}

impl Expr {
    pub fn bin(op: BinOp, a: Expr, b: Expr) -> Expr {
        Expr::Bin(op, Box::new(a), Box::new(b))
    }

    pub fn tern(op: TernOp, a: Expr, b: Expr, c: Expr) -> Expr {
        Expr::Tern(op, Box::new([a, b, c]))
    }

    pub fn twist(n: u32, e: Expr) -> Expr {
        Expr::Twist(n, Box::new(e))
    }

    /// Appends variable occurrences in reading order.
    pub fn collect_vars(&self, out: &mut Vec<usize>) {
        match self {
            Expr::Var(v) => out.push(*v),
            Expr::Twist(_, e) => e.collect_vars(out),
            Expr::Bin(_, a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Expr::Tern(_, args) => args.iter().for_each(|a| a.collect_vars(out)),
        }
    }

    /// Highest power of the twist this expression needs.
    pub fn max_twist_power(&self) -> u32 {
        match self {
            Expr::Var(_) => 0,
            Expr::Twist(n, e) => (*n).max(e.max_twist_power()),
            Expr::Bin(_, a, b) => a.max_twist_power().max(b.max_twist_power()),
            Expr::Tern(op, args) => {
                let inner = args.iter().map(Expr::max_twist_power).max().unwrap_or(0);
                if *op == TernOp::Assoc {
                    inner.max(1)
                } else {
                    inner
                }
            }
        }
    }

    /// Calls `f` on each operation symbol used.
    pub fn visit_symbols(&self, f: &mut impl FnMut(Symbol)) {
        match self {
            Expr::Var(_) => {}
            Expr::Twist(_, e) => {
                f(Symbol::Twist);
                e.visit_symbols(f);
            }
            Expr::Bin(op, a, b) => {
                f(Symbol::Bin(*op));
                a.visit_symbols(f);
                b.visit_symbols(f);
            }
            Expr::Tern(op, args) => {
                match op {
                    TernOp::Assoc => {
                        f(Symbol::Bin(BinOp::Star));
                        f(Symbol::Twist);
                    }
                    other => f(Symbol::Tern(*other)),
                }
                args.iter().for_each(|a| a.visit_symbols(f));
            }
        }
    }

    fn write(&self, names: &[String], out: &mut String) {
        match self {
            Expr::Var(v) => out.push_str(&names[*v]),
            Expr::Twist(n, e) => {
                if *n == 1 {
                    out.push_str("A(");
                } else {
                    out.push_str(&format!("A^{n}("));
                }
                e.write(names, out);
                out.push(')');
            }
            Expr::Bin(op, a, b) => {
                let (open, sep, close) = match op {
                    BinOp::Star => ("(", "*", ")"),
                    BinOp::Bracket => ("[", ",", "]"),
                    BinOp::Jordan => ("o(", ",", ")"),
                };
                out.push_str(open);
                a.write(names, out);
                out.push_str(sep);
                b.write(names, out);
                out.push_str(close);
            }
            Expr::Tern(op, args) => {
                let (open, close) = match op {
                    TernOp::Brace => ("{", "}"),
                    TernOp::Angle => ("<", ">"),
                    TernOp::Assoc => ("as(", ")"),
                };
                out.push_str(open);
                for (n, a) in args.iter().enumerate() {
                    if n > 0 {
                        out.push(',');
                    }
                    a.write(names, out);
                }
                out.push_str(close);
            }
        }
    }
}

/// Operation symbols a binding must supply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    Bin(BinOp),
    Tern(TernOp),
    Twist,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Symbol::Bin(BinOp::Star) => "*",
            Symbol::Bin(BinOp::Bracket) => "[,]",
            Symbol::Bin(BinOp::Jordan) => "o",
            Symbol::Tern(TernOp::Brace) => "{,,}",
            Symbol::Tern(TernOp::Angle) => "<,,>",
            Symbol::Tern(TernOp::Assoc) => "as",
            Symbol::Twist => "A",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Scalar,
    pub sign: SignPoly,
    pub expr: Expr,
}

/// `Σ coeff · (−1)^{sign} · expr = 0`, multilinear in `variables`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Identity {
    pub name: String,
    pub variables: Vec<String>,
    pub terms: Vec<Term>,
}

impl Identity {
    pub fn arity(&self) -> usize {
        self.variables.len()
    }

    pub fn max_twist_power(&self) -> u32 {
        self.terms
            .iter()
            .map(|t| t.expr.max_twist_power())
            .max()
            .unwrap_or(0)
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out = Vec::new();
        for t in &self.terms {
            t.expr.visit_symbols(&mut |s| {
                if !out.contains(&s) {
                    out.push(s);
                }
            });
        }
        out
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Identity {
        self.name = name.into();
        self
    }

    /// Source text in the identity language; parses back to `self`.
    pub fn to_dsl(&self) -> String {
        let mut out = String::new();
        for (n, t) in self.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            if n == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let abs = t.coeff.abs();
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push(' ');
            }
            if let Some(s) = t.sign.to_dsl(&self.variables) {
                out.push_str("(-1)^{");
                out.push_str(&s);
                out.push_str("} ");
            }
            t.expr.write(&self.variables, &mut out);
        }
        if self.terms.is_empty() {
            out.push('0');
        }
        out.push_str(" = 0");
        out
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_dsl())
    }
}
