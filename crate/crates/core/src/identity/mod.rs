//! The identity language: sign polynomials, syntax trees, parser, checker
//! and the built-in suites.

mod ast;
mod check;
mod parser;
mod sign;
mod suites;

pub use ast::{BinOp, Expr, Identity, Symbol, Term, TernOp};
pub use check::{check, check_with_threads, configured_threads, evaluate, StructureBinding};
pub use parser::{parse_identity, parse_named};
pub use sign::SignPoly;
pub use suites::{check_suite, suite, SuiteName};
