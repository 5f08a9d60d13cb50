//! Named lists of identities.
//!
//! Cyclic sums are written out term by term. Identities that mix derived
//! products (`[,]`, `o`) with plain products carry coefficients that depend
//! on the [`Convention`], so suites are produced per convention.

use std::fmt;
use std::str::FromStr;

use super::ast::Identity;
use super::check::{check, StructureBinding};
use super::parser::parse_named;
use crate::error::CheckError;
use crate::report::SuiteReport;
use crate::structures::Convention;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuiteName {
    RightAlt,
    RightHomAlt,
    HomAlt,
    Supercommutative,
    Jordan,
    HomJordan,
    Bol,
    HomBol,
    LieTriple,
    HomLieTriple,
    JordanTriple,
    HomJordanTriple,
    BracketAssociator,
    HomBracketAssociator,
    HomProductAssociator,
    TernaryClosedForm,
    HomJordanAssociator,
    HomTernaryClosedForm,
}

impl SuiteName {
    pub const ALL: [SuiteName; 18] = [
        SuiteName::RightAlt,
        SuiteName::RightHomAlt,
        SuiteName::HomAlt,
        SuiteName::Supercommutative,
        SuiteName::Jordan,
        SuiteName::HomJordan,
        SuiteName::Bol,
        SuiteName::HomBol,
        SuiteName::LieTriple,
        SuiteName::HomLieTriple,
        SuiteName::JordanTriple,
        SuiteName::HomJordanTriple,
        SuiteName::BracketAssociator,
        SuiteName::HomBracketAssociator,
        SuiteName::HomProductAssociator,
        SuiteName::TernaryClosedForm,
        SuiteName::HomJordanAssociator,
        SuiteName::HomTernaryClosedForm,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::RightAlt => "RIGHT_ALT",
            SuiteName::RightHomAlt => "RIGHT_HOM_ALT",
            SuiteName::HomAlt => "HOM_ALT",
            SuiteName::Supercommutative => "SUPERCOMMUTATIVE",
            SuiteName::Jordan => "JORDAN",
            SuiteName::HomJordan => "HOM_JORDAN",
            SuiteName::Bol => "BOL",
            SuiteName::HomBol => "HOM_BOL",
            SuiteName::LieTriple => "LIE_TRIPLE",
            SuiteName::HomLieTriple => "HOM_LIE_TRIPLE",
            SuiteName::JordanTriple => "JORDAN_TRIPLE",
            SuiteName::HomJordanTriple => "HOM_JORDAN_TRIPLE",
            SuiteName::BracketAssociator => "BRACKET_ASSOCIATOR",
            SuiteName::HomBracketAssociator => "HOM_BRACKET_ASSOCIATOR",
            SuiteName::HomProductAssociator => "HOM_PRODUCT_ASSOCIATOR",
            SuiteName::TernaryClosedForm => "TERNARY_CLOSED_FORM",
            SuiteName::HomJordanAssociator => "HOM_JORDAN_ASSOCIATOR",
            SuiteName::HomTernaryClosedForm => "HOM_TERNARY_CLOSED_FORM",
        }
    }

    /// Suites stated for ordinary (untwisted) structures; the checker binds
    /// the twist to the identity for these.
    pub fn is_untwisted(self) -> bool {
        matches!(
            self,
            SuiteName::RightAlt
                | SuiteName::Jordan
                | SuiteName::Bol
                | SuiteName::LieTriple
                | SuiteName::JordanTriple
                | SuiteName::BracketAssociator
                | SuiteName::TernaryClosedForm
        )
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteName {
    type Err = CheckError;

    fn from_str(s: &str) -> Result<SuiteName, CheckError> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| CheckError::UnknownSuite(s.to_string()))
    }
}

// Sign exponent shorthands used below.
// (x+y)(u+v)
const XY_UV: &str = "x.u+x.v+y.u+y.v";

const RIGHT_ALT: &str = "as(x,y,z) + (-1)^{y.z} as(x,z,y) = 0";
const RIGHT_ALT_EXPANDED: &str =
    "A(x)*(y*z) + (-1)^{y.z} A(x)*(z*y) - (x*y)*A(z) - (-1)^{y.z} (x*z)*A(y) = 0";
const LEFT_ALT: &str = "as(x,y,z) + (-1)^{x.y} as(y,x,z) = 0";
const SUPERCOMMUTATIVE: &str = "x*y - (-1)^{x.y} y*x = 0";

const SKEW_BINARY: &str = "[x,y] + (-1)^{x.y} [y,x] = 0";
const SKEW_TERNARY: &str = "{x,y,z} + (-1)^{x.y} {y,x,z} = 0";
const CYCLIC_TERNARY: &str = "{x,y,z} + (-1)^{x.y+x.z} {y,z,x} + (-1)^{z.x+z.y} {z,x,y} = 0";

const OUTER_SUPERSYMMETRY: &str = "<x,y,z> - (-1)^{x.y+x.z+y.z} <z,y,x> = 0";

fn id(name: &str, text: &str) -> Identity {
    parse_named(name, text).unwrap_or_else(|e| panic!("built-in identity {name}: {e}"))
}

fn compatibility_axiom(twisted: bool) -> String {
    let (a, a2) = if twisted { ("A", "A^2") } else { ("", "") };
    let w = |p: &str, v: &str| {
        if p.is_empty() {
            v.to_string()
        } else {
            format!("{p}({v})")
        }
    };
    format!(
        "{{{ax},{ay},[u,v]}} - [{{x,y,u}},{a2v}] - (-1)^{{u.x+u.y}} [{a2u},{{x,y,v}}] \
         - (-1)^{{{XY_UV}}} {{{au},{av},[x,y]}} + (-1)^{{{XY_UV}}} [[{au},{av}],[{ax},{ay}]] = 0",
        ax = w(a, "x"),
        ay = w(a, "y"),
        au = w(a, "u"),
        av = w(a, "v"),
        a2u = w(a2, "u"),
        a2v = w(a2, "v"),
    )
}

/// The derivation axiom with `t` applied to the outer arguments.
fn derivation_axiom(t: &str) -> String {
    let w = |v: &str| {
        if t.is_empty() {
            v.to_string()
        } else {
            format!("{t}({v})")
        }
    };
    format!(
        "{{{tx},{ty},{{u,v,w}}}} - {{{{x,y,u}},{tv},{tw}}} - (-1)^{{u.x+u.y}} {{{tu},{{x,y,v}},{tw}}} \
         - (-1)^{{{XY_UV}}} {{{tu},{tv},{{x,y,w}}}} = 0",
        tx = w("x"),
        ty = w("y"),
        tu = w("u"),
        tv = w("v"),
        tw = w("w"),
    )
}

fn jordan_triple_identity(twisted: bool) -> String {
    let w = |v: &str| {
        if twisted {
            format!("A({v})")
        } else {
            v.to_string()
        }
    };
    format!(
        "<{x},{y},<u,v,w>> - <<x,y,u>,{v},{wv}> - (-1)^{{{XY_UV}}} <{u},{v},<x,y,w>> \
         + (-1)^{{{XY_UV}}} <{u},<v,x,y>,{wv}> = 0",
        x = w("x"),
        y = w("y"),
        u = w("u"),
        v = w("v"),
        wv = w("w"),
    )
}

/// Coefficient text for a rational written in the identity language.
fn c(k: i64) -> String {
    k.to_string()
}

/// The identities of suite `name`, with convention-dependent coefficients
/// resolved for `conv`.
pub fn suite(name: SuiteName, conv: Convention) -> Vec<Identity> {
    let half = conv.is_half();
    match name {
        SuiteName::RightAlt | SuiteName::RightHomAlt => vec![
            id("right_superalternativity", RIGHT_ALT),
            id("right_superalternativity_expanded", RIGHT_ALT_EXPANDED),
        ],
        SuiteName::HomAlt => vec![
            id("right_superalternativity", RIGHT_ALT),
            id("left_superalternativity", LEFT_ALT),
        ],
        SuiteName::Supercommutative => vec![id("supercommutativity", SUPERCOMMUTATIVE)],
        SuiteName::Jordan => vec![
            id("supercommutativity", SUPERCOMMUTATIVE),
            id(
                "jordan_superidentity",
                "(-1)^{z.x+z.w} as(x*y,w,z) + (-1)^{x.y+x.w} as(y*z,w,x) \
                 + (-1)^{y.z+y.w} as(z*x,w,y) = 0",
            ),
        ],
        SuiteName::HomJordan => vec![
            id("supercommutativity", SUPERCOMMUTATIVE),
            id(
                "hom_jordan_superidentity",
                "(-1)^{t.x+t.z} as(x*y,A(z),A(t)) + (-1)^{x.y+x.z} as(y*t,A(z),A(x)) \
                 + (-1)^{y.t+y.z} as(t*x,A(z),A(y)) = 0",
            ),
            id(
                "hom_jordan_superidentity_expanded",
                "(-1)^{x.y+x.z+y.t+y.z} (A(t)*A(z))*A(y*x) \
                 - (-1)^{x.y+x.z+y.t+y.z} A^2(t)*(A(z)*(y*x)) \
                 + (-1)^{y.t+y.z+t.x+t.z} (A(x)*A(z))*A(t*y) \
                 - (-1)^{y.t+y.z+t.x+t.z} A^2(x)*(A(z)*(t*y)) \
                 + (-1)^{t.x+t.z+x.y+x.z} (A(y)*A(z))*A(x*t) \
                 - (-1)^{t.x+t.z+x.y+x.z} A^2(y)*(A(z)*(x*t)) = 0",
            ),
        ],
        SuiteName::Bol => vec![
            id("binary_superskew", SKEW_BINARY),
            id("ternary_superskew", SKEW_TERNARY),
            id("ternary_cyclic", CYCLIC_TERNARY),
            id("ternary_binary_compatibility", &compatibility_axiom(false)),
            id("ternary_derivation", &derivation_axiom("")),
        ],
        SuiteName::HomBol => vec![
            id("twist_preserves_binary", "A([x,y]) - [A(x),A(y)] = 0"),
            id(
                "twist_preserves_ternary",
                "A({x,y,z}) - {A(x),A(y),A(z)} = 0",
            ),
            id("binary_superskew", SKEW_BINARY),
            id("ternary_superskew", SKEW_TERNARY),
            id("ternary_cyclic", CYCLIC_TERNARY),
            id("ternary_binary_compatibility", &compatibility_axiom(true)),
            id("ternary_derivation", &derivation_axiom("A^2")),
        ],
        SuiteName::LieTriple => vec![
            id("ternary_superskew", SKEW_TERNARY),
            id("ternary_cyclic", CYCLIC_TERNARY),
            id("ternary_derivation", &derivation_axiom("")),
        ],
        SuiteName::HomLieTriple => vec![
            id("ternary_superskew", SKEW_TERNARY),
            id("ternary_cyclic", CYCLIC_TERNARY),
            id("ternary_derivation", &derivation_axiom("A")),
        ],
        SuiteName::JordanTriple => vec![
            id("outer_supersymmetry", OUTER_SUPERSYMMETRY),
            id(
                "jordan_supertriple_identity",
                &jordan_triple_identity(false),
            ),
        ],
        SuiteName::HomJordanTriple => vec![
            id("outer_supersymmetry", OUTER_SUPERSYMMETRY),
            id(
                "hom_jordan_supertriple_identity",
                &jordan_triple_identity(true),
            ),
        ],
        SuiteName::BracketAssociator => vec![id(
            "bracket_associator_identity",
            "as([w,x],y,z) - [w,as(x,y,z)] - (-1)^{x.y+x.z} [as(w,y,z),x] \
             + as(w,x,[y,z]) - (-1)^{w.x} as(x,w,[y,z]) = 0",
        )],
        SuiteName::HomBracketAssociator => vec![id(
            "hom_bracket_associator_identity",
            "as([w,x],A(y),A(z)) - [A^2(w),as(x,y,z)] - (-1)^{x.y+x.z} [as(w,y,z),A^2(x)] \
             + as(A(w),A(x),[y,z]) - (-1)^{w.x} as(A(x),A(w),[y,z]) = 0",
        )],
        SuiteName::HomProductAssociator => {
            // the bracket term scales with the convention, the others do not
            let k = if half { c(2) } else { c(1) };
            vec![id(
                "product_associator_identity",
                &format!(
                    "as(w*x,A(y),A(z)) - (-1)^{{x.y+x.z}} as(w,y,z)*A^2(x) \
                     - A^2(w)*as(x,y,z) + {k} as(A(w),A(x),[y,z]) = 0"
                ),
            )]
        }
        SuiteName::TernaryClosedForm => {
            let k = if half { c(1) } else { c(4) };
            vec![id(
                "ternary_bracket_closed_forms",
                &format!(
                    "2 (-1)^{{x.y+x.z}} o(o(y,z),x) - 2 (-1)^{{x.y+x.z}} o(y,o(z,x)) \
                     - 2 [[x,y],z] + {k} (-1)^{{z.x+z.y}} as(z,x,y) = 0"
                ),
            )]
        }
        SuiteName::HomJordanAssociator => {
            let k = if half { c(1) } else { c(2) };
            vec![id(
                "jordan_product_associator_identity",
                &format!(
                    "as(A(z),A(t),o(x,y)) - {k} (-1)^{{x.y}} as(z,t,y)*A^2(x) \
                     + {k} (-1)^{{t.x}} as(z,x,t)*A^2(y) - as(A(z),[t,x],A(y)) \
                     - (-1)^{{x.y}} as(A(z),[t,y],A(x)) = 0"
                ),
            )]
        }
        SuiteName::HomTernaryClosedForm => {
            let k = if half { c(1) } else { c(4) };
            vec![id(
                "hom_ternary_bracket_closed_forms",
                &format!(
                    "o(o(x,y),A(z)) + o(A(x),o(y,z)) - (-1)^{{x.y}} o(A(y),o(x,z)) \
                     - (-1)^{{x.y}} o(o(y,x),A(z)) - (-1)^{{x.y}} o(A(y),o(x,z)) \
                     + o(A(x),o(y,z)) - 2 [[x,y],A(z)] + {k} (-1)^{{z.x+z.y}} as(z,x,y) = 0"
                ),
            )]
        }
    }
}

/// Runs every identity of the suite. Untwisted suites ignore the binding's twist.
pub fn check_suite(binding: &StructureBinding, name: SuiteName) -> Result<SuiteReport, CheckError> {
    let untwisted;
    let binding = if name.is_untwisted() {
        untwisted = binding.untwisted();
        &untwisted
    } else {
        binding
    };
    let results = suite(name, binding.convention())
        .iter()
        .map(|id| check(binding, id))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SuiteReport::new(name.as_str(), results))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_parses_under_both_conventions() {
        for name in SuiteName::ALL {
            for conv in [Convention::Unit, Convention::Half] {
                assert!(!suite(name, conv).is_empty(), "{name}");
            }
        }
    }

    #[test]
    fn bol_has_five_identities() {
        assert_eq!(suite(SuiteName::Bol, Convention::Unit).len(), 5);
    }

    #[test]
    fn compatibility_axiom_uses_squared_twist() {
        let axiom = suite(SuiteName::HomBol, Convention::Unit)
            .into_iter()
            .find(|i| i.name == "ternary_binary_compatibility")
            .unwrap();
        assert_eq!(axiom.max_twist_power(), 2);
        assert!(axiom.to_dsl().starts_with("{A(x),A(y),[u,v]}"));
    }

    #[test]
    fn right_alt_is_right_hom_alt() {
        assert_eq!(
            suite(SuiteName::RightAlt, Convention::Unit),
            suite(SuiteName::RightHomAlt, Convention::Unit)
        );
        assert!(SuiteName::RightAlt.is_untwisted());
        assert!(!SuiteName::RightHomAlt.is_untwisted());
    }

    #[test]
    fn names_round_trip() {
        for name in SuiteName::ALL {
            assert_eq!(name.as_str().parse::<SuiteName>().unwrap(), name);
        }
        assert!("NOPE".parse::<SuiteName>().is_err());
    }
}
