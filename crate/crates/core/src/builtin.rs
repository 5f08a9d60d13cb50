//! Built-in fixtures with their published structure constants.

use num_traits::Zero;

use crate::constructions::{self, BilinearForm, Preconditions};
use crate::error::ConstructionError;
use crate::graded::{int, rat, Element, EvenMap, Parity, Scalar, SuperSpace};
use crate::io::{AnyStructure, NamedStructure};
use crate::structures::{
    BinaryStructure, Convention, HomBinaryTernary, HomSuperalgebra, HomTripleSystem,
    TernaryStructure,
};

fn space(basis: &[(&str, Parity)]) -> SuperSpace {
    SuperSpace::new(basis.iter().map(|&(n, p)| (n, p))).expect("fixture basis")
}

fn vector(s: &SuperSpace, name: &str) -> usize {
    s.index_of(name).expect("fixture basis name")
}

fn binary_table(s: &SuperSpace, entries: &[(&str, &str, i64, &str)]) -> BinaryStructure {
    let mut t = BinaryStructure::zero(s.clone());
    for &(a, b, c, target) in entries {
        let key = [vector(s, a), vector(s, b)];
        let mut value = t.constant(key);
        value.add_coord(vector(s, target), int(c));
        t.set(key, value);
    }
    t
}

fn ternary_table(s: &SuperSpace, entries: &[(&str, &str, &str, i64, &str)]) -> TernaryStructure {
    let mut t = TernaryStructure::zero(s.clone());
    for &(a, b, c, coeff, target) in entries {
        let key = [vector(s, a), vector(s, b), vector(s, c)];
        let mut value = t.constant(key);
        value.add_coord(vector(s, target), int(coeff));
        t.set(key, value);
    }
    t
}

/// Basis `i, j` even, `k` odd.
pub fn maltsev_bol3_space() -> SuperSpace {
    space(&[("i", Parity::Even), ("j", Parity::Even), ("k", Parity::Odd)])
}

/// A three-dimensional Bol superalgebra whose bracket is a Maltsev superalgebra.
pub fn maltsev_bol3() -> HomBinaryTernary {
    let s = maltsev_bol3_space();
    let binary = binary_table(
        &s,
        &[
            ("i", "j", 1, "j"),
            ("i", "k", 1, "k"),
            ("j", "i", -1, "j"),
            ("k", "i", -1, "k"),
            ("k", "k", 1, "j"),
        ],
    );
    let ternary = ternary_table(
        &s,
        &[
            ("i", "j", "i", -1, "j"),
            ("i", "k", "i", -1, "k"),
            ("j", "i", "i", 1, "j"),
            ("k", "i", "i", 1, "k"),
        ],
    );
    HomBinaryTernary::new(binary, ternary, EvenMap::identity(&s)).expect("fixture")
}

/// Basis `i` even, `j, k` odd.
pub fn right_alt3_space() -> SuperSpace {
    space(&[("i", Parity::Even), ("j", Parity::Odd), ("k", Parity::Odd)])
}

/// The right alternative superalgebra `i*j = j*i = k`, `j*k = 2i`, `k*j = 4i`.
pub fn right_alt3() -> HomSuperalgebra {
    let s = right_alt3_space();
    let product = binary_table(
        &s,
        &[
            ("i", "j", 1, "k"),
            ("j", "i", 1, "k"),
            ("j", "k", 2, "i"),
            ("k", "j", 4, "i"),
        ],
    );
    HomSuperalgebra::untwisted(product).expect("fixture")
}

/// `β(i) = ai`, `β(j) = j + bk`, `β(k) = ak`, with `a ≠ 0`.
pub fn right_alt3_beta(a: Scalar, b: Scalar) -> Result<EvenMap, ConstructionError> {
    if a.is_zero() {
        return Err(ConstructionError::InvalidParameter(
            "the parameter a must be nonzero".into(),
        ));
    }
    let s = right_alt3_space();
    let j = &Element::basis(1) + &Element::basis_scaled(2, b);
    Ok(EvenMap::from_images(
        &s,
        &[
            ("i", Element::basis_scaled(0, a.clone())),
            ("j", j),
            ("k", Element::basis_scaled(2, a)),
        ],
    )?)
}

/// The Bol superalgebra on the basis of [`right_alt3`], as a literal table.
pub fn right_alt3_bol() -> HomBinaryTernary {
    right_alt3_hombol_table(&int(1), &EvenMap::identity(&right_alt3_space()))
}

/// The Yau twist of [`right_alt3_bol`] by `β(a, b)`, as a literal table.
pub fn right_alt3_hombol(a: Scalar, b: Scalar) -> Result<HomBinaryTernary, ConstructionError> {
    let beta = right_alt3_beta(a.clone(), b)?;
    Ok(right_alt3_hombol_table(&a, &beta))
}

fn right_alt3_hombol_table(a: &Scalar, twist: &EvenMap) -> HomBinaryTernary {
    let s = right_alt3_space();
    let a2 = a * a;
    let binary = binary_table(&s, &[("j", "k", 6, "i"), ("k", "j", 6, "i")]).scale(a);
    let ternary = ternary_table(
        &s,
        &[
            ("i", "j", "j", 4, "i"),
            ("j", "i", "j", -4, "i"),
            ("j", "j", "i", -8, "i"),
            ("j", "j", "k", -8, "k"),
            ("j", "k", "j", 4, "k"),
            ("k", "j", "j", 4, "k"),
        ],
    )
    .scale(&a2);
    HomBinaryTernary::new(binary, ternary, twist.clone()).expect("fixture")
}

/// [`right_alt3`] Yau-twisted by `β(a, 0)`: products `β(x*y)`, twist `β`.
pub fn right_alt3_twisted(a: Scalar) -> Result<HomSuperalgebra, ConstructionError> {
    let beta = right_alt3_beta(a, Scalar::zero())?;
    constructions::yau_twist_algebra(&right_alt3(), &beta, 1, Preconditions::Checked)
}

/// Basis `e` even, `f1, f2` odd.
pub fn jordan_form_space() -> SuperSpace {
    space(&[
        ("e", Parity::Even),
        ("f1", Parity::Odd),
        ("f2", Parity::Odd),
    ])
}

/// `⟨e|e⟩ = 1`, `⟨f1|f2⟩ = 1 = −⟨f2|f1⟩`.
pub fn jordan_form() -> BilinearForm {
    let s = jordan_form_space();
    let rows = vec![
        vec![int(1), int(0), int(0)],
        vec![int(0), int(0), int(1)],
        vec![int(0), int(-1), int(0)],
    ];
    BilinearForm::from_rows(&s, rows).expect("fixture form")
}

pub fn jordan_form_triple(lambda: Scalar) -> HomTripleSystem {
    constructions::bilinear_form_triple(&jordan_form(), &lambda).expect("fixture form")
}

/// A form-preserving even map: `e ↦ −e`, `f1 ↦ 2f1`, `f2 ↦ f2/2`.
pub fn jordan_form_isometry() -> EvenMap {
    let s = jordan_form_space();
    EvenMap::from_images(
        &s,
        &[
            ("e", Element::basis_scaled(0, int(-1))),
            ("f1", Element::basis_scaled(1, int(2))),
            ("f2", Element::basis_scaled(2, rat(1, 2))),
        ],
    )
    .expect("fixture map")
}

/// The associative superalgebra of 2×2 matrices with `e11, e22` even and
/// `e12, e21` odd.
pub fn gl11() -> HomSuperalgebra {
    let s = space(&[
        ("e11", Parity::Even),
        ("e22", Parity::Even),
        ("e12", Parity::Odd),
        ("e21", Parity::Odd),
    ]);
    // E_ab E_cd = δ_bc E_ad
    let idx = [(1, 1), (2, 2), (1, 2), (2, 1)];
    let product = BinaryStructure::from_fn(s.clone(), |[p, q]| {
        let ((a, b), (c, d)) = (idx[p], idx[q]);
        if b != c {
            return Element::zero();
        }
        let target = idx.iter().position(|&e| e == (a, d)).unwrap();
        Element::basis(target)
    });
    HomSuperalgebra::untwisted(product).expect("fixture")
}

/// Conjugation by `diag(1, c)`: `e12 ↦ e12/c`, `e21 ↦ c·e21`.
pub fn gl11_automorphism(c: Scalar) -> Result<EvenMap, ConstructionError> {
    if c.is_zero() {
        return Err(ConstructionError::InvalidParameter(
            "the parameter c must be nonzero".into(),
        ));
    }
    let a = gl11();
    Ok(EvenMap::from_images(
        a.space(),
        &[
            ("e11", Element::basis(0)),
            ("e22", Element::basis(1)),
            ("e12", Element::basis_scaled(2, c.recip())),
            ("e21", Element::basis_scaled(3, c)),
        ],
    )?)
}

/// Names accepted by [`builtin_example`], with a parameter hint.
pub const EXAMPLES: &[(&str, &str)] = &[
    ("maltsev_bol3", "3-dimensional Bol superalgebra"),
    (
        "right_alt3",
        "right alternative superalgebra (i even; j, k odd)",
    ),
    ("right_alt3_bol", "its Bol superalgebra"),
    (
        "right_alt3_hombol(a,b)",
        "Hom-Bol superalgebra twisted by beta(a,b), a != 0",
    ),
    (
        "right_alt3_twisted(a)",
        "right Hom-alternative superalgebra twisted by beta(a,0)",
    ),
    (
        "jordan_form_triple(lambda)",
        "Jordan supertriple system of a (1|2) bilinear form",
    ),
    ("gl11", "associative superalgebra of 2x2 matrices"),
];

fn parse_params(name: &str) -> Result<(&str, Vec<Scalar>), ConstructionError> {
    let Some(open) = name.find('(') else {
        return Ok((name, Vec::new()));
    };
    let Some(inner) = name[open + 1..].strip_suffix(')') else {
        return Err(ConstructionError::InvalidParameter(format!(
            "unbalanced parameter list in `{name}`"
        )));
    };
    let params = inner
        .split(',')
        .map(|p| {
            p.trim().parse::<Scalar>().map_err(|_| {
                ConstructionError::InvalidParameter(format!("`{}` is not a rational", p.trim()))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((name[..open].trim(), params))
}

fn expect_params(name: &str, params: &[Scalar], n: usize) -> Result<(), ConstructionError> {
    if params.len() != n {
        return Err(ConstructionError::InvalidParameter(format!(
            "`{name}` takes {n} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

/// Looks up a fixture such as `right_alt3_hombol(2,3)` or
/// `jordan_form_triple(-2)`. Parameterless fixtures also accept no
/// parentheses. Each fixture carries a sample even map under `"beta"`.
pub fn builtin_example(name: &str) -> Result<NamedStructure, ConstructionError> {
    let (base, params) = parse_params(name.trim())?;
    let named = |structure: AnyStructure, beta: EvenMap| {
        let mut n = NamedStructure::new(name.trim(), structure);
        n.maps.insert("beta".into(), beta);
        n
    };
    let n = match base {
        "maltsev_bol3" => {
            expect_params(base, &params, 0)?;
            let b = maltsev_bol3();
            let id = EvenMap::identity(b.space());
            named(AnyStructure::BinaryTernary(b), id)
        }
        "right_alt3" => {
            expect_params(base, &params, 0)?;
            named(
                AnyStructure::Algebra(right_alt3()),
                right_alt3_beta(int(2), int(0))?,
            )
        }
        "right_alt3_bol" => {
            expect_params(base, &params, 0)?;
            named(
                AnyStructure::BinaryTernary(right_alt3_bol()),
                right_alt3_beta(int(2), int(0))?,
            )
        }
        "right_alt3_hombol" => {
            expect_params(base, &params, 2)?;
            let b = right_alt3_hombol(params[0].clone(), params[1].clone())?;
            let beta = b.twist().clone();
            named(AnyStructure::BinaryTernary(b), beta)
        }
        "right_alt3_twisted" => {
            expect_params(base, &params, 1)?;
            let a = right_alt3_twisted(params[0].clone())?;
            let beta = a.twist().clone();
            named(AnyStructure::Algebra(a), beta)
        }
        "jordan_form_triple" => {
            expect_params(base, &params, 1)?;
            named(
                AnyStructure::Triple(jordan_form_triple(params[0].clone())),
                jordan_form_isometry(),
            )
        }
        "gl11" => {
            expect_params(base, &params, 0)?;
            named(AnyStructure::Algebra(gl11()), gl11_automorphism(int(2))?)
        }
        _ => return Err(ConstructionError::UnknownExample(name.to_string())),
    };
    Ok(n.with_convention(Convention::Unit))
}
