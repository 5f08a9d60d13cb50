//! Structure-producing constructions: derived algebras, Bol and triple
//! structures, Yau twists and derived Hom-structures.

use num_traits::{One, Zero};

use crate::error::ConstructionError;
use crate::graded::{koszul_sign, rat, Element, EvenMap, Matrix, Parity, Scalar, SuperSpace};
use crate::identity::{check_suite, StructureBinding, SuiteName};
use crate::report::SuiteReport;
use crate::structures::{
    is_even_self_morphism, is_multiplicative, BinaryStructure, Convention, GradedStructure,
    HomBinaryTernary, HomSuperalgebra, HomTripleSystem, TernaryStructure,
};

/// Whether constructions verify their hypotheses before building.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Preconditions {
    #[default]
    Checked,
    Unchecked,
}

impl Preconditions {
    fn enabled(self) -> bool {
        self == Preconditions::Checked
    }
}

fn require(stage: &str, report: SuiteReport) -> Result<(), ConstructionError> {
    if report.passed() {
        Ok(())
    } else {
        Err(ConstructionError::Precondition {
            stage: stage.to_string(),
            report,
        })
    }
}

fn require_suite(
    stage: &str,
    binding: &StructureBinding,
    suite: SuiteName,
) -> Result<(), ConstructionError> {
    require(stage, check_suite(binding, suite)?)
}

fn require_multiplicative(stage: &str, s: &impl GradedStructure) -> Result<(), ConstructionError> {
    require(
        stage,
        SuiteReport::new("MULTIPLICATIVE", vec![is_multiplicative(s)]),
    )
}

fn require_self_morphism(
    stage: &str,
    s: &impl GradedStructure,
    f: &EvenMap,
) -> Result<(), ConstructionError> {
    require(
        stage,
        SuiteReport::new("SELF_MORPHISM", vec![is_even_self_morphism(s, f.matrix())]),
    )
}

fn parity(space: &SuperSpace, i: usize) -> Parity {
    space.parity(i)
}

fn sign(p: Parity) -> Scalar {
    if p.is_odd() {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

/// The supercommutator algebra `(A, [·,·], α)`.
pub fn minus_algebra(a: &HomSuperalgebra, conv: Convention) -> HomSuperalgebra {
    graded_symmetrization(a, conv, -1)
}

/// The plus algebra `(A, ∘, α)`.
pub fn plus_algebra(a: &HomSuperalgebra, conv: Convention) -> HomSuperalgebra {
    graded_symmetrization(a, conv, 1)
}

fn graded_symmetrization(a: &HomSuperalgebra, conv: Convention, s: i64) -> HomSuperalgebra {
    let space = a.space().clone();
    let k = conv.factor();
    let p = a.product();
    let product = BinaryStructure::from_fn(space.clone(), |[i, j]| {
        let mut out = p.constant([i, j]);
        let c = koszul_sign(parity(&space, i), parity(&space, j)) * rat(s, 1);
        out.add_scaled(&c, &p.constant([j, i]));
        out.scale(&k)
    });
    HomSuperalgebra::new(product, a.twist().clone()).expect("grading is inherited")
}

/// `[x,y,z] = 2(x∘(y∘z) − (−1)^{x̄ȳ} y∘(x∘z))` for a supercommutative product.
pub fn jordan_lts_bracket(
    j: &HomSuperalgebra,
    pre: Preconditions,
) -> Result<TernaryStructure, ConstructionError> {
    if pre.enabled() {
        let b = StructureBinding::for_algebra(j, Convention::Unit);
        require_suite("supercommutative", &b, SuiteName::Supercommutative)?;
    }
    let space = j.space().clone();
    let two = rat(2, 1);
    Ok(TernaryStructure::from_fn(space.clone(), |[x, y, z]| {
        let [ex, ey, ez] = [x, y, z].map(Element::basis);
        let mut out = j.mul(&ex, &j.mul(&ey, &ez));
        let s = -koszul_sign(parity(&space, x), parity(&space, y));
        out.add_scaled(&s, &j.mul(&ey, &j.mul(&ex, &ez)));
        out.scale(&two)
    }))
}

/// `(x*y)*α(z) − α(x)*(y*z)` on basis vectors.
fn associator(a: &HomSuperalgebra, x: usize, y: usize, z: usize) -> Element {
    let [ex, ey, ez] = [x, y, z].map(Element::basis);
    let alpha = a.twist();
    let left = a.mul(&a.mul(&ex, &ey), &alpha.apply(&ez));
    let right = a.mul(&alpha.apply(&ex), &a.mul(&ey, &ez));
    &left - &right
}

/// Bol superalgebra of a right alternative superalgebra: the supercommutator
/// and `{x,y,z} = (−1)^{x̄(ȳ+z̄)} as₊(y,z,x)`, the associator of the plus algebra.
pub fn bol_from_right_alternative(
    a: &HomSuperalgebra,
    conv: Convention,
    pre: Preconditions,
) -> Result<HomBinaryTernary, ConstructionError> {
    if pre.enabled() {
        let b = StructureBinding::for_algebra(a, conv);
        require_suite("right alternative", &b, SuiteName::RightAlt)?;
    }
    let untwisted = a.with_twist(EvenMap::identity(a.space()))?;
    let plus = plus_algebra(&untwisted, conv);
    let minus = minus_algebra(&untwisted, conv);
    let space = a.space().clone();
    let ternary = TernaryStructure::from_fn(space.clone(), |[x, y, z]| {
        let p = parity(&space, x).times(parity(&space, y) + parity(&space, z));
        associator(&plus, y, z, x).scale(&sign(p))
    });
    Ok(HomBinaryTernary::new(
        minus.product().clone(),
        ternary,
        EvenMap::identity(&space),
    )?)
}

/// `⟨x,y,z⟩ = (xy)α(z) + α(x)(yz) − (−1)^{x̄ȳ} α(y)(xz)` with twist `α²`, where
/// juxtaposition is the product of `j` (already the Jordan product).
pub fn hom_jordan_triple(
    j: &HomSuperalgebra,
    pre: Preconditions,
) -> Result<HomTripleSystem, ConstructionError> {
    if pre.enabled() {
        require_multiplicative("multiplicative", j)?;
        let b = StructureBinding::for_algebra(j, Convention::Unit);
        require_suite("Hom-Jordan", &b, SuiteName::HomJordan)?;
    }
    let space = j.space().clone();
    let alpha = j.twist();
    let product = TernaryStructure::from_fn(space.clone(), |[x, y, z]| {
        let [ex, ey, ez] = [x, y, z].map(Element::basis);
        let mut out = j.mul(&j.mul(&ex, &ey), &alpha.apply(&ez));
        out += &j.mul(&alpha.apply(&ex), &j.mul(&ey, &ez));
        let s = -koszul_sign(parity(&space, x), parity(&space, y));
        out.add_scaled(&s, &j.mul(&alpha.apply(&ey), &j.mul(&ex, &ez)));
        out
    });
    Ok(HomTripleSystem::new(product, alpha.pow(2))?)
}

/// `[x,y,z] = ⟨x,y,z⟩ − (−1)^{x̄ȳ} ⟨y,x,z⟩`, same twist.
pub fn lie_triple_from_jordan_triple(
    v: &HomTripleSystem,
    pre: Preconditions,
) -> Result<HomTripleSystem, ConstructionError> {
    if pre.enabled() {
        let b = StructureBinding::for_triple(v);
        require_suite("Hom-Jordan supertriple", &b, SuiteName::HomJordanTriple)?;
    }
    let space = v.space().clone();
    let t = v.product();
    let product = TernaryStructure::from_fn(space.clone(), |[x, y, z]| {
        let mut out = t.constant([x, y, z]);
        let s = -koszul_sign(parity(&space, x), parity(&space, y));
        out.add_scaled(&s, &t.constant([y, x, z]));
        out
    });
    Ok(HomTripleSystem::new(product, v.twist().clone())?)
}

/// Every intermediate structure of [`hom_bol_pipeline`].
#[derive(Clone, Debug)]
pub struct HomBolPipeline {
    /// `(A, ∘, α)`
    pub plus: HomSuperalgebra,
    /// `(A, ⟨·,·,·⟩, α²)`
    pub jordan_triple: HomTripleSystem,
    /// `(A, [·,·,·], α²)`
    pub lie_triple: HomTripleSystem,
    /// `(A, [·,·], ½[·,·,·], α²)`
    pub bol: HomBinaryTernary,
}

/// Hom-Bol structure of a multiplicative right Hom-alternative superalgebra:
/// plus algebra, Hom-Jordan supertriple, Hom-Lie supertriple, then
/// `{x,y,z} = ½[x,y,z]` beside the supercommutator, with twist `α²`.
pub fn hom_bol_pipeline(
    a: &HomSuperalgebra,
    conv: Convention,
    pre: Preconditions,
) -> Result<HomBolPipeline, ConstructionError> {
    if pre.enabled() {
        require_multiplicative("multiplicative", a)?;
        let b = StructureBinding::for_algebra(a, conv);
        require_suite("right Hom-alternative", &b, SuiteName::RightHomAlt)?;
    }
    let plus = plus_algebra(a, conv);
    let jordan_triple = hom_jordan_triple(&plus, pre)?;
    let lie_triple = lie_triple_from_jordan_triple(&jordan_triple, pre)?;
    let ternary = lie_triple.product().scale(&rat(1, 2));
    let bol = HomBinaryTernary::new(
        minus_algebra(a, conv).product().clone(),
        ternary,
        lie_triple.twist().clone(),
    )?;
    Ok(HomBolPipeline {
        plus,
        jordan_triple,
        lie_triple,
        bol,
    })
}

pub fn hom_bol_from_right_hom_alternative(
    a: &HomSuperalgebra,
    conv: Convention,
    pre: Preconditions,
) -> Result<HomBinaryTernary, ConstructionError> {
    Ok(hom_bol_pipeline(a, conv, pre)?.bol)
}

fn positive(n: u32) -> Result<(), ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::InvalidParameter(
            "the twist exponent must be positive".into(),
        ));
    }
    Ok(())
}

/// Products `βⁿ(x*y)`, twist `βⁿα`.
pub fn yau_twist_algebra(
    a: &HomSuperalgebra,
    beta: &EvenMap,
    n: u32,
    pre: Preconditions,
) -> Result<HomSuperalgebra, ConstructionError> {
    positive(n)?;
    if pre.enabled() {
        require_self_morphism("self-morphism", a, beta)?;
    }
    let bn = beta.pow(n);
    Ok(HomSuperalgebra::new(
        a.product().compose_map(bn.matrix()),
        bn.then_after(a.twist()),
    )?)
}

/// `[x,y]_{βⁿ} = βⁿ[x,y]`, `{x,y,z}_{βⁿ} = β²ⁿ{x,y,z}`, twist `βⁿα`.
pub fn yau_twist_bol(
    b: &HomBinaryTernary,
    beta: &EvenMap,
    n: u32,
    pre: Preconditions,
) -> Result<HomBinaryTernary, ConstructionError> {
    positive(n)?;
    if pre.enabled() {
        require_self_morphism("self-morphism", b, beta)?;
    }
    let bn = beta.pow(n);
    let b2n = beta.pow(2 * n);
    Ok(HomBinaryTernary::new(
        b.binary().compose_map(bn.matrix()),
        b.ternary().compose_map(b2n.matrix()),
        bn.then_after(b.twist()),
    )?)
}

/// `⟨x,y,z⟩_{βⁿ} = βⁿ⟨x,y,z⟩`, twist `βⁿα`.
pub fn yau_twist_triple(
    v: &HomTripleSystem,
    beta: &EvenMap,
    n: u32,
    pre: Preconditions,
) -> Result<HomTripleSystem, ConstructionError> {
    positive(n)?;
    if pre.enabled() {
        require_self_morphism("self-morphism", v, beta)?;
    }
    let bn = beta.pow(n);
    Ok(HomTripleSystem::new(
        v.product().compose_map(bn.matrix()),
        bn.then_after(v.twist()),
    )?)
}

/// Products `α^{2ⁿ−1}[x,y]` and `α^{2ⁿ⁺¹−2}{x,y,z}`, twist `α^{2ⁿ}`.
pub fn nth_derived(b: &HomBinaryTernary, n: u32) -> Result<HomBinaryTernary, ConstructionError> {
    if n > 16 {
        return Err(ConstructionError::InvalidParameter(format!(
            "derived level {n} is too large"
        )));
    }
    let alpha = b.twist();
    let e = 1u32 << n;
    Ok(HomBinaryTernary::new(
        b.binary().compose_map(alpha.pow(e - 1).matrix()),
        b.ternary().compose_map(alpha.pow(2 * e - 2).matrix()),
        alpha.pow(e),
    )?)
}

/// A supersymmetric, even bilinear form `⟨·|·⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    space: SuperSpace,
    /// entry `(i, j)` is `⟨bᵢ|bⱼ⟩`
    values: Matrix,
}

impl BilinearForm {
    /// Rejects forms that pair vectors of different parity or are not
    /// supersymmetric, `⟨x|y⟩ = (−1)^{x̄ȳ}⟨y|x⟩`.
    pub fn new(space: &SuperSpace, values: Matrix) -> Result<BilinearForm, ConstructionError> {
        if values.dim() != space.dim() {
            return Err(ConstructionError::Form(format!(
                "expected a {0}x{0} matrix",
                space.dim()
            )));
        }
        for i in 0..space.dim() {
            for j in 0..space.dim() {
                let (pi, pj) = (space.parity(i), space.parity(j));
                let v = values.get(i, j);
                if pi != pj && !v.is_zero() {
                    return Err(ConstructionError::Form(format!(
                        "<{}|{}> pairs vectors of different parity",
                        space.name(i),
                        space.name(j)
                    )));
                }
                if *v != koszul_sign(pi, pj) * values.get(j, i) {
                    return Err(ConstructionError::Form(format!(
                        "not supersymmetric at <{}|{}>",
                        space.name(i),
                        space.name(j)
                    )));
                }
            }
        }
        Ok(BilinearForm {
            space: space.clone(),
            values,
        })
    }

    pub fn from_rows(
        space: &SuperSpace,
        rows: Vec<Vec<Scalar>>,
    ) -> Result<BilinearForm, ConstructionError> {
        BilinearForm::new(space, Matrix::from_rows(rows)?)
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn value(&self, i: usize, j: usize) -> &Scalar {
        self.values.get(i, j)
    }

    pub fn pairing(&self, x: &Element, y: &Element) -> Scalar {
        let mut out = Scalar::zero();
        for (i, a) in x.support() {
            for (j, b) in y.support() {
                out += a * b * self.values.get(i, j);
            }
        }
        out
    }

    /// `⟨β(x)|β(y)⟩ = ⟨x|y⟩` on basis pairs.
    pub fn is_preserved_by(&self, beta: &EvenMap) -> bool {
        let n = self.space.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let (bi, bj) = (
                    beta.apply(&Element::basis(i)),
                    beta.apply(&Element::basis(j)),
                );
                self.pairing(&bi, &bj) == *self.values.get(i, j)
            })
        })
    }
}

/// `⟨x,y,z⟩ = λ(⟨x|y⟩z + (−1)^{x̄(ȳ+z̄)}⟨y|z⟩x − (−1)^{z̄(x̄+ȳ)}⟨z|x⟩y)`, twist identity.
pub fn bilinear_form_triple(
    form: &BilinearForm,
    lambda: &Scalar,
) -> Result<HomTripleSystem, ConstructionError> {
    let space = form.space().clone();
    let product = TernaryStructure::from_fn(space.clone(), |[x, y, z]| {
        let [px, py, pz] = [x, y, z].map(|i| space.parity(i));
        let mut out = Element::basis_scaled(z, form.value(x, y).clone());
        out.add_coord(x, sign(px.times(py + pz)) * form.value(y, z));
        out.add_coord(y, -sign(pz.times(px + py)) * form.value(z, x));
        out.scale(lambda)
    });
    Ok(HomTripleSystem::new(product, EvenMap::identity(&space))?)
}
