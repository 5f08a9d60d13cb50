//! Binary and ternary Hom-superalgebras stored by structure constants.

use std::collections::BTreeMap;

use num_traits::One;

use crate::error::StructureError;
use crate::graded::{
    koszul_sign, rat, Element, EvenMap, Homogeneity, Matrix, Parity, Scalar, SuperSpace,
};
use crate::report::{CheckReport, Counterexample};

/// Normalization of the derived products `[x,y]` and `x∘y`.
///
/// `Unit` multiplies by 1 and reproduces the published example tables; `Half`
/// multiplies by 1/2.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Convention {
    #[default]
    Unit,
    Half,
}

impl Convention {
    pub fn factor(self) -> Scalar {
        match self {
            Convention::Unit => Scalar::one(),
            Convention::Half => rat(1, 2),
        }
    }

    pub fn is_half(self) -> bool {
        self == Convention::Half
    }

    pub fn name(self) -> &'static str {
        match self {
            Convention::Unit => "unit",
            Convention::Half => "half",
        }
    }

    pub fn from_name(name: &str) -> Option<Convention> {
        match name {
            "unit" => Some(Convention::Unit),
            "half" => Some(Convention::Half),
            _ => None,
        }
    }
}

/// Sparse N-linear structure constants: basis tuple to product element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor<const N: usize> {
    space: SuperSpace,
    constants: BTreeMap<[usize; N], Element>,
}

pub type BinaryStructure = Tensor<2>;
pub type TernaryStructure = Tensor<3>;

impl<const N: usize> Tensor<N> {
    pub fn zero(space: SuperSpace) -> Self {
        Tensor {
            space,
            constants: BTreeMap::new(),
        }
    }

    /// Tabulates `f` on every basis tuple.
    pub fn from_fn(space: SuperSpace, mut f: impl FnMut([usize; N]) -> Element) -> Self {
        let mut t = Tensor::zero(space);
        for key in basis_tuples::<N>(t.space.dim()) {
            let value = f(key);
            t.set(key, value);
        }
        t
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    /// Stores a constant; a zero value removes the entry.
    pub fn set(&mut self, key: [usize; N], value: Element) {
        if value.is_zero() {
            self.constants.remove(&key);
        } else {
            self.constants.insert(key, value);
        }
    }

    pub fn constant(&self, key: [usize; N]) -> Element {
        self.constants.get(&key).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[usize; N], &Element)> + '_ {
        self.constants.iter()
    }

    pub fn nonzero_count(&self) -> usize {
        self.constants.len()
    }

    pub fn is_zero(&self) -> bool {
        self.constants.is_empty()
    }

    /// Multilinear extension of the constants. Arguments are not validated.
    pub fn apply(&self, args: [&Element; N]) -> Element {
        let mut out = Element::zero();
        let supports: Vec<Vec<(usize, &Scalar)>> =
            args.iter().map(|a| a.support().collect()).collect();
        if supports.iter().any(Vec::is_empty) {
            return out;
        }
        let mut pos = [0usize; N];
        loop {
            let mut key = [0usize; N];
            for m in 0..N {
                key[m] = supports[m][pos[m]].0;
            }
            if let Some(value) = self.constants.get(&key) {
                let mut c = supports[0][pos[0]].1.clone();
                for m in 1..N {
                    c *= supports[m][pos[m]].1;
                }
                out.add_scaled(&c, value);
            }
            // odometer, last slot fastest
            let mut m = N;
            loop {
                if m == 0 {
                    return out;
                }
                m -= 1;
                pos[m] += 1;
                if pos[m] < supports[m].len() {
                    break;
                }
                pos[m] = 0;
            }
        }
    }

    /// Validated multilinear product.
    pub fn try_apply(&self, args: [&Element; N]) -> Result<Element, StructureError> {
        for a in args {
            self.space.contains(a)?;
        }
        Ok(self.apply(args))
    }

    /// Applies `f` to every constant, e.g. `β ∘ product`.
    pub fn map_values(&self, f: impl Fn(&Element) -> Element) -> Self {
        let mut out = Tensor::zero(self.space.clone());
        for (key, value) in &self.constants {
            out.set(*key, f(value));
        }
        out
    }

    pub fn compose_map(&self, m: &Matrix) -> Self {
        self.map_values(|v| m.apply(v))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        self.map_values(|v| v.scale(c))
    }

    /// Verifies that each stored product has the parity of its inputs.
    pub fn grading_check(&self) -> CheckReport {
        let name = "grading_closure";
        for (n, (key, value)) in self.constants.iter().enumerate() {
            let expected = key
                .iter()
                .fold(Parity::Even, |acc, &i| acc + self.space.parity(i));
            let ok = match value.parity_in(&self.space) {
                Homogeneity::Homogeneous(p) => p == expected,
                Homogeneity::Mixed => false,
            };
            if !ok {
                let vars = key
                    .iter()
                    .map(|&i| self.space.name(i).to_string())
                    .collect();
                return CheckReport::fail(
                    name,
                    n as u64 + 1,
                    Counterexample::new(&self.space, vars, value),
                );
            }
        }
        CheckReport::pass(name, self.constants.len() as u64)
    }

    pub(crate) fn validate_grading(&self) -> Result<(), StructureError> {
        let report = self.grading_check();
        match report.counterexample {
            None => Ok(()),
            Some(c) => {
                let key: Vec<usize> = c
                    .vars
                    .iter()
                    .map(|n| self.space.index_of(n).expect("name from this space"))
                    .collect();
                let mut arr = [0usize; N];
                arr.copy_from_slice(&key);
                Err(StructureError::Grading {
                    inputs: c.vars,
                    value: self.space.format(&self.constant(arr)),
                })
            }
        }
    }
}

/// All basis index tuples of length `N` in lexicographic order.
pub fn basis_tuples<const N: usize>(dim: usize) -> impl Iterator<Item = [usize; N]> {
    let total = dim.pow(N as u32);
    (0..total).map(move |mut n| {
        let mut key = [0usize; N];
        for slot in key.iter_mut().rev() {
            *slot = n % dim;
            n /= dim;
        }
        key
    })
}

fn check_twist(space: &SuperSpace, twist: &EvenMap) -> Result<(), StructureError> {
    if twist.dim() != space.dim() || !twist.matrix().is_even(space) {
        return Err(StructureError::SpaceMismatch);
    }
    Ok(())
}

/// `(A, *, α)`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSuperalgebra {
    product: BinaryStructure,
    twist: EvenMap,
}

impl HomSuperalgebra {
    pub fn new(product: BinaryStructure, twist: EvenMap) -> Result<Self, StructureError> {
        check_twist(product.space(), &twist)?;
        product.validate_grading()?;
        Ok(HomSuperalgebra { product, twist })
    }

    pub fn untwisted(product: BinaryStructure) -> Result<Self, StructureError> {
        let twist = EvenMap::identity(product.space());
        HomSuperalgebra::new(product, twist)
    }

    pub fn product(&self) -> &BinaryStructure {
        &self.product
    }

    pub fn space(&self) -> &SuperSpace {
        self.product.space()
    }

    pub fn twist(&self) -> &EvenMap {
        &self.twist
    }

    pub fn with_twist(&self, twist: EvenMap) -> Result<Self, StructureError> {
        HomSuperalgebra::new(self.product.clone(), twist)
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        self.product.apply([x, y])
    }
}

/// `(V, ⟨·,·,·⟩, θ)`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomTripleSystem {
    product: TernaryStructure,
    twist: EvenMap,
}

impl HomTripleSystem {
    pub fn new(product: TernaryStructure, twist: EvenMap) -> Result<Self, StructureError> {
        check_twist(product.space(), &twist)?;
        product.validate_grading()?;
        Ok(HomTripleSystem { product, twist })
    }

    pub fn product(&self) -> &TernaryStructure {
        &self.product
    }

    pub fn space(&self) -> &SuperSpace {
        self.product.space()
    }

    pub fn twist(&self) -> &EvenMap {
        &self.twist
    }
}

/// `(A, [·,·], {·,·,·}, α)`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBinaryTernary {
    binary: BinaryStructure,
    ternary: TernaryStructure,
    twist: EvenMap,
}

impl HomBinaryTernary {
    pub fn new(
        binary: BinaryStructure,
        ternary: TernaryStructure,
        twist: EvenMap,
    ) -> Result<Self, StructureError> {
        if binary.space() != ternary.space() {
            return Err(StructureError::SpaceMismatch);
        }
        check_twist(binary.space(), &twist)?;
        binary.validate_grading()?;
        ternary.validate_grading()?;
        Ok(HomBinaryTernary {
            binary,
            ternary,
            twist,
        })
    }

    pub fn binary(&self) -> &BinaryStructure {
        &self.binary
    }

    pub fn ternary(&self) -> &TernaryStructure {
        &self.ternary
    }

    pub fn space(&self) -> &SuperSpace {
        self.binary.space()
    }

    pub fn twist(&self) -> &EvenMap {
        &self.twist
    }
}

/// Uniform view used by the morphism checks.
pub trait GradedStructure {
    fn space(&self) -> &SuperSpace;
    fn twist(&self) -> &EvenMap;
    fn binary_part(&self) -> Option<&BinaryStructure>;
    fn ternary_part(&self) -> Option<&TernaryStructure>;
}

impl GradedStructure for HomSuperalgebra {
    fn space(&self) -> &SuperSpace {
        self.space()
    }
    fn twist(&self) -> &EvenMap {
        &self.twist
    }
    fn binary_part(&self) -> Option<&BinaryStructure> {
        Some(&self.product)
    }
    fn ternary_part(&self) -> Option<&TernaryStructure> {
        None
    }
}

impl GradedStructure for HomTripleSystem {
    fn space(&self) -> &SuperSpace {
        self.space()
    }
    fn twist(&self) -> &EvenMap {
        &self.twist
    }
    fn binary_part(&self) -> Option<&BinaryStructure> {
        None
    }
    fn ternary_part(&self) -> Option<&TernaryStructure> {
        Some(&self.product)
    }
}

impl GradedStructure for HomBinaryTernary {
    fn space(&self) -> &SuperSpace {
        self.space()
    }
    fn twist(&self) -> &EvenMap {
        &self.twist
    }
    fn binary_part(&self) -> Option<&BinaryStructure> {
        Some(&self.binary)
    }
    fn ternary_part(&self) -> Option<&TernaryStructure> {
        Some(&self.ternary)
    }
}

pub fn bin_mul(s: &BinaryStructure, x: &Element, y: &Element) -> Result<Element, StructureError> {
    s.try_apply([x, y])
}

pub fn tern_mul(
    t: &TernaryStructure,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Result<Element, StructureError> {
    t.try_apply([x, y, z])
}

/// `(x*y)*α(z) − α(x)*(y*z)`
pub fn hom_associator(
    a: &HomSuperalgebra,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Result<Element, StructureError> {
    for e in [x, y, z] {
        a.space().contains(e)?;
    }
    let alpha = a.twist();
    let left = a.mul(&a.mul(x, y), &alpha.apply(z));
    let right = a.mul(&alpha.apply(x), &a.mul(y, z));
    Ok(&left - &right)
}

/// `k(xy + s·(−1)^{x̄ȳ} yx)` summed over homogeneous components; `s = ±1`.
fn graded_symmetrize(
    a: &HomSuperalgebra,
    conv: Convention,
    x: &Element,
    y: &Element,
    s: i64,
) -> Result<Element, StructureError> {
    let space = a.space();
    space.contains(x)?;
    space.contains(y)?;
    let (x0, x1) = x.homogeneous_parts(space);
    let (y0, y1) = y.homogeneous_parts(space);
    let mut out = Element::zero();
    for (px, xp) in [(Parity::Even, &x0), (Parity::Odd, &x1)] {
        for (py, yp) in [(Parity::Even, &y0), (Parity::Odd, &y1)] {
            if xp.is_zero() || yp.is_zero() {
                continue;
            }
            out += &a.mul(xp, yp);
            let c = koszul_sign(px, py) * rat(s, 1);
            out.add_scaled(&c, &a.mul(yp, xp));
        }
    }
    Ok(out.scale(&conv.factor()))
}

/// `x∘y = k(xy + (−1)^{x̄ȳ} yx)`
pub fn super_jordan(
    a: &HomSuperalgebra,
    conv: Convention,
    x: &Element,
    y: &Element,
) -> Result<Element, StructureError> {
    graded_symmetrize(a, conv, x, y, 1)
}

/// `[x,y] = k(xy − (−1)^{x̄ȳ} yx)`
pub fn supercommutator(
    a: &HomSuperalgebra,
    conv: Convention,
    x: &Element,
    y: &Element,
) -> Result<Element, StructureError> {
    graded_symmetrize(a, conv, x, y, -1)
}

fn names(space: &SuperSpace, key: &[usize]) -> Vec<String> {
    key.iter().map(|&i| space.name(i).to_string()).collect()
}

/// Checks `α(product) = product(α-images)` on every basis pair and triple.
pub fn is_multiplicative(s: &impl GradedStructure) -> CheckReport {
    let space = s.space();
    let alpha = s.twist().matrix();
    let mut count = 0u64;
    if let Some(b) = s.binary_part() {
        for key in basis_tuples::<2>(space.dim()) {
            count += 1;
            let [x, y] = key.map(Element::basis);
            let lhs = alpha.apply(&b.apply([&x, &y]));
            let rhs = b.apply([&alpha.apply(&x), &alpha.apply(&y)]);
            let residue = &lhs - &rhs;
            if !residue.is_zero() {
                return CheckReport::fail(
                    "multiplicative_binary",
                    count,
                    Counterexample::new(space, names(space, &key), &residue),
                );
            }
        }
    }
    if let Some(t) = s.ternary_part() {
        for key in basis_tuples::<3>(space.dim()) {
            count += 1;
            let [x, y, z] = key.map(Element::basis);
            let lhs = alpha.apply(&t.apply([&x, &y, &z]));
            let rhs = t.apply([&alpha.apply(&x), &alpha.apply(&y), &alpha.apply(&z)]);
            let residue = &lhs - &rhs;
            if !residue.is_zero() {
                return CheckReport::fail(
                    "multiplicative_ternary",
                    count,
                    Counterexample::new(space, names(space, &key), &residue),
                );
            }
        }
    }
    CheckReport::pass("multiplicative", count)
}

/// Checks that `f` is even, commutes with every product and with the twist.
///
/// Conditions are tested in that order; the report names the first one that
/// fails.
pub fn is_even_self_morphism(s: &impl GradedStructure, f: &Matrix) -> CheckReport {
    let space = s.space();
    let name = "even_self_morphism";
    if f.dim() != space.dim() {
        return CheckReport::fail(
            "even_self_morphism: dimension",
            0,
            Counterexample {
                vars: vec![],
                residue: vec![],
            },
        );
    }
    let mut count = 0u64;
    for j in 0..space.dim() {
        count += 1;
        let image = f.column(j);
        let (even, odd) = image.homogeneous_parts(space);
        let stray = if space.parity(j) == Parity::Even {
            odd
        } else {
            even
        };
        if !stray.is_zero() {
            return CheckReport::fail(
                "even_self_morphism: parity",
                count,
                Counterexample::new(space, vec![space.name(j).to_string()], &stray),
            );
        }
    }
    if let Some(b) = s.binary_part() {
        for key in basis_tuples::<2>(space.dim()) {
            count += 1;
            let [x, y] = key.map(Element::basis);
            let residue = &f.apply(&b.apply([&x, &y])) - &b.apply([&f.apply(&x), &f.apply(&y)]);
            if !residue.is_zero() {
                return CheckReport::fail(
                    "even_self_morphism: binary",
                    count,
                    Counterexample::new(space, names(space, &key), &residue),
                );
            }
        }
    }
    if let Some(t) = s.ternary_part() {
        for key in basis_tuples::<3>(space.dim()) {
            count += 1;
            let [x, y, z] = key.map(Element::basis);
            let residue = &f.apply(&t.apply([&x, &y, &z]))
                - &t.apply([&f.apply(&x), &f.apply(&y), &f.apply(&z)]);
            if !residue.is_zero() {
                return CheckReport::fail(
                    "even_self_morphism: ternary",
                    count,
                    Counterexample::new(space, names(space, &key), &residue),
                );
            }
        }
    }
    let alpha = s.twist().matrix();
    for j in 0..space.dim() {
        count += 1;
        let x = Element::basis(j);
        let residue = &f.apply(&alpha.apply(&x)) - &alpha.apply(&f.apply(&x));
        if !residue.is_zero() {
            return CheckReport::fail(
                "even_self_morphism: commutes with twist",
                count,
                Counterexample::new(space, vec![space.name(j).to_string()], &residue),
            );
        }
    }
    CheckReport::pass(name, count)
}
