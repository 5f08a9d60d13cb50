//! Exact-rational graded linear algebra.
//!
//! A [`SuperSpace`] is an ordered list of named basis vectors, each tagged with
//! a [`Parity`]. Elements are finitely supported coordinate vectors over that
//! basis with [`Scalar`] (arbitrary precision rational) entries. Linear maps are
//! dense square matrices; an [`EvenMap`] is a matrix that never mixes parities.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::GradedError;

/// Ground field scalars.
pub type Scalar = BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Degree in Z/2.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u8) -> Parity {
        if bit & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Product of degrees, i.e. the exponent of the Koszul sign `(-1)^{ab}`.
    pub fn times(self, other: Parity) -> Parity {
        Parity::from_bit(self.bit() & other.bit())
    }
}

impl Add for Parity {
    type Output = Parity;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// `(-1)^{ab}` as a scalar.
pub fn koszul_sign(a: Parity, b: Parity) -> Scalar {
    if a.times(b).is_odd() {
        -Scalar::one()
    } else {
        Scalar::one()
    }
}

/// Result of asking an element for its degree.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Homogeneous(Parity),
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisVector {
    pub name: String,
    pub parity: Parity,
}

/// `V = V_0 + V_1` with a fixed, named, ordered basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperSpace {
    basis: Vec<BasisVector>,
}

impl SuperSpace {
    pub fn new<S: Into<String>>(
        basis: impl IntoIterator<Item = (S, Parity)>,
    ) -> Result<SuperSpace, GradedError> {
        let basis: Vec<BasisVector> = basis
            .into_iter()
            .map(|(name, parity)| BasisVector {
                name: name.into(),
                parity,
            })
            .collect();
        if basis.is_empty() {
            return Err(GradedError::EmptyBasis);
        }
        for (idx, b) in basis.iter().enumerate() {
            if b.name.is_empty() {
                return Err(GradedError::EmptyName(idx));
            }
            if basis[..idx].iter().any(|other| other.name == b.name) {
                return Err(GradedError::DuplicateName(b.name.clone()));
            }
        }
        Ok(SuperSpace { basis })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn dim_even(&self) -> usize {
        self.basis
            .iter()
            .filter(|b| b.parity == Parity::Even)
            .count()
    }

    pub fn dim_odd(&self) -> usize {
        self.dim() - self.dim_even()
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn parity(&self, idx: usize) -> Parity {
        self.basis[idx].parity
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.basis[idx].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    /// Basis element by name, or an error naming the unknown vector.
    pub fn vector(&self, name: &str) -> Result<Element, GradedError> {
        self.index_of(name)
            .map(Element::basis)
            .ok_or_else(|| GradedError::UnknownBasis(name.to_string()))
    }

    /// Checks that every supported index of `e` is inside this space.
    pub fn contains(&self, e: &Element) -> Result<(), GradedError> {
        match e.coords.keys().next_back() {
            Some(&idx) if idx >= self.dim() => Err(GradedError::DimensionMismatch {
                expected: self.dim(),
                found: idx + 1,
            }),
            _ => Ok(()),
        }
    }

    /// Renders `e` as a linear combination of basis names, e.g. `2i - 3/2k`.
    pub fn format(&self, e: &Element) -> String {
        if e.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (&idx, c)) in e.coords.iter().enumerate() {
            let name = self.basis.get(idx).map(|b| b.name.as_str()).unwrap_or("?");
            let abs = c.abs();
            if n == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if !abs.is_one() {
                out.push_str(&abs.to_string());
            }
            out.push_str(name);
        }
        out
    }
}

/// Finitely supported coordinate vector. Zero coordinates are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    coords: BTreeMap<usize, Scalar>,
}

impl Element {
    pub fn zero() -> Element {
        Element::default()
    }

    pub fn basis(idx: usize) -> Element {
        Element::basis_scaled(idx, Scalar::one())
    }

    pub fn basis_scaled(idx: usize, c: Scalar) -> Element {
        let mut e = Element::zero();
        e.add_coord(idx, c);
        e
    }

    pub fn from_coords(coords: impl IntoIterator<Item = (usize, Scalar)>) -> Element {
        let mut e = Element::zero();
        for (idx, c) in coords {
            e.add_coord(idx, c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coord(&self, idx: usize) -> Scalar {
        self.coords.get(&idx).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> + '_ {
        self.coords.iter().map(|(&idx, c)| (idx, c))
    }

    pub fn support_len(&self) -> usize {
        self.coords.len()
    }

    pub fn add_coord(&mut self, idx: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.coords.entry(idx).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.coords.remove(&idx);
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, c: &Scalar, other: &Element) {
        if c.is_zero() {
            return;
        }
        for (&idx, v) in &other.coords {
            self.add_coord(idx, c * v);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            coords: self.coords.iter().map(|(&i, v)| (i, v * c)).collect(),
        }
    }

    /// Degree of the element. The zero element reports even.
    pub fn parity_in(&self, space: &SuperSpace) -> Homogeneity {
        let mut seen: Option<Parity> = None;
        for &idx in self.coords.keys() {
            let p = space.parity(idx);
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => return Homogeneity::Mixed,
                _ => {}
            }
        }
        Homogeneity::Homogeneous(seen.unwrap_or(Parity::Even))
    }

    /// Splits into (even part, odd part).
    pub fn homogeneous_parts(&self, space: &SuperSpace) -> (Element, Element) {
        let mut even = Element::zero();
        let mut odd = Element::zero();
        for (&idx, c) in &self.coords {
            let target = match space.parity(idx) {
                Parity::Even => &mut even,
                Parity::Odd => &mut odd,
            };
            target.coords.insert(idx, c.clone());
        }
        (even, odd)
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        for (&idx, v) in &rhs.coords {
            self.add_coord(idx, v.clone());
        }
    }
}

impl SubAssign<&Element> for Element {
    fn sub_assign(&mut self, rhs: &Element) {
        for (&idx, v) in &rhs.coords {
            self.add_coord(idx, -v.clone());
        }
    }
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element {
            coords: self.coords.iter().map(|(&i, v)| (i, -v.clone())).collect(),
        }
    }
}

/// `parity_of` on an element of `space`.
pub fn parity_of(space: &SuperSpace, e: &Element) -> Homogeneity {
    e.parity_in(space)
}

/// Dense square matrix, indexed `(row = target basis, column = source basis)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(dim: usize) -> Matrix {
        Matrix {
            dim,
            entries: vec![Scalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Matrix {
        let mut m = Matrix::zero(dim);
        for i in 0..dim {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Matrix, GradedError> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(GradedError::NotSquare {
                    rows: dim,
                    cols: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix { dim, entries })
    }

    /// Matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(dim: usize, cols: &[Element]) -> Matrix {
        let mut m = Matrix::zero(dim);
        for (j, col) in cols.iter().enumerate() {
            for (i, c) in col.support() {
                m.set(i, j, c.clone());
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Scalar) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.entries
            .chunks(self.dim.max(1))
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn column(&self, col: usize) -> Element {
        Element::from_coords((0..self.dim).map(|i| (i, self.get(i, col).clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.dim)
    }

    /// Image of `e`. Coordinates outside the matrix dimension are ignored, so
    /// callers validate the element against the space first.
    pub fn apply(&self, e: &Element) -> Element {
        let mut out = Element::zero();
        for (j, c) in e.support() {
            if j >= self.dim {
                continue;
            }
            for i in 0..self.dim {
                let m = self.get(i, j);
                if !m.is_zero() {
                    out.add_coord(i, m * c);
                }
            }
        }
        out
    }

    /// `self ∘ other` (apply `other` first).
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
        let n = self.dim;
        let mut out = Matrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Matrix {
        let mut out = Matrix::identity(self.dim);
        for _ in 0..n {
            out = self.mul(&out);
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
        Matrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    /// True iff no entry connects basis vectors of different parity.
    pub fn is_even(&self, space: &SuperSpace) -> bool {
        self.first_cross_parity_entry(space).is_none()
    }

    /// First `(row, col)` in row-major order with a nonzero cross-parity entry.
    pub fn first_cross_parity_entry(&self, space: &SuperSpace) -> Option<(usize, usize)> {
        (0..self.dim)
            .flat_map(|i| (0..self.dim).map(move |j| (i, j)))
            .find(|&(i, j)| space.parity(i) != space.parity(j) && !self.get(i, j).is_zero())
    }
}

/// `is_even` on a candidate matrix over `space`. Non-square or mis-sized
/// candidates are reported as not even.
pub fn is_even(candidate: &Matrix, space: &SuperSpace) -> bool {
    candidate.dim() == space.dim() && candidate.is_even(space)
}

/// A parity-preserving linear self-map of a superspace.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvenMap {
    matrix: Matrix,
}

impl EvenMap {
    pub fn new(space: &SuperSpace, matrix: Matrix) -> Result<EvenMap, GradedError> {
        if matrix.dim() != space.dim() {
            return Err(GradedError::DimensionMismatch {
                expected: space.dim(),
                found: matrix.dim(),
            });
        }
        if let Some((row, col)) = matrix.first_cross_parity_entry(space) {
            return Err(GradedError::NotEven {
                from: space.name(col).to_string(),
                to: space.name(row).to_string(),
            });
        }
        Ok(EvenMap { matrix })
    }

    /// Builds a map from basis images given by name.
    pub fn from_images(
        space: &SuperSpace,
        images: &[(&str, Element)],
    ) -> Result<EvenMap, GradedError> {
        let mut cols = vec![Element::zero(); space.dim()];
        let mut seen = vec![false; space.dim()];
        for (name, image) in images {
            let idx = space
                .index_of(name)
                .ok_or_else(|| GradedError::UnknownBasis(name.to_string()))?;
            space.contains(image)?;
            cols[idx] = image.clone();
            seen[idx] = true;
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(GradedError::MissingImage(space.name(missing).to_string()));
        }
        EvenMap::new(space, Matrix::from_columns(space.dim(), &cols))
    }

    pub fn identity(space: &SuperSpace) -> EvenMap {
        EvenMap {
            matrix: Matrix::identity(space.dim()),
        }
    }

    pub fn scalar(space: &SuperSpace, c: Scalar) -> EvenMap {
        EvenMap {
            matrix: Matrix::identity(space.dim()).scale(&c),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn apply(&self, e: &Element) -> Element {
        self.matrix.apply(e)
    }

    /// `self ∘ other`
    pub fn then_after(&self, other: &EvenMap) -> EvenMap {
        EvenMap {
            matrix: self.matrix.mul(&other.matrix),
        }
    }

    pub fn pow(&self, n: u32) -> EvenMap {
        EvenMap {
            matrix: self.matrix.pow(n),
        }
    }
}

/// Applies `f` to `e`, rejecting elements supported outside `f`'s domain.
pub fn apply_map(f: &EvenMap, e: &Element) -> Result<Element, GradedError> {
    if let Some((idx, _)) = e.support().last() {
        if idx >= f.dim() {
            return Err(GradedError::DimensionMismatch {
                expected: f.dim(),
                found: idx + 1,
            });
        }
    }
    Ok(f.apply(e))
}

/// `f ∘ g`.
pub fn compose(f: &EvenMap, g: &EvenMap) -> Result<EvenMap, GradedError> {
    if f.dim() != g.dim() {
        return Err(GradedError::DimensionMismatch {
            expected: f.dim(),
            found: g.dim(),
        });
    }
    Ok(f.then_after(g))
}

/// `f^n`, with `f^0 = Id`.
pub fn power(f: &EvenMap, n: u32) -> EvenMap {
    f.pow(n)
}
