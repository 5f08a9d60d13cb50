//! Koszul sign exponents as polynomials over GF(2) in variable parities.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::graded::Parity;

/// A sum of monomials of degree at most two over GF(2), plus a constant.
///
/// Since parities are 0 or 1, `x.x = x`, so squares collapse to linear terms.
/// Monomials are stored as `(a, b)` with `a <= b`; `(a, a)` is the linear
/// monomial `a`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SignPoly {
    constant: bool,
    monos: BTreeSet<(usize, usize)>,
}

impl SignPoly {
    pub fn zero() -> SignPoly {
        SignPoly::default()
    }

    pub fn one() -> SignPoly {
        SignPoly {
            constant: true,
            monos: BTreeSet::new(),
        }
    }

    pub fn var(a: usize) -> SignPoly {
        SignPoly::product(a, a)
    }

    pub fn product(a: usize, b: usize) -> SignPoly {
        let mut p = SignPoly::zero();
        p.toggle(a.min(b), a.max(b));
        p
    }

    fn toggle(&mut self, a: usize, b: usize) {
        if !self.monos.remove(&(a, b)) {
            self.monos.insert((a, b));
        }
    }

    pub fn is_zero(&self) -> bool {
        !self.constant && self.monos.is_empty()
    }

    /// Sum in GF(2): the sign of the sum is the product of the signs.
    pub fn add(&self, other: &SignPoly) -> SignPoly {
        let mut out = self.clone();
        out.constant ^= other.constant;
        for &(a, b) in &other.monos {
            out.toggle(a, b);
        }
        out
    }

    pub fn add_product(&mut self, a: usize, b: usize) {
        self.toggle(a.min(b), a.max(b));
    }

    pub fn add_one(&mut self) {
        self.constant = !self.constant;
    }

    /// Exponent value at the given parities of the variables.
    pub fn eval(&self, parities: &[Parity]) -> Parity {
        let mut bit = self.constant as u8;
        for &(a, b) in &self.monos {
            bit ^= parities[a].bit() & parities[b].bit();
        }
        Parity::from_bit(bit)
    }

    /// True when `(−1)^{self}` is −1 at the given parities.
    pub fn is_negative(&self, parities: &[Parity]) -> bool {
        self.eval(parities).is_odd()
    }

    /// Renames variable `v` to `map[v]`.
    pub fn rename(&self, map: &[usize]) -> SignPoly {
        let mut out = SignPoly {
            constant: self.constant,
            monos: BTreeSet::new(),
        };
        for &(a, b) in &self.monos {
            let (c, d) = (map[a], map[b]);
            out.toggle(c.min(d), c.max(d));
        }
        out
    }

    pub fn max_var(&self) -> Option<usize> {
        self.monos.iter().map(|&(_, b)| b).max()
    }

    /// DSL text such as `x.y+x.z`, or `None` for the zero polynomial.
    pub fn to_dsl(&self, names: &[String]) -> Option<String> {
        if self.is_zero() {
            return None;
        }
        let mut out = String::new();
        for &(a, b) in &self.monos {
            if !out.is_empty() {
                out.push('+');
            }
            if a == b {
                out.push_str(&names[a]);
            } else {
                let _ = write!(out, "{}.{}", names[a], names[b]);
            }
        }
        if self.constant {
            if !out.is_empty() {
                out.push('+');
            }
            out.push('1');
        }
        Some(out)
    }
}
