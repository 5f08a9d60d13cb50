//! Exhaustive evaluation of identities over homogeneous basis tuples.

use std::sync::atomic::{AtomicU64, Ordering};

use super::ast::{BinOp, Expr, Identity, Symbol, TernOp};
use crate::error::{CheckError, StructureError};
use crate::graded::{Element, EvenMap, Matrix, Parity, Scalar, SuperSpace};
use crate::report::{CheckReport, Counterexample};
use crate::structures::{
    super_jordan, supercommutator, BinaryStructure, Convention, HomBinaryTernary, HomSuperalgebra,
    HomTripleSystem, TernaryStructure,
};

/// Concrete tensors and twist assigned to the symbols of the identity language.
#[derive(Clone, Debug)]
pub struct StructureBinding {
    space: SuperSpace,
    convention: Convention,
    star: Option<BinaryStructure>,
    bracket: Option<BinaryStructure>,
    jordan: Option<BinaryStructure>,
    brace: Option<TernaryStructure>,
    angle: Option<TernaryStructure>,
    twist: Option<EvenMap>,
}

impl StructureBinding {
    pub fn new(space: SuperSpace) -> StructureBinding {
        StructureBinding {
            space,
            convention: Convention::default(),
            star: None,
            bracket: None,
            jordan: None,
            brace: None,
            angle: None,
            twist: None,
        }
    }

    /// Binds `*` to the product, `[,]` and `o` to its derived products under
    /// `conv`, and `A` to the twist.
    pub fn for_algebra(a: &HomSuperalgebra, conv: Convention) -> StructureBinding {
        let space = a.space().clone();
        let derived = |f: fn(
            &HomSuperalgebra,
            Convention,
            &Element,
            &Element,
        ) -> Result<Element, StructureError>| {
            BinaryStructure::from_fn(space.clone(), |[i, j]| {
                f(a, conv, &Element::basis(i), &Element::basis(j)).expect("basis vectors")
            })
        };
        let bracket = derived(supercommutator);
        let jordan = derived(super_jordan);
        StructureBinding {
            convention: conv,
            star: Some(a.product().clone()),
            bracket: Some(bracket),
            jordan: Some(jordan),
            twist: Some(a.twist().clone()),
            ..StructureBinding::new(space)
        }
    }

    /// Binds both `<,,>` and `{,,}` to the triple product.
    pub fn for_triple(v: &HomTripleSystem) -> StructureBinding {
        StructureBinding {
            angle: Some(v.product().clone()),
            brace: Some(v.product().clone()),
            twist: Some(v.twist().clone()),
            ..StructureBinding::new(v.space().clone())
        }
    }

    /// Binds `[,]`, `{,,}` and `A`.
    pub fn for_binary_ternary(b: &HomBinaryTernary) -> StructureBinding {
        StructureBinding {
            bracket: Some(b.binary().clone()),
            brace: Some(b.ternary().clone()),
            twist: Some(b.twist().clone()),
            ..StructureBinding::new(b.space().clone())
        }
    }

    fn same_space(&self, s: &SuperSpace) -> Result<(), CheckError> {
        if *s != self.space {
            return Err(StructureError::SpaceMismatch.into());
        }
        Ok(())
    }

    pub fn with_binary(mut self, op: BinOp, t: BinaryStructure) -> Result<Self, CheckError> {
        self.same_space(t.space())?;
        let slot = match op {
            BinOp::Star => &mut self.star,
            BinOp::Bracket => &mut self.bracket,
            BinOp::Jordan => &mut self.jordan,
        };
        *slot = Some(t);
        Ok(self)
    }

    pub fn with_ternary(mut self, op: TernOp, t: TernaryStructure) -> Result<Self, CheckError> {
        self.same_space(t.space())?;
        match op {
            TernOp::Brace => self.brace = Some(t),
            TernOp::Angle => self.angle = Some(t),
            TernOp::Assoc => return Err(CheckError::UnboundSymbol("as".into())),
        }
        Ok(self)
    }

    pub fn with_twist(mut self, twist: EvenMap) -> Result<Self, CheckError> {
        if twist.dim() != self.space.dim() {
            return Err(StructureError::SpaceMismatch.into());
        }
        self.twist = Some(twist);
        Ok(self)
    }

    pub fn with_convention(mut self, conv: Convention) -> Self {
        self.convention = conv;
        self
    }

    /// The same binding with `A` set to the identity map.
    pub fn untwisted(&self) -> StructureBinding {
        StructureBinding {
            twist: Some(EvenMap::identity(&self.space)),
            ..self.clone()
        }
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn twist(&self) -> Option<&EvenMap> {
        self.twist.as_ref()
    }

    fn provides(&self, s: Symbol) -> bool {
        match s {
            Symbol::Bin(BinOp::Star) => self.star.is_some(),
            Symbol::Bin(BinOp::Bracket) => self.bracket.is_some(),
            Symbol::Bin(BinOp::Jordan) => self.jordan.is_some(),
            Symbol::Tern(TernOp::Brace) => self.brace.is_some(),
            Symbol::Tern(TernOp::Angle) => self.angle.is_some(),
            Symbol::Tern(TernOp::Assoc) => self.star.is_some() && self.twist.is_some(),
            Symbol::Twist => self.twist.is_some(),
        }
    }
}

/// A binding specialized to one identity: twist powers precomputed.
struct Evaluator<'a> {
    b: &'a StructureBinding,
    powers: Vec<Matrix>,
}

impl<'a> Evaluator<'a> {
    fn new(b: &'a StructureBinding, id: &Identity) -> Result<Evaluator<'a>, CheckError> {
        for s in id.symbols() {
            if !b.provides(s) {
                return Err(CheckError::UnboundSymbol(s.to_string()));
            }
        }
        let max = id.max_twist_power();
        let mut powers = vec![Matrix::identity(b.space.dim())];
        if let Some(t) = &b.twist {
            for n in 1..=max as usize {
                let next = t.matrix().mul(&powers[n - 1]);
                powers.push(next);
            }
        }
        Ok(Evaluator { b, powers })
    }

    fn bin(&self, op: BinOp) -> &BinaryStructure {
        let t = match op {
            BinOp::Star => &self.b.star,
            BinOp::Bracket => &self.b.bracket,
            BinOp::Jordan => &self.b.jordan,
        };
        t.as_ref().expect("checked in Evaluator::new")
    }

    fn eval(&self, e: &Expr, args: &[&Element]) -> Element {
        match e {
            Expr::Var(v) => args[*v].clone(),
            Expr::Twist(n, inner) => self.powers[*n as usize].apply(&self.eval(inner, args)),
            Expr::Bin(op, a, c) => {
                let x = self.eval(a, args);
                if x.is_zero() {
                    return x;
                }
                self.bin(*op).apply([&x, &self.eval(c, args)])
            }
            Expr::Tern(op, parts) => {
                let x = self.eval(&parts[0], args);
                if x.is_zero() {
                    return x;
                }
                let y = self.eval(&parts[1], args);
                if y.is_zero() {
                    return y;
                }
                let z = self.eval(&parts[2], args);
                match op {
                    TernOp::Brace => self.b.brace.as_ref().unwrap().apply([&x, &y, &z]),
                    TernOp::Angle => self.b.angle.as_ref().unwrap().apply([&x, &y, &z]),
                    TernOp::Assoc => {
                        let star = self.bin(BinOp::Star);
                        let a1 = &self.powers[1];
                        let left = star.apply([&star.apply([&x, &y]), &a1.apply(&z)]);
                        let right = star.apply([&a1.apply(&x), &star.apply([&y, &z])]);
                        &left - &right
                    }
                }
            }
        }
    }

    /// Residue on homogeneous arguments with the given parities.
    fn residue(&self, id: &Identity, args: &[&Element], parities: &[Parity]) -> Element {
        let mut out = Element::zero();
        for t in &id.terms {
            let mut c: Scalar = t.coeff.clone();
            if t.sign.is_negative(parities) {
                c = -c;
            }
            out.add_scaled(&c, &self.eval(&t.expr, args));
        }
        out
    }
}

/// Number of worker threads from `SUPERBOL_THREADS`, default 1.
pub fn configured_threads() -> usize {
    std::env::var("SUPERBOL_THREADS")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(1)
}

/// Checks `id` on every homogeneous basis tuple using `SUPERBOL_THREADS` workers.
pub fn check(binding: &StructureBinding, id: &Identity) -> Result<CheckReport, CheckError> {
    check_with_threads(binding, id, configured_threads())
}

/// Tuples are visited in lexicographic order (first variable most significant).
/// The reported counterexample is the first failing tuple in that order,
/// whatever the number of threads.
pub fn check_with_threads(
    binding: &StructureBinding,
    id: &Identity,
    threads: usize,
) -> Result<CheckReport, CheckError> {
    let ev = Evaluator::new(binding, id)?;
    let space = &binding.space;
    let dim = space.dim() as u64;
    let n = id.arity();
    let total = dim.pow(n as u32);
    let basis: Vec<Element> = (0..space.dim()).map(Element::basis).collect();

    let decode = |mut idx: u64| -> Vec<usize> {
        let mut tuple = vec![0usize; n];
        for slot in tuple.iter_mut().rev() {
            *slot = (idx % dim) as usize;
            idx /= dim;
        }
        tuple
    };
    let residue_at = |idx: u64| -> Element {
        let tuple = decode(idx);
        let args: Vec<&Element> = tuple.iter().map(|&i| &basis[i]).collect();
        let parities: Vec<Parity> = tuple.iter().map(|&i| space.parity(i)).collect();
        ev.residue(id, &args, &parities)
    };

    let first_failure = AtomicU64::new(u64::MAX);
    let scan = |start: u64, end: u64| {
        for idx in start..end {
            if first_failure.load(Ordering::Relaxed) < idx {
                return;
            }
            if !residue_at(idx).is_zero() {
                first_failure.fetch_min(idx, Ordering::Relaxed);
                return;
            }
        }
    };

    let threads = (threads.max(1) as u64).min(total.max(1));
    if threads <= 1 {
        scan(0, total);
    } else {
        let chunk = total.div_ceil(threads);
        std::thread::scope(|s| {
            for w in 0..threads {
                let (start, end) = (w * chunk, ((w + 1) * chunk).min(total));
                let scan = &scan;
                s.spawn(move || scan(start, end));
            }
        });
    }

    let failed = first_failure.into_inner();
    if failed == u64::MAX {
        return Ok(CheckReport::pass(id.name.clone(), total));
    }
    let vars = decode(failed)
        .into_iter()
        .map(|i| space.name(i).to_string())
        .collect();
    Ok(CheckReport::fail(
        id.name.clone(),
        failed + 1,
        Counterexample::new(space, vars, &residue_at(failed)),
    ))
}

/// Evaluates the left-hand side of `id` at arbitrary (possibly inhomogeneous)
/// elements, by splitting each argument into even and odd parts and summing
/// the signed terms over all parity assignments.
pub fn evaluate(
    binding: &StructureBinding,
    id: &Identity,
    args: &[Element],
) -> Result<Element, CheckError> {
    let ev = Evaluator::new(binding, id)?;
    let n = id.arity();
    if args.len() != n {
        return Err(CheckError::Structure(StructureError::SpaceMismatch));
    }
    let mut parts = Vec::with_capacity(n);
    for a in args {
        binding.space.contains(a).map_err(StructureError::from)?;
        parts.push(a.homogeneous_parts(&binding.space));
    }
    let mut out = Element::zero();
    for mask in 0u32..(1 << n) {
        let parities: Vec<Parity> = (0..n)
            .map(|v| Parity::from_bit((mask >> v) as u8))
            .collect();
        let chosen: Vec<&Element> = (0..n)
            .map(|v| match parities[v] {
                Parity::Even => &parts[v].0,
                Parity::Odd => &parts[v].1,
            })
            .collect();
        if chosen.iter().any(|e| e.is_zero()) {
            continue;
        }
        out += &ev.residue(id, &chosen, &parities);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::graded::int;
    use crate::identity::parse_identity;

    fn ex51() -> StructureBinding {
        StructureBinding::for_algebra(&builtin::right_alt3(), Convention::Unit)
    }

    #[test]
    fn right_alternative_passes_on_all_triples() {
        let id = parse_identity("as(x,y,z) + (-1)^{y.z} as(x,z,y) = 0").unwrap();
        let r = check(&ex51(), &id).unwrap();
        assert!(r.passed());
        assert_eq!(r.tuples_checked, 27);
    }

    #[test]
    fn trivial_cancellation() {
        let id = parse_identity("x*y - x*y = 0").unwrap();
        assert!(check(&ex51(), &id).unwrap().passed());
    }

    #[test]
    fn mutation_is_detected_deterministically() {
        let a = builtin::right_alt3();
        let mut p = a.product().clone();
        p.set([1, 2], Element::basis_scaled(0, int(3)));
        let mutated = HomSuperalgebra::untwisted(p).unwrap();
        let b = StructureBinding::for_algebra(&mutated, Convention::Unit);
        let id = parse_identity("as(x,y,z) + (-1)^{y.z} as(x,z,y) = 0").unwrap();
        let r1 = check_with_threads(&b, &id, 1).unwrap();
        let r4 = check_with_threads(&b, &id, 4).unwrap();
        assert!(!r1.passed());
        assert_eq!(r1, r4);
        let c = r1.counterexample.unwrap();
        assert!(!c.residue.is_empty());
    }

    #[test]
    fn unbound_symbol() {
        let id = parse_identity("{x,y,z} = 0").unwrap();
        assert!(matches!(
            check(&ex51(), &id),
            Err(CheckError::UnboundSymbol(s)) if s == "{,,}"
        ));
    }

    #[test]
    fn general_evaluation_matches_basis() {
        let id = parse_identity("[x,y] + (-1)^{x.y} [y,x] = 0").unwrap();
        let x = &Element::basis(0) + &Element::basis(1);
        let y = &Element::basis(1) + &Element::basis(2);
        assert!(evaluate(&ex51(), &id, &[x, y]).unwrap().is_zero());
    }
}
