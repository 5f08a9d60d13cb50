#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use superbol::builtin;
use superbol::constructions::{
    hom_bol_pipeline, plus_algebra, yau_twist_algebra, yau_twist_triple, Preconditions,
};
use superbol::error::CheckError;
use superbol::graded::{int, Element, Scalar, SuperSpace};
use superbol::identity::{check, evaluate, suite, Identity, StructureBinding, SuiteName};
use superbol::structures::{BinaryStructure, Convention, HomSuperalgebra, TernaryStructure};

/// Replaces the coordinate of `key`'s value along `target` with `c`.
pub fn perturb_binary(
    t: &BinaryStructure,
    key: [usize; 2],
    target: usize,
    c: Scalar,
) -> BinaryStructure {
    let mut t = t.clone();
    let mut v = t.constant(key);
    let old = v.coord(target);
    v.add_coord(target, c - old);
    t.set(key, v);
    t
}

pub fn perturb_ternary(
    t: &TernaryStructure,
    key: [usize; 3],
    target: usize,
    c: Scalar,
) -> TernaryStructure {
    let mut t = t.clone();
    let mut v = t.constant(key);
    let old = v.coord(target);
    v.add_coord(target, c - old);
    t.set(key, v);
    t
}

/// `right_alt3` with `j*k = 3i`.
pub fn mutated_right_alt3() -> HomSuperalgebra {
    let a = builtin::right_alt3();
    HomSuperalgebra::untwisted(perturb_binary(a.product(), [1, 2], 0, int(3))).unwrap()
}

/// Every fixture the oracle tests run on, with a label.
pub fn fixtures() -> Vec<(String, StructureBinding)> {
    let mut out = Vec::new();
    let ra = builtin::right_alt3();
    let tw = builtin::right_alt3_twisted(int(2)).unwrap();
    for conv in [Convention::Unit, Convention::Half] {
        out.push((
            format!("right_alt3/{}", conv.name()),
            StructureBinding::for_algebra(&ra, conv),
        ));
        out.push((
            format!("right_alt3_twisted/{}", conv.name()),
            StructureBinding::for_algebra(&tw, conv),
        ));
    }
    out.push((
        "mutated_right_alt3".into(),
        StructureBinding::for_algebra(&mutated_right_alt3(), Convention::Unit),
    ));
    out.push((
        "plus(right_alt3)".into(),
        StructureBinding::for_algebra(&plus_algebra(&ra, Convention::Unit), Convention::Unit),
    ));
    out.push((
        "plus(right_alt3_twisted)".into(),
        StructureBinding::for_algebra(&plus_algebra(&tw, Convention::Unit), Convention::Unit),
    ));
    let gl = builtin::gl11();
    let theta = builtin::gl11_automorphism(int(2)).unwrap();
    let gl_tw = yau_twist_algebra(&gl, &theta, 1, Preconditions::Checked).unwrap();
    out.push((
        "gl11".into(),
        StructureBinding::for_algebra(&gl, Convention::Unit),
    ));
    out.push((
        "gl11_twisted".into(),
        StructureBinding::for_algebra(&gl_tw, Convention::Half),
    ));
    out.push((
        "maltsev_bol3".into(),
        StructureBinding::for_binary_ternary(&builtin::maltsev_bol3()),
    ));
    out.push((
        "right_alt3_bol".into(),
        StructureBinding::for_binary_ternary(&builtin::right_alt3_bol()),
    ));
    for (a, b) in [(-1, 0), (2, 3)] {
        let h = builtin::right_alt3_hombol(int(a), int(b)).unwrap();
        out.push((
            format!("right_alt3_hombol({a},{b})"),
            StructureBinding::for_binary_ternary(&h),
        ));
    }
    let p = hom_bol_pipeline(&tw, Convention::Unit, Preconditions::Checked).unwrap();
    out.push((
        "pipeline.jordan_triple".into(),
        StructureBinding::for_triple(&p.jordan_triple),
    ));
    out.push((
        "pipeline.lie_triple".into(),
        StructureBinding::for_triple(&p.lie_triple),
    ));
    out.push((
        "pipeline.bol".into(),
        StructureBinding::for_binary_ternary(&p.bol),
    ));
    for lambda in [1, -2] {
        let t = builtin::jordan_form_triple(int(lambda));
        out.push((
            format!("jordan_form_triple({lambda})"),
            StructureBinding::for_triple(&t),
        ));
    }
    let t = builtin::jordan_form_triple(int(1));
    let iso = builtin::jordan_form_isometry();
    let t_tw = yau_twist_triple(&t, &iso, 1, Preconditions::Checked).unwrap();
    out.push((
        "jordan_form_triple_twisted".into(),
        StructureBinding::for_triple(&t_tw),
    ));
    out
}

/// The binding a suite actually runs against.
pub fn suite_binding(b: &StructureBinding, name: SuiteName) -> StructureBinding {
    if name.is_untwisted() {
        b.untwisted()
    } else {
        b.clone()
    }
}

pub fn random_element(rng: &mut ChaCha8Rng, space: &SuperSpace) -> Element {
    Element::from_coords((0..space.dim()).map(|i| (i, int(rng.gen_range(-6..=6)))))
}

/// Outcome of comparing the basis-tuple verdict with random evaluation.
pub struct OracleCase {
    pub fixture: String,
    pub suite: SuiteName,
    pub identity: String,
    pub basis_pass: bool,
    pub random_pass: bool,
}

impl OracleCase {
    pub fn agrees(&self) -> bool {
        self.basis_pass == self.random_pass
    }
}

fn random_verdict(
    b: &StructureBinding,
    id: &Identity,
    rng: &mut ChaCha8Rng,
    samples: usize,
) -> bool {
    (0..samples).all(|_| {
        let args: Vec<Element> = (0..id.arity())
            .map(|_| random_element(rng, b.space()))
            .collect();
        evaluate(b, id, &args).unwrap().is_zero()
    })
}

/// Runs every applicable suite identity on every fixture: the basis verdict
/// and the verdict on `samples` seeded random general elements.
pub fn completeness_cases(samples: usize, seed: u64) -> Vec<OracleCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = Vec::new();
    for (label, binding) in fixtures() {
        for name in SuiteName::ALL {
            let b = suite_binding(&binding, name);
            for id in suite(name, b.convention()) {
                let basis = match check(&b, &id) {
                    Ok(r) => r.passed(),
                    Err(CheckError::UnboundSymbol(_)) => continue,
                    Err(e) => panic!("{label} {name} {}: {e}", id.name),
                };
                cases.push(OracleCase {
                    fixture: label.clone(),
                    suite: name,
                    identity: id.name.clone(),
                    basis_pass: basis,
                    random_pass: random_verdict(&b, &id, &mut rng, samples),
                });
            }
        }
    }
    cases
}
