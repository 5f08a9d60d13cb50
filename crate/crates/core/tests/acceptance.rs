//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! A criterion that fails exactly as analyzed (same identity, tuple and
//! residue) is printed as FAIL but does not fail the run; any other failure
//! makes the process exit nonzero.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use superbol::builtin;
use superbol::constructions::{
    bol_from_right_alternative, hom_bol_pipeline, nth_derived, plus_algebra, yau_twist_bol,
    yau_twist_triple, Preconditions,
};
use superbol::graded::{int, rat, Element, Scalar, SuperSpace};
use superbol::identity::{check_suite, check_with_threads, suite, StructureBinding, SuiteName};
use superbol::operators::verify_operator_lemmas;
use superbol::report::SuiteReport;
use superbol::structures::{
    BinaryStructure, Convention, HomBinaryTernary, HomSuperalgebra, TernaryStructure,
};

enum Status {
    Pass,
    /// Fails, and the failure matches the analysis recorded with it.
    Analyzed,
    Fail,
}

struct Outcome {
    status: Status,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Outcome {
        Outcome {
            status: Status::Pass,
            notes: Vec::new(),
        }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        let what = what.into();
        if ok {
            self.notes.push(format!("ok: {what}"));
        } else {
            self.status = Status::Fail;
            self.notes.push(format!("FAILED: {what}"));
        }
    }

    /// A sub-check expected to fail in one precise way.
    fn analyzed(&mut self, matches: bool, what: impl Into<String>) {
        let what = what.into();
        if matches {
            if let Status::Pass = self.status {
                self.status = Status::Analyzed;
            }
            self.notes.push(format!("fails as analyzed: {what}"));
        } else {
            self.status = Status::Fail;
            self.notes.push(format!("FAILED (not as analyzed): {what}"));
        }
    }
}

fn passes(b: &StructureBinding, s: SuiteName) -> SuiteReport {
    check_suite(b, s).expect("suite applies")
}

fn all_counts(r: &SuiteReport, n: u64) -> bool {
    r.passed() && r.results.iter().all(|c| c.tuples_checked == n)
}

fn literal_binary(s: &SuperSpace, entries: &[(&str, &str, i64, &str)]) -> BinaryStructure {
    let mut t = BinaryStructure::zero(s.clone());
    for &(a, b, c, target) in entries {
        let key = [s.index_of(a).unwrap(), s.index_of(b).unwrap()];
        t.set(
            key,
            Element::basis_scaled(s.index_of(target).unwrap(), int(c)),
        );
    }
    t
}

fn literal_ternary(s: &SuperSpace, entries: &[(&str, &str, &str, i64, &str)]) -> TernaryStructure {
    let mut t = TernaryStructure::zero(s.clone());
    for &(a, b, c, coeff, target) in entries {
        let key = [
            s.index_of(a).unwrap(),
            s.index_of(b).unwrap(),
            s.index_of(c).unwrap(),
        ];
        t.set(
            key,
            Element::basis_scaled(s.index_of(target).unwrap(), int(coeff)),
        );
    }
    t
}

fn c1() -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let r = passes(
        &StructureBinding::for_algebra(&builtin::right_alt3(), Convention::Unit),
        SuiteName::RightAlt,
    );
    let elapsed = start.elapsed();
    o.require(
        all_counts(&r, 27),
        "right_alt3 passes RIGHT_ALT on all 27 triples",
    );
    o.require(
        elapsed.as_secs_f64() < 1.0,
        format!("runtime {:.3}s < 1s", elapsed.as_secs_f64()),
    );
    o
}

fn c2() -> Outcome {
    let mut o = Outcome::new();
    let s = builtin::right_alt3_space();
    let bol = bol_from_right_alternative(
        &builtin::right_alt3(),
        Convention::Unit,
        Preconditions::Checked,
    )
    .unwrap();
    let binary = literal_binary(&s, &[("j", "k", 6, "i"), ("k", "j", 6, "i")]);
    let ternary = literal_ternary(
        &s,
        &[
            ("i", "j", "j", 4, "i"),
            ("j", "i", "j", -4, "i"),
            ("j", "j", "i", -8, "i"),
            ("j", "j", "k", -8, "k"),
            ("j", "k", "j", 4, "k"),
            ("k", "j", "j", 4, "k"),
        ],
    );
    o.require(
        bol.binary() == &binary,
        "binary table is exactly [j,k] = [k,j] = 6i",
    );
    o.require(
        bol.ternary() == &ternary,
        "ternary table is exactly the six printed entries",
    );
    o
}

fn c3() -> Outcome {
    let mut o = Outcome::new();
    let ra = builtin::right_alt3();
    for conv in [Convention::Unit, Convention::Half] {
        let bol = bol_from_right_alternative(&ra, conv, Preconditions::Checked).unwrap();
        let r = passes(
            &StructureBinding::for_binary_ternary(&bol).with_convention(conv),
            SuiteName::Bol,
        );
        let quintuples = r.result("ternary_derivation").map(|c| c.tuples_checked);
        o.require(
            r.passed() && quintuples == Some(243),
            format!(
                "{} convention: BOL passes, derivation axiom on 243 quintuples",
                conv.name()
            ),
        );
    }
    o
}

fn c4() -> Outcome {
    let mut o = Outcome::new();
    let r = passes(
        &StructureBinding::for_binary_ternary(&builtin::maltsev_bol3()),
        SuiteName::Bol,
    );
    o.require(r.passed(), "maltsev_bol3 passes BOL");
    o
}

/// `[βj, βj]_β = 12ab·i` while `β([j,j]_β) = 0`: the only violated axiom.
fn twist_failure_matches(r: &SuiteReport, a: &Scalar, b: &Scalar) -> bool {
    let failing: Vec<_> = r.results.iter().filter(|c| !c.passed()).collect();
    let [only] = failing.as_slice() else {
        return false;
    };
    let Some(cx) = &only.counterexample else {
        return false;
    };
    only.identity == "twist_preserves_binary"
        && cx.vars == ["j", "j"]
        && cx.residue == vec![("i".to_string(), -(int(12) * a * b))]
}

fn hombol_instance(a: &Scalar, b: &Scalar) -> HomBinaryTernary {
    let beta = builtin::right_alt3_beta(a.clone(), b.clone()).unwrap();
    yau_twist_bol(
        &builtin::right_alt3_bol(),
        &beta,
        1,
        Preconditions::Unchecked,
    )
    .unwrap()
}

fn criterion5_params() -> [(Scalar, Scalar); 3] {
    [(int(2), int(3)), (int(-1), int(0)), (rat(1, 2), int(5))]
}

fn c5() -> Outcome {
    let mut o = Outcome::new();
    let t = hombol_instance(&int(2), &int(3));
    o.require(
        t.binary().constant([1, 2]) == Element::basis_scaled(0, int(12)),
        "[j,k]_β = 12i",
    );
    o.require(
        t.ternary().constant([0, 1, 1]) == Element::basis_scaled(0, int(16)),
        "{i,j,j}_β = 16i",
    );
    for (a, b) in criterion5_params() {
        let t = hombol_instance(&a, &b);
        let r = passes(&StructureBinding::for_binary_ternary(&t), SuiteName::HomBol);
        let what = format!("β({a},{b}): HOM_BOL with twist β");
        if b == int(0) {
            o.require(r.passed(), what);
        } else {
            o.analyzed(
                twist_failure_matches(&r, &a, &b),
                format!("{what}; β is not a morphism of the bracket, residue −12ab·i at (j, j)"),
            );
        }
    }
    o
}

fn c6() -> Outcome {
    let mut o = Outcome::new();
    let plus = plus_algebra(&builtin::right_alt3(), Convention::Unit);
    let r = passes(
        &StructureBinding::for_algebra(&plus, Convention::Unit),
        SuiteName::HomJordan,
    );
    let quads = r
        .result("hom_jordan_superidentity")
        .map(|c| c.tuples_checked);
    o.require(
        r.passed() && quads == Some(81),
        "plus algebra passes HOM_JORDAN over 81 quadruples",
    );
    o
}

fn c7() -> Outcome {
    let mut o = Outcome::new();
    let tw = builtin::right_alt3_twisted(int(2)).unwrap();
    let beta = builtin::right_alt3_beta(int(2), int(0)).unwrap();
    let r = passes(
        &StructureBinding::for_algebra(&tw, Convention::Unit),
        SuiteName::RightHomAlt,
    );
    o.require(r.passed(), "twisted instance passes RIGHT_HOM_ALT");
    let p = hom_bol_pipeline(&tw, Convention::Unit, Preconditions::Checked).unwrap();
    o.require(p.bol.twist() == &beta.pow(2), "pipeline twist is β²");
    let r = passes(
        &StructureBinding::for_binary_ternary(&p.bol),
        SuiteName::HomBol,
    );
    o.require(r.passed(), "pipeline output passes HOM_BOL");
    let r = passes(
        &StructureBinding::for_algebra(&p.plus, Convention::Unit),
        SuiteName::HomJordan,
    );
    o.require(r.passed(), "plus stage passes HOM_JORDAN");
    let r = passes(
        &StructureBinding::for_triple(&p.jordan_triple),
        SuiteName::HomJordanTriple,
    );
    o.require(r.passed(), "Jordan triple stage passes HOM_JORDAN_TRIPLE");
    let r = passes(
        &StructureBinding::for_triple(&p.lie_triple),
        SuiteName::HomLieTriple,
    );
    o.require(r.passed(), "Lie triple stage passes HOM_LIE_TRIPLE");
    o
}

fn c8() -> Outcome {
    let mut o = Outcome::new();
    let ra = builtin::right_alt3();
    for conv in [Convention::Unit, Convention::Half] {
        let direct = bol_from_right_alternative(&ra, conv, Preconditions::Checked).unwrap();
        let pipeline = hom_bol_pipeline(&ra, conv, Preconditions::Checked).unwrap();
        o.require(
            direct.ternary() == pipeline.bol.ternary() && direct.binary() == pipeline.bol.binary(),
            format!(
                "{}: pipeline tensors equal the direct Bol tensors",
                conv.name()
            ),
        );
        let r = passes(
            &StructureBinding::for_algebra(&ra, conv),
            SuiteName::TernaryClosedForm,
        );
        o.require(
            all_counts(&r, 27),
            format!(
                "{}: both ternary closed forms agree on all 27 triples",
                conv.name()
            ),
        );
    }
    o
}

fn c9() -> Outcome {
    let mut o = Outcome::new();
    let ra = StructureBinding::for_algebra(&builtin::right_alt3(), Convention::Unit);
    let tw = StructureBinding::for_algebra(
        &builtin::right_alt3_twisted(int(2)).unwrap(),
        Convention::Unit,
    );
    let r = passes(&ra, SuiteName::BracketAssociator);
    o.require(
        all_counts(&r, 81),
        "BRACKET_ASSOCIATOR on right_alt3, 81 quadruples",
    );
    for s in [
        SuiteName::HomBracketAssociator,
        SuiteName::HomProductAssociator,
        SuiteName::HomJordanAssociator,
        SuiteName::HomTernaryClosedForm,
    ] {
        o.require(
            passes(&tw, s).passed(),
            format!("{s} on the twisted instance"),
        );
    }
    o.require(
        passes(&ra, SuiteName::HomTernaryClosedForm).passed(),
        "HOM_TERNARY_CLOSED_FORM on right_alt3",
    );
    o
}

fn c10() -> Outcome {
    let mut o = Outcome::new();
    let plus = plus_algebra(&builtin::right_alt3(), Convention::Unit);
    let r = verify_operator_lemmas(&plus, Preconditions::Checked).unwrap();
    for c in &r.results {
        o.require(c.passed(), c.to_string());
    }
    o
}

fn c11() -> Outcome {
    let mut o = Outcome::new();
    for lambda in [1, -2] {
        let t = builtin::jordan_form_triple(int(lambda));
        let r = passes(&StructureBinding::for_triple(&t), SuiteName::JordanTriple);
        o.require(r.passed(), format!("λ = {lambda}: JORDAN_TRIPLE"));
        let iso = builtin::jordan_form_isometry();
        o.require(
            builtin::jordan_form().is_preserved_by(&iso),
            "β preserves the form",
        );
        let tw = yau_twist_triple(&t, &iso, 1, Preconditions::Checked).unwrap();
        let r = passes(
            &StructureBinding::for_triple(&tw),
            SuiteName::HomJordanTriple,
        );
        o.require(
            r.passed(),
            format!("λ = {lambda}: twisted triple passes HOM_JORDAN_TRIPLE"),
        );
    }
    o
}

fn c12() -> Outcome {
    let mut o = Outcome::new();
    for (a, b) in criterion5_params() {
        let t = hombol_instance(&a, &b);
        for n in 0..3 {
            let d = nth_derived(&t, n).unwrap();
            if n == 0 {
                o.require(d == t, format!("β({a},{b}): level 0 is the input"));
            }
            let r = passes(&StructureBinding::for_binary_ternary(&d), SuiteName::HomBol);
            let what = format!("β({a},{b}), level {n}: HOM_BOL");
            if b == int(0) {
                o.require(r.passed(), what);
            } else {
                let cx = r.first_failure().and_then(|c| c.counterexample.clone());
                let ok = r.results.iter().filter(|c| !c.passed()).count() == 1
                    && r.first_failure().map(|c| c.identity.as_str())
                        == Some("twist_preserves_binary")
                    && cx.is_some_and(|c| c.vars == ["j", "j"]);
                o.analyzed(
                    ok,
                    format!("{what}; only the twist morphism check fails, at (j, j)"),
                );
            }
        }
    }
    o
}

/// Five perturbations each of `right_alt3` (RIGHT_ALT) and `maltsev_bol3` (BOL).
fn c13() -> Outcome {
    let mut o = Outcome::new();
    let ra = builtin::right_alt3();
    let binary_changes: [([usize; 2], usize, i64); 5] = [
        ([1, 2], 0, 3),
        ([2, 1], 0, 5),
        ([0, 1], 2, 2),
        ([1, 0], 2, -1),
        ([0, 0], 0, 1),
    ];
    for (key, target, c) in binary_changes {
        let t = common::perturb_binary(ra.product(), key, target, int(c));
        let a = HomSuperalgebra::untwisted(t).unwrap();
        let b = StructureBinding::for_algebra(&a, Convention::Unit);
        let what = format!("right_alt3 with constant {key:?}→{target} set to {c}");
        deterministic_failure(&mut o, &b, SuiteName::RightAlt, &what);
    }
    let mb = builtin::maltsev_bol3();
    let mutate = |binary: Option<([usize; 2], usize, i64)>,
                  ternary: Option<([usize; 3], usize, i64)>| {
        let bin = match binary {
            Some((k, t, c)) => common::perturb_binary(mb.binary(), k, t, int(c)),
            None => mb.binary().clone(),
        };
        let ter = match ternary {
            Some((k, t, c)) => common::perturb_ternary(mb.ternary(), k, t, int(c)),
            None => mb.ternary().clone(),
        };
        HomBinaryTernary::new(bin, ter, mb.twist().clone()).unwrap()
    };
    let cases = [
        ("[k,i] = -2k", mutate(Some(([2, 0], 2, -2)), None)),
        ("[i,j] = 2j", mutate(Some(([0, 1], 1, 2)), None)),
        ("[j,i] = 0", mutate(Some(([1, 0], 1, 0)), None)),
        ("{i,j,i} = -2j", mutate(None, Some(([0, 1, 0], 1, -2)))),
        ("{k,i,i} = 3k", mutate(None, Some(([2, 0, 0], 2, 3)))),
    ];
    for (what, m) in cases {
        let b = StructureBinding::for_binary_ternary(&m);
        deterministic_failure(
            &mut o,
            &b,
            SuiteName::Bol,
            &format!("maltsev_bol3 with {what}"),
        );
    }
    o
}

fn deterministic_failure(o: &mut Outcome, b: &StructureBinding, s: SuiteName, what: &str) {
    let r = passes(b, s);
    let Some(first) = r.first_failure() else {
        o.require(false, format!("{what}: {s} should fail"));
        return;
    };
    let id = suite(s, b.convention())
        .into_iter()
        .find(|i| i.name == first.identity)
        .unwrap();
    let b = common::suite_binding(b, s);
    let same = (1..=4).all(|t| check_with_threads(&b, &id, t).unwrap() == *first);
    let cx = first.counterexample.as_ref().unwrap();
    o.require(
        same,
        format!(
            "{what}: {s} fails at {} ({}), same tuple for 1–4 threads",
            first.identity,
            cx.vars.join(", ")
        ),
    );
}

fn c14() -> Outcome {
    let mut o = Outcome::new();
    let cases = common::completeness_cases(100, 0x5eed);
    let bad: Vec<_> = cases.iter().filter(|c| !c.agrees()).collect();
    let failing = cases.iter().filter(|c| !c.basis_pass).count();
    o.require(
        bad.is_empty(),
        format!(
            "{} identity/fixture pairs ({} failing), 100 random samples each, {} disagreements",
            cases.len(),
            failing,
            bad.len()
        ),
    );
    for c in bad {
        o.notes.push(format!(
            "  disagreement: {} {} {}",
            c.fixture, c.suite, c.identity
        ));
    }
    o
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        ("right alternative fixture passes RIGHT_ALT", c1),
        ("Bol tables of the right alternative fixture", c2),
        ("Bol output passes BOL under both conventions", c3),
        ("Maltsev-type fixture passes BOL", c4),
        ("Yau twist of the Bol fixture", c5),
        ("plus algebra passes HOM_JORDAN", c6),
        ("Hom-Bol pipeline on the twisted instance", c7),
        ("pipeline and direct Bol constructions agree", c8),
        ("associator identity suites", c9),
        ("operator identities on the plus algebra", c10),
        ("bilinear-form triples and their twists", c11),
        ("derived Hom-Bol levels 0, 1, 2", c12),
        ("mutation sensitivity", c13),
        ("checker completeness oracle", c14),
    ];
    let mut unexpected = 0;
    for (n, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let verdict = match o.status {
            Status::Pass => "PASS",
            Status::Analyzed => "FAIL (analyzed)",
            Status::Fail => {
                unexpected += 1;
                "FAIL"
            }
        };
        println!(
            "criterion {:>2}: {verdict:<15} {title} [{:.2}s]",
            n + 1,
            start.elapsed().as_secs_f64()
        );
        for note in &o.notes {
            println!("    {note}");
        }
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria failed unexpectedly");
        ExitCode::FAILURE
    }
}
