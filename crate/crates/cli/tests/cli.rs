use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn superbol(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superbol"))
        .args(args)
        .env_remove("SUPERBOL_THREADS")
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) {
    let o = superbol(args);
    assert_eq!(code(&o), 0, "{args:?}: {}{}", stdout(&o), stderr(&o));
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(dir: &TempDir, name: &str) -> PathBuf {
    dir.path().join(name)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn emit(dir: &TempDir, example: &str) -> PathBuf {
    let out = path(
        dir,
        &format!("{}.json", example.replace(['(', ')', ','], "_")),
    );
    let o = superbol(&["examples", "--emit", example, "-o", s(&out)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    out
}

#[test]
fn right_alternative_fixture_checks() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "right_alt3");
    let o = superbol(&["check", s(&f), "--suite", "RIGHT_ALT"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("PASS right_superalternativity (27 tuples)"));
}

#[test]
fn bol_construction_round_trip() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "right_alt3");
    let bol = path(&dir, "bol.json");
    ok(&["construct", "bol", s(&f), "-o", s(&bol)]);
    ok(&["check", s(&bol), "--suite", "BOL"]);
}

#[test]
fn mutation_reports_a_counterexample() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "right_alt3");
    let mut v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
    for e in v["binary"].as_array_mut().unwrap() {
        if e[0] == "j" && e[1] == "k" {
            e[3] = "3".into();
        }
    }
    let mutated = path(&dir, "mutated.json");
    std::fs::write(&mutated, v.to_string()).unwrap();
    let o = superbol(&["check", s(&mutated), "--suite", "RIGHT_ALT", "--json"]);
    assert_eq!(code(&o), 1);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["suite"], "RIGHT_ALT");
    let first = &report["results"][0];
    assert_eq!(first["identity"], "right_superalternativity");
    assert_eq!(first["verdict"], "fail");
    assert_eq!(
        first["counterexample"]["vars"],
        serde_json::json!(["j", "i", "j"])
    );
    assert_eq!(
        first["counterexample"]["residue"],
        serde_json::json!({"i": "-2"})
    );
}

#[test]
fn reports_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "right_alt3_hombol(2,3)");
    let args = ["check", s(&f), "--suite", "HOM_BOL", "--json"];
    let first = superbol(&args);
    assert_eq!(code(&first), 1);
    let again = superbol(&args);
    let threaded = Command::new(env!("CARGO_BIN_EXE_superbol"))
        .args(args)
        .env("SUPERBOL_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(first.stdout, again.stdout);
    assert_eq!(first.stdout, threaded.stdout);
}

#[test]
fn hom_bol_pipeline_through_the_cli() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "right_alt3");
    let tw = path(&dir, "tw.json");
    let o = superbol(&["twist", s(&f), "--map", "beta", "-n", "1", "-o", s(&tw)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    ok(&["check", s(&tw), "--suite", "RIGHT_HOM_ALT"]);
    let hb = path(&dir, "hb.json");
    ok(&["construct", "hom_bol", s(&tw), "-o", s(&hb)]);
    ok(&["check", s(&hb), "--suite", "HOM_BOL"]);
    for n in ["0", "1", "2"] {
        let d = path(&dir, &format!("d{n}.json"));
        ok(&["derive", s(&hb), "-n", n, "-o", s(&d)]);
        ok(&["check", s(&d), "--suite", "HOM_BOL"]);
    }
}

#[test]
fn triple_constructions() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "right_alt3");
    let plus = path(&dir, "plus.json");
    ok(&["construct", "plus", s(&f), "-o", s(&plus)]);
    ok(&["check", s(&plus), "--suite", "JORDAN"]);
    let jt = path(&dir, "jt.json");
    ok(&["construct", "jordan_triple", s(&plus), "-o", s(&jt)]);
    ok(&["check", s(&jt), "--suite", "HOM_JORDAN_TRIPLE"]);
    let lt = path(&dir, "lt.json");
    ok(&["construct", "lie_triple", s(&jt), "-o", s(&lt)]);
    ok(&["check", s(&lt), "--suite", "HOM_LIE_TRIPLE"]);
    let lts = path(&dir, "lts.json");
    ok(&["construct", "lts_bracket", s(&plus), "-o", s(&lts)]);
    ok(&["check", s(&lts), "--suite", "LIE_TRIPLE"]);
    let minus = path(&dir, "minus.json");
    ok(&["construct", "minus", s(&f), "-o", s(&minus)]);
}

#[test]
fn failed_hypotheses_exit_one() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "right_alt3");
    let out = path(&dir, "x.json");
    let o = superbol(&["construct", "lts_bracket", s(&f), "-o", s(&out)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL supercommutativity"));
    assert!(!out.exists());
    let o = superbol(&[
        "construct",
        "lts_bracket",
        s(&f),
        "-o",
        s(&out),
        "--unchecked",
    ]);
    assert_eq!(code(&o), 0);

    let bol = emit(&dir, "right_alt3_hombol(2,3)");
    let o = superbol(&["lemmas", s(&f)]);
    assert_eq!(code(&o), 1);
    let o = superbol(&["derive", s(&f), "-n", "1", "-o", s(&out)]);
    assert_eq!(code(&o), 2);
    let o = superbol(&["twist", s(&bol), "--map", "missing", "-o", s(&out)]);
    assert_eq!(code(&o), 2);
}

#[test]
fn operator_identities() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "right_alt3");
    let plus = path(&dir, "plus.json");
    ok(&["construct", "plus", s(&f), "-o", s(&plus)]);
    let o = superbol(&["lemmas", s(&plus), "--json"]);
    assert_eq!(code(&o), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["suite"], "OPERATOR_LEMMAS");
    assert!(report["results"].as_array().unwrap().len() > 10);
}

#[test]
fn input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let f = emit(&dir, "right_alt3");
    let o = superbol(&["check", s(&f), "--suite", "NOT_A_SUITE"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("unknown suite"));
    let o = superbol(&["check", s(&path(&dir, "absent.json")), "--suite", "BOL"]);
    assert_eq!(code(&o), 2);
    let o = superbol(&["check", s(&f)]);
    assert_eq!(code(&o), 2);
    let o = superbol(&["check", s(&f), "--suite", "BOL"]);
    assert_eq!(code(&o), 2, "a superalgebra has no ternary product");

    let bad = path(&dir, "bad.json");
    std::fs::write(
        &bad,
        r#"{"name": "bad", "kind": "hom_superalgebra",
            "basis": [{"name": "i", "parity": 0}, {"name": "j", "parity": 1}],
            "binary": [["i", "j", "i", "1"]]}"#,
    )
    .unwrap();
    let o = superbol(&["info", s(&bad)]);
    assert_eq!(code(&o), 2);
    let err = stderr(&o);
    assert!(
        err.contains("binary[0]") && err.contains("grading violated"),
        "{err}"
    );

    std::fs::write(&bad, "{\n  \"name\": \"bad\",\n  oops\n}").unwrap();
    let o = superbol(&["info", s(&bad)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn every_example_reloads_and_verifies() {
    let dir = TempDir::new().unwrap();
    let list = stdout(&superbol(&["examples", "--list"]));
    assert!(list.contains("right_alt3_hombol(a,b)"));
    for (example, suite) in [
        ("maltsev_bol3", "BOL"),
        ("right_alt3", "RIGHT_ALT"),
        ("right_alt3_bol", "BOL"),
        ("right_alt3_hombol(-1,0)", "HOM_BOL"),
        ("right_alt3_twisted(2)", "RIGHT_HOM_ALT"),
        ("jordan_form_triple(-2)", "JORDAN_TRIPLE"),
        ("gl11", "HOM_ALT"),
    ] {
        let f = emit(&dir, example);
        let o = superbol(&["check", s(&f), "--suite", suite]);
        assert_eq!(code(&o), 0, "{example}: {}", stdout(&o));
        let info = superbol(&["info", s(&f)]);
        assert_eq!(code(&info), 0);
        assert!(stdout(&info).contains(example), "{}", stdout(&info));
    }
    let o = superbol(&[
        "examples",
        "--emit",
        "octonions",
        "-o",
        s(&path(&dir, "o.json")),
    ]);
    assert_eq!(code(&o), 2);
}
