mod common;

#[test]
fn basis_verdicts_agree_with_random_evaluation() {
    let cases = common::completeness_cases(100, 0x5eed);
    let disagreements: Vec<String> = cases
        .iter()
        .filter(|c| !c.agrees())
        .map(|c| {
            format!(
                "{} {} {}: basis {} random {}",
                c.fixture, c.suite, c.identity, c.basis_pass, c.random_pass
            )
        })
        .collect();
    assert!(disagreements.is_empty(), "{disagreements:#?}");
    // the fixtures include failing cases, so agreement is not vacuous
    assert!(cases.iter().any(|c| !c.basis_pass));
    assert!(cases.iter().any(|c| c.basis_pass));
}
