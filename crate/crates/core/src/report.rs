//! Verdicts produced by every checker in the crate.

use std::fmt;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::graded::{Element, Scalar, SuperSpace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// The first failing tuple and what the identity evaluated to there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub vars: Vec<String>,
    #[serde(serialize_with = "residue_as_map")]
    pub residue: Vec<(String, Scalar)>,
}

fn residue_as_map<S: Serializer>(residue: &[(String, Scalar)], ser: S) -> Result<S::Ok, S::Error> {
    let mut map = ser.serialize_map(Some(residue.len()))?;
    for (name, c) in residue {
        map.serialize_entry(name, &c.to_string())?;
    }
    map.end()
}

impl Counterexample {
    pub fn new(space: &SuperSpace, vars: Vec<String>, residue: &Element) -> Counterexample {
        Counterexample {
            vars,
            residue: residue
                .support()
                .map(|(idx, c)| (space.name(idx).to_string(), c.clone()))
                .collect(),
        }
    }

    pub fn residue_text(&self) -> String {
        if self.residue.is_empty() {
            return "0".into();
        }
        self.residue
            .iter()
            .map(|(name, c)| format!("{c}*{name}"))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub identity: String,
    pub verdict: Verdict,
    pub tuples_checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl CheckReport {
    pub fn pass(identity: impl Into<String>, tuples_checked: u64) -> CheckReport {
        CheckReport {
            identity: identity.into(),
            verdict: Verdict::Pass,
            tuples_checked,
            counterexample: None,
        }
    }

    pub fn fail(
        identity: impl Into<String>,
        tuples_checked: u64,
        counterexample: Counterexample,
    ) -> CheckReport {
        CheckReport {
            identity: identity.into(),
            verdict: Verdict::Fail,
            tuples_checked,
            counterexample: Some(counterexample),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.counterexample {
            None => write!(f, "PASS {} ({} tuples)", self.identity, self.tuples_checked),
            Some(c) => write!(
                f,
                "FAIL {} ({} tuples) at ({}): residue {}",
                self.identity,
                self.tuples_checked,
                c.vars.join(", "),
                c.residue_text()
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub results: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, results: Vec<CheckReport>) -> SuiteReport {
        SuiteReport {
            suite: suite.into(),
            results,
        }
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(CheckReport::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckReport> {
        self.results.iter().find(|r| !r.passed())
    }

    pub fn result(&self, identity: &str) -> Option<&CheckReport> {
        self.results.iter().find(|r| r.identity == identity)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{verdict} suite {}", self.suite)?;
        for r in &self.results {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}
