//! Theorem reports: per-direction premise/conclusion verdicts and an overall status.

use serde::{Deserialize, Serialize};

use crate::verdict::ConditionVerdict;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "consistent")]
    Consistent,
    #[serde(rename = "violation-found")]
    ViolationFound,
    #[serde(rename = "indeterminate")]
    Indeterminate,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Consistent => "consistent",
            Status::ViolationFound => "violation-found",
            Status::Indeterminate => "indeterminate",
        }
    }

    /// Combine statuses: any violation wins, then any indeterminate.
    pub fn combine(self, other: Status) -> Status {
        use Status::*;
        match (self, other) {
            (ViolationFound, _) | (_, ViolationFound) => ViolationFound,
            (Indeterminate, _) | (_, Indeterminate) => Indeterminate,
            _ => Consistent,
        }
    }
}

/// How an assertion was evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Analytic formula for a closed-form family.
    ClosedForm,
    /// Every index of the truncation with explicit constants.
    Exhaustive,
    /// Every point of a log-spaced grid with explicit constants.
    Grid,
    /// Constant ladder search plus window-ladder classification.
    LadderSearch,
    /// Structural invariant of the representation.
    Structural,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Assertion {
    pub statement: String,
    pub method: Method,
    pub verdict: ConditionVerdict,
}

impl Assertion {
    pub fn new(statement: impl Into<String>, method: Method, verdict: ConditionVerdict) -> Self {
        Assertion {
            statement: statement.into(),
            method,
            verdict,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DirectionReport {
    pub label: String,
    pub premise: Assertion,
    pub conclusion: Assertion,
    /// Parameter correspondences used, e.g. `"a' = 2a = 4"`.
    pub correspondence: Vec<String>,
    pub status: Status,
}

impl DirectionReport {
    pub fn new(label: impl Into<String>, premise: Assertion, conclusion: Assertion, correspondence: Vec<String>) -> Self {
        let status = implication_status(&premise.verdict, &conclusion.verdict);
        DirectionReport {
            label: label.into(),
            premise,
            conclusion,
            correspondence,
            status,
        }
    }
}

/// A violation needs a certified premise and a certified failed conclusion; a
/// heuristic failure can only make the direction indeterminate.
pub fn implication_status(premise: &ConditionVerdict, conclusion: &ConditionVerdict) -> Status {
    if !premise.holds || conclusion.holds {
        Status::Consistent
    } else if premise.certified && conclusion.certified {
        Status::ViolationFound
    } else {
        Status::Indeterminate
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub inputs: Vec<String>,
    pub directions: Vec<DirectionReport>,
    pub status: Status,
    pub seed: Option<u64>,
    pub notes: Vec<String>,
}

impl TheoremReport {
    pub fn new(theorem: impl Into<String>, inputs: Vec<String>) -> Self {
        TheoremReport {
            theorem: theorem.into(),
            inputs,
            directions: Vec::new(),
            status: Status::Consistent,
            seed: None,
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, d: DirectionReport) {
        self.status = self.status.combine(d.status);
        self.directions.push(d);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn direction(&self, label: &str) -> Option<&DirectionReport> {
        self.directions.iter().find(|d| d.label == label)
    }
}

/// A premise that holds by construction (e.g. membership of a generated input).
pub fn given(statement: &str) -> Assertion {
    Assertion::new(statement, Method::Structural, ConditionVerdict::new(statement).exact_pass())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_rules() {
        let pass = ConditionVerdict::new("p").exact_pass();
        let fail = ConditionVerdict::new("c").exact_fail();
        let mut soft_fail = ConditionVerdict::new("c");
        soft_fail.holds = false;
        assert_eq!(implication_status(&pass, &fail), Status::ViolationFound);
        assert_eq!(implication_status(&pass, &soft_fail), Status::Indeterminate);
        assert_eq!(implication_status(&fail, &fail), Status::Consistent);
        assert_eq!(implication_status(&pass, &pass), Status::Consistent);
        assert_eq!(
            Status::Consistent.combine(Status::Indeterminate).combine(Status::Consistent),
            Status::Indeterminate
        );
    }

    #[test]
    fn status_serializes_with_hyphen() {
        assert_eq!(serde_json::to_string(&Status::ViolationFound).unwrap(), "\"violation-found\"");
    }
}
