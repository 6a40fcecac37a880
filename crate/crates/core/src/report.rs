//! Check records collected by the verification suites.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Unresolved,
}

/// One named check and the size of its residual (0 when it passes).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub residual_terms: usize,
}

impl Check {
    /// Passes iff the residual has no terms.
    pub fn from_residual(id: impl Into<String>, residual_terms: usize) -> Self {
        let status = if residual_terms == 0 { Status::Pass } else { Status::Fail };
        Check { id: id.into(), status, residual_terms }
    }

    pub fn flag(id: impl Into<String>, ok: bool) -> Self {
        Check { id: id.into(), status: if ok { Status::Pass } else { Status::Fail }, residual_terms: usize::from(!ok) }
    }
}

/// Evaluation point recorded with a report; `None` means symbolic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub t: Option<String>,
    pub u: Option<String>,
    pub omega: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub params: Params,
    pub checks: Vec<Check>,
    pub exit: i32,
}

impl Report {
    /// Builds a report with checks sorted by id and the exit code derived
    /// from their statuses.
    pub fn new(suite: impl Into<String>, params: Params, mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let exit = if checks.iter().all(|c| c.status == Status::Pass) { 0 } else { 1 };
        Report { suite: suite.into(), params, checks, exit }
    }

    pub fn passed(&self) -> bool {
        self.exit == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status != Status::Pass)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// Merges several reports into one suite.
    pub fn merge(suite: impl Into<String>, params: Params, parts: Vec<Report>) -> Self {
        let checks = parts.into_iter().flat_map(|r| r.checks).collect();
        Report::new(suite, params, checks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_exit_code() {
        let r =
            Report::new("demo", Params::default(), vec![Check::from_residual("b", 0), Check::from_residual("a", 2)]);
        assert_eq!(r.checks[0].id, "a");
        assert_eq!(r.exit, 1);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"status\":\"fail\""));
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }
}
