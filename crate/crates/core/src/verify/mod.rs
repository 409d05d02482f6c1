//! Verification suites over small root systems, producing JSON reports.

mod checks;
mod context;
mod suites;

pub use checks::{check_case, Case, Outcome};
pub use context::{AnyGrader, Context, Setup};
pub use suites::{cases_for, run_suite, Suite};

use serde::{Deserialize, Serialize};

use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub case: Case,
    pub lhs: String,
    pub rhs: String,
}

/// Instance-level result for informational suites.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub case: Case,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub system: String,
    /// 1-based
    pub parabolic: Vec<usize>,
    /// 1-based; empty for a reducible parabolic
    pub order: Vec<usize>,
    pub regime: String,
    pub informational: bool,
    pub total: usize,
    pub passes: usize,
    pub vacuous: usize,
    pub failures: Vec<Failure>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<Verdict>,
    pub elapsed_ms: u128,
}

impl Report {
    /// Whether the suite should be treated as passing (informational suites
    /// always do).
    pub fn ok(&self) -> bool {
        self.informational || self.failures.is_empty()
    }

    /// Same report without timing, for determinism comparisons.
    pub fn without_timing(&self) -> Report {
        Report { elapsed_ms: 0, ..self.clone() }
    }
}

/// Re-run one case against freshly built modules.
pub fn replay(setup: &Setup, case: &Case) -> Result<Outcome> {
    let ctx = Context::new(setup)?;
    check_case(&ctx, case)
}
