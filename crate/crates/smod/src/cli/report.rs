//! JSON report emitted by `verify` and the other commands that accept
//! `--out`. Field order is fixed by declaration, the trial list is
//! ordered by trial index, and no wall-clock times are recorded, so a
//! report is byte-identical across runs with the same inputs and seed.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub task: TaskEcho,
    pub trials: Vec<TrialRecord>,
    pub summary: Summary,
}

/// Echo of what was asked, so a report is meaningful on its own.
#[derive(Debug, Clone, Serialize)]
pub struct TaskEcho {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<String>,
    pub inputs: Vec<String>,
    pub trials: usize,
    pub seed: u64,
    pub bound: i64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TrialRecord {
    /// Coordinates of alpha as rational literals.
    pub alpha: Vec<String>,
    pub pass: bool,
    pub detail: String,
    /// Certificate factors accumulated up to the end of this trial.
    pub cert_factors: Vec<String>,
    /// Kept at 0: reports are byte-reproducible, timings are not.
    pub ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

impl Report {
    pub fn new(task: TaskEcho) -> Self {
        Report {
            task,
            trials: Vec::new(),
            summary: Summary { pass: 0, fail: 0 },
        }
    }

    pub fn push(&mut self, trial: TrialRecord) {
        if trial.pass {
            self.summary.pass += 1;
        } else {
            self.summary.fail += 1;
        }
        self.trials.push(trial);
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn write(&self, path: &std::path::Path) -> Result<()> {
        std::fs::write(path, self.to_json())
            .map_err(|e| Error::input(format!("{}: {e}", path.display())))
    }
}
