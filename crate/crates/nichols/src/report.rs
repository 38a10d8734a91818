//! Report assembly and rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use nichols_core::report::Status;
use serde::Serialize;

use crate::config::RunConfig;
use crate::suites::SuiteRun;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ReportConfig {
    pub max_degree: usize,
    pub oracle_bound: usize,
    pub profile: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct ReportEntry {
    pub suite: String,
    pub check: String,
    pub instance: String,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct Report {
    pub suite: String,
    pub system: String,
    pub seed: u64,
    pub config: ReportConfig,
    pub hilbert: Vec<usize>,
    pub closed: bool,
    pub notes: BTreeMap<String, String>,
    pub summary: Summary,
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn new(suite: &str, config: &RunConfig, hilbert: Vec<usize>, closed: bool, run: &SuiteRun) -> Self {
        let count = |s: Status| run.entries.iter().filter(|e| e.outcome.status == s).count();
        Report {
            suite: suite.to_string(),
            system: config.system.to_string(),
            seed: config.seed,
            config: ReportConfig {
                max_degree: config.max_degree,
                oracle_bound: config.oracle_bound,
                profile: config.profile.to_string(),
            },
            hilbert,
            closed,
            notes: run.notes.iter().cloned().collect(),
            summary: Summary {
                pass: count(Status::Pass),
                fail: count(Status::Fail),
                skipped: count(Status::Skipped),
            },
            entries: run
                .entries
                .iter()
                .map(|e| ReportEntry {
                    suite: e.suite.to_string(),
                    check: e.outcome.check.clone(),
                    instance: e.outcome.instance.clone(),
                    status: e.outcome.status.as_str().to_string(),
                    witness: e.outcome.witness.clone(),
                    elapsed_ms: Some(e.elapsed_ms),
                })
                .collect(),
        }
    }

    pub fn failed(&self) -> bool {
        self.summary.fail > 0
    }

    /// The report with timing removed, for comparing runs.
    pub fn without_timing(&self) -> Report {
        let mut r = self.clone();
        for e in &mut r.entries {
            e.elapsed_ms = None;
        }
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "suite {} system {} seed {} profile {}",
            self.suite, self.system, self.seed, self.config.profile
        );
        for e in &self.entries {
            let _ = write!(s, "{:<7} {:<12} {} {}", e.status.to_uppercase(), e.suite, e.check, e.instance);
            if let Some(w) = &e.witness {
                let _ = write!(s, " -- {w}");
            }
            s.push('\n');
        }
        for (k, v) in &self.notes {
            let _ = writeln!(s, "note {k} = {v}");
        }
        let _ = writeln!(
            s,
            "{} passed, {} failed, {} skipped",
            self.summary.pass, self.summary.fail, self.summary.skipped
        );
        s
    }
}
