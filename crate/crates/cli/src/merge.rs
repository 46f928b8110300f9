//! Aggregation of check reports.

use std::collections::BTreeMap;

use gyrokit::{CheckReport, Verdict};
use serde::{Deserialize, Serialize};

/// Counts for all reports sharing one check name.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCounts {
    pub check: String,
    pub reports: u64,
    pub passed: u64,
    pub failed: u64,
    pub tuples: u64,
    pub violations: u64,
    pub counterexamples: u64,
}

impl CheckCounts {
    fn absorb(&mut self, r: &CheckReport) {
        self.reports += 1;
        if r.passed() {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        self.tuples += r.tuples;
        self.violations += r.violations.len() as u64;
        self.counterexamples += r.counterexamples.len() as u64;
    }
}

/// Pass/fail summary over a set of reports, ordered by check name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub verdict: Verdict,
    pub checks: Vec<CheckCounts>,
    pub totals: CheckCounts,
    pub failing: Vec<String>,
}

pub fn report_merge(reports: &[CheckReport]) -> Summary {
    let mut by_name: BTreeMap<&str, CheckCounts> = BTreeMap::new();
    let mut totals = CheckCounts {
        check: "total".into(),
        ..CheckCounts::default()
    };
    for r in reports {
        by_name
            .entry(&r.check)
            .or_insert_with(|| CheckCounts {
                check: r.check.clone(),
                ..CheckCounts::default()
            })
            .absorb(r);
        totals.absorb(r);
    }
    let checks: Vec<CheckCounts> = by_name.into_values().collect();
    let failing: Vec<String> = checks.iter().filter(|c| c.failed > 0).map(|c| c.check.clone()).collect();
    Summary {
        verdict: if failing.is_empty() { Verdict::Pass } else { Verdict::Fail },
        checks,
        totals,
        failing,
    }
}
