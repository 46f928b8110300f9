use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Gyrogroup, Strategy};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn is_pass(self) -> bool {
        self == Verdict::Pass
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// One violated property together with the tuple that witnesses it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub item: String,
    pub witness: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residual: Option<f64>,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

/// Outcome of a check. `verdict` is pass iff `violations` is empty and
/// `max_residual <= tolerance`. `counterexamples` holds informational
/// findings that do not affect the verdict.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub strategy: Strategy,
    pub tuples: u64,
    pub tolerance: f64,
    pub max_residual: f64,
    pub violations: Vec<Violation>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub counterexamples: Vec<Violation>,
    pub verdict: Verdict,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.verdict.is_pass()
    }

    /// Violations for a single item.
    pub fn violations_of<'a>(&'a self, item: &'a str) -> impl Iterator<Item = &'a Violation> + 'a {
        self.violations.iter().filter(move |v| v.item == item)
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{}: {} ({} tuples, {} violations, max residual {:e}, {})",
            self.check,
            self.verdict,
            self.tuples,
            self.violations.len(),
            self.max_residual,
            self.strategy
        )
    }
}

/// Accumulates violations and residuals into a [`CheckReport`].
pub struct ReportBuilder {
    report: CheckReport,
}

impl ReportBuilder {
    pub fn new(check: impl Into<String>, strategy: Strategy, tolerance: f64) -> Self {
        ReportBuilder {
            report: CheckReport {
                check: check.into(),
                strategy,
                tuples: 0,
                tolerance,
                max_residual: 0.0,
                violations: Vec::new(),
                counterexamples: Vec::new(),
                verdict: Verdict::Pass,
            },
        }
    }

    pub fn add_tuples(&mut self, n: u64) {
        self.report.tuples += n;
    }

    pub fn is_clean(&self) -> bool {
        self.report.violations.is_empty()
    }

    pub fn fail(&mut self, item: &str, witness: Vec<String>) {
        self.fail_with(item, witness, String::new());
    }

    pub fn fail_with(&mut self, item: &str, witness: Vec<String>, detail: String) {
        self.report.violations.push(Violation {
            item: item.to_owned(),
            witness,
            residual: None,
            detail,
        });
    }

    pub fn counterexample(&mut self, item: &str, witness: Vec<String>, detail: String) {
        self.report.counterexamples.push(Violation {
            item: item.to_owned(),
            witness,
            residual: None,
            detail,
        });
    }

    pub fn residual(&mut self, item: &str, r: f64, witness: impl FnOnce() -> Vec<String>) {
        if r.is_nan() || r > self.report.tolerance {
            self.report.violations.push(Violation {
                item: item.to_owned(),
                witness: witness(),
                residual: Some(r),
                detail: String::new(),
            });
        }
        if r.is_nan() {
            self.report.max_residual = f64::INFINITY;
        } else if r > self.report.max_residual {
            self.report.max_residual = r;
        }
    }

    /// Records `a` vs `b`: equality for exact models, a residual otherwise.
    pub fn compare<M: Gyrogroup + ?Sized>(
        &mut self,
        model: &M,
        item: &str,
        a: &M::Elem,
        b: &M::Elem,
        witness: impl FnOnce() -> Vec<String>,
    ) {
        let r = model.discrepancy(a, b);
        if model.is_exact() {
            if r != 0.0 {
                self.fail(item, witness());
            }
        } else {
            self.residual(item, r, witness);
        }
    }

    pub fn finish(mut self) -> CheckReport {
        let r = &mut self.report;
        r.verdict = if r.violations.is_empty() && r.max_residual <= r.tolerance {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        self.report
    }
}
