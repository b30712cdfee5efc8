use std::fmt;
use std::fmt::Write as _;

use crate::hopfadj::FIELD_CAVEAT;

/// `Pass`/`Fail` are checks; `Yes`/`No` are observations that never fail a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Yes,
    No,
}

impl Verdict {
    pub fn check(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn observe(value: bool) -> Self {
        if value {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Yes => "yes",
            Verdict::No => "no",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub id: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Machine,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub target: String,
    pub claims: Vec<Claim>,
    /// Whether grouplike findings are limited to base-field-rational elements.
    pub caveat: bool,
}

impl TheoremReport {
    pub fn new(target: impl Into<String>) -> Self {
        TheoremReport { target: target.into(), claims: Vec::new(), caveat: true }
    }

    pub fn push(&mut self, id: impl Into<String>, verdict: Verdict, detail: impl Into<String>) {
        self.claims.push(Claim { id: id.into(), verdict, detail: detail.into() });
    }

    pub fn check(&mut self, id: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.push(id, Verdict::check(ok), detail);
    }

    pub fn observe(&mut self, id: impl Into<String>, value: bool, detail: impl Into<String>) {
        self.push(id, Verdict::observe(value), detail);
    }

    pub fn failed(&self) -> bool {
        self.claims.iter().any(|c| c.verdict == Verdict::Fail)
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn render(&self, format: OutputFormat) -> String {
        let clean = |s: &str| s.replace(['\t', '\n'], " ");
        let mut out = String::new();
        match format {
            OutputFormat::Machine => {
                writeln!(out, "target\tnote\t{}", clean(&self.target)).unwrap();
                if self.caveat {
                    writeln!(out, "caveat\tnote\t{FIELD_CAVEAT}").unwrap();
                }
                for c in &self.claims {
                    writeln!(out, "{}\t{}\t{}", clean(&c.id), c.verdict, clean(&c.detail)).unwrap();
                }
            }
            OutputFormat::Text => {
                writeln!(out, "target: {}", self.target).unwrap();
                if self.caveat {
                    writeln!(out, "caveat: {FIELD_CAVEAT}").unwrap();
                }
                let width = self.claims.iter().map(|c| c.id.chars().count()).max().unwrap_or(0);
                for c in &self.claims {
                    writeln!(out, "{:<4}  {:<width$}  {}", c.verdict.to_string(), c.id, clean(&c.detail)).unwrap();
                }
                let failures = self.claims.iter().filter(|c| c.verdict == Verdict::Fail).count();
                writeln!(out, "{} claims, {failures} failed", self.claims.len()).unwrap();
            }
        }
        out
    }
}
