//! Pass/fail certificates shared by all checkers.

use std::fmt::{self, Display};
use std::time::Instant;

/// One labelled equation inside a check: both sides rendered, and whether
/// they agree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub label: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
    /// Rendered symmetric difference; `"0"` on success.
    pub diff: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub pass: bool,
    pub details: Vec<(String, String)>,
    pub parts: Vec<Part>,
    pub millis: u128,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self { name: name.into(), params: Vec::new(), pass: true, details: Vec::new(), parts: Vec::new(), millis: 0 }
    }

    pub fn param(mut self, key: &str, value: impl Display) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    pub fn detail(&mut self, key: &str, value: impl Display) {
        self.details.push((key.to_string(), value.to_string()));
    }

    /// Records an equation; the report fails if any part fails.
    pub fn part(
        &mut self,
        label: impl Into<String>,
        pass: bool,
        lhs: impl Display,
        rhs: impl Display,
        diff: impl Display,
    ) {
        self.pass &= pass;
        self.parts.push(Part {
            label: label.into(),
            pass,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            diff: diff.to_string(),
        });
    }

    /// Marks the report failed without an equation dump.
    pub fn fail(&mut self, label: impl Into<String>, message: impl Display) {
        self.pass = false;
        self.parts.push(Part {
            label: label.into(),
            pass: false,
            lhs: message.to_string(),
            rhs: String::new(),
            diff: String::new(),
        });
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.millis = start.elapsed().as_millis();
        self
    }

    /// The one-line certificate, e.g. `EHGA k=1 m=2 n=2 PASS (lhs_terms=4)`.
    pub fn line(&self, with_timing: bool) -> String {
        let mut s = self.name.clone();
        for (k, v) in &self.params {
            s.push_str(&format!(" {k}={v}"));
        }
        s.push_str(if self.pass { " PASS" } else { " FAIL" });
        let mut details: Vec<String> = self.details.iter().map(|(k, v)| format!("{k}={v}")).collect();
        if with_timing {
            details.push(format!("millis={}", self.millis));
        }
        if !details.is_empty() {
            s.push_str(&format!(" ({})", details.join(", ")));
        }
        s
    }

    /// The certificate line followed, on failure, by the failing equations.
    pub fn render(&self, with_timing: bool) -> String {
        let mut s = self.line(with_timing);
        for p in self.parts.iter().filter(|p| !p.pass) {
            s.push_str(&format!("\n  [{}] lhs: {}", p.label, p.lhs));
            if !p.rhs.is_empty() || !p.diff.is_empty() {
                s.push_str(&format!("\n  [{}] rhs: {}", p.label, p.rhs));
                s.push_str(&format!("\n  [{}] diff: {}", p.label, p.diff));
            }
        }
        s
    }
}

impl Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}
