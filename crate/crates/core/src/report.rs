//! Pass/fail reports produced by the structural checks.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// The identity does not apply to this input; carries the reason.
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub label: String,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport { name: name.into(), items: Vec::new() }
    }

    pub fn push(&mut self, label: impl Into<String>, outcome: Outcome) {
        self.items.push(CheckItem { label: label.into(), outcome });
    }

    /// Records `Pass` when `ok`, otherwise `Fail(detail())`.
    pub fn expect(&mut self, label: impl Into<String>, ok: bool, detail: impl FnOnce() -> String) {
        let outcome = if ok { Outcome::Pass } else { Outcome::Fail(detail()) };
        self.push(label, outcome);
    }

    /// No item failed. Skipped items do not count as failures.
    pub fn passed(&self) -> bool {
        !self.items.iter().any(|i| matches!(i.outcome, Outcome::Fail(_)))
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|i| matches!(i.outcome, Outcome::Fail(_)))
    }

    pub fn count(&self, pred: impl Fn(&Outcome) -> bool) -> usize {
        self.items.iter().filter(|i| pred(&i.outcome)).count()
    }

    pub fn merge(&mut self, other: CheckReport) {
        for item in other.items {
            self.items.push(CheckItem { label: alloc::format!("{}: {}", other.name, item.label), ..item });
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.name, if self.passed() { "pass" } else { "FAIL" })?;
        for item in &self.items {
            match &item.outcome {
                Outcome::Pass => writeln!(f, "  ok    {}", item.label)?,
                Outcome::Fail(why) => writeln!(f, "  FAIL  {}: {why}", item.label)?,
                Outcome::Skipped(why) => writeln!(f, "  skip  {}: {why}", item.label)?,
            }
        }
        Ok(())
    }
}
