//! Itemized pass/fail reports used by all verification entry points.

use std::fmt;

/// One named check with an optional human-readable detail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckItem {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// An ordered list of checks; the report passes iff every item passes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check(&mut self, name: &'static str, pass: bool, detail: impl Into<String>) {
        self.items.push(CheckItem {
            name,
            pass,
            detail: detail.into(),
        });
    }

    pub fn pass(&self) -> bool {
        self.items.iter().all(|item| item.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckItem> {
        self.items.iter().filter(|item| !item.pass)
    }

    /// Compact single-line summary of the failing items, for error messages.
    pub fn failure_summary(&self) -> String {
        self.failures()
            .map(|item| {
                if item.detail.is_empty() {
                    item.name.to_string()
                } else {
                    format!("{} ({})", item.name, item.detail)
                }
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            if item.pass {
                writeln!(f, "ok {}", item.name)?;
            } else if item.detail.is_empty() {
                writeln!(f, "FAIL {}", item.name)?;
            } else {
                writeln!(f, "FAIL {}: {}", item.name, item.detail)?;
            }
        }
        Ok(())
    }
}
