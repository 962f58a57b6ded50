//! Structured pass/fail reports.
//!
//! Verification operations never collapse to a bare boolean: each returns a
//! [`CheckReport`] listing every condition it evaluated, so a failure names
//! the violated axiom and carries a witness (the basis vectors or the
//! defect value that broke it).

use std::fmt;

/// One named condition with its verdict and an optional witness.
#[derive(Clone, Debug)]
pub struct CheckItem {
    /// Short stable name of the condition, e.g. `"jacobi"`, `"d_eta=2Phi"`.
    pub name: String,
    /// Did the condition hold?
    pub ok: bool,
    /// Human-readable witness for failures (indices, defect values).
    pub witness: Option<String>,
}

impl CheckItem {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckItem {
            name: name.into(),
            ok: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        CheckItem {
            name: name.into(),
            ok: false,
            witness: Some(witness.into()),
        }
    }

    pub fn of(name: impl Into<String>, ok: bool, witness_if_fail: impl Into<String>) -> Self {
        if ok {
            CheckItem::pass(name)
        } else {
            CheckItem::fail(name, witness_if_fail)
        }
    }

    pub fn of_opt(name: impl Into<String>, ok: bool, witness: Option<String>) -> Self {
        CheckItem {
            name: name.into(),
            ok,
            witness: if ok { None } else { witness },
        }
    }
}

/// An itemized report; `ok` iff every item passed.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport { items: Vec::new() }
    }

    pub fn push(&mut self, item: CheckItem) {
        self.items.push(item);
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.items.extend(other.items);
    }

    /// Merge with every item name prefixed by `prefix/`.
    pub fn merge_prefixed(&mut self, prefix: &str, other: CheckReport) {
        for mut item in other.items {
            item.name = format!("{prefix}/{}", item.name);
            self.items.push(item);
        }
    }

    pub fn ok(&self) -> bool {
        self.items.iter().all(|i| i.ok)
    }

    /// First failing item, if any.
    pub fn first_failure(&self) -> Option<&CheckItem> {
        self.items.iter().find(|i| !i.ok)
    }

    /// Names of all failing items.
    pub fn failures(&self) -> Vec<&CheckItem> {
        self.items.iter().filter(|i| !i.ok).collect()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            let verdict = if item.ok { "pass" } else { "FAIL" };
            match &item.witness {
                Some(w) if !item.ok => writeln!(f, "  [{verdict}] {}  ({w})", item.name)?,
                _ => writeln!(f, "  [{verdict}] {}", item.name)?,
            }
        }
        writeln!(
            f,
            "  => {}",
            if self.ok() { "all conditions hold" } else { "FAILED" }
        )
    }
}
