//! Structured result tree rendered as text or machine-readable JSON.
//! Machine output is deterministic (fixed field order, canonical scalar
//! strings) and round-trips through the parser.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    Fail,
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<Entry>,
}

impl Entry {
    pub fn pass(name: impl Into<String>, detail: Option<String>) -> Entry {
        Entry {
            name: name.into(),
            verdict: Verdict::Pass,
            detail,
            children: Vec::new(),
        }
    }

    pub fn fail(name: impl Into<String>, detail: Option<String>) -> Entry {
        Entry {
            name: name.into(),
            verdict: Verdict::Fail,
            detail,
            children: Vec::new(),
        }
    }

    pub fn info(name: impl Into<String>, detail: Option<String>) -> Entry {
        Entry {
            name: name.into(),
            verdict: Verdict::Info,
            detail,
            children: Vec::new(),
        }
    }

    pub fn check(name: impl Into<String>, ok: bool, detail: Option<String>) -> Entry {
        if ok {
            Entry::pass(name, detail)
        } else {
            Entry::fail(name, detail)
        }
    }

    fn has_failure(&self) -> bool {
        self.verdict == Verdict::Fail || self.children.iter().any(Entry::has_failure)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub title: String,
    pub entries: Vec<Entry>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Report {
        Report {
            title: title.into(),
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, entry: Entry) {
        self.entries.push(entry);
    }

    pub fn all_passed(&self) -> bool {
        !self.entries.iter().any(Entry::has_failure)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("== {} ==\n", self.title);
        for e in &self.entries {
            render_entry(e, 0, &mut out);
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    // exercised by the unit tests and external consumers of the format
    #[allow(dead_code)]
    pub fn parse_json(raw: &str) -> Result<Report, serde_json::Error> {
        serde_json::from_str(raw)
    }
}

fn render_entry(e: &Entry, depth: usize, out: &mut String) {
    let tag = match e.verdict {
        Verdict::Pass => "PASS",
        Verdict::Fail => "FAIL",
        Verdict::Info => "info",
    };
    let indent = "  ".repeat(depth);
    match &e.detail {
        Some(d) => out.push_str(&format!("{indent}[{tag}] {}: {d}\n", e.name)),
        None => out.push_str(&format!("{indent}[{tag}] {}\n", e.name)),
    }
    for child in &e.children {
        render_entry(child, depth + 1, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut r = Report::new("demo");
        r.push(Entry::pass("first", Some("detail".into())));
        let mut parent = Entry::info("group", None);
        parent.children.push(Entry::fail("inner", None));
        r.push(parent);
        let json = r.render_json();
        let back = Report::parse_json(&json).unwrap();
        assert_eq!(r, back);
        assert!(!r.all_passed());
    }

    #[test]
    fn empty_report_renders_header_only() {
        let r = Report::new("empty");
        assert_eq!(r.render_text(), "== empty ==\n");
        assert!(r.all_passed());
    }
}
