//! The versioned JSON report shared by every command, and its plain-text
//! table rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::graph::{classify, Graph};
use crate::verify::{Check, Status};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InputSummary {
    pub n: usize,
    pub edges: usize,
    pub class: String,
}

impl InputSummary {
    pub fn of(g: &Graph) -> Self {
        InputSummary {
            n: g.n(),
            edges: g.edge_count(),
            class: classify(g).kind.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub name: String,
    pub status: Status,
    pub detail: String,
    #[serde(default)]
    pub cases: u64,
}

impl From<&Check> for CrossCheck {
    fn from(c: &Check) -> Self {
        CrossCheck {
            name: c.name.clone(),
            status: c.status(),
            detail: c.detail(),
            cases: c.cases,
        }
    }
}

/// Big integers and rationals are stored as decimal strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<InputSummary>,
    pub results: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub per_vertex: BTreeMap<String, Vec<String>>,
    pub cross_checks: Vec<CrossCheck>,
    /// Milliseconds per method.
    pub timing: BTreeMap<String, f64>,
}

impl Report {
    pub fn new(command: &str, input: Option<&Graph>) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            input: input.map(InputSummary::of),
            results: BTreeMap::new(),
            per_vertex: BTreeMap::new(),
            cross_checks: Vec::new(),
            timing: BTreeMap::new(),
        }
    }

    pub fn result(&mut self, key: &str, value: impl ToString) {
        self.results.insert(key.to_string(), value.to_string());
    }

    pub fn per_vertex<T: ToString>(&mut self, key: &str, values: &[T]) {
        self.per_vertex
            .insert(key.to_string(), values.iter().map(ToString::to_string).collect());
    }

    pub fn check(&mut self, name: &str, status: Status, detail: impl Into<String>) {
        self.cross_checks.push(CrossCheck {
            name: name.to_string(),
            status,
            detail: detail.into(),
            cases: u64::from(status != Status::Skipped),
        });
    }

    /// Records a pass/fail comparison.
    pub fn compare(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.check(name, status, detail);
    }

    pub fn time(&mut self, method: &str, ms: f64) {
        self.timing.insert(method.to_string(), ms);
    }

    pub fn passed(&self) -> bool {
        self.cross_checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    /// Human-readable summary.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        if let Some(i) = &self.input {
            let _ = writeln!(out, "input:   n={} edges={} class={}", i.n, i.edges, i.class);
        }
        let width = self
            .results
            .keys()
            .chain(self.per_vertex.keys())
            .map(String::len)
            .max()
            .unwrap_or(0);
        for (k, v) in &self.results {
            let _ = writeln!(out, "  {k:<width$}  {v}");
        }
        for (k, vs) in &self.per_vertex {
            let _ = writeln!(out, "  {k:<width$}  [{}]", vs.join(", "));
        }
        if !self.cross_checks.is_empty() {
            let width = self.cross_checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            let _ = writeln!(out, "checks:");
            for c in &self.cross_checks {
                let status = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skipped => "SKIP",
                };
                let _ = writeln!(out, "  {status}  {:<width$}  {}", c.name, c.detail);
            }
        }
        if !self.timing.is_empty() {
            let parts: Vec<String> = self.timing.iter().map(|(k, v)| format!("{k} {v:.3} ms")).collect();
            let _ = writeln!(out, "timing:  {}", parts.join(", "));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle_graph;

    fn sample() -> Report {
        let mut r = Report::new("count", Some(&cycle_graph(4)));
        r.result("count", 16u32);
        r.result("dp", "16");
        r.per_vertex("rootCounts", &[1u32, 2, 3]);
        r.compare("complete_bipartite_vs_dp", true, "16 = 16");
        r.check("enumeration", Status::Skipped, "not requested");
        r.time("dp", 0.125);
        r
    }

    #[test]
    fn json_shape() {
        let v: serde_json::Value = serde_json::from_str(&sample().to_json()).unwrap();
        assert_eq!(v["schemaVersion"], 1);
        assert_eq!(v["command"], "count");
        assert_eq!(v["input"]["class"], "complete_bipartite(2,2)");
        assert_eq!(v["results"]["count"], "16");
        assert_eq!(v["perVertex"]["rootCounts"][2], "3");
        assert_eq!(v["crossChecks"][0]["status"], "pass");
        assert_eq!(v["crossChecks"][1]["status"], "skipped");
        assert_eq!(v["timing"]["dp"], 0.125);
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
        let bare = Report::new("verify", None);
        assert_eq!(Report::from_json(&bare.to_json()).unwrap(), bare);
    }

    #[test]
    fn pass_status() {
        let mut r = sample();
        assert!(r.passed());
        r.compare("x", false, "1 != 2");
        assert!(!r.passed());
    }

    #[test]
    fn table_lists_checks() {
        let t = sample().to_table();
        assert!(t.contains("PASS  complete_bipartite_vs_dp"));
        assert!(t.contains("SKIP  enumeration"));
        assert!(t.contains("class=complete_bipartite(2,2)"));
    }
}
