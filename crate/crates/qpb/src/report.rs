//! Machine-readable verification records and deterministic JSON reports.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One verified statement: `law` is the mathematical identity checked, the
/// optional fields carry a failure witness, a numeric residual, an analytic
/// tail bound, or the degree bound of evidence-style checks.
#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub law: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub numeric: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tail_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounded_degree: Option<u32>,
}

impl CheckRecord {
    pub fn pass(id: impl Into<String>, law: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            law: law.into(),
            status: Status::Pass,
            witness: None,
            numeric: None,
            tail_bound: None,
            bounded_degree: None,
        }
    }

    pub fn fail(id: impl Into<String>, law: impl Into<String>, witness: String) -> Self {
        Self {
            status: Status::Fail,
            witness: Some(witness),
            ..Self::pass(id, law)
        }
    }

    pub fn from_bool(
        id: impl Into<String>,
        law: impl Into<String>,
        ok: bool,
        witness: impl FnOnce() -> String,
    ) -> Self {
        if ok {
            Self::pass(id, law)
        } else {
            Self::fail(id, law, witness())
        }
    }

    pub fn with_numeric(mut self, x: f64) -> Self {
        self.numeric = Some(x);
        self
    }

    pub fn with_tail_bound(mut self, x: f64) -> Self {
        self.tail_bound = Some(x);
        self
    }

    pub fn with_bounded_degree(mut self, d: u32) -> Self {
        self.bounded_degree = Some(d);
        self
    }

    pub fn with_witness(mut self, w: String) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: String,
    pub config: BTreeMap<String, String>,
    pub overall: Status,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn new(config: BTreeMap<String, String>, mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let overall = if checks.iter().all(CheckRecord::passed) {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            tool: format!("qpb {}", env!("CARGO_PKG_VERSION")),
            config,
            overall,
            checks,
        }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    /// Deterministic: field order is fixed, checks are sorted by id and the
    /// config echo is an ordered map.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn human_summary(&self) -> String {
        let mut lines = Vec::new();
        let failed: Vec<&CheckRecord> = self.checks.iter().filter(|c| !c.passed()).collect();
        lines.push(format!(
            "{}: {} checks, {} failed",
            if self.passed() { "PASS" } else { "FAIL" },
            self.checks.len(),
            failed.len()
        ));
        for c in failed {
            lines.push(format!(
                "  FAIL {} :: {}{}",
                c.id,
                c.law,
                c.witness
                    .as_deref()
                    .map(|w| format!(" [{w}]"))
                    .unwrap_or_default()
            ));
        }
        lines.join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_sorts_and_aggregates() {
        let checks = vec![
            CheckRecord::pass("b.second", "y = y"),
            CheckRecord::fail("a.first", "x = x", "nope".into()),
        ];
        let r = Report::new(BTreeMap::new(), checks);
        assert_eq!(r.checks[0].id, "a.first");
        assert!(!r.passed());
        assert!(r.human_summary().contains("FAIL a.first"));
    }

    #[test]
    fn json_is_deterministic() {
        let mk = || {
            let mut cfg = BTreeMap::new();
            cfg.insert("suite".to_string(), "hopf".to_string());
            cfg.insert("degree".to_string(), "4".to_string());
            Report::new(cfg, vec![CheckRecord::pass("a", "1 = 1").with_numeric(0.0)])
        };
        assert_eq!(mk().to_json(), mk().to_json());
    }
}
