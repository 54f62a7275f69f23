//! Machine-readable sweep and benchmark results.
//!
//! JSON is the full record. CSV flattens each row into one line per policy
//! result and drops timing and metadata, so identical commands give
//! byte-identical CSV.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::FormatError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolicyResult {
    pub policy: String,
    pub seed: Option<u64>,
    pub final_order: usize,
    pub colours_used: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub graph_id: String,
    pub source: String,
    pub n: usize,
    pub m: usize,
    pub chi: Option<usize>,
    pub f: Option<usize>,
    pub equal: Option<bool>,
    pub policy_results: Vec<PolicyResult>,
    pub runtime_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub tool_version: String,
    pub command_line: String,
    pub timestamp: String,
    pub seed: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub rows: Vec<ReportRow>,
    pub metadata: Metadata,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl Report {
    pub fn new(command_line: impl Into<String>, seed: Option<u64>) -> Self {
        Report {
            rows: Vec::new(),
            metadata: Metadata {
                tool_version: env!("CARGO_PKG_VERSION").to_string(),
                command_line: command_line.into(),
                timestamp: chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true),
                seed,
            },
        }
    }

    /// Orders rows by `(n, graph_id)`, then by source.
    pub fn sort_rows(&mut self) {
        self.rows.sort_by(|a, b| {
            (a.n, &a.graph_id, &a.source).cmp(&(b.n, &b.graph_id, &b.source))
        });
    }

    pub fn to_json(&self) -> String {
        let mut sorted = self.clone();
        sorted.sort_rows();
        serde_json::to_string_pretty(&sorted).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Report, FormatError> {
        serde_json::from_str(text).map_err(|e| FormatError::Io(format!("report: {e}")))
    }

    pub fn to_csv(&self) -> String {
        let mut sorted = self.clone();
        sorted.sort_rows();
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "graph_id",
            "source",
            "n",
            "m",
            "chi",
            "f",
            "equal",
            "policy",
            "seed",
            "final_order",
            "colours_used",
        ])
        .expect("in-memory write");
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map_or(String::new(), T::to_string)
        }
        for row in &sorted.rows {
            let head = [
                row.graph_id.clone(),
                row.source.clone(),
                row.n.to_string(),
                row.m.to_string(),
                opt(&row.chi),
                opt(&row.f),
                opt(&row.equal),
            ];
            if row.policy_results.is_empty() {
                let mut rec = head.to_vec();
                rec.extend(std::iter::repeat_n(String::new(), 4));
                w.write_record(&rec).expect("in-memory write");
            }
            for p in &row.policy_results {
                let mut rec = head.to_vec();
                rec.extend([
                    p.policy.clone(),
                    opt(&p.seed),
                    p.final_order.to_string(),
                    p.colours_used.to_string(),
                ]);
                w.write_record(&rec).expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Json => self.to_json(),
            ReportFormat::Csv => self.to_csv(),
        }
    }
}

pub fn write_report(report: &Report, format: ReportFormat, path: &Path) -> Result<(), FormatError> {
    std::fs::write(path, report.render(format))
        .map_err(|e| FormatError::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(n: usize, id: &str) -> ReportRow {
        ReportRow {
            graph_id: id.into(),
            source: format!("g{id}"),
            n,
            m: n - 1,
            chi: Some(2),
            f: Some(2),
            equal: Some(true),
            policy_results: vec![
                PolicyResult {
                    policy: "lex".into(),
                    seed: None,
                    final_order: 2,
                    colours_used: 2,
                },
                PolicyResult {
                    policy: "random".into(),
                    seed: Some(5),
                    final_order: 2,
                    colours_used: 2,
                },
            ],
            runtime_ms: 3,
        }
    }

    #[test]
    fn empty_report_is_valid_json() {
        let r = Report::new("folding verify --max-n 0", None);
        let value: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(value["rows"], serde_json::json!([]));
        assert!(value["metadata"]["tool_version"].is_string());
        assert!(value["metadata"]["timestamp"].is_string());
        assert_eq!(value["metadata"]["command_line"], "folding verify --max-n 0");
    }

    #[test]
    fn csv_is_sorted_and_flattened() {
        let mut a = Report::new("x", Some(5));
        a.rows = vec![row(4, "b"), row(3, "z")];
        let mut b = a.clone();
        b.rows.reverse();
        b.rows[0].runtime_ms = 99;
        b.metadata.timestamp = "later".into();
        let csv = a.to_csv();
        assert_eq!(csv, b.to_csv());
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[1].starts_with("z,gz,3,"));
        assert_eq!(lines[2], "z,gz,3,2,2,2,true,random,5,2,2");
    }

    #[test]
    fn json_round_trip() {
        let mut r = Report::new("x", None);
        r.rows = vec![row(3, "a"), row(5, "c")];
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
    }
}
