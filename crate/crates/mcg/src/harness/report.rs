//! Verification reports and their serialized forms.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageCount {
    pub stage: String,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Universe {
    pub source: String,
    pub stages: Vec<StageCount>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail {
        /// graph6 of the violating graph; re-parses and re-violates.
        counterexample: String,
        detail: String,
    },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// Per-graph detail row, used by the csv form and for report-driven tests.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRow {
    pub graph6: String,
    pub order: usize,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub claim_id: String,
    pub universe: Universe,
    pub verdict: Verdict,
    pub stats: BTreeMap<String, u64>,
    pub per_graph: Vec<GraphRow>,
    pub elapsed_ms: u64,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum ReportFormat {
    Text,
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<ReportFormat> {
        match s {
            "text" => Ok(ReportFormat::Text),
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            _ => Err(Error::argument(format!(
                "unknown report format '{s}' (expected text, json, or csv)"
            ))),
        }
    }
}

pub fn emit_report(report: &VerificationReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => emit_text(report),
        ReportFormat::Json => serde_json::to_string_pretty(report).expect("report serializes"),
        ReportFormat::Csv => emit_csv(report),
    }
}

pub fn parse_json_report(text: &str) -> Result<VerificationReport> {
    serde_json::from_str(text).map_err(|e| Error::argument(format!("bad json report: {e}")))
}

fn emit_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "claim:   {}", report.claim_id);
    let _ = writeln!(out, "source:  {}", report.universe.source);
    let stages: Vec<String> = report
        .universe
        .stages
        .iter()
        .map(|s| format!("{}={}", s.stage, s.count))
        .collect();
    let _ = writeln!(out, "stages:  {}", stages.join(" -> "));
    if !report.stats.is_empty() {
        let stats: Vec<String> = report
            .stats
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(out, "stats:   {}", stats.join(" "));
    }
    match &report.verdict {
        Verdict::Pass => {
            let _ = writeln!(out, "verdict: PASS");
        }
        Verdict::Fail {
            counterexample,
            detail,
        } => {
            let _ = writeln!(out, "verdict: FAIL");
            let _ = writeln!(out, "counterexample: {counterexample}");
            let _ = writeln!(out, "detail: {detail}");
        }
    }
    let _ = writeln!(out, "elapsed: {} ms", report.elapsed_ms);
    out
}

// graph6 uses only ASCII 63..=126, so fields never need csv quoting; notes
// are written without commas by construction.
fn emit_csv(report: &VerificationReport) -> String {
    let mut out = String::from("claim,verdict,graph6,order,note\n");
    let verdict = match &report.verdict {
        Verdict::Pass => "pass".to_string(),
        Verdict::Fail { counterexample, .. } => format!("fail:{counterexample}"),
    };
    if report.per_graph.is_empty() {
        let _ = writeln!(out, "{},{verdict},,,", report.claim_id);
    }
    for row in &report.per_graph {
        let _ = writeln!(
            out,
            "{},{verdict},{},{},{}",
            report.claim_id, row.graph6, row.order, row.note
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(verdict: Verdict) -> VerificationReport {
        VerificationReport {
            schema_version: SCHEMA_VERSION,
            claim_id: "main-theorem".to_string(),
            universe: Universe {
                source: "builtin orders 1..=6".to_string(),
                stages: vec![
                    StageCount {
                        stage: "source".to_string(),
                        count: 208,
                    },
                    StageCount {
                        stage: "brick".to_string(),
                        count: 9,
                    },
                ],
            },
            verdict,
            stats: [("wheels".to_string(), 1u64)].into_iter().collect(),
            per_graph: vec![GraphRow {
                graph6: "C~".to_string(),
                order: 4,
                note: "brick".to_string(),
            }],
            elapsed_ms: 12,
        }
    }

    #[test]
    fn text_form_of_a_pass_report() {
        let text = emit_report(&sample(Verdict::Pass), ReportFormat::Text);
        assert!(text.contains("PASS"));
        assert!(text.contains("source=208"));
        assert!(text.contains("elapsed"));
    }

    #[test]
    fn json_form_of_a_fail_report_carries_the_counterexample() {
        let fail = Verdict::Fail {
            counterexample: "C~".to_string(),
            detail: "violates both directions".to_string(),
        };
        let json = emit_report(&sample(fail), ReportFormat::Json);
        assert!(json.contains("\"counterexample\": \"C~\""));
        assert!(json.contains("\"status\": \"fail\""));
    }

    #[test]
    fn json_round_trips_byte_identically() {
        let report = sample(Verdict::Pass);
        let json = emit_report(&report, ReportFormat::Json);
        let parsed = parse_json_report(&json).unwrap();
        assert_eq!(parsed, report);
        assert_eq!(emit_report(&parsed, ReportFormat::Json), json);
    }

    #[test]
    fn csv_and_text_and_json_agree_on_the_verdict() {
        for verdict in [
            Verdict::Pass,
            Verdict::Fail {
                counterexample: "C~".to_string(),
                detail: "d".to_string(),
            },
        ] {
            let report = sample(verdict.clone());
            let text = emit_report(&report, ReportFormat::Text);
            let json = emit_report(&report, ReportFormat::Json);
            let csv = emit_report(&report, ReportFormat::Csv);
            let pass = verdict.passed();
            assert_eq!(text.contains("verdict: PASS"), pass);
            assert_eq!(json.contains("\"status\": \"pass\""), pass);
            assert_eq!(csv.contains(",pass,"), pass);
        }
    }
}
