//! Report envelopes written for each corpus entry, and the corpus summary.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::CorpusEntry;
use crate::deformation::{theorem_check, DeformationReport, Verdict};
use crate::groebner::Limits;
use crate::lyubeznik::LyubeznikComparison;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub tool_version: String,
    pub entry_id: String,
    /// Wall-clock milliseconds per phase; omitted unless requested so that
    /// reports stay byte-identical across runs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, u64>>,
    pub report: Option<DeformationReport>,
    pub lyubeznik: Option<LyubeznikComparison>,
    pub diagnostics: Vec<String>,
}

impl ReportEnvelope {
    /// `Fail` when the entry was rejected or any verdict failed.
    pub fn status(&self) -> Verdict {
        match &self.report {
            Some(r) => r.overall,
            None => Verdict::Fail,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// Runs the full check on one entry; errors become diagnostics.
pub fn run_entry(entry: &CorpusEntry, limits: Limits, with_timings: bool) -> ReportEnvelope {
    let start = Instant::now();
    let engine = entry.engine(limits);
    let result = entry.to_input().and_then(|input| theorem_check(&engine, &input));
    let elapsed = start.elapsed().as_millis() as u64;
    let (report, diagnostics) = match result {
        Ok(r) => {
            let diagnostics = r.failures().iter().map(|k| format!("verdict {k} failed")).collect();
            (Some(r), diagnostics)
        }
        Err(e) => (None, vec![format!("entry rejected: {e}")]),
    };
    ReportEnvelope {
        tool_version: TOOL_VERSION.to_string(),
        entry_id: entry.id.clone(),
        timings: with_timings.then(|| BTreeMap::from([("theorem_check_ms".to_string(), elapsed)])),
        lyubeznik: report.as_ref().and_then(|r| r.lyubeznik.clone()),
        report,
        diagnostics,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub id: String,
    pub file: String,
    pub status: Verdict,
    pub diagnostics: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub tool_version: String,
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
    pub entries: Vec<SummaryRow>,
}

impl CorpusSummary {
    /// Rows are sorted by entry id.
    pub fn new(mut entries: Vec<SummaryRow>) -> CorpusSummary {
        entries.sort_by(|a, b| a.id.cmp(&b.id).then_with(|| a.file.cmp(&b.file)));
        let count = |v: Verdict| entries.iter().filter(|r| r.status == v).count();
        CorpusSummary {
            tool_version: TOOL_VERSION.to_string(),
            passed: count(Verdict::Pass),
            failed: count(Verdict::Fail),
            not_applicable: count(Verdict::NotApplicable),
            entries,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("summaries serialize");
        s.push('\n');
        s
    }
}
