//! Rendering of assessment reports: stable JSON and a per-construction
//! markdown summary. Both outputs are byte-deterministic for a fixed
//! report.

use crate::assess::{AssessmentReport, FormulaVerdict, Verdict};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Markdown,
}

impl ReportFormat {
    pub fn from_token(t: &str) -> Option<Self> {
        match t {
            "json" => Some(ReportFormat::Json),
            "markdown" | "md" => Some(ReportFormat::Markdown),
            _ => None,
        }
    }
}

/// Serialize a report. Field order follows the struct definitions, vector
/// order is fixed by the assessment, so identical reports yield identical
/// bytes.
pub fn render_report(report: &AssessmentReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut buf = Vec::new();
            let mut ser = serde_json::Serializer::pretty(&mut buf);
            report.serialize(&mut ser).expect("report serializes");
            let mut s = String::from_utf8(buf).expect("serde_json emits UTF-8");
            s.push('\n');
            s
        }
        ReportFormat::Markdown => render_markdown(report),
    }
}

fn verdict_cell(v: &FormulaVerdict) -> String {
    match v.verdict {
        Verdict::Confirmed => "confirmed".to_string(),
        Verdict::DomainEmpty => "domain-empty".to_string(),
        Verdict::Discrepant => format!("**discrepant** (rel {:.1e})", v.max_rel_dev),
    }
}

/// Ordinal bands of the registry entries, one table per construction.
const SECTIONS: [(&str, &str, &str); 5] = [
    ("xa partner", "3.2", "3.13"),
    ("xy partner", "3.14", "3.22"),
    ("ay partner", "3.23", "3.33"),
    ("xay partner", "3.34", "3.45"),
    ("generating-function displays", "3.46", "3.50"),
];

fn section_index(id: &str) -> usize {
    // ids are "<anchor>:<quantity>"; anchors sort by their numeric part
    let anchor = id.split(':').next().unwrap_or(id);
    if anchor == "xay-display" {
        return 4;
    }
    let num: f64 = anchor.trim_start_matches("3.").parse().unwrap_or(0.0);
    match num {
        n if n < 14.0 => 0,
        n if n < 23.0 => 1,
        n if n < 34.0 => 2,
        n if n < 46.0 => 3,
        _ => 4,
    }
}

fn render_markdown(report: &AssessmentReport) -> String {
    let mut out = String::new();
    out.push_str("# Formula assessment\n\n");
    out.push_str(&format!("- curve: `{}`\n", report.curve));
    out.push_str(&format!(
        "- grid: [{}, {}], {} points\n",
        report.grid.lo, report.grid.hi, report.grid.n
    ));
    out.push_str(&format!(
        "- confirm tolerance: {:e} relative (floor {:e}), quorum {} samples\n\n",
        report.tolerances.confirm, report.tolerances.rel_floor, report.tolerances.min_samples
    ));

    for (sec, (title, lo, hi)) in SECTIONS.iter().enumerate() {
        let rows: Vec<&FormulaVerdict> = report
            .verdicts
            .iter()
            .filter(|v| section_index(&v.formula_id) == sec)
            .collect();
        if rows.is_empty() {
            continue;
        }
        out.push_str(&format!("## {title} ({lo}-{hi})\n\n"));
        out.push_str("| formula | variant | spec | samples | skipped | max abs dev | max rel dev | verdict |\n");
        out.push_str("|---|---|---|---:|---:|---:|---:|---|\n");
        for v in rows {
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} | {:.3e} | {:.3e} | {} |\n",
                v.formula_id,
                v.variant,
                v.spec.label(),
                v.samples,
                v.skipped,
                v.max_abs_dev,
                v.max_rel_dev,
                verdict_cell(v)
            ));
        }
        out.push('\n');
    }

    if !report.claims.is_empty() {
        out.push_str("## Structural claims (measured, not asserted)\n\n");
        out.push_str("| claim | spec | samples | asserted | measured min | measured max | max abs dev |\n");
        out.push_str("|---|---|---:|---:|---:|---:|---:|\n");
        for c in &report.claims {
            out.push_str(&format!(
                "| {} | {} | {} | {} | {:.6} | {:.6} | {:.3e} |\n",
                c.claim_id,
                c.spec.label(),
                c.samples,
                c.asserted,
                c.measured_min,
                c.measured_max,
                c.max_abs_dev
            ));
        }
        out.push('\n');
    }

    if !report.notes.is_empty() {
        out.push_str("## Reading conventions\n\n");
        for n in &report.notes {
            out.push_str(&format!("- {n}\n"));
        }
    }
    out
}
