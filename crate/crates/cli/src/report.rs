//! CSV/JSON audit reports and the plain-text findings section.

use std::fmt::Write as _;
use std::io::Write;

use giantval_core::audit::{find, AuditRecord, AuditSummary, Value};
use giantval_core::bound::{Soundness, Verdict};
use serde::Serialize;

use crate::error::CliResult;

pub const CSV_HEADER: [&str; 9] = ["case_id", "p", "n", "k", "r", "m", "lhs", "rhs", "verdict"];

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn write_csv(records: &[AuditRecord], out: impl Write) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.case_id.to_string(),
            opt(r.p),
            r.n.to_string(),
            opt(r.k),
            opt(r.r),
            opt(r.m),
            r.lhs.to_string(),
            r.rhs.to_string(),
            r.verdict.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    case_id: &'a str,
    anchor: &'a str,
    soundness: &'a str,
    p: Option<u64>,
    n: u64,
    k: Option<u64>,
    r: Option<u32>,
    m: Option<u64>,
    lhs: Option<String>,
    rhs: Option<String>,
    verdict: &'a str,
}

fn json_value(v: &Value) -> Option<String> {
    (!v.is_empty()).then(|| v.to_string())
}

pub fn write_json(records: &[AuditRecord], mut out: impl Write) -> CliResult<()> {
    let rows: Vec<JsonRecord> = records
        .iter()
        .map(|r| JsonRecord {
            case_id: r.case_id,
            anchor: find(r.case_id).map(|c| c.anchor).unwrap_or(""),
            soundness: r.soundness.as_str(),
            p: r.p,
            n: r.n,
            k: r.k,
            r: r.r,
            m: r.m,
            lhs: json_value(&r.lhs),
            rhs: json_value(&r.rhs),
            verdict: r.verdict.as_str(),
        })
        .collect();
    serde_json::to_writer_pretty(&mut out, &rows)?;
    writeln!(out)?;
    Ok(())
}

fn point(r: &AuditRecord) -> String {
    let mut s = format!("n={}", r.n);
    if let Some(k) = r.k {
        let _ = write!(s, " k={k}");
    }
    s
}

fn runs(records: &[AuditRecord]) -> impl Iterator<Item = &[AuditRecord]> {
    records.chunk_by(|a, b| (a.case_id, a.p) == (b.case_id, b.p))
}

fn violation_lines(out: &mut String, records: &[AuditRecord], soundness: Soundness) {
    for run in runs(records) {
        let bad: Vec<&AuditRecord> = run
            .iter()
            .filter(|r| r.verdict == Verdict::Violated && r.soundness == soundness)
            .collect();
        let Some(first) = bad.first() else { continue };
        let p = first.p.map(|p| format!(" p={p}")).unwrap_or_default();
        let _ = writeln!(
            out,
            "  {}{p}: {} of {} violated; first at {} (lhs {}, rhs {})",
            first.case_id,
            bad.len(),
            run.len(),
            point(first),
            first.lhs,
            first.rhs
        );
    }
}

/// Summary, violations grouped by case and prime, and report-only numbers.
pub fn findings_section(records: &[AuditRecord]) -> String {
    let s = AuditSummary::of(records);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "records: {} ({} holds, {} violated, {} indeterminate, {} reported)",
        s.records, s.holds, s.violated, s.indeterminate, s.reported
    );
    let _ = writeln!(out, "proved-sound violations: {}", s.sound_violations);
    violation_lines(&mut out, records, Soundness::ProvedSound);
    let _ = writeln!(out, "findings (as-printed violations): {}", s.findings);
    violation_lines(&mut out, records, Soundness::AsPrinted);
    let reported: Vec<&[AuditRecord]> = runs(records)
        .filter(|run| run.iter().any(|r| r.verdict == Verdict::Reported))
        .collect();
    if !reported.is_empty() {
        let _ = writeln!(out, "reported:");
        for run in reported {
            let values: Vec<(u64, f64)> = run
                .iter()
                .filter_map(|r| match &r.lhs {
                    Value::Real(i) => Some((r.n, i.mid())),
                    _ => None,
                })
                .collect();
            let Some(&(n_last, last)) = values.last() else {
                continue;
            };
            let (n_peak, peak) =
                values
                    .iter()
                    .copied()
                    .fold((0, f64::MIN), |a, b| if b.1 > a.1 { b } else { a });
            let _ = writeln!(
                out,
                "  {}: {} points n={}..{}; max ~{} at n={}, last ~{}",
                run[0].case_id,
                values.len(),
                values[0].0,
                n_last,
                fmt_real(peak),
                n_peak,
                fmt_real(last)
            );
        }
    }
    out
}

fn fmt_real(x: f64) -> String {
    Value::Real(giantval_core::interval::Interval::point(x))
        .to_string()
        .trim_start_matches('~')
        .to_string()
}
