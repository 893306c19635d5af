use std::io::Write;

use parakit_core::{Status, VerificationReport};

use crate::budget::{Row, COLUMNS};
use crate::config::Format;

/// A JSON list of reports, keys in declaration order, or CSV with one row per
/// witness (reports without witnesses get a single row with empty fields).
pub fn write_reports(reports: &[VerificationReport], format: Format, mut out: impl Write) -> anyhow::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, reports)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["id", "status", "kind", "instance", "detail"])?;
            for r in reports {
                if r.witnesses.is_empty() {
                    w.write_record([r.id.as_str(), r.status.as_str(), "", "", ""])?;
                }
                for x in &r.witnesses {
                    w.write_record([&r.id, r.status.as_str(), &x.kind, &x.instance, &x.detail])?;
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn write_budget(rows: &[Row], format: Format, mut out: impl Write) -> anyhow::Result<()> {
    match format {
        Format::Json => {
            let v: Vec<_> = rows.iter().map(Row::to_json).collect();
            serde_json::to_writer_pretty(&mut out, &v)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(COLUMNS)?;
            for r in rows {
                w.write_record(r.fields())?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// One line per report for the terminal.
pub fn summary(reports: &[VerificationReport]) -> String {
    let mut s = String::new();
    for r in reports {
        let flag = match r.status {
            Status::Inconclusive => "  [flag: inconclusive]",
            _ => "",
        };
        s.push_str(&format!("{:<6} {}{flag}\n", r.status.as_str(), r.id));
        if r.failed() {
            if let Some(w) = r.witnesses.iter().find(|w| w.kind != "growth-trend") {
                s.push_str(&format!("       {} {}: {}\n", w.kind, w.instance, w.detail));
            }
        }
    }
    s
}
