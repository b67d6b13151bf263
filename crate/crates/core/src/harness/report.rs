use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::RunReport;

/// Output format of a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(Self::Text),
            "json" => Ok(Self::Json),
            "csv" => Ok(Self::Csv),
            other => Err(format!(
                "unknown format '{other}' (expected text, json or csv)"
            )),
        }
    }
}

/// Renders `report`; identical reports render to identical bytes.
pub fn render(report: &RunReport, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serialises");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(report),
        Format::Text => render_text(report),
    }
}

fn render_csv(report: &RunReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "id",
        "paper_ref",
        "status",
        "max_residual",
        "samples",
        "details",
    ])
    .expect("in-memory write");
    for c in &report.claims {
        w.write_record([
            c.id.as_str(),
            c.paper_ref.as_str(),
            c.status.as_str(),
            &format!("{:e}", c.max_residual),
            &c.samples.to_string(),
            c.details.as_str(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is utf-8")
}

fn render_text(report: &RunReport) -> String {
    let cfg = &report.config;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "suites {} | tolerance {:e} | seed {} | samples {} | n-max {}",
        cfg.suites.join(","),
        cfg.tolerance,
        cfg.seed,
        cfg.samples,
        cfg.n_max
    );
    for c in &report.claims {
        let title = super::suite(&c.id).map(|s| s.title).unwrap_or("");
        let _ = writeln!(
            out,
            "[{:<11}] {:<4} {title} (\"{}\")  max_residual={:e} samples={}",
            c.status.as_str().to_uppercase(),
            c.id,
            c.paper_ref,
            c.max_residual,
            c.samples
        );
        for line in c.details.split("; ") {
            let _ = writeln!(out, "    {line}");
        }
    }
    let s = &report.summary;
    let _ = writeln!(
        out,
        "summary: {} pass, {} fail, {} report-only, {} total, exit code {}",
        s.pass, s.fail, s.report_only, s.total, s.exit_code
    );
    out
}
