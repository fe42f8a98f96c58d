//! Report rendering: human-readable table, JSON lines, CSV.

use invpot_core::verify::VerificationReport;

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Json,
    Csv,
}

pub const CSV_HEADER: &str = "class,dim,points,max_residual,closedness_max,detected_dim,pass,seed";

pub fn render(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Human => human(reports),
        Format::Json => reports
            .iter()
            .map(|r| serde_json::to_string(r).expect("report serializes"))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Csv => {
            let mut out = String::from(CSV_HEADER);
            for r in reports {
                out.push('\n');
                out.push_str(&csv_row(r));
            }
            out
        }
    }
}

fn csv_row(r: &VerificationReport) -> String {
    format!(
        "{},{},{},{:e},{:e},{},{},{}",
        r.class,
        r.dim,
        r.points,
        r.max_residual,
        r.closedness_max,
        r.detected_dim.map(|d| d.to_string()).unwrap_or_default(),
        r.pass,
        r.seed
    )
}

fn human(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{:<8} {:>3} {:>6} {:>13} {:>13} {:>4}  {}\n",
        "class", "dim", "points", "max_residual", "closedness", "det", "status"
    ));
    for r in reports {
        let status = if r.skipped_empty {
            "SKIP(EMPTY)".to_string()
        } else if r.pass {
            "PASS".to_string()
        } else {
            "FAIL".to_string()
        };
        out.push_str(&format!(
            "{:<8} {:>3} {:>6} {:>13.3e} {:>13.3e} {:>4}  {}\n",
            r.class,
            r.dim,
            r.points,
            r.max_residual,
            r.closedness_max,
            r.detected_dim.map(|d| d.to_string()).unwrap_or_default(),
            status
        ));
    }
    let failures = reports.iter().filter(|r| !r.pass).count();
    let skipped = reports.iter().filter(|r| r.skipped_empty).count();
    out.push_str(&format!(
        "{} classes: {} passed, {} failed, {} skipped (empty)\n",
        reports.len(),
        reports.len() - failures - skipped,
        failures,
        skipped
    ));
    out
}
