//! CSV rows with fixed formatting: probabilities and rates with six
//! decimals, boundary points with six significant digits, absent values as
//! empty fields, LF line endings.

use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use reject_lab::bayes_rule::{OutcomeReport, RejectThresholds};

use crate::failure::Failure;

pub const OUTCOME_HEADER: [&str; 20] = [
    "case",
    "classifier",
    "reject",
    "e1",
    "e2",
    "e",
    "rej1",
    "rej2",
    "rej",
    "cr",
    "accuracy",
    "risk",
    "tr1",
    "tr2",
    "xb1",
    "xb2",
    "xb3",
    "xb4",
    "ni",
    "h_t_given_y",
];

pub fn fixed(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

pub fn significant(x: f64) -> String {
    if x == 0.0 {
        return "0.00000".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-4..6).contains(&mag) {
        return format!("{x:.5e}");
    }
    let decimals = (5 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // rounding may carry into a new leading digit (9.999999 -> 10.00000)
    let rounded: f64 = s.parse().expect("formatted float");
    if rounded.abs() >= 10f64.powi(mag + 1) && decimals > 0 {
        let d = decimals - 1;
        return format!("{x:.d$}");
    }
    s
}

fn opt(x: Option<f64>) -> String {
    x.map(fixed).unwrap_or_default()
}

/// One outcome row; `thresholds` falls back to the report's own.
pub fn outcome_row(
    case: &str,
    classifier: &str,
    reject: bool,
    r: &OutcomeReport,
    thresholds: Option<RejectThresholds>,
) -> Vec<String> {
    let tr = thresholds.or(r.thresholds);
    let xb = r.boundary_points();
    if xb.len() > 4 {
        eprintln!(
            "warning: {case}/{classifier}: {} boundary points, only 4 are written",
            xb.len()
        );
    }
    let mut row = vec![
        case.to_string(),
        classifier.to_string(),
        reject.to_string(),
        fixed(r.e1),
        fixed(r.e2),
        fixed(r.e),
        fixed(r.rej1),
        fixed(r.rej2),
        fixed(r.rej),
        fixed(r.cr),
        opt(r.accuracy),
        opt(r.risk),
        opt(tr.map(|t| t.tr1())),
        opt(tr.map(|t| t.tr2())),
    ];
    row.extend((0..4).map(|k| xb.get(k).copied().map(significant).unwrap_or_default()));
    row.push(opt(r.ni));
    row.push(opt(r.h_t_given_y));
    row
}

/// Writes `header` and `rows` to `out`, or to stdout when `out` is `None`.
pub fn emit<H: AsRef<[u8]>>(
    out: Option<&Path>,
    header: &[H],
    rows: &[Vec<String>],
) -> Result<(), Failure> {
    let sink: Box<dyn Write> = match out {
        Some(p) => Box::new(
            File::create(p)
                .map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", p.display())))?,
        ),
        None => Box::new(io::stdout().lock()),
    };
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(())
}
