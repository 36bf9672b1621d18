//! Text, CSV and JSON rendering of results.
//!
//! Text output rounds half-up to four decimals; JSON keeps full precision
//! with keys in a fixed order.

use serde::Serialize;

use crate::error::Result;
use crate::selection::SelectionTrace;

/// Half-up rounding to four decimals, without a negative zero.
pub fn fmt4(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    // the nudge keeps decimal ties such as 0.04325 from rounding down
    let scaled = (x.abs() * 1e4 * (1.0 + 1e-12) + 0.5).floor() as u64;
    let sign = if x < 0.0 && scaled > 0 { "-" } else { "" };
    format!("{sign}{}.{:04}", scaled / 10_000, scaled % 10_000)
}

/// Right-aligned plain-text table.
pub fn text_table(header: &[String], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: &[String]| {
        (0..cols)
            .map(|c| format!("{:>w$}", cells.get(c).map_or("", |s| s.as_str()), w = widths[c]))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let mut out = line(header);
    out.push('\n');
    for row in rows {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

/// Labelled square or rectangular matrix as text.
pub fn matrix_text(corner: &str, row_labels: &[String], col_labels: &[String], rows: &[Vec<f64>]) -> String {
    let header: Vec<String> = std::iter::once(corner.to_string())
        .chain(col_labels.iter().cloned())
        .collect();
    let body: Vec<Vec<String>> = row_labels
        .iter()
        .zip(rows)
        .map(|(label, row)| {
            std::iter::once(label.clone())
                .chain(row.iter().map(|&v| fmt4(v)))
                .collect()
        })
        .collect();
    text_table(&header, &body)
}

/// Two matrices over the same labels, printed next to each other.
pub fn side_by_side(
    left_title: &str,
    right_title: &str,
    labels: &[String],
    left: &[Vec<f64>],
    right: &[Vec<f64>],
) -> String {
    let mut header = vec![String::new()];
    header.extend(labels.iter().map(|l| format!("{left_title}:{l}")));
    header.push("|".into());
    header.extend(labels.iter().map(|l| format!("{right_title}:{l}")));
    let body: Vec<Vec<String>> = labels
        .iter()
        .enumerate()
        .map(|(i, label)| {
            let mut row = vec![label.clone()];
            row.extend(left[i].iter().map(|&v| fmt4(v)));
            row.push("|".into());
            row.extend(right[i].iter().map(|&v| fmt4(v)));
            row
        })
        .collect();
    text_table(&header, &body)
}

/// CSV with a header of column labels; each row starts with its own label.
pub fn matrix_csv(corner: &str, row_labels: &[String], col_labels: &[String], rows: &[Vec<f64>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(std::iter::once(corner).chain(col_labels.iter().map(String::as_str)))?;
    for (label, row) in row_labels.iter().zip(rows) {
        let cells: Vec<String> = std::iter::once(label.clone())
            .chain(row.iter().map(|v| v.to_string()))
            .collect();
        w.write_record(&cells)?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| e.into_error())?).expect("csv output is utf-8"))
}

/// Pretty JSON followed by a newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Step table of a selection or basis trace.
pub fn trace_text(trace: &SelectionTrace) -> String {
    let header: Vec<String> = ["step", "added", "value", "domain"].map(String::from).to_vec();
    let rows: Vec<Vec<String>> = trace
        .steps
        .iter()
        .enumerate()
        .map(|(i, s)| vec![(i + 1).to_string(), s.variable.clone(), fmt4(s.value), s.domain_size.to_string()])
        .collect();
    let mut out = text_table(&header, &rows);
    if !trace.pruned.is_empty() {
        out.push_str(&format!("pruned: {}\n", trace.pruned.join(", ")));
    }
    out.push_str(&format!("basis: {}\n", trace.basis.join(", ")));
    if let Some(t) = trace.tau_final {
        out.push_str(&format!("tau (basis): {}\n", fmt4(t)));
    }
    if let Some(t) = trace.tau_all {
        out.push_str(&format!("tau (all): {}\n", fmt4(t)));
    }
    if let Some(e) = trace.ep_final {
        out.push_str(&format!("Ep (basis): {}\n", fmt4(e)));
    }
    out
}
