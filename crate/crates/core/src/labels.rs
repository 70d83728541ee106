//! `date,regime` label files.

use std::path::Path;

use chrono::NaiveDate;

use crate::error::{Error, Result};
use crate::panel::FactorPanel;

pub fn labels_to_csv(dates: &[NaiveDate], labels: &[usize]) -> String {
    let mut out = String::from("date,regime\n");
    for (d, l) in dates.iter().zip(labels) {
        out.push_str(&format!("{d},{l}\n"));
    }
    out
}

pub fn parse_labels_csv(text: &str) -> Result<(Vec<NaiveDate>, Vec<usize>)> {
    let mut dates = Vec::new();
    let mut labels = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || (i == 0 && line.starts_with("date")) {
            continue;
        }
        let (d, l) = line
            .split_once(',')
            .ok_or_else(|| Error::parse(i + 1, "expected date,regime"))?;
        let date = NaiveDate::parse_from_str(d.trim(), "%Y-%m-%d")
            .map_err(|_| Error::parse(i + 1, format!("bad date `{}`", d.trim())))?;
        let label = l
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::parse(i + 1, format!("bad regime `{}`", l.trim())))?;
        if dates.last().is_some_and(|prev| *prev >= date) {
            return Err(Error::parse(i + 1, "dates must be strictly increasing"));
        }
        dates.push(date);
        labels.push(label);
    }
    Ok((dates, labels))
}

pub fn write_labels(path: &Path, dates: &[NaiveDate], labels: &[usize]) -> Result<()> {
    std::fs::write(path, labels_to_csv(dates, labels)).map_err(|e| Error::io(path, e))
}

/// Reads a label file and checks it covers exactly the panel's dates.
pub fn read_labels_for(path: &Path, panel: &FactorPanel) -> Result<Vec<usize>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let (dates, labels) = parse_labels_csv(&text)?;
    if dates != panel.dates() {
        return Err(Error::InvalidPanel(format!(
            "label dates ({} rows) do not match panel dates ({} rows)",
            dates.len(),
            panel.n_rows()
        )));
    }
    Ok(labels)
}
