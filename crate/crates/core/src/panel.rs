//! Daily factor-return panels: loading from the published daily CSV layout,
//! merging, slicing, the cross-factor volatility norm and weekly compounding.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use chrono::{Datelike, NaiveDate};

use crate::error::{Error, Result};

/// Missing-data markers used by the published factor files.
pub const MISSING_SENTINELS: [f64; 2] = [-99.99, -999.0];

/// Dated T×d matrix of daily returns in percent.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorPanel {
    dates: Vec<NaiveDate>,
    factor_names: Vec<String>,
    // row-major, T * d
    values: Vec<f64>,
}

impl FactorPanel {
    pub fn new(dates: Vec<NaiveDate>, factor_names: Vec<String>, values: Vec<f64>) -> Result<Self> {
        let d = factor_names.len();
        if d == 0 {
            return Err(Error::InvalidPanel("panel needs at least one factor".into()));
        }
        let distinct: HashSet<&str> = factor_names.iter().map(String::as_str).collect();
        if distinct.len() != d {
            return Err(Error::InvalidPanel("factor names must be distinct".into()));
        }
        if values.len() != dates.len() * d {
            return Err(Error::InvalidPanel(format!(
                "{} values do not fill {} rows of {} factors",
                values.len(),
                dates.len(),
                d
            )));
        }
        if let Some(w) = dates.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPanel(format!(
                "dates not strictly increasing at {}",
                w[1]
            )));
        }
        if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidPanel(format!("non-finite value on {}", dates[pos / d])));
        }
        Ok(Self {
            dates,
            factor_names,
            values,
        })
    }

    pub fn from_rows(dates: Vec<NaiveDate>, factor_names: Vec<String>, rows: &[Vec<f64>]) -> Result<Self> {
        let d = factor_names.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != d) {
            return Err(Error::InvalidPanel(format!(
                "row of length {} in a {d}-factor panel",
                bad.len()
            )));
        }
        Self::new(dates, factor_names, rows.concat())
    }

    pub fn n_rows(&self) -> usize {
        self.dates.len()
    }

    pub fn n_factors(&self) -> usize {
        self.factor_names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dates.is_empty()
    }

    pub fn dates(&self) -> &[NaiveDate] {
        &self.dates
    }

    pub fn factor_names(&self) -> &[String] {
        &self.factor_names
    }

    pub fn row(&self, t: usize) -> &[f64] {
        let d = self.n_factors();
        &self.values[t * d..(t + 1) * d]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.values.chunks_exact(self.n_factors())
    }

    /// Row-major backing storage.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn factor_index(&self, name: &str) -> Option<usize> {
        self.factor_names.iter().position(|n| n.eq_ignore_ascii_case(name))
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        self.rows().map(|r| r[j]).collect()
    }

    pub fn column_by_name(&self, name: &str) -> Result<Vec<f64>> {
        self.factor_index(name)
            .map(|j| self.column(j))
            .ok_or_else(|| Error::MissingColumn(name.to_string()))
    }

    /// Keeps rows `range` (by position).
    pub fn select_rows(&self, range: std::ops::Range<usize>) -> FactorPanel {
        let d = self.n_factors();
        FactorPanel {
            dates: self.dates[range.clone()].to_vec(),
            factor_names: self.factor_names.clone(),
            values: self.values[range.start * d..range.end * d].to_vec(),
        }
    }

    /// Position range of rows with `start <= date <= end`.
    pub fn date_range(&self, start: NaiveDate, end: NaiveDate) -> std::ops::Range<usize> {
        let lo = self.dates.partition_point(|d| *d < start);
        let hi = self.dates.partition_point(|d| *d <= end);
        lo..hi.max(lo)
    }

    /// Canonical CSV: `date,<factors...>`, ISO dates, six decimals.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.n_rows() * (11 + 12 * self.n_factors()));
        out.push_str("date");
        for name in &self.factor_names {
            out.push(',');
            out.push_str(name);
        }
        out.push('\n');
        for (date, row) in self.dates.iter().zip(self.rows()) {
            let _ = write!(out, "{}", date.format("%Y-%m-%d"));
            for v in row {
                let _ = write!(out, ",{v:.6}");
            }
            out.push('\n');
        }
        out
    }

    /// Parses the canonical CSV written by [`FactorPanel::to_csv`].
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "empty panel file"))?;
        let mut fields = header.split(',').map(str::trim);
        if fields.next() != Some("date") {
            return Err(Error::parse(1, "first column must be `date`"));
        }
        let names: Vec<String> = fields.map(str::to_string).collect();
        let mut dates = Vec::new();
        let mut values = Vec::new();
        for (idx, line) in lines {
            let line_no = idx + 1;
            let mut fields = line.split(',').map(str::trim);
            let date_tok = fields.next().unwrap_or_default();
            let date = NaiveDate::parse_from_str(date_tok, "%Y-%m-%d")
                .map_err(|_| Error::parse(line_no, format!("bad date `{date_tok}`")))?;
            let mut n = 0;
            for tok in fields {
                let v: f64 = tok
                    .parse()
                    .map_err(|_| Error::parse(line_no, format!("bad number `{tok}`")))?;
                values.push(v);
                n += 1;
            }
            if n != names.len() {
                return Err(Error::parse(
                    line_no,
                    format!("expected {} values, found {n}", names.len()),
                ));
            }
            dates.push(date);
        }
        FactorPanel::new(dates, names, values)
    }

    pub fn read_csv(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_csv(&text)
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_csv()).map_err(|e| Error::io(path, e))
    }
}

fn is_sentinel(v: f64) -> bool {
    MISSING_SENTINELS.iter().any(|s| (v - s).abs() < 1e-9)
}

fn parse_yyyymmdd(tok: &str) -> Option<NaiveDate> {
    if tok.len() != 8 || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    NaiveDate::parse_from_str(tok, "%Y%m%d").ok()
}

/// Parses a daily factor file in the published layout: free-form preamble,
/// a header row naming the columns, `YYYYMMDD` data rows, optional footer.
///
/// Columns are looked up by name (case-insensitive) and emitted in the order
/// of `expected_columns`, under those labels. Rows where any requested value
/// equals a missing-data sentinel are dropped.
pub fn parse_ff_daily_csv(text: &str, expected_columns: &[&str]) -> Result<FactorPanel> {
    let lines: Vec<&str> = text.lines().collect();

    let mut header_at = None;
    for (i, line) in lines.iter().enumerate() {
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() < 2 || parse_yyyymmdd(fields[0]).is_some() {
            continue;
        }
        if fields[1..]
            .iter()
            .any(|f| expected_columns.iter().any(|c| c.eq_ignore_ascii_case(f)))
        {
            header_at = Some((i, fields));
            break;
        }
    }
    let (header_idx, header) = header_at.ok_or_else(|| match expected_columns.first() {
        Some(c) => Error::MissingColumn(c.to_string()),
        None => Error::InvalidArgument("no columns requested".into()),
    })?;

    let mut positions = Vec::with_capacity(expected_columns.len());
    for col in expected_columns {
        let pos = header
            .iter()
            .skip(1)
            .position(|h| h.eq_ignore_ascii_case(col))
            .ok_or_else(|| Error::MissingColumn(col.to_string()))?;
        positions.push(pos + 1);
    }

    let mut dates = Vec::new();
    let mut values = Vec::new();
    let mut row = Vec::with_capacity(positions.len());
    for (i, line) in lines.iter().enumerate().skip(header_idx + 1) {
        let line_no = i + 1;
        let trimmed = line.trim();
        let first = trimmed.split(',').next().unwrap_or("").trim();
        if !first.starts_with(|c: char| c.is_ascii_digit()) {
            // blank line or footer text ends the data block
            if dates.is_empty() && trimmed.is_empty() {
                continue;
            }
            break;
        }
        let date = parse_yyyymmdd(first).ok_or_else(|| Error::parse(line_no, format!("malformed date `{first}`")))?;
        let fields: Vec<&str> = trimmed.split(',').map(str::trim).collect();
        row.clear();
        for &p in &positions {
            let tok = fields
                .get(p)
                .ok_or_else(|| Error::parse(line_no, format!("row has no column {p}")))?;
            let v: f64 = tok
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad number `{tok}`")))?;
            row.push(v);
        }
        if row.iter().any(|v| !v.is_finite() || is_sentinel(*v)) {
            continue;
        }
        if let Some(last) = dates.last() {
            if date <= *last {
                return Err(Error::parse(line_no, format!("date {date} out of order")));
            }
        }
        dates.push(date);
        values.extend_from_slice(&row);
    }

    FactorPanel::new(dates, expected_columns.iter().map(|c| c.to_string()).collect(), values)
}

/// Inner join on dates; columns of `a` precede columns of `b`.
pub fn merge_on_dates(a: &FactorPanel, b: &FactorPanel) -> Result<FactorPanel> {
    let a_names: HashSet<&str> = a.factor_names.iter().map(String::as_str).collect();
    if let Some(dup) = b.factor_names.iter().find(|n| a_names.contains(n.as_str())) {
        return Err(Error::InvalidPanel(format!("factor `{dup}` present in both panels")));
    }
    let mut dates = Vec::new();
    let mut values = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.n_rows() && j < b.n_rows() {
        match a.dates[i].cmp(&b.dates[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                dates.push(a.dates[i]);
                values.extend_from_slice(a.row(i));
                values.extend_from_slice(b.row(j));
                i += 1;
                j += 1;
            }
        }
    }
    if dates.is_empty() {
        return Err(Error::InvalidPanel("panels share no dates".into()));
    }
    let names = a.factor_names.iter().chain(&b.factor_names).cloned().collect();
    FactorPanel::new(dates, names, values)
}

/// Rows with `start <= date <= end`. An empty result is not an error.
pub fn slice_dates(p: &FactorPanel, start: NaiveDate, end: NaiveDate) -> Result<FactorPanel> {
    if start > end {
        return Err(Error::InvalidArgument(format!("slice start {start} after end {end}")));
    }
    Ok(p.select_rows(p.date_range(start, end)))
}

/// Per-day Euclidean norm of the return vector, aligned with `p.dates()`.
pub fn volatility_norm(p: &FactorPanel) -> Vec<f64> {
    p.rows().map(|r| r.iter().map(|v| v * v).sum::<f64>().sqrt()).collect()
}

fn week_key(d: NaiveDate) -> (i32, u32) {
    let w = d.iso_week();
    (w.year(), w.week())
}

/// Position ranges of consecutive rows sharing an ISO week.
pub fn iso_week_groups(dates: &[NaiveDate]) -> Vec<std::ops::Range<usize>> {
    let mut groups = Vec::new();
    let mut start = 0;
    for t in 1..=dates.len() {
        if t == dates.len() || week_key(dates[t]) != week_key(dates[start]) {
            if t > start {
                groups.push(start..t);
            }
            start = t;
        }
    }
    groups
}

/// Compounds daily percent returns into ISO-week returns, dated on the last
/// trading day of each week.
pub fn weekly_aggregate(p: &FactorPanel) -> Result<FactorPanel> {
    let d = p.n_factors();
    let groups = iso_week_groups(&p.dates);
    let mut dates = Vec::with_capacity(groups.len());
    let mut values = Vec::with_capacity(groups.len() * d);
    for g in groups {
        dates.push(p.dates[g.end - 1]);
        for j in 0..d {
            let growth: f64 = g.clone().map(|t| 1.0 + p.row(t)[j] / 100.0).product();
            values.push(100.0 * (growth - 1.0));
        }
    }
    FactorPanel::new(dates, p.factor_names.clone(), values)
}

/// Modal daily label per ISO week; ties go to the higher (more severe) regime.
pub fn weekly_labels(dates: &[NaiveDate], labels: &[usize]) -> Vec<usize> {
    iso_week_groups(dates)
        .into_iter()
        .map(|g| {
            let max_label = labels[g.clone()].iter().copied().max().unwrap_or(0);
            let mut counts = vec![0usize; max_label + 1];
            for &l in &labels[g] {
                counts[l] += 1;
            }
            let best = counts.iter().copied().max().unwrap_or(0);
            counts.iter().rposition(|&c| c == best).unwrap_or(0)
        })
        .collect()
}
