//! Historical stress-episode checks: crisis detection rates, early-warning
//! lead times and per-event Granger classification.

use std::fmt;
use std::path::Path;

use chrono::NaiveDate;

use crate::error::{Error, Result};
use crate::granger::{granger_f_test, pooled_mask, regime_lag_mask};
use crate::numerics::binomial_tail;
use crate::panel::FactorPanel;

/// Success probability of a CHECK under the null, used in the binomial summary.
pub const EVENT_ALPHA: f64 = 0.10;
/// Consecutive crisis days that make a detection sustained.
pub const DEFAULT_MIN_RUN: usize = 3;
/// Trading days after detection searched for the volatility peak.
pub const DEFAULT_PEAK_HORIZON: usize = 90;
/// Approximate binomial figure quoted alongside the exact tail in reports.
pub const PUBLISHED_BINOMIAL_APPROX: f64 = 0.001;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventWindow {
    pub name: String,
    pub start: NaiveDate,
    pub end: NaiveDate,
    pub expected_crisis: bool,
}

impl EventWindow {
    pub fn new(name: &str, start: NaiveDate, end: NaiveDate) -> Result<Self> {
        if start > end {
            return Err(Error::InvalidArgument(format!("event `{name}` ends before it starts")));
        }
        Ok(Self {
            name: name.to_string(),
            start,
            end,
            expected_crisis: true,
        })
    }

    pub fn contains(&self, d: NaiveDate) -> bool {
        self.start <= d && d <= self.end
    }

    /// Position range of `dates` inside the window.
    pub fn index_range(&self, dates: &[NaiveDate]) -> std::ops::Range<usize> {
        let lo = dates.partition_point(|d| *d < self.start);
        let hi = dates.partition_point(|d| *d <= self.end);
        lo..hi.max(lo)
    }
}

fn ymd(y: i32, m: u32, d: u32) -> NaiveDate {
    NaiveDate::from_ymd_opt(y, m, d).expect("valid calendar date")
}

/// The six stress episodes shipped as the default configuration.
pub fn default_events() -> Vec<EventWindow> {
    [
        ("2008 Financial", ymd(2008, 7, 1), ymd(2009, 6, 30)),
        ("2011 EU Debt", ymd(2011, 7, 1), ymd(2011, 10, 31)),
        ("2015 China", ymd(2015, 8, 1), ymd(2015, 10, 31)),
        ("2018 Vol Shock", ymd(2018, 1, 22), ymd(2018, 3, 16)),
        ("2020 COVID", ymd(2020, 2, 1), ymd(2020, 6, 30)),
        ("2022 Rate Hikes", ymd(2022, 1, 3), ymd(2022, 10, 31)),
    ]
    .into_iter()
    .map(|(n, s, e)| EventWindow {
        name: n.to_string(),
        start: s,
        end: e,
        expected_crisis: true,
    })
    .collect()
}

/// Parses an event file: one `name,start,end[,expected_crisis]` per line,
/// ISO dates, `#` comments, optional `name,start,end` header.
pub fn parse_events(text: &str) -> Result<Vec<EventWindow>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.first().is_some_and(|f| f.eq_ignore_ascii_case("name")) {
            continue;
        }
        if fields.len() < 3 || fields.len() > 4 {
            return Err(Error::parse(i + 1, "expected name,start,end[,expected_crisis]"));
        }
        let date = |s: &str| {
            NaiveDate::parse_from_str(s, "%Y-%m-%d").map_err(|_| Error::parse(i + 1, format!("bad date `{s}`")))
        };
        let mut w = EventWindow::new(fields[0], date(fields[1])?, date(fields[2])?)
            .map_err(|e| Error::parse(i + 1, e.to_string()))?;
        if let Some(flag) = fields.get(3) {
            w.expected_crisis = match flag.to_ascii_lowercase().as_str() {
                "true" | "1" | "yes" => true,
                "false" | "0" | "no" => false,
                other => return Err(Error::parse(i + 1, format!("bad flag `{other}`"))),
            };
        }
        out.push(w);
    }
    Ok(out)
}

pub fn events_to_text(events: &[EventWindow]) -> String {
    let mut out = String::from("name,start,end,expected_crisis\n");
    for e in events {
        out.push_str(&format!("{},{},{},{}\n", e.name, e.start, e.end, e.expected_crisis));
    }
    out
}

pub fn load_events(path: &Path) -> Result<Vec<EventWindow>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_events(&text)
}

/// Share of the window's trading days labelled `crisis_index`.
pub fn detection_rate(labels: &[usize], dates: &[NaiveDate], window: &EventWindow, crisis_index: usize) -> Result<f64> {
    let range = window.index_range(dates);
    if range.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "event `{}` has no trading days in the panel",
            window.name
        )));
    }
    let n = range.len();
    let hits = labels[range].iter().filter(|&&l| l == crisis_index).count();
    Ok(hits as f64 / n as f64)
}

fn first_run_start(
    labels: &[usize],
    range: std::ops::Range<usize>,
    crisis_index: usize,
    min_run: usize,
) -> Option<usize> {
    range
        .into_iter()
        .find(|&t| t + min_run <= labels.len() && labels[t..t + min_run].iter().all(|&l| l == crisis_index))
}

/// Earliest day in the window starting `min_run` consecutive crisis labels.
/// The run may continue past the window end.
pub fn first_sustained_detection(
    labels: &[usize],
    dates: &[NaiveDate],
    window: &EventWindow,
    crisis_index: usize,
    min_run: usize,
) -> Option<NaiveDate> {
    let min_run = min_run.max(1);
    first_run_start(labels, window.index_range(dates), crisis_index, min_run).map(|t| dates[t])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LeadTime {
    pub detection: NaiveDate,
    pub peak: NaiveDate,
    /// Calendar days from detection to peak.
    pub lead_days: i64,
}

/// Detection-to-peak lead: the peak is the volatility maximum over the
/// detection day and the `horizon` trading days after it.
pub fn lead_time(
    labels: &[usize],
    dates: &[NaiveDate],
    vol: &[f64],
    window: &EventWindow,
    crisis_index: usize,
    min_run: usize,
    horizon: usize,
) -> Option<LeadTime> {
    let start = first_run_start(labels, window.index_range(dates), crisis_index, min_run.max(1))?;
    let end = (start + horizon).min(vol.len() - 1);
    let mut peak = start;
    for t in start..=end {
        if vol[t] > vol[peak] {
            peak = t;
        }
    }
    Some(LeadTime {
        detection: dates[start],
        peak: dates[peak],
        lead_days: (dates[peak] - dates[start]).num_days(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// Forward p < 0.10 and reverse p > 0.10.
    Check,
    /// Forward p smaller than reverse but not below 0.10.
    Dir,
    Cross,
    Untestable,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Classification::Check => "CHECK",
            Classification::Dir => "DIR",
            Classification::Cross => "CROSS",
            Classification::Untestable => "UNTESTABLE",
        };
        f.write_str(s)
    }
}

pub fn classify(p_forward: f64, p_reverse: f64) -> Classification {
    if p_forward < EVENT_ALPHA && p_reverse > EVENT_ALPHA {
        Classification::Check
    } else if p_forward < p_reverse && p_forward >= EVENT_ALPHA {
        Classification::Dir
    } else {
        Classification::Cross
    }
}

/// Which days of an event window enter its Granger test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventSample<'a> {
    /// Every trading day of the window; lags taken within the window.
    RawWindow,
    /// Only window days whose L lags share the crisis label.
    CrisisDays { labels: &'a [usize], crisis_index: usize },
}

#[derive(Debug, Clone)]
pub struct EventTestConfig<'a> {
    pub lag: usize,
    pub source: String,
    pub target: String,
    pub sample: EventSample<'a>,
}

impl Default for EventTestConfig<'_> {
    fn default() -> Self {
        Self {
            lag: 9,
            source: "HML".into(),
            target: "SMB".into(),
            sample: EventSample::RawWindow,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EventValidation {
    pub name: String,
    /// Trading days (raw mode) or crisis days (crisis mode) in the window.
    pub days: usize,
    pub p_forward: Option<f64>,
    pub p_reverse: Option<f64>,
    pub classification: Classification,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    pub rows: Vec<EventValidation>,
    pub checks: usize,
    pub testable: usize,
    /// Exact P(X >= checks), X ~ Binomial(testable, 0.10).
    pub binomial_tail: f64,
}

impl ValidationReport {
    /// CSV `event,days,p_fwd,p_rev,classification` plus a binomial footer row.
    pub fn to_csv(&self) -> String {
        let fmt_p = |p: Option<f64>| p.map_or_else(|| "NA".to_string(), |v| format!("{v:.6}"));
        let mut out = String::from("event,days,p_fwd,p_rev,classification\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.name,
                r.days,
                fmt_p(r.p_forward),
                fmt_p(r.p_reverse),
                r.classification
            ));
        }
        out.push_str(&format!(
            "binomial_tail,{},{},{:.6e},exact for {} of {} at p={}; published approximation {}\n",
            self.testable,
            self.checks,
            self.binomial_tail,
            self.checks,
            self.testable,
            EVENT_ALPHA,
            PUBLISHED_BINOMIAL_APPROX
        ));
        out
    }
}

/// Tests `source → target` and the reverse inside each event window at a
/// fixed lag and classifies the pair of p-values.
pub fn event_granger_validation(
    panel: &FactorPanel,
    windows: &[EventWindow],
    config: &EventTestConfig,
) -> Result<ValidationReport> {
    let src = panel
        .factor_index(&config.source)
        .ok_or_else(|| Error::MissingColumn(config.source.clone()))?;
    let tgt = panel
        .factor_index(&config.target)
        .ok_or_else(|| Error::MissingColumn(config.target.clone()))?;
    if let EventSample::CrisisDays { labels, .. } = config.sample {
        if labels.len() != panel.n_rows() {
            return Err(Error::InvalidArgument("labels do not match panel length".into()));
        }
    }
    let lag = config.lag;
    let x_all = panel.column(src);
    let y_all = panel.column(tgt);

    let mut rows = Vec::with_capacity(windows.len());
    for w in windows {
        let range = w.index_range(panel.dates());
        let x = &x_all[range.clone()];
        let y = &y_all[range.clone()];
        let (days, mask) = match config.sample {
            EventSample::RawWindow => (range.len(), pooled_mask(range.len(), lag)),
            EventSample::CrisisDays { labels, crisis_index } => {
                let sub = &labels[range.clone()];
                (
                    sub.iter().filter(|&&l| l == crisis_index).count(),
                    regime_lag_mask(sub, crisis_index, lag),
                )
            }
        };
        let tested = if range.len() < 2 * lag + 12 {
            None
        } else {
            granger_f_test(y, x, lag, &mask)
                .and_then(|fwd| granger_f_test(x, y, lag, &mask).map(|rev| (fwd.p_value, rev.p_value)))
                .ok()
        };
        rows.push(match tested {
            Some((pf, pr)) => EventValidation {
                name: w.name.clone(),
                days,
                p_forward: Some(pf),
                p_reverse: Some(pr),
                classification: classify(pf, pr),
            },
            None => EventValidation {
                name: w.name.clone(),
                days,
                p_forward: None,
                p_reverse: None,
                classification: Classification::Untestable,
            },
        });
    }
    let testable = rows
        .iter()
        .filter(|r| r.classification != Classification::Untestable)
        .count();
    let checks = rows
        .iter()
        .filter(|r| r.classification == Classification::Check)
        .count();
    Ok(ValidationReport {
        binomial_tail: binomial_tail(checks as u64, testable as u64, EVENT_ALPHA)?,
        rows,
        checks,
        testable,
    })
}
