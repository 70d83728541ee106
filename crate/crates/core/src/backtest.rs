//! Crisis-gated momentum-in-value strategy on SMB and its buy-and-hold benchmark.

use std::fmt;
use std::str::FromStr;

use chrono::NaiveDate;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::panel::FactorPanel;

pub const TRADING_DAYS: f64 = 252.0;
pub const DEFAULT_SIGNAL_WINDOW: usize = 9;

/// When a position computed from data through day t−1 is applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Execution {
    /// signal[t] earns target[t].
    SameDay,
    /// signal[t] earns target[t+1].
    NextDay,
}

impl fmt::Display for Execution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Execution::SameDay => "same-day",
            Execution::NextDay => "next-day",
        })
    }
}

impl FromStr for Execution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "same-day" => Ok(Execution::SameDay),
            "next-day" => Ok(Execution::NextDay),
            other => Err(Error::InvalidArgument(format!("unknown execution `{other}`"))),
        }
    }
}

/// Position in {−1, 0, +1}: the sign of the compounded `hml` return over the
/// `window` days before t, taken only on days labelled `crisis_index`.
pub fn strategy_signal(hml: &[f64], labels: &[usize], crisis_index: usize, window: usize) -> Result<Vec<i8>> {
    if window == 0 {
        return Err(Error::InvalidArgument("signal window must be at least 1".into()));
    }
    if hml.len() != labels.len() {
        return Err(Error::InvalidArgument("labels do not match return series".into()));
    }
    Ok((0..hml.len())
        .map(|t| {
            if t < window || labels[t] != crisis_index {
                return 0;
            }
            let growth: f64 = hml[t - window..t].iter().map(|r| 1.0 + r / 100.0).product();
            let trailing = growth - 1.0;
            if trailing > 0.0 {
                1
            } else if trailing < 0.0 {
                -1
            } else {
                0
            }
        })
        .collect())
}

pub fn apply_signal(signal: &[i8], target: &[f64], execution: Execution) -> Result<Vec<f64>> {
    if signal.len() != target.len() {
        return Err(Error::InvalidArgument("signal and target lengths differ".into()));
    }
    Ok(match execution {
        Execution::SameDay => signal.iter().zip(target).map(|(&s, &r)| f64::from(s) * r).collect(),
        Execution::NextDay => (0..target.len())
            .map(|t| {
                if t == 0 {
                    0.0
                } else {
                    f64::from(signal[t - 1]) * target[t]
                }
            })
            .collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BacktestReport {
    #[serde(skip)]
    pub dates: Vec<NaiveDate>,
    /// Percent.
    #[serde(skip)]
    pub daily_returns: Vec<f64>,
    /// Geometric annualized return, percent.
    pub annual_return: f64,
    /// None when daily returns have zero variance.
    pub sharpe: Option<f64>,
    /// Percent, ≤ 0.
    pub max_drawdown: f64,
    pub n_active_days: usize,
    pub n_days: usize,
}

/// Annualized geometric return, Sharpe (sample std, √252) and maximum
/// drawdown of the compounded wealth curve. Active days are nonzero returns.
/// Sharpe is None when the returns are constant.
pub fn performance_metrics(dates: &[NaiveDate], returns: &[f64]) -> Result<BacktestReport> {
    let n = returns.len();
    if n == 0 {
        return Err(Error::InvalidArgument("empty return series".into()));
    }
    if dates.len() != n {
        return Err(Error::InvalidArgument("dates and returns lengths differ".into()));
    }
    let log_growth: f64 = returns.iter().map(|r| (r / 100.0).ln_1p()).sum();
    let annual_return = 100.0 * ((log_growth * TRADING_DAYS / n as f64).exp() - 1.0);

    let mean = returns.iter().sum::<f64>() / n as f64;
    let sharpe = if n > 1 {
        let var = returns.iter().map(|r| (r - mean) * (r - mean)).sum::<f64>() / (n - 1) as f64;
        // rounding leaves a tiny spread on constant series; treat it as zero
        let sd = var.sqrt();
        (sd > 1e-12 * mean.abs().max(f64::MIN_POSITIVE)).then(|| mean / sd * TRADING_DAYS.sqrt())
    } else {
        None
    };

    let mut wealth = 1.0f64;
    let mut peak = 1.0f64;
    let mut max_drawdown = 0.0f64;
    for r in returns {
        wealth *= 1.0 + r / 100.0;
        peak = peak.max(wealth);
        max_drawdown = max_drawdown.min((wealth / peak - 1.0) * 100.0);
    }

    Ok(BacktestReport {
        dates: dates.to_vec(),
        daily_returns: returns.to_vec(),
        annual_return,
        sharpe,
        max_drawdown,
        n_active_days: returns.iter().filter(|&&r| r != 0.0).count(),
        n_days: n,
    })
}

#[derive(Debug, Clone)]
pub struct BacktestConfig {
    pub signal_factor: String,
    pub traded_factor: String,
    pub crisis_index: usize,
    pub window: usize,
    pub start: Option<NaiveDate>,
    pub end: Option<NaiveDate>,
    pub execution: Execution,
}

impl Default for BacktestConfig {
    fn default() -> Self {
        Self {
            signal_factor: "HML".into(),
            traded_factor: "SMB".into(),
            crisis_index: 2,
            window: DEFAULT_SIGNAL_WINDOW,
            start: NaiveDate::from_ymd_opt(1995, 1, 1),
            end: NaiveDate::from_ymd_opt(2024, 12, 31),
            execution: Execution::SameDay,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BacktestComparison {
    pub start: Option<NaiveDate>,
    pub end: Option<NaiveDate>,
    pub window: usize,
    pub execution: Execution,
    pub strategy: BacktestReport,
    pub buy_and_hold: BacktestReport,
}

impl BacktestComparison {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// `date,strategy,buy_and_hold` daily percent returns.
    pub fn returns_csv(&self) -> String {
        let mut out = String::from("date,strategy,buy_and_hold\n");
        for ((d, s), b) in self
            .strategy
            .dates
            .iter()
            .zip(&self.strategy.daily_returns)
            .zip(&self.buy_and_hold.daily_returns)
        {
            out.push_str(&format!("{d},{s:.6},{b:.6}\n"));
        }
        out
    }
}

/// Signal over the full panel (so the window has history before `start`),
/// then both return streams restricted to [start, end].
pub fn run_backtest(panel: &FactorPanel, labels: &[usize], config: &BacktestConfig) -> Result<BacktestComparison> {
    if labels.len() != panel.n_rows() {
        return Err(Error::InvalidArgument("labels do not match panel length".into()));
    }
    let hml = panel.column_by_name(&config.signal_factor)?;
    let smb = panel.column_by_name(&config.traded_factor)?;
    let signal = strategy_signal(&hml, labels, config.crisis_index, config.window)?;
    let strategy = apply_signal(&signal, &smb, config.execution)?;
    let benchmark = apply_signal(&vec![1; smb.len()], &smb, Execution::SameDay)?;

    let start = config.start.unwrap_or(NaiveDate::MIN);
    let end = config.end.unwrap_or(NaiveDate::MAX);
    if start > end {
        return Err(Error::InvalidArgument("backtest start is after end".into()));
    }
    let range = panel.date_range(start, end);
    if range.is_empty() {
        return Err(Error::InvalidArgument("no trading days in the backtest window".into()));
    }
    let dates = &panel.dates()[range.clone()];
    Ok(BacktestComparison {
        start: config.start,
        end: config.end,
        window: config.window,
        execution: config.execution,
        strategy: performance_metrics(dates, &strategy[range.clone()])?,
        buy_and_hold: performance_metrics(dates, &benchmark[range])?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dates(n: usize) -> Vec<NaiveDate> {
        let d0 = NaiveDate::from_ymd_opt(2020, 1, 1).unwrap();
        (0..n).map(|i| d0 + chrono::Duration::days(i as i64)).collect()
    }

    #[test]
    fn constant_return_closed_form() {
        let r = vec![0.03; 252];
        let rep = performance_metrics(&dates(252), &r).unwrap();
        let expected = 100.0 * (1.0003f64.powi(252) - 1.0);
        assert!((rep.annual_return - expected).abs() < 1e-9);
        assert!((rep.annual_return - 7.86).abs() < 0.01);
        assert_eq!(rep.max_drawdown, 0.0);
        assert_eq!(rep.sharpe, None);
    }

    #[test]
    fn up_then_down_drawdown() {
        let rep = performance_metrics(&dates(2), &[10.0, -10.0]).unwrap();
        assert!((rep.max_drawdown + 10.0).abs() < 1e-12);
    }

    #[test]
    fn signal_rules() {
        let hml = vec![0.1; 12];
        assert!(strategy_signal(&hml, &[0; 12], 2, 9).unwrap().iter().all(|&s| s == 0));
        let sig = strategy_signal(&hml, &[2; 12], 2, 9).unwrap();
        assert_eq!(&sig[..9], &[0; 9]);
        assert_eq!(&sig[9..], &[1, 1, 1]);
        let neg: Vec<f64> = hml.iter().map(|r| -r).collect();
        assert_eq!(strategy_signal(&neg, &[2; 12], 2, 9).unwrap()[11], -1);
        assert_eq!(strategy_signal(&[0.0; 12], &[2; 12], 2, 9).unwrap()[11], 0);
        assert!(strategy_signal(&hml, &[2; 12], 2, 0).is_err());
    }

    #[test]
    fn apply_identities() {
        let r = [0.5, -1.0, 2.0];
        assert_eq!(apply_signal(&[1, 1, 1], &r, Execution::SameDay).unwrap(), r.to_vec());
        assert_eq!(
            apply_signal(&[-1, -1, -1], &r, Execution::SameDay).unwrap(),
            vec![-0.5, 1.0, -2.0]
        );
        assert_eq!(apply_signal(&[0, 0, 0], &r, Execution::SameDay).unwrap(), vec![0.0; 3]);
        assert_eq!(
            apply_signal(&[1, -1, 1], &r, Execution::NextDay).unwrap(),
            vec![0.0, -1.0, -2.0]
        );
    }
}
