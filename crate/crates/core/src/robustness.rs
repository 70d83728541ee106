//! Robustness checks for the crisis-regime Granger finding: a volatility
//! threshold detector, lag-cap sweeps, date splits, transition windows and
//! weekly sampling.

use chrono::NaiveDate;

use crate::error::{Error, Result};
use crate::granger::{
    granger_f_test, granger_test_bic, pairwise_regime_matrix, regime_lag_mask, FTest, GrangerCell, GrangerResult,
    RegimeTag,
};
use crate::panel::{volatility_norm, weekly_aggregate, weekly_labels, FactorPanel};

pub const DEFAULT_RV_WINDOW: usize = 21;
pub const DEFAULT_RV_QUANTILE: f64 = 0.90;

/// Type-7 (linear interpolation) sample quantile.
pub fn quantile_type7(values: &[f64], q: f64) -> Result<f64> {
    if values.is_empty() || !(0.0..=1.0).contains(&q) {
        return Err(Error::InvalidArgument("quantile needs data and q in [0, 1]".into()));
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let h = (v.len() - 1) as f64 * q;
    let lo = h.floor() as usize;
    let hi = (lo + 1).min(v.len() - 1);
    Ok(v[lo] + (h - lo as f64) * (v[hi] - v[lo]))
}

/// Trailing `window`-day mean of the volatility norm; None during warm-up.
pub fn realized_volatility(panel: &FactorPanel, window: usize) -> Vec<Option<f64>> {
    let norm = volatility_norm(panel);
    let mut out = vec![None; norm.len()];
    if window == 0 {
        return out;
    }
    let mut sum = 0.0;
    for t in 0..norm.len() {
        sum += norm[t];
        if t >= window {
            sum -= norm[t - window];
        }
        if t + 1 >= window {
            // recompute periodically to keep the running sum from drifting
            if t % 1024 == 0 {
                sum = norm[t + 1 - window..=t].iter().sum();
            }
            out[t] = Some(sum / window as f64);
        }
    }
    out
}

/// Two-regime labels: 1 (crisis) where realized volatility strictly exceeds
/// its full-sample `quantile`, 0 otherwise, including warm-up days.
pub fn threshold_regimes(panel: &FactorPanel, window: usize, quantile: f64) -> Result<Vec<usize>> {
    if window == 0 || panel.n_rows() <= window {
        return Err(Error::SampleSize {
            required: window + 1,
            available: panel.n_rows(),
        });
    }
    let rv = realized_volatility(panel, window);
    let observed: Vec<f64> = rv.iter().flatten().copied().collect();
    let cut = quantile_type7(&observed, quantile)?;
    Ok(rv.iter().map(|v| usize::from(v.is_some_and(|x| x > cut))).collect())
}

#[derive(Debug, Clone)]
pub struct LagSweepRow {
    pub lag_max: usize,
    pub outcome: std::result::Result<FTest, String>,
}

/// BIC lag choice and F test for each cap in `lag_max_values`, in input order.
pub fn lag_sweep<F>(
    target: &[f64],
    source: &[f64],
    mask_for_lag: F,
    lag_max_values: &[usize],
) -> Result<Vec<LagSweepRow>>
where
    F: Fn(usize) -> Vec<bool>,
{
    if lag_max_values.contains(&0) {
        return Err(Error::InvalidArgument("lag caps must be at least 1".into()));
    }
    Ok(lag_max_values
        .iter()
        .map(|&lag_max| LagSweepRow {
            lag_max,
            outcome: granger_test_bic(target, source, &mask_for_lag, lag_max)
                .map(|(_, test)| test)
                .map_err(|e| e.to_string()),
        })
        .collect())
}

#[derive(Debug, Clone)]
pub struct SplitSide {
    pub start: Option<NaiveDate>,
    pub end: Option<NaiveDate>,
    pub n_rows: usize,
    /// Err when the side has no rows at all.
    pub cells: std::result::Result<Vec<GrangerCell>, String>,
}

#[derive(Debug, Clone)]
pub struct SubsampleSplit {
    pub before: SplitSide,
    pub after: SplitSide,
}

fn split_side(
    panel: &FactorPanel,
    labels: &[usize],
    range: std::ops::Range<usize>,
    lag_max: usize,
    alpha: f64,
) -> SplitSide {
    let sub = panel.select_rows(range.clone());
    let cells = if sub.is_empty() {
        Err("untestable: no rows on this side".to_string())
    } else {
        pairwise_regime_matrix(&sub, &labels[range], lag_max, alpha).map_err(|e| e.to_string())
    };
    SplitSide {
        start: sub.dates().first().copied(),
        end: sub.dates().last().copied(),
        n_rows: sub.n_rows(),
        cells,
    }
}

/// Full pairwise matrix on rows before `split` and on rows from `split` on,
/// each side with its own masks.
pub fn subsample_split(
    panel: &FactorPanel,
    labels: &[usize],
    split: NaiveDate,
    lag_max: usize,
    alpha: f64,
) -> Result<SubsampleSplit> {
    if labels.len() != panel.n_rows() {
        return Err(Error::InvalidArgument("labels do not match panel length".into()));
    }
    let cut = panel.dates().partition_point(|d| *d < split);
    Ok(SubsampleSplit {
        before: split_side(panel, labels, 0..cut, lag_max, alpha),
        after: split_side(panel, labels, cut..panel.n_rows(), lag_max, alpha),
    })
}

/// One directed regime cell on each side of `split`.
#[allow(clippy::too_many_arguments)]
pub fn directed_split(
    panel: &FactorPanel,
    labels: &[usize],
    split: NaiveDate,
    source: usize,
    target: usize,
    regime: usize,
    lag_max: usize,
    threshold: f64,
) -> Result<(Result<GrangerResult>, Result<GrangerResult>)> {
    if labels.len() != panel.n_rows() {
        return Err(Error::InvalidArgument("labels do not match panel length".into()));
    }
    let cut = panel.dates().partition_point(|d| *d < split);
    let side = |range: std::ops::Range<usize>| {
        let sub = panel.select_rows(range.clone());
        crate::granger::directed_test(
            &sub,
            &labels[range],
            source,
            target,
            RegimeTag::Regime(regime),
            lag_max,
            threshold,
        )
    };
    Ok((side(0..cut), side(cut..panel.n_rows())))
}

/// Which labels count as the calm side of a crisis entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryRule {
    /// Preceded by any label other than the crisis label.
    AnyNonCrisis,
    /// Preceded by this specific label.
    From(usize),
}

#[derive(Debug, Clone)]
pub struct TransitionConfig {
    pub crisis_index: usize,
    pub min_run: usize,
    pub window: usize,
    pub lag: usize,
    pub source: String,
    pub target: String,
    pub entry_rule: EntryRule,
}

impl Default for TransitionConfig {
    fn default() -> Self {
        Self {
            crisis_index: 2,
            min_run: 5,
            window: 60,
            lag: 9,
            source: "HML".into(),
            target: "SMB".into(),
            entry_rule: EntryRule::AnyNonCrisis,
        }
    }
}

#[derive(Debug, Clone)]
pub struct TransitionAnalysis {
    /// First day of each qualifying crisis run.
    pub entries: Vec<usize>,
    /// First non-crisis day after each qualifying crisis run.
    pub exits: Vec<usize>,
    pub entry_before: std::result::Result<FTest, String>,
    pub entry_after: std::result::Result<FTest, String>,
    pub exit_before: std::result::Result<FTest, String>,
    pub exit_after: std::result::Result<FTest, String>,
}

/// Crisis runs of at least `min_run` days as `(entry, exit)` positions, where
/// `exit` is None when the run reaches the end of the sample.
pub fn crisis_runs(
    labels: &[usize],
    crisis_index: usize,
    min_run: usize,
    rule: EntryRule,
) -> Vec<(usize, Option<usize>)> {
    let mut runs = Vec::new();
    let mut t = 0;
    while t < labels.len() {
        if labels[t] != crisis_index {
            t += 1;
            continue;
        }
        let start = t;
        while t < labels.len() && labels[t] == crisis_index {
            t += 1;
        }
        let preceded = start > 0
            && match rule {
                EntryRule::AnyNonCrisis => true,
                EntryRule::From(k) => labels[start - 1] == k,
            };
        if preceded && t - start >= min_run.max(1) {
            runs.push((start, (t < labels.len()).then_some(t)));
        }
    }
    runs
}

fn window_mask(len: usize, anchors: &[usize], before: bool, window: usize, lag: usize) -> Vec<bool> {
    let mut mask = vec![false; len];
    for &a in anchors {
        let range = if before {
            a.saturating_sub(window)..a
        } else {
            a..(a + window).min(len)
        };
        for t in range {
            mask[t] = t >= lag;
        }
    }
    mask
}

/// Pools the `window` days before and after every crisis entry (and exit)
/// into one regression each and tests `source → target` at a fixed lag.
pub fn transition_window_analysis(
    panel: &FactorPanel,
    labels: &[usize],
    config: &TransitionConfig,
) -> Result<TransitionAnalysis> {
    if labels.len() != panel.n_rows() {
        return Err(Error::InvalidArgument("labels do not match panel length".into()));
    }
    let y = panel.column_by_name(&config.target)?;
    let x = panel.column_by_name(&config.source)?;
    let runs = crisis_runs(labels, config.crisis_index, config.min_run, config.entry_rule);
    let entries: Vec<usize> = runs.iter().map(|r| r.0).collect();
    let exits: Vec<usize> = runs.iter().filter_map(|r| r.1).collect();
    let n = y.len();
    let test = |anchors: &[usize], before: bool| {
        if anchors.is_empty() {
            return Err("no qualifying transitions".to_string());
        }
        granger_f_test(
            &y,
            &x,
            config.lag,
            &window_mask(n, anchors, before, config.window, config.lag),
        )
        .map_err(|e| e.to_string())
    };
    Ok(TransitionAnalysis {
        entry_before: test(&entries, true),
        entry_after: test(&entries, false),
        exit_before: test(&exits, true),
        exit_after: test(&exits, false),
        entries,
        exits,
    })
}

#[derive(Debug, Clone)]
pub struct WeeklyAnalysis {
    pub panel: FactorPanel,
    pub labels: Vec<usize>,
    pub cells: Vec<GrangerCell>,
}

/// Compounds to ISO weeks, labels each week by its modal regime and reruns
/// the pairwise matrix.
pub fn weekly_analysis(panel: &FactorPanel, labels: &[usize], lag_max: usize, alpha: f64) -> Result<WeeklyAnalysis> {
    if labels.len() != panel.n_rows() {
        return Err(Error::InvalidArgument("labels do not match panel length".into()));
    }
    let weekly = weekly_aggregate(panel)?;
    let wl = weekly_labels(panel.dates(), labels);
    let cells = pairwise_regime_matrix(&weekly, &wl, lag_max, alpha)?;
    Ok(WeeklyAnalysis {
        panel: weekly,
        labels: wl,
        cells,
    })
}

/// Mask helper for a regime cell, exposed for sweeps over regime labels.
pub fn regime_mask_for(labels: &[usize], regime: usize) -> impl Fn(usize) -> Vec<bool> + '_ {
    move |lag| regime_lag_mask(labels, regime, lag)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn panel_from(values: Vec<f64>, d: usize) -> FactorPanel {
        let n = values.len() / d;
        let dates = crate::synthgen::business_days(NaiveDate::from_ymd_opt(2000, 1, 3).unwrap(), n);
        FactorPanel::new(dates, (0..d).map(|i| format!("F{i}")).collect(), values).unwrap()
    }

    #[test]
    fn quantile_matches_linear_interpolation() {
        assert_eq!(quantile_type7(&[1.0, 2.0, 3.0, 4.0], 0.5).unwrap(), 2.5);
        assert!((quantile_type7(&[1.0, 2.0, 3.0, 4.0, 5.0], 0.9).unwrap() - 4.6).abs() < 1e-12);
        assert!(quantile_type7(&[], 0.5).is_err());
    }

    #[test]
    fn constant_panel_has_no_crisis_days() {
        let p = panel_from(vec![0.5; 200], 2);
        assert!(threshold_regimes(&p, 21, 0.9).unwrap().iter().all(|&l| l == 0));
        assert!(threshold_regimes(&p, 100, 0.9).is_err());
    }

    #[test]
    fn threshold_share_matches_quantile() {
        let values: Vec<f64> = (0..2000)
            .map(|i| ((i * 7919) % 1000) as f64 / 100.0 + (i as f64) * 1e-6)
            .collect();
        let p = panel_from(values, 1);
        let labels = threshold_regimes(&p, 5, 0.9).unwrap();
        let post = labels.len() - 4;
        let share = labels.iter().sum::<usize>() as f64 / post as f64;
        assert!((share - 0.1).abs() <= 1.0 / post as f64 + 1e-12, "share {share}");
        assert!(labels[..4].iter().all(|&l| l == 0));
    }

    #[test]
    fn rolling_mean_matches_direct() {
        let values: Vec<f64> = (0..3000).map(|i| ((i * 31) % 17) as f64 - 8.0).collect();
        let p = panel_from(values.clone(), 1);
        let rv = realized_volatility(&p, 21);
        for t in [20, 1024, 2047, 2999] {
            let direct = values[t - 20..=t].iter().map(|v| v.abs()).sum::<f64>() / 21.0;
            assert!((rv[t].unwrap() - direct).abs() < 1e-12);
        }
        assert!(rv[19].is_none());
    }

    #[test]
    fn runs_and_entries() {
        let labels = [0, 0, 2, 2, 2, 2, 2, 0, 1, 2, 2, 0, 2, 2, 2, 2, 2, 2];
        let runs = crisis_runs(&labels, 2, 5, EntryRule::AnyNonCrisis);
        assert_eq!(runs, vec![(2, Some(7)), (12, None)]);
        assert_eq!(crisis_runs(&labels, 2, 5, EntryRule::From(1)), vec![]);
        assert_eq!(crisis_runs(&[2, 2, 2, 2, 2, 0], 2, 5, EntryRule::AnyNonCrisis), vec![]);
    }

    #[test]
    fn sweep_caps_lag() {
        let n = 600;
        let mut x = vec![0.0; n];
        let mut y = vec![0.0; n];
        let mut s: u64 = 7;
        let mut noise = || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((s >> 11) as f64 / (1u64 << 53) as f64) - 0.5
        };
        for t in 0..n {
            x[t] = noise();
            y[t] = noise() + if t >= 2 { 0.8 * x[t - 2] } else { 0.0 };
        }
        let rows = lag_sweep(&y, &x, |lag| crate::granger::pooled_mask(n, lag), &[1, 5, 10]).unwrap();
        assert_eq!(rows[0].outcome.as_ref().unwrap().lag, 1);
        assert_eq!(rows[1].outcome.as_ref().unwrap().lag, 2);
        assert_eq!(rows[2].outcome.as_ref().unwrap().lag, 2);
        assert!(lag_sweep(&y, &x, |lag| crate::granger::pooled_mask(n, lag), &[0]).is_err());
    }
}
