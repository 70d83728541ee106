//! Regime-conditioned Granger tests.
//!
//! A directed test `source → target` regresses the target on an intercept and
//! its own L lags (restricted) and additionally on L lags of the source
//! (unrestricted), over rows where the day and all L lags sit in one regime.

use std::fmt;

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numerics::{f_sf, FTestDistribution};
use crate::panel::FactorPanel;

pub const DEFAULT_ALPHA: f64 = 0.01;
pub const DEFAULT_LAG_MAX: usize = 15;
/// Rows required beyond the 2L+1 regressors.
pub const MIN_EXTRA_ROWS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RegimeTag {
    Regime(usize),
    Pooled,
}

impl fmt::Display for RegimeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegimeTag::Regime(k) => write!(f, "{k}"),
            RegimeTag::Pooled => write!(f, "pooled"),
        }
    }
}

/// `mask[t]` is true iff day t and its L predecessors all carry label `k`.
pub fn regime_lag_mask(labels: &[usize], k: usize, lag: usize) -> Vec<bool> {
    let mut mask = vec![false; labels.len()];
    let mut run = 0usize;
    for (t, &l) in labels.iter().enumerate() {
        run = if l == k { run + 1 } else { 0 };
        mask[t] = run > lag;
    }
    mask
}

/// Every day with a full set of L lags.
pub fn pooled_mask(len: usize, lag: usize) -> Vec<bool> {
    (0..len).map(|t| t >= lag).collect()
}

#[derive(Debug, Clone)]
pub struct Design {
    pub response: DVector<f64>,
    /// Intercept and target lags 1..L.
    pub restricted: DMatrix<f64>,
    /// Restricted columns followed by source lags 1..L.
    pub unrestricted: DMatrix<f64>,
    /// Time index of each design row.
    pub rows: Vec<usize>,
}

/// Builds the regression designs over the rows selected by `mask`.
pub fn build_design(target: &[f64], source: &[f64], lag: usize, mask: &[bool]) -> Result<Design> {
    if lag == 0 {
        return Err(Error::InvalidArgument("lag must be at least 1".into()));
    }
    if target.len() != source.len() || mask.len() != target.len() {
        return Err(Error::InvalidArgument("series and mask must have equal length".into()));
    }
    let rows: Vec<usize> = mask.iter().enumerate().filter_map(|(t, &m)| m.then_some(t)).collect();
    if let Some(&t) = rows.first() {
        if t < lag {
            return Err(Error::InvalidArgument(format!("mask selects t={t} without {lag} lags")));
        }
    }
    let required = 2 * lag + 1 + MIN_EXTRA_ROWS;
    if rows.len() < required {
        return Err(Error::SampleSize {
            required,
            available: rows.len(),
        });
    }
    let n = rows.len();
    let response = DVector::from_iterator(n, rows.iter().map(|&t| target[t]));
    let restricted = DMatrix::from_fn(n, lag + 1, |i, j| if j == 0 { 1.0 } else { target[rows[i] - j] });
    let unrestricted = DMatrix::from_fn(n, 2 * lag + 1, |i, j| match j {
        0 => 1.0,
        j if j <= lag => target[rows[i] - j],
        j => source[rows[i] - (j - lag)],
    });
    Ok(Design {
        response,
        restricted,
        unrestricted,
        rows,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OlsFit {
    pub rss: f64,
    pub rank: usize,
    pub columns: usize,
}

impl OlsFit {
    pub fn is_full_rank(&self) -> bool {
        self.rank == self.columns
    }
}

/// Residual sum of squares of the least-squares fit via Householder QR:
/// RSS is the squared norm of the trailing m−n entries of Qᵀy.
pub fn ols_rss(x: &DMatrix<f64>, y: &DVector<f64>) -> Result<OlsFit> {
    let (m, n) = x.shape();
    if y.len() != m {
        return Err(Error::InvalidArgument("design and response lengths differ".into()));
    }
    if m < n {
        return Err(Error::SampleSize {
            required: n,
            available: m,
        });
    }
    let qr = x.clone().qr();
    let mut qty = y.clone();
    qr.q_tr_mul(&mut qty);
    let rss = qty.rows(n, m - n).norm_squared();

    let r = qr.r();
    let diag_max = (0..n).map(|i| r[(i, i)].abs()).fold(0.0, f64::max);
    let col_scale = (0..n).map(|j| x.column(j).norm()).fold(0.0, f64::max);
    let tol = 1e-10 * diag_max.max(col_scale);
    let rank = (0..n).filter(|&i| r[(i, i)].abs() > tol).count();
    Ok(OlsFit { rss, rank, columns: n })
}

/// Statistical part of a Granger F test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FTest {
    pub lag: usize,
    pub f_stat: f64,
    pub p_value: f64,
    pub n_obs: usize,
    /// Denominator degrees of freedom, n − 2L − 1.
    pub df2: usize,
    pub rss_restricted: f64,
    pub rss_unrestricted: f64,
    /// (RSS_r − RSS_u) / TSS
    pub r2_increment: f64,
}

fn full_rank_fit(x: &DMatrix<f64>, y: &DVector<f64>) -> Result<OlsFit> {
    let fit = ols_rss(x, y)?;
    if !fit.is_full_rank() {
        return Err(Error::RankDeficient {
            rank: fit.rank,
            columns: fit.columns,
        });
    }
    Ok(fit)
}

/// F test that L lags of `source` add nothing to predicting `target` beyond
/// the target's own L lags, on the rows selected by `mask`.
pub fn granger_f_test(target: &[f64], source: &[f64], lag: usize, mask: &[bool]) -> Result<FTest> {
    let design = build_design(target, source, lag, mask)?;
    test_design(&design, lag)
}

fn test_design(design: &Design, lag: usize) -> Result<FTest> {
    let n = design.rows.len();
    let df2 = n as i64 - 2 * lag as i64 - 1;
    if df2 <= 0 {
        return Err(Error::SampleSize {
            required: 2 * lag + 2,
            available: n,
        });
    }
    let df2 = df2 as usize;
    let y = &design.response;
    let unrestricted = full_rank_fit(&design.unrestricted, y)?;
    let restricted = full_rank_fit(&design.restricted, y)?;

    let mean = y.mean();
    let tss: f64 = y.iter().map(|v| (v - mean) * (v - mean)).sum();
    if !(unrestricted.rss > 1e-20 * tss.max(f64::MIN_POSITIVE)) {
        return Err(Error::DegenerateFit("unrestricted model fits exactly".into()));
    }
    let gain = (restricted.rss - unrestricted.rss).max(0.0);
    let f_stat = (gain / lag as f64) / (unrestricted.rss / df2 as f64);
    let p_value = f_sf(f_stat, FTestDistribution::new(lag as u32, df2 as u32)?)?;
    Ok(FTest {
        lag,
        f_stat,
        p_value,
        n_obs: n,
        df2,
        rss_restricted: restricted.rss,
        rss_unrestricted: unrestricted.rss,
        r2_increment: (restricted.rss - unrestricted.rss) / tss,
    })
}

#[derive(Debug, Clone)]
pub struct LagBicRow {
    pub lag: usize,
    /// `(n_obs, bic)` of the unrestricted model, or why this lag was infeasible.
    pub outcome: std::result::Result<(usize, f64), String>,
}

#[derive(Debug, Clone)]
pub struct LagSelection {
    pub lag: usize,
    pub table: Vec<LagBicRow>,
}

/// BIC lag choice over 1..=`lag_max`, each lag evaluated on its own mask.
/// BIC = n ln(RSS_u/n) + (2L+1) ln n; ties go to the smaller lag.
pub fn select_lag_bic<F>(target: &[f64], source: &[f64], mask_for_lag: F, lag_max: usize) -> Result<LagSelection>
where
    F: Fn(usize) -> Vec<bool>,
{
    if lag_max == 0 {
        return Err(Error::InvalidArgument("maximum lag must be at least 1".into()));
    }
    let mut table = Vec::with_capacity(lag_max);
    let mut best: Option<(usize, f64)> = None;
    let mut first_err = None;
    for lag in 1..=lag_max {
        let outcome = build_design(target, source, lag, &mask_for_lag(lag)).and_then(|design| {
            let fit = full_rank_fit(&design.unrestricted, &design.response)?;
            let n = design.rows.len() as f64;
            Ok((
                design.rows.len(),
                n * (fit.rss / n).ln() + (2 * lag + 1) as f64 * n.ln(),
            ))
        });
        match outcome {
            Ok((n, bic)) => {
                if best.is_none_or(|(_, b)| bic < b) {
                    best = Some((lag, bic));
                }
                table.push(LagBicRow {
                    lag,
                    outcome: Ok((n, bic)),
                });
            }
            Err(e) => {
                table.push(LagBicRow {
                    lag,
                    outcome: Err(e.to_string()),
                });
                first_err.get_or_insert(e);
            }
        }
    }
    match best {
        Some((lag, _)) => Ok(LagSelection { lag, table }),
        None => Err(first_err.unwrap_or_else(|| Error::InvalidArgument("no lag evaluated".into()))),
    }
}

/// BIC lag selection followed by the F test at the chosen lag on that lag's mask.
pub fn granger_test_bic<F>(
    target: &[f64],
    source: &[f64],
    mask_for_lag: F,
    lag_max: usize,
) -> Result<(LagSelection, FTest)>
where
    F: Fn(usize) -> Vec<bool>,
{
    let selection = select_lag_bic(target, source, &mask_for_lag, lag_max)?;
    let test = granger_f_test(target, source, selection.lag, &mask_for_lag(selection.lag))?;
    Ok((selection, test))
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrangerResult {
    pub source: String,
    pub target: String,
    pub regime: RegimeTag,
    pub lag: usize,
    pub f_stat: f64,
    pub p_value: f64,
    pub n_obs: usize,
    pub r2_increment: f64,
    pub significant_bonferroni: bool,
}

impl GrangerResult {
    pub fn from_test(source: &str, target: &str, regime: RegimeTag, test: &FTest, threshold: f64) -> Self {
        Self {
            source: source.to_string(),
            target: target.to_string(),
            regime,
            lag: test.lag,
            f_stat: test.f_stat,
            p_value: test.p_value,
            n_obs: test.n_obs,
            r2_increment: test.r2_increment,
            significant_bonferroni: test.p_value < threshold,
        }
    }
}

/// One cell of the pairwise matrix; per-cell failures are kept, not raised.
#[derive(Debug, Clone)]
pub struct GrangerCell {
    pub source: String,
    pub target: String,
    pub regime: RegimeTag,
    pub result: std::result::Result<GrangerResult, String>,
}

impl GrangerCell {
    pub fn ok(&self) -> Option<&GrangerResult> {
        self.result.as_ref().ok()
    }
}

/// Tests a directed pair within regime `regime` (or pooled) with BIC lag choice.
pub fn directed_test(
    panel: &FactorPanel,
    labels: &[usize],
    source: usize,
    target: usize,
    regime: RegimeTag,
    lag_max: usize,
    threshold: f64,
) -> Result<GrangerResult> {
    if labels.len() != panel.n_rows() {
        return Err(Error::InvalidArgument("labels do not match panel length".into()));
    }
    let y = panel.column(target);
    let x = panel.column(source);
    let (_, test) = match regime {
        RegimeTag::Regime(k) => granger_test_bic(&y, &x, |lag| regime_lag_mask(labels, k, lag), lag_max)?,
        RegimeTag::Pooled => granger_test_bic(&y, &x, |lag| pooled_mask(y.len(), lag), lag_max)?,
    };
    let names = panel.factor_names();
    Ok(GrangerResult::from_test(
        &names[source],
        &names[target],
        regime,
        &test,
        threshold,
    ))
}

/// All d(d−1) ordered pairs × all regimes, Bonferroni threshold α/(d(d−1)).
/// Output is ordered by (source, target, regime) column/regime index.
pub fn pairwise_regime_matrix(
    panel: &FactorPanel,
    labels: &[usize],
    lag_max: usize,
    alpha: f64,
) -> Result<Vec<GrangerCell>> {
    let d = panel.n_factors();
    if d < 2 {
        return Err(Error::InvalidArgument("need at least two factors".into()));
    }
    if labels.len() != panel.n_rows() {
        return Err(Error::InvalidArgument("labels do not match panel length".into()));
    }
    let n_regimes = labels.iter().copied().max().map_or(0, |m| m + 1);
    let threshold = alpha / (d * (d - 1)) as f64;
    let columns: Vec<Vec<f64>> = (0..d).map(|j| panel.column(j)).collect();
    let names = panel.factor_names();

    let mut specs = Vec::new();
    for s in 0..d {
        for t in 0..d {
            if s != t {
                for k in 0..n_regimes {
                    specs.push((s, t, k));
                }
            }
        }
    }
    let cells = specs
        .into_par_iter()
        .map(|(s, t, k)| {
            let regime = RegimeTag::Regime(k);
            let result = granger_test_bic(&columns[t], &columns[s], |lag| regime_lag_mask(labels, k, lag), lag_max)
                .map(|(_, test)| GrangerResult::from_test(&names[s], &names[t], regime, &test, threshold))
                .map_err(|e| e.to_string());
            GrangerCell {
                source: names[s].clone(),
                target: names[t].clone(),
                regime,
                result,
            }
        })
        .collect();
    Ok(cells)
}

/// CSV with columns `source,target,regime,lag,f_stat,p_value,n_obs,r2_increment,significant`.
/// Failed cells carry `NA` in the numeric columns.
pub fn cells_to_csv(cells: &[GrangerCell]) -> String {
    let mut out = String::from("source,target,regime,lag,f_stat,p_value,n_obs,r2_increment,significant\n");
    for c in cells {
        match &c.result {
            Ok(r) => out.push_str(&format!(
                "{},{},{},{},{:.6},{:.5e},{},{:.6},{}\n",
                c.source,
                c.target,
                c.regime,
                r.lag,
                r.f_stat,
                r.p_value,
                r.n_obs,
                r.r2_increment,
                r.significant_bonferroni
            )),
            Err(_) => out.push_str(&format!(
                "{},{},{},NA,NA,NA,NA,NA,false\n",
                c.source, c.target, c.regime
            )),
        }
    }
    out
}
