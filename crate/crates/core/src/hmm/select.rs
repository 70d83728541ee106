use std::ops::RangeInclusive;

use super::em::{em_fit, FitConfig};
use super::{Family, HmmFit};
use crate::error::{Error, Result};
use crate::panel::FactorPanel;

/// Free parameters: initial distribution, transitions, means, scales, and
/// (Student-t only) one ν per regime.
pub fn n_free_params(k: usize, d: usize, family: Family) -> usize {
    let base = (k - 1) + k * (k - 1) + k * d + k * d * (d + 1) / 2;
    match family {
        Family::StudentT => base + k,
        Family::Gaussian => base,
    }
}

#[derive(Debug, Clone)]
pub struct BicRow {
    pub k: usize,
    pub n_free_params: usize,
    /// `(loglik, bic)` or the reason this K failed.
    pub outcome: std::result::Result<(f64, f64), String>,
}

#[derive(Debug, Clone)]
pub struct ModelSelection {
    pub best_k: usize,
    pub table: Vec<BicRow>,
    pub best_fit: HmmFit,
}

impl ModelSelection {
    /// BIC(k) − BIC(best_k), if K=k was fitted successfully.
    pub fn delta_bic(&self, k: usize) -> Option<f64> {
        let best = self.best_fit.bic;
        self.table
            .iter()
            .find(|r| r.k == k)
            .and_then(|r| r.outcome.as_ref().ok())
            .map(|(_, bic)| bic - best)
    }
}

/// Fits every K in `k_range` with the same restart budget and picks the
/// lowest BIC. A failed K is recorded and skipped.
pub fn select_k(
    panel: &FactorPanel,
    k_range: RangeInclusive<usize>,
    family: Family,
    config: &FitConfig,
) -> Result<ModelSelection> {
    if *k_range.start() < 1 || *k_range.end() > 8 || k_range.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "K range {}..={} must lie within 1..=8",
            k_range.start(),
            k_range.end()
        )));
    }
    let mut table = Vec::new();
    let mut best: Option<HmmFit> = None;
    for k in k_range {
        let n_free = n_free_params(k, panel.n_factors(), family);
        match em_fit(panel, k, family, config) {
            Ok(fit) => {
                table.push(BicRow {
                    k,
                    n_free_params: n_free,
                    outcome: Ok((fit.loglik, fit.bic)),
                });
                if best.as_ref().is_none_or(|b| fit.bic < b.bic) {
                    best = Some(fit);
                }
            }
            Err(e) => table.push(BicRow {
                k,
                n_free_params: n_free,
                outcome: Err(e.to_string()),
            }),
        }
    }
    let best_fit = best.ok_or_else(|| Error::Estimation("every K in the range failed to fit".into()))?;
    Ok(ModelSelection {
        best_k: best_fit.n_states(),
        table,
        best_fit,
    })
}
