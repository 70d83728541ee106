//! Regime-switching heavy-tailed panels with known labels, used as ground
//! truth for the HMM and Granger code.

use chrono::{Datelike, NaiveDate, Weekday};
use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::{ChiSquared, Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::hmm::{Family, HmmParams};
use crate::panel::FactorPanel;
use crate::rng::{stream_rng, Stream};

/// Adds `coefficient · x[t − lag][source]` to `x[t][target]` on days whose
/// true regime matches `regime` (every day when `regime` is None).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossLag {
    pub source: usize,
    pub target: usize,
    pub regime: Option<usize>,
    pub lag: usize,
    pub coefficient: f64,
}

#[derive(Debug, Clone)]
pub struct SyntheticSpec {
    pub params: HmmParams,
    pub n_obs: usize,
    pub cross_lag: Option<CrossLag>,
    pub seed: u64,
    /// Defaults to F1..Fd when empty.
    pub factor_names: Vec<String>,
    /// First business day on or after this date starts the panel.
    pub start: NaiveDate,
}

impl SyntheticSpec {
    pub fn new(params: HmmParams, n_obs: usize, seed: u64) -> Self {
        Self {
            params,
            n_obs,
            cross_lag: None,
            seed,
            factor_names: Vec::new(),
            start: NaiveDate::from_ymd_opt(2000, 1, 3).expect("valid date"),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate(1e-9)?;
        if self.n_obs == 0 {
            return Err(Error::InvalidArgument("synthetic panel needs at least one row".into()));
        }
        let d = self.params.dim();
        if !self.factor_names.is_empty() && self.factor_names.len() != d {
            return Err(Error::InvalidArgument(
                "factor_names length differs from dimension".into(),
            ));
        }
        if let Some(c) = &self.cross_lag {
            if c.lag == 0 || !c.coefficient.is_finite() || c.source >= d || c.target >= d || c.source == c.target {
                return Err(Error::InvalidArgument("invalid cross-lag specification".into()));
            }
            if c.regime.is_some_and(|k| k >= self.params.n_states()) {
                return Err(Error::InvalidArgument("cross-lag regime out of range".into()));
            }
        }
        Ok(())
    }
}

/// Three regimes shaped like a calm/elevated/crisis factor panel: scale
/// ratios about 1 : 1.8 : 4, ν = {12, 7, 4}, persistent transitions and a
/// stationary mix near 43/46/11 percent.
pub fn three_regime_params(d: usize) -> HmmParams {
    let stds = [0.33, 0.6, 1.35];
    let corr = [0.1, 0.15, 0.3];
    let drift = [0.03, 0.0, -0.05];
    let scales = (0..3)
        .map(|k| {
            DMatrix::from_fn(d, d, |i, j| {
                let rho = if i == j { 1.0 } else { corr[k] };
                rho * stds[k] * stds[k]
            })
        })
        .collect();
    HmmParams {
        family: Family::StudentT,
        pi: vec![0.5, 0.4, 0.1],
        transition: vec![
            vec![0.985, 0.015, 0.0],
            vec![0.014, 0.978, 0.008],
            vec![0.0, 0.032, 0.968],
        ],
        means: drift.iter().map(|&m| vec![m; d]).collect(),
        scales,
        dof: vec![12.0, 7.0, 4.0],
    }
}

fn draw_index<R: Rng>(rng: &mut R, probs: &[f64]) -> usize {
    let u: f64 = rng.random();
    let mut acc = 0.0;
    for (i, p) in probs.iter().enumerate() {
        acc += p;
        if u < acc {
            return i;
        }
    }
    // rounding left u above the cumulative total; take the last state with mass
    probs.iter().rposition(|&p| p > 0.0).unwrap_or(probs.len() - 1)
}

/// Business days (Mon–Fri) starting on or after `start`.
pub fn business_days(start: NaiveDate, n: usize) -> Vec<NaiveDate> {
    let mut out = Vec::with_capacity(n);
    let mut d = start;
    while out.len() < n {
        if !matches!(d.weekday(), Weekday::Sat | Weekday::Sun) {
            out.push(d);
        }
        d = d.succ_opt().expect("date within calendar range");
    }
    out
}

/// Simulates the chain, then each row as μ + L z / √(χ²_ν/ν) (no mixing
/// factor for Gaussian regimes), then the optional cross-lag injection.
pub fn generate(spec: &SyntheticSpec) -> Result<(FactorPanel, Vec<usize>)> {
    spec.validate()?;
    let p = &spec.params;
    let (k, d, n) = (p.n_states(), p.dim(), spec.n_obs);
    let chol: Vec<DMatrix<f64>> = p
        .scales
        .iter()
        .map(|s| {
            s.clone()
                .cholesky()
                .map(|c| c.unpack())
                .ok_or(Error::NotPositiveDefinite)
        })
        .collect::<Result<_>>()?;
    let chi: Vec<Option<ChiSquared<f64>>> = (0..k)
        .map(|j| {
            let nu = p.dof[j];
            if p.family == Family::Gaussian || !nu.is_finite() {
                Ok(None)
            } else {
                ChiSquared::new(nu)
                    .map(Some)
                    .map_err(|_| Error::InvalidArgument(format!("invalid degrees of freedom {nu}")))
            }
        })
        .collect::<Result<_>>()?;

    let mut rng = stream_rng(spec.seed, Stream::Synthetic);
    let mut labels = Vec::with_capacity(n);
    let mut state = draw_index(&mut rng, &p.pi);
    let mut values = Vec::with_capacity(n * d);
    for t in 0..n {
        if t > 0 {
            state = draw_index(&mut rng, &p.transition[state]);
        }
        labels.push(state);
        let z = DVector::from_fn(d, |_, _| rng.sample::<f64, _>(StandardNormal));
        let mix = match &chi[state] {
            Some(c) => (c.sample(&mut rng) / p.dof[state]).sqrt(),
            None => 1.0,
        };
        let x = &chol[state] * z / mix;
        values.extend((0..d).map(|i| p.means[state][i] + x[i]));
    }

    if let Some(c) = &spec.cross_lag {
        for t in c.lag..n {
            if c.regime.is_none_or(|r| labels[t] == r) {
                values[t * d + c.target] += c.coefficient * values[(t - c.lag) * d + c.source];
            }
        }
    }

    let names = if spec.factor_names.is_empty() {
        (1..=d).map(|i| format!("F{i}")).collect()
    } else {
        spec.factor_names.clone()
    };
    let panel = FactorPanel::new(business_days(spec.start, n), names, values)?;
    Ok((panel, labels))
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(k), &mut vec![false; k], &mut out);
    out
}

/// Best agreement fraction over all relabelings of `estimated`.
pub fn label_accuracy(estimated: &[usize], truth: &[usize], k: usize) -> Result<f64> {
    if estimated.len() != truth.len() {
        return Err(Error::InvalidArgument("label sequences differ in length".into()));
    }
    if estimated.is_empty() {
        return Err(Error::InvalidArgument("empty label sequences".into()));
    }
    if k == 0 || k > 8 || estimated.iter().chain(truth).any(|&l| l >= k) {
        return Err(Error::InvalidArgument(format!(
            "labels must lie in 0..{k} with 1 <= K <= 8"
        )));
    }
    let mut confusion = vec![0usize; k * k];
    for (&e, &t) in estimated.iter().zip(truth) {
        confusion[e * k + t] += 1;
    }
    let best = permutations(k)
        .into_iter()
        .map(|perm| (0..k).map(|e| confusion[e * k + perm[e]]).sum::<usize>())
        .max()
        .unwrap_or(0);
    Ok(best as f64 / truth.len() as f64)
}
