use nalgebra::DMatrix;
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use super::emission::{emission_table, kernels};
use super::forward_backward::forward_backward_log_emissions;
use super::order::argmax_labels;
use super::select::n_free_params;
use super::{Family, HmmFit, HmmParams};
use crate::error::{Error, Result};
use crate::numerics::digamma;
use crate::panel::{volatility_norm, FactorPanel};
use crate::rng::{stream_rng, Stream};

pub const NU_MIN: f64 = 2.1;
pub const NU_MAX: f64 = 200.0;

const RIDGE_EPS: f64 = 1e-8;
const RIDGE_ATTEMPTS: usize = 3;

#[derive(Debug, Clone)]
pub struct FitConfig {
    /// Stop when the relative log-likelihood gain drops below this.
    pub tol: f64,
    pub max_iters: usize,
    pub n_restarts: usize,
    pub seed: u64,
    /// Starting degrees of freedom for every regime.
    pub initial_dof: f64,
    /// When false, ν stays at `initial_dof` (unclamped) throughout.
    pub estimate_dof: bool,
}

impl FitConfig {
    pub fn new(seed: u64) -> Self {
        Self {
            tol: 1e-6,
            max_iters: 500,
            n_restarts: 10,
            seed,
            initial_dof: 10.0,
            estimate_dof: true,
        }
    }

    pub fn with_restarts(mut self, n: usize) -> Self {
        self.n_restarts = n;
        self
    }
}

/// Weighted sufficient statistics for one regime's ν update.
#[derive(Debug, Clone, Copy)]
pub struct NuStats {
    /// S₁ = Σ_t γ_tk
    pub weight_sum: f64,
    /// S₂ = Σ_t γ_tk (ln u_tk − u_tk)
    pub log_weight_sum: f64,
    pub dim: usize,
    /// ν at which the weights u_tk were computed.
    pub current_dof: f64,
}

impl NuStats {
    /// Score of the expected complete-data log-likelihood in ν; decreasing in ν.
    pub fn score(&self, nu: f64) -> f64 {
        let d = self.dim as f64;
        let cur = (self.current_dof + d) / 2.0;
        -digamma(nu / 2.0).unwrap_or(f64::NAN)
            + (nu / 2.0).ln()
            + 1.0
            + self.log_weight_sum / self.weight_sum
            + digamma(cur).unwrap_or(f64::NAN)
            - cur.ln()
    }
}

/// Degrees-of-freedom update: bisection for the root of [`NuStats::score`]
/// on [`NU_MIN`, `NU_MAX`]. Without a sign change the bound with the smaller
/// |score| is returned.
pub fn solve_nu(stats: &NuStats) -> f64 {
    let (mut lo, mut hi) = (NU_MIN, NU_MAX);
    let g_lo = stats.score(lo);
    let g_hi = stats.score(hi);
    if !(g_lo.is_finite() && g_hi.is_finite()) || g_lo.signum() == g_hi.signum() {
        return if g_lo.abs() <= g_hi.abs() { lo } else { hi };
    }
    while hi - lo > 1e-8 {
        let mid = 0.5 * (lo + hi);
        let g = stats.score(mid);
        if g == 0.0 {
            return mid;
        }
        if g.signum() == g_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

fn sample_moments(panel: &FactorPanel, idx: &[usize]) -> (Vec<f64>, DMatrix<f64>) {
    let d = panel.n_factors();
    let n = idx.len().max(1) as f64;
    let mut mean = vec![0.0; d];
    for &t in idx {
        for (m, v) in mean.iter_mut().zip(panel.row(t)) {
            *m += v / n;
        }
    }
    let mut cov = DMatrix::zeros(d, d);
    for &t in idx {
        let x = panel.row(t);
        for i in 0..d {
            for j in 0..=i {
                cov[(i, j)] += (x[i] - mean[i]) * (x[j] - mean[j]) / n;
            }
        }
    }
    for i in 0..d {
        for j in 0..i {
            cov[(j, i)] = cov[(i, j)];
        }
    }
    (mean, cov)
}

fn ridge_until_spd(mut s: DMatrix<f64>, force: bool) -> Result<DMatrix<f64>> {
    let d = s.nrows();
    let trace = s.trace().abs().max(f64::MIN_POSITIVE);
    if !force && s.clone().cholesky().is_some() {
        return Ok(s);
    }
    let mut eps = RIDGE_EPS;
    for _ in 0..RIDGE_ATTEMPTS {
        for i in 0..d {
            s[(i, i)] += eps * trace / d as f64;
        }
        if s.clone().cholesky().is_some() {
            return Ok(s);
        }
        eps *= 100.0;
    }
    Err(Error::NotPositiveDefinite)
}

fn default_transition(k: usize, stay: f64) -> Vec<Vec<f64>> {
    if k == 1 {
        return vec![vec![1.0]];
    }
    let off = (1.0 - stay) / (k - 1) as f64;
    (0..k)
        .map(|j| (0..k).map(|i| if i == j { stay } else { off }).collect())
        .collect()
}

/// Starting point for EM restart `restart`.
///
/// Restart 0 splits days into K equal-count groups by volatility-norm
/// quantile and takes group moments. Later restarts jitter the norm before
/// grouping (odd restarts) or jitter the group means (even restarts), and draw
/// the self-transition probability from [0.85, 0.99].
pub fn initial_params(
    panel: &FactorPanel,
    k: usize,
    family: Family,
    config: &FitConfig,
    restart: usize,
) -> Result<HmmParams> {
    let t_len = panel.n_rows();
    let d = panel.n_factors();
    let norm = volatility_norm(panel);
    let mut rng = stream_rng(config.seed, Stream::Restart(restart as u32));

    let keys: Vec<f64> = if restart % 2 == 1 {
        norm.iter()
            .map(|v| {
                let z: f64 = StandardNormal.sample(&mut rng);
                v * (0.5 * z).exp()
            })
            .collect()
    } else {
        norm
    };
    let mut order: Vec<usize> = (0..t_len).collect();
    order.sort_by(|&a, &b| keys[a].total_cmp(&keys[b]).then(a.cmp(&b)));

    let mut means = Vec::with_capacity(k);
    let mut scales = Vec::with_capacity(k);
    for g in 0..k {
        let idx = &order[g * t_len / k..(g + 1) * t_len / k];
        let (mut mean, cov) = sample_moments(panel, idx);
        if restart > 0 && restart.is_multiple_of(2) {
            for i in 0..d {
                let z: f64 = StandardNormal.sample(&mut rng);
                mean[i] += 0.25 * cov[(i, i)].sqrt() * z;
            }
        }
        means.push(mean);
        scales.push(ridge_until_spd(cov, false)?);
    }
    let stay = if restart == 0 {
        0.95
    } else {
        rng.random_range(0.85..0.99)
    };
    let dof = if config.estimate_dof {
        config.initial_dof.clamp(NU_MIN, NU_MAX)
    } else {
        config.initial_dof
    };
    Ok(HmmParams {
        family,
        pi: vec![1.0 / k as f64; k],
        transition: default_transition(k, stay),
        means,
        scales,
        dof: vec![
            match family {
                Family::StudentT => dof,
                Family::Gaussian => f64::INFINITY,
            };
            k
        ],
    })
}

struct RunOutcome {
    params: HmmParams,
    loglik: f64,
    gamma: Vec<f64>,
    trace: Vec<f64>,
    iterations: usize,
    converged: bool,
}

fn m_step(
    panel: &FactorPanel,
    prev: &HmmParams,
    gamma: &[f64],
    xi_sum: &[f64],
    mahalanobis: &[f64],
    estimate_dof: bool,
) -> Result<HmmParams> {
    let k = prev.n_states();
    let d = panel.n_factors();
    let t_len = panel.n_rows();
    let mut next = prev.clone();

    let pi_sum: f64 = gamma[..k].iter().sum();
    next.pi = gamma[..k].iter().map(|g| g / pi_sum).collect();

    for j in 0..k {
        let row = &xi_sum[j * k..(j + 1) * k];
        let s: f64 = row.iter().sum();
        if s > 0.0 {
            next.transition[j] = row.iter().map(|v| v / s).collect();
        }
    }

    let mut weights = vec![0.0; t_len];
    for j in 0..k {
        let weight_sum: f64 = (0..t_len).map(|t| gamma[t * k + j]).sum();
        if !(weight_sum > 1e-10) {
            // regime has no mass: keep its previous emission parameters
            continue;
        }
        let nu = prev.dof[j];
        let mut log_weight_sum = 0.0;
        let mut wsum = 0.0;
        for t in 0..t_len {
            let g = gamma[t * k + j];
            let u = match prev.family {
                Family::StudentT => (nu + d as f64) / (nu + mahalanobis[t * k + j]),
                Family::Gaussian => 1.0,
            };
            if g > 0.0 {
                log_weight_sum += g * (u.ln() - u);
            }
            weights[t] = g * u;
            wsum += g * u;
        }

        let mut mean = vec![0.0; d];
        for (t, x) in panel.rows().enumerate() {
            let w = weights[t] / wsum;
            for i in 0..d {
                mean[i] += w * x[i];
            }
        }
        let mut cov = DMatrix::zeros(d, d);
        for (t, x) in panel.rows().enumerate() {
            let w = weights[t] / weight_sum;
            if w == 0.0 {
                continue;
            }
            for a in 0..d {
                let da = x[a] - mean[a];
                for b in 0..=a {
                    cov[(a, b)] += w * da * (x[b] - mean[b]);
                }
            }
        }
        for a in 0..d {
            for b in 0..a {
                cov[(b, a)] = cov[(a, b)];
            }
        }
        let degenerate = weight_sum < (d + 1) as f64;
        next.scales[j] = ridge_until_spd(cov, degenerate)?;
        next.means[j] = mean;

        if prev.family == Family::StudentT && estimate_dof {
            next.dof[j] = solve_nu(&NuStats {
                weight_sum,
                log_weight_sum,
                dim: d,
                current_dof: nu,
            });
        }
    }
    Ok(next)
}

fn run_em(panel: &FactorPanel, init: HmmParams, config: &FitConfig) -> Result<RunOutcome> {
    let mut params = init;
    let mut trace: Vec<f64> = Vec::new();
    let mut iterations = 0;
    loop {
        let kern = kernels(&params)?;
        let (logb, delta) = emission_table(&kern, panel);
        let post = forward_backward_log_emissions(&params.pi, &params.transition, &logb)?;
        iterations += 1;

        let converged = match trace.last() {
            Some(&prev) => (post.loglik - prev) / prev.abs().max(f64::MIN_POSITIVE) < config.tol,
            None => false,
        };
        trace.push(post.loglik);
        if converged || iterations >= config.max_iters {
            return Ok(RunOutcome {
                params,
                loglik: post.loglik,
                gamma: post.gamma,
                trace,
                iterations,
                converged,
            });
        }
        params = m_step(panel, &params, &post.gamma, &post.xi_sum, &delta, config.estimate_dof)?;
    }
}

/// Maximum-likelihood fit of a `k`-regime HMM by EM, best of
/// `config.n_restarts` starts. Restarts run in parallel; the winner is the
/// highest log-likelihood, ties going to the lower restart index.
pub fn em_fit(panel: &FactorPanel, k: usize, family: Family, config: &FitConfig) -> Result<HmmFit> {
    if k == 0 {
        return Err(Error::InvalidArgument("need at least one regime".into()));
    }
    if panel.n_rows() <= 10 * k {
        return Err(Error::SampleSize {
            required: 10 * k + 1,
            available: panel.n_rows(),
        });
    }
    let restarts = config.n_restarts.max(1);
    let outcomes: Vec<Result<RunOutcome>> = (0..restarts)
        .into_par_iter()
        .map(|r| {
            let init = initial_params(panel, k, family, config, r)?;
            run_em(panel, init, config)
        })
        .collect();

    let mut best: Option<(usize, RunOutcome)> = None;
    let mut last_err = None;
    for (r, outcome) in outcomes.into_iter().enumerate() {
        match outcome {
            Ok(run) => {
                if best.as_ref().is_none_or(|(_, b)| run.loglik > b.loglik) {
                    best = Some((r, run));
                }
            }
            Err(e) => last_err = Some(e),
        }
    }
    let (restart, run) = best.ok_or_else(|| {
        Error::Estimation(format!(
            "all {restarts} restarts failed: {}",
            last_err.map_or_else(String::new, |e| e.to_string())
        ))
    })?;

    let n_free = n_free_params(k, panel.n_factors(), family);
    let labels = argmax_labels(&run.gamma, k);
    Ok(HmmFit {
        bic: -2.0 * run.loglik + n_free as f64 * (panel.n_rows() as f64).ln(),
        params: run.params,
        loglik: run.loglik,
        n_free_params: n_free,
        gamma: run.gamma,
        labels,
        loglik_trace: run.trace,
        iterations: run.iterations,
        converged: run.converged,
        restart,
        seed: config.seed,
        n_restarts: restarts,
    })
}
