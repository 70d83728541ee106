use super::emission::{emission_table, kernels};
use super::HmmParams;
use crate::error::{Error, Result};
use crate::panel::FactorPanel;

/// E-step output.
#[derive(Debug, Clone)]
pub struct Posteriors {
    pub loglik: f64,
    /// Smoothed P(z_t = k | x_{1..T}), row-major T×K.
    pub gamma: Vec<f64>,
    /// Σ_t P(z_{t-1} = j, z_t = k | x_{1..T}), row-major K×K.
    pub xi_sum: Vec<f64>,
}

/// Scaled forward-backward recursion on a precomputed T×K table of log
/// emission densities. Each step is shifted by its row maximum and
/// renormalized, so long samples do not underflow.
pub fn forward_backward_log_emissions(
    pi: &[f64],
    transition: &[Vec<f64>],
    log_emissions: &[f64],
) -> Result<Posteriors> {
    let k = pi.len();
    if k == 0 || !log_emissions.len().is_multiple_of(k) {
        return Err(Error::InvalidArgument(
            "emission table does not match state count".into(),
        ));
    }
    let t_len = log_emissions.len() / k;
    if t_len == 0 {
        return Err(Error::InvalidArgument("empty observation sequence".into()));
    }

    // b[t,k] = exp(logb - max_k logb)
    let mut b = vec![0.0; t_len * k];
    let mut shift = vec![0.0; t_len];
    for t in 0..t_len {
        let row = &log_emissions[t * k..(t + 1) * k];
        let m = row.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        if !m.is_finite() {
            return Err(Error::Estimation(format!("no finite emission density at t={t}")));
        }
        shift[t] = m;
        for j in 0..k {
            b[t * k + j] = (row[j] - m).exp();
        }
    }

    let mut alpha = vec![0.0; t_len * k];
    let mut scale = vec![0.0; t_len];
    for j in 0..k {
        alpha[j] = pi[j] * b[j];
    }
    for t in 0..t_len {
        if t > 0 {
            for j in 0..k {
                let mut s = 0.0;
                for i in 0..k {
                    s += alpha[(t - 1) * k + i] * transition[i][j];
                }
                alpha[t * k + j] = s * b[t * k + j];
            }
        }
        let c: f64 = alpha[t * k..(t + 1) * k].iter().sum();
        if !(c > 0.0) || !c.is_finite() {
            return Err(Error::Estimation(format!("forward pass underflow at t={t}")));
        }
        scale[t] = c;
        for v in &mut alpha[t * k..(t + 1) * k] {
            *v /= c;
        }
    }
    let loglik: f64 = scale.iter().zip(&shift).map(|(c, m)| c.ln() + m).sum();
    if !loglik.is_finite() {
        return Err(Error::Estimation("non-finite log-likelihood".into()));
    }

    let mut beta = vec![1.0; t_len * k];
    let mut xi_sum = vec![0.0; k * k];
    let mut weighted = vec![0.0; k];
    for t in (0..t_len - 1).rev() {
        let c = scale[t + 1];
        for j in 0..k {
            weighted[j] = b[(t + 1) * k + j] * beta[(t + 1) * k + j] / c;
        }
        for i in 0..k {
            let a_i = alpha[t * k + i];
            let mut s = 0.0;
            for j in 0..k {
                let w = transition[i][j] * weighted[j];
                s += w;
                xi_sum[i * k + j] += a_i * w;
            }
            beta[t * k + i] = s;
        }
    }

    let mut gamma = alpha;
    for t in 0..t_len {
        let row = &mut gamma[t * k..(t + 1) * k];
        let mut s = 0.0;
        for j in 0..k {
            row[j] *= beta[t * k + j];
            s += row[j];
        }
        for v in row.iter_mut() {
            *v /= s;
        }
    }

    Ok(Posteriors { loglik, gamma, xi_sum })
}

/// Exact smoothed posteriors and pairwise transition expectations.
pub fn forward_backward(params: &HmmParams, panel: &FactorPanel) -> Result<Posteriors> {
    params.validate(1e-9)?;
    if panel.n_factors() != params.dim() {
        return Err(Error::InvalidArgument(format!(
            "panel has {} factors, model expects {}",
            panel.n_factors(),
            params.dim()
        )));
    }
    let kernels = kernels(params)?;
    let (logb, _) = emission_table(&kernels, panel);
    forward_backward_log_emissions(&params.pi, &params.transition, &logb)
}
