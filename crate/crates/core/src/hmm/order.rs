use super::forward_backward::forward_backward;
use super::{HmmFit, HmmParams};
use crate::error::Result;
use crate::panel::{volatility_norm, FactorPanel};

/// Per-row argmax of a row-major T×K posterior table; ties go to the lower index.
pub fn argmax_labels(gamma: &[f64], k: usize) -> Vec<usize> {
    gamma
        .chunks_exact(k)
        .map(|row| {
            let mut best = 0;
            for j in 1..k {
                if row[j] > row[best] {
                    best = j;
                }
            }
            best
        })
        .collect()
}

/// Most probable regime per day under the smoothed posterior.
pub fn decode(params: &HmmParams, panel: &FactorPanel) -> Result<Vec<usize>> {
    let post = forward_backward(params, panel)?;
    Ok(argmax_labels(&post.gamma, params.n_states()))
}

/// Relabels so that `new regime i` is `old regime perm[i]`.
pub fn permute_fit(fit: &HmmFit, perm: &[usize]) -> HmmFit {
    let k = fit.n_states();
    let mut inverse = vec![0; k];
    for (new, &old) in perm.iter().enumerate() {
        inverse[old] = new;
    }
    let p = &fit.params;
    let params = HmmParams {
        family: p.family,
        pi: perm.iter().map(|&o| p.pi[o]).collect(),
        transition: perm
            .iter()
            .map(|&oi| perm.iter().map(|&oj| p.transition[oi][oj]).collect())
            .collect(),
        means: perm.iter().map(|&o| p.means[o].clone()).collect(),
        scales: perm.iter().map(|&o| p.scales[o].clone()).collect(),
        dof: perm.iter().map(|&o| p.dof[o]).collect(),
    };
    let gamma = fit
        .gamma
        .chunks_exact(k)
        .flat_map(|row| perm.iter().map(move |&o| row[o]))
        .collect();
    HmmFit {
        params,
        gamma,
        labels: fit.labels.iter().map(|&l| inverse[l]).collect(),
        ..fit.clone()
    }
}

/// Orders regimes by ascending mean volatility norm over their assigned days
/// (posterior-weighted mean for a regime with no assigned days).
pub fn order_regimes(fit: &HmmFit, panel: &FactorPanel) -> HmmFit {
    let k = fit.n_states();
    let norm = volatility_norm(panel);
    let mut sum = vec![0.0; k];
    let mut count = vec![0usize; k];
    for (&l, v) in fit.labels.iter().zip(&norm) {
        sum[l] += v;
        count[l] += 1;
    }
    let mean_norm: Vec<f64> = (0..k)
        .map(|j| {
            if count[j] > 0 {
                sum[j] / count[j] as f64
            } else {
                let (mut num, mut den) = (0.0, 0.0);
                for (row, v) in fit.gamma.chunks_exact(k).zip(&norm) {
                    num += row[j] * v;
                    den += row[j];
                }
                if den > 0.0 {
                    num / den
                } else {
                    f64::INFINITY
                }
            }
        })
        .collect();
    let mut perm: Vec<usize> = (0..k).collect();
    perm.sort_by(|&a, &b| mean_norm[a].total_cmp(&mean_norm[b]).then(a.cmp(&b)));
    permute_fit(fit, &perm)
}
