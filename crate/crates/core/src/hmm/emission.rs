use std::f64::consts::PI;

use nalgebra::DMatrix;

use super::{Family, HmmParams};
use crate::error::{Error, Result};
use crate::numerics::log_gamma;
use crate::panel::FactorPanel;

/// Precomputed per-regime density: mean, Cholesky factor and normalizing constant.
#[derive(Debug, Clone)]
pub struct EmissionKernel {
    mean: Vec<f64>,
    // lower-triangular factor, row-major d×d
    chol: Vec<f64>,
    log_norm: f64,
    dof: Option<f64>,
}

impl EmissionKernel {
    /// `dof = None` gives the Gaussian density.
    pub fn new(mean: &[f64], scale: &DMatrix<f64>, dof: Option<f64>) -> Result<Self> {
        let d = mean.len();
        if scale.nrows() != d || scale.ncols() != d {
            return Err(Error::InvalidArgument("scale matrix does not match mean".into()));
        }
        let l = scale.clone().cholesky().ok_or(Error::NotPositiveDefinite)?.unpack();
        let mut chol = vec![0.0; d * d];
        let mut log_det = 0.0;
        for i in 0..d {
            for j in 0..=i {
                chol[i * d + j] = l[(i, j)];
            }
            log_det += 2.0 * l[(i, i)].ln();
        }
        let df = d as f64;
        let log_norm = match dof {
            Some(nu) => {
                if !(nu > 0.0) {
                    return Err(Error::Domain {
                        function: "t_logpdf",
                        value: nu,
                    });
                }
                log_gamma((nu + df) / 2.0)? - log_gamma(nu / 2.0)? - 0.5 * df * (nu * PI).ln() - 0.5 * log_det
            }
            None => -0.5 * df * (2.0 * PI).ln() - 0.5 * log_det,
        };
        Ok(Self {
            mean: mean.to_vec(),
            chol,
            log_norm,
            dof,
        })
    }

    pub fn dim(&self) -> usize {
        self.mean.len()
    }

    /// Squared Mahalanobis distance δ = (x-μ)ᵀ Σ⁻¹ (x-μ).
    pub fn mahalanobis(&self, x: &[f64]) -> f64 {
        let d = self.dim();
        let mut z = [0.0f64; 16];
        let mut heap;
        let z: &mut [f64] = if d <= 16 {
            &mut z[..d]
        } else {
            heap = vec![0.0; d];
            &mut heap
        };
        let mut acc = 0.0;
        for i in 0..d {
            let row = &self.chol[i * d..i * d + i];
            let s: f64 = row.iter().zip(z.iter()).map(|(l, v)| l * v).sum();
            z[i] = (x[i] - self.mean[i] - s) / self.chol[i * d + i];
            acc += z[i] * z[i];
        }
        acc
    }

    /// Log density given a precomputed Mahalanobis distance.
    pub fn log_pdf_from_mahalanobis(&self, delta: f64) -> f64 {
        match self.dof {
            Some(nu) => {
                let df = self.dim() as f64;
                self.log_norm - 0.5 * (nu + df) * (delta / nu).ln_1p()
            }
            None => self.log_norm - 0.5 * delta,
        }
    }

    pub fn log_pdf(&self, x: &[f64]) -> f64 {
        self.log_pdf_from_mahalanobis(self.mahalanobis(x))
    }
}

/// Full multivariate Student-t log density.
pub fn t_logpdf(x: &[f64], mean: &[f64], scale: &DMatrix<f64>, dof: f64) -> Result<f64> {
    if x.len() != mean.len() {
        return Err(Error::InvalidArgument("observation and mean differ in length".into()));
    }
    Ok(EmissionKernel::new(mean, scale, Some(dof))?.log_pdf(x))
}

/// Multivariate normal log density.
pub fn gaussian_logpdf(x: &[f64], mean: &[f64], cov: &DMatrix<f64>) -> Result<f64> {
    if x.len() != mean.len() {
        return Err(Error::InvalidArgument("observation and mean differ in length".into()));
    }
    Ok(EmissionKernel::new(mean, cov, None)?.log_pdf(x))
}

pub(crate) fn kernels(params: &HmmParams) -> Result<Vec<EmissionKernel>> {
    (0..params.n_states())
        .map(|k| {
            let dof = match params.family {
                Family::StudentT => Some(params.dof[k]),
                Family::Gaussian => None,
            };
            EmissionKernel::new(&params.means[k], &params.scales[k], dof)
        })
        .collect()
}

/// Row-major T×K log emission densities and Mahalanobis distances.
pub(crate) fn emission_table(kernels: &[EmissionKernel], panel: &FactorPanel) -> (Vec<f64>, Vec<f64>) {
    let k = kernels.len();
    let t = panel.n_rows();
    let mut logb = Vec::with_capacity(t * k);
    let mut delta = Vec::with_capacity(t * k);
    for x in panel.rows() {
        for kern in kernels {
            let m = kern.mahalanobis(x);
            delta.push(m);
            logb.push(kern.log_pdf_from_mahalanobis(m));
        }
    }
    (logb, delta)
}

/// Row-major T×K table of log emission densities under `params`.
pub fn emission_log_densities(params: &HmmParams, panel: &FactorPanel) -> Result<Vec<f64>> {
    if panel.n_factors() != params.dim() {
        return Err(Error::InvalidArgument(format!(
            "panel has {} factors, model expects {}",
            panel.n_factors(),
            params.dim()
        )));
    }
    let kernels = kernels(params)?;
    Ok(emission_table(&kernels, panel).0)
}
