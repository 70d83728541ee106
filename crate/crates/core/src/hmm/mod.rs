//! K-regime hidden Markov model with multivariate Student-t or Gaussian
//! emissions, fitted by EM.
//!
//! Regimes are indexed `0..K`; after [`order_regimes`] index 0 is the calmest
//! regime and `K - 1` the most volatile one.

mod em;
mod emission;
mod forward_backward;
mod order;
mod persist;
mod select;

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use em::{em_fit, initial_params, solve_nu, FitConfig, NuStats, NU_MAX, NU_MIN};
pub use emission::{emission_log_densities, gaussian_logpdf, t_logpdf, EmissionKernel};
pub use forward_backward::{forward_backward, forward_backward_log_emissions, Posteriors};
pub use order::{argmax_labels, decode, order_regimes, permute_fit};
pub use persist::ModelFile;
pub use select::{n_free_params, select_k, BicRow, ModelSelection};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    StudentT,
    Gaussian,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::StudentT => write!(f, "student-t"),
            Family::Gaussian => write!(f, "gaussian"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "student-t" | "student_t" | "t" => Ok(Family::StudentT),
            "gaussian" | "normal" => Ok(Family::Gaussian),
            other => Err(Error::InvalidArgument(format!("unknown emission family `{other}`"))),
        }
    }
}

/// Parameters of a fitted or hand-specified HMM.
#[derive(Debug, Clone, PartialEq)]
pub struct HmmParams {
    pub family: Family,
    /// Initial state distribution.
    pub pi: Vec<f64>,
    /// Row-stochastic transition matrix, `transition[j][k] = P(z_t = k | z_{t-1} = j)`.
    pub transition: Vec<Vec<f64>>,
    /// Per-regime location vectors (percent).
    pub means: Vec<Vec<f64>>,
    /// Per-regime SPD scale matrices (percent^2).
    pub scales: Vec<DMatrix<f64>>,
    /// Per-regime degrees of freedom; ignored for the Gaussian family.
    pub dof: Vec<f64>,
}

impl HmmParams {
    pub fn n_states(&self) -> usize {
        self.pi.len()
    }

    pub fn dim(&self) -> usize {
        self.means.first().map_or(0, Vec::len)
    }

    /// Checks shapes, stochasticity (to `tol`), positive definiteness and ν > 2.
    pub fn validate(&self, tol: f64) -> Result<()> {
        let k = self.n_states();
        let d = self.dim();
        if k == 0 || d == 0 {
            return Err(Error::InvalidArgument("empty HMM parameters".into()));
        }
        if self.transition.len() != k || self.means.len() != k || self.scales.len() != k || self.dof.len() != k {
            return Err(Error::InvalidArgument("inconsistent regime count".into()));
        }
        let stochastic = |row: &[f64]| {
            row.iter().all(|p| *p >= 0.0 && p.is_finite()) && (row.iter().sum::<f64>() - 1.0).abs() <= tol
        };
        if !stochastic(&self.pi) {
            return Err(Error::InvalidArgument("initial distribution does not sum to 1".into()));
        }
        for (j, row) in self.transition.iter().enumerate() {
            if row.len() != k || !stochastic(row) {
                return Err(Error::InvalidArgument(format!("transition row {j} is not stochastic")));
            }
        }
        for (j, (mu, s)) in self.means.iter().zip(&self.scales).enumerate() {
            if mu.len() != d || s.nrows() != d || s.ncols() != d {
                return Err(Error::InvalidArgument(format!("regime {j} has wrong dimension")));
            }
            if s.clone().cholesky().is_none() {
                return Err(Error::NotPositiveDefinite);
            }
        }
        if self.family == Family::StudentT && self.dof.iter().any(|nu| !(*nu > 2.0)) {
            return Err(Error::InvalidArgument("degrees of freedom must exceed 2".into()));
        }
        Ok(())
    }
}

/// Result of an EM fit.
#[derive(Debug, Clone)]
pub struct HmmFit {
    pub params: HmmParams,
    pub loglik: f64,
    pub bic: f64,
    pub n_free_params: usize,
    /// Smoothed posteriors, row-major T×K.
    pub gamma: Vec<f64>,
    pub labels: Vec<usize>,
    /// Observed-data log-likelihood at every E-step of the winning restart.
    pub loglik_trace: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    pub restart: usize,
    pub seed: u64,
    pub n_restarts: usize,
}

impl HmmFit {
    pub fn n_states(&self) -> usize {
        self.params.n_states()
    }

    pub fn n_obs(&self) -> usize {
        self.labels.len()
    }

    pub fn posterior(&self, t: usize) -> &[f64] {
        let k = self.n_states();
        &self.gamma[t * k..(t + 1) * k]
    }

    /// Days assigned to each regime.
    pub fn regime_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n_states()];
        for &l in &self.labels {
            counts[l] += 1;
        }
        counts
    }
}
