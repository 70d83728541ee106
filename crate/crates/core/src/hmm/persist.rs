use std::path::Path;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::{Family, HmmFit, HmmParams};
use crate::error::{Error, Result};

const FORMAT: &str = "factor-regimes/hmm-v1";

/// JSON model document. Floats are written in shortest round-trip form, so
/// save → load reproduces every parameter bit for bit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelFile {
    pub format: String,
    pub family: Family,
    pub k: usize,
    pub d: usize,
    #[serde(default)]
    pub factor_names: Vec<String>,
    pub pi: Vec<f64>,
    pub transition: Vec<Vec<f64>>,
    pub mu: Vec<Vec<f64>>,
    /// Full d×d scale matrices, row by row.
    pub sigma: Vec<Vec<Vec<f64>>>,
    /// Absent for the Gaussian family.
    pub nu: Option<Vec<f64>>,
    pub loglik: f64,
    pub bic: f64,
    pub n_free_params: usize,
    pub seed: u64,
    pub restarts: usize,
}

impl ModelFile {
    pub fn from_fit(fit: &HmmFit, factor_names: &[String]) -> Self {
        let p = &fit.params;
        let d = p.dim();
        ModelFile {
            format: FORMAT.to_string(),
            family: p.family,
            k: p.n_states(),
            d,
            factor_names: factor_names.to_vec(),
            pi: p.pi.clone(),
            transition: p.transition.clone(),
            mu: p.means.clone(),
            sigma: p
                .scales
                .iter()
                .map(|s| (0..d).map(|i| (0..d).map(|j| s[(i, j)]).collect()).collect())
                .collect(),
            nu: match p.family {
                Family::StudentT => Some(p.dof.clone()),
                Family::Gaussian => None,
            },
            loglik: fit.loglik,
            bic: fit.bic,
            n_free_params: fit.n_free_params,
            seed: fit.seed,
            restarts: fit.n_restarts,
        }
    }

    pub fn params(&self) -> Result<HmmParams> {
        let d = self.d;
        let scales = self
            .sigma
            .iter()
            .map(|rows| {
                if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                    return Err(Error::InvalidArgument("sigma entry is not d×d".into()));
                }
                Ok(DMatrix::from_fn(d, d, |i, j| rows[i][j]))
            })
            .collect::<Result<Vec<_>>>()?;
        let dof = match (self.family, &self.nu) {
            (Family::StudentT, Some(nu)) => nu.clone(),
            (Family::StudentT, None) => return Err(Error::InvalidArgument("student-t model without nu".into())),
            (Family::Gaussian, _) => vec![f64::INFINITY; self.k],
        };
        let params = HmmParams {
            family: self.family,
            pi: self.pi.clone(),
            transition: self.transition.clone(),
            means: self.mu.clone(),
            scales,
            dof,
        };
        if params.n_states() != self.k || params.dim() != d {
            return Err(Error::InvalidArgument("declared k/d disagree with parameters".into()));
        }
        params.validate(1e-9)?;
        Ok(params)
    }

    pub fn to_json(&self) -> String {
        // serialization of plain data cannot fail
        serde_json::to_string_pretty(self).expect("model serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ModelFile = serde_json::from_str(text)?;
        if file.format != FORMAT {
            return Err(Error::InvalidArgument(format!(
                "unsupported model format `{}`",
                file.format
            )));
        }
        Ok(file)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n").map_err(|e| Error::io(path, e))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_json(&text)
    }
}
