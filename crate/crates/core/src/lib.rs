//! Regime detection in daily factor-return panels and regime-conditioned
//! Granger tests between factor pairs.
//!
//! Pipeline: [`panel`] ingestion, [`hmm`] fitting and decoding, [`granger`]
//! tests per regime, [`events`] validation on stress episodes, [`backtest`]
//! of the crisis-gated strategy and the [`robustness`] checks. [`synthgen`]
//! produces panels with known regimes for testing.

// `!(x > y)` is used on purpose so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod backtest;
pub mod cli;
pub mod error;
pub mod events;
pub mod granger;
pub mod hmm;
pub mod labels;
pub mod numerics;
pub mod panel;
pub mod rng;
pub mod robustness;
pub mod synthgen;

pub use error::{Error, Result};
pub use panel::FactorPanel;
