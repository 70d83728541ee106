//! C ABI over `factor_regimes`.
//!
//! Every function returns an [`FrStatus`]; results go through out-pointers.
//! On failure [`fr_last_error`] describes the most recent error on the
//! calling thread. Handles are opaque and must be released with their
//! matching `*_free` function; strings returned by the library are released
//! with [`fr_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use factor_regimes::backtest::performance_metrics;
use factor_regimes::granger::{granger_f_test, pooled_mask};
use factor_regimes::hmm::{em_fit, order_regimes, Family, FitConfig, HmmFit, ModelFile};
use factor_regimes::numerics::{self, FTestDistribution};
use factor_regimes::synthgen::business_days;
use factor_regimes::{Error, FactorPanel};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Computation = 3,
    Panic = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrFamily {
    StudentT = 0,
    Gaussian = 1,
}

/// Opaque factor panel.
pub struct FrPanel(FactorPanel);

/// Opaque fitted model; regimes ordered calm to volatile.
pub struct FrFit {
    fit: HmmFit,
    factor_names: Vec<String>,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct FrFTest {
    pub lag: usize,
    pub f_stat: f64,
    pub p_value: f64,
    pub n_obs: usize,
    pub r2_increment: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct FrMetrics {
    /// Percent per year, geometric.
    pub annual_return: f64,
    /// Valid only when `has_sharpe` is nonzero.
    pub sharpe: f64,
    pub has_sharpe: i32,
    /// Percent, at most 0.
    pub max_drawdown: f64,
    pub n_active_days: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(FrStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if e.is_input_error() {
            FrStatus::InvalidInput
        } else {
            FrStatus::Computation
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(FrStatus::NullPointer, format!("{what} is null"))
}

fn guard<F>(f: F) -> FrStatus
where
    F: FnOnce() -> Result<(), Failure>,
{
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FrStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(message);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            FrStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(FrStatus::InvalidInput, format!("{what} is not UTF-8")))
}

unsafe fn slice_arg<'a>(p: *const f64, len: usize, what: &str) -> Result<&'a [f64], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn fr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn fr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_log_gamma(x: f64, out: *mut f64) -> FrStatus {
    guard(|| write_out(out, numerics::log_gamma(x)?))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_digamma(x: f64, out: *mut f64) -> FrStatus {
    guard(|| write_out(out, numerics::digamma(x)?))
}

/// Upper tail P(F > f) of the F(df1, df2) distribution.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_f_sf(f: f64, df1: u32, df2: u32, out: *mut f64) -> FrStatus {
    guard(|| write_out(out, numerics::f_sf(f, FTestDistribution::new(df1, df2)?)?))
}

/// P(X >= k) for X ~ Binomial(n, p).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_binomial_tail(k: u64, n: u64, p: f64, out: *mut f64) -> FrStatus {
    guard(|| write_out(out, numerics::binomial_tail(k, n, p)?))
}

/// Granger F test of `lag` lags of `source` on `target` over every day with
/// a full lag history.
///
/// # Safety
/// `target` and `source` must point to `len` readable doubles; `out` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_granger_f_test(
    target: *const f64,
    source: *const f64,
    len: usize,
    lag: usize,
    out: *mut FrFTest,
) -> FrStatus {
    guard(|| {
        let y = slice_arg(target, len, "target")?;
        let x = slice_arg(source, len, "source")?;
        let t = granger_f_test(y, x, lag, &pooled_mask(len, lag))?;
        write_out(
            out,
            FrFTest {
                lag: t.lag,
                f_stat: t.f_stat,
                p_value: t.p_value,
                n_obs: t.n_obs,
                r2_increment: t.r2_increment,
            },
        )
    })
}

/// Annual return, Sharpe and maximum drawdown of daily percent returns.
///
/// # Safety
/// `returns` must point to `len` readable doubles; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_performance_metrics(returns: *const f64, len: usize, out: *mut FrMetrics) -> FrStatus {
    guard(|| {
        let r = slice_arg(returns, len, "returns")?;
        let start = chrono::NaiveDate::from_ymd_opt(2000, 1, 3).expect("valid date");
        let m = performance_metrics(&business_days(start, r.len()), r)?;
        write_out(
            out,
            FrMetrics {
                annual_return: m.annual_return,
                sharpe: m.sharpe.unwrap_or(f64::NAN),
                has_sharpe: i32::from(m.sharpe.is_some()),
                max_drawdown: m.max_drawdown,
                n_active_days: m.n_active_days,
            },
        )
    })
}

/// Parses a canonical panel CSV (`date,<factors...>`).
///
/// # Safety
/// `csv` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_panel_from_csv(csv: *const c_char, out: *mut *mut FrPanel) -> FrStatus {
    guard(|| {
        let text = str_arg(csv, "csv")?;
        let panel = FactorPanel::from_csv(text)?;
        write_out(out, Box::into_raw(Box::new(FrPanel(panel))))
    })
}

/// # Safety
/// `path` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_panel_read(path: *const c_char, out: *mut *mut FrPanel) -> FrStatus {
    guard(|| {
        let path = str_arg(path, "path")?;
        let panel = FactorPanel::read_csv(std::path::Path::new(path))?;
        write_out(out, Box::into_raw(Box::new(FrPanel(panel))))
    })
}

/// # Safety
/// `panel` must be a live handle; `rows` and `factors` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_panel_shape(panel: *const FrPanel, rows: *mut usize, factors: *mut usize) -> FrStatus {
    guard(|| {
        let p = panel.as_ref().ok_or_else(|| null("panel"))?;
        write_out(rows, p.0.n_rows())?;
        write_out(factors, p.0.n_factors())
    })
}

/// # Safety
/// `panel` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fr_panel_free(panel: *mut FrPanel) {
    if !panel.is_null() {
        drop(Box::from_raw(panel));
    }
}

/// Fits a K-regime HMM with `restarts` seeded restarts and orders regimes by
/// volatility.
///
/// # Safety
/// `panel` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_fit(
    panel: *const FrPanel,
    k: usize,
    family: FrFamily,
    seed: u64,
    restarts: usize,
    out: *mut *mut FrFit,
) -> FrStatus {
    guard(|| {
        let p = &panel.as_ref().ok_or_else(|| null("panel"))?.0;
        if restarts == 0 {
            return Err(Failure(FrStatus::InvalidInput, "restarts must be at least 1".into()));
        }
        let family = match family {
            FrFamily::StudentT => Family::StudentT,
            FrFamily::Gaussian => Family::Gaussian,
        };
        let fit = em_fit(p, k, family, &FitConfig::new(seed).with_restarts(restarts))?;
        let fit = order_regimes(&fit, p);
        write_out(
            out,
            Box::into_raw(Box::new(FrFit {
                fit,
                factor_names: p.factor_names().to_vec(),
            })),
        )
    })
}

/// # Safety
/// `fit` must be a live handle; the out-pointers valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_fit_summary(
    fit: *const FrFit,
    n_states: *mut usize,
    loglik: *mut f64,
    bic: *mut f64,
) -> FrStatus {
    guard(|| {
        let f = &fit.as_ref().ok_or_else(|| null("fit"))?.fit;
        write_out(n_states, f.n_states())?;
        write_out(loglik, f.loglik)?;
        write_out(bic, f.bic)
    })
}

/// Copies decoded labels into `labels`, which must hold `len` entries where
/// `len` equals the panel length.
///
/// # Safety
/// `fit` must be a live handle; `labels` must be writable for `len` entries.
#[no_mangle]
pub unsafe extern "C" fn fr_fit_labels(fit: *const FrFit, labels: *mut u32, len: usize) -> FrStatus {
    guard(|| {
        let f = &fit.as_ref().ok_or_else(|| null("fit"))?.fit;
        if len != f.labels.len() {
            return Err(Failure(
                FrStatus::InvalidInput,
                format!("buffer holds {len} labels, fit has {}", f.labels.len()),
            ));
        }
        if labels.is_null() {
            return Err(null("labels"));
        }
        let dst = std::slice::from_raw_parts_mut(labels, len);
        for (d, &l) in dst.iter_mut().zip(&f.labels) {
            *d = l as u32;
        }
        Ok(())
    })
}

/// Model document as JSON; release with [`fr_string_free`].
///
/// # Safety
/// `fit` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fr_fit_to_json(fit: *const FrFit, out: *mut *mut c_char) -> FrStatus {
    guard(|| {
        let f = fit.as_ref().ok_or_else(|| null("fit"))?;
        let json = ModelFile::from_fit(&f.fit, &f.factor_names).to_json();
        let c = CString::new(json).map_err(|e| Failure(FrStatus::Computation, e.to_string()))?;
        write_out(out, c.into_raw())
    })
}

/// # Safety
/// `fit` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fr_fit_free(fit: *mut FrFit) {
    if !fit.is_null() {
        drop(Box::from_raw(fit));
    }
}
