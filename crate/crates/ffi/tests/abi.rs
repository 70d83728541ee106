use std::ffi::{CStr, CString};
use std::ptr;

use factor_regimes_ffi::*;

fn last_error() -> String {
    let p = fr_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn scalar_functions() {
    let mut v = 0.0;
    unsafe {
        assert_eq!(fr_log_gamma(5.0, &mut v), FrStatus::Ok);
        assert!((v - 24f64.ln()).abs() < 1e-13);
        assert_eq!(fr_digamma(1.0, &mut v), FrStatus::Ok);
        assert!((v + 0.577_215_664_901_532_9).abs() < 1e-13);
        assert_eq!(fr_binomial_tail(5, 6, 0.1, &mut v), FrStatus::Ok);
        assert!((v - 5.5e-5).abs() < 1e-12);
        // F(1, n) tail at t^2 equals the two-sided t tail; F(2, 2) has the closed form 1/(1+f)
        assert_eq!(fr_f_sf(3.0, 2, 2, &mut v), FrStatus::Ok);
        assert!((v - 0.25).abs() < 1e-13);
    }
}

#[test]
fn errors_are_reported() {
    let mut v = 0.0;
    unsafe {
        assert_eq!(fr_log_gamma(-1.0, &mut v), FrStatus::InvalidInput);
        assert!(last_error().contains("log_gamma"));
        assert_eq!(fr_f_sf(1.0, 0, 3, &mut v), FrStatus::InvalidInput);
        assert_eq!(fr_log_gamma(2.0, ptr::null_mut()), FrStatus::NullPointer);
        assert!(last_error().contains("null"));
    }
}

#[test]
fn metrics_and_granger() {
    let returns = [10.0, -10.0];
    let mut m = FrMetrics::default();
    unsafe {
        assert_eq!(fr_performance_metrics(returns.as_ptr(), 2, &mut m), FrStatus::Ok);
    }
    assert!((m.max_drawdown + 10.0).abs() < 1e-12);
    assert_eq!(m.has_sharpe, 1);
    assert_eq!(m.n_active_days, 2);

    let n = 400;
    let mut s: u64 = 99;
    let mut noise = || {
        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (s >> 11) as f64 / (1u64 << 53) as f64 - 0.5
    };
    let x: Vec<f64> = (0..n).map(|_| noise()).collect();
    let y: Vec<f64> = (0..n)
        .map(|t| noise() + if t >= 2 { 0.9 * x[t - 2] } else { 0.0 })
        .collect();
    let mut t = FrFTest::default();
    unsafe {
        assert_eq!(fr_granger_f_test(y.as_ptr(), x.as_ptr(), n, 2, &mut t), FrStatus::Ok);
        assert_eq!(t.n_obs, n - 2);
        assert!(t.p_value < 1e-10);
        assert_eq!(
            fr_granger_f_test(y.as_ptr(), x.as_ptr(), 20, 9, &mut t),
            FrStatus::InvalidInput
        );
        assert_eq!(
            fr_granger_f_test(ptr::null(), x.as_ptr(), n, 2, &mut t),
            FrStatus::NullPointer
        );
    }
}

#[test]
fn panel_fit_round_trip() {
    let mut csv = String::from("date,A,B\n");
    let mut s: u64 = 5;
    let d0 = chrono::NaiveDate::from_ymd_opt(2010, 1, 1).unwrap();
    for i in 0..300 {
        let scale = if (i / 50) % 2 == 0 { 0.3 } else { 2.0 };
        let mut draw = || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            scale * ((s >> 11) as f64 / (1u64 << 53) as f64 - 0.5)
        };
        let (a, b) = (draw(), draw());
        csv.push_str(&format!("{},{a:.6},{b:.6}\n", d0 + chrono::Duration::days(i)));
    }
    let text = CString::new(csv).unwrap();
    unsafe {
        let mut panel = ptr::null_mut();
        assert_eq!(fr_panel_from_csv(text.as_ptr(), &mut panel), FrStatus::Ok);
        let (mut rows, mut cols) = (0, 0);
        assert_eq!(fr_panel_shape(panel, &mut rows, &mut cols), FrStatus::Ok);
        assert_eq!((rows, cols), (300, 2));

        let mut fit = ptr::null_mut();
        assert_eq!(fr_fit(panel, 2, FrFamily::Gaussian, 3, 2, &mut fit), FrStatus::Ok);
        let (mut k, mut ll, mut bic) = (0, 0.0, 0.0);
        assert_eq!(fr_fit_summary(fit, &mut k, &mut ll, &mut bic), FrStatus::Ok);
        assert_eq!(k, 2);
        assert!(ll.is_finite() && bic > -2.0 * ll);

        let mut labels = vec![9u32; 300];
        assert_eq!(fr_fit_labels(fit, labels.as_mut_ptr(), 300), FrStatus::Ok);
        assert!(labels.iter().all(|&l| l < 2));
        // calm blocks come first and ordering puts the calm regime at 0
        assert!(labels[..50].iter().filter(|&&l| l == 0).count() > 40);
        assert_eq!(fr_fit_labels(fit, labels.as_mut_ptr(), 10), FrStatus::InvalidInput);

        let mut json = ptr::null_mut();
        assert_eq!(fr_fit_to_json(fit, &mut json), FrStatus::Ok);
        let doc = CStr::from_ptr(json).to_str().unwrap().to_owned();
        fr_string_free(json);
        assert!(doc.contains("\"family\": \"gaussian\""));
        assert!(doc.contains("\"factor_names\""));

        fr_fit_free(fit);
        fr_panel_free(panel);
        fr_panel_free(ptr::null_mut());

        let bad = CString::new("date,A\n2020-01-01,abc\n").unwrap();
        let mut p2 = ptr::null_mut();
        assert_eq!(fr_panel_from_csv(bad.as_ptr(), &mut p2), FrStatus::InvalidInput);
        assert!(p2.is_null());
    }
}
