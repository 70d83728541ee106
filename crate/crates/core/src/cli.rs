//! Command-line driver: ingest → fit → granger → validate → backtest, plus
//! plot-data export, robustness tables and synthetic panels.
//!
//! Exit codes: 0 success, 2 bad input, 3 failed computation.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use chrono::NaiveDate;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::backtest::{run_backtest, BacktestConfig, Execution, DEFAULT_SIGNAL_WINDOW};
use crate::error::{Error, Result};
use crate::events::{
    default_events, detection_rate, event_granger_validation, lead_time, load_events, EventSample, EventTestConfig,
    EventWindow, DEFAULT_MIN_RUN, DEFAULT_PEAK_HORIZON,
};
use crate::granger::{cells_to_csv, pairwise_regime_matrix, regime_lag_mask, DEFAULT_ALPHA, DEFAULT_LAG_MAX};
use crate::hmm::{decode, em_fit, order_regimes, select_k, Family, FitConfig, HmmFit, ModelFile};
use crate::labels::{read_labels_for, write_labels};
use crate::panel::{merge_on_dates, parse_ff_daily_csv, slice_dates, volatility_norm, FactorPanel};
use crate::robustness::{
    lag_sweep, subsample_split, threshold_regimes, transition_window_analysis, weekly_analysis, TransitionConfig,
    DEFAULT_RV_QUANTILE, DEFAULT_RV_WINDOW,
};
use crate::synthgen::{generate, three_regime_params, SyntheticSpec};

pub const EXIT_INPUT: i32 = 2;
pub const EXIT_COMPUTATION: i32 = 3;

pub const FF5_COLUMNS: [&str; 5] = ["MKT-RF", "SMB", "HML", "RMW", "CMA"];
pub const MOMENTUM_COLUMNS: [&str; 1] = ["MOM"];

#[derive(Debug, Parser)]
#[command(
    name = "factor-regimes",
    version,
    about = "Regime detection and regime-conditioned Granger tests for daily factor returns"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse the five-factor and momentum files into one canonical panel.
    Ingest(IngestArgs),
    /// Fit the HMM (fixed K or BIC over a range), save the model and labels.
    Fit(FitArgs),
    /// Decode labels for a panel under a saved model.
    Decode(DecodeArgs),
    /// Pairwise Granger tests within every regime.
    Granger(GrangerArgs),
    /// Detection rates, lead times and per-event Granger classification.
    Validate(ValidateArgs),
    /// Crisis-gated strategy against buy-and-hold.
    Backtest(BacktestArgs),
    /// Timeline export: date, volatility norm, regime, event marker.
    Plotdata(PlotdataArgs),
    /// Threshold regimes, lag sweep, subsample split, transitions, weekly data.
    Robustness(RobustnessArgs),
    /// Write a synthetic three-regime panel and its true labels.
    Simulate(SimulateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "student-t")]
    StudentT,
    Gaussian,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::StudentT => Family::StudentT,
            FamilyArg::Gaussian => Family::Gaussian,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExecutionArg {
    SameDay,
    NextDay,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EventModeArg {
    /// All trading days in the window.
    Raw,
    /// Only crisis-labelled days in the window.
    Crisis,
}

fn parse_date(s: &str) -> std::result::Result<NaiveDate, String> {
    NaiveDate::parse_from_str(s, "%Y-%m-%d").map_err(|_| format!("expected YYYY-MM-DD, got `{s}`"))
}

fn parse_k_range(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s.split_once(':').ok_or("expected A:B")?;
    let a: usize = a.trim().parse().map_err(|_| format!("bad lower bound `{a}`"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad upper bound `{b}`"))?;
    if a == 0 || a > b {
        return Err("need 1 <= A <= B".into());
    }
    Ok((a, b))
}

#[derive(Debug, Args)]
pub struct IngestArgs {
    /// Daily five-factor file (published CSV layout).
    #[arg(long)]
    pub ff5: PathBuf,
    /// Daily momentum file (published CSV layout).
    #[arg(long)]
    pub momentum: PathBuf,
    #[arg(long, value_parser = parse_date)]
    pub start: Option<NaiveDate>,
    #[arg(long, value_parser = parse_date)]
    pub end: Option<NaiveDate>,
    /// Canonical panel CSV to write.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    #[arg(long)]
    pub panel: PathBuf,
    /// Fixed number of regimes.
    #[arg(long, conflicts_with = "k_range")]
    pub k: Option<usize>,
    /// Select K by BIC over A..=B [default: 2:4 when --k is absent].
    #[arg(long, value_parser = parse_k_range)]
    pub k_range: Option<(usize, usize)>,
    #[arg(long, value_enum, default_value = "student-t")]
    pub family: FamilyArg,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 10)]
    pub restarts: usize,
    /// Model JSON to write.
    #[arg(long)]
    pub out: PathBuf,
    /// Decoded label CSV to write (default: alongside the model).
    #[arg(long)]
    pub labels: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DecodeArgs {
    #[arg(long)]
    pub panel: PathBuf,
    #[arg(long)]
    pub model: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct GrangerArgs {
    #[arg(long)]
    pub panel: PathBuf,
    #[arg(long)]
    pub labels: PathBuf,
    #[arg(long, default_value_t = DEFAULT_LAG_MAX)]
    pub lmax: usize,
    /// Family-wise level; divided by d(d−1) for the Bonferroni threshold.
    #[arg(long, default_value_t = DEFAULT_ALPHA)]
    pub alpha: f64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[arg(long)]
    pub panel: PathBuf,
    #[arg(long)]
    pub labels: PathBuf,
    /// Event file `name,start,end[,expected_crisis]` [default: built-in episodes].
    #[arg(long)]
    pub events: Option<PathBuf>,
    /// Crisis regime index [default: highest label present].
    #[arg(long)]
    pub crisis: Option<usize>,
    /// Fixed Granger lag for the per-event tests.
    #[arg(long, default_value_t = 9)]
    pub lag: usize,
    #[arg(long, value_enum, default_value = "raw")]
    pub mode: EventModeArg,
    /// Consecutive crisis days that count as a sustained detection.
    #[arg(long, default_value_t = DEFAULT_MIN_RUN)]
    pub min_run: usize,
    /// Trading days after detection searched for the volatility peak.
    #[arg(long, default_value_t = DEFAULT_PEAK_HORIZON)]
    pub horizon: usize,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct BacktestArgs {
    #[arg(long)]
    pub panel: PathBuf,
    #[arg(long)]
    pub labels: PathBuf,
    /// Trailing days in the HML signal.
    #[arg(long, default_value_t = DEFAULT_SIGNAL_WINDOW)]
    pub window: usize,
    #[arg(long, value_parser = parse_date, default_value = "1995-01-01")]
    pub start: NaiveDate,
    #[arg(long, value_parser = parse_date, default_value = "2024-12-31")]
    pub end: NaiveDate,
    #[arg(long)]
    pub crisis: Option<usize>,
    #[arg(long, value_enum, default_value = "same-day")]
    pub execution: ExecutionArg,
    /// Report JSON to write.
    #[arg(long)]
    pub out: PathBuf,
    /// Optional daily returns CSV.
    #[arg(long)]
    pub returns: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PlotdataArgs {
    #[arg(long)]
    pub panel: PathBuf,
    #[arg(long)]
    pub labels: PathBuf,
    #[arg(long)]
    pub events: Option<PathBuf>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct RobustnessArgs {
    #[arg(long)]
    pub panel: PathBuf,
    #[arg(long)]
    pub labels: PathBuf,
    #[arg(long)]
    pub crisis: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_LAG_MAX)]
    pub lmax: usize,
    #[arg(long, default_value_t = DEFAULT_ALPHA)]
    pub alpha: f64,
    /// Realized-volatility window of the threshold detector.
    #[arg(long, default_value_t = DEFAULT_RV_WINDOW)]
    pub window: usize,
    #[arg(long, value_parser = parse_date, default_value = "2008-01-01")]
    pub split: NaiveDate,
    /// Output directory for the CSV tables.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, default_value_t = 6)]
    pub d: usize,
    #[arg(long, default_value_t = 8000)]
    pub t: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, value_enum, default_value = "student-t")]
    pub family: FamilyArg,
    /// Panel CSV to write.
    #[arg(long)]
    pub out: PathBuf,
    /// True-label CSV to write.
    #[arg(long)]
    pub labels: PathBuf,
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { 0 };
        }
    };
    match execute(&cli.command) {
        Ok(summary) => {
            print!("{summary}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_input_error() {
                EXIT_INPUT
            } else {
                EXIT_COMPUTATION
            }
        }
    }
}

/// Runs one command, returning the console summary.
pub fn execute(command: &Command) -> Result<String> {
    match command {
        Command::Ingest(a) => cmd_ingest(a),
        Command::Fit(a) => cmd_fit(a),
        Command::Decode(a) => cmd_decode(a),
        Command::Granger(a) => cmd_granger(a),
        Command::Validate(a) => cmd_validate(a),
        Command::Backtest(a) => cmd_backtest(a),
        Command::Plotdata(a) => cmd_plotdata(a),
        Command::Robustness(a) => cmd_robustness(a),
        Command::Simulate(a) => cmd_simulate(a),
    }
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}

fn with_file_context(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{}: {message}", path.display()),
        },
        Error::MissingColumn(c) => Error::MissingColumn(format!("{c}` in `{}", path.display())),
        other => other,
    }
}

/// Reads both published files and inner-joins them on dates.
pub fn ingest_files(ff5: &Path, momentum: &Path) -> Result<FactorPanel> {
    let a = parse_ff_daily_csv(&read_text(ff5)?, &FF5_COLUMNS).map_err(|e| with_file_context(ff5, e))?;
    let b = parse_ff_daily_csv(&read_text(momentum)?, &MOMENTUM_COLUMNS).map_err(|e| with_file_context(momentum, e))?;
    merge_on_dates(&a, &b)
}

fn span(panel: &FactorPanel) -> String {
    match (panel.dates().first(), panel.dates().last()) {
        (Some(a), Some(b)) => format!("{a}..{b}"),
        _ => "empty".into(),
    }
}

fn cmd_ingest(a: &IngestArgs) -> Result<String> {
    let mut panel = ingest_files(&a.ff5, &a.momentum)?;
    if a.start.is_some() || a.end.is_some() {
        panel = slice_dates(
            &panel,
            a.start.unwrap_or(NaiveDate::MIN),
            a.end.unwrap_or(NaiveDate::MAX),
        )?;
    }
    panel.write_csv(&a.out)?;
    Ok(format!(
        "T = {}\nd = {} ({})\ndates {}\n",
        panel.n_rows(),
        panel.n_factors(),
        panel.factor_names().join(", "),
        span(&panel)
    ))
}

/// Display names for ordered regimes.
pub fn regime_names(k: usize) -> Vec<String> {
    match k {
        2 => vec!["Normal".into(), "Crisis".into()],
        3 => vec!["Normal".into(), "Elevated".into(), "Crisis".into()],
        _ => (0..k).map(|i| format!("Regime {i}")).collect(),
    }
}

/// Per-regime table: days, share, mean norm, ν and self-transition.
pub fn regime_summary(fit: &HmmFit, panel: &FactorPanel) -> String {
    let k = fit.n_states();
    let norm = volatility_norm(panel);
    let counts = fit.regime_counts();
    let names = regime_names(k);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<10} {:>6} {:>10} {:>9} {:>7} {:>10}",
        "Regime", "Days", "Proportion", "Mean ||x||", "nu", "Self-trans"
    );
    for j in 0..k {
        let mean_norm = if counts[j] > 0 {
            fit.labels
                .iter()
                .zip(&norm)
                .filter(|(l, _)| **l == j)
                .map(|(_, v)| v)
                .sum::<f64>()
                / counts[j] as f64
        } else {
            f64::NAN
        };
        let nu = if fit.params.family == Family::StudentT {
            format!("{:.1}", fit.params.dof[j])
        } else {
            "-".into()
        };
        let _ = writeln!(
            out,
            "{:<10} {:>6} {:>9.1}% {:>9.2} {:>7} {:>10.3}",
            names[j],
            counts[j],
            100.0 * counts[j] as f64 / fit.n_obs() as f64,
            mean_norm,
            nu,
            fit.params.transition[j][j]
        );
    }
    out
}

fn cmd_fit(a: &FitArgs) -> Result<String> {
    let panel = FactorPanel::read_csv(&a.panel)?;
    if a.restarts == 0 {
        return Err(Error::InvalidArgument("--restarts must be at least 1".into()));
    }
    let family = Family::from(a.family);
    let config = FitConfig::new(a.seed).with_restarts(a.restarts);
    let mut out = String::new();
    let fit = match a.k {
        Some(k) => em_fit(&panel, k, family, &config)?,
        None => {
            let (lo, hi) = a.k_range.unwrap_or((2, 4));
            let sel = select_k(&panel, lo..=hi, family, &config)?;
            let _ = writeln!(
                out,
                "{:>3} {:>8} {:>16} {:>16} {:>10}",
                "K", "params", "loglik", "BIC", "dBIC"
            );
            for row in &sel.table {
                match &row.outcome {
                    Ok((ll, bic)) => {
                        let _ = writeln!(
                            out,
                            "{:>3} {:>8} {:>16.2} {:>16.2} {:>10.2}",
                            row.k,
                            row.n_free_params,
                            ll,
                            bic,
                            sel.delta_bic(row.k).unwrap_or(f64::NAN)
                        );
                    }
                    Err(e) => {
                        let _ = writeln!(out, "{:>3} {:>8} failed: {e}", row.k, row.n_free_params);
                    }
                }
            }
            let _ = writeln!(out, "selected K = {}", sel.best_k);
            sel.best_fit
        }
    };
    let fit = order_regimes(&fit, &panel);
    ModelFile::from_fit(&fit, panel.factor_names()).save(&a.out)?;
    let labels_path = a.labels.clone().unwrap_or_else(|| a.out.with_extension("labels.csv"));
    write_labels(&labels_path, panel.dates(), &fit.labels)?;
    let _ = writeln!(
        out,
        "family {}  K = {}  loglik {:.2}  BIC {:.2}  iterations {}{}",
        fit.params.family,
        fit.n_states(),
        fit.loglik,
        fit.bic,
        fit.iterations,
        if fit.converged { "" } else { " (not converged)" }
    );
    out.push_str(&regime_summary(&fit, &panel));
    let _ = writeln!(out, "model  {}\nlabels {}", a.out.display(), labels_path.display());
    Ok(out)
}

fn cmd_decode(a: &DecodeArgs) -> Result<String> {
    let panel = FactorPanel::read_csv(&a.panel)?;
    let model = ModelFile::load(&a.model)?;
    let params = model.params()?;
    if params.dim() != panel.n_factors() {
        return Err(Error::InvalidArgument(format!(
            "model has d = {} but panel has {} factors",
            params.dim(),
            panel.n_factors()
        )));
    }
    let labels = decode(&params, &panel)?;
    write_labels(&a.out, panel.dates(), &labels)?;
    Ok(format!(
        "decoded {} days into {} regimes\n",
        labels.len(),
        params.n_states()
    ))
}

fn cmd_granger(a: &GrangerArgs) -> Result<String> {
    let panel = FactorPanel::read_csv(&a.panel)?;
    let labels = read_labels_for(&a.labels, &panel)?;
    let cells = pairwise_regime_matrix(&panel, &labels, a.lmax, a.alpha)?;
    write_text(&a.out, &cells_to_csv(&cells))?;
    let d = panel.n_factors();
    let mut out = format!(
        "{} cells, Bonferroni threshold {:.3e}\n",
        cells.len(),
        a.alpha / (d * (d - 1)) as f64
    );
    for r in cells.iter().filter_map(|c| c.ok()).filter(|r| r.significant_bonferroni) {
        let _ = writeln!(
            out,
            "  {} -> {} regime {}: lag {} F {:.3} p {:.3e} n {} dR2 {:.4}",
            r.source, r.target, r.regime, r.lag, r.f_stat, r.p_value, r.n_obs, r.r2_increment
        );
    }
    Ok(out)
}

fn crisis_or_max(crisis: Option<usize>, labels: &[usize]) -> usize {
    crisis.unwrap_or_else(|| labels.iter().copied().max().unwrap_or(0))
}

fn events_or_default(path: &Option<PathBuf>) -> Result<Vec<EventWindow>> {
    match path {
        Some(p) => load_events(p),
        None => Ok(default_events()),
    }
}

fn cmd_validate(a: &ValidateArgs) -> Result<String> {
    let panel = FactorPanel::read_csv(&a.panel)?;
    let labels = read_labels_for(&a.labels, &panel)?;
    let events = events_or_default(&a.events)?;
    let crisis = crisis_or_max(a.crisis, &labels);
    let vol = volatility_norm(&panel);

    let mut out = String::from("event            detection  lead(days)\n");
    for w in &events {
        let rate = detection_rate(&labels, panel.dates(), w, crisis)
            .map_or_else(|_| "NA".to_string(), |r| format!("{:.1}%", 100.0 * r));
        let lead = lead_time(&labels, panel.dates(), &vol, w, crisis, a.min_run, a.horizon)
            .map_or_else(|| "none".to_string(), |l| l.lead_days.to_string());
        let _ = writeln!(out, "{:<16} {:>9}  {:>10}", w.name, rate, lead);
    }
    let raw = EventSample::RawWindow;
    let masked = EventSample::CrisisDays {
        labels: &labels,
        crisis_index: crisis,
    };
    let (primary, secondary) = match a.mode {
        EventModeArg::Raw => ((raw, "raw window"), (masked, "crisis days")),
        EventModeArg::Crisis => ((masked, "crisis days"), (raw, "raw window")),
    };
    let run = |sample| {
        let config = EventTestConfig {
            lag: a.lag,
            sample,
            ..EventTestConfig::default()
        };
        event_granger_validation(&panel, &events, &config)
    };
    let report = run(primary.0)?;
    write_text(&a.out, &report.to_csv())?;
    let _ = writeln!(out, "\n{} (written to {}):", primary.1, a.out.display());
    out.push_str(&report.to_csv());
    let _ = writeln!(out, "\n{}:", secondary.1);
    out.push_str(&run(secondary.0)?.to_csv());
    Ok(out)
}

fn cmd_backtest(a: &BacktestArgs) -> Result<String> {
    let panel = FactorPanel::read_csv(&a.panel)?;
    let labels = read_labels_for(&a.labels, &panel)?;
    let config = BacktestConfig {
        crisis_index: crisis_or_max(a.crisis, &labels),
        window: a.window,
        start: Some(a.start),
        end: Some(a.end),
        execution: match a.execution {
            ExecutionArg::SameDay => Execution::SameDay,
            ExecutionArg::NextDay => Execution::NextDay,
        },
        ..BacktestConfig::default()
    };
    let report = run_backtest(&panel, &labels, &config)?;
    write_text(&a.out, &(report.to_json() + "\n"))?;
    if let Some(p) = &a.returns {
        write_text(p, &report.returns_csv())?;
    }
    let sharpe = |s: Option<f64>| s.map_or_else(|| "NA".to_string(), |v| format!("{v:.2}"));
    let mut out = format!(
        "{:<14} {:>9} {:>7} {:>9} {:>7}\n",
        "", "annual%", "Sharpe", "MDD%", "active"
    );
    for (name, r) in [("strategy", &report.strategy), ("buy-and-hold", &report.buy_and_hold)] {
        let _ = writeln!(
            out,
            "{:<14} {:>9.2} {:>7} {:>9.2} {:>7}",
            name,
            r.annual_return,
            sharpe(r.sharpe),
            r.max_drawdown,
            r.n_active_days
        );
    }
    Ok(out)
}

/// `date,volatility_norm,regime,event` rows, one per panel day.
pub fn plot_rows(panel: &FactorPanel, labels: &[usize], events: &[EventWindow]) -> String {
    let vol = volatility_norm(panel);
    let mut out = String::from("date,volatility_norm,regime,event\n");
    for ((d, v), l) in panel.dates().iter().zip(&vol).zip(labels) {
        let event = events.iter().find(|w| w.contains(*d)).map_or("", |w| w.name.as_str());
        let _ = writeln!(out, "{d},{v:.6},{l},{event}");
    }
    out
}

fn cmd_plotdata(a: &PlotdataArgs) -> Result<String> {
    let panel = FactorPanel::read_csv(&a.panel)?;
    let labels = read_labels_for(&a.labels, &panel)?;
    let events = events_or_default(&a.events)?;
    write_text(&a.out, &plot_rows(&panel, &labels, &events))?;
    Ok(format!("{} rows written to {}\n", panel.n_rows(), a.out.display()))
}

fn fmt_test(r: &std::result::Result<crate::granger::FTest, String>) -> String {
    match r {
        Ok(t) => format!("{},{:.6},{:.5e},{}", t.lag, t.f_stat, t.p_value, t.n_obs),
        Err(_) => "NA,NA,NA,NA".into(),
    }
}

fn cmd_robustness(a: &RobustnessArgs) -> Result<String> {
    let panel = FactorPanel::read_csv(&a.panel)?;
    let labels = read_labels_for(&a.labels, &panel)?;
    let crisis = crisis_or_max(a.crisis, &labels);
    let hml = panel
        .factor_index("HML")
        .ok_or_else(|| Error::MissingColumn("HML".into()))?;
    let smb = panel
        .factor_index("SMB")
        .ok_or_else(|| Error::MissingColumn("SMB".into()))?;
    std::fs::create_dir_all(&a.out).map_err(|e| Error::io(&a.out, e))?;
    let y = panel.column(smb);
    let x = panel.column(hml);
    let mut out = String::new();

    let thr = threshold_regimes(&panel, a.window, DEFAULT_RV_QUANTILE)?;
    let thr_cells = pairwise_regime_matrix(&panel, &thr, a.lmax, a.alpha)?;
    write_text(&a.out.join("threshold.csv"), &cells_to_csv(&thr_cells))?;
    let _ = writeln!(
        out,
        "threshold crisis days: {}",
        thr.iter().filter(|&&l| l == 1).count()
    );

    let sweep = lag_sweep(&y, &x, |lag| regime_lag_mask(&labels, crisis, lag), &[5, 10, 15, 20])?;
    let mut csv = String::from("lag_max,lag,f_stat,p_value,n_obs\n");
    for row in &sweep {
        let _ = writeln!(csv, "{},{}", row.lag_max, fmt_test(&row.outcome));
    }
    write_text(&a.out.join("lag_sweep.csv"), &csv)?;

    let split = subsample_split(&panel, &labels, a.split, a.lmax, a.alpha)?;
    let mut csv = String::from("side,source,target,regime,lag,f_stat,p_value,n_obs,r2_increment,significant\n");
    for (side, s) in [("before", &split.before), ("after", &split.after)] {
        match &s.cells {
            Ok(cells) => {
                for line in cells_to_csv(cells).lines().skip(1) {
                    let _ = writeln!(csv, "{side},{line}");
                }
            }
            Err(e) => {
                let _ = writeln!(out, "subsample {side}: {e}");
            }
        }
    }
    write_text(&a.out.join("subsample.csv"), &csv)?;

    let tconf = TransitionConfig {
        crisis_index: crisis,
        ..TransitionConfig::default()
    };
    let tr = transition_window_analysis(&panel, &labels, &tconf)?;
    let mut csv = String::from("transition,side,count,lag,f_stat,p_value,n_obs\n");
    for (kind, n, before, after) in [
        ("entry", tr.entries.len(), &tr.entry_before, &tr.entry_after),
        ("exit", tr.exits.len(), &tr.exit_before, &tr.exit_after),
    ] {
        let _ = writeln!(csv, "{kind},before,{n},{}", fmt_test(before));
        let _ = writeln!(csv, "{kind},after,{n},{}", fmt_test(after));
    }
    write_text(&a.out.join("transitions.csv"), &csv)?;

    let weekly = weekly_analysis(&panel, &labels, a.lmax, a.alpha)?;
    write_text(&a.out.join("weekly.csv"), &cells_to_csv(&weekly.cells))?;
    let _ = writeln!(
        out,
        "weekly rows {}, crisis weeks {}",
        weekly.panel.n_rows(),
        weekly.labels.iter().filter(|&&l| l == crisis).count()
    );
    let _ = writeln!(out, "tables written to {}", a.out.display());
    Ok(out)
}

fn cmd_simulate(a: &SimulateArgs) -> Result<String> {
    if a.d == 0 {
        return Err(Error::InvalidArgument("--d must be at least 1".into()));
    }
    let mut params = three_regime_params(a.d);
    params.family = a.family.into();
    if params.family == Family::Gaussian {
        params.dof = vec![f64::INFINITY; 3];
    }
    let mut spec = SyntheticSpec::new(params, a.t, a.seed);
    // six columns get the ingested names so every downstream command runs on them
    if a.d == FF5_COLUMNS.len() + MOMENTUM_COLUMNS.len() {
        spec.factor_names = FF5_COLUMNS
            .iter()
            .chain(&MOMENTUM_COLUMNS)
            .map(|s| s.to_string())
            .collect();
    }
    let (panel, labels) = generate(&spec)?;
    panel.write_csv(&a.out)?;
    write_labels(&a.labels, panel.dates(), &labels)?;
    Ok(format!(
        "T = {} d = {} dates {}\n",
        panel.n_rows(),
        panel.n_factors(),
        span(&panel)
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn k_range_parsing() {
        assert_eq!(parse_k_range("2:4"), Ok((2, 4)));
        assert!(parse_k_range("4:2").is_err());
        assert!(parse_k_range("0:2").is_err());
        assert!(parse_k_range("3").is_err());
    }
}
