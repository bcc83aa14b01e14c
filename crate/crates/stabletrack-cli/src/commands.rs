//! Argument parsing and subcommand dispatch. Every output file is written
//! atomically (temp file in the target directory, then rename), carries a
//! header row, and serializes floats at full round-trip precision, so
//! repeated runs on the same input are byte-identical.

use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use stabletrack::{
    adaptive_hurst, build_alpha_table, count_extreme, default_tau_grid, estimate_alpha,
    estimate_mu, estimate_sigma, exceedance_curve, fit_static_sigma_mle, garch11_fit,
    gaussianize, structure_function, sweep_fixed_alpha, track,
};

use crate::config::CliConfig;
use crate::series::{load_series, Format, SeriesSpec, Transform};

#[derive(Parser)]
#[command(
    name = "stabletrack",
    version,
    about = "Adaptive alpha-stable parameter tracking for nonstationary series"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    /// One value per line.
    Plain,
    /// Comma-separated with a header row; pick the column with --column.
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum TransformArg {
    None,
    /// Prices to log-returns ln(v_{t+1}/v_t); needs positive values.
    LogReturns,
    /// Running sum (returns to integrated process).
    Cumsum,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Plain => Format::Plain,
            FormatArg::Csv => Format::Csv,
        }
    }
}

impl From<TransformArg> for Transform {
    fn from(t: TransformArg) -> Transform {
        match t {
            TransformArg::None => Transform::None,
            TransformArg::LogReturns => Transform::LogReturns,
            TransformArg::Cumsum => Transform::CumulativeSum,
        }
    }
}

#[derive(Args, Clone)]
struct IoOpts {
    /// Input series file.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
    format: FormatArg,
    /// Column name when --format csv.
    #[arg(long)]
    column: Option<String>,
    #[arg(long, value_enum, default_value_t = TransformArg::None)]
    transform: TransformArg,
    /// JSON configuration; built-in defaults apply when omitted.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Output directory, created if missing.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Accepted for interface stability; current commands draw no randomness.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the adaptive tracker: track.csv (per-tick parameters and scores)
    /// plus summary.json.
    Track {
        #[command(flatten)]
        io: IoOpts,
        /// Write the effective configuration to config.json (and exit if no
        /// --input was given).
        #[arg(long)]
        emit_config: bool,
    },
    /// Evaluate fixed-alpha tracking over a grid: sweep.csv (alpha, mean_loglik).
    Sweep {
        #[command(flatten)]
        io: IoOpts,
        /// Grid as start:end:step or a comma list.
        #[arg(long, default_value = "1.0:2.0:0.05")]
        alphas: String,
    },
    /// Whole-sample moment estimates plus the static sigma MLE: static.json.
    Static {
        #[command(flatten)]
        io: IoOpts,
    },
    /// Fit GARCH(1,1) and report its out-of-sample score: garch.json.
    Garch {
        #[command(flatten)]
        io: IoOpts,
    },
    /// Scaling analysis: zeta.csv, structure.csv, hurst_t.csv, and optionally
    /// gaussianized.csv. The loaded series (after --transform) is treated as
    /// the process; the tracker behind hurst_t runs on its first differences,
    /// so feed returns through --transform cumsum.
    Hurst {
        #[command(flatten)]
        io: IoOpts,
        /// Moment orders, comma-separated.
        #[arg(long, default_value = "0.25,0.5,1.0")]
        qs: String,
        /// Lags, comma-separated, or "auto" for powers of two up to n/10.
        #[arg(long, default_value = "auto")]
        taus: String,
        /// Also write the tail-compensated (gaussianized) differences.
        #[arg(long)]
        gaussianize: bool,
    },
    /// Exceedance curves under tracked normalization: tails.csv, counts.json.
    Tails {
        #[command(flatten)]
        io: IoOpts,
        /// Sigma-multiple thresholds as start:end:step or a comma list.
        #[arg(long, default_value = "1:8:1")]
        ks: String,
        /// Model-curve shapes as start:end:step or a comma list.
        #[arg(long, default_value = "1.5,1.7,1.9,1.95,2.0")]
        alphas: String,
        /// Threshold for the extreme-event count.
        #[arg(long, default_value_t = 10.0)]
        extreme_k: f64,
    },
    /// Build the moment-ratio inversion table: table.csv.
    Table {
        #[command(flatten)]
        io: IoOpts,
    },
}

/// Parses argv and runs one subcommand; returns the process exit status.
/// Failures print a single-line `error: ...` to stderr.
pub fn run_command<I, A>(argv: I) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{}", e);
                return 0;
            }
            let msg = single_line(&e.to_string());
            eprintln!("error: {}", msg.strip_prefix("error: ").unwrap_or(&msg));
            return 2;
        }
    };
    match dispatch(cli.cmd) {
        Ok(()) => 0,
        Err(msg) => {
            eprintln!("error: {}", single_line(&msg));
            1
        }
    }
}

fn single_line(msg: &str) -> String {
    msg.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect::<Vec<_>>()
        .join("; ")
}

fn dispatch(cmd: Cmd) -> Result<(), String> {
    match cmd {
        Cmd::Track { io, emit_config } => cmd_track(&io, emit_config),
        Cmd::Sweep { io, alphas } => cmd_sweep(&io, &alphas),
        Cmd::Static { io } => cmd_static(&io),
        Cmd::Garch { io } => cmd_garch(&io),
        Cmd::Hurst { io, qs, taus, gaussianize } => cmd_hurst(&io, &qs, &taus, gaussianize),
        Cmd::Tails { io, ks, alphas, extreme_k } => cmd_tails(&io, &ks, &alphas, extreme_k),
        Cmd::Table { io } => cmd_table(&io),
    }
}

fn lib(e: stabletrack::Error) -> String {
    e.to_string()
}

fn effective_config(io: &IoOpts) -> Result<CliConfig, String> {
    match &io.config {
        Some(p) => {
            let text =
                fs::read_to_string(p).map_err(|e| format!("{}: {}", p.display(), e))?;
            CliConfig::from_json(&text)
        }
        None => Ok(CliConfig::default()),
    }
}

fn load_input(io: &IoOpts) -> Result<Vec<f64>, String> {
    let path = io.input.clone().ok_or("missing --input")?;
    load_series(&SeriesSpec {
        path,
        format: io.format.into(),
        column: io.column.clone(),
        transform: io.transform.into(),
    })
}

fn write_atomic(dir: &Path, name: &str, body: &[u8]) -> Result<(), String> {
    fs::create_dir_all(dir).map_err(|e| format!("{}: {}", dir.display(), e))?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)
        .map_err(|e| format!("{}: {}", dir.display(), e))?;
    tmp.write_all(body)
        .and_then(|_| tmp.flush())
        .map_err(|e| format!("{}: {}", dir.display(), e))?;
    let dest = dir.join(name);
    tmp.persist(&dest)
        .map_err(|e| format!("{}: {}", dest.display(), e.error))?;
    Ok(())
}

fn write_json<S: Serialize>(dir: &Path, name: &str, value: &S) -> Result<(), String> {
    let mut body = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    body.push('\n');
    write_atomic(dir, name, body.as_bytes())
}

/// "start:end:step" inclusive grid or a comma-separated list.
fn parse_reals(spec: &str) -> Result<Vec<f64>, String> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err("empty grid".into());
    }
    let num = |t: &str| -> Result<f64, String> {
        t.trim()
            .parse::<f64>()
            .map_err(|_| format!("not a number: \"{}\"", t.trim()))
    };
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("grid \"{}\" must be start:end:step", spec));
        }
        let (start, end, step) = (num(parts[0])?, num(parts[1])?, num(parts[2])?);
        if !step.is_finite() || step <= 0.0 || end < start {
            return Err(format!("grid \"{}\" must have end >= start and step > 0", spec));
        }
        if (end - start) / step > 100_000.0 {
            return Err(format!("grid \"{}\" has too many points", spec));
        }
        let mut out = Vec::new();
        let mut i = 0u64;
        loop {
            let x = start + i as f64 * step;
            if x > end + 1e-9 * step {
                break;
            }
            out.push(x);
            i += 1;
        }
        Ok(out)
    } else {
        spec.split(',').map(num).collect()
    }
}

fn parse_taus(spec: &str) -> Result<Vec<usize>, String> {
    spec.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("not a lag: \"{}\"", t.trim()))
        })
        .collect()
}

#[derive(Serialize)]
struct ThetaJson {
    mu: f64,
    sigma: f64,
    alpha: f64,
    beta: f64,
}

#[derive(Serialize)]
struct TrackSummary {
    n: usize,
    warmup: usize,
    mean_loglik: f64,
    final_theta: ThetaJson,
}

fn cmd_track(io: &IoOpts, emit_config: bool) -> Result<(), String> {
    let cfg = effective_config(io)?;
    if emit_config {
        write_atomic(&io.out, "config.json", cfg.to_json().as_bytes())?;
        if io.input.is_none() {
            return Ok(());
        }
    }
    let xs = load_input(io)?;
    let tcfg = cfg.to_tracker()?;
    let tr = track(&xs, &tcfg).map_err(lib)?;
    let mut buf = Vec::new();
    tr.write_csv(&xs, &mut buf).map_err(lib)?;
    write_atomic(&io.out, "track.csv", &buf)?;
    let last = tr.thetas.last().expect("track is non-empty");
    write_json(
        &io.out,
        "summary.json",
        &TrackSummary {
            n: xs.len(),
            warmup: tr.start,
            mean_loglik: tr.mean_loglik,
            final_theta: ThetaJson {
                mu: last.mu,
                sigma: last.sigma,
                alpha: last.alpha,
                beta: last.beta,
            },
        },
    )
}

fn cmd_sweep(io: &IoOpts, alphas: &str) -> Result<(), String> {
    let xs = load_input(io)?;
    let tcfg = effective_config(io)?.to_tracker()?;
    let grid = parse_reals(alphas)?;
    let rows = sweep_fixed_alpha(&xs, &grid, &tcfg).map_err(lib)?;
    let mut buf = String::from("alpha,mean_loglik\n");
    for (a, ll) in rows {
        buf.push_str(&format!("{:.17e},{:.17e}\n", a, ll));
    }
    write_atomic(&io.out, "sweep.csv", buf.as_bytes())
}

#[derive(Serialize)]
struct MleJson {
    sigma: f64,
    mean_loglik: f64,
}

#[derive(Serialize)]
struct StaticSummary {
    n: usize,
    mu: f64,
    alpha: f64,
    sigma: f64,
    static_mle: MleJson,
}

fn cmd_static(io: &IoOpts) -> Result<(), String> {
    let xs = load_input(io)?;
    let cfg = effective_config(io)?;
    let table = build_alpha_table(cfg.p1, cfg.p2, cfg.alpha_min, cfg.alpha_max, cfg.alpha_step)
        .map_err(|e| format!("config: {}", e))?;
    let mu = estimate_mu(&xs).map_err(lib)?;
    let alpha = estimate_alpha(&xs, mu, &table).map_err(lib)?;
    let sigma = estimate_sigma(&xs, mu, alpha, cfg.p_sigma).map_err(lib)?;
    let (mle_sigma, mle_ll) = fit_static_sigma_mle(&xs, alpha, cfg.beta).map_err(lib)?;
    write_json(
        &io.out,
        "static.json",
        &StaticSummary {
            n: xs.len(),
            mu,
            alpha,
            sigma,
            static_mle: MleJson { sigma: mle_sigma, mean_loglik: mle_ll },
        },
    )
}

#[derive(Serialize)]
struct GarchSummary {
    model: &'static str,
    omega: f64,
    a: f64,
    b: f64,
    mean_loglik: f64,
    converged: bool,
    n: usize,
}

fn cmd_garch(io: &IoOpts) -> Result<(), String> {
    let xs = load_input(io)?;
    let fit = garch11_fit(&xs).map_err(lib)?;
    write_json(
        &io.out,
        "garch.json",
        &GarchSummary {
            model: "garch11",
            omega: fit.params.omega,
            a: fit.params.a,
            b: fit.params.b,
            mean_loglik: fit.mean_loglik,
            converged: fit.converged,
            n: xs.len(),
        },
    )
}

fn cmd_hurst(io: &IoOpts, qs: &str, taus: &str, want_gaussianized: bool) -> Result<(), String> {
    let process = load_input(io)?;
    let qs = parse_reals(qs)?;
    let taus = if taus.trim() == "auto" {
        default_tau_grid(process.len())
    } else {
        parse_taus(taus)?
    };
    let est = structure_function(&process, &qs, &taus).map_err(lib)?;
    let mut buf = Vec::new();
    est.write_zeta_csv(&mut buf).map_err(|e| e.to_string())?;
    write_atomic(&io.out, "zeta.csv", &buf)?;
    buf.clear();
    est.write_structure_csv(&mut buf).map_err(|e| e.to_string())?;
    write_atomic(&io.out, "structure.csv", &buf)?;

    let diffs: Vec<f64> = process.windows(2).map(|w| w[1] - w[0]).collect();
    let tcfg = effective_config(io)?.to_tracker()?;
    let tr = track(&diffs, &tcfg).map_err(lib)?;
    let q_min = qs.iter().cloned().fold(f64::INFINITY, f64::min);
    let hs = adaptive_hurst(&tr, q_min).map_err(lib)?;
    let mut text = String::from("t,h\n");
    for (i, h) in hs.iter().enumerate() {
        text.push_str(&format!("{},{:.17e}\n", tr.start + i, h));
    }
    write_atomic(&io.out, "hurst_t.csv", text.as_bytes())?;

    if want_gaussianized {
        let gs = gaussianize(&diffs, &tr).map_err(lib)?;
        let mut text = String::from("t,value\n");
        for (i, g) in gs.iter().enumerate() {
            text.push_str(&format!("{},{:.17e}\n", tr.start + i, g));
        }
        write_atomic(&io.out, "gaussianized.csv", text.as_bytes())?;
    }
    Ok(())
}

#[derive(Serialize)]
struct CountSummary {
    k: f64,
    left: usize,
    right: usize,
    scored: usize,
}

fn cmd_tails(io: &IoOpts, ks: &str, alphas: &str, extreme_k: f64) -> Result<(), String> {
    let xs = load_input(io)?;
    let tcfg = effective_config(io)?.to_tracker()?;
    let tr = track(&xs, &tcfg).map_err(lib)?;
    let ks = parse_reals(ks)?;
    let alphas = parse_reals(alphas)?;
    let curve = exceedance_curve(&xs, &tr, &ks, &alphas).map_err(lib)?;
    let mut buf = Vec::new();
    curve.write_csv(&mut buf).map_err(|e| e.to_string())?;
    write_atomic(&io.out, "tails.csv", &buf)?;
    let (left, right) = count_extreme(&xs, &tr, extreme_k).map_err(lib)?;
    write_json(
        &io.out,
        "counts.json",
        &CountSummary { k: extreme_k, left, right, scored: tr.len() },
    )
}

fn cmd_table(io: &IoOpts) -> Result<(), String> {
    let cfg = effective_config(io)?;
    let table = build_alpha_table(cfg.p1, cfg.p2, cfg.alpha_min, cfg.alpha_max, cfg.alpha_step)
        .map_err(|e| format!("config: {}", e))?;
    let mut buf = Vec::new();
    table.to_csv(&mut buf).map_err(|e| e.to_string())?;
    write_atomic(&io.out, "table.csv", &buf)
}
