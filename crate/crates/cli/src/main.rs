//! `leaky-disk`: resonance scans, predictions, counting runs, figure data and
//! free-region checks.
//!
//! Exit codes: 0 on success, 1 on bad input, 2 when `verify` finds violations,
//! 3 on a numeric failure inside the solver.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64 as C64;
use serde_json::{json, Value};

use leaky_disk::experiments::{
    count_report, figure_pipeline, read_csv, run_meta, scan_spectrum, seeds, verify_free_regions, write_csv,
    FigureId, RunConfig, SpectrumRecord, ELLIPTIC_CUTOFF,
};
use leaky_disk::langer::zeta_of;
use leaky_disk::predictors::PredictionKind;
use leaky_disk::secular::window_for;
use leaky_disk::specfun::{airy_eval, bessel_eval_signed};
use leaky_disk::Error;

#[derive(Parser, Debug)]
#[command(name = "leaky-disk", version, about = "Resonances of a delta-shell potential on the unit disk")]
struct Cli {
    #[command(flatten)]
    run: RunArgs,
    #[command(subcommand)]
    command: Command,
}

/// Run parameters. Flags override values read from `--config`.
#[derive(Args, Debug, Default)]
struct RunArgs {
    /// Flat `key = value` config file.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Coupling exponent in V = h^{-alpha} V0.
    #[arg(long, global = true)]
    alpha: Option<f64>,
    #[arg(long, global = true)]
    v0: Option<f64>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    re_min: Option<f64>,
    #[arg(long, global = true)]
    re_max: Option<f64>,
    #[arg(long, global = true)]
    n_max: Option<u32>,
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

impl RunArgs {
    fn resolve(&self) -> anyhow::Result<RunConfig> {
        let mut cfg = match &self.config {
            Some(p) => RunConfig::from_file(p).with_context(|| format!("reading {}", p.display()))?,
            None => RunConfig::default(),
        };
        self.overlay(&mut cfg);
        Ok(cfg)
    }

    fn overlay(&self, cfg: &mut RunConfig) {
        if let Some(v) = self.alpha {
            cfg.alpha = v;
        }
        if let Some(v) = self.v0 {
            cfg.v0 = v;
        }
        if let Some(v) = self.re_min {
            cfg.re_min = v;
        }
        if let Some(v) = self.re_max {
            cfg.re_max = v;
        }
        if let Some(v) = self.n_max {
            cfg.n_max = v;
        }
        if let Some(v) = &self.out {
            cfg.out = v.clone();
        }
        if let Some(v) = self.threads {
            cfg.threads = v;
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certified resonances in [re-min, re-max) for modes n-min..=n-max; writes spectrum.csv.
    Scan {
        #[arg(long, default_value_t = 0)]
        n_min: u32,
    },
    /// Asymptotic predictions for the window around CENTER, one JSON object per line.
    Predict {
        #[arg(long)]
        center: f64,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Single mode; by default every mode below the elliptic cutoff.
        #[arg(long)]
        n: Option<u32>,
    },
    /// Resonance counts in shrinking boxes and the fitted growth exponent; writes count.json.
    Count {
        /// Semiclassical parameters h.
        #[arg(long, value_delimiter = ',', default_values_t = [0.02, 0.01, 0.005])]
        h: Vec<f64>,
        /// Relative half-width of the box around Re λ = 1/h.
        #[arg(long, default_value_t = 0.05)]
        eps: f64,
        /// Box depth factor in Im λ ≥ −M log(1/h).
        #[arg(long, default_value_t = 2.0)]
        m: f64,
    },
    /// Data files for one figure (fig2, fig4, fig5, fig6).
    Figure {
        #[arg(value_parser = parse_figure)]
        id: FigureId,
    },
    /// Checks a spectrum against the resonance-free regions; exits 2 on violations.
    Verify {
        /// Spectrum CSV; the run parameters are scanned afresh when omitted.
        #[arg(long, value_name = "CSV")]
        input: Option<PathBuf>,
    },
    /// Special-function diagnostics.
    Specfun {
        #[command(subcommand)]
        action: SpecfunAction,
    },
}

#[derive(Subcommand, Debug)]
enum SpecfunAction {
    /// Prints value, derivative, regime and Wronskian residual as one JSON line.
    Eval {
        #[arg(long, value_enum)]
        kind: FunctionKind,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        n: i64,
        /// Complex argument `RE,IM`.
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: C64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    Normal,
    Band,
    Away,
}

impl From<KindArg> for PredictionKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Normal => PredictionKind::Normal,
            KindArg::Band => PredictionKind::GlancingBand,
            KindArg::Away => PredictionKind::AwayGlancing,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FunctionKind {
    #[value(name = "J")]
    J,
    #[value(name = "H1")]
    H1,
    #[value(name = "Ai")]
    Ai,
    #[value(name = "Am")]
    Am,
    #[value(name = "zeta")]
    Zeta,
}

fn parse_figure(s: &str) -> Result<FigureId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_complex(s: &str) -> Result<C64, String> {
    let (re, im) = s.split_once(',').unwrap_or((s, "0"));
    let num = |t: &str| t.trim().parse::<f64>().map_err(|_| format!("bad number `{t}` in `{s}`"));
    Ok(C64::new(num(re)?, num(im)?))
}

/// Outcome of a command that ran to completion.
enum Outcome {
    Ok,
    Violations,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Violations) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.chain().find_map(|c| c.downcast_ref::<Error>()) {
        Some(Error::InvalidParameter(_) | Error::Io(_)) | None => 1,
        Some(_) => 3,
    }
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    let cfg = cli.run.resolve()?;
    if cfg.threads > 0 {
        rayon::ThreadPoolBuilder::new().num_threads(cfg.threads).build_global()?;
    }
    match cli.command {
        Command::Scan { n_min } => {
            let path = cfg.out.join("spectrum.csv");
            let spectrum = scan(&cfg, n_min, &path)?;
            let uncertified = spectrum.iter().filter(|r| !r.certified).count();
            println!(
                "{}",
                json!({ "path": path, "records": spectrum.len(), "uncertified": uncertified })
            );
        }
        Command::Predict { center, kind, n } => predict(&cfg, center, kind.into(), n)?,
        Command::Count { h, eps, m } => {
            let (report, _) = count_report(cfg.potential()?, &h, eps, m)?;
            let text = serde_json::to_string(&report)?;
            fs::create_dir_all(&cfg.out)?;
            fs::write(cfg.out.join("count.json"), format!("{text}\n"))?;
            println!("{text}");
        }
        Command::Figure { id } => {
            for p in figure_pipeline(id, &cfg.out, cfg.scan_options())? {
                println!("{}", p.display());
            }
        }
        Command::Verify { input } => return verify(&cli.run, cfg, input.as_deref()),
        Command::Specfun { action: SpecfunAction::Eval { kind, n, z } } => {
            println!("{}", eval(kind, n, z)?);
        }
    }
    Ok(Outcome::Ok)
}

fn scan(cfg: &RunConfig, n_min: u32, path: &Path) -> anyhow::Result<Vec<SpectrumRecord>> {
    let pot = cfg.potential()?;
    let re = (cfg.re_min, cfg.re_max);
    let n = (n_min, cfg.n_max);
    let spectrum = scan_spectrum(pot, re, n, cfg.scan_options())?;
    write_csv(path, &run_meta("scan", pot, re, n, cfg.scan_options(), false), &spectrum)?;
    Ok(spectrum)
}

fn predict(cfg: &RunConfig, center: f64, kind: PredictionKind, n: Option<u32>) -> anyhow::Result<()> {
    let window = window_for(center, cfg.potential()?, cfg.window_c, cfg.depth_m)?;
    let modes = match n {
        Some(n) => n..=n,
        None => 0..=(ELLIPTIC_CUTOFF * window.re_max).floor() as u32,
    };
    for n in modes {
        for p in seeds(cfg.potential()?, &window, n).into_iter().filter(|p| p.kind == kind) {
            println!("{}", serde_json::to_string(&p)?);
        }
    }
    Ok(())
}

fn verify(args: &RunArgs, mut cfg: RunConfig, input: Option<&Path>) -> anyhow::Result<Outcome> {
    let spectrum = match input {
        Some(path) => {
            let (meta, rows) = read_csv::<SpectrumRecord>(path)?;
            // File parameters win over defaults; explicit flags win over both.
            for key in ["alpha", "v0"] {
                if let Some(v) = meta.get(key).and_then(Value::as_f64) {
                    cfg.set(key, &v.to_string()).map_err(|e| anyhow!(e))?;
                }
            }
            args.overlay(&mut cfg);
            rows
        }
        None => scan(&cfg, 0, &cfg.out.join("spectrum.csv"))?,
    };
    let violations = verify_free_regions(&spectrum, cfg.potential()?);
    for v in &violations {
        println!("{}", serde_json::to_string(v)?);
    }
    eprintln!("{} records checked, {} violations", spectrum.len(), violations.len());
    Ok(if violations.is_empty() { Outcome::Ok } else { Outcome::Violations })
}

fn eval(kind: FunctionKind, n: i64, z: C64) -> anyhow::Result<Value> {
    let row = match kind {
        FunctionKind::J | FunctionKind::H1 => {
            let b = bessel_eval_signed(n, z)?;
            let (value, derivative) = match kind {
                FunctionKind::J => (b.j_value(), b.j_prime_value()),
                _ => (b.h1_value(), b.h1_prime_value()),
            };
            json!({
                "value": value,
                "derivative": derivative,
                "regime": b.regime,
                "log_scale": b.log_scale,
                "wronskian_residual": b.wronskian_relative(),
            })
        }
        FunctionKind::Ai | FunctionKind::Am => {
            let a = airy_eval(z)?;
            let (value, derivative) = match kind {
                FunctionKind::Ai => (a.ai, a.ai_prime),
                _ => (a.a_minus, a.a_minus_prime),
            };
            json!({
                "value": value,
                "derivative": derivative,
                "regime": a.regime,
                "accuracy_warning": a.accuracy_warning,
                "wronskian_residual": a.wronskian_residual().norm(),
            })
        }
        FunctionKind::Zeta => {
            let v = zeta_of(z)?;
            json!({
                "value": v.zeta,
                "derivative": v.dzeta_dz,
                "regime": v.branch,
                "ode_residual": v.ode_residual().norm(),
            })
        }
    };
    let mut row = row;
    row["kind"] = json!(format!("{kind:?}"));
    row["n"] = json!(n);
    row["z"] = json!(z);
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_arguments() {
        assert_eq!(parse_complex("1.5,-2").unwrap(), C64::new(1.5, -2.0));
        assert_eq!(parse_complex("3").unwrap(), C64::new(3.0, 0.0));
        assert!(parse_complex("a,b").is_err());
    }

    #[test]
    fn flags_override_config() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.cfg");
        fs::write(&path, "alpha = 0.5\nv0 = 2\n").unwrap();
        let args = RunArgs { config: Some(path), v0: Some(3.0), ..Default::default() };
        let cfg = args.resolve().unwrap();
        assert_eq!((cfg.alpha, cfg.v0), (0.5, 3.0));
    }

    #[test]
    fn numeric_errors_map_to_three() {
        let e = anyhow::Error::from(Error::Divergence { start: C64::new(1.0, 0.0) });
        assert_eq!(exit_code(&e), 3);
        assert_eq!(exit_code(&anyhow::Error::from(Error::InvalidParameter("x".into()))), 1);
        assert_eq!(exit_code(&anyhow!("plain")), 1);
    }

    #[test]
    fn cli_shape() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
