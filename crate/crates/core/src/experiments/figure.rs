//! Data files behind the resonance figures: `spectrum.csv` and `curves.csv`
//! per sub-figure.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::io::write_csv;
use super::scan::{finalize, record, scan_spectrum, ScanOptions, SpectrumRecord};
use crate::error::{Error, Result};
use crate::predictors::{free_region_bound, glancing_band};
use crate::rootfind::{newton_refine, InitKind};
use crate::secular::{window_for, PotentialSpec, SecularFn};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FigureId {
    Fig2,
    Fig4,
    Fig5,
    Fig6,
}

impl FigureId {
    pub fn as_str(&self) -> &'static str {
        match self {
            FigureId::Fig2 => "fig2",
            FigureId::Fig4 => "fig4",
            FigureId::Fig5 => "fig5",
            FigureId::Fig6 => "fig6",
        }
    }
}

impl FromStr for FigureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig2" => Ok(FigureId::Fig2),
            "fig4" => Ok(FigureId::Fig4),
            "fig5" => Ok(FigureId::Fig5),
            "fig6" => Ok(FigureId::Fig6),
            _ => Err(Error::InvalidParameter(format!("unknown figure `{s}` (fig2, fig4, fig5, fig6)"))),
        }
    }
}

pub const FIG4_ALPHAS: [f64; 4] = [0.0, 2.0 / 3.0, 0.9, 1.0];
pub const FIG56_ALPHAS: [f64; 5] = [5.0 / 6.0, 0.8433, 0.8733, 0.9333, 1.0];
/// Desk-scale real range for the high-frequency spectra (the bands are
/// already resolved at 10³).
pub const FIG5_RE: (f64, f64) = (2980.0, 3000.0);
/// Only near-glancing modes are scanned there.
pub const FIG5_N_FRACTION: f64 = 0.9;
pub const FIG6_CENTERS: [f64; 10] = [100.0, 150.0, 220.0, 330.0, 500.0, 750.0, 1100.0, 1600.0, 2200.0, 3000.0];
pub const FIG6_BANDS: usize = 3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub curve: String,
    pub re_lambda: f64,
    pub neg_im_lambda: f64,
}

/// Log-bound and first band curves on a log-spaced grid of `points` real parts.
pub fn curves(pot: PotentialSpec, re_lo: f64, re_hi: f64, points: usize, bands: usize) -> Result<Vec<CurvePoint>> {
    let lo = re_lo.max(5.0);
    let mut out = Vec::new();
    for i in 0..points {
        let t = i as f64 / (points.max(2) - 1) as f64;
        let re = lo * (re_hi / lo).powf(t);
        let b = free_region_bound(pot, re)?;
        out.push(CurvePoint { curve: "log_bound".into(), re_lambda: re, neg_im_lambda: b.log_bound });
        for (k, v) in b.band_bounds.iter().take(bands).enumerate() {
            out.push(CurvePoint { curve: format!("band_{}", k + 1), re_lambda: re, neg_im_lambda: *v });
        }
    }
    out.sort_by(|a, b| a.curve.cmp(&b.curve).then(a.re_lambda.total_cmp(&b.re_lambda)));
    Ok(out)
}

/// Header metadata for a data file; `run` names the producing pipeline.
pub fn run_meta(run: &str, pot: PotentialSpec, re: (f64, f64), n: (u32, u32), opts: ScanOptions, desk_scaled: bool) -> Value {
    json!({
        "run": run,
        "alpha": pot.alpha,
        "v0": pot.v0,
        "re_range": [re.0, re.1],
        "n_range": [n.0, n.1],
        "window_c": opts.window_c,
        "depth_m": opts.depth_m,
        "version": env!("CARGO_PKG_VERSION"),
        "convention": "lambda unrescaled (lambda = z/h, h = 1/window center); only n >= 0 stored, multiplicity 2 for n >= 1",
        "certificates": "empirical",
        "desk_scaled": desk_scaled,
    })
}

fn write_pair(
    dir: &Path,
    meta: &Value,
    spectrum: &[SpectrumRecord],
    curves: &[CurvePoint],
    written: &mut Vec<PathBuf>,
) -> Result<()> {
    let s = dir.join("spectrum.csv");
    let c = dir.join("curves.csv");
    write_csv(&s, meta, spectrum)?;
    write_csv(&c, meta, curves)?;
    written.push(s);
    written.push(c);
    Ok(())
}

fn alpha_dir(root: &Path, alpha: f64) -> PathBuf {
    root.join(format!("alpha_{alpha:.4}"))
}

/// Band-tracking points for the log-log plot: glancing predictions refined by
/// Newton over a range of frequencies.
pub fn band_track(pot: PotentialSpec, centers: &[f64], bands: usize) -> Result<Vec<SpectrumRecord>> {
    let mut out = Vec::new();
    for &center in centers {
        let window = window_for(center, pot, 1.0, 2.0)?;
        // The band-1 root of mode n sits near n + 1.86 n^{1/3}.
        let n = (center - 1.86 * center.powf(1.0 / 3.0)).round() as u32;
        let f = SecularFn { n: n as i64, v_eff: window.v_eff };
        for band in 1..=bands {
            let p = glancing_band(pot, &window, n, band)?;
            match newton_refine(&f, p.lambda0, 1e-12, 100, (3.0 * p.expected_error).max(0.5)) {
                Ok(z) => out.push(record(pot, &f, z, InitKind::GlancingBand)?),
                Err(e) => log::warn!("band {band} at n = {n}: {e}"),
            }
        }
    }
    Ok(finalize(out))
}

/// Writes the data files for one figure under `out_dir/<fig>/`.
pub fn figure_pipeline(fig: FigureId, out_dir: &Path, opts: ScanOptions) -> Result<Vec<PathBuf>> {
    let root = out_dir.join(fig.as_str());
    let mut written = Vec::new();
    match fig {
        FigureId::Fig2 => {
            let pot = PotentialSpec::new(1.0, 0.0)?;
            let (re, n) = ((5.0, 200.0), (0, 200));
            let spec = scan_spectrum(pot, re, n, opts)?;
            let cur = curves(pot, re.0, re.1, 100, 0)?;
            write_pair(&root, &run_meta(fig.as_str(), pot, re, n, opts, false), &spec, &cur, &mut written)?;
        }
        FigureId::Fig4 => {
            for alpha in FIG4_ALPHAS {
                let pot = PotentialSpec::new(1.0, alpha)?;
                let (re, n) = ((5.0, 200.0), (0, 200));
                let spec = scan_spectrum(pot, re, n, opts)?;
                let cur = curves(pot, re.0, re.1, 100, 5)?;
                write_pair(&alpha_dir(&root, alpha), &run_meta(fig.as_str(), pot, re, n, opts, false), &spec, &cur, &mut written)?;
            }
        }
        FigureId::Fig5 => {
            for alpha in FIG56_ALPHAS {
                let pot = PotentialSpec::new(1.0, alpha)?;
                let re = FIG5_RE;
                let n = ((FIG5_N_FRACTION * re.0) as u32, (1.2 * re.1) as u32);
                let spec = scan_spectrum(pot, re, n, opts)?;
                let cur = curves(pot, re.0, re.1, 20, 5)?;
                write_pair(&alpha_dir(&root, alpha), &run_meta(fig.as_str(), pot, re, n, opts, true), &spec, &cur, &mut written)?;
            }
        }
        FigureId::Fig6 => {
            for alpha in FIG56_ALPHAS {
                let pot = PotentialSpec::new(1.0, alpha)?;
                let re = (FIG6_CENTERS[0], FIG6_CENTERS[FIG6_CENTERS.len() - 1]);
                let spec = band_track(pot, &FIG6_CENTERS, FIG6_BANDS)?;
                let cur = curves(pot, re.0, re.1, 60, FIG6_BANDS)?;
                let m = run_meta(fig.as_str(), pot, re, (0, 0), opts, true);
                write_pair(&alpha_dir(&root, alpha), &m, &spec, &cur, &mut written)?;
            }
        }
    }
    Ok(written)
}
