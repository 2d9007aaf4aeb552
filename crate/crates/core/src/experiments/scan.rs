//! Spectrum scans: predictor-seeded Newton plus a contour completeness sweep.

use num_complex::Complex64 as C64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::predictors::{
    away_glancing, away_glancing_range, band_condition_residual, glancing_band, normal_lattice,
    PredictedResonance, BAND_COUNT,
};
use crate::rootfind::{
    certification_radius, certify, count_zeros_robust, newton_refine, split_counted, Holomorphic,
    InitKind, Rect,
};
use crate::secular::{window_for, PotentialSpec, SecularFn, Window};

/// Largest real part a scan accepts.
pub const DESK_RE_MAX: f64 = 5000.0;
/// Modes above `ELLIPTIC_CUTOFF·Re λ` carry no resonances near the axis.
pub const ELLIPTIC_CUTOFF: f64 = 1.2;
pub const DEDUP_DISTANCE: f64 = 1e-6;
const NEWTON_TOL: f64 = 1e-12;
const NEWTON_ITER: usize = 100;
const MAX_SWEEP_DEPTH: u32 = 60;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanOptions {
    pub window_c: f64,
    pub depth_m: f64,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self { window_c: 1.0, depth_m: 2.0 }
    }
}

/// One resonance; column order is the CSV schema.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRecord {
    pub n: i64,
    pub re_lambda: f64,
    pub im_lambda: f64,
    pub residual: f64,
    pub certified: bool,
    pub init_kind: String,
    pub band_residual: f64,
    /// 2 for n ≥ 1 (the ±n pair), 1 for n = 0.
    pub multiplicity: u8,
}

impl SpectrumRecord {
    pub fn lambda(&self) -> C64 {
        C64::new(self.re_lambda, self.im_lambda)
    }
}

/// Abutting windows covering `[lo, hi]`.
pub fn tile_windows(pot: PotentialSpec, lo: f64, hi: f64, opts: ScanOptions) -> Result<Vec<Window>> {
    if !(lo > 0.0 && hi > lo && hi <= DESK_RE_MAX) {
        return Err(Error::InvalidParameter(format!(
            "Re range [{lo}, {hi}] must satisfy 0 < lo < hi <= {DESK_RE_MAX}"
        )));
    }
    let mut out = Vec::new();
    let mut x = lo;
    while x < hi {
        // Center whose window starts at x: center − c·center^{1/4} = x.
        let mut center = x.max(5.0);
        for _ in 0..50 {
            center = x + opts.window_c * center.powf(0.25);
        }
        let mut w = window_for(center.max(5.0), pot, opts.window_c, opts.depth_m)?;
        w.re_min = x;
        if w.re_max >= hi {
            w.re_max = hi;
        }
        x = w.re_max;
        out.push(w);
    }
    Ok(out)
}

/// Predictions that apply to mode `n` in `window`.
pub fn seeds(pot: PotentialSpec, window: &Window, n: u32) -> Vec<PredictedResonance> {
    let nh = n as f64 * window.h_eff;
    let mut out = Vec::new();
    if nh <= 0.9 {
        out.extend(normal_lattice(window, n));
    }
    if let Some((lo, hi)) = away_glancing_range(window, n) {
        out.extend((lo..=hi).filter_map(|k| away_glancing(pot, window, n, k).ok()));
    }
    if pot.alpha > 2.0 / 3.0 && (nh - 1.0).abs() <= 0.1 {
        out.extend((1..=BAND_COUNT).filter_map(|b| glancing_band(pot, window, n, b).ok()));
    }
    out
}

fn push_unique(roots: &mut Vec<(C64, InitKind)>, z: C64, kind: InitKind) -> bool {
    if roots.iter().any(|(r, _)| (r - z).norm() <= DEDUP_DISTANCE * (1.0 + z.norm())) {
        return false;
    }
    roots.push((z, kind));
    true
}

/// Finds zeros in `rect` not yet in `roots`, by bisection on the count.
fn sweep<F: Holomorphic + ?Sized>(
    f: &F,
    rect: Rect,
    count: usize,
    roots: &mut Vec<(C64, InitKind)>,
    depth: u32,
) -> Result<()> {
    let inside = roots.iter().filter(|(z, _)| rect.contains(*z)).count();
    if count <= inside {
        if count < inside {
            log::warn!("more known roots ({inside}) than zeros ({count}) near {}", rect.center());
        }
        return Ok(());
    }
    if count == 1 {
        if let Ok(z) = newton_refine(f, rect.center(), NEWTON_TOL, NEWTON_ITER, rect.diameter()) {
            if rect.contains(z) && push_unique(roots, z, InitKind::ContourScan) {
                return Ok(());
            }
        }
    }
    if depth >= MAX_SWEEP_DEPTH {
        return Err(Error::DepthLimit { center: rect.center() });
    }
    let (l, r, cl, cr) = split_counted(f, &rect, count)?;
    sweep(f, l, cl, roots, depth + 1)?;
    sweep(f, r, cr, roots, depth + 1)
}

/// All zeros of `F_n` in `window` (the window's own coupling), certified.
pub fn solve_window(pot: PotentialSpec, window: &Window, n: u32) -> Result<Vec<SpectrumRecord>> {
    let f = SecularFn { n: n as i64, v_eff: window.v_eff };
    let rect = Rect::from(window);
    let mut roots = Vec::new();
    for p in seeds(pot, window, n) {
        let radius = (3.0 * p.expected_error).max(0.5).min(window.width().max(1.0));
        if let Ok(z) = newton_refine(&f, p.lambda0, NEWTON_TOL, NEWTON_ITER, radius) {
            if rect.contains(z) {
                push_unique(&mut roots, z, p.kind.into());
            }
        }
    }
    let (count, used) = count_zeros_robust(&f, &rect)?;
    sweep(&f, used, count, &mut roots, 0)?;
    let mut out = Vec::new();
    for (z, kind) in roots {
        // Half-open in Re so abutting windows do not share roots.
        if !(z.re >= window.re_min && z.re < window.re_max && z.im >= window.im_min && z.im <= window.im_max) {
            continue;
        }
        if z.im > 0.0 {
            log::warn!("discarding zero {z} above the real axis (n = {n})");
            continue;
        }
        out.push(record(pot, &f, z, kind)?);
    }
    Ok(out)
}

/// Builds a record, recomputing residual and certificate at `z`.
pub fn record(pot: PotentialSpec, f: &SecularFn, z: C64, kind: InitKind) -> Result<SpectrumRecord> {
    let (v, d) = f.eval(z)?;
    let residual = v.norm();
    let cert = certify(f, z, certification_radius(z))?;
    let scale = 1.0 + d.norm() * z.norm() * 1e-9;
    Ok(SpectrumRecord {
        n: f.n,
        re_lambda: z.re,
        im_lambda: z.im,
        residual,
        certified: cert.passed && residual <= 1e-9 * scale,
        init_kind: kind.as_str().to_string(),
        band_residual: band_condition_residual(pot, f.n, z),
        multiplicity: if f.n == 0 { 1 } else { 2 },
    })
}

/// [`solve_window`], retrying once on two half-width windows.
fn solve_with_retile(pot: PotentialSpec, window: &Window, n: u32) -> Result<Vec<SpectrumRecord>> {
    match solve_window(pot, window, n) {
        Ok(r) => Ok(r),
        Err(e) => {
            log::warn!("window [{}, {}], n = {n}: {e}; retiling", window.re_min, window.re_max);
            let mid = 0.5 * (window.re_min + window.re_max);
            let left = Window { re_max: mid, ..*window };
            let right = Window { re_min: mid, ..*window };
            let mut out = solve_window(pot, &left, n)?;
            out.extend(solve_window(pot, &right, n)?);
            Ok(out)
        }
    }
}

/// Sorts by (n, Re λ) and drops pairs closer than the dedup distance.
pub fn finalize(mut records: Vec<SpectrumRecord>) -> Vec<SpectrumRecord> {
    records.sort_by(|a, b| a.n.cmp(&b.n).then(a.re_lambda.total_cmp(&b.re_lambda)).then(a.im_lambda.total_cmp(&b.im_lambda)));
    let mut out: Vec<SpectrumRecord> = Vec::with_capacity(records.len());
    for r in records {
        let dup = out.iter().rev().take_while(|q| q.n == r.n && r.re_lambda - q.re_lambda <= DEDUP_DISTANCE * (1.0 + r.re_lambda.abs()))
            .any(|q| (q.lambda() - r.lambda()).norm() <= DEDUP_DISTANCE * (1.0 + r.lambda().norm()));
        if !dup {
            out.push(r);
        }
    }
    out
}

/// Runs `solve` over every (window, n) task in parallel.
pub fn solve_tasks(pot: PotentialSpec, tasks: &[(Window, u32)]) -> Result<Vec<SpectrumRecord>> {
    let parts: Vec<Result<Vec<SpectrumRecord>>> =
        tasks.par_iter().map(|(w, n)| solve_with_retile(pot, w, *n)).collect();
    let mut all = Vec::new();
    for p in parts {
        all.extend(p?);
    }
    Ok(finalize(all))
}

/// Resonances with `Re λ ∈ [lo, hi)` for modes `n_min..=n_max`.
pub fn scan_spectrum(
    pot: PotentialSpec,
    re_range: (f64, f64),
    n_range: (u32, u32),
    opts: ScanOptions,
) -> Result<Vec<SpectrumRecord>> {
    let windows = tile_windows(pot, re_range.0, re_range.1, opts)?;
    let mut tasks = Vec::new();
    for w in &windows {
        let n_top = (ELLIPTIC_CUTOFF * w.re_max).floor() as u32;
        for n in n_range.0..=n_range.1.min(n_top) {
            tasks.push((*w, n));
        }
    }
    log::info!("scan: {} windows, {} tasks", windows.len(), tasks.len());
    solve_tasks(pot, &tasks)
}
