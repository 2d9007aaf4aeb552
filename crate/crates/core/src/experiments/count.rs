//! Resonance counts in the box `Re z ∈ [1−ε, 1+ε]`, `Im z ∈ [−M h log h^{−1}, 0]`.

use serde::{Deserialize, Serialize};

use super::scan::{solve_tasks, SpectrumRecord};
use crate::error::{Error, Result};
use crate::secular::{PotentialSpec, Window};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountEntry {
    pub h: f64,
    /// Certified roots counted with multiplicity.
    pub count: usize,
    pub uncertified: usize,
    pub records: Vec<SpectrumRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountReport {
    pub h_values: Vec<f64>,
    pub counts: Vec<usize>,
    /// Least-squares slope of log N against log h^{−1}.
    pub fitted_slope: f64,
    /// RMS residual of that fit.
    pub fit_residual: f64,
    pub box_params: (f64, f64),
    /// Every (n, box) pair gets a full contour sweep.
    pub completeness: String,
}

/// Unrescaled box `Re λ ∈ [(1−ε)/h, (1+ε)/h]`, `Im λ ∈ [−M log h^{−1}, 0]`.
pub fn count_box(pot: PotentialSpec, h: f64, eps: f64, m: f64) -> Window {
    let inv = 1.0 / h;
    Window {
        re_min: (1.0 - eps) * inv,
        re_max: (1.0 + eps) * inv,
        im_min: -m * inv.ln(),
        im_max: 0.0,
        v_eff: pot.v_eff(inv),
        h_eff: h,
    }
}

pub fn count_in_box(pot: PotentialSpec, h: f64, eps: f64, m: f64) -> Result<CountEntry> {
    if !(h > 0.0 && 1.0 / h <= 400.0 && 1.0 / h >= 5.0) {
        return Err(Error::InvalidParameter(format!("count_in_box needs 5 <= 1/h <= 400, got h = {h}")));
    }
    if !(eps > 0.0 && eps < 1.0 && m > 0.0) {
        return Err(Error::InvalidParameter(format!("bad box parameters eps = {eps}, M = {m}")));
    }
    let window = count_box(pot, h, eps, m);
    let n_top = ((1.0 + eps) / h).floor() as u32;
    let tasks: Vec<_> = (0..=n_top).map(|n| (window, n)).collect();
    let records = solve_tasks(pot, &tasks)?;
    let count = records.iter().filter(|r| r.certified).map(|r| r.multiplicity as usize).sum();
    let uncertified = records.iter().filter(|r| !r.certified).count();
    Ok(CountEntry { h, count, uncertified, records })
}

/// Least-squares line through `(x, y)`: `(slope, rms residual)`.
pub fn fit_slope(x: &[f64], y: &[f64]) -> (f64, f64) {
    let k = x.len() as f64;
    let mx = x.iter().sum::<f64>() / k;
    let my = y.iter().sum::<f64>() / k;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    let slope = sxy / sxx;
    let rss: f64 = x.iter().zip(y).map(|(a, b)| (b - my - slope * (a - mx)).powi(2)).sum();
    (slope, (rss / k).sqrt())
}

pub fn count_report(pot: PotentialSpec, h_values: &[f64], eps: f64, m: f64) -> Result<(CountReport, Vec<CountEntry>)> {
    if h_values.len() < 2 {
        return Err(Error::InvalidParameter("count_report needs at least two h values".into()));
    }
    let entries = h_values.iter().map(|&h| count_in_box(pot, h, eps, m)).collect::<Result<Vec<_>>>()?;
    let x: Vec<f64> = h_values.iter().map(|h| (1.0 / h).ln()).collect();
    let y: Vec<f64> = entries.iter().map(|e| (e.count.max(1) as f64).ln()).collect();
    let (fitted_slope, fit_residual) = fit_slope(&x, &y);
    let report = CountReport {
        h_values: h_values.to_vec(),
        counts: entries.iter().map(|e| e.count).collect(),
        fitted_slope,
        fit_residual,
        box_params: (eps, m),
        completeness: "full".into(),
    };
    Ok((report, entries))
}
