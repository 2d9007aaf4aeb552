//! Closed-form asymptotics: band constants, resonance-free curves and the three
//! families of predicted resonances used as Newton seeds.
//!
//! All outputs are unrescaled: λ = z/h with h = 1/(window center).

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::langer::{phi_unscaled, z_of_zeta, zeta_of, CBRT2};
use crate::rootfind::InitKind;
use crate::secular::{PotentialSpec, Window};
use crate::specfun::{airy_eval, airy_zeros, AiryZeroTable};

/// Bands tracked by default.
pub const BAND_COUNT: usize = 20;

fn zero_table() -> &'static AiryZeroTable {
    static TABLE: OnceLock<AiryZeroTable> = OnceLock::new();
    TABLE.get_or_init(|| airy_zeros(100).expect("first 100 Airy zeros"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PredictionKind {
    Normal,
    GlancingBand,
    AwayGlancing,
}

impl From<PredictionKind> for InitKind {
    fn from(k: PredictionKind) -> Self {
        match k {
            PredictionKind::Normal => InitKind::NormalLattice,
            PredictionKind::GlancingBand => InitKind::GlancingBand,
            PredictionKind::AwayGlancing => InitKind::AwayGlancing,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PredictedResonance {
    pub lambda0: C64,
    pub kind: PredictionKind,
    pub n: i64,
    /// Lattice index k, band index N, or away-glancing index k.
    pub k_or_n: i64,
    pub expected_error: f64,
    /// False outside the regime where the expansion is asymptotically accurate.
    pub valid: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BandConstant {
    pub v0: f64,
    pub band: usize,
    pub value: f64,
}

/// `C_{V₀,N} = 2^{1/3} π Ai′(−ζ_N)² / V₀²`.
///
/// This equals `2^{1/3}/(8π² V₀² |A_−(−ζ_N)³ Ai′(−ζ_N)|)` because the Wronskian
/// gives `|A_−(−ζ_N)| = 1/(2π|Ai′(−ζ_N)|)`. A disk of radius `R` replaces `V₀`
/// by `R^{2/3} V₀`.
pub fn band_constant(v0: f64, band: usize, radius: Option<f64>) -> Result<BandConstant> {
    if !(v0 > 0.0) {
        return Err(Error::InvalidParameter(format!("V0 must be positive, got {v0}")));
    }
    if band == 0 || band > 100 {
        return Err(Error::InvalidParameter(format!("band index {band} not in 1..=100")));
    }
    let v = v0 * radius.map_or(1.0, |r| r.powf(2.0 / 3.0));
    let aip = zero_table().ai_prime_at_zeros[band - 1];
    Ok(BandConstant { v0, band, value: CBRT2 * PI * aip * aip / (v * v) })
}

/// Same constant from the A_− form, as an internal cross-check.
pub fn band_constant_direct(v0: f64, band: usize) -> Result<f64> {
    let t = zero_table();
    let s = -t.zeros[band - 1];
    let a = airy_eval(C64::new(s, 0.0))?;
    let denom = 8.0 * PI * PI * v0 * v0 * (a.a_minus.powi(3) * t.ai_prime_at_zeros[band - 1]).norm();
    Ok(CBRT2 / denom)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FreeRegionBound {
    pub re_lambda: f64,
    /// Minimal depth `−Im λ` of the logarithmic free region.
    pub log_bound: f64,
    /// `−Im λ` of band N (index N−1).
    pub band_bounds: Vec<f64>,
}

pub fn free_region_bound(pot: PotentialSpec, re_lambda: f64) -> Result<FreeRegionBound> {
    if !(re_lambda >= 5.0) {
        return Err(Error::InvalidParameter(format!("free_region_bound needs Re λ >= 5, got {re_lambda}")));
    }
    let log_bound = 0.5 * (1.0 - pot.alpha) * re_lambda.ln() - 0.5 * (pot.v0 / 2.0).ln();
    let exponent = 5.0 / 3.0 - 2.0 * pot.alpha;
    let band_bounds = (1..=BAND_COUNT)
        .map(|k| band_constant(pot.v0, k, None).map(|c| c.value * re_lambda.powf(exponent)))
        .collect::<Result<Vec<_>>>()?;
    Ok(FreeRegionBound { re_lambda, log_bound, band_bounds })
}

/// Normal-mode lattice `π(4k+2n+1)/4 + ε₀` inside the window's real range.
pub fn normal_lattice(window: &Window, n: u32) -> Vec<PredictedResonance> {
    let nf = n as f64;
    let v = window.v_eff;
    let k_lo = ((4.0 * window.re_min / PI - 2.0 * nf - 1.0) / 4.0).ceil().max(0.0) as i64;
    let k_hi = ((4.0 * window.re_max / PI - 2.0 * nf - 1.0) / 4.0).floor() as i64;
    let away_from_glancing = nf * window.h_eff <= 0.9;
    (k_lo..=k_hi)
        .map(|k| {
            let base = PI * (4 * k) as f64 / 4.0 + PI * (2.0 * nf + 1.0) / 4.0;
            let arg = C64::new(-1.0, PI * (4.0 * k as f64 + 2.0 * nf + 1.0) / (2.0 * v));
            let eps0 = C64::new(0.0, -0.5) * arg.ln();
            let lambda0 = base + eps0;
            let expected_error = (1.0 + 0.5 * nf * nf) / lambda0.re;
            PredictedResonance {
                lambda0,
                kind: PredictionKind::Normal,
                n: n as i64,
                k_or_n: k,
                expected_error,
                // Beyond ~1/2 the lattice index no longer identifies a root.
                valid: away_from_glancing && expected_error <= 0.5,
            }
        })
        .collect()
}

/// Band-N glancing prediction `ζ = −h₁^{2/3}ζ_N + ε₀ + ε₁`, with `h₁ = 1/n`.
pub fn glancing_band(pot: PotentialSpec, window: &Window, n: u32, band: usize) -> Result<PredictedResonance> {
    if n == 0 {
        return Err(Error::InvalidParameter("glancing_band needs n >= 1".into()));
    }
    if band == 0 || band > 100 {
        return Err(Error::InvalidParameter(format!("band index {band} not in 1..=100")));
    }
    let (zeta, _) = glancing_zeta(n, window.v_eff, band)?;
    let nf = n as f64;
    let h1 = 1.0 / nf;
    let lambda0 = nf * z_of_zeta(zeta)?;
    let lead = h1.powf(2.0 / 3.0) * zero_table().zeros[band - 1];
    let eps = (zeta + lead).norm();
    // Next term of the expansion in ζ, and the relative O(h₁) error of the
    // leading uniform forms, mapped to λ through dλ/dζ ≈ −n/2^{1/3}.
    let rem = nf * eps * eps * eps / (lead * lead) + eps * h1 + h1.powf(8.0 / 3.0);
    Ok(PredictedResonance {
        lambda0,
        kind: PredictionKind::GlancingBand,
        n: n as i64,
        k_or_n: band as i64,
        expected_error: nf * rem / CBRT2,
        valid: pot.alpha > 2.0 / 3.0 && (nf * window.h_eff - 1.0).abs() <= 0.1,
    })
}

/// Predicted ζ on band N (with Φ evaluated at the leading-order point) and the
/// imaginary part of the correction alone.
fn glancing_zeta(n: u32, v: f64, band: usize) -> Result<(C64, f64)> {
    let t = zero_table();
    let nf = n as f64;
    let h23 = nf.powf(-2.0 / 3.0);
    let s = -t.zeros[band - 1];
    let aip = t.ai_prime_at_zeros[band - 1];
    let a = airy_eval(C64::new(s, 0.0))?;
    let b = C64::from_polar(2.0 * PI, -5.0 * PI / 6.0);
    let lead = C64::new(h23 * s, 0.0);
    let w = z_of_zeta(lead)?;
    let phi = phi_unscaled(n, v, w)?;
    let eps0 = h23 / (b * phi * a.a_minus * aip);
    let eps1 = -eps0 * eps0 * a.a_minus_prime / a.a_minus / h23;
    Ok((lead + eps0 + eps1, (eps0 + eps1).im))
}

/// Away-glancing prediction `(−ζ)^{3/2} = m + ε₀`, `m = (3/8)πh₁(4k−1)`.
pub fn away_glancing(pot: PotentialSpec, window: &Window, n: u32, k: i64) -> Result<PredictedResonance> {
    if n == 0 || k < 1 {
        return Err(Error::InvalidParameter(format!("away_glancing needs n >= 1, k >= 1 (n = {n}, k = {k})")));
    }
    let nf = n as f64;
    let h1 = 1.0 / nf;
    let m = 0.375 * PI * h1 * (4 * k - 1) as f64;
    let w_m = z_of_zeta(C64::new(-m.powf(2.0 / 3.0), 0.0))?;
    let phi = phi_unscaled(n, window.v_eff, w_m)?;
    let x = m.powf(1.0 / 3.0) / (h1.powf(1.0 / 3.0) * phi);
    let eps0 = C64::new(0.0, -0.75 * h1) * (1.0 - C64::new(0.0, 2.0) * x).ln();
    let zeta = -(m + eps0).powf(2.0 / 3.0);
    let w = z_of_zeta(zeta)?;
    let lambda0 = nf * w;
    // Remainder O(ε₀h₁m^{−4/3} + h₁²) plus the dropped O(h₁/m) series terms,
    // mapped to λ by |dλ/dε| = n (2/3) m^{−1/3} / |ζ′(w)|.
    let dz = zeta_of(w)?.dzeta_dz.norm();
    let rem = eps0.norm() * h1 * m.powf(-4.0 / 3.0) + h1 * h1 + h1 * h1 / m;
    let delta = 1.0 - m.ln() / h1.ln();
    Ok(PredictedResonance {
        lambda0,
        kind: PredictionKind::AwayGlancing,
        n: n as i64,
        k_or_n: k,
        expected_error: nf * (2.0 / 3.0) * m.powf(-1.0 / 3.0) / dz * rem,
        valid: delta > (3.0 * pot.alpha - 2.0) / 4.0,
    })
}

/// Index range of away-glancing predictions whose real part can fall in the window.
pub fn away_glancing_range(window: &Window, n: u32) -> Option<(i64, i64)> {
    if n == 0 {
        return None;
    }
    let nf = n as f64;
    let w_lo = (window.re_min / nf).max(1.0);
    let w_hi = window.re_max / nf;
    if w_hi <= 1.0 {
        return None;
    }
    let m_of = |w: f64| -> Option<f64> { Some((-zeta_of(C64::new(w, 0.0)).ok()?.zeta.re).max(0.0).powf(1.5)) };
    let (m_lo, m_hi) = (m_of(w_lo)?, m_of(w_hi)?);
    let k_of = |m: f64| (m * nf / (0.375 * PI) + 1.0) / 4.0;
    let lo = (k_of(m_lo).floor() as i64).max(1);
    let hi = k_of(m_hi).ceil() as i64 + 1;
    Some((lo, hi))
}

/// Distance from `λ` to the nearest band centre in units of `h₁^{2α−2/3}`,
/// measured on Im ζ. Infinite for n = 0 or outside the Langer domain.
pub fn band_condition_residual(pot: PotentialSpec, n: i64, lambda: C64) -> f64 {
    let n = n.unsigned_abs();
    if n == 0 || n > u32::MAX as u64 {
        return f64::INFINITY;
    }
    let n = n as u32;
    let nf = n as f64;
    let Ok(z) = zeta_of(lambda / nf) else {
        return f64::INFINITY;
    };
    let v = pot.v_eff(lambda.re.max(1.0));
    let scale = nf.powf(-(2.0 * pot.alpha - 2.0 / 3.0));
    let mut best = f64::INFINITY;
    for band in 1..=BAND_COUNT {
        let Ok((_, centre)) = glancing_zeta(n, v, band) else {
            continue;
        };
        best = best.min((z.zeta.im - centre).abs() / scale);
    }
    best
}
