//! The Langer variable ζ(z) solving `(dζ/dz)² = (1 − z²)/(ζ z²)`, ζ(1) = 0,
//! its inverse near the turning point, and the glancing amplitude Φ.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::secular::PotentialSpec;

/// `2^{1/3}`.
pub const CBRT2: f64 = 1.259_921_049_894_873_2;

const TURNING_RADIUS: f64 = 0.05;

/// ζ = 2^{1/3} Σ c_k t^{k+1} with t = 1 − z.
const ZETA_SERIES: [f64; 14] = [
    1.0,
    0.3,
    0.182_857_142_857_142_857_14,
    0.131_682_539_682_539_682_54,
    0.102_636_487_322_201_607_92,
    0.083_878_638_187_209_615_781,
    0.070_774_259_649_144_002_885,
    0.061_115_058_767_065_489_755,
    0.053_710_156_376_986_476_222,
    0.047_859_685_444_150_986_805,
    0.043_125_314_546_582_832_239,
    0.039_218_637_585_552_108_987,
    0.035_942_245_341_677_550_339,
    0.033_156_552_405_590_551_548,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZetaBranch {
    Oscillatory,
    Evanescent,
    Turning,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZetaValue {
    pub z: C64,
    pub zeta: C64,
    pub dzeta_dz: C64,
    pub branch: ZetaBranch,
}

impl ZetaValue {
    /// `(ζ′)²·ζ·z² − (1 − z²)`.
    pub fn ode_residual(&self) -> C64 {
        self.dzeta_dz * self.dzeta_dz * self.zeta * self.z * self.z - (1.0 - self.z * self.z)
    }
}

fn check_domain(z: C64) -> Result<()> {
    if !(z.re > 0.05 && z.im.abs() <= 0.5) {
        return Err(Error::Domain { z, reason: "Langer variable needs Re z > 0.05, |Im z| <= 0.5" });
    }
    Ok(())
}

pub fn zeta_of(z: C64) -> Result<ZetaValue> {
    check_domain(z)?;
    let one = C64::new(1.0, 0.0);
    if (z - 1.0).norm() <= TURNING_RADIUS {
        let (zeta, dzeta_dz) = zeta_series(one - z);
        return Ok(ZetaValue { z, zeta, dzeta_dz, branch: ZetaBranch::Turning });
    }
    if z.re < 1.0 {
        let s = (one - z * z).sqrt();
        let q = ((one + s) / z).ln() - s;
        let zeta = (1.5 * q).powf(2.0 / 3.0);
        let dzeta_dz = -s / (z * zeta.sqrt());
        Ok(ZetaValue { z, zeta, dzeta_dz, branch: ZetaBranch::Evanescent })
    } else {
        let s = (z * z - one).sqrt();
        let p = s - z.inv().acos();
        let mz = (1.5 * p).powf(2.0 / 3.0);
        let dzeta_dz = -s / (z * mz.sqrt());
        Ok(ZetaValue { z, zeta: -mz, dzeta_dz, branch: ZetaBranch::Oscillatory })
    }
}

fn zeta_series(t: C64) -> (C64, C64) {
    let mut val = C64::new(0.0, 0.0);
    let mut der = C64::new(0.0, 0.0);
    for (k, &c) in ZETA_SERIES.iter().enumerate().rev() {
        val = val * t + c;
        der = der * t + c * (k + 1) as f64;
    }
    (CBRT2 * val * t, -CBRT2 * der)
}

/// `ζ(w)/(1 − w²)`, analytic through w = 1 where it equals 2^{−2/3}.
pub fn zeta_ratio(w: C64) -> Result<C64> {
    let one = C64::new(1.0, 0.0);
    if (w - 1.0).norm() <= TURNING_RADIUS {
        check_domain(w)?;
        let t = one - w;
        let mut val = C64::new(0.0, 0.0);
        for &c in ZETA_SERIES.iter().rev() {
            val = val * t + c;
        }
        return Ok(CBRT2 * val / (2.0 - t));
    }
    Ok(zeta_of(w)?.zeta / (one - w * w))
}

/// Inverse of [`zeta_of`]: the w with ζ(w) = `zeta`, w(0) = 1.
///
/// Newton with continuation in ζ from the turning point, so arguments well
/// beyond |ζ| = 0.5 (e.g. ζ(2) ≈ −1.018) are reachable.
pub fn z_of_zeta(zeta: C64) -> Result<C64> {
    let steps = (zeta.norm() / 0.25).ceil().max(1.0) as usize;
    let mut w = C64::new(1.0, 0.0) - zeta / CBRT2 / steps as f64;
    for s in 1..=steps {
        let target = zeta * (s as f64 / steps as f64);
        let mut converged = false;
        for _ in 0..50 {
            let zv = zeta_of(w)?;
            let step = (zv.zeta - target) / zv.dzeta_dz;
            let mut next = w - step;
            // Stay inside the domain by halving overly long steps.
            let mut tries = 0;
            while check_domain(next).is_err() && tries < 30 {
                next = w - step * 0.5f64.powi(tries + 1);
                tries += 1;
            }
            w = next;
            if step.norm() <= 1e-15 * w.norm() {
                converged = true;
                break;
            }
        }
        if !converged {
            let zv = zeta_of(w)?;
            if (zv.zeta - target).norm() > 1e-12 * (1.0 + target.norm()) {
                return Err(Error::Convergence { what: "z_of_zeta Newton", iterations: 50 });
            }
        }
    }
    Ok(w)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhiValue {
    pub phi: C64,
    pub n: u32,
    pub h: f64,
    pub pot: PotentialSpec,
    pub zeta_arg: C64,
}

/// `Φ = h₁^{2/3} h^{−α} (ζ(w)/(1−w²))^{1/2} V₀` with `h₁ = 1/n`, `w = z/(n h)`.
pub fn phi(n: u32, h: f64, pot: PotentialSpec, z: C64) -> Result<PhiValue> {
    if n == 0 || !(h > 0.0) {
        return Err(Error::InvalidParameter(format!("phi needs n >= 1 and h > 0 (n = {n}, h = {h})")));
    }
    let m = n as f64 * h;
    let w = z / m;
    let zeta_arg = zeta_of(w)?.zeta;
    let v = pot.v0 * h.powf(-pot.alpha);
    Ok(PhiValue { phi: phi_unscaled(n, v, w)?, n, h, pot, zeta_arg })
}

/// Φ in terms of the frozen coupling `v = V₀ h^{−α}` and `w = λ/n`.
pub fn phi_unscaled(n: u32, v: f64, w: C64) -> Result<C64> {
    let h1 = 1.0 / n as f64;
    Ok(h1.powf(2.0 / 3.0) * v * zeta_ratio(w)?.sqrt())
}
