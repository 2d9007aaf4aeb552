//! Uniform large-order forms of J_ν(νz) and H_ν^{(1)}(νz) in terms of Airy
//! functions of `ν^{2/3} ζ(z)`, with the first correction terms B₀, C₀.

use num_complex::Complex64 as C64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::langer::{zeta_of, zeta_ratio};
use crate::specfun::{airy_eval, BesselPair, BesselRegime};

const SERIES_RADIUS: f64 = 0.1;

/// B₀ about t = 1 − z = 0.
const B0_SERIES: [f64; 7] = [
    0.017_998_872_141_355_330_925,
    0.011_199_298_221_287_761_465,
    0.005_940_406_978_601_430_431_8,
    0.002_867_672_451_639_004_084_5,
    0.001_233_918_905_256_727_170_9,
    0.000_416_925_067_453_517_876_47,
    0.000_033_017_338_508_594_980_695,
];

/// C₀ about t = 1 − z = 0.
const C0_SERIES: [f64; 7] = [
    0.158_740_105_196_819_947_48,
    0.031_748_021_039_363_989_495,
    0.004_283_463_156_104_665_249_3,
    -0.002_052_397_319_716_459_927_0,
    -0.002_668_156_790_304_076_799_5,
    -0.001_936_069_208_140_557_944_9,
    -0.001_114_070_671_895_536_282_8,
];

fn horner(c: &[f64], t: C64) -> C64 {
    c.iter().rev().fold(C64::new(0.0, 0.0), |acc, &a| acc * t + a)
}

/// First correction coefficient of the Airy-type expansion of J and H.
pub fn b0(z: C64) -> Result<C64> {
    let t = 1.0 - z;
    if t.norm() < SERIES_RADIUS {
        return Ok(horner(&B0_SERIES, t));
    }
    let zeta = zeta_of(z)?.zeta;
    let q = 1.0 - z * z;
    let r = zeta_ratio(z)?.sqrt();
    Ok(-5.0 / (48.0 * zeta * zeta) + (5.0 / (24.0 * q) - 0.125) / (q * r))
}

/// First correction coefficient of the expansion of the derivatives.
pub fn c0(z: C64) -> Result<C64> {
    let t = 1.0 - z;
    if t.norm() < SERIES_RADIUS {
        return Ok(horner(&C0_SERIES, t));
    }
    let zeta = zeta_of(z)?.zeta;
    let q = 1.0 - z * z;
    let r = zeta_ratio(z)?.sqrt();
    Ok(7.0 / (48.0 * zeta) + r * (0.375 - 7.0 / (24.0 * q)))
}

/// Leading uniform terms `(J_ν(νz), H_ν^{(1)}(νz))`.
pub fn olver_leading(n: u32, z: C64) -> Result<(C64, C64)> {
    let nu = check_order(n)?;
    let zeta = zeta_of(z)?.zeta;
    let pre = (4.0 * zeta_ratio(z)?).powf(0.25);
    let a = airy_eval(nu.powf(2.0 / 3.0) * zeta)?;
    let k = pre / nu.cbrt();
    let rot = 2.0 * C64::from_polar(1.0, -PI / 3.0);
    Ok((k * a.ai, rot * k * a.a_minus))
}

fn check_order(n: u32) -> Result<f64> {
    if n == 0 {
        return Err(Error::InvalidParameter("uniform expansion needs order >= 1".into()));
    }
    Ok(n as f64)
}

/// J, J′, H, H′ at argument `x = n z` from the leading term plus first correction.
pub fn olver_pair(n: u32, x: C64) -> Result<BesselPair> {
    let nu = check_order(n)?;
    let z = x / nu;
    let zeta = zeta_of(z)?.zeta;
    let ratio = zeta_ratio(z)?;
    let (b, c) = (b0(z)?, c0(z)?);
    let a = airy_eval(nu.powf(2.0 / 3.0) * zeta)?;
    let pre = (4.0 * ratio).powf(0.25);
    let dpre = -2.0 / (z * pre);
    let (n13, n23, n43, n53) = (nu.cbrt(), nu.powf(2.0 / 3.0), nu.powf(4.0 / 3.0), nu.powf(5.0 / 3.0));
    let j = pre * (a.ai / n13 + a.ai_prime * b / n53);
    let jp = dpre * (a.ai * c / n43 + a.ai_prime / n23);
    let rot = 2.0 * C64::from_polar(1.0, -PI / 3.0);
    let h = rot * pre * (a.a_minus / n13 + a.a_minus_prime * b / n53);
    let hp = rot * dpre * (a.a_minus * c / n43 + a.a_minus_prime / n23);
    let s = 0.5 * (j.norm().ln() - h.norm().ln());
    let (es, ems) = ((-s).exp(), s.exp());
    Ok(BesselPair {
        n,
        z: x,
        j: j * es,
        j_prime: jp * es,
        h1: h * ems,
        h1_prime: hp * ems,
        log_scale: s,
        regime: BesselRegime::OlverUniform,
    })
}
