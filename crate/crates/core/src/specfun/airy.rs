//! Complex Airy functions Ai and A_−(z) = Ai(e^{2πi/3} z).
//!
//! Three evaluation paths are used:
//! * `|z| >= 9`: optimally truncated asymptotic expansion,
//! * `|z| < 9`: Maclaurin series or a Taylor continuation of the Airy ODE
//!   inward from `|z| = 9`, whichever has the smaller predicted cancellation.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_4, PI};

use crate::error::{Error, Result};
use crate::specfun::NeumaierSum;

/// Ai(0).
pub const AI0: f64 = 0.355_028_053_887_817_239;
/// −Ai′(0).
pub const AIP0: f64 = 0.258_819_403_792_806_798;

const ASYMPTOTIC_RADIUS: f64 = 9.0;
const MAX_ARG: f64 = 1e6;
const SEAM_WARN: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AiryRegime {
    Series,
    Continuation,
    Asymptotic,
}

/// Ai, Ai′, A_− and A_−′ at one argument.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AiryPair {
    pub z: C64,
    pub ai: C64,
    pub ai_prime: C64,
    pub a_minus: C64,
    pub a_minus_prime: C64,
    pub regime: AiryRegime,
    /// Set when `z` or its rotation lies within 1e-3 of the `|z| = 9` seam.
    pub accuracy_warning: bool,
}

impl AiryPair {
    /// `Ai·A_−′ − Ai′·A_− − e^{−πi/6}/(2π)`.
    pub fn wronskian_residual(&self) -> C64 {
        self.ai * self.a_minus_prime - self.ai_prime * self.a_minus - wronskian_value()
    }
}

/// The constant Wronskian `W(Ai, A_−) = e^{−πi/6}/(2π)`.
pub fn wronskian_value() -> C64 {
    C64::from_polar(1.0 / (2.0 * PI), -PI / 6.0)
}

/// `e^{2πi/3}`.
pub fn omega() -> C64 {
    C64::from_polar(1.0, 2.0 * PI / 3.0)
}

/// Evaluates Ai, Ai′, A_−, A_−′ at `z`.
pub fn airy_eval(z: C64) -> Result<AiryPair> {
    if !(z.re.is_finite() && z.im.is_finite()) || z.norm() > MAX_ARG {
        return Err(Error::Range { z, reason: "|z| must not exceed 1e6" });
    }
    let w = omega();
    let (ai, aip, r1, warn1) = ai_and_derivative(z);
    let (mut am, mut amp, r2, warn2) = ai_and_derivative(w * z);
    if z.im == 0.0 {
        // On the real axis A_− = ½e^{πi/3}(Ai − i Bi) with Ai, Bi real. Rebuilding it
        // from the directly computed Ai keeps Re(ωA_−) = −Ai/2 exact even where
        // |A_−| ≫ |Ai| and the rotated evaluation cannot resolve that component.
        let half = C64::from_polar(0.5, PI / 3.0);
        let rot = C64::from_polar(2.0, PI / 6.0);
        let bi = (rot * am).re;
        let bip = (rot * w * amp).re;
        am = half * C64::new(ai.re, -bi);
        amp = half * C64::new(aip.re, -bip) / w;
    }
    let out = AiryPair {
        z,
        ai,
        ai_prime: aip,
        a_minus: am,
        a_minus_prime: w * amp,
        regime: if r1 == AiryRegime::Asymptotic { r2 } else { r1 },
        accuracy_warning: warn1 || warn2,
    };
    for v in [out.ai, out.ai_prime, out.a_minus, out.a_minus_prime] {
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::Overflow { z });
        }
    }
    Ok(out)
}

/// Ai(z) and Ai′(z) alone.
pub fn airy_ai(z: C64) -> Result<(C64, C64)> {
    if z.norm() > MAX_ARG {
        return Err(Error::Range { z, reason: "|z| must not exceed 1e6" });
    }
    let (a, ap, _, _) = ai_and_derivative(z);
    Ok((a, ap))
}

fn ai_and_derivative(z: C64) -> (C64, C64, AiryRegime, bool) {
    let r = z.norm();
    let near_seam = (r - ASYMPTOTIC_RADIUS).abs() < SEAM_WARN;
    if r >= ASYMPTOTIC_RADIUS {
        let (a, ap) = asymptotic(z);
        if near_seam {
            cross_check(z, a, ap, inner(z));
        }
        return (a, ap, AiryRegime::Asymptotic, near_seam);
    }
    let (a, ap, reg) = inner(z);
    if near_seam {
        let (b, bp) = asymptotic(z);
        cross_check(z, b, bp, (a, ap, reg));
    }
    (a, ap, reg, near_seam)
}

fn cross_check(z: C64, a: C64, ap: C64, other: (C64, C64, AiryRegime)) {
    let da = (a - other.0).norm() / a.norm().max(1e-300);
    let dp = (ap - other.1).norm() / ap.norm().max(1e-300);
    if da.max(dp) > 1e-8 {
        log::warn!("airy seam disagreement at {z}: {da:e} / {dp:e}");
    }
}

/// Picks series or continuation for `|z| < 9` by estimated digit loss.
fn inner(z: C64) -> (C64, C64, AiryRegime) {
    let r = z.norm();
    let c = (1.5 * z.arg()).cos();
    let xi = 2.0 / 3.0 * r.powf(1.5);
    let series_loss = xi * (1.0 + c);
    let xi9 = 2.0 / 3.0 * ASYMPTOTIC_RADIUS.powf(1.5);
    let cont_loss = 2.0 * (-c).max(0.0) * (xi9 - xi);
    if series_loss <= cont_loss || series_loss <= 6.9 {
        let (a, ap) = maclaurin(z);
        (a, ap, AiryRegime::Series)
    } else {
        let (a, ap) = continuation(z);
        (a, ap, AiryRegime::Continuation)
    }
}

/// Maclaurin series `Ai = c1 f − c2 g` with compensated summation.
pub(crate) fn maclaurin(z: C64) -> (C64, C64) {
    let z3 = z * z * z;
    let mut f = NeumaierSum::new(C64::new(1.0, 0.0));
    let mut g = NeumaierSum::new(z);
    let mut fp = NeumaierSum::new(C64::new(0.0, 0.0));
    let mut gp = NeumaierSum::new(C64::new(1.0, 0.0));
    let (mut t, mut s) = (C64::new(1.0, 0.0), z);
    let mut tp = z * z / 2.0;
    let mut sp = C64::new(1.0, 0.0);
    fp.add(tp);
    for k in 1..400 {
        let kf = k as f64;
        t *= z3 / ((3.0 * kf - 1.0) * 3.0 * kf);
        s *= z3 / (3.0 * kf * (3.0 * kf + 1.0));
        sp *= z3 / ((3.0 * kf - 2.0) * 3.0 * kf);
        if k > 1 {
            tp *= z3 / (3.0 * (kf - 1.0) * (3.0 * kf - 1.0));
            fp.add(tp);
        }
        f.add(t);
        g.add(s);
        gp.add(sp);
        let small = 1e-18;
        if t.norm() <= small * f.value().norm()
            && s.norm() <= small * g.value().norm()
            && sp.norm() <= small * gp.value().norm()
            && tp.norm() <= small * fp.value().norm().max(1e-300)
        {
            break;
        }
    }
    let ai = AI0 * f.value() - AIP0 * g.value();
    let aip = AI0 * fp.value() - AIP0 * gp.value();
    (ai, aip)
}

/// Coefficients u_k, v_k of the large-argument expansions.
fn uv_coefficients(kmax: usize) -> (Vec<f64>, Vec<f64>) {
    let mut u = vec![1.0];
    let mut v = vec![1.0];
    for k in 1..=kmax {
        let kf = k as f64;
        let uk = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / ((2.0 * kf - 1.0) * 216.0 * kf);
        u.push(uk);
        v.push(-(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * uk);
    }
    (u, v)
}

/// Sums `Σ (−1)^k c_k x^k` (with stride) up to its smallest term.
fn optimal_sum(c: &[f64], x: C64, start: usize, stride: usize, alternate: bool) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    let mut last = f64::INFINITY;
    let mut sign = 1.0;
    let mut k = start;
    while k < c.len() {
        let term = sign * c[k] * x.powu(k as u32);
        let m = term.norm();
        if m > last {
            break;
        }
        acc += term;
        if m <= 1e-18 * acc.norm() {
            break;
        }
        last = m;
        if alternate {
            sign = -sign;
        }
        k += stride;
    }
    acc
}

fn asymptotic(z: C64) -> (C64, C64) {
    let (u, v) = uv_coefficients(60);
    let sqrt_pi = PI.sqrt();
    if z.arg().abs() <= 2.0 * PI / 3.0 {
        let xi = 2.0 / 3.0 * z.powf(1.5);
        let inv = -xi.inv();
        let su = optimal_sum(&u, inv, 0, 1, false);
        let sv = optimal_sum(&v, inv, 0, 1, false);
        let e = (-xi).exp();
        let q = z.powf(0.25);
        let ai = e * su / (2.0 * sqrt_pi * q);
        let aip = -q * e * sv / (2.0 * sqrt_pi);
        (ai, aip)
    } else {
        // Ai(−w) in cosine/sine form, w = −z with |arg w| < π/3.
        let w = -z;
        let xi = 2.0 / 3.0 * w.powf(1.5);
        let inv = xi.inv();
        let (cs, sn) = ((xi - FRAC_PI_4).cos(), (xi - FRAC_PI_4).sin());
        let inv2 = inv * inv;
        let ue: Vec<f64> = u.iter().step_by(2).copied().collect();
        let uo: Vec<f64> = u.iter().skip(1).step_by(2).copied().collect();
        let ve: Vec<f64> = v.iter().step_by(2).copied().collect();
        let vo: Vec<f64> = v.iter().skip(1).step_by(2).copied().collect();
        let su_e = optimal_sum(&ue, inv2, 0, 1, true);
        let su_o = inv * optimal_sum(&uo, inv2, 0, 1, true);
        let sv_e = optimal_sum(&ve, inv2, 0, 1, true);
        let sv_o = inv * optimal_sum(&vo, inv2, 0, 1, true);
        let q = w.powf(0.25);
        let ai = (cs * su_e + sn * su_o) / (sqrt_pi * q);
        let aip = q * (sn * sv_e - cs * sv_o) / sqrt_pi;
        (ai, aip)
    }
}

/// Integrates `y'' = z y` along the ray from `9 e^{iθ}` to `z`.
fn continuation(z: C64) -> (C64, C64) {
    let dir = if z.norm() == 0.0 { C64::new(1.0, 0.0) } else { z / z.norm() };
    let mut c = dir * ASYMPTOTIC_RADIUS;
    let (mut y, mut yp) = asymptotic(c);
    loop {
        let remaining = z - c;
        let dist = remaining.norm();
        if dist == 0.0 {
            break;
        }
        let hmax = 1.2 / c.norm().sqrt().max(1.0);
        let h = if dist <= hmax { remaining } else { remaining * (hmax / dist) };
        let (ny, nyp) = taylor_step(c, y, yp, h);
        y = ny;
        yp = nyp;
        c += h;
        if dist <= hmax {
            break;
        }
    }
    (y, yp)
}

fn taylor_step(c: C64, y: C64, yp: C64, h: C64) -> (C64, C64) {
    // a_{k+2} (k+2)(k+1) = c a_k + a_{k−1}
    let mut a = [C64::new(0.0, 0.0); 3]; // a_{k−1}, a_k, a_{k+1}
    a[1] = y;
    a[2] = yp;
    let mut val = y + yp * h;
    let mut der = yp;
    let mut hp = h; // h^{k+1}
    let scale = y.norm() + yp.norm() * h.norm();
    for k in 0..200usize {
        let kf = k as f64;
        let next = (c * a[1] + a[0]) / ((kf + 2.0) * (kf + 1.0));
        // next = a_{k+2}
        der += next * (kf + 2.0) * hp;
        hp *= h;
        let term = next * hp;
        val += term;
        a = [a[1], a[2], next];
        if k > 4 && term.norm() < 1e-19 * scale && (next * (kf + 2.0)).norm() * hp.norm() < 1e-19 * scale {
            break;
        }
    }
    (val, der)
}

/// Zeros of Ai on the negative axis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AiryZeroTable {
    /// ζ_k > 0; `−ζ_k` is the k-th zero of Ai.
    pub zeros: Vec<f64>,
    pub ai_prime_at_zeros: Vec<f64>,
}

impl AiryZeroTable {
    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }
}

fn ai_real(x: f64) -> (f64, f64) {
    let (a, ap, _, _) = ai_and_derivative(C64::new(x, 0.0));
    (a.re, ap.re)
}

/// The first `k` zeros `−ζ_j` of Ai, with `Ai′(−ζ_j)`.
pub fn airy_zeros(k: usize) -> Result<AiryZeroTable> {
    if k == 0 || k > 100 {
        return Err(Error::InvalidParameter(format!("airy_zeros: K = {k} not in 1..=100")));
    }
    let mut zeros = Vec::with_capacity(k);
    let mut derivs = Vec::with_capacity(k);
    for j in 1..=k {
        let t = 3.0 * PI * (4.0 * j as f64 - 1.0) / 8.0;
        let guess = t.powf(2.0 / 3.0) * (1.0 + 5.0 / 48.0 / (t * t));
        let f = |x: f64| ai_real(-x).0;
        let (mut lo, mut hi) = (guess - 0.2, guess + 0.2);
        if f(lo) * f(hi) > 0.0 {
            return Err(Error::Convergence { what: "airy zero bracket", iterations: j });
        }
        for _ in 0..30 {
            let mid = 0.5 * (lo + hi);
            if f(lo) * f(mid) <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        let mut x = 0.5 * (lo + hi);
        for _ in 0..4 {
            let (a, ap) = ai_real(-x);
            // d/dx Ai(−x) = −Ai′(−x)
            let step = a / -ap;
            x -= step;
            if step.abs() < 1e-16 * x {
                break;
            }
        }
        zeros.push(x);
        derivs.push(ai_real(-x).1);
    }
    Ok(AiryZeroTable { zeros, ai_prime_at_zeros: derivs })
}
