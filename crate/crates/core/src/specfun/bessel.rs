//! Integer-order Bessel functions J_n and H_n^{(1)} of complex argument.
//!
//! Values are returned with a shared real log scale `s`:
//! `J = j·e^{s}`, `H = h1·e^{−s}`. Products and Wronskians are scale free,
//! which keeps deep-elliptic orders (J tiny, H huge) representable.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, LN_10, PI};

use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_6;
const MAX_ARG: f64 = 1e6;
const MAX_ORDER: u32 = 1_000_000;
const SERIES_RADIUS: f64 = 2.0;
const HANKEL_RADIUS: f64 = 40.0;
// Kept well below sqrt(f64::MAX) so complex division stays finite.
const RESCALE_AT: f64 = 1e120;
const RESCALE_LOG: f64 = 120.0 * LN_10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BesselRegime {
    Series,
    Recurrence,
    HankelAsymptotic,
    OlverUniform,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BesselPair {
    pub n: u32,
    pub z: C64,
    /// Scaled J_n(z); the true value is `j·e^{log_scale}`.
    pub j: C64,
    pub j_prime: C64,
    /// Scaled H_n^{(1)}(z); the true value is `h1·e^{−log_scale}`.
    pub h1: C64,
    pub h1_prime: C64,
    pub log_scale: f64,
    pub regime: BesselRegime,
}

impl BesselPair {
    pub fn j_value(&self) -> C64 {
        self.j * self.log_scale.exp()
    }

    pub fn j_prime_value(&self) -> C64 {
        self.j_prime * self.log_scale.exp()
    }

    pub fn h1_value(&self) -> C64 {
        self.h1 * (-self.log_scale).exp()
    }

    pub fn h1_prime_value(&self) -> C64 {
        self.h1_prime * (-self.log_scale).exp()
    }

    /// `ln|J_n(z)|`, finite even when J underflows.
    pub fn ln_abs_j(&self) -> f64 {
        self.j.norm().ln() + self.log_scale
    }

    pub fn ln_abs_h1(&self) -> f64 {
        self.h1.norm().ln() - self.log_scale
    }

    /// `(J·H, (J·H)′)`.
    pub fn product(&self) -> (C64, C64) {
        (self.j * self.h1, self.j_prime * self.h1 + self.j * self.h1_prime)
    }

    /// `J·H′ − J′·H − 2i/(πz)`.
    pub fn wronskian_residual(&self) -> C64 {
        self.j * self.h1_prime - self.j_prime * self.h1 - C64::new(0.0, 2.0 / PI) / self.z
    }

    /// Residual divided by `2/(π|z|) + |J·H′|`.
    pub fn wronskian_relative(&self) -> f64 {
        let scale = 2.0 / (PI * self.z.norm()) + (self.j * self.h1_prime).norm();
        self.wronskian_residual().norm() / scale
    }
}

/// Documented strip `|Im z| ≤ 50 + 10·ln(1 + |Re z|)`.
pub fn in_strip(z: C64) -> bool {
    z.im.abs() <= 50.0 + 10.0 * (1.0 + z.re.abs()).ln()
}

/// J_n, J_{n+1} sharing scale `a`; H_n, H_{n+1} sharing scale `b`.
struct Core {
    jn: C64,
    jn1: C64,
    a: f64,
    hn: C64,
    hn1: C64,
    b: f64,
    regime: BesselRegime,
}

pub fn bessel_eval(n: u32, z: C64) -> Result<BesselPair> {
    check_args(n, z)?;
    if z.re < 0.0 {
        let inner = eval_right(n, -z)?;
        return Ok(reflect(inner, z));
    }
    eval_right(n, z)
}

/// Signed order: `X_{−n} = (−1)^n X_n` for J and H.
pub fn bessel_eval_signed(n: i64, z: C64) -> Result<BesselPair> {
    let m = u32::try_from(n.unsigned_abs())
        .map_err(|_| Error::InvalidParameter(format!("order {n} too large")))?;
    let mut p = bessel_eval(m, z)?;
    if n < 0 && m % 2 == 1 {
        p.j = -p.j;
        p.j_prime = -p.j_prime;
        p.h1 = -p.h1;
        p.h1_prime = -p.h1_prime;
    }
    Ok(p)
}

/// `p = J_n H_n^{(1)}` and `dp/dz`; identical for orders n and −n.
pub fn bessel_product(n: i64, z: C64) -> Result<(C64, C64)> {
    let m = u32::try_from(n.unsigned_abs())
        .map_err(|_| Error::InvalidParameter(format!("order {n} too large")))?;
    Ok(bessel_eval(m, z)?.product())
}

fn check_args(n: u32, z: C64) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain { z, reason: "non-finite argument" });
    }
    if z.norm() == 0.0 {
        return Err(Error::Domain { z, reason: "H_n^(1) is singular at z = 0" });
    }
    if z.norm() > MAX_ARG {
        return Err(Error::Range { z, reason: "|z| must not exceed 1e6" });
    }
    if n > MAX_ORDER {
        return Err(Error::InvalidParameter(format!("order {n} exceeds 1e6")));
    }
    if !in_strip(z) {
        return Err(Error::Range { z, reason: "outside the strip |Im z| <= 50 + 10 ln(1+|Re z|)" });
    }
    Ok(())
}

fn eval_right(n: u32, z: C64) -> Result<BesselPair> {
    let r = z.norm();
    let core = if r <= SERIES_RADIUS {
        series_core(n, z)
    } else if r >= HANKEL_RADIUS {
        match (hankel_sums(n, z), hankel_sums(n + 1, z)) {
            (Some(s0), Some(s1)) => hankel_core(n, z, s0, s1),
            _ => miller_core(n, z),
        }
    } else {
        miller_core(n, z)
    };
    assemble(n, z, core)
}

fn assemble(n: u32, z: C64, c: Core) -> Result<BesselPair> {
    let nz = n as f64 / z;
    let jp = nz * c.jn - c.jn1;
    let hp = nz * c.hn - c.hn1;
    let (jm, hm) = (c.jn.norm().max(c.jn1.norm()), c.hn.norm().max(c.hn1.norm()));
    if !(jm.is_finite() && hm.is_finite()) || hm == 0.0 {
        return Err(Error::Overflow { z });
    }
    // Move the mantissa magnitudes into the exponents before splitting.
    let (ja, jdiv) = if jm > 0.0 { (c.a + jm.ln(), jm) } else { (c.a, 1.0) };
    let (hb, hdiv) = (c.b + hm.ln(), hm);
    let s = 0.5 * (ja - hb);
    let f = (0.5 * (ja + hb)).exp();
    let out = BesselPair {
        n,
        z,
        j: c.jn / jdiv * f,
        j_prime: jp / jdiv * f,
        h1: c.hn / hdiv * f,
        h1_prime: hp / hdiv * f,
        log_scale: s,
        regime: c.regime,
    };
    for v in [out.j, out.j_prime, out.h1, out.h1_prime] {
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::Overflow { z });
        }
    }
    Ok(out)
}

/// Maps values at `−z` (Re > 0) to `z` across the principal branch cut.
fn reflect(p: BesselPair, z: C64) -> BesselPair {
    let sign = if p.n % 2 == 0 { 1.0 } else { -1.0 };
    let m = if z.im >= 0.0 { 1.0 } else { -1.0 };
    let e2s = (2.0 * p.log_scale).exp();
    BesselPair {
        z,
        j: sign * p.j,
        j_prime: -sign * p.j_prime,
        h1: sign * (p.h1 - 2.0 * m * p.j * e2s),
        h1_prime: sign * (-p.h1_prime + 2.0 * m * p.j_prime * e2s),
        ..p
    }
}

fn ln_factorial(n: u32) -> f64 {
    libm::lgamma(n as f64 + 1.0)
}

/// Power series `Σ_k q^k / (k! (m+k)!)·(m!)`, i.e. normalized to start at 1.
fn j_series_sum(m: u32, q: C64) -> C64 {
    let mut t = C64::new(1.0, 0.0);
    let mut s = t;
    for k in 1..200 {
        let kf = k as f64;
        t *= q / (kf * (m as f64 + kf));
        s += t;
        if t.norm() <= 1e-17 * s.norm() {
            break;
        }
    }
    s
}

fn series_core(n: u32, z: C64) -> Core {
    let half = z / 2.0;
    let q = -half * half;
    let l = n as f64 * half.ln() - ln_factorial(n);
    let phase = C64::from_polar(1.0, l.im);
    let jn = phase * j_series_sum(n, q);
    let jn1 = phase * half / (n as f64 + 1.0) * j_series_sum(n + 1, q);

    let j0 = j_series_sum(0, q);
    let j1 = half * j_series_sum(1, q);
    let (y0, y1) = y01_series(z, j0, j1);
    let (hn, hn1, b) = forward_h(n, z, j0 + C64::i() * y0, j1 + C64::i() * y1);
    Core { jn, jn1, a: l.re, hn, hn1, b, regime: BesselRegime::Series }
}

/// Y_0 and Y_1 from their small-argument series.
fn y01_series(z: C64, j0: C64, j1: C64) -> (C64, C64) {
    let half = z / 2.0;
    let lg = half.ln();
    let w = half * half;
    // Y0 = (2/π)(ln(z/2)+γ)J0 + (2/π) Σ_{k≥1} (−1)^{k+1} H_k w^k/(k!)²
    let mut t = C64::new(1.0, 0.0);
    let mut harm = 0.0;
    let mut s0 = C64::new(0.0, 0.0);
    for k in 1..200 {
        let kf = k as f64;
        t *= -w / (kf * kf);
        harm += 1.0 / kf;
        let term = -t * harm;
        s0 += term;
        if term.norm() <= 1e-17 * s0.norm() {
            break;
        }
    }
    let y0 = 2.0 / PI * ((lg + EULER_GAMMA) * j0 + s0);

    // Y1 = −2/(πz) + (2/π) ln(z/2) J1 − (z/2π) Σ_{k≥0} (ψ(k+1)+ψ(k+2)) (−w)^k/(k!(k+1)!)
    let mut t = C64::new(1.0, 0.0);
    let mut hk = 0.0;
    let mut s1 = C64::new(-2.0 * EULER_GAMMA + 1.0, 0.0);
    for k in 1..200 {
        let kf = k as f64;
        t *= -w / (kf * (kf + 1.0));
        hk += 1.0 / kf;
        let term = t * (-2.0 * EULER_GAMMA + 2.0 * hk + 1.0 / (kf + 1.0));
        s1 += term;
        if term.norm() <= 1e-17 * s1.norm() {
            break;
        }
    }
    let y1 = -2.0 / (PI * z) + 2.0 / PI * lg * j1 - z / (2.0 * PI) * s1;
    (y0, y1)
}

/// Forward recurrence of H from orders 0, 1 to n, n+1 with rescaling.
fn forward_h(n: u32, z: C64, h0: C64, h1: C64) -> (C64, C64, f64) {
    let (mut prev, mut cur) = (h0, h1);
    let mut b = 0.0;
    let two_over_z = 2.0 / z;
    for k in 1..=n {
        let next = (k as f64) * two_over_z * cur - prev;
        prev = cur;
        cur = next;
        if cur.norm() > RESCALE_AT {
            prev /= RESCALE_AT;
            cur /= RESCALE_AT;
            b += RESCALE_LOG;
        }
    }
    (prev, cur, b)
}

/// `(Σ i^k a_k z^{−k}, Σ (−i)^k a_k z^{−k})` if the expansion reaches 1e-16.
fn hankel_sums(n: u32, z: C64) -> Option<(C64, C64)> {
    let mu = 4.0 * (n as f64) * (n as f64);
    let iz = z.inv();
    let mut term = C64::new(1.0, 0.0);
    let (mut sp, mut sm) = (term, term);
    let rot = [C64::new(1.0, 0.0), C64::i(), C64::new(-1.0, 0.0), -C64::i()];
    let mut last = f64::INFINITY;
    for k in 1..80usize {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        term *= (mu - odd * odd) / (8.0 * kf) * iz;
        let m = term.norm();
        if m > last {
            return None;
        }
        sp += rot[k % 4] * term;
        sm += rot[(4 - k % 4) % 4] * term;
        if m < 1e-17 {
            return Some((sp, sm));
        }
        last = m;
    }
    None
}

fn hankel_h1_h2(n: u32, z: C64, s: (C64, C64)) -> (C64, C64) {
    let pre = (2.0 / (PI * z)).sqrt();
    let omega = z - n as f64 * FRAC_PI_2 - FRAC_PI_4;
    let e = (C64::i() * omega).exp();
    let ei = (-C64::i() * omega).exp();
    (pre * e * s.0, pre * ei * s.1)
}

fn hankel_core(n: u32, z: C64, s0: (C64, C64), s1: (C64, C64)) -> Core {
    let (h1n, h2n) = hankel_h1_h2(n, z, s0);
    let (h1n1, h2n1) = hankel_h1_h2(n + 1, z, s1);
    Core {
        jn: 0.5 * (h1n + h2n),
        jn1: 0.5 * (h1n1 + h2n1),
        a: 0.0,
        hn: h1n,
        hn1: h1n1,
        b: 0.0,
        regime: BesselRegime::HankelAsymptotic,
    }
}

/// Miller backward recurrence for J normalized by `e^{±iz} = J_0 + 2Σ(±i)^k J_k`.
fn miller_core(n: u32, z: C64) -> Core {
    let r = z.norm();
    let big = (n as f64).max(r);
    let start = (big + 30.0 + 10.0 * big.cbrt()).ceil() as usize;
    let start = start.max(n as usize + 2);
    let sigma = if z.im <= 0.0 { C64::i() } else { -C64::i() };
    let pow = [C64::new(1.0, 0.0), sigma, sigma * sigma, sigma * sigma * sigma];
    let need_y = r < HANKEL_RADIUS;
    let two_over_z = 2.0 / z;

    let mut f_next = C64::new(0.0, 0.0); // f_{k+1}
    let mut f = C64::new(1e-30, 0.0); // f_k
    let mut sum = 2.0 * pow[start % 4] * f;
    let mut y0s = C64::new(0.0, 0.0);
    let mut y1s = C64::new(0.0, 0.0);
    let mut rescales = 0u32;
    let mut stored: Option<(C64, C64, u32)> = None;
    if start == n as usize {
        stored = Some((f, f_next, rescales));
    }
    let add_neumann = |k: usize, fk: C64, y0s: &mut C64, y1s: &mut C64| {
        if k == 0 || !need_y {
            return;
        }
        if k % 2 == 0 {
            let m = (k / 2) as f64;
            let sgn = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
            *y0s += sgn * fk / m;
        } else if k >= 3 {
            let m = ((k - 1) / 2) as f64;
            let sgn = if ((k - 1) / 2) % 2 == 0 { 1.0 } else { -1.0 };
            *y1s += sgn * (2.0 * m + 1.0) * fk / (m * (m + 1.0));
        }
    };
    add_neumann(start, f, &mut y0s, &mut y1s);

    for k in (1..=start).rev() {
        let f_prev = (k as f64) * two_over_z * f - f_next; // f_{k−1}
        f_next = f;
        f = f_prev;
        let km1 = k - 1;
        if f.norm() > RESCALE_AT {
            f /= RESCALE_AT;
            f_next /= RESCALE_AT;
            sum /= RESCALE_AT;
            y0s /= RESCALE_AT;
            y1s /= RESCALE_AT;
            rescales += 1;
        }
        let weight = if km1 == 0 { 1.0 } else { 2.0 };
        sum += weight * pow[km1 % 4] * f;
        add_neumann(km1, f, &mut y0s, &mut y1s);
        if km1 == n as usize {
            stored = Some((f, f_next, rescales));
        }
    }
    let (f0, f1) = (f, f_next);
    let sn = sum.norm();
    let norm = ((sigma * z).exp() / sn) / (sum / sn);
    let (fn_, fn1, cnt) = stored.expect("order n visited by the recurrence");
    let a = -((rescales - cnt) as f64) * RESCALE_LOG;
    let jn = fn_ * norm;
    let jn1 = fn1 * norm;

    let (h0, h1) = if need_y {
        let j0 = f0 * norm;
        let j1 = f1 * norm;
        let lg = (z / 2.0).ln();
        let y0 = 2.0 / PI * (lg + EULER_GAMMA) * j0 - 4.0 / PI * y0s * norm;
        let y1 = -2.0 / (PI * z) * j0 + 2.0 / PI * (lg - (1.0 - EULER_GAMMA)) * j1
            - 2.0 / PI * y1s * norm;
        (j0 + C64::i() * y0, j1 + C64::i() * y1)
    } else {
        let s0 = hankel_sums(0, z).expect("Hankel series converges for |z| >= 40, n = 0");
        let s1 = hankel_sums(1, z).expect("Hankel series converges for |z| >= 40, n = 1");
        let (h10, h20) = hankel_h1_h2(0, z, s0);
        let (h11, h21) = hankel_h1_h2(1, z, s1);
        if z.im < 0.0 {
            // Below the axis H^(1) decays with the order on the oscillatory side,
            // so recur on the growing H^(2) and recover H^(1) = 2J − H^(2).
            let (g, g1, b) = forward_h(n, z, h20, h21);
            let ratio = (a - b).exp();
            let hn = 2.0 * jn * ratio - g;
            let hn1 = 2.0 * jn1 * ratio - g1;
            return Core { jn, jn1, a, hn, hn1, b, regime: BesselRegime::Recurrence };
        }
        (h10, h11)
    };
    let (hn, hn1, b) = forward_h(n, z, h0, h1);
    Core { jn, jn1, a, hn, hn1, b, regime: BesselRegime::Recurrence }
}
