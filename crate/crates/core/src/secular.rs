//! Secular function `F_n(λ) = 1 − (π v/(2i)) J_n(λ) H_n^{(1)}(λ)` whose zeros
//! are the mode-n resonances, with the coupling `v` frozen per window.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::rootfind::Holomorphic;
use crate::specfun::bessel_eval_signed;

/// Boundary coupling `V = V₀ h^{−α}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialSpec {
    pub v0: f64,
    pub alpha: f64,
}

impl PotentialSpec {
    pub fn new(v0: f64, alpha: f64) -> Result<Self> {
        if !(v0 > 0.0 && v0.is_finite()) {
            return Err(Error::InvalidParameter(format!("V0 must be positive, got {v0}")));
        }
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::InvalidParameter(format!("alpha must lie in [0, 1], got {alpha}")));
        }
        Ok(Self { v0, alpha })
    }

    /// Coupling frozen at frequency `center`: `V₀·center^α`.
    pub fn v_eff(&self, center: f64) -> f64 {
        self.v0 * center.powf(self.alpha)
    }
}

/// Search rectangle in the λ plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Window {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub v_eff: f64,
    pub h_eff: f64,
}

impl Window {
    pub fn center(&self) -> C64 {
        C64::new(0.5 * (self.re_min + self.re_max), 0.5 * (self.im_min + self.im_max))
    }

    pub fn contains(&self, z: C64) -> bool {
        z.re >= self.re_min && z.re <= self.re_max && z.im >= self.im_min && z.im <= self.im_max
    }

    pub fn width(&self) -> f64 {
        self.re_max - self.re_min
    }

    pub fn height(&self) -> f64 {
        self.im_max - self.im_min
    }
}

/// Window around `center` with relative width `c·h^{3/4}` and depth `M·ln(1/h)`.
pub fn window_for(center: f64, pot: PotentialSpec, c: f64, depth_m: f64) -> Result<Window> {
    if !(center >= 5.0) {
        return Err(Error::InvalidParameter(format!("window center {center} < 5")));
    }
    if !(c > 0.0 && depth_m > 0.0) {
        return Err(Error::InvalidParameter("window half-width and depth must be positive".into()));
    }
    let h = 1.0 / center;
    let half = c * h.powf(0.75);
    Ok(Window {
        re_min: center * (1.0 - half),
        re_max: center * (1.0 + half),
        im_min: -depth_m * center.ln(),
        im_max: 0.05,
        v_eff: pot.v_eff(center),
        h_eff: h,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SecularValue {
    pub f: C64,
    pub df: C64,
    pub n: i64,
    pub lambda: C64,
    pub v_eff: f64,
}

pub fn secular_eval(n: i64, lambda: C64, v_eff: f64) -> Result<SecularValue> {
    let p = bessel_eval_signed(n, lambda)?;
    let (prod, dprod) = p.product();
    // π v/(2i) = −iπv/2
    let k = C64::new(0.0, -PI * v_eff / 2.0);
    Ok(SecularValue { f: 1.0 - k * prod, df: -k * dprod, n, lambda, v_eff })
}

/// `C_n = J_n(λ)/H_n^{(1)}(λ)`, the exterior amplitude when the interior one is 1.
pub fn interior_coefficient(n: i64, lambda: C64) -> Result<C64> {
    let p = bessel_eval_signed(n, lambda)?;
    if p.h1.norm() == 0.0 {
        return Err(Error::Domain { z: lambda, reason: "H_n^(1) vanishes or underflows" });
    }
    Ok(p.j / p.h1 * (2.0 * p.log_scale).exp())
}

/// Jump-condition residual `λ(J′ − C H′) + v J` and its natural scale `|v J|`.
pub fn jump_residual(n: i64, lambda: C64, v_eff: f64) -> Result<(f64, f64)> {
    let p = bessel_eval_signed(n, lambda)?;
    let c = interior_coefficient(n, lambda)?;
    let j = p.j_value();
    let r = lambda * (p.j_prime_value() - c * p.h1_prime_value()) + v_eff * j;
    Ok((r.norm(), (v_eff * j).norm().max(f64::MIN_POSITIVE)))
}

/// `F_n` with frozen coupling, as a holomorphic function for the root finder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecularFn {
    pub n: i64,
    pub v_eff: f64,
}

impl Holomorphic for SecularFn {
    fn eval(&self, z: C64) -> Result<(C64, C64)> {
        let s = secular_eval(self.n, z, self.v_eff)?;
        Ok((s.f, s.df))
    }
}
