//! Flat `key = value` run configuration. `#` starts a comment.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::secular::PotentialSpec;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub alpha: f64,
    pub v0: f64,
    pub re_min: f64,
    pub re_max: f64,
    pub n_max: u32,
    pub out: PathBuf,
    /// Worker threads; 0 lets rayon decide.
    pub threads: usize,
    /// Window half-width factor in `Re λ ∈ center·(1 ± c·h^{3/4})`.
    pub window_c: f64,
    /// Window depth factor in `Im λ ≥ −M ln(center)`.
    pub depth_m: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            alpha: 0.0,
            v0: 1.0,
            re_min: 5.0,
            re_max: 200.0,
            n_max: 200,
            out: PathBuf::from("out"),
            threads: 0,
            window_c: 1.0,
            depth_m: 2.0,
        }
    }
}

impl RunConfig {
    pub fn potential(&self) -> Result<PotentialSpec> {
        PotentialSpec::new(self.v0, self.alpha)
    }

    pub fn scan_options(&self) -> super::ScanOptions {
        super::ScanOptions { window_c: self.window_c, depth_m: self.depth_m }
    }

    /// Applies `key = value` lines on top of `self`.
    pub fn apply_str(&mut self, text: &str) -> Result<()> {
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::InvalidParameter(format!("config line {}: expected `key = value`", idx + 1)))?;
            self.set(key.trim(), value.trim())
                .map_err(|e| Error::InvalidParameter(format!("config line {}: {e}", idx + 1)))?;
        }
        Ok(())
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let mut cfg = Self::default();
        cfg.apply_str(&std::fs::read_to_string(path)?)?;
        Ok(cfg)
    }

    pub fn set(&mut self, key: &str, value: &str) -> std::result::Result<(), String> {
        fn num<T: std::str::FromStr>(key: &str, v: &str) -> std::result::Result<T, String> {
            v.parse().map_err(|_| format!("bad value `{v}` for `{key}`"))
        }
        match key {
            "alpha" => self.alpha = num(key, value)?,
            "v0" => self.v0 = num(key, value)?,
            "re_min" => self.re_min = num(key, value)?,
            "re_max" => self.re_max = num(key, value)?,
            "n_max" => self.n_max = num(key, value)?,
            "threads" => self.threads = num(key, value)?,
            "window_c" => self.window_c = num(key, value)?,
            "depth_m" => self.depth_m = num(key, value)?,
            "out" => self.out = PathBuf::from(value),
            _ => return Err(format!("unknown key `{key}`")),
        }
        Ok(())
    }
}
