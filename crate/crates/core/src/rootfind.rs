//! Zeros of holomorphic functions on rectangles: argument-principle counting,
//! bisection localization, Newton refinement and contraction certificates.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::secular::Window;

/// A holomorphic function returning `(f(z), f′(z))`.
pub trait Holomorphic: Sync {
    fn eval(&self, z: C64) -> Result<(C64, C64)>;
}

impl<F> Holomorphic for F
where
    F: Fn(C64) -> Result<(C64, C64)> + Sync,
{
    fn eval(&self, z: C64) -> Result<(C64, C64)> {
        self(z)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

impl Rect {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Self {
        Self { re_min, re_max, im_min, im_max }
    }

    pub fn center(&self) -> C64 {
        C64::new(0.5 * (self.re_min + self.re_max), 0.5 * (self.im_min + self.im_max))
    }

    pub fn width(&self) -> f64 {
        self.re_max - self.re_min
    }

    pub fn height(&self) -> f64 {
        self.im_max - self.im_min
    }

    pub fn diameter(&self) -> f64 {
        self.width().hypot(self.height())
    }

    pub fn contains(&self, z: C64) -> bool {
        z.re >= self.re_min && z.re <= self.re_max && z.im >= self.im_min && z.im <= self.im_max
    }

    /// Grows every side by `d_k·size` (`size` = width or height).
    pub fn expanded(&self, d: [f64; 4]) -> Rect {
        let (w, h) = (self.width(), self.height());
        Rect {
            re_min: self.re_min - d[0] * w,
            re_max: self.re_max + d[1] * w,
            im_min: self.im_min - d[2] * h,
            im_max: self.im_max + d[3] * h,
        }
    }

    /// Splits along the longer side at fraction `at`.
    pub fn split(&self, at: f64) -> (Rect, Rect) {
        if self.width() >= self.height() {
            let x = self.re_min + at * self.width();
            (Rect { re_max: x, ..*self }, Rect { re_min: x, ..*self })
        } else {
            let y = self.im_min + at * self.height();
            (Rect { im_max: y, ..*self }, Rect { im_min: y, ..*self })
        }
    }

    fn corners(&self) -> [C64; 4] {
        [
            C64::new(self.re_min, self.im_min),
            C64::new(self.re_max, self.im_min),
            C64::new(self.re_max, self.im_max),
            C64::new(self.re_min, self.im_max),
        ]
    }
}

impl From<&Window> for Rect {
    fn from(w: &Window) -> Self {
        Rect::new(w.re_min, w.re_max, w.im_min, w.im_max)
    }
}

impl From<Window> for Rect {
    fn from(w: Window) -> Self {
        Rect::from(&w)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InitKind {
    ContourScan,
    NormalLattice,
    GlancingBand,
    AwayGlancing,
}

impl InitKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            InitKind::ContourScan => "contour_scan",
            InitKind::NormalLattice => "normal_lattice",
            InitKind::GlancingBand => "glancing_band",
            InitKind::AwayGlancing => "away_glancing",
        }
    }
}

/// Data of the contraction argument: a unique zero lies within `eps` of the
/// point when `a + d·eps² < eps·b` and `d·eps/b ≤ 1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub a: f64,
    pub b: f64,
    /// Sampled bound for |f″| on the disk, times `safety_factor`.
    pub d: f64,
    pub eps: f64,
    pub passed: bool,
    pub safety_factor: f64,
    /// `d` is a sampled estimate, not a rigorous supremum.
    pub empirical: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CertifiedRoot {
    pub lambda: C64,
    pub n: i64,
    pub residual: f64,
    pub certificate: Certificate,
    pub init_kind: InitKind,
}

/// Radius used when certifying emitted roots.
pub fn certification_radius(z: C64) -> f64 {
    1e-7 * (1.0 + z.norm())
}

pub const CONTRACTION: f64 = 0.5;
pub const SAFETY_FACTOR: f64 = 2.0;

// Gauss–Kronrod 7/15 nodes and weights on [−1, 1].
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const WINDING_TOL: f64 = 1e-3;
const ROUNDING_GATE: f64 = 0.25;
const MAX_SEGMENT_DEPTH: u32 = 40;
const MAX_EVALS: usize = 200_000;

struct Contour<'a, F: Holomorphic + ?Sized> {
    f: &'a F,
    size: f64,
    evals: usize,
    near_zero: Option<f64>,
}

impl<F: Holomorphic + ?Sized> Contour<'_, F> {
    fn log_derivative(&mut self, z: C64) -> Result<C64> {
        self.evals += 1;
        let (v, d) = self.f.eval(z)?;
        let dist = v.norm() / d.norm();
        // |f/f′| estimates the distance to the nearest zero.
        if v.norm() == 0.0 || dist < 1e-8 * self.size {
            self.near_zero = Some(v.norm());
            return Err(Error::BoundaryZero { min_abs: v.norm() });
        }
        Ok(d / v)
    }

    fn gk15(&mut self, a: C64, b: C64) -> Result<(C64, f64)> {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let fc = self.log_derivative(mid)?;
        let mut kron = fc * WGK[7];
        let mut gauss = fc * WG[3];
        for j in 0..7 {
            let dx = half * XGK[j];
            let s = self.log_derivative(mid - dx)? + self.log_derivative(mid + dx)?;
            kron += s * WGK[j];
            if j % 2 == 1 {
                gauss += s * WG[j / 2];
            }
        }
        Ok((kron * half, ((kron - gauss) * half).norm()))
    }

    fn adaptive(&mut self, a: C64, b: C64, tol: f64, depth: u32) -> Result<C64> {
        let (val, err) = self.gk15(a, b)?;
        // Always split twice: a lone panel can cancel exactly on odd integrands.
        if depth >= 2 && (err <= tol || (b - a).norm() < 1e-12 * self.size) {
            return Ok(val);
        }
        if depth >= MAX_SEGMENT_DEPTH || self.evals > MAX_EVALS {
            return Err(Error::BoundaryZero { min_abs: self.near_zero.unwrap_or(0.0) });
        }
        let m = 0.5 * (a + b);
        Ok(self.adaptive(a, m, 0.5 * tol, depth + 1)? + self.adaptive(m, b, 0.5 * tol, depth + 1)?)
    }
}

/// `(1/2πi)∮ f′/f dz` around `rect`, counter-clockwise.
pub fn winding_integral<F: Holomorphic + ?Sized>(f: &F, rect: &Rect) -> Result<C64> {
    let mut c = Contour { f, size: rect.diameter(), evals: 0, near_zero: None };
    let corners = rect.corners();
    let perimeter = 2.0 * (rect.width() + rect.height());
    let mut total = C64::new(0.0, 0.0);
    for k in 0..4 {
        let (a, b) = (corners[k], corners[(k + 1) % 4]);
        let tol = TAU * WINDING_TOL * (b - a).norm() / perimeter;
        total += c.adaptive(a, b, tol, 0)?;
    }
    Ok(total / C64::new(0.0, TAU))
}

/// Number of zeros of `f` inside `rect`.
pub fn count_zeros<F: Holomorphic + ?Sized>(f: &F, rect: &Rect) -> Result<usize> {
    let raw = winding_integral(f, rect)?;
    let k = raw.re.round();
    if (raw.re - k).abs() > ROUNDING_GATE || raw.im.abs() > ROUNDING_GATE || k < 0.0 {
        return Err(Error::NonInteger { raw: raw.re });
    }
    Ok(k as usize)
}

/// Deterministic outward nudges (fractions of the side lengths).
fn nudge(attempt: usize) -> [f64; 4] {
    // Weyl sequence with the golden ratio: reproducible and well spread.
    let g = 0.618_033_988_749_894_9;
    let mut d = [0.0; 4];
    for (j, v) in d.iter_mut().enumerate() {
        let u = ((attempt * 4 + j + 1) as f64 * g).fract();
        *v = 1e-3 * (0.5 + u) * attempt as f64;
    }
    d
}

/// [`count_zeros`] with up to 5 outward nudges when a zero sits on the contour.
/// Returns the count and the rectangle actually used.
pub fn count_zeros_robust<F: Holomorphic + ?Sized>(f: &F, rect: &Rect) -> Result<(usize, Rect)> {
    let mut last = None;
    for attempt in 0..=5 {
        let r = if attempt == 0 { *rect } else { rect.expanded(nudge(attempt)) };
        match count_zeros(f, &r) {
            Ok(k) => return Ok((k, r)),
            Err(e @ (Error::BoundaryZero { .. } | Error::NonInteger { .. })) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// Full Newton iteration.
///
/// Fails with `Divergence` if an iterate leaves the disk of radius
/// `10·radius` around `z0`.
pub fn newton_refine<F: Holomorphic + ?Sized>(
    f: &F,
    z0: C64,
    tol: f64,
    max_iter: usize,
    radius: f64,
) -> Result<C64> {
    let (mut v, mut d) = f.eval(z0)?;
    if d.norm() == 0.0 {
        return Err(Error::ZeroDerivative { z: z0 });
    }
    let mut z = z0;
    for _ in 0..max_iter {
        if d.norm() == 0.0 {
            return Err(Error::ZeroDerivative { z });
        }
        let mut step = v / d;
        // Trust region: no single step longer than `radius`.
        if step.norm() > radius {
            step *= radius / step.norm();
        }
        let mut t = 1.0;
        let mut trial = f.eval(z - step);
        // Halve while the residual grows a lot or the point is unusable.
        let mut halvings = 0;
        while halvings < 8 && trial.as_ref().map_or(true, |(nv, _)| nv.norm() > 2.0 * v.norm()) {
            t *= 0.5;
            trial = f.eval(z - step * t);
            halvings += 1;
        }
        let next = z - step * t;
        let (nv, nd) = trial.map_err(|_| Error::Divergence { start: z0 })?;
        if (next - z0).norm() > 10.0 * radius {
            return Err(Error::Divergence { start: z0 });
        }
        z = next;
        (v, d) = (nv, nd);
        let small_step = (step * t).norm() <= tol * (1.0 + z.norm());
        let small_residual = v.norm() <= tol * (1.0 + d.norm() * z.norm()) * 1e-3;
        if small_step || small_residual {
            // One more step settles the last digits.
            if d.norm() > 0.0 {
                let last = z - v / d;
                if let Ok((lv, _)) = f.eval(last) {
                    if lv.norm() <= v.norm() {
                        return Ok(last);
                    }
                }
            }
            return Ok(z);
        }
    }
    Err(Error::Convergence { what: "newton_refine", iterations: max_iter })
}

/// Contraction certificate for a zero within `eps` of `z`.
pub fn certify<F: Holomorphic + ?Sized>(f: &F, z: C64, eps: f64) -> Result<Certificate> {
    let (v, d1) = f.eval(z)?;
    let (a, b) = (v.norm(), d1.norm());
    let delta = 0.5 * eps;
    let second = |p: C64| -> Result<f64> {
        let (_, up) = f.eval(p + delta)?;
        let (_, dn) = f.eval(p - delta)?;
        Ok((up - dn).norm() / (2.0 * delta))
    };
    let mut dmax = second(z)?;
    for k in 0..16 {
        let p = z + C64::from_polar(eps, TAU * k as f64 / 16.0);
        dmax = dmax.max(second(p)?);
    }
    let d = SAFETY_FACTOR * dmax;
    let passed = b > 0.0 && a + d * eps * eps < eps * b && d * eps / b <= CONTRACTION;
    Ok(Certificate { a, b, d, eps, passed, safety_factor: SAFETY_FACTOR, empirical: true })
}

/// A box holding one zero (or flagged after hitting the depth limit).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootBox {
    pub rect: Rect,
    pub count: usize,
    /// Subdivision stopped at the depth limit (likely a near-multiple zero).
    pub flagged: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct LocalizeOptions {
    /// Boxes are split until their diameter is at most `rel_diameter·(1+|center|)`.
    pub rel_diameter: f64,
    pub max_depth: u32,
}

impl Default for LocalizeOptions {
    fn default() -> Self {
        Self { rel_diameter: 1e-2, max_depth: 60 }
    }
}

/// Splits `rect` (holding `count` zeros) into boxes with exactly one zero each.
pub fn localize_all<F: Holomorphic + ?Sized>(
    f: &F,
    rect: &Rect,
    count: usize,
    opts: LocalizeOptions,
) -> Result<Vec<RootBox>> {
    let mut out = Vec::new();
    localize_rec(f, *rect, count, 0, &opts, &mut out, &|_, _| false)?;
    Ok(out)
}

/// Like [`localize_all`] but `done(rect, count)` may stop the recursion early.
pub(crate) fn localize_rec<F, D>(
    f: &F,
    rect: Rect,
    count: usize,
    depth: u32,
    opts: &LocalizeOptions,
    out: &mut Vec<RootBox>,
    done: &D,
) -> Result<()>
where
    F: Holomorphic + ?Sized,
    D: Fn(&Rect, usize) -> bool,
{
    if count == 0 || done(&rect, count) {
        return Ok(());
    }
    let small = rect.diameter() <= opts.rel_diameter * (1.0 + rect.center().norm());
    if count == 1 && small {
        out.push(RootBox { rect, count, flagged: false });
        return Ok(());
    }
    if depth >= opts.max_depth {
        log::warn!("localize depth limit near {}", rect.center());
        out.push(RootBox { rect, count, flagged: true });
        return Ok(());
    }
    let (left, right, cl, cr) = split_counted(f, &rect, count)?;
    localize_rec(f, left, cl, depth + 1, opts, out, done)?;
    localize_rec(f, right, cr, depth + 1, opts, out, done)
}

/// Splits the longer side with a count on each half, moving the cut if a zero sits on it or
/// the halves do not add up.
pub fn split_counted<F: Holomorphic + ?Sized>(
    f: &F,
    rect: &Rect,
    count: usize,
) -> Result<(Rect, Rect, usize, usize)> {
    const CUTS: [f64; 6] = [0.5, 0.4871, 0.5137, 0.4613, 0.5419, 0.4211];
    let mut last_err = None;
    for &at in &CUTS {
        let (l, r) = rect.split(at);
        let counted = count_zeros(f, &l).and_then(|cl| Ok((cl, count_zeros(f, &r)?)));
        match counted {
            Ok((cl, cr)) if cl + cr == count => return Ok((l, r, cl, cr)),
            Ok((cl, cr)) => {
                last_err = Some(Error::NonInteger { raw: (cl + cr) as f64 });
            }
            Err(e @ (Error::BoundaryZero { .. } | Error::NonInteger { .. })) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last_err.expect("at least one cut tried"))
}
