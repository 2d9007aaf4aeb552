//! Dense-grid brute force: Newton from every point of an m×m grid, deduplicated.

use leaky_disk::rootfind::{newton_refine, Holomorphic, Rect};
use num_complex::Complex64 as C64;

pub fn grid_roots<F: Holomorphic>(f: &F, rect: &Rect, m: usize) -> Vec<C64> {
    let mut out: Vec<C64> = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let z0 = C64::new(
                rect.re_min + (i as f64 + 0.5) * rect.width() / m as f64,
                rect.im_min + (j as f64 + 0.5) * rect.height() / m as f64,
            );
            let Ok(z) = newton_refine(f, z0, 1e-13, 100, rect.diameter()) else { continue };
            if rect.contains(z) && !out.iter().any(|r| (r - z).norm() < 1e-6) {
                out.push(z);
            }
        }
    }
    out.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    out
}

/// Every point of `a` has a partner in `b` within `tol` and vice versa.
pub fn same_set(a: &[C64], b: &[C64], tol: f64) -> bool {
    a.len() == b.len()
        && a.iter().all(|x| b.iter().any(|y| (x - y).norm() <= tol))
        && b.iter().all(|y| a.iter().any(|x| (x - y).norm() <= tol))
}
