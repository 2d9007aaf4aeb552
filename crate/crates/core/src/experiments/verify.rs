//! Checks a spectrum against the resonance-free regions.

use serde::{Deserialize, Serialize};

use super::scan::SpectrumRecord;
use crate::predictors::free_region_bound;
use crate::secular::PotentialSpec;

/// The regions are asymptotic; records below this real part are not checked.
pub const VERIFY_RE_MIN: f64 = 50.0;
/// Slack on the logarithmic depth.
pub const LOG_MARGIN: f64 = 0.15;
/// Band-residual distance beyond which a shallow record sits in a gap.
pub const BAND_GAP_TOLERANCE: f64 = 0.25;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub record: SpectrumRecord,
    /// Required depth `−Im λ` at this real part.
    pub log_bound: f64,
    pub reason: String,
}

/// Records inside a forbidden region.
///
/// For α < 5/6 every root must lie at depth at least `log_bound − 0.15`.
/// For α ≥ 5/6 a root shallower than that must also be within the gap
/// tolerance of a band.
pub fn verify_free_regions(spectrum: &[SpectrumRecord], pot: PotentialSpec) -> Vec<Violation> {
    let banded = pot.alpha >= 5.0 / 6.0;
    let mut out = Vec::new();
    for r in spectrum {
        if r.re_lambda < VERIFY_RE_MIN {
            continue;
        }
        let Ok(bound) = free_region_bound(pot, r.re_lambda) else {
            continue;
        };
        let depth = -r.im_lambda;
        if depth >= bound.log_bound - LOG_MARGIN {
            continue;
        }
        if banded && r.band_residual <= BAND_GAP_TOLERANCE {
            continue;
        }
        let reason = if banded {
            format!("depth {depth:.4} above log bound {:.4} and band residual {:.3}", bound.log_bound, r.band_residual)
        } else {
            format!("depth {depth:.4} above log bound {:.4}", bound.log_bound)
        };
        out.push(Violation { record: r.clone(), log_bound: bound.log_bound, reason });
    }
    out
}
