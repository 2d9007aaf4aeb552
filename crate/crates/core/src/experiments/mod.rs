//! Scans, counting experiments, figure data and free-region checks.

mod config;
mod count;
mod figure;
mod io;
mod scan;
mod verify;

pub use config::RunConfig;
pub use count::{count_in_box, count_report, fit_slope, CountEntry, CountReport};
pub use figure::{band_track, curves, figure_pipeline, run_meta, CurvePoint, FigureId};
pub use io::{read_csv, write_csv, META_PREFIX};
pub use scan::{
    finalize, record, scan_spectrum, seeds, solve_tasks, solve_window, tile_windows, ScanOptions,
    SpectrumRecord, DEDUP_DISTANCE, DESK_RE_MAX, ELLIPTIC_CUTOFF,
};
pub use verify::{verify_free_regions, Violation, BAND_GAP_TOLERANCE, LOG_MARGIN, VERIFY_RE_MIN};
