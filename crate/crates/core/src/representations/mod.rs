//! Functional summaries of persistence diagrams and a two-sample test.

mod heatmap;
mod landscape;
mod permutation;

pub use heatmap::{build_heat_map, HeatMap, HeatMapMode, HeatMapSpec};
pub use landscape::{average_landscapes, landscape_distance, triangle_function, Landscape};
pub use permutation::{permutation_test, PermutationOutcome};

use crate::error::{Error, Result};

/// Finite intervals of a diagram dimension. Infinite deaths are truncated
/// at `cutoff` when one is given and dropped otherwise.
pub fn finite_intervals(intervals: &[(f64, f64)], cutoff: Option<f64>) -> Result<Vec<(f64, f64)>> {
    let mut out = Vec::with_capacity(intervals.len());
    for &(b, d) in intervals {
        if !b.is_finite() || d.is_nan() || d < b {
            return Err(Error::BadInterval(b, d));
        }
        match (d.is_finite(), cutoff) {
            (true, _) => out.push((b, d)),
            (false, Some(c)) if c > b => out.push((b, c)),
            _ => {}
        }
    }
    Ok(out)
}
