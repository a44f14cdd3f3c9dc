use std::f64::consts::PI;

use super::cubical::GridBitmap;
use super::rips::PointCloud;
use crate::error::{Error, Result};

/// Axis-aligned grid of `steps` cells per axis covering the given ranges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x_range: (f64, f64),
    pub y_range: (f64, f64),
    pub steps: (usize, usize),
}

impl GridSpec {
    fn validate(&self) -> Result<()> {
        let ok = |(lo, hi): (f64, f64)| lo.is_finite() && hi.is_finite() && lo < hi;
        if !ok(self.x_range) || !ok(self.y_range) || self.steps.0 == 0 || self.steps.1 == 0 {
            return Err(Error::InvalidParameter(format!("bad grid {self:?}")));
        }
        Ok(())
    }

    /// Centre of cell `(i, j)`.
    pub fn center(&self, i: usize, j: usize) -> (f64, f64) {
        let (x0, x1) = self.x_range;
        let (y0, y1) = self.y_range;
        (
            x0 + (i as f64 + 0.5) * (x1 - x0) / self.steps.0 as f64,
            y0 + (j as f64 + 0.5) * (y1 - y0) / self.steps.1 as f64,
        )
    }
}

/// Gaussian kernel density estimate of planar points, averaged over the
/// sample.
pub fn gaussian_density(points: &PointCloud, bandwidth: f64, x: f64, y: f64) -> f64 {
    let norm = 1.0 / (2.0 * PI * bandwidth * bandwidth);
    let s: f64 = points
        .iter()
        .map(|p| {
            let r2 = (p[0] - x).powi(2) + (p[1] - y).powi(2);
            (-r2 / (2.0 * bandwidth * bandwidth)).exp()
        })
        .sum();
    norm * s / points.len() as f64
}

/// Bitmap of negated density values at the cell centres, for sublevel
/// filtrations in which dense regions enter first.
pub fn kde_grid_filtration(points: &PointCloud, grid: GridSpec, bandwidth: f64) -> Result<GridBitmap> {
    if points.is_empty() {
        return Err(Error::EmptyPointCloud);
    }
    if points.dim() != 2 {
        return Err(Error::InvalidParameter(format!(
            "density grids need planar points, got dimension {}",
            points.dim()
        )));
    }
    if !(bandwidth > 0.0 && bandwidth.is_finite()) {
        return Err(Error::BadBandwidth(bandwidth));
    }
    grid.validate()?;
    let (nx, ny) = grid.steps;
    let mut values = Vec::with_capacity(nx * ny);
    for j in 0..ny {
        for i in 0..nx {
            let (x, y) = grid.center(i, j);
            values.push(-gaussian_density(points, bandwidth, x, y));
        }
    }
    GridBitmap::new(vec![nx, ny], values)
}
