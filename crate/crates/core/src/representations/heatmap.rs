use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Weight attached to the kernel of each diagram point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HeatMapMode {
    #[default]
    Constant,
    /// Weight `death - birth`.
    PersistenceWeighted,
    /// `+1` at `(birth, death)` and `-1` at the mirror point `(death, birth)`.
    SignedSymmetric,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HeatMapSpec {
    pub birth_range: (f64, f64),
    pub death_range: (f64, f64),
    /// Cells along the birth and death axes.
    pub resolution: (usize, usize),
    pub bandwidth: f64,
    /// Kernels are ignored beyond this many bandwidths; `f64::INFINITY`
    /// keeps every contribution.
    pub truncation: f64,
    pub mode: HeatMapMode,
}

impl HeatMapSpec {
    pub fn new(birth_range: (f64, f64), death_range: (f64, f64), resolution: (usize, usize), bandwidth: f64, mode: HeatMapMode) -> Self {
        HeatMapSpec {
            birth_range,
            death_range,
            resolution,
            bandwidth,
            truncation: 3.0,
            mode,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.bandwidth > 0.0 && self.bandwidth.is_finite()) {
            return Err(Error::BadBandwidth(self.bandwidth));
        }
        let ok = |(lo, hi): (f64, f64)| lo.is_finite() && hi.is_finite() && lo < hi;
        if !ok(self.birth_range) || !ok(self.death_range) {
            return Err(Error::InvalidParameter("heat map window must have lo < hi".into()));
        }
        if self.resolution.0 == 0 || self.resolution.1 == 0 {
            return Err(Error::InvalidParameter("heat map resolution must be at least 1".into()));
        }
        if !(self.truncation > 0.0) {
            return Err(Error::InvalidParameter("truncation radius must be positive".into()));
        }
        Ok(())
    }

    pub fn birth_center(&self, i: usize) -> f64 {
        let (lo, hi) = self.birth_range;
        lo + (i as f64 + 0.5) * (hi - lo) / self.resolution.0 as f64
    }

    pub fn death_center(&self, j: usize) -> f64 {
        let (lo, hi) = self.death_range;
        lo + (j as f64 + 0.5) * (hi - lo) / self.resolution.1 as f64
    }

    pub fn cell_area(&self) -> f64 {
        (self.birth_range.1 - self.birth_range.0) / self.resolution.0 as f64
            * (self.death_range.1 - self.death_range.0)
            / self.resolution.1 as f64
    }
}

/// Grid of kernel sums at cell centres; row `j` runs along the birth axis
/// at death centre `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct HeatMap {
    spec: HeatMapSpec,
    values: Vec<f64>,
}

impl HeatMap {
    pub fn spec(&self) -> &HeatMapSpec {
        &self.spec
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Value at birth cell `i`, death cell `j`.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[j * self.spec.resolution.0 + i]
    }
}

/// Sum of isotropic Gaussian kernels (normalised to unit mass) placed on
/// the finite points of a diagram and weighted according to the mode.
pub fn build_heat_map(points: &[(f64, f64)], spec: &HeatMapSpec) -> Result<HeatMap> {
    spec.validate()?;
    if let Some(&(b, d)) = points.iter().find(|(b, d)| !b.is_finite() || !d.is_finite()) {
        return Err(Error::BadInterval(b, d));
    }
    let (nx, ny) = spec.resolution;
    let sigma = spec.bandwidth;
    let norm = 1.0 / (2.0 * PI * sigma * sigma);
    let reach = spec.truncation * sigma;
    let mut values = vec![0.0; nx * ny];
    let mut add = |cx: f64, cy: f64, weight: f64| {
        for j in 0..ny {
            let dy = spec.death_center(j) - cy;
            if dy.abs() > reach {
                continue;
            }
            for i in 0..nx {
                let dx = spec.birth_center(i) - cx;
                let r2 = dx * dx + dy * dy;
                if r2 <= reach * reach {
                    values[j * nx + i] += weight * norm * (-r2 / (2.0 * sigma * sigma)).exp();
                }
            }
        }
    };
    for &(b, d) in points {
        match spec.mode {
            HeatMapMode::Constant => add(b, d, 1.0),
            HeatMapMode::PersistenceWeighted => add(b, d, d - b),
            HeatMapMode::SignedSymmetric => {
                add(b, d, 1.0);
                add(d, b, -1.0);
            }
        }
    }
    Ok(HeatMap { spec: *spec, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn square_spec(mode: HeatMapMode) -> HeatMapSpec {
        HeatMapSpec::new((-1.0, 5.0), (-1.0, 5.0), (60, 60), 0.4, mode)
    }

    #[test]
    fn empty_diagram_is_zero() {
        let h = build_heat_map(&[], &square_spec(HeatMapMode::Constant)).unwrap();
        assert!(h.values().iter().all(|&v| v == 0.0));
    }

    #[test]
    fn persistence_weighted_mass() {
        let mut spec = HeatMapSpec::new((-3.0, 7.0), (-3.0, 7.0), (100, 100), 0.4, HeatMapMode::PersistenceWeighted);
        spec.truncation = f64::INFINITY;
        let h = build_heat_map(&[(1.0, 3.0)], &spec).unwrap();
        let mass: f64 = h.values().iter().sum::<f64>() * spec.cell_area();
        // Ten bandwidths to every edge: the kernel mass inside is 1 to double precision.
        assert!((mass - 2.0).abs() < 1e-6);
    }

    #[test]
    fn signed_mode_is_antisymmetric() {
        let spec = square_spec(HeatMapMode::SignedSymmetric);
        let h = build_heat_map(&[(1.0, 3.0), (0.5, 1.2)], &spec).unwrap();
        for j in 0..60 {
            for i in 0..60 {
                assert!((h.get(i, j) + h.get(j, i)).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn bad_arguments() {
        let mut spec = square_spec(HeatMapMode::Constant);
        spec.bandwidth = 0.0;
        assert!(matches!(build_heat_map(&[], &spec), Err(Error::BadBandwidth(_))));
        let mut spec = square_spec(HeatMapMode::Constant);
        spec.resolution = (0, 3);
        assert!(build_heat_map(&[], &spec).is_err());
    }

    proptest! {
        #[test]
        fn union_is_sum(
            x in prop::collection::vec((0.0f64..4.0, 0.0f64..2.0).prop_map(|(b, l)| (b, b + l)), 0..5),
            y in prop::collection::vec((0.0f64..4.0, 0.0f64..2.0).prop_map(|(b, l)| (b, b + l)), 0..5),
        ) {
            for mode in [HeatMapMode::Constant, HeatMapMode::PersistenceWeighted, HeatMapMode::SignedSymmetric] {
                let mut spec = square_spec(mode);
                spec.resolution = (12, 12);
                let hx = build_heat_map(&x, &spec).unwrap();
                let hy = build_heat_map(&y, &spec).unwrap();
                let both: Vec<(f64, f64)> = x.iter().chain(&y).copied().collect();
                let hxy = build_heat_map(&both, &spec).unwrap();
                for k in 0..hxy.values().len() {
                    prop_assert!((hxy.values()[k] - hx.values()[k] - hy.values()[k]).abs() < 1e-12);
                }
                if mode != HeatMapMode::SignedSymmetric {
                    prop_assert!(hxy.values().iter().all(|&v| v >= 0.0));
                }
            }
        }
    }
}
