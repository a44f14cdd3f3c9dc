//! Cubical complexes from bitmaps of top-dimensional cubes, random
//! occupancy bitmaps and percolation sweeps.

use rand::Rng as _;
use rayon::prelude::*;

use crate::complex::{CellKey, ElementaryCube, FilteredComplex};
use crate::error::{Error, Result};
use crate::persistence;
use crate::rng::{derive_seed, rng_from_seed};

/// Values of top-dimensional cubes on a grid, first axis fastest.
#[derive(Debug, Clone, PartialEq)]
pub struct GridBitmap {
    dims: Vec<usize>,
    values: Vec<f64>,
}

impl GridBitmap {
    pub fn new(dims: Vec<usize>, values: Vec<f64>) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::InvalidParameter(format!(
                "grid extents must be positive, got {dims:?}"
            )));
        }
        let expected: usize = dims.iter().product();
        if values.len() != expected {
            return Err(Error::SizeMismatch {
                expected,
                actual: values.len(),
            });
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::NonFiniteFiltration(*bad));
        }
        Ok(GridBitmap { dims, values })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Value of the top cube whose lower corner is `position`.
    pub fn get(&self, position: &[usize]) -> f64 {
        let mut idx = 0;
        let mut stride = 1;
        for (p, d) in position.iter().zip(&self.dims) {
            idx += p * stride;
            stride *= d;
        }
        self.values[idx]
    }

    pub fn is_binary(&self) -> bool {
        self.values.iter().all(|&v| v == 0.0 || v == 1.0)
    }
}

/// How bitmap values are turned into a complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BitmapMode {
    /// Full grid; top cubes take their values and every other cube the
    /// minimum over the top cubes containing it.
    #[default]
    Sublevel,
    /// Values must be 0 or 1; only cubes with value 1 and their faces are
    /// present, all at filtration 0.
    Presence,
}

/// Dense indexing of all cubes of the grid in doubled coordinates.
struct DoubledGrid {
    extents: Vec<usize>,
    strides: Vec<usize>,
    len: usize,
}

impl DoubledGrid {
    fn new(dims: &[usize]) -> Self {
        let extents: Vec<usize> = dims.iter().map(|d| 2 * d + 1).collect();
        let mut strides = Vec::with_capacity(extents.len());
        let mut len = 1;
        for e in &extents {
            strides.push(len);
            len *= e;
        }
        DoubledGrid { extents, strides, len }
    }

    fn coords(&self, mut idx: usize) -> Vec<usize> {
        self.extents
            .iter()
            .map(|e| {
                let c = idx % e;
                idx /= e;
                c
            })
            .collect()
    }

    fn dim_of(&self, idx: usize) -> usize {
        self.coords(idx).iter().filter(|c| *c % 2 == 1).count()
    }

    fn top_cell_index(&self, bitmap_idx: usize, dims: &[usize]) -> usize {
        let mut rest = bitmap_idx;
        let mut idx = 0;
        for (a, d) in dims.iter().enumerate() {
            idx += (2 * (rest % d) + 1) * self.strides[a];
            rest /= d;
        }
        idx
    }

    /// For every cube, combines the values of the top cubes containing it,
    /// one axis at a time.
    fn propagate<T: Copy>(&self, values: &mut [T], combine: impl Fn(T, T) -> T) {
        for axis in 0..self.extents.len() {
            let stride = self.strides[axis];
            let extent = self.extents[axis];
            for idx in 0..self.len {
                let c = (idx / stride) % extent;
                if c % 2 == 1 {
                    continue;
                }
                let v = match (c > 0, c + 1 < extent) {
                    (true, true) => combine(values[idx - stride], values[idx + stride]),
                    (true, false) => values[idx - stride],
                    (false, true) => values[idx + stride],
                    (false, false) => unreachable!("extent is at least 3"),
                };
                values[idx] = v;
            }
        }
    }

    /// Builds the complex from the cubes flagged in `present`, faces first.
    fn build(&self, present: &[bool], values: &[f64]) -> FilteredComplex {
        let k = self.extents.len();
        let mut by_dim: Vec<Vec<usize>> = vec![Vec::new(); k + 1];
        for idx in (0..self.len).filter(|&i| present[i]) {
            by_dim[self.dim_of(idx)].push(idx);
        }
        let mut position = vec![usize::MAX; self.len];
        let mut complex = FilteredComplex::new();
        for cells in &by_dim {
            for &idx in cells {
                let coords = self.coords(idx);
                let mut boundary = Vec::with_capacity(2 * k);
                for (axis, &c) in coords.iter().enumerate() {
                    if c % 2 == 1 {
                        let stride = self.strides[axis];
                        boundary.push(position[idx - stride]);
                        boundary.push(position[idx + stride]);
                    }
                }
                let key = CellKey::Cube(ElementaryCube::new(
                    coords.iter().map(|&c| c as i64).collect::<Vec<_>>(),
                ));
                position[idx] = complex.push_unchecked(key, values[idx], boundary);
            }
        }
        complex
    }
}

/// Cubical complex of a bitmap. Cube coordinates are doubled, with the
/// grid's lower corner at the origin.
pub fn cubical_from_bitmap(bitmap: &GridBitmap, mode: BitmapMode) -> Result<FilteredComplex> {
    let grid = DoubledGrid::new(&bitmap.dims);
    match mode {
        BitmapMode::Sublevel => {
            let mut values = vec![f64::INFINITY; grid.len];
            for (i, &v) in bitmap.values.iter().enumerate() {
                values[grid.top_cell_index(i, &bitmap.dims)] = v;
            }
            grid.propagate(&mut values, f64::min);
            Ok(grid.build(&vec![true; grid.len], &values))
        }
        BitmapMode::Presence => {
            if !bitmap.is_binary() {
                return Err(Error::InvalidParameter(
                    "presence bitmaps must contain only 0 and 1".into(),
                ));
            }
            let mut present = vec![false; grid.len];
            for (i, &v) in bitmap.values.iter().enumerate() {
                present[grid.top_cell_index(i, &bitmap.dims)] = v == 1.0;
            }
            grid.propagate(&mut present, |a, b| a || b);
            Ok(grid.build(&present, &vec![0.0; grid.len]))
        }
    }
}

/// Binary bitmap with each top cube present independently with
/// probability `p`.
pub fn random_cubical(dims: &[usize], p: f64, seed: u64) -> Result<GridBitmap> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::BadProbability(p));
    }
    let count: usize = dims.iter().product();
    let mut rng = rng_from_seed(seed);
    let values = (0..count)
        .map(|_| if rng.gen::<f64>() < p { 1.0 } else { 0.0 })
        .collect();
    GridBitmap::new(dims.to_vec(), values)
}

/// Distance to the unit circle sampled on a `(2n+1)`-square grid over
/// `[-2, 2]^2`, with cell `i` at `x = 4i/(2n+1) - 2`.
pub fn circle_distance_bitmap(n: usize) -> GridBitmap {
    let side = 2 * n + 1;
    let coord = |i: usize| i as f64 / side as f64 * 4.0 - 2.0;
    let mut values = Vec::with_capacity(side * side);
    for j in 0..side {
        for i in 0..side {
            let (x, y) = (coord(i), coord(j));
            values.push(((x * x + y * y).sqrt() - 1.0).abs());
        }
    }
    GridBitmap::new(vec![side, side], values).expect("extents match the value count")
}

#[derive(Debug, Clone, PartialEq)]
pub struct PercolationRow {
    pub p: f64,
    /// Mean Betti numbers in dimensions `0..dims.len()`.
    pub mean_betti: Vec<f64>,
}

/// Seed of one percolation trial.
pub fn percolation_trial_seed(seed: u64, p_index: usize, trial: usize) -> u64 {
    derive_seed(seed, &[p_index as u64, trial as u64])
}

/// Betti numbers `0..dims.len()` of the presence complex of a bitmap.
pub fn presence_betti(bitmap: &GridBitmap) -> Result<Vec<usize>> {
    let complex = cubical_from_bitmap(bitmap, BitmapMode::Presence)?;
    let mut betti = persistence::betti_numbers(&complex)?;
    betti.resize(bitmap.dims.len(), 0);
    Ok(betti)
}

/// Averages Betti numbers of random presence complexes over `trials`
/// independent bitmaps for each probability in `p_grid`.
pub fn percolation_sweep(dims: &[usize], p_grid: &[f64], trials: usize, seed: u64) -> Result<Vec<PercolationRow>> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    if let Some(&bad) = p_grid.iter().find(|p| !(0.0..=1.0).contains(*p)) {
        return Err(Error::BadProbability(bad));
    }
    if p_grid.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidParameter("probability grid must be sorted".into()));
    }
    GridBitmap::new(dims.to_vec(), vec![0.0; dims.iter().product()])?;

    let jobs: Vec<(usize, usize)> = (0..p_grid.len())
        .flat_map(|pi| (0..trials).map(move |t| (pi, t)))
        .collect();
    let results: Vec<Vec<usize>> = jobs
        .par_iter()
        .map(|&(pi, t)| {
            let bitmap = random_cubical(dims, p_grid[pi], percolation_trial_seed(seed, pi, t))?;
            presence_betti(&bitmap)
        })
        .collect::<Result<_>>()?;

    Ok(p_grid
        .iter()
        .enumerate()
        .map(|(pi, &p)| {
            let mut sums = vec![0usize; dims.len()];
            for betti in &results[pi * trials..(pi + 1) * trials] {
                for (s, b) in sums.iter_mut().zip(betti) {
                    *s += b;
                }
            }
            PercolationRow {
                p,
                mean_betti: sums.iter().map(|&s| s as f64 / trials as f64).collect(),
            }
        })
        .collect())
}
