//! Point clouds, distance matrices and Vietoris-Rips filtrations.

use crate::complex::{FilteredComplex, Simplex};
use crate::error::{Error, Result};

/// Euclidean points of a common dimension, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    dim: usize,
    coords: Vec<f64>,
}

impl PointCloud {
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self> {
        let dim = points.first().ok_or(Error::EmptyPointCloud)?.len();
        if dim == 0 {
            return Err(Error::InvalidParameter("points must have at least one coordinate".into()));
        }
        let mut coords = Vec::with_capacity(dim * points.len());
        for (index, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::RaggedPointCloud {
                    index,
                    len: p.len(),
                    dim,
                });
            }
            if let Some(bad) = p.iter().find(|x| !x.is_finite()) {
                return Err(Error::InvalidParameter(format!(
                    "point {index} has non-finite coordinate {bad}"
                )));
            }
            coords.extend_from_slice(p);
        }
        Ok(PointCloud { dim, coords })
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.dim)
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.point(i)
            .iter()
            .zip(self.point(j))
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        let n = self.len();
        let mut entries = vec![0.0; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let d = self.distance(i, j);
                entries[i * n + j] = d;
                entries[j * n + i] = d;
            }
        }
        DistanceMatrix { n, entries }
    }
}

/// Symmetric, zero-diagonal, non-negative matrix. The triangle inequality
/// is not required.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<f64>,
}

const SYMMETRY_TOLERANCE: f64 = 1e-12;

impl DistanceMatrix {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare { row, len: r.len(), n });
            }
            entries.extend_from_slice(r);
        }
        for i in 0..n {
            if entries[i * n + i] != 0.0 {
                return Err(Error::NonZeroDiagonal(i));
            }
            for j in 0..n {
                let v = entries[i * n + j];
                if !(v >= 0.0) || !v.is_finite() {
                    return Err(Error::NegativeEntry { i, j });
                }
                if j > i && (v - entries[j * n + i]).abs() > SYMMETRY_TOLERANCE {
                    return Err(Error::AsymmetricMatrix { i, j });
                }
            }
        }
        // Symmetrise exactly so both triangles agree bit for bit.
        for i in 0..n {
            for j in i + 1..n {
                entries[j * n + i] = entries[i * n + j];
            }
        }
        Ok(DistanceMatrix { n, entries })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }
}

pub(crate) fn check_rips_parameters(max_edge_length: f64, max_dimension: usize) -> Result<()> {
    if !(max_edge_length >= 0.0) {
        return Err(Error::InvalidParameter(format!(
            "max edge length must be non-negative, got {max_edge_length}"
        )));
    }
    if max_dimension < 1 {
        return Err(Error::InvalidParameter("max dimension must be at least 1".into()));
    }
    Ok(())
}

/// Vietoris-Rips filtration: vertices at 0, an edge per pair within
/// `max_edge_length` valued at its length, and every clique up to
/// `max_dimension` valued at its longest edge.
///
/// Cliques are expanded through lower neighbours: a simplex whose largest
/// vertex is `v` is grown only by vertices below everything already in it
/// that are adjacent to all of its vertices.
pub fn rips_from_distance_matrix(
    distances: &DistanceMatrix,
    max_edge_length: f64,
    max_dimension: usize,
) -> Result<FilteredComplex> {
    check_rips_parameters(max_edge_length, max_dimension)?;
    let n = distances.len();
    let lower: Vec<Vec<u32>> = (0..n)
        .map(|v| {
            (0..v)
                .filter(|&u| distances.get(u, v) <= max_edge_length)
                .map(|u| u as u32)
                .collect()
        })
        .collect();

    let mut by_dim: Vec<Vec<(Vec<u32>, f64)>> = vec![Vec::new(); max_dimension + 1];
    for v in 0..n {
        let mut stack: Vec<u32> = vec![v as u32];
        expand(distances, &lower, &mut stack, &lower[v], 0.0, max_dimension, &mut by_dim);
    }

    let mut complex = FilteredComplex::new();
    for simplices in by_dim.iter_mut() {
        simplices.sort_by(|a, b| a.0.cmp(&b.0));
        for (vertices, value) in simplices.drain(..) {
            complex.insert(Simplex::new(vertices)?, value)?;
        }
    }
    Ok(complex)
}

fn expand(
    distances: &DistanceMatrix,
    lower: &[Vec<u32>],
    simplex: &mut Vec<u32>,
    candidates: &[u32],
    value: f64,
    max_dimension: usize,
    out: &mut Vec<Vec<(Vec<u32>, f64)>>,
) {
    let mut sorted = simplex.clone();
    sorted.sort_unstable();
    out[simplex.len() - 1].push((sorted, value));
    if simplex.len() > max_dimension {
        return;
    }
    for &u in candidates {
        let new_value = simplex
            .iter()
            .map(|&w| distances.get(u as usize, w as usize))
            .fold(value, f64::max);
        // Candidates adjacent to u as well, all below u.
        let next: Vec<u32> = candidates
            .iter()
            .copied()
            .filter(|&w| w < u && lower[u as usize].binary_search(&w).is_ok())
            .collect();
        simplex.push(u);
        expand(distances, lower, simplex, &next, new_value, max_dimension, out);
        simplex.pop();
    }
}

pub fn rips_from_point_cloud(
    points: &PointCloud,
    max_edge_length: f64,
    max_dimension: usize,
) -> Result<FilteredComplex> {
    rips_from_distance_matrix(&points.distance_matrix(), max_edge_length, max_dimension)
}
