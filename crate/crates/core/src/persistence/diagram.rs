use std::cmp::Ordering;

use super::matrix::ReducedMatrix;

/// One point of a persistence diagram. `death` is `f64::INFINITY` for
/// classes that never die.
#[derive(Debug, Clone, PartialEq)]
pub struct PersistencePoint {
    pub dim: usize,
    pub birth: f64,
    pub death: f64,
    /// Column (cell) index that created the class, when known.
    pub birth_cell: Option<usize>,
    /// Column (cell) index that killed the class.
    pub death_cell: Option<usize>,
    /// Cell indices of a cycle representing the class.
    pub representative: Option<Vec<usize>>,
}

impl PersistencePoint {
    pub fn new(dim: usize, birth: f64, death: f64) -> Self {
        PersistencePoint {
            dim,
            birth,
            death,
            birth_cell: None,
            death_cell: None,
            representative: None,
        }
    }

    pub fn is_essential(&self) -> bool {
        self.death == f64::INFINITY
    }

    pub fn persistence(&self) -> f64 {
        self.death - self.birth
    }

    fn cmp_canonical(&self, other: &Self) -> Ordering {
        self.dim
            .cmp(&other.dim)
            .then(self.birth.total_cmp(&other.birth))
            .then(self.death.total_cmp(&other.death))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct DiagramOptions {
    /// Keep intervals with birth equal to death.
    pub keep_zero_length: bool,
    /// Only report homology in dimensions strictly below this bound.
    pub dim_bound: Option<usize>,
}

/// Multiset of persistence intervals, kept sorted by (dim, birth, death).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PersistenceDiagram {
    points: Vec<PersistencePoint>,
}

impl PersistenceDiagram {
    pub fn new(mut points: Vec<PersistencePoint>) -> Self {
        points.sort_by(PersistencePoint::cmp_canonical);
        PersistenceDiagram { points }
    }

    /// Builds a diagram from `(dim, birth, death)` triples.
    pub fn from_triples(triples: impl IntoIterator<Item = (usize, f64, f64)>) -> Self {
        Self::new(
            triples
                .into_iter()
                .map(|(d, b, e)| PersistencePoint::new(d, b, e))
                .collect(),
        )
    }

    /// Reads the diagram off a reduced matrix: each pair `(i, j)` yields a
    /// class of dimension `dims[i]` born at `filtrations[i]` and dying at
    /// `filtrations[j]`; every zero column that is never a low yields an
    /// essential class.
    pub fn from_reduced(reduced: &ReducedMatrix, options: &DiagramOptions) -> Self {
        let dims = reduced.dims();
        let filt = reduced.filtrations();
        let in_bound = |d: usize| options.dim_bound.map_or(true, |b| d < b);
        let representative = |i: usize| reduced.chain(i).map(|c| c.to_vec());
        let mut points = Vec::new();
        for (i, j) in reduced.pairs() {
            if !in_bound(dims[i]) {
                continue;
            }
            if filt[i] == filt[j] && !options.keep_zero_length {
                continue;
            }
            points.push(PersistencePoint {
                dim: dims[i],
                birth: filt[i],
                death: filt[j],
                birth_cell: Some(i),
                death_cell: Some(j),
                representative: representative(i),
            });
        }
        for i in reduced.essential() {
            if !in_bound(dims[i]) {
                continue;
            }
            points.push(PersistencePoint {
                dim: dims[i],
                birth: filt[i],
                death: f64::INFINITY,
                birth_cell: Some(i),
                death_cell: None,
                representative: representative(i),
            });
        }
        Self::new(points)
    }

    pub fn points(&self) -> &[PersistencePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn max_dim(&self) -> Option<usize> {
        self.points.iter().map(|p| p.dim).max()
    }

    /// `(birth, death)` pairs of one dimension, including essential ones.
    pub fn intervals(&self, dim: usize) -> Vec<(f64, f64)> {
        self.points
            .iter()
            .filter(|p| p.dim == dim)
            .map(|p| (p.birth, p.death))
            .collect()
    }

    /// Finite `(birth, death)` pairs of one dimension.
    pub fn finite_intervals(&self, dim: usize) -> Vec<(f64, f64)> {
        self.points
            .iter()
            .filter(|p| p.dim == dim && !p.is_essential())
            .map(|p| (p.birth, p.death))
            .collect()
    }

    pub fn in_dimension(&self, dim: usize) -> impl Iterator<Item = &PersistencePoint> {
        self.points.iter().filter(move |p| p.dim == dim)
    }

    /// Number of classes that never die, per dimension.
    pub fn essential_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.max_dim().map_or(0, |d| d + 1)];
        for p in self.points.iter().filter(|p| p.is_essential()) {
            counts[p.dim] += 1;
        }
        counts
    }

    /// Betti numbers of the sublevel complex at `t`: classes with
    /// `birth <= t < death`.
    pub fn betti_at(&self, t: f64) -> Vec<usize> {
        let mut counts = vec![0; self.max_dim().map_or(0, |d| d + 1)];
        for p in &self.points {
            if p.birth <= t && t < p.death {
                counts[p.dim] += 1;
            }
        }
        counts
    }

    /// Triples `(dim, birth, death)` in canonical order.
    pub fn triples(&self) -> Vec<(usize, f64, f64)> {
        self.points.iter().map(|p| (p.dim, p.birth, p.death)).collect()
    }
}

impl ReducedMatrix {
    /// Betti numbers of the sublevel complex at `t`, one entry per cell
    /// dimension present in the matrix.
    pub fn betti_at(&self, t: f64) -> Vec<usize> {
        let dims = self.dims();
        let filt = self.filtrations();
        let mut counts = vec![0; dims.iter().max().map_or(0, |d| d + 1)];
        for (i, j) in self.pairs() {
            if filt[i] <= t && t < filt[j] {
                counts[dims[i]] += 1;
            }
        }
        for i in self.essential() {
            if filt[i] <= t {
                counts[dims[i]] += 1;
            }
        }
        counts
    }
}
