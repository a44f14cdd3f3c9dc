//! Cells, boundary operators and the filtered complex container.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// An abstract simplex stored as its strictly increasing vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<u32>);

impl Simplex {
    /// Sorts the vertices; duplicates and empty lists are rejected.
    pub fn new(vertices: impl Into<Vec<u32>>) -> Result<Self> {
        let mut vertices = vertices.into();
        if vertices.is_empty() {
            return Err(Error::InvalidSimplex("no vertices".into()));
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSimplex(format!(
                "repeated vertex in {vertices:?}"
            )));
        }
        Ok(Simplex(vertices))
    }

    pub fn vertex(v: u32) -> Self {
        Simplex(vec![v])
    }

    pub fn edge(a: u32, b: u32) -> Result<Self> {
        Simplex::new(vec![a, b])
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// Faces obtained by deleting one vertex at a time, in vertex order.
    pub fn boundary(&self) -> Vec<Simplex> {
        if self.0.len() == 1 {
            return Vec::new();
        }
        (0..self.0.len())
            .map(|skip| {
                Simplex(
                    self.0
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != skip)
                        .map(|(_, &v)| v)
                        .collect(),
                )
            })
            .collect()
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// An elementary cube in doubled coordinates.
///
/// Coordinate `2n` is the degenerate interval `[n, n]` and `2n + 1` is the
/// unit interval `[n, n + 1]`, so the cube's dimension is its number of odd
/// coordinates and faces are found by integer arithmetic alone.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementaryCube(Vec<i64>);

impl ElementaryCube {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        ElementaryCube(coords.into())
    }

    /// Builds a cube from `(lo, hi)` interval endpoints, each either
    /// `[n, n]` or `[n, n + 1]`.
    pub fn from_intervals(intervals: &[(i64, i64)]) -> Result<Self> {
        intervals
            .iter()
            .map(|&(lo, hi)| match hi - lo {
                0 => Ok(2 * lo),
                1 => Ok(2 * lo + 1),
                _ => Err(Error::InvalidParameter(format!(
                    "[{lo}, {hi}] is not an elementary interval"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(ElementaryCube)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn ambient_dim(&self) -> usize {
        self.0.len()
    }

    pub fn dim(&self) -> usize {
        self.0.iter().filter(|c| c.rem_euclid(2) == 1).count()
    }

    /// Interval endpoints of every factor.
    pub fn intervals(&self) -> Vec<(i64, i64)> {
        self.0
            .iter()
            .map(|&c| {
                let lo = c.div_euclid(2);
                (lo, lo + c.rem_euclid(2))
            })
            .collect()
    }

    /// For every non-degenerate factor, the two cubes with that factor
    /// collapsed to its lower and upper endpoint. Degenerate factors are
    /// skipped.
    pub fn boundary(&self) -> Vec<ElementaryCube> {
        let mut faces = Vec::with_capacity(2 * self.dim());
        for (axis, &c) in self.0.iter().enumerate() {
            if c.rem_euclid(2) == 1 {
                for replacement in [c - 1, c + 1] {
                    let mut coords = self.0.clone();
                    coords[axis] = replacement;
                    faces.push(ElementaryCube(coords));
                }
            }
        }
        faces
    }
}

impl fmt::Display for ElementaryCube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (lo, hi)) in self.intervals().into_iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "[{lo},{hi}]")?;
        }
        Ok(())
    }
}

/// Canonical identity of a cell. Simplices order before cubes, and within a
/// kind keys compare lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellKey {
    Simplex(Simplex),
    Cube(ElementaryCube),
}

impl CellKey {
    pub fn dim(&self) -> usize {
        match self {
            CellKey::Simplex(s) => s.dim(),
            CellKey::Cube(c) => c.dim(),
        }
    }

    pub fn boundary(&self) -> Vec<CellKey> {
        match self {
            CellKey::Simplex(s) => s.boundary().into_iter().map(CellKey::Simplex).collect(),
            CellKey::Cube(c) => c.boundary().into_iter().map(CellKey::Cube).collect(),
        }
    }

    pub fn as_simplex(&self) -> Option<&Simplex> {
        match self {
            CellKey::Simplex(s) => Some(s),
            CellKey::Cube(_) => None,
        }
    }

    pub fn as_cube(&self) -> Option<&ElementaryCube> {
        match self {
            CellKey::Cube(c) => Some(c),
            CellKey::Simplex(_) => None,
        }
    }

    fn kind_matches(&self, other: &CellKey) -> bool {
        match (self, other) {
            (CellKey::Simplex(_), CellKey::Simplex(_)) => true,
            (CellKey::Cube(a), CellKey::Cube(b)) => a.ambient_dim() == b.ambient_dim(),
            _ => false,
        }
    }
}

impl From<Simplex> for CellKey {
    fn from(s: Simplex) -> Self {
        CellKey::Simplex(s)
    }
}

impl From<ElementaryCube> for CellKey {
    fn from(c: ElementaryCube) -> Self {
        CellKey::Cube(c)
    }
}

impl fmt::Display for CellKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellKey::Simplex(s) => s.fmt(f),
            CellKey::Cube(c) => c.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cell {
    key: CellKey,
    dim: usize,
    filtration: f64,
    boundary: Vec<usize>,
}

impl Cell {
    pub fn key(&self) -> &CellKey {
        &self.key
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn filtration(&self) -> f64 {
        self.filtration
    }

    /// Indices of the codimension-one faces.
    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }
}

/// Cells with filtration values and boundary index lists.
///
/// Cells are only ever appended after all of their faces, so a face index is
/// always smaller than the index of any cell it bounds. Filtration order is a
/// separate property established by [`FilteredComplex::sorted`].
#[derive(Debug, Clone, Default)]
pub struct FilteredComplex {
    cells: Vec<Cell>,
    index: HashMap<CellKey, usize>,
}

impl FilteredComplex {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, index: usize) -> &Cell {
        &self.cells[index]
    }

    pub fn index_of(&self, key: &CellKey) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn filtration_of(&self, key: &CellKey) -> Option<f64> {
        self.index_of(key).map(|i| self.cells[i].filtration)
    }

    /// Largest cell dimension, `None` for the empty complex.
    pub fn max_dim(&self) -> Option<usize> {
        self.cells.iter().map(|c| c.dim).max()
    }

    /// Inserts a cell whose faces are all present with values not above
    /// `filtration`.
    pub fn insert(&mut self, key: impl Into<CellKey>, filtration: f64) -> Result<usize> {
        self.insert_cell(key.into(), filtration, false)
    }

    /// Inserts a cell together with any missing faces. Faces already present
    /// with a larger value are lowered to `filtration`.
    pub fn insert_with_closure(&mut self, key: impl Into<CellKey>, filtration: f64) -> Result<usize> {
        self.insert_cell(key.into(), filtration, true)
    }

    fn insert_cell(&mut self, key: CellKey, filtration: f64, closure: bool) -> Result<usize> {
        if !filtration.is_finite() {
            return Err(Error::NonFiniteFiltration(filtration));
        }
        if let Some(first) = self.cells.first() {
            if !first.key.kind_matches(&key) {
                return Err(Error::MixedCellKinds(key.to_string()));
            }
        }

        let faces = key.boundary();
        let mut face_indices = Vec::with_capacity(faces.len());
        if closure {
            for face in faces {
                face_indices.push(self.insert_cell(face, filtration, true)?);
            }
        } else {
            let would_be = self.index_of(&key).unwrap_or(self.cells.len());
            for face in &faces {
                let idx = self
                    .index_of(face)
                    .ok_or_else(|| Error::MissingFace(face.to_string()))?;
                if self.cells[idx].filtration > filtration {
                    return Err(Error::FiltrationViolation {
                        cell: would_be,
                        face: idx,
                    });
                }
                face_indices.push(idx);
            }
        }

        if let Some(idx) = self.index_of(&key) {
            let cell = &mut self.cells[idx];
            if filtration < cell.filtration {
                cell.filtration = filtration;
            }
            return Ok(idx);
        }
        let idx = self.cells.len();
        self.index.insert(key.clone(), idx);
        self.cells.push(Cell {
            dim: key.dim(),
            key,
            filtration,
            boundary: face_indices,
        });
        Ok(idx)
    }

    /// Appends a cell whose faces are already present; used by builders that
    /// enumerate cells in a closure-respecting order themselves.
    pub(crate) fn push_unchecked(&mut self, key: CellKey, filtration: f64, boundary: Vec<usize>) -> usize {
        debug_assert!(boundary.iter().all(|&b| b < self.cells.len()));
        let idx = self.cells.len();
        self.index.insert(key.clone(), idx);
        self.cells.push(Cell {
            dim: key.dim(),
            key,
            filtration,
            boundary,
        });
        idx
    }

    /// Reports the first cell (by index) whose value is below one of its
    /// faces.
    pub fn validate_filtration(&self) -> Result<()> {
        for (i, cell) in self.cells.iter().enumerate() {
            for &b in &cell.boundary {
                if cell.filtration < self.cells[b].filtration {
                    return Err(Error::FiltrationViolation { cell: i, face: b });
                }
            }
        }
        Ok(())
    }

    fn order(a: &Cell, b: &Cell) -> Ordering {
        a.filtration
            .total_cmp(&b.filtration)
            .then(a.dim.cmp(&b.dim))
            .then_with(|| a.key.cmp(&b.key))
    }

    /// True when cells are in canonical (filtration, dimension, key) order.
    pub fn is_sorted(&self) -> bool {
        self.cells
            .windows(2)
            .all(|w| Self::order(&w[0], &w[1]) == Ordering::Less)
    }

    /// Returns the complex in canonical order along with the map from old to
    /// new cell indices. Ties in filtration are broken by dimension, then by
    /// key, so faces always precede their cofaces.
    pub fn sorted(&self) -> Result<(FilteredComplex, Vec<usize>)> {
        self.validate_filtration()?;
        let mut perm: Vec<usize> = (0..self.cells.len()).collect();
        perm.sort_by(|&a, &b| Self::order(&self.cells[a], &self.cells[b]));
        let mut old_to_new = vec![0; perm.len()];
        for (new, &old) in perm.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut out = FilteredComplex {
            cells: Vec::with_capacity(perm.len()),
            index: HashMap::with_capacity(perm.len()),
        };
        for &old in &perm {
            let cell = &self.cells[old];
            let mut boundary: Vec<usize> = cell.boundary.iter().map(|&b| old_to_new[b]).collect();
            boundary.sort_unstable();
            out.push_unchecked(cell.key.clone(), cell.filtration, boundary);
        }
        Ok((out, old_to_new))
    }

    fn with_filtrations(&self, values: Vec<f64>) -> FilteredComplex {
        let mut out = self.clone();
        for (cell, v) in out.cells.iter_mut().zip(values) {
            cell.filtration = v;
        }
        out
    }

    /// Lower-star filtration: each cell takes the maximum value over its
    /// vertices.
    pub fn lower_star_from_vertices<F>(&self, vertex_value: F) -> Result<FilteredComplex>
    where
        F: Fn(&CellKey) -> Option<f64>,
    {
        let mut values = Vec::with_capacity(self.cells.len());
        for cell in &self.cells {
            let v = if cell.dim == 0 {
                let v = vertex_value(&cell.key)
                    .ok_or_else(|| Error::MissingVertexValue(cell.key.to_string()))?;
                if !v.is_finite() {
                    return Err(Error::NonFiniteFiltration(v));
                }
                v
            } else {
                cell.boundary
                    .iter()
                    .map(|&b| values[b])
                    .fold(f64::NEG_INFINITY, f64::max)
            };
            values.push(v);
        }
        Ok(self.with_filtrations(values))
    }

    /// Lower-star filtration for simplicial complexes from a vertex-id map.
    pub fn lower_star_from_vertex_map(&self, values: &HashMap<u32, f64>) -> Result<FilteredComplex> {
        self.lower_star_from_vertices(|key| match key {
            CellKey::Simplex(s) => values.get(&s.vertices()[0]).copied(),
            CellKey::Cube(_) => None,
        })
    }

    /// Each maximal cell (one with no cofaces) takes its given value; every
    /// other cell takes the minimum over the maximal cells containing it.
    pub fn filtration_from_top_cells<F>(&self, top_value: F) -> Result<FilteredComplex>
    where
        F: Fn(&CellKey) -> Option<f64>,
    {
        let n = self.cells.len();
        let mut values = vec![f64::INFINITY; n];
        let mut has_coface = vec![false; n];
        for cell in &self.cells {
            for &b in &cell.boundary {
                has_coface[b] = true;
            }
        }
        for i in (0..n).rev() {
            if !has_coface[i] {
                let v = top_value(&self.cells[i].key)
                    .ok_or_else(|| Error::MissingTopCellValue(self.cells[i].key.to_string()))?;
                if !v.is_finite() {
                    return Err(Error::NonFiniteFiltration(v));
                }
                values[i] = v;
            }
            let v = values[i];
            for &b in &self.cells[i].boundary {
                if v < values[b] {
                    values[b] = v;
                }
            }
        }
        Ok(self.with_filtrations(values))
    }

    /// [`Self::filtration_from_top_cells`] with values looked up in a map.
    pub fn filtration_from_top_cell_map(&self, values: &HashMap<CellKey, f64>) -> Result<FilteredComplex> {
        self.filtration_from_top_cells(|key| values.get(key).copied())
    }
}
