use crate::complex::FilteredComplex;
use crate::error::{Error, Result};

/// Sparse Z2 boundary matrix in filtration order. Column `i` holds the
/// strictly increasing row indices of the faces of cell `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryMatrix {
    columns: Vec<Vec<usize>>,
    dims: Vec<usize>,
    filtrations: Vec<f64>,
}

/// How a conflicting earlier column is located during reduction.
///
/// Lows of already reduced columns are unique, so every strategy finds the
/// same column; the scans exist to check that claim against the indexed
/// lookup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConflictSearch {
    /// Row-indexed pivot table, O(1) per lookup.
    #[default]
    PivotTable,
    /// Linear scan over earlier columns from the left.
    ScanLeftToRight,
    /// Linear scan over earlier columns from the right.
    ScanRightToLeft,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ReduceOptions {
    /// Record which columns were added into each column (the V matrix),
    /// needed for cycle representatives.
    pub track_chains: bool,
    pub search: ConflictSearch,
}

impl BoundaryMatrix {
    /// Builds the matrix of a complex already in canonical order.
    pub fn from_complex(complex: &FilteredComplex) -> Result<Self> {
        let cells = complex.cells();
        if let Some(i) = cells.windows(2).position(|w| {
            w[0].filtration()
                .total_cmp(&w[1].filtration())
                .then(w[0].dim().cmp(&w[1].dim()))
                .then_with(|| w[0].key().cmp(w[1].key()))
                .is_ge()
        }) {
            return Err(Error::UnsortedComplex(i + 1));
        }
        let columns = cells
            .iter()
            .map(|c| {
                let mut col = c.boundary().to_vec();
                col.sort_unstable();
                col
            })
            .collect();
        Ok(BoundaryMatrix {
            columns,
            dims: cells.iter().map(|c| c.dim()).collect(),
            filtrations: cells.iter().map(|c| c.filtration()).collect(),
        })
    }

    /// Builds a matrix from raw columns, checking that every entry refers to
    /// an earlier column of dimension one less.
    pub fn from_columns(columns: Vec<Vec<usize>>, dims: Vec<usize>, filtrations: Vec<f64>) -> Result<Self> {
        if columns.len() != dims.len() || columns.len() != filtrations.len() {
            return Err(Error::InvalidParameter(
                "columns, dims and filtrations differ in length".into(),
            ));
        }
        let mut columns = columns;
        for (i, col) in columns.iter_mut().enumerate() {
            col.sort_unstable();
            if col.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParameter(format!("column {i} repeats an entry")));
            }
            for &r in col.iter() {
                if r >= i || dims[r] + 1 != dims[i] || filtrations[r] > filtrations[i] {
                    return Err(Error::UnsortedComplex(i));
                }
            }
        }
        Ok(BoundaryMatrix {
            columns,
            dims,
            filtrations,
        })
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn column(&self, i: usize) -> &[usize] {
        &self.columns[i]
    }

    pub fn columns(&self) -> &[Vec<usize>] {
        &self.columns
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn filtrations(&self) -> &[f64] {
        &self.filtrations
    }

    /// Standard left-to-right column reduction over Z2.
    pub fn reduce(&self) -> ReducedMatrix {
        self.reduce_with(ReduceOptions::default())
    }

    pub fn reduce_with(&self, options: ReduceOptions) -> ReducedMatrix {
        let n = self.columns.len();
        let mut columns = self.columns.clone();
        let mut chains: Option<Vec<Vec<usize>>> =
            options.track_chains.then(|| (0..n).map(|i| vec![i]).collect());
        let mut low: Vec<Option<usize>> = vec![None; n];
        let mut pivot_of_row: Vec<Option<usize>> = vec![None; n];
        let mut scratch = Vec::new();

        for i in 0..n {
            while let Some(l) = columns[i].last().copied() {
                let conflict = match options.search {
                    ConflictSearch::PivotTable => pivot_of_row[l],
                    ConflictSearch::ScanLeftToRight => (0..i).find(|&j| low[j] == Some(l)),
                    ConflictSearch::ScanRightToLeft => (0..i).rev().find(|&j| low[j] == Some(l)),
                };
                let Some(j) = conflict else { break };
                let (head, tail) = columns.split_at_mut(i);
                add_into(&mut tail[0], &head[j], &mut scratch);
                if let Some(chains) = chains.as_mut() {
                    let (head, tail) = chains.split_at_mut(i);
                    add_into(&mut tail[0], &head[j], &mut scratch);
                }
            }
            if let Some(&l) = columns[i].last() {
                low[i] = Some(l);
                pivot_of_row[l] = Some(i);
            }
        }

        ReducedMatrix {
            columns,
            dims: self.dims.clone(),
            filtrations: self.filtrations.clone(),
            low,
            pivot_of_row,
            chains,
        }
    }
}

/// `target += source` over Z2 for sorted index lists.
pub(crate) fn add_into<T: Ord + Copy>(target: &mut Vec<T>, source: &[T], scratch: &mut Vec<T>) {
    scratch.clear();
    scratch.reserve(target.len() + source.len());
    let (mut a, mut b) = (0, 0);
    while a < target.len() && b < source.len() {
        match target[a].cmp(&source[b]) {
            std::cmp::Ordering::Less => {
                scratch.push(target[a]);
                a += 1;
            }
            std::cmp::Ordering::Greater => {
                scratch.push(source[b]);
                b += 1;
            }
            std::cmp::Ordering::Equal => {
                a += 1;
                b += 1;
            }
        }
    }
    scratch.extend_from_slice(&target[a..]);
    scratch.extend_from_slice(&source[b..]);
    std::mem::swap(target, scratch);
}

/// Result of the column reduction.
#[derive(Debug, Clone)]
pub struct ReducedMatrix {
    columns: Vec<Vec<usize>>,
    dims: Vec<usize>,
    filtrations: Vec<f64>,
    low: Vec<Option<usize>>,
    pivot_of_row: Vec<Option<usize>>,
    chains: Option<Vec<Vec<usize>>>,
}

impl ReducedMatrix {
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn column(&self, i: usize) -> &[usize] {
        &self.columns[i]
    }

    /// Largest row index of a nonzero column.
    pub fn low(&self, i: usize) -> Option<usize> {
        self.low[i]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn filtrations(&self) -> &[f64] {
        &self.filtrations
    }

    /// The set of original columns summing to reduced column `i`, when
    /// chains were tracked. For a zero column this is a cycle.
    pub fn chain(&self, i: usize) -> Option<&[usize]> {
        self.chains.as_ref().map(|c| c[i].as_slice())
    }

    /// Column killing the class born at column `i`, if any.
    pub fn killer_of(&self, i: usize) -> Option<usize> {
        self.pivot_of_row[i]
    }

    /// Persistence pairs `(birth column, death column)` in death order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.low
            .iter()
            .enumerate()
            .filter_map(|(j, l)| l.map(|i| (i, j)))
            .collect()
    }

    /// Zero columns that are never a low: classes that never die.
    pub fn essential(&self) -> Vec<usize> {
        (0..self.columns.len())
            .filter(|&i| self.columns[i].is_empty() && self.pivot_of_row[i].is_none())
            .collect()
    }
}
