//! Boundary matrix reduction over Z2 and persistence diagrams.

mod diagram;
mod matrix;
pub mod rips;

pub use diagram::{DiagramOptions, PersistenceDiagram, PersistencePoint};
pub use matrix::{BoundaryMatrix, ConflictSearch, ReduceOptions, ReducedMatrix};

use crate::complex::{CellKey, FilteredComplex};
use crate::error::Result;

/// A complex in canonical order together with its reduced boundary matrix.
#[derive(Debug, Clone)]
pub struct Persistence {
    complex: FilteredComplex,
    reduced: ReducedMatrix,
}

impl Persistence {
    /// Sorts the complex, builds its boundary matrix and reduces it.
    pub fn compute(complex: &FilteredComplex, options: ReduceOptions) -> Result<Self> {
        let (complex, _) = complex.sorted()?;
        let reduced = BoundaryMatrix::from_complex(&complex)?.reduce_with(options);
        Ok(Persistence { complex, reduced })
    }

    /// The complex in the order used for the matrix.
    pub fn complex(&self) -> &FilteredComplex {
        &self.complex
    }

    pub fn reduced(&self) -> &ReducedMatrix {
        &self.reduced
    }

    pub fn diagram(&self, options: &DiagramOptions) -> PersistenceDiagram {
        PersistenceDiagram::from_reduced(&self.reduced, options)
    }

    /// Cells of a point's cycle representative.
    pub fn representative_keys(&self, point: &PersistencePoint) -> Option<Vec<CellKey>> {
        point.representative.as_ref().map(|cells| {
            cells
                .iter()
                .map(|&i| self.complex.cell(i).key().clone())
                .collect()
        })
    }

    /// Betti numbers of the whole complex, one per cell dimension.
    pub fn betti_numbers(&self) -> Vec<usize> {
        let dims = self.reduced.dims();
        let mut betti = vec![0; dims.iter().max().map_or(0, |d| d + 1)];
        for i in self.reduced.essential() {
            betti[dims[i]] += 1;
        }
        betti
    }
}

/// Persistence diagram of a filtered complex with default options.
pub fn diagram(complex: &FilteredComplex) -> Result<PersistenceDiagram> {
    Ok(Persistence::compute(complex, ReduceOptions::default())?.diagram(&DiagramOptions::default()))
}

/// Betti numbers of a complex: zero columns of dimension p minus nonzero
/// columns of dimension p + 1.
pub fn betti_numbers(complex: &FilteredComplex) -> Result<Vec<usize>> {
    Ok(Persistence::compute(complex, ReduceOptions::default())?.betti_numbers())
}
