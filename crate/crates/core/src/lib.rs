//! Topological data analysis over Z2.
//!
//! The crate is organised around a single substrate, [`FilteredComplex`], which
//! holds simplicial or cubical cells together with their filtration values.
//! Builders in [`builders`] produce filtered complexes from distance matrices,
//! point clouds, bitmaps and time series. [`persistence`] reduces the sorted
//! boundary matrix and reads off persistence diagrams. [`metrics`] compares
//! diagrams, and [`representations`] turns them into landscapes and heat maps.

pub mod builders;
pub mod complex;
pub mod error;
pub mod metrics;
pub mod persistence;
pub mod representations;
pub mod rng;

pub use complex::{Cell, CellKey, ElementaryCube, FilteredComplex, Simplex};
pub use error::{Error, Result};
pub use persistence::{PersistenceDiagram, PersistencePoint};
