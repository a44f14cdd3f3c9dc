//! Constructors of filtered complexes and point clouds.

pub mod cubical;
pub mod embed;
pub mod graph;
pub mod kde;
pub mod rips;

pub use cubical::{
    circle_distance_bitmap, cubical_from_bitmap, percolation_sweep, random_cubical, BitmapMode, GridBitmap,
    PercolationRow,
};
pub use embed::sliding_window_embed;
pub use graph::{connected_components, cycle_basis, UnionFind};
pub use kde::{kde_grid_filtration, GridSpec};
pub use rips::{rips_from_distance_matrix, rips_from_point_cloud, DistanceMatrix, PointCloud};
