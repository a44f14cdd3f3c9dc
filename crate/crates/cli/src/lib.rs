//! Command-line front end for `tda-core`.
//!
//! Exit codes: 0 on success, 1 for internal and I/O failures, 2 for
//! malformed command lines, 3 for unparseable input files and 4 for
//! parameters or data that violate a precondition.
//!
//! Commands that take `--seed` fall back to the `TDA_SEED` environment
//! variable and then to 0.

pub mod commands;
pub mod error;
pub mod io;
pub mod plot;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use error::{CliError, Result};

pub const SEED_VARIABLE: &str = "TDA_SEED";

#[derive(Debug, Parser)]
#[command(name = "tda", version, about = "Persistent homology of point clouds, grids and time series")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Persistence of the Vietoris-Rips filtration of a point cloud or distance matrix.
    Rips(RipsArgs),
    /// Persistence of the cubical complex of a grid of top-cell values.
    Cubical(CubicalArgs),
    /// Bottleneck or Wasserstein distance between diagrams.
    Distance(DistanceArgs),
    /// Persistence landscape of a diagram, or a distance or average of landscapes.
    Landscape(LandscapeArgs),
    /// Persistence of the sliding-window embedding of a time series.
    Slide(SlideArgs),
    /// Mean Betti numbers of random cubical complexes over a probability grid.
    Percolate(PercolateArgs),
    /// SVG plot of a diagram, barcode or landscape.
    Plot(PlotArgs),
    /// Kernel heat map of a diagram.
    Heatmap(HeatmapArgs),
    /// Permutation test between two directories of diagrams.
    Permtest(PermtestArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputKind {
    /// Comma-separated coordinates, one point per line.
    Points,
    /// Size `n` followed by `n` comma-separated rows.
    Matrix,
}

#[derive(Debug, Args)]
pub struct RipsArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputKind::Points)]
    pub input_kind: InputKind,
    #[arg(long)]
    pub max_edge: f64,
    /// Largest simplex dimension; diagrams are reported below it.
    #[arg(long, default_value_t = 2)]
    pub max_dim: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CubicalArgs {
    #[arg(required_unless_present = "demo_circle", conflicts_with = "demo_circle")]
    pub input: Option<PathBuf>,
    /// Use the distance-to-unit-circle field on a (2N+1)^2 grid instead of a file.
    #[arg(long, value_name = "N", num_args = 0..=1, default_missing_value = "100")]
    pub demo_circle: Option<usize>,
    /// Treat the grid as a 0/1 bitmap and keep only the cubes marked 1.
    #[arg(long)]
    pub binary: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricKind {
    Bottleneck,
    Wasserstein,
}

#[derive(Debug, Args)]
pub struct DistanceArgs {
    /// Two diagrams give a scalar, more give a distance matrix.
    #[arg(num_args = 2.., required = true)]
    pub diagrams: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t = MetricKind::Bottleneck)]
    pub metric: MetricKind,
    /// Wasserstein exponent.
    #[arg(long, default_value_t = 1.0)]
    pub q: f64,
    #[arg(long, default_value_t = 0)]
    pub dim: usize,
    /// Replace infinite deaths by this value.
    #[arg(long)]
    pub cutoff: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LandscapeArgs {
    /// Diagram or landscape file.
    pub input: PathBuf,
    /// Print the L^p distance to this diagram or landscape.
    #[arg(long, conflicts_with = "average")]
    pub distance: Option<PathBuf>,
    /// Average the input with these diagrams or landscapes.
    #[arg(long, num_args = 1..)]
    pub average: Vec<PathBuf>,
    #[arg(long, default_value_t = 2.0)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub dim: usize,
    /// Truncate infinite deaths here; without it they are dropped.
    #[arg(long)]
    pub cutoff: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SlideArgs {
    #[arg(required_unless_present = "demo_sin", conflicts_with = "demo_sin")]
    pub input: Option<PathBuf>,
    /// Use 1000 samples of sin over [0, 10 pi] instead of a file.
    #[arg(long)]
    pub demo_sin: bool,
    #[arg(long)]
    pub window: usize,
    /// Keep every `stride`-th embedded point.
    #[arg(long, default_value_t = 1)]
    pub stride: usize,
    #[arg(long)]
    pub max_edge: f64,
    #[arg(long, default_value_t = 2)]
    pub max_dim: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PercolateArgs {
    /// Grid extents, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub dims: Vec<usize>,
    /// Increasing probabilities, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub p_grid: Vec<f64>,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotStyle {
    Diagram,
    Barcode,
    Landscape,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    /// Diagram file, or landscape file for the landscape style.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = PlotStyle::Diagram)]
    pub style: PlotStyle,
    /// Restrict to one dimension (required to draw the landscape of a diagram).
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long)]
    pub cutoff: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HeatmapModeArg {
    Constant,
    Persistence,
    Signed,
}

#[derive(Debug, Args)]
pub struct HeatmapArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = HeatmapModeArg::Constant)]
    pub mode: HeatmapModeArg,
    #[arg(long)]
    pub bandwidth: f64,
    /// Birth and death ranges as `birth_lo,birth_hi,death_lo,death_hi`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub window: Vec<f64>,
    /// Cells per axis, or `birth_cells,death_cells`.
    #[arg(long, value_delimiter = ',', default_value = "50")]
    pub resolution: Vec<usize>,
    /// Kernel support in bandwidths.
    #[arg(long, default_value_t = 3.0)]
    pub truncation: f64,
    #[arg(long, default_value_t = 0)]
    pub dim: usize,
    #[arg(long)]
    pub cutoff: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PermtestArgs {
    pub first: PathBuf,
    pub second: PathBuf,
    /// Number of shuffles.
    #[arg(long, default_value_t = 1000)]
    pub n: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub dim: usize,
    #[arg(long, default_value_t = 2.0)]
    pub p: f64,
    #[arg(long)]
    pub cutoff: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Rips(a) => commands::rips(&a),
        Command::Cubical(a) => commands::cubical(&a),
        Command::Distance(a) => commands::distance(&a),
        Command::Landscape(a) => commands::landscape(&a),
        Command::Slide(a) => commands::slide(&a),
        Command::Percolate(a) => commands::percolate(&a),
        Command::Plot(a) => commands::plot(&a),
        Command::Heatmap(a) => commands::heatmap(&a),
        Command::Permtest(a) => commands::permtest(&a),
    }
}
