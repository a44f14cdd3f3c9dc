use std::path::{Path, PathBuf};

use tda_core::builders::{
    circle_distance_bitmap, cubical_from_bitmap, percolation_sweep, sliding_window_embed, BitmapMode, PointCloud,
};
use tda_core::metrics::{diagram_distance, distance_matrix, Metric, MetricOptions};
use tda_core::persistence::{self, rips, DiagramOptions};
use tda_core::representations::{
    average_landscapes, build_heat_map, finite_intervals, landscape_distance, permutation_test, HeatMapMode,
    HeatMapSpec, Landscape,
};
use tda_core::PersistenceDiagram;

use crate::error::{CliError, Result};
use crate::{io, plot};
use crate::{
    CubicalArgs, DistanceArgs, HeatmapArgs, HeatmapModeArg, InputKind, LandscapeArgs, MetricKind, PercolateArgs,
    PermtestArgs, PlotArgs, PlotStyle, RipsArgs, SlideArgs, SEED_VARIABLE,
};

pub const DEMO_SIN_SAMPLES: usize = 1000;

fn invalid(message: impl Into<String>) -> CliError {
    CliError::InvalidArgument(message.into())
}

fn check_exponent(name: &str, value: f64) -> Result<()> {
    if value >= 1.0 {
        Ok(())
    } else {
        Err(invalid(format!("--{name} must be at least 1, got {value}")))
    }
}

/// `--seed`, else `TDA_SEED`, else 0.
pub fn resolve_seed(flag: Option<u64>) -> Result<u64> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var(SEED_VARIABLE) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| invalid(format!("{SEED_VARIABLE} must be an unsigned integer, got {v:?}"))),
        Err(_) => Ok(0),
    }
}

/// Samples of `sin` at evenly spaced points of `[0, 10 pi]`.
pub fn demo_sin_series() -> Vec<f64> {
    let last = (DEMO_SIN_SAMPLES - 1) as f64;
    (0..DEMO_SIN_SAMPLES)
        .map(|i| (10.0 * std::f64::consts::PI * i as f64 / last).sin())
        .collect()
}

fn finite_landscape(diagram: &PersistenceDiagram, dim: usize, cutoff: Option<f64>) -> Result<Landscape> {
    let intervals = finite_intervals(&diagram.intervals(dim), cutoff)?;
    Ok(Landscape::from_intervals(&intervals)?)
}

/// Landscape from either a landscape file or a diagram file.
fn load_landscape(path: &Path, dim: usize, cutoff: Option<f64>) -> Result<Landscape> {
    if io::is_landscape_file(path)? {
        io::read_landscape(path)
    } else {
        finite_landscape(&io::read_diagram(path)?, dim, cutoff)
    }
}

pub fn rips(args: &RipsArgs) -> Result<()> {
    let options = DiagramOptions::default();
    let diagram = match args.input_kind {
        InputKind::Points => {
            let cloud = io::read_points(&args.input)?;
            rips::rips_diagram_from_points(&cloud, args.max_edge, args.max_dim, &options)?
        }
        InputKind::Matrix => {
            let matrix = io::read_matrix(&args.input)?;
            rips::rips_diagram(&matrix, args.max_edge, args.max_dim, &options)?
        }
    };
    io::emit(args.out.as_deref(), &io::format_diagram(&diagram))
}

pub fn cubical(args: &CubicalArgs) -> Result<()> {
    let bitmap = match (&args.input, args.demo_circle) {
        (_, Some(n)) => circle_distance_bitmap(n),
        (Some(path), None) => io::read_grid(path)?,
        (None, None) => return Err(invalid("a grid file or --demo-circle is required")),
    };
    let mode = if args.binary { BitmapMode::Presence } else { BitmapMode::Sublevel };
    let diagram = persistence::diagram(&cubical_from_bitmap(&bitmap, mode)?)?;
    io::emit(args.out.as_deref(), &io::format_diagram(&diagram))
}

pub fn distance(args: &DistanceArgs) -> Result<()> {
    let metric = match args.metric {
        MetricKind::Bottleneck => Metric::Bottleneck,
        MetricKind::Wasserstein => {
            check_exponent("q", args.q)?;
            if !args.q.is_finite() {
                return Err(invalid("--q must be finite; use the bottleneck metric instead"));
            }
            Metric::Wasserstein(args.q)
        }
    };
    let options = MetricOptions { cutoff: args.cutoff };
    let diagrams = args
        .diagrams
        .iter()
        .map(|p| io::read_diagram(p))
        .collect::<Result<Vec<_>>>()?;
    let text = if let [a, b] = diagrams.as_slice() {
        format!("{}\n", io::format_number(diagram_distance(a, b, args.dim, metric, &options)?))
    } else {
        io::format_matrix(&distance_matrix(&diagrams, args.dim, metric, &options)?)
    };
    io::emit(args.out.as_deref(), &text)
}

pub fn landscape(args: &LandscapeArgs) -> Result<()> {
    check_exponent("p", args.p)?;
    let first = load_landscape(&args.input, args.dim, args.cutoff)?;
    if let Some(other) = &args.distance {
        let second = load_landscape(other, args.dim, args.cutoff)?;
        let d = landscape_distance(&first, &second, args.p)?;
        return io::emit(args.out.as_deref(), &format!("{}\n", io::format_number(d)));
    }
    let result = if args.average.is_empty() {
        first
    } else {
        let mut all = vec![first];
        for path in &args.average {
            all.push(load_landscape(path, args.dim, args.cutoff)?);
        }
        average_landscapes(&all)?
    };
    io::emit(args.out.as_deref(), &io::format_landscape(&result))
}

pub fn slide(args: &SlideArgs) -> Result<()> {
    if args.stride == 0 {
        return Err(invalid("--stride must be at least 1"));
    }
    let series = match &args.input {
        Some(path) if !args.demo_sin => io::read_series(path)?,
        _ => demo_sin_series(),
    };
    let embedded = sliding_window_embed(&series, args.window)?;
    let kept: Vec<Vec<f64>> = embedded.iter().step_by(args.stride).map(<[f64]>::to_vec).collect();
    let cloud = PointCloud::new(kept)?;
    let diagram = rips::rips_diagram_from_points(&cloud, args.max_edge, args.max_dim, &DiagramOptions::default())?;
    io::emit(args.out.as_deref(), &io::format_diagram(&diagram))
}

pub fn percolate(args: &PercolateArgs) -> Result<()> {
    let seed = resolve_seed(args.seed)?;
    let rows = percolation_sweep(&args.dims, &args.p_grid, args.trials, seed)?;
    let mut text = String::from("p");
    for d in 0..args.dims.len() {
        text.push_str(&format!(",betti{d}"));
    }
    text.push('\n');
    for row in rows {
        let cells: Vec<String> = std::iter::once(row.p)
            .chain(row.mean_betti)
            .map(io::format_number)
            .collect();
        text.push_str(&cells.join(","));
        text.push('\n');
    }
    io::emit(args.out.as_deref(), &text)
}

pub fn plot(args: &PlotArgs) -> Result<()> {
    let svg = if args.style == PlotStyle::Landscape {
        let landscape = if io::is_landscape_file(&args.input)? {
            io::read_landscape(&args.input)?
        } else {
            let dim = args
                .dim
                .ok_or_else(|| invalid("--dim is required to draw the landscape of a diagram"))?;
            finite_landscape(&io::read_diagram(&args.input)?, dim, args.cutoff)?
        };
        plot::landscape_svg(&landscape)
    } else {
        let mut diagram = io::read_diagram(&args.input)?;
        if let Some(dim) = args.dim {
            diagram = PersistenceDiagram::new(diagram.in_dimension(dim).cloned().collect());
        }
        match args.style {
            PlotStyle::Barcode => plot::barcode_svg(&diagram),
            _ => plot::diagram_svg(&diagram),
        }
    };
    io::emit(args.out.as_deref(), &svg)
}

pub fn heatmap(args: &HeatmapArgs) -> Result<()> {
    let [b0, b1, d0, d1] = args.window[..] else {
        return Err(invalid("--window takes birth_lo,birth_hi,death_lo,death_hi"));
    };
    let resolution = match args.resolution[..] {
        [n] => (n, n),
        [nb, nd] => (nb, nd),
        _ => return Err(invalid("--resolution takes one or two cell counts")),
    };
    let mode = match args.mode {
        HeatmapModeArg::Constant => HeatMapMode::Constant,
        HeatmapModeArg::Persistence => HeatMapMode::PersistenceWeighted,
        HeatmapModeArg::Signed => HeatMapMode::SignedSymmetric,
    };
    let spec = HeatMapSpec {
        truncation: args.truncation,
        ..HeatMapSpec::new((b0, b1), (d0, d1), resolution, args.bandwidth, mode)
    };
    let diagram = io::read_diagram(&args.input)?;
    let points = finite_intervals(&diagram.intervals(args.dim), args.cutoff)?;
    let map = build_heat_map(&points, &spec)?;
    io::emit(args.out.as_deref(), &io::format_grid(&[resolution.0, resolution.1], map.values()))
}

fn directory_landscapes(dir: &Path, dim: usize, cutoff: Option<f64>) -> Result<Vec<Landscape>> {
    let io_err = |source| CliError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(io_err)?
        .map(|entry| entry.map(|e| e.path()))
        .collect::<std::io::Result<_>>()
        .map_err(io_err)?;
    files.retain(|p| p.is_file());
    files.sort();
    files.iter().map(|p| load_landscape(p, dim, cutoff)).collect()
}

pub fn permtest(args: &PermtestArgs) -> Result<()> {
    check_exponent("p", args.p)?;
    if args.n == 0 {
        return Err(invalid("--n must be at least 1"));
    }
    let seed = resolve_seed(args.seed)?;
    let a = directory_landscapes(&args.first, args.dim, args.cutoff)?;
    let b = directory_landscapes(&args.second, args.dim, args.cutoff)?;
    let outcome = permutation_test(&a, &b, args.n, seed, args.p)?;
    let text = format!(
        "p_value {}\nobserved_distance {}\nexceed_count {}\nshuffles {}\n",
        io::format_number(outcome.p_value),
        io::format_number(outcome.observed_distance),
        outcome.exceed_count,
        outcome.shuffles
    );
    io::emit(args.out.as_deref(), &text)
}
