//! Text file formats.
//!
//! Blank lines and lines starting with `#` are skipped by every reader.
//! Numbers are written with 17 significant digits and infinities as `inf`.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use tda_core::builders::{DistanceMatrix, GridBitmap, PointCloud};
use tda_core::representations::Landscape;
use tda_core::{PersistenceDiagram, PersistencePoint};

use crate::error::{CliError, Result};

pub const DIAGRAM_HEADER: &str = "# dim birth death";
pub const LANDSCAPE_HEADER: &str = "# level x value";

pub fn format_number(x: f64) -> String {
    if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{x:.16e}")
    }
}

/// Reader over the meaningful lines of one file.
struct Lines {
    path: PathBuf,
    lines: Vec<(usize, String)>,
    next: usize,
}

impl Lines {
    fn open(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Ok(Self::from_text(path, &text))
    }

    fn from_text(path: &Path, text: &str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim().to_string()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        Lines {
            path: path.to_path_buf(),
            lines,
            next: 0,
        }
    }

    fn error(&self, line: usize, message: impl Into<String>) -> CliError {
        CliError::Parse {
            path: self.path.clone(),
            line,
            message: message.into(),
        }
    }

    /// Line number to blame when input ends early.
    fn end_line(&self) -> usize {
        self.lines.last().map_or(1, |l| l.0 + 1)
    }

    fn take(&mut self, what: &str) -> Result<(usize, String)> {
        let line = self
            .lines
            .get(self.next)
            .cloned()
            .ok_or_else(|| self.error(self.end_line(), format!("unexpected end of file, expected {what}")))?;
        self.next += 1;
        Ok(line)
    }

    fn rest(&mut self) -> Vec<(usize, String)> {
        let out = self.lines[self.next..].to_vec();
        self.next = self.lines.len();
        out
    }

    fn real(&self, line: usize, token: &str) -> Result<f64> {
        match token.trim().parse::<f64>() {
            Ok(v) if !v.is_nan() => Ok(v),
            _ => Err(self.error(line, format!("expected a number, found {token:?}"))),
        }
    }

    fn finite(&self, line: usize, token: &str) -> Result<f64> {
        let v = self.real(line, token)?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(self.error(line, format!("expected a finite number, found {token:?}")))
        }
    }

    fn count(&self, line: usize, token: &str) -> Result<usize> {
        token
            .trim()
            .parse::<usize>()
            .map_err(|_| self.error(line, format!("expected a non-negative integer, found {token:?}")))
    }

    fn csv_row(&self, line: usize, text: &str) -> Result<Vec<f64>> {
        text.split(',').map(|t| self.finite(line, t)).collect()
    }
}

fn first_content_line(path: &Path) -> Result<Option<String>> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(text.lines().map(str::trim).find(|l| !l.is_empty()).map(str::to_string))
}

/// One comma-separated point per line.
pub fn read_points(path: &Path) -> Result<PointCloud> {
    let mut lines = Lines::open(path)?;
    let rows = lines.rest();
    if rows.is_empty() {
        return Err(lines.error(1, "no points"));
    }
    let mut points = Vec::with_capacity(rows.len());
    for (n, text) in &rows {
        let p = lines.csv_row(*n, text)?;
        if p.len() != points.first().map_or(p.len(), Vec::len) {
            return Err(lines.error(*n, format!("point has {} coordinates, expected {}", p.len(), points[0].len())));
        }
        points.push(p);
    }
    Ok(PointCloud::new(points)?)
}

/// `n`, then `n` comma-separated rows.
pub fn read_matrix(path: &Path) -> Result<DistanceMatrix> {
    let mut lines = Lines::open(path)?;
    let (n_line, n_text) = lines.take("the matrix size")?;
    let n = lines.count(n_line, &n_text)?;
    if n == 0 {
        return Err(lines.error(n_line, "matrix size must be positive"));
    }
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, text) = lines.take("a matrix row")?;
        let row = lines.csv_row(line, &text)?;
        if row.len() != n {
            return Err(lines.error(line, format!("row has {} entries, expected {n}", row.len())));
        }
        rows.push(row);
    }
    if let Some((line, _)) = lines.rest().first() {
        return Err(lines.error(*line, "trailing data after the matrix"));
    }
    Ok(DistanceMatrix::new(rows)?)
}

/// Ambient dimension `k`, then `k` extents (first axis fastest), then one
/// value per line.
pub fn read_grid(path: &Path) -> Result<GridBitmap> {
    let mut lines = Lines::open(path)?;
    let (k_line, k_text) = lines.take("the ambient dimension")?;
    let k = lines.count(k_line, &k_text)?;
    if k == 0 {
        return Err(lines.error(k_line, "ambient dimension must be positive"));
    }
    let mut dims = Vec::with_capacity(k);
    for _ in 0..k {
        let (line, text) = lines.take("an extent")?;
        let extent = lines.count(line, &text)?;
        if extent == 0 {
            return Err(lines.error(line, "extents must be positive"));
        }
        dims.push(extent);
    }
    let expected: usize = dims.iter().product();
    let rows = lines.rest();
    if rows.len() != expected {
        let line = rows.get(expected).map_or(lines.end_line(), |r| r.0);
        return Err(lines.error(line, format!("grid has {} values, extents require {expected}", rows.len())));
    }
    let values = rows.iter().map(|(n, t)| lines.finite(*n, t)).collect::<Result<Vec<_>>>()?;
    Ok(GridBitmap::new(dims, values)?)
}

/// One real per line.
pub fn read_series(path: &Path) -> Result<Vec<f64>> {
    let mut lines = Lines::open(path)?;
    let rows = lines.rest();
    if rows.is_empty() {
        return Err(lines.error(1, "series is empty"));
    }
    rows.iter().map(|(n, t)| lines.finite(*n, t)).collect()
}

pub fn parse_diagram(path: &Path, text: &str) -> Result<PersistenceDiagram> {
    let mut lines = Lines::from_text(path, text);
    let mut points = Vec::new();
    for (n, text) in lines.rest() {
        let fields: Vec<&str> = text.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(lines.error(n, format!("expected `dim birth death`, found {} fields", fields.len())));
        }
        let dim = lines.count(n, fields[0])?;
        let birth = lines.finite(n, fields[1])?;
        let death = lines.real(n, fields[2])?;
        if death < birth {
            return Err(lines.error(n, "death precedes birth"));
        }
        points.push(PersistencePoint::new(dim, birth, death));
    }
    Ok(PersistenceDiagram::new(points))
}

pub fn read_diagram(path: &Path) -> Result<PersistenceDiagram> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_diagram(path, &text)
}

pub fn format_diagram(diagram: &PersistenceDiagram) -> String {
    let mut out = format!("{DIAGRAM_HEADER}\n");
    for (dim, b, d) in diagram.triples() {
        let _ = writeln!(out, "{dim} {} {}", format_number(b), format_number(d));
    }
    out
}

pub fn read_landscape(path: &Path) -> Result<Landscape> {
    let mut lines = Lines::open(path)?;
    let mut levels: Vec<Vec<(f64, f64)>> = Vec::new();
    for (n, text) in lines.rest() {
        let fields: Vec<&str> = text.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(lines.error(n, format!("expected `level x value`, found {} fields", fields.len())));
        }
        let level = lines.count(n, fields[0])?;
        if level == 0 || level > levels.len() + 1 {
            return Err(lines.error(n, format!("level {level} out of sequence")));
        }
        if level > levels.len() {
            levels.push(Vec::new());
        }
        let x = lines.finite(n, fields[1])?;
        let y = lines.finite(n, fields[2])?;
        let grouped = level == levels.len();
        let current = &mut levels[level - 1];
        if !grouped || current.last().is_some_and(|&(px, _)| px >= x) {
            return Err(lines.error(n, "breakpoints must be grouped by level with increasing x"));
        }
        current.push((x, y));
    }
    Ok(Landscape::from_levels(levels))
}

pub fn format_landscape(landscape: &Landscape) -> String {
    let mut out = format!("{LANDSCAPE_HEADER}\n");
    for (k, level) in landscape.levels().iter().enumerate() {
        for &(x, y) in level {
            let _ = writeln!(out, "{} {} {}", k + 1, format_number(x), format_number(y));
        }
    }
    out
}

pub fn is_landscape_file(path: &Path) -> Result<bool> {
    Ok(first_content_line(path)?.as_deref() == Some(LANDSCAPE_HEADER))
}

pub fn format_matrix(rows: &[Vec<f64>]) -> String {
    let mut out = format!("{}\n", rows.len());
    for row in rows {
        let cells: Vec<String> = row.iter().map(|&v| format_number(v)).collect();
        let _ = writeln!(out, "{}", cells.join(","));
    }
    out
}

pub fn format_grid(dims: &[usize], values: &[f64]) -> String {
    let mut out = format!("{}\n", dims.len());
    for d in dims {
        let _ = writeln!(out, "{d}");
    }
    for &v in values {
        let _ = writeln!(out, "{}", format_number(v));
    }
    out
}

/// Writes to `path` through a temporary file in the same directory, or to
/// standard output when no path is given.
pub fn emit(path: Option<&Path>, contents: &str) -> Result<()> {
    let Some(path) = path else {
        print!("{contents}");
        return Ok(());
    };
    let io_err = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(contents.as_bytes()).map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}
