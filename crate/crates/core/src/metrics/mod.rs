//! Bottleneck and Wasserstein distances between persistence diagrams.
//!
//! Both distances use the L-infinity ground metric on the plane. Every
//! diagram is augmented with the diagonal: a point `(b, d)` may be matched
//! to its projection at cost `(d - b) / 2`, and diagonal points match each
//! other for free.

mod hungarian;
mod matching;

pub use hungarian::solve_assignment;
pub use matching::maximum_matching;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::persistence::PersistenceDiagram;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Metric {
    Bottleneck,
    /// Exponent `q >= 1`.
    Wasserstein(f64),
}

#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct MetricOptions {
    /// Replace infinite deaths by this value and treat the points as finite.
    /// Without it, essential points match only each other.
    pub cutoff: Option<f64>,
}

fn ground(a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - b.0).abs().max((a.1 - b.1).abs())
}

fn to_diagonal(p: (f64, f64)) -> f64 {
    (p.1 - p.0) / 2.0
}

/// Finite points plus the costs of matching the essential classes of both
/// sides.
struct Split {
    left: Vec<(f64, f64)>,
    right: Vec<(f64, f64)>,
    essential_costs: Vec<f64>,
}

/// Orders the two arguments canonically so that swapping them cannot change
/// the order of floating-point sums.
fn canonical<'a>(x: &'a [(f64, f64)], y: &'a [(f64, f64)]) -> (&'a [(f64, f64)], &'a [(f64, f64)]) {
    let key = |p: &(f64, f64)| (p.0.to_bits(), p.1.to_bits());
    let smaller = x.len().cmp(&y.len()).then_with(|| x.iter().map(key).cmp(y.iter().map(key)));
    if smaller.is_gt() {
        (y, x)
    } else {
        (x, y)
    }
}

fn split(x: &[(f64, f64)], y: &[(f64, f64)], options: &MetricOptions) -> Result<Split> {
    let prepare = |points: &[(f64, f64)]| -> Result<(Vec<(f64, f64)>, Vec<f64>)> {
        let mut finite = Vec::new();
        let mut essential = Vec::new();
        for &(b, d) in points {
            if !b.is_finite() || d.is_nan() || d < b {
                return Err(Error::BadInterval(b, d));
            }
            match (d.is_infinite(), options.cutoff) {
                (false, _) => finite.push((b, d)),
                (true, Some(c)) => finite.push((b, c.max(b))),
                (true, None) => essential.push(b),
            }
        }
        essential.sort_by(f64::total_cmp);
        Ok((finite, essential))
    };
    let (left, ex) = prepare(x)?;
    let (right, ey) = prepare(y)?;
    if ex.len() != ey.len() {
        return Err(Error::MixedEssential {
            left: ex.len(),
            right: ey.len(),
        });
    }
    let essential_costs = ex.iter().zip(&ey).map(|(a, b)| (a - b).abs()).collect();
    let (left, right) = canonical(&left, &right);
    Ok(Split {
        left: left.to_vec(),
        right: right.to_vec(),
        essential_costs,
    })
}

/// Whether a perfect matching of the augmented diagrams exists using only
/// pairs of cost at most `t`.
fn feasible(x: &[(f64, f64)], y: &[(f64, f64)], t: f64) -> bool {
    let (n, m) = (x.len(), y.len());
    // Left: x then one diagonal slot per y. Right: y then one slot per x.
    let mut adjacency: Vec<Vec<usize>> = Vec::with_capacity(n + m);
    for (i, &p) in x.iter().enumerate() {
        let mut row: Vec<usize> = (0..m).filter(|&j| ground(p, y[j]) <= t).collect();
        if to_diagonal(p) <= t {
            row.push(m + i);
        }
        adjacency.push(row);
    }
    for (j, &q) in y.iter().enumerate() {
        let mut row = Vec::with_capacity(n + 1);
        if to_diagonal(q) <= t {
            row.push(j);
        }
        row.extend(m..m + n);
        adjacency.push(row);
    }
    maximum_matching(&adjacency, n + m) == n + m
}

fn bottleneck_finite(x: &[(f64, f64)], y: &[(f64, f64)]) -> f64 {
    let mut candidates: Vec<f64> = vec![0.0];
    candidates.extend(x.iter().chain(y).map(|&p| to_diagonal(p)));
    for &p in x {
        candidates.extend(y.iter().map(|&q| ground(p, q)));
    }
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();
    // The largest candidate is always feasible: everything to the diagonal.
    let (mut lo, mut hi) = (0, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(x, y, candidates[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    candidates[lo]
}

/// Sum of `cost^q` over an optimal matching of the augmented diagrams.
fn wasserstein_power(x: &[(f64, f64)], y: &[(f64, f64)], q: f64) -> f64 {
    let (n, m) = (x.len(), y.len());
    let size = n + m;
    let mut cost = vec![0.0; size * size];
    for (i, &p) in x.iter().enumerate() {
        for (j, &r) in y.iter().enumerate() {
            cost[i * size + j] = ground(p, r).powf(q);
        }
        let c = to_diagonal(p).powf(q);
        cost[i * size + m..(i + 1) * size].fill(c);
    }
    for (j, &r) in y.iter().enumerate() {
        let c = to_diagonal(r).powf(q);
        for i in n..size {
            cost[i * size + j] = c;
        }
    }
    solve_assignment(&cost, size).0
}

/// Bottleneck distance between two diagrams given as `(birth, death)`
/// pairs of one homological dimension.
pub fn bottleneck_distance(x: &[(f64, f64)], y: &[(f64, f64)], options: &MetricOptions) -> Result<f64> {
    let s = split(x, y, options)?;
    let essential = s.essential_costs.iter().cloned().fold(0.0, f64::max);
    Ok(bottleneck_finite(&s.left, &s.right).max(essential))
}

/// `q`-Wasserstein distance between two diagrams of one dimension.
pub fn wasserstein_distance(x: &[(f64, f64)], y: &[(f64, f64)], q: f64, options: &MetricOptions) -> Result<f64> {
    if !(q >= 1.0) || q.is_infinite() {
        return Err(Error::BadExponent(q));
    }
    let s = split(x, y, options)?;
    let essential: f64 = s.essential_costs.iter().map(|c| c.powf(q)).sum();
    Ok((wasserstein_power(&s.left, &s.right, q) + essential).powf(1.0 / q))
}

/// Distance between the dimension-`dim` parts of two diagrams.
pub fn diagram_distance(
    a: &PersistenceDiagram,
    b: &PersistenceDiagram,
    dim: usize,
    metric: Metric,
    options: &MetricOptions,
) -> Result<f64> {
    let (x, y) = (a.intervals(dim), b.intervals(dim));
    match metric {
        Metric::Bottleneck => bottleneck_distance(&x, &y, options),
        Metric::Wasserstein(q) => wasserstein_distance(&x, &y, q, options),
    }
}

/// All pairwise distances, computed in parallel. Symmetric with zero
/// diagonal.
pub fn distance_matrix(
    diagrams: &[PersistenceDiagram],
    dim: usize,
    metric: Metric,
    options: &MetricOptions,
) -> Result<Vec<Vec<f64>>> {
    let n = diagrams.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let values: Vec<f64> = pairs
        .par_iter()
        .map(|&(i, j)| diagram_distance(&diagrams[i], &diagrams[j], dim, metric, options))
        .collect::<Result<_>>()?;
    let mut out = vec![vec![0.0; n]; n];
    for (&(i, j), v) in pairs.iter().zip(values) {
        out[i][j] = v;
        out[j][i] = v;
    }
    Ok(out)
}
