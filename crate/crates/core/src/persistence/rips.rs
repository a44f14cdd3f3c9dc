//! Persistence of Vietoris-Rips filtrations without materialising the
//! complex.
//!
//! Dimension 0 comes from union-find over edges in filtration order (elder
//! rule). Dimension 1 is computed by reducing edge coboundaries in reverse
//! filtration order, which yields the same pairs as reducing triangle
//! boundaries. Edges that merge components are skipped, and an edge whose
//! oldest cofacet has it as youngest face is paired at once. Triangles are
//! enumerated on demand and identified by their youngest edge and opposite
//! vertex. For `max_dimension >= 3` the full complex is built and reduced.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use super::{DiagramOptions, Persistence, PersistenceDiagram, PersistencePoint, ReduceOptions};
use crate::builders::graph::UnionFind;
use crate::builders::rips::{check_rips_parameters, rips_from_distance_matrix, DistanceMatrix, PointCloud};
use crate::error::Result;

const NO_EDGE: u32 = u32::MAX;

struct EdgeTable {
    n: usize,
    /// `(length, a, b)` with `a < b`, in filtration order.
    edges: Vec<(f64, u32, u32)>,
    /// Rank of edge `{a, b}` at `a * n + b`, or `NO_EDGE`.
    rank: Vec<u32>,
}

impl EdgeTable {
    fn new(distances: &DistanceMatrix, max_edge_length: f64) -> Self {
        let n = distances.len();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let d = distances.get(a, b);
                if d <= max_edge_length {
                    edges.push((d, a as u32, b as u32));
                }
            }
        }
        edges.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)).then(x.2.cmp(&y.2)));
        let mut rank = vec![NO_EDGE; n * n];
        for (r, &(_, a, b)) in edges.iter().enumerate() {
            rank[a as usize * n + b as usize] = r as u32;
            rank[b as usize * n + a as usize] = r as u32;
        }
        EdgeTable { n, edges, rank }
    }

    fn rank(&self, a: u32, b: u32) -> u32 {
        self.rank[a as usize * self.n + b as usize]
    }

    fn triangle_value(&self, key: u64) -> f64 {
        self.edges[(key / self.n as u64) as usize].0
    }

    /// Calls `f` with the key of every triangle containing edge `r`.
    fn for_each_cofacet(&self, r: u32, mut f: impl FnMut(u64)) {
        let (_, a, b) = self.edges[r as usize];
        for c in 0..self.n as u32 {
            if c == a || c == b {
                continue;
            }
            let (ra, rb) = (self.rank(a, c), self.rank(b, c));
            if ra == NO_EDGE || rb == NO_EDGE {
                continue;
            }
            let (youngest, opposite) = if r > ra && r > rb {
                (r, c)
            } else if ra > rb {
                (ra, b)
            } else {
                (rb, a)
            };
            f(youngest as u64 * self.n as u64 + opposite as u64);
        }
    }
}

/// Removes and returns the smallest key left after cancelling pairs.
fn pop_pivot(heap: &mut BinaryHeap<Reverse<u64>>) -> Option<u64> {
    while let Some(Reverse(top)) = heap.pop() {
        if heap.peek() == Some(&Reverse(top)) {
            heap.pop();
            continue;
        }
        return Some(top);
    }
    None
}

/// Persistence diagram of the Rips filtration in dimensions below
/// `max_dimension` (the truncated top dimension is not reported).
pub fn rips_diagram(
    distances: &DistanceMatrix,
    max_edge_length: f64,
    max_dimension: usize,
    options: &DiagramOptions,
) -> Result<PersistenceDiagram> {
    check_rips_parameters(max_edge_length, max_dimension)?;
    let bound = options.dim_bound.map_or(max_dimension, |b| b.min(max_dimension));
    if max_dimension >= 3 {
        let complex = rips_from_distance_matrix(distances, max_edge_length, max_dimension)?;
        let persistence = Persistence::compute(&complex, ReduceOptions::default())?;
        return Ok(persistence.diagram(&DiagramOptions {
            dim_bound: Some(bound),
            ..*options
        }));
    }

    let table = EdgeTable::new(distances, max_edge_length);
    let n = table.n;
    let keep = |birth: f64, death: f64| options.keep_zero_length || birth < death;
    let mut points = Vec::new();

    let mut uf = UnionFind::new(n);
    let mut positive = Vec::new();
    for (r, &(len, a, b)) in table.edges.iter().enumerate() {
        if uf.union(a as usize, b as usize) {
            if bound > 0 && keep(0.0, len) {
                points.push(PersistencePoint::new(0, 0.0, len));
            }
        } else {
            positive.push(r as u32);
        }
    }
    if bound > 0 {
        for v in 0..n {
            if uf.find(v) == v {
                points.push(PersistencePoint::new(0, 0.0, f64::INFINITY));
            }
        }
    }

    if bound > 1 && max_dimension == 2 {
        points.extend(cohomology_dim1(&table, &positive, keep));
    } else if bound > 1 {
        for &r in &positive {
            points.push(PersistencePoint::new(1, table.edges[r as usize].0, f64::INFINITY));
        }
    }
    Ok(PersistenceDiagram::new(points))
}

fn cohomology_dim1(table: &EdgeTable, positive: &[u32], keep: impl Fn(f64, f64) -> bool) -> Vec<PersistencePoint> {
    let mut points = Vec::new();
    let mut pivot_of: HashMap<u64, usize> = HashMap::new();
    let mut chains: Vec<Vec<u32>> = Vec::new();
    let mut heap = BinaryHeap::new();

    for &r in positive.iter().rev() {
        let birth = table.edges[r as usize].0;

        let mut oldest = u64::MAX;
        table.for_each_cofacet(r, |key| oldest = oldest.min(key));
        if oldest != u64::MAX && oldest / table.n as u64 == r as u64 {
            pivot_of.insert(oldest, chains.len());
            chains.push(vec![r]);
            let death = table.triangle_value(oldest);
            if keep(birth, death) {
                points.push(PersistencePoint::new(1, birth, death));
            }
            continue;
        }

        heap.clear();
        table.for_each_cofacet(r, |key| heap.push(Reverse(key)));
        let mut chain = vec![r];
        let pivot = loop {
            let Some(p) = pop_pivot(&mut heap) else { break None };
            let Some(&j) = pivot_of.get(&p) else { break Some(p) };
            heap.push(Reverse(p));
            for &e in &chains[j] {
                table.for_each_cofacet(e, |key| heap.push(Reverse(key)));
                chain.push(e);
            }
        };
        match pivot {
            Some(p) => {
                chain.sort_unstable();
                let mut reduced: Vec<u32> = Vec::with_capacity(chain.len());
                for e in chain {
                    if reduced.last() == Some(&e) {
                        reduced.pop();
                    } else {
                        reduced.push(e);
                    }
                }
                pivot_of.insert(p, chains.len());
                chains.push(reduced);
                let death = table.triangle_value(p);
                if keep(birth, death) {
                    points.push(PersistencePoint::new(1, birth, death));
                }
            }
            None => points.push(PersistencePoint::new(1, birth, f64::INFINITY)),
        }
    }
    points
}

pub fn rips_diagram_from_points(
    points: &PointCloud,
    max_edge_length: f64,
    max_dimension: usize,
    options: &DiagramOptions,
) -> Result<PersistenceDiagram> {
    rips_diagram(&points.distance_matrix(), max_edge_length, max_dimension, options)
}
