//! Graph utilities: union-find, connected components and a spanning-tree
//! cycle basis.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};

/// Disjoint sets over `0..n` with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; returns false if already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

fn vertex_positions(vertices: &[u32], edges: &[(u32, u32)]) -> Result<(BTreeMap<u32, usize>, Vec<(usize, usize)>)> {
    let pos: BTreeMap<u32, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mapped = edges
        .iter()
        .map(|&(a, b)| match (pos.get(&a), pos.get(&b)) {
            (Some(&i), Some(&j)) => Ok((i, j)),
            _ => Err(Error::DanglingEdge(a, b)),
        })
        .collect::<Result<_>>()?;
    Ok((pos, mapped))
}

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
pub fn connected_components(vertices: &[u32], edges: &[(u32, u32)]) -> Result<Vec<Vec<u32>>> {
    let (pos, mapped) = vertex_positions(vertices, edges)?;
    let mut uf = UnionFind::new(vertices.len());
    for (i, j) in mapped {
        uf.union(i, j);
    }
    let mut groups: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for (&v, &i) in &pos {
        groups.entry(uf.find(i)).or_default().push(v);
    }
    let mut out: Vec<Vec<u32>> = groups.into_values().collect();
    out.sort();
    Ok(out)
}

/// One cycle per edge outside a breadth-first spanning tree: the edge plus
/// the tree path joining its endpoints. Edges are reported as
/// `(smaller, larger)` vertex pairs.
pub fn cycle_basis(vertices: &[u32], edges: &[(u32, u32)]) -> Result<Vec<Vec<(u32, u32)>>> {
    let (_, mapped) = vertex_positions(vertices, edges)?;
    let n = vertices.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut adjacency = vec![Vec::new(); n];
    for (e, &(i, j)) in mapped.iter().enumerate() {
        adjacency[i].push((j, e));
        adjacency[j].push((i, e));
    }

    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut in_tree = vec![false; mapped.len()];
    depth[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &(w, e) in &adjacency[v] {
            if depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                parent[w] = Some((v, e));
                in_tree[e] = true;
                queue.push_back(w);
            }
        }
    }
    if depth.contains(&usize::MAX) {
        return Err(Error::DisconnectedGraph);
    }

    let edge_of = |e: usize| {
        let (a, b) = edges[e];
        (a.min(b), a.max(b))
    };
    let mut basis = Vec::new();
    for (e, &(i, j)) in mapped.iter().enumerate() {
        if in_tree[e] {
            continue;
        }
        let mut cycle = vec![edge_of(e)];
        let (mut a, mut b) = (i, j);
        while a != b {
            if depth[a] < depth[b] {
                std::mem::swap(&mut a, &mut b);
            }
            let (up, pe) = parent[a].expect("non-root vertex has a parent");
            cycle.push(edge_of(pe));
            a = up;
        }
        cycle.sort();
        basis.push(cycle);
    }
    Ok(basis)
}
