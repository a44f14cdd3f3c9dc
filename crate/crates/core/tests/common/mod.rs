//! Independent oracles and fixtures shared by the integration tests.

#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;
use tda_core::builders::GridBitmap;
use tda_core::rng::Rng as ChaCha;
use tda_core::{CellKey, ElementaryCube, FilteredComplex, Simplex};

/// Rank over Z2 of a set of rows stored as bit vectors.
pub fn rank_z2(mut rows: Vec<Vec<u64>>) -> usize {
    let mut rank = 0;
    let width = rows.first().map_or(0, Vec::len) * 64;
    for bit in 0..width {
        let (word, mask) = (bit / 64, 1u64 << (bit % 64));
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][word] & mask != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[word] & mask != 0 {
                for (a, b) in row.iter_mut().zip(&pivot) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Betti numbers of the cells with filtration at most `t` via ranks of the
/// boundary maps, with faces located by key rather than stored indices.
pub fn betti_by_rank(complex: &FilteredComplex, t: f64, top_dim: usize) -> Vec<usize> {
    let mut by_dim: Vec<Vec<&CellKey>> = vec![Vec::new(); top_dim + 2];
    for c in complex.cells().iter().filter(|c| c.filtration() <= t) {
        by_dim[c.dim()].push(c.key());
    }
    let position: Vec<HashMap<&CellKey, usize>> = by_dim
        .iter()
        .map(|keys| keys.iter().enumerate().map(|(i, k)| (*k, i)).collect())
        .collect();
    // rank of the map from dimension p to p - 1
    let boundary_rank = |p: usize| -> usize {
        if p == 0 || p > top_dim || by_dim[p].is_empty() {
            return 0;
        }
        let words = by_dim[p - 1].len().div_ceil(64).max(1);
        let rows = by_dim[p]
            .iter()
            .map(|key| {
                let mut row = vec![0u64; words];
                for face in key.boundary() {
                    let i = position[p - 1][&face];
                    row[i / 64] ^= 1 << (i % 64);
                }
                row
            })
            .collect();
        rank_z2(rows)
    };
    (0..=top_dim)
        .map(|p| by_dim[p].len() - boundary_rank(p) - boundary_rank(p + 1))
        .collect()
}

/// Random filtered complex of at most 40 cells: simplicial on 5 vertices,
/// or cubical inside a 2x2 square or a unit cube.
pub fn random_complex(rng: &mut ChaCha) -> FilteredComplex {
    let mut k = FilteredComplex::new();
    let picks = rng.gen_range(1..9);
    match rng.gen_range(0..3) {
        0 => {
            for _ in 0..picks {
                let mut vs: Vec<u32> = (0..5).filter(|_| rng.gen_bool(0.5)).collect();
                if vs.is_empty() {
                    vs.push(rng.gen_range(0..5));
                }
                let value = f64::from(rng.gen_range(0..8u8));
                k.insert_with_closure(Simplex::new(vs).unwrap(), value).unwrap();
            }
        }
        kind => {
            let (ambient, extent) = if kind == 1 { (2, 5) } else { (3, 3) };
            for _ in 0..picks {
                let coords: Vec<i64> = (0..ambient).map(|_| rng.gen_range(0..extent)).collect();
                let value = f64::from(rng.gen_range(0..8u8));
                k.insert_with_closure(ElementaryCube::new(coords), value).unwrap();
            }
        }
    }
    k
}

/// Optimal bottleneck value and sum of `cost^q` over every partial matching
/// of two finite diagrams; unmatched points go to the diagonal.
pub fn exhaustive_matching(x: &[(f64, f64)], y: &[(f64, f64)], q: f64) -> (f64, f64) {
    let diag = |p: (f64, f64)| (p.1 - p.0) / 2.0;
    let mut best = (f64::INFINITY, f64::INFINITY);
    // assignment[i] = Some(j) or None (diagonal)
    fn rec(
        i: usize,
        x: &[(f64, f64)],
        y: &[(f64, f64)],
        used: &mut [bool],
        assignment: &mut Vec<Option<usize>>,
        visit: &mut dyn FnMut(&[Option<usize>], &[bool]),
    ) {
        if i == x.len() {
            visit(assignment, used);
            return;
        }
        assignment.push(None);
        rec(i + 1, x, y, used, assignment, visit);
        assignment.pop();
        for j in 0..y.len() {
            if !used[j] {
                used[j] = true;
                assignment.push(Some(j));
                rec(i + 1, x, y, used, assignment, visit);
                assignment.pop();
                used[j] = false;
            }
        }
    }
    let mut visit = |assignment: &[Option<usize>], used: &[bool]| {
        let mut costs: Vec<f64> = assignment
            .iter()
            .enumerate()
            .map(|(i, a)| match a {
                Some(j) => (x[i].0 - y[*j].0).abs().max((x[i].1 - y[*j].1).abs()),
                None => diag(x[i]),
            })
            .collect();
        costs.extend(y.iter().zip(used).filter(|(_, u)| !**u).map(|(p, _)| diag(*p)));
        let sup = costs.iter().cloned().fold(0.0, f64::max);
        let sum: f64 = costs.iter().map(|c| c.powf(q)).sum();
        best = (best.0.min(sup), best.1.min(sum));
    };
    rec(0, x, y, &mut vec![false; y.len()], &mut Vec::new(), &mut visit);
    best
}

/// `k`-th largest tent value at `x`, straight from the definition.
pub fn kth_largest_tent(intervals: &[(f64, f64)], k: usize, x: f64) -> f64 {
    let mut v: Vec<f64> = intervals
        .iter()
        .map(|&(b, d)| {
            let m = (b + d) / 2.0;
            if x > b && x <= m {
                x - b
            } else if x > m && x < d {
                d - x
            } else {
                0.0
            }
        })
        .collect();
    v.sort_by(|a, b| b.total_cmp(a));
    v.get(k - 1).copied().unwrap_or(0.0)
}

/// Connected components of the occupied top cubes of a binary bitmap,
/// where cubes touching in any face (down to a vertex) are adjacent.
pub fn occupied_components(bitmap: &GridBitmap) -> usize {
    let dims = bitmap.dims();
    let n = bitmap.values().len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let position = |mut i: usize| -> Vec<i64> {
        dims.iter()
            .map(|&d| {
                let c = (i % d) as i64;
                i /= d;
                c
            })
            .collect()
    };
    let index = |pos: &[i64]| -> Option<usize> {
        let mut idx = 0;
        let mut stride = 1;
        for (&p, &d) in pos.iter().zip(dims) {
            if p < 0 || p >= d as i64 {
                return None;
            }
            idx += p as usize * stride;
            stride *= d;
        }
        Some(idx)
    };
    let k = dims.len() as u32;
    for i in (0..n).filter(|&i| bitmap.values()[i] == 1.0) {
        let pos = position(i);
        for code in 0..3usize.pow(k) {
            let mut c = code;
            let neighbour: Vec<i64> = pos
                .iter()
                .map(|&p| {
                    let off = (c % 3) as i64 - 1;
                    c /= 3;
                    p + off
                })
                .collect();
            if let Some(j) = index(&neighbour) {
                if bitmap.values()[j] == 1.0 {
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
    }
    (0..n)
        .filter(|&i| bitmap.values()[i] == 1.0 && find(&mut parent, i) == i)
        .count()
}

/// Torus triangulation with 9 vertices and 18 triangles, each triangle
/// paired with its insertion value.
pub const TORUS_TRIANGLES: [([u32; 3], f64); 18] = [
    ([1, 4, 8], 0.0),
    ([1, 2, 8], 1.0),
    ([2, 6, 8], 2.0),
    ([2, 3, 6], 3.0),
    ([3, 4, 6], 4.0),
    ([1, 3, 4], 5.0),
    ([4, 5, 9], 6.0),
    ([4, 8, 9], 7.0),
    ([7, 8, 9], 8.0),
    ([6, 7, 8], 9.0),
    ([5, 6, 7], 10.0),
    ([4, 5, 6], 11.0),
    ([1, 2, 5], 12.0),
    ([2, 5, 9], 13.0),
    ([2, 3, 9], 14.0),
    ([3, 7, 9], 15.0),
    ([1, 3, 7], 16.0),
    ([1, 5, 7], 17.0),
];

/// Inserts the torus triangles at the given values; faces take the minimum
/// over the triangles containing them.
pub fn torus(values: &[f64]) -> FilteredComplex {
    let mut k = FilteredComplex::new();
    for ((tri, _), &v) in TORUS_TRIANGLES.iter().zip(values) {
        k.insert_with_closure(Simplex::new(tri.to_vec()).unwrap(), v).unwrap();
    }
    k
}
