//! Maximum bipartite matching (Hopcroft-Karp).

use std::collections::VecDeque;

const FREE: usize = usize::MAX;

/// Size of a maximum matching between `adjacency.len()` left vertices and
/// `right` right vertices.
pub fn maximum_matching(adjacency: &[Vec<usize>], right: usize) -> usize {
    let left = adjacency.len();
    let mut match_left = vec![FREE; left];
    let mut match_right = vec![FREE; right];
    let mut layer = vec![usize::MAX; left];
    let mut size = 0;
    loop {
        // Breadth-first layering from free left vertices.
        let mut queue = VecDeque::new();
        for u in 0..left {
            if match_left[u] == FREE {
                layer[u] = 0;
                queue.push_back(u);
            } else {
                layer[u] = usize::MAX;
            }
        }
        let mut reachable_free = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adjacency[u] {
                let w = match_right[v];
                if w == FREE {
                    reachable_free = true;
                } else if layer[w] == usize::MAX {
                    layer[w] = layer[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if !reachable_free {
            return size;
        }
        let mut next_edge = vec![0usize; left];
        for u in 0..left {
            if match_left[u] == FREE && augment(u, adjacency, &mut match_left, &mut match_right, &mut layer, &mut next_edge) {
                size += 1;
            }
        }
    }
}

/// Iterative layered depth-first search for an augmenting path from `start`.
fn augment(
    start: usize,
    adjacency: &[Vec<usize>],
    match_left: &mut [usize],
    match_right: &mut [usize],
    layer: &mut [usize],
    next_edge: &mut [usize],
) -> bool {
    let mut path: Vec<(usize, usize)> = Vec::new();
    let mut u = start;
    loop {
        let mut advanced = false;
        while next_edge[u] < adjacency[u].len() {
            let v = adjacency[u][next_edge[u]];
            next_edge[u] += 1;
            let w = match_right[v];
            if w == FREE {
                path.push((u, v));
                for &(a, b) in &path {
                    match_left[a] = b;
                    match_right[b] = a;
                }
                return true;
            }
            if layer[w] == layer[u] + 1 {
                path.push((u, v));
                u = w;
                advanced = true;
                break;
            }
        }
        if !advanced {
            layer[u] = usize::MAX;
            match path.pop() {
                Some((prev, _)) => u = prev,
                None => return false,
            }
        }
    }
}
