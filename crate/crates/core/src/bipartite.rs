//! Maximum-cardinality bipartite matching by Hopcroft–Karp.

use std::collections::VecDeque;

const UNSEEN: usize = usize::MAX;

/// Finds a maximum matching of the bipartite graph whose left vertex `u` is
/// adjacent to `adj[u]` (right vertices `0..n_right`).
///
/// Returns `mate[u] = Some(v)` for each matched left vertex.
pub fn maximum_matching(adj: &[Vec<usize>], n_right: usize) -> Vec<Option<usize>> {
    let n_left = adj.len();
    let mut mate_left: Vec<Option<usize>> = vec![None; n_left];
    let mut mate_right: Vec<Option<usize>> = vec![None; n_right];
    let mut layer = vec![UNSEEN; n_left];

    loop {
        // BFS from free left vertices, layering by alternating path length.
        let mut queue = VecDeque::new();
        for u in 0..n_left {
            if mate_left[u].is_none() {
                layer[u] = 0;
                queue.push_back(u);
            } else {
                layer[u] = UNSEEN;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                match mate_right[v] {
                    None => found = true,
                    Some(w) if layer[w] == UNSEEN => {
                        layer[w] = layer[u] + 1;
                        queue.push_back(w);
                    }
                    Some(_) => {}
                }
            }
        }
        if !found {
            break;
        }

        let mut next_edge = vec![0usize; n_left];
        for u in 0..n_left {
            if mate_left[u].is_none() {
                augment(u, adj, &mut layer, &mut next_edge, &mut mate_left, &mut mate_right);
            }
        }
    }
    mate_left
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    layer: &mut [usize],
    next_edge: &mut [usize],
    mate_left: &mut [Option<usize>],
    mate_right: &mut [Option<usize>],
) -> bool {
    while next_edge[u] < adj[u].len() {
        let v = adj[u][next_edge[u]];
        next_edge[u] += 1;
        let ok = match mate_right[v] {
            None => true,
            Some(w) => {
                layer[w] == layer[u] + 1
                    && augment(w, adj, layer, next_edge, mate_left, mate_right)
            }
        };
        if ok {
            mate_left[u] = Some(v);
            mate_right[v] = Some(u);
            return true;
        }
    }
    layer[u] = UNSEEN;
    false
}
