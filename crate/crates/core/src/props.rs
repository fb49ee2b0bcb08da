//! Structural predicates bundled into one record per graph.

use serde::Serialize;

use crate::graph::{bits, Graph};

/// Everything the corpus filters and reports need in one pass.
///
/// `diameter` is `None` for disconnected graphs (and 0 for orders 0 and 1).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyRecord {
    pub n: usize,
    pub m: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_regular: bool,
    pub regularity_r: Option<usize>,
    pub is_bipartite: bool,
    pub is_triangle_free: bool,
    pub is_connected: bool,
    pub diameter: Option<usize>,
}

pub fn properties(g: &Graph) -> PropertyRecord {
    let n = g.n();
    let min_degree = g.min_degree();
    let max_degree = g.max_degree();
    let is_regular = min_degree == max_degree;
    let is_connected = g.is_connected();
    PropertyRecord {
        n,
        m: g.edge_count(),
        min_degree,
        max_degree,
        is_regular,
        regularity_r: is_regular.then_some(max_degree),
        is_bipartite: bipartition(g).is_some(),
        is_triangle_free: is_triangle_free(g),
        is_connected,
        diameter: if is_connected { Some(diameter(g)) } else { None },
    }
}

/// Two-colors each component by BFS; `None` when an odd cycle exists.
pub fn bipartition(g: &Graph) -> Option<(u64, u64)> {
    let mut side = [2u8; 64]; // 2 = unvisited
    let mut masks = [0u64; 2];
    for start in g.vertices() {
        if side[start] != 2 {
            continue;
        }
        side[start] = 0;
        masks[0] |= 1 << start;
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for w in bits(g.neighbors(v)) {
                if side[w] == 2 {
                    side[w] = 1 - side[v];
                    masks[side[w] as usize] |= 1 << w;
                    queue.push(w);
                } else if side[w] == side[v] {
                    return None;
                }
            }
        }
    }
    Some((masks[0], masks[1]))
}

pub fn is_triangle_free(g: &Graph) -> bool {
    for (u, v) in g.edges() {
        if g.neighbors(u) & g.neighbors(v) != 0 {
            return false;
        }
    }
    true
}

/// BFS distances from `start`; unreachable vertices get `usize::MAX`.
pub fn bfs_distances(g: &Graph, start: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[start] = 0;
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    let mut d = 0;
    while frontier != 0 {
        d += 1;
        let mut next = 0u64;
        for v in bits(frontier) {
            next |= g.neighbors(v);
        }
        next &= !seen;
        for v in bits(next) {
            dist[v] = d;
        }
        seen |= next;
        frontier = next;
    }
    dist
}

/// Largest pairwise distance; caller guarantees connectivity.
fn diameter(g: &Graph) -> usize {
    let mut best = 0;
    for v in g.vertices() {
        for d in bfs_distances(g, v) {
            debug_assert_ne!(d, usize::MAX, "diameter needs a connected graph");
            best = best.max(d);
        }
    }
    best
}
