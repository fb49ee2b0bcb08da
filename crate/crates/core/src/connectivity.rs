//! Exact vertex and edge connectivity via unit-capacity max-flow.

use serde::Serialize;

use crate::graph::{bits, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ConnectivityRecord {
    pub kappa: usize,
    pub lambda: usize,
}

/// Exact `kappa` (vertex connectivity, `n-1` for complete graphs) and
/// `lambda` (edge connectivity). Disconnected graphs and orders <= 1 get
/// `(0, 0)`.
pub fn connectivity(g: &Graph) -> ConnectivityRecord {
    if g.n() <= 1 || !g.is_connected() {
        return ConnectivityRecord { kappa: 0, lambda: 0 };
    }
    ConnectivityRecord {
        kappa: vertex_connectivity(g),
        lambda: edge_connectivity(g),
    }
}

/// Dense residual network with BFS augmentation; node count stays tiny
/// (at most 128), so O(V^2) per search is fine.
struct Flow {
    n: usize,
    cap: Vec<u16>, // row-major n x n residual capacities
}

impl Flow {
    fn new(n: usize) -> Self {
        Flow {
            n,
            cap: vec![0; n * n],
        }
    }

    fn add(&mut self, u: usize, v: usize, c: u16) {
        self.cap[u * self.n + v] += c;
    }

    /// Max flow from `s` to `t`, stopping early once `limit` is reached.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut total = 0;
        let mut parent = vec![usize::MAX; self.n];
        while total < limit {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            parent[s] = s;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(s);
            'bfs: while let Some(u) = queue.pop_front() {
                for v in 0..self.n {
                    if parent[v] == usize::MAX && self.cap[u * self.n + v] > 0 {
                        parent[v] = u;
                        if v == t {
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if parent[t] == usize::MAX {
                break;
            }
            // All arcs carry at least 1; augment by the path bottleneck.
            let mut bottleneck = u16::MAX;
            let mut v = t;
            while v != s {
                let u = parent[v];
                bottleneck = bottleneck.min(self.cap[u * self.n + v]);
                v = u;
            }
            let mut v = t;
            while v != s {
                let u = parent[v];
                self.cap[u * self.n + v] -= bottleneck;
                self.cap[v * self.n + u] += bottleneck;
                v = u;
            }
            total += bottleneck as usize;
        }
        total
    }
}

fn edge_connectivity(g: &Graph) -> usize {
    let n = g.n();
    let mut best = g.min_degree();
    for t in 1..n {
        if best == 0 {
            break;
        }
        let mut f = Flow::new(n);
        for (u, v) in g.edges() {
            f.add(u, v, 1);
            f.add(v, u, 1);
        }
        best = best.min(f.max_flow(0, t, best));
    }
    best
}

/// Local vertex connectivity between non-adjacent s, t by vertex splitting:
/// node v becomes v_in = 2v, v_out = 2v+1 with a unit internal arc.
fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    let n = g.n();
    let big = n as u16;
    let mut f = Flow::new(2 * n);
    for v in g.vertices() {
        f.add(2 * v, 2 * v + 1, if v == s || v == t { big } else { 1 });
    }
    for (u, v) in g.edges() {
        f.add(2 * u + 1, 2 * v, big);
        f.add(2 * v + 1, 2 * u, big);
    }
    f.max_flow(2 * s + 1, 2 * t, limit)
}

fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if g.is_complete() {
        return n - 1;
    }
    // A minimum cut misses some vertex of {v} ∪ N(v): if v lies in the cut,
    // v has a neighbor outside it (deg v >= kappa > |cut| - 1), so probing
    // from v and all its neighbors against their non-neighbors is exhaustive.
    let v = (0..n).min_by_key(|&v| g.degree(v)).expect("n >= 2");
    let mut best = n - 1;
    let sources = (1u64 << v) | g.neighbors(v);
    for s in bits(sources) {
        for t in bits(!g.neighbors(s) & !(1u64 << s) & g.vertex_mask()) {
            best = best.min(local_vertex_connectivity(g, s, t, best));
            if best == 0 {
                return 0;
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::graph::Graph;

    #[test]
    fn complete_and_cycle() {
        let k4 = generate::complete(4).unwrap();
        assert_eq!(connectivity(&k4), ConnectivityRecord { kappa: 3, lambda: 3 });
        let c5 = generate::cycle(5).unwrap();
        assert_eq!(connectivity(&c5), ConnectivityRecord { kappa: 2, lambda: 2 });
    }

    #[test]
    fn petersen_three_connected() {
        let p = generate::petersen().unwrap();
        assert_eq!(connectivity(&p), ConnectivityRecord { kappa: 3, lambda: 3 });
    }

    #[test]
    fn singletons_and_disconnected() {
        assert_eq!(
            connectivity(&Graph::empty(1).unwrap()),
            ConnectivityRecord { kappa: 0, lambda: 0 }
        );
        let two = Graph::empty(2).unwrap();
        assert_eq!(connectivity(&two), ConnectivityRecord { kappa: 0, lambda: 0 });
        let k2 = generate::complete(2).unwrap();
        assert_eq!(connectivity(&k2), ConnectivityRecord { kappa: 1, lambda: 1 });
    }

    #[test]
    fn cut_vertex_graph() {
        // Two triangles sharing vertex 2: kappa 1, lambda 2.
        let g = Graph::from_edges(
            5,
            &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)],
        )
        .unwrap();
        assert_eq!(connectivity(&g), ConnectivityRecord { kappa: 1, lambda: 2 });
    }

    #[test]
    fn bridge_graph() {
        // Two triangles joined by a bridge: kappa = lambda = 1.
        let g = Graph::from_edges(
            6,
            &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (2, 3)],
        )
        .unwrap();
        assert_eq!(connectivity(&g), ConnectivityRecord { kappa: 1, lambda: 1 });
    }

    /// Exhaustive oracle: try all vertex/edge subsets of size < k and check
    /// the remainder stays connected.
    fn oracle_kappa(g: &Graph) -> usize {
        let n = g.n();
        if g.is_complete() {
            return n - 1;
        }
        for size in 0..n {
            // all vertex subsets of this size
            for mask in 0u64..(1 << n) {
                if mask.count_ones() as usize != size {
                    continue;
                }
                let mut h = g.clone();
                // deleting in descending index order keeps labels stable
                let mut dropped: Vec<usize> = bits(mask).collect();
                dropped.reverse();
                for v in dropped {
                    h = h.delete_vertex(v).unwrap();
                }
                if h.n() >= 1 && !h.is_connected() {
                    return size;
                }
            }
        }
        n - 1
    }

    fn oracle_lambda(g: &Graph) -> usize {
        if !g.is_connected() {
            return 0;
        }
        let edges = g.edges();
        let m = edges.len();
        for size in 0..=m {
            for mask in 0u64..(1 << m) {
                if mask.count_ones() as usize != size {
                    continue;
                }
                let mut h = g.clone();
                for (i, &(u, v)) in edges.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        h.remove_edge(u, v).unwrap();
                    }
                }
                if !h.is_connected() {
                    return size;
                }
            }
        }
        m
    }

    #[test]
    fn matches_exhaustive_small_cut_oracle() {
        let samples = vec![
            generate::cycle(5).unwrap(),
            generate::complete_bipartite(2, 3).unwrap(),
            generate::path(5).unwrap(),
            generate::prism(3).unwrap(),
            Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap(),
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])
                .unwrap(),
        ];
        for g in samples {
            let rec = connectivity(&g);
            assert_eq!(rec.kappa, oracle_kappa(&g), "kappa mismatch on {g:?}");
            assert_eq!(rec.lambda, oracle_lambda(&g), "lambda mismatch on {g:?}");
        }
    }
}
