//! Exhaustive small-graph corpora, one representative per isomorphism
//! class. Orders beyond 8 (or cubic beyond 12) are out of scope; external
//! generators supply bigger corpora as graph6 files.

use std::collections::HashMap;

use crate::graph::{bits, Graph};
use crate::iso::are_isomorphic;
use crate::props::bfs_distances;

/// Stable (non-randomized) bucket key so dedup work is reproducible.
fn fnv(data: &[u64]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &word in data {
        for byte in word.to_le_bytes() {
            h ^= u64::from(byte);
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}

/// Isomorphism-invariant fingerprint: degree, triangles and the distance
/// multiset per vertex, sorted. Collisions fall back to full isomorphism.
fn invariant_key(g: &Graph) -> u64 {
    let n = g.n();
    let mut profiles: Vec<u64> = (0..n)
        .map(|v| {
            let deg = g.degree(v) as u64;
            let tri = bits(g.neighbors(v))
                .map(|w| (g.neighbors(v) & g.neighbors(w)).count_ones() as u64)
                .sum::<u64>();
            let mut dist_hist = [0u64; 12];
            for d in bfs_distances(g, v) {
                let slot = if d == usize::MAX { 11 } else { d.min(10) };
                dist_hist[slot] += 1;
            }
            fnv(&[deg, tri, fnv(&dist_hist)])
        })
        .collect();
    profiles.sort_unstable();
    profiles.push(n as u64);
    profiles.push(g.edge_count() as u64);
    fnv(&profiles)
}

struct IsoSet {
    buckets: HashMap<u64, Vec<usize>>,
    reps: Vec<Graph>,
}

impl IsoSet {
    fn new() -> Self {
        IsoSet {
            buckets: HashMap::new(),
            reps: Vec::new(),
        }
    }

    /// Keeps `g` if no stored representative is isomorphic to it.
    fn insert(&mut self, g: Graph) -> bool {
        let key = invariant_key(&g);
        let bucket = self.buckets.entry(key).or_default();
        if bucket.iter().any(|&i| are_isomorphic(&self.reps[i], &g).is_some()) {
            return false;
        }
        bucket.push(self.reps.len());
        self.reps.push(g);
        true
    }
}

/// All graphs on `n <= 8` vertices up to isomorphism, built by extending
/// each (n-1)-representative with every neighborhood mask of a new vertex.
/// Counts match the published sequence 1, 1, 2, 4, 11, 34, 156, 1044, 12346.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "full corpus enumeration is capped at 8 vertices");
    if n == 0 {
        return vec![Graph::empty(0).unwrap()];
    }
    let smaller = all_graphs(n - 1);
    let mut set = IsoSet::new();
    for parent in &smaller {
        for mask in 0u64..(1 << (n - 1)) {
            let mut g = Graph::empty(n).unwrap();
            for (u, v) in parent.edges() {
                g.add_edge(u, v).unwrap();
            }
            for v in bits(mask) {
                g.add_edge(v, n - 1).unwrap();
            }
            set.insert(g);
        }
    }
    set.reps
}

/// All 3-regular graphs on `n` vertices up to isomorphism (disconnected
/// ones included). Labeled enumeration fills the lowest incomplete vertex
/// with ascending neighbor choices, so each labeled graph appears once.
pub fn cubic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 12, "cubic enumeration is capped at 12 vertices");
    let mut set = IsoSet::new();
    if n == 0 || n % 2 == 1 || n < 4 {
        return Vec::new();
    }
    let mut deg = vec![0usize; n];
    let mut g = Graph::empty(n).unwrap();
    fill(&mut g, &mut deg, &mut set);
    set.reps
}

fn fill(g: &mut Graph, deg: &mut [usize], set: &mut IsoSet) {
    let n = deg.len();
    let Some(u) = (0..n).find(|&v| deg[v] < 3) else {
        set.insert(g.clone());
        return;
    };
    // Every isomorphism class has a labeling with N(0) = {1,2,3}; fixing it
    // here shrinks the labeled search without losing classes.
    if u == 0 {
        let v = deg[0] + 1;
        g.add_edge(0, v).unwrap();
        deg[0] += 1;
        deg[v] += 1;
        fill(g, deg, set);
        deg[0] -= 1;
        deg[v] -= 1;
        g.remove_edge(0, v).unwrap();
        return;
    }
    // u may only connect upward (lower vertices are complete already).
    let candidates = (u + 1..n)
        .filter(|&v| deg[v] < 3 && !g.has_edge(u, v))
        .count();
    if candidates < 3 - deg[u] {
        return;
    }
    let start = bits(g.neighbors(u))
        .last()
        .map_or(u + 1, |w| (w + 1).max(u + 1));
    for v in start..n {
        if deg[v] == 3 || g.has_edge(u, v) {
            continue;
        }
        g.add_edge(u, v).unwrap();
        deg[u] += 1;
        deg[v] += 1;
        fill(g, deg, set);
        deg[u] -= 1;
        deg[v] -= 1;
        g.remove_edge(u, v).unwrap();
    }
}

/// Connected cubic graphs up to isomorphism; counts match the published
/// sequence 1, 2, 5, 19 for n = 4, 6, 8, 10.
pub fn connected_cubic_graphs(n: usize) -> Vec<Graph> {
    cubic_graphs(n).into_iter().filter(|g| g.is_connected()).collect()
}
