//! Undirected simple graphs on at most 64 vertices, stored as one adjacency
//! bit row per vertex so neighborhood operations are single word ops.

use std::fmt;

use thiserror::Error;

/// Hard vertex cap: one `u64` row per vertex.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {n} exceeds the {MAX_VERTICES}-vertex limit")]
    TooManyVertices { n: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v} is not allowed")]
    SelfLoop { v: usize },
    #[error("({u},{v}) is not an edge")]
    NotAnEdge { u: usize, v: usize },
}

/// Iterates the set bit positions of `mask`, ascending.
#[inline]
pub fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

/// Mask with the lowest `n` bits set.
#[inline]
pub fn low_mask(n: usize) -> u64 {
    debug_assert!(n <= 64);
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An immutable-by-convention simple graph. Rows are kept symmetric and
/// irreflexive, with no bits at positions `>= n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph {
            n,
            adj: [0u64; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        let total: u32 = self.adj[..self.n].iter().map(|r| r.count_ones()).sum();
        (total / 2) as usize
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop { v });
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge { u, v });
        }
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
        Ok(())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.adj[u] >> v) & 1 == 1
    }

    /// Neighborhood of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        debug_assert!(v < self.n);
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        debug_assert!(v < self.n);
        self.adj[v].count_ones() as usize
    }

    /// 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Mask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.n)
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edge list as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Vertices reachable from `start`, as a mask (includes `start`).
    pub fn component_mask(&self, start: usize) -> u64 {
        debug_assert!(start < self.n);
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    /// Graphs on 0 or 1 vertices count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_mask(0) == self.vertex_mask()
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<u64> {
        let mut remaining = self.vertex_mask();
        let mut out = Vec::new();
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let comp = self.component_mask(start);
            out.push(comp);
            remaining &= !comp;
        }
        out
    }

    /// Replaces edge `uv` by a new vertex `w = n` with edges `uw`, `wv`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge { u, v });
        }
        if self.n + 1 > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n: self.n + 1 });
        }
        let mut g = self.clone();
        g.n += 1;
        let w = self.n;
        g.remove_edge(u, v)?;
        g.add_edge(u, w)?;
        g.add_edge(w, v)?;
        Ok(g)
    }

    /// Deletes vertex `v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(v)?;
        let mut g = Graph::empty(self.n - 1)?;
        let remap = |x: usize| if x > v { x - 1 } else { x };
        for (a, b) in self.edges() {
            if a != v && b != v {
                g.add_edge(remap(a), remap(b))?;
            }
        }
        Ok(g)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.remove_edge(u, v)?;
        Ok(g)
    }

    /// Induced subgraph on the masked vertices, relabeled to 0..count;
    /// also returns the new-index -> old-index map.
    pub fn induced_subgraph(&self, mask: u64) -> (Graph, Vec<usize>) {
        let kept: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut new_index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in kept.iter().enumerate() {
            new_index[v] = i;
        }
        let mut g = Graph::empty(kept.len()).expect("subset of a valid order");
        for &v in &kept {
            for w in bits(self.adj[v] & mask) {
                if v < w {
                    g.add_edge(new_index[v], new_index[w]).expect("relabeled in range");
                }
            }
        }
        (g, kept)
    }

    /// Relabels vertices: vertex `i` of `self` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n).expect("same order");
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).expect("valid permutation");
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
