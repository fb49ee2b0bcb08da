//! Blue-red vertex partitions with a degree cap on the blue side, a degree
//! floor on the red side, and a forbidden path length inside the red side.
//! The three thresholds are parameters so relaxations can be scanned.

use serde::Serialize;

use crate::graph::{bits, Graph};

/// Blue/red split of the vertex set, stored as the blue mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub blue: u64,
}

impl Bipartition {
    pub fn red(&self, g: &Graph) -> u64 {
        g.vertex_mask() & !self.blue
    }

    pub fn blue_vertices(&self) -> Vec<usize> {
        bits(self.blue).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrumbyParams {
    /// Max degree inside the blue-induced subgraph.
    pub max_blue_degree: usize,
    /// Min degree inside the red-induced subgraph (vacuous when red is empty).
    pub min_red_degree: usize,
    /// Number of edges of the forbidden path in the red subgraph. A path
    /// with k edges is a subgraph path on k+1 distinct vertices, not
    /// necessarily induced.
    pub forbidden_red_path_edges: usize,
}

impl Default for CrumbyParams {
    fn default() -> Self {
        CrumbyParams {
            max_blue_degree: 1,
            min_red_degree: 1,
            forbidden_red_path_edges: 3,
        }
    }
}

impl CrumbyParams {
    /// Pointwise comparison: `self` is weaker than (or equal to) `other`
    /// when every partition valid under `other` stays valid under `self`.
    pub fn weaker_or_equal(&self, other: &CrumbyParams) -> bool {
        self.max_blue_degree >= other.max_blue_degree
            && self.min_red_degree <= other.min_red_degree
            && self.forbidden_red_path_edges >= other.forbidden_red_path_edges
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CrumbyViolation {
    BlueDegree { vertex: usize, degree: usize },
    RedMinDegree { vertex: usize, degree: usize },
    RedPath { path: Vec<usize> },
}

/// `None` means the partition satisfies all three clauses.
pub fn check_crumby(
    g: &Graph,
    p: &Bipartition,
    params: &CrumbyParams,
) -> Option<CrumbyViolation> {
    let blue = p.blue & g.vertex_mask();
    let red = g.vertex_mask() & !blue;
    for v in bits(blue) {
        let d = (g.neighbors(v) & blue).count_ones() as usize;
        if d > params.max_blue_degree {
            return Some(CrumbyViolation::BlueDegree { vertex: v, degree: d });
        }
    }
    for v in bits(red) {
        let d = (g.neighbors(v) & red).count_ones() as usize;
        if d < params.min_red_degree {
            return Some(CrumbyViolation::RedMinDegree { vertex: v, degree: d });
        }
    }
    if let Some(path) = find_path_in(g, red, params.forbidden_red_path_edges) {
        return Some(CrumbyViolation::RedPath { path });
    }
    None
}

/// A simple path with exactly `edges` edges inside the induced subgraph on
/// `allowed`, if one exists. `edges == 0` finds a single vertex.
pub fn find_path_in(g: &Graph, allowed: u64, edges: usize) -> Option<Vec<usize>> {
    for start in bits(allowed) {
        let mut path = vec![start];
        if dfs_path(g, allowed, start, 1 << start, edges, &mut path) {
            return Some(path);
        }
    }
    None
}

fn dfs_path(
    g: &Graph,
    allowed: u64,
    v: usize,
    visited: u64,
    edges_left: usize,
    path: &mut Vec<usize>,
) -> bool {
    if edges_left == 0 {
        return true;
    }
    for w in bits(g.neighbors(v) & allowed & !visited) {
        path.push(w);
        if dfs_path(g, allowed, w, visited | (1 << w), edges_left - 1, path) {
            return true;
        }
        path.pop();
    }
    false
}

/// First valid partition in mask order, or `None` after exhausting all
/// 2^n masks (n <= 20) or the pruned backtracking search (n > 20).
pub fn find_crumby(g: &Graph, params: &CrumbyParams) -> Option<Bipartition> {
    if g.n() <= 20 {
        for blue in 0u64..(1u64 << g.n()) {
            let p = Bipartition { blue };
            if check_crumby(g, &p, params).is_none() {
                return Some(p);
            }
        }
        None
    } else {
        let mut blue = 0u64;
        search(g, params, 0, &mut blue).then_some(Bipartition { blue })
    }
}

/// Backtracking with clause-based pruning, keyed on the vertex just
/// colored. Assign vertices in index order; blue degree and red paths can
/// only grow, red degree only shrinks as neighbors leave the pool.
fn search(g: &Graph, params: &CrumbyParams, v: usize, blue: &mut u64) -> bool {
    let n = g.n();
    if v == n {
        return check_crumby(g, &Bipartition { blue: *blue }, params).is_none();
    }
    let assigned = (1u64 << v) - 1;
    for color_blue in [false, true] {
        if color_blue {
            *blue |= 1 << v;
        } else {
            *blue &= !(1 << v);
        }
        if !prune(g, params, v, *blue, assigned | (1 << v)) && search(g, params, v + 1, blue) {
            return true;
        }
    }
    *blue &= !(1 << v);
    false
}

fn prune(g: &Graph, params: &CrumbyParams, v: usize, blue: u64, assigned: u64) -> bool {
    let red = assigned & !blue;
    if blue >> v & 1 == 1 {
        // blue degrees among assigned vertices only grow
        let mut over = (g.neighbors(v) & blue).count_ones() as usize > params.max_blue_degree;
        for w in bits(g.neighbors(v) & blue) {
            over |= (g.neighbors(w) & blue).count_ones() as usize > params.max_blue_degree;
        }
        over
    } else {
        // potential red degree: assigned-red plus not-yet-assigned neighbors
        let potential = (g.neighbors(v) & (red | !assigned) & g.vertex_mask()).count_ones()
            as usize;
        if potential < params.min_red_degree {
            return true;
        }
        // a forbidden path fully inside assigned red stays forbidden
        path_through(g, red, v, params.forbidden_red_path_edges)
    }
}

/// Does a simple path with `edges` edges inside `allowed` pass through `v`?
fn path_through(g: &Graph, allowed: u64, v: usize, edges: usize) -> bool {
    if allowed >> v & 1 == 0 {
        return false;
    }
    // split the path at v: one arm of i edges, the other of edges - i,
    // vertex-disjoint apart from v itself
    for i in 0..=edges {
        if split_paths(g, allowed, v, v, 1 << v, i, edges - i) {
            return true;
        }
    }
    false
}

fn split_paths(
    g: &Graph,
    allowed: u64,
    cur: usize,
    center: usize,
    used: u64,
    left: usize,
    right: usize,
) -> bool {
    if left == 0 {
        return right_path(g, allowed, center, used, right);
    }
    for w in bits(g.neighbors(cur) & allowed & !used) {
        if split_paths(g, allowed, w, center, used | (1 << w), left - 1, right) {
            return true;
        }
    }
    false
}

fn right_path(g: &Graph, allowed: u64, v: usize, used: u64, edges_left: usize) -> bool {
    if edges_left == 0 {
        return true;
    }
    for w in bits(g.neighbors(v) & allowed & !used) {
        if right_path(g, allowed, w, used | (1 << w), edges_left - 1) {
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelaxationPoint {
    pub params: CrumbyParams,
    pub exists: bool,
    pub witness: Option<Bipartition>,
    /// True when existence was inherited from a stronger point's witness
    /// instead of a fresh search.
    pub inherited: bool,
}

/// Evaluates each lattice point; existence at a stronger point carries its
/// witness to every weaker point (monotone closure).
pub fn relaxation_scan(g: &Graph, lattice: &[CrumbyParams]) -> Vec<RelaxationPoint> {
    let mut out: Vec<RelaxationPoint> = Vec::with_capacity(lattice.len());
    for params in lattice {
        let inherited_witness = out
            .iter()
            .filter(|p| p.exists && params.weaker_or_equal(&p.params))
            .filter_map(|p| p.witness)
            .find(|w| check_crumby(g, w, params).is_none());
        if let Some(w) = inherited_witness {
            out.push(RelaxationPoint {
                params: *params,
                exists: true,
                witness: Some(w),
                inherited: true,
            });
            continue;
        }
        let witness = find_crumby(g, params);
        out.push(RelaxationPoint {
            params: *params,
            exists: witness.is_some(),
            witness,
            inherited: false,
        });
    }
    out
}
