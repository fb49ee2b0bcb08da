//! Extended Petersen graphs XP(2n, S): two circulant layers on Z_n with
//! complementary distance sets joined by a spoke perfect matching, where
//! n = 4k+1 and S picks k of the distances 1..=2k.

use serde::Serialize;
use thiserror::Error;

use crate::edge_color::{chromatic_index, ClassVerdict};
use crate::generate;
use crate::graph::Graph;
use crate::iso::are_isomorphic;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum XpError {
    #[error("k must be at least 1, got {k}")]
    KTooSmall { k: usize },
    #[error("distance set must have exactly {expected} elements, got {got}")]
    WrongSetSize { expected: usize, got: usize },
    #[error("distance {d} outside 1..={max}")]
    DistanceOutOfRange { d: usize, max: usize },
    #[error("repeated distance {d}")]
    RepeatedDistance { d: usize },
    #[error("k = {k} builds a graph on {order} vertices, beyond the 64-vertex limit")]
    OrderTooLarge { k: usize, order: usize },
    #[error("scan beyond k = {cap} refused (override the cap to force it)")]
    CapExceeded { k: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XpParams {
    pub k: usize,
    /// Sorted distance set, |S| = k, S ⊆ 1..=2k.
    pub s: Vec<usize>,
}

impl XpParams {
    pub fn new(k: usize, s: Vec<usize>) -> Result<Self, XpError> {
        if k < 1 {
            return Err(XpError::KTooSmall { k });
        }
        if 2 * (4 * k + 1) > 64 {
            return Err(XpError::OrderTooLarge { k, order: 2 * (4 * k + 1) });
        }
        if s.len() != k {
            return Err(XpError::WrongSetSize { expected: k, got: s.len() });
        }
        let mut s = s;
        s.sort_unstable();
        for w in s.windows(2) {
            if w[0] == w[1] {
                return Err(XpError::RepeatedDistance { d: w[0] });
            }
        }
        for &d in &s {
            if d < 1 || d > 2 * k {
                return Err(XpError::DistanceOutOfRange { d, max: 2 * k });
            }
        }
        Ok(XpParams { k, s })
    }

    /// n = 4k + 1, the order of each layer.
    pub fn layer_order(&self) -> usize {
        4 * self.k + 1
    }

    /// Complementary distance set within 1..=2k.
    pub fn s_bar(&self) -> Vec<usize> {
        (1..=2 * self.k).filter(|d| !self.s.contains(d)).collect()
    }
}

/// Layer 1 on vertices 0..n-1 (circulant with distances S), layer 2 on
/// n..2n-1 (circulant with the complement), spokes i -- n+i.
pub fn build_xp(p: &XpParams) -> Graph {
    let n = p.layer_order();
    let inner = generate::circulant(n, &p.s).expect("validated distances");
    let outer = generate::circulant(n, &p.s_bar()).expect("validated distances");
    let mut g = Graph::empty(2 * n).expect("2(4k+1) <= 64 for k <= 7");
    for (u, v) in inner.edges() {
        g.add_edge(u, v).expect("layer 1 in range");
    }
    for (u, v) in outer.edges() {
        g.add_edge(n + u, n + v).expect("layer 2 in range");
    }
    for i in 0..n {
        g.add_edge(i, n + i).expect("spoke in range");
    }
    g
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XpRecord {
    pub s: Vec<usize>,
    pub chromatic_index: usize,
    pub class_label: u8,
    pub petersen_isomorphic: bool,
    /// False marks a Class 2 graph that is not the Petersen graph, the
    /// anomaly this scan exists to surface.
    pub consistent: bool,
}

pub const XP_SCAN_DEFAULT_CAP: usize = 2;

/// Classifies every admissible S for the given k, in lexicographic order.
/// Emits exactly C(2k, k) records. A Class 2 non-Petersen record is
/// reported, never panicked on.
pub fn scan_conjecture(k: usize, cap: usize) -> Result<Vec<XpRecord>, XpError> {
    if k < 1 {
        return Err(XpError::KTooSmall { k });
    }
    if k > cap {
        return Err(XpError::CapExceeded { k, cap });
    }
    let petersen = generate::petersen().expect("static family");
    let mut out = Vec::new();
    let mut subset: Vec<usize> = (1..=k).collect();
    loop {
        let params = XpParams::new(k, subset.clone()).expect("subsets are valid");
        let g = build_xp(&params);
        let ClassVerdict {
            chromatic_index: chi,
            class_label,
            ..
        } = chromatic_index(&g);
        let petersen_isomorphic =
            g.n() == petersen.n() && are_isomorphic(&g, &petersen).is_some();
        out.push(XpRecord {
            s: subset.clone(),
            chromatic_index: chi,
            class_label,
            petersen_isomorphic,
            consistent: class_label == 1 || petersen_isomorphic,
        });
        if !next_subset(&mut subset, 2 * k) {
            break;
        }
    }
    Ok(out)
}

/// Advances a sorted k-subset of 1..=max to its lexicographic successor.
fn next_subset(subset: &mut [usize], max: usize) -> bool {
    let k = subset.len();
    for i in (0..k).rev() {
        if subset[i] < max - (k - 1 - i) {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::bits;

    #[test]
    fn xp_k1_s1_is_petersen() {
        let p = XpParams::new(1, vec![1]).unwrap();
        let g = build_xp(&p);
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        let petersen = generate::petersen().unwrap();
        assert!(are_isomorphic(&g, &petersen).is_some());
    }

    #[test]
    fn xp_k2_is_five_regular() {
        let p = XpParams::new(2, vec![1, 2]).unwrap();
        let g = build_xp(&p);
        assert_eq!(g.n(), 18);
        assert!(g.vertices().all(|v| g.degree(v) == 5));
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(
            XpParams::new(1, vec![1, 2]),
            Err(XpError::WrongSetSize { .. })
        ));
        assert!(matches!(
            XpParams::new(2, vec![1, 5]),
            Err(XpError::DistanceOutOfRange { d: 5, .. })
        ));
        assert!(matches!(XpParams::new(0, vec![]), Err(XpError::KTooSmall { .. })));
        assert!(matches!(
            XpParams::new(2, vec![2, 2]),
            Err(XpError::RepeatedDistance { d: 2 })
        ));
    }

    #[test]
    fn circulant_layer_adjacency() {
        let p = XpParams::new(2, vec![1, 3]).unwrap();
        let g = build_xp(&p);
        let n = p.layer_order();
        for i in 0..n {
            for d in 1..=2 * p.k {
                let expect = p.s.contains(&d);
                assert_eq!(g.has_edge(i, (i + d) % n), expect, "layer1 i={i} d={d}");
                let (a, b) = (n + i, n + (i + d) % n);
                assert_eq!(g.has_edge(a, b), !expect, "layer2 i={i} d={d}");
            }
            assert!(g.has_edge(i, n + i), "spoke {i}");
        }
    }

    #[test]
    fn spokes_form_perfect_matching() {
        let p = XpParams::new(2, vec![2, 4]).unwrap();
        let g = build_xp(&p);
        let n = p.layer_order();
        let mut covered = 0u64;
        for i in 0..n {
            covered |= (1 << i) | (1 << (n + i));
        }
        assert_eq!(covered, g.vertex_mask());
        assert_eq!(bits(covered).count(), 2 * n);
    }

    #[test]
    fn layer_swap_duality() {
        // XP(k, S) is isomorphic to XP(k, S-bar) with layers exchanged
        for (k, s) in [(1, vec![1]), (2, vec![1, 2]), (2, vec![1, 3])] {
            let p = XpParams::new(k, s).unwrap();
            let q = XpParams::new(k, p.s_bar()).unwrap();
            assert!(are_isomorphic(&build_xp(&p), &build_xp(&q)).is_some());
        }
    }

    #[test]
    fn subset_iteration_is_exhaustive() {
        let mut subset = vec![1, 2];
        let mut all = vec![subset.clone()];
        while next_subset(&mut subset, 4) {
            all.push(subset.clone());
        }
        assert_eq!(
            all,
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
    }

    #[test]
    fn k0_and_cap_refusals() {
        assert!(matches!(scan_conjecture(0, 2), Err(XpError::KTooSmall { .. })));
        assert!(matches!(
            scan_conjecture(3, 2),
            Err(XpError::CapExceeded { k: 3, cap: 2 })
        ));
    }
}
