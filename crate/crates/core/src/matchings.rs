//! Perfect matching enumeration, poor matchability, disjoint matching
//! pairs, and the odd-cut r-graph test.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{bits, Graph};

/// Pairwise-disjoint edges covering their endpoints; pairs are `(u, v)`
/// with `u < v`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn is_perfect_in(&self, g: &Graph) -> bool {
        let mut covered = 0u64;
        for &(u, v) in &self.pairs {
            if !g.has_edge(u, v) || covered & ((1 << u) | (1 << v)) != 0 {
                return false;
            }
            covered |= (1 << u) | (1 << v);
        }
        covered == g.vertex_mask()
    }

    pub fn shares_edge_with(&self, other: &Matching) -> bool {
        // both sorted; merge scan
        let (mut i, mut j) = (0, 0);
        while i < self.pairs.len() && j < other.pairs.len() {
            match self.pairs[i].cmp(&other.pairs[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    /// Sorted "u-v" pair list for the report schema.
    pub fn to_pair_list(&self) -> Vec<String> {
        self.pairs.iter().map(|(u, v)| format!("{u}-{v}")).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerfectMatchings {
    pub matchings: Vec<Matching>,
    /// Set when enumeration stopped at the cap; never silent.
    pub truncated: bool,
}

/// All perfect matchings in deterministic order (lowest unmatched vertex,
/// then ascending neighbor). The empty graph has one (empty) perfect
/// matching; odd orders have none.
pub fn perfect_matchings(g: &Graph, cap: usize) -> PerfectMatchings {
    let mut out = PerfectMatchings {
        matchings: Vec::new(),
        truncated: false,
    };
    if g.n() % 2 == 1 {
        return out;
    }
    let mut current: Vec<(usize, usize)> = Vec::with_capacity(g.n() / 2);
    enumerate(g, 0, &mut current, cap, &mut out);
    out
}

fn enumerate(
    g: &Graph,
    matched: u64,
    current: &mut Vec<(usize, usize)>,
    cap: usize,
    out: &mut PerfectMatchings,
) -> bool {
    if matched == g.vertex_mask() {
        if out.matchings.len() == cap {
            out.truncated = true;
            return false;
        }
        out.matchings.push(Matching {
            pairs: current.clone(),
        });
        return true;
    }
    let u = (!matched & g.vertex_mask()).trailing_zeros() as usize;
    for v in bits(g.neighbors(u) & !matched) {
        current.push((u, v));
        let more = enumerate(g, matched | (1 << u) | (1 << v), current, cap, out);
        current.pop();
        if !more {
            return false;
        }
    }
    true
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("perfect matching enumeration exceeded the cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("odd-set sweep refuses n = {n} > {max} vertices")]
    SizeLimit { n: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PoorMatchability {
    pub poorly_matchable: bool,
    pub pm_count: usize,
    /// Disjoint pair disproving poor matchability, when one exists.
    pub witness: Option<(Matching, Matching)>,
}

/// True iff every two perfect matchings intersect. Graphs with at most one
/// perfect matching are vacuously poorly matchable; `pm_count` lets the
/// caller tell the difference. Errs only if enumeration would pass `cap`
/// without settling the verdict.
pub fn is_poorly_matchable(g: &Graph, cap: usize) -> Result<PoorMatchability, MatchingError> {
    let enumerated = perfect_matchings(g, cap);
    // A disjoint pair found among the enumerated prefix is already decisive.
    for i in 0..enumerated.matchings.len() {
        for j in i + 1..enumerated.matchings.len() {
            if !enumerated.matchings[i].shares_edge_with(&enumerated.matchings[j]) {
                return Ok(PoorMatchability {
                    poorly_matchable: false,
                    pm_count: enumerated.matchings.len(),
                    witness: Some((
                        enumerated.matchings[i].clone(),
                        enumerated.matchings[j].clone(),
                    )),
                });
            }
        }
    }
    if enumerated.truncated {
        return Err(MatchingError::CapExceeded { cap });
    }
    Ok(PoorMatchability {
        poorly_matchable: true,
        pm_count: enumerated.matchings.len(),
        witness: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DisjointPmVerdict {
    pub has_disjoint_pair: bool,
    pub pm_count: usize,
    pub witness: Option<(Matching, Matching)>,
}

/// Two edge-disjoint perfect matchings, if any. Graphs with fewer than two
/// perfect matchings report false with `pm_count` attached.
pub fn has_two_disjoint_pms(g: &Graph, cap: usize) -> Result<DisjointPmVerdict, MatchingError> {
    let poor = is_poorly_matchable(g, cap)?;
    Ok(DisjointPmVerdict {
        has_disjoint_pair: !poor.poorly_matchable && poor.pm_count >= 2,
        pm_count: poor.pm_count,
        witness: poor.witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddCutWitness {
    /// Bit mask of the violating odd set X.
    pub vertex_set: u64,
    pub cut_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RGraphVerdict {
    pub is_r_graph: bool,
    pub reason: Option<String>,
    pub witness: Option<OddCutWitness>,
}

pub const ODD_CUT_MAX_N: usize = 24;

/// r-graph test: r-regular and every odd vertex set X sends at least r
/// edges to its complement. Gray-code sweep with incremental cut updates;
/// refuses n > 24 (distinct from a false verdict).
pub fn is_r_graph(g: &Graph, r: usize) -> Result<RGraphVerdict, MatchingError> {
    let n = g.n();
    if n > ODD_CUT_MAX_N {
        return Err(MatchingError::SizeLimit { n, max: ODD_CUT_MAX_N });
    }
    if !(g.vertices()).all(|v| g.degree(v) == r) {
        return Ok(RGraphVerdict {
            is_r_graph: false,
            reason: Some(format!("not {r}-regular")),
            witness: None,
        });
    }
    if n == 0 {
        return Ok(RGraphVerdict {
            is_r_graph: true,
            reason: None,
            witness: None,
        });
    }
    let mut x = 0u64; // current subset, visited in Gray-code order
    let mut cut = 0usize;
    let mut size = 0usize;
    for i in 1u64..(1 << n) {
        let flip = (i.trailing_zeros()) as usize; // gray(i) ^ gray(i-1) = 1 << tz(i)
        let bit = 1u64 << flip;
        if x & bit == 0 {
            // entering: edges into the old X leave the cut, the rest join it
            cut += g.degree(flip);
            cut -= 2 * (g.neighbors(flip) & x).count_ones() as usize;
            x |= bit;
            size += 1;
        } else {
            x &= !bit;
            size -= 1;
            cut += 2 * (g.neighbors(flip) & x).count_ones() as usize;
            cut -= g.degree(flip);
        }
        if size % 2 == 1 && cut < r {
            return Ok(RGraphVerdict {
                is_r_graph: false,
                reason: Some("odd set with deficient cut".into()),
                witness: Some(OddCutWitness {
                    vertex_set: x,
                    cut_size: cut,
                }),
            });
        }
    }
    Ok(RGraphVerdict {
        is_r_graph: true,
        reason: None,
        witness: None,
    })
}
