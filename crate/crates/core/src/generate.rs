//! Named graph families used to seed experiments.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerateError {
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("family {family} expects {expected} parameter(s), got {got}")]
    ParamCount {
        family: &'static str,
        expected: &'static str,
        got: usize,
    },
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParam { family: &'static str, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn order_guard(family: &'static str, n: usize) -> Result<(), GenerateError> {
    if n > MAX_VERTICES {
        return Err(GenerateError::InvalidParam {
            family,
            reason: format!("order {n} exceeds the {MAX_VERTICES}-vertex limit"),
        });
    }
    Ok(())
}

pub fn complete(n: usize) -> Result<Graph, GenerateError> {
    order_guard("complete", n)?;
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

pub fn cycle(n: usize) -> Result<Graph, GenerateError> {
    order_guard("cycle", n)?;
    if n < 3 {
        return Err(GenerateError::InvalidParam {
            family: "cycle",
            reason: format!("cycle needs at least 3 vertices, got {n}"),
        });
    }
    let mut g = Graph::empty(n)?;
    for v in 0..n {
        g.add_edge(v, (v + 1) % n)?;
    }
    Ok(g)
}

pub fn path(n: usize) -> Result<Graph, GenerateError> {
    order_guard("path", n)?;
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        g.add_edge(v - 1, v)?;
    }
    Ok(g)
}

/// K_{a,b} with part A = 0..a and part B = a..a+b.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GenerateError> {
    order_guard("complete_bipartite", a + b)?;
    let mut g = Graph::empty(a + b)?;
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v)?;
        }
    }
    Ok(g)
}

/// Circular ladder: two k-cycles 0..k and k..2k joined by rungs i -- k+i.
pub fn prism(k: usize) -> Result<Graph, GenerateError> {
    order_guard("prism", 2 * k)?;
    if k < 3 {
        return Err(GenerateError::InvalidParam {
            family: "prism",
            reason: format!("prism needs cycle length >= 3, got {k}"),
        });
    }
    let mut g = Graph::empty(2 * k)?;
    for v in 0..k {
        g.add_edge(v, (v + 1) % k)?;
        g.add_edge(k + v, k + (v + 1) % k)?;
        g.add_edge(v, k + v)?;
    }
    Ok(g)
}

/// Outer 5-cycle 0..5, inner pentagram 5..10, spokes i -- 5+i.
pub fn petersen() -> Result<Graph, GenerateError> {
    let mut g = Graph::empty(10)?;
    for v in 0..5 {
        g.add_edge(v, (v + 1) % 5)?;
        g.add_edge(5 + v, 5 + (v + 2) % 5)?;
        g.add_edge(v, 5 + v)?;
    }
    Ok(g)
}

/// Vertex i adjacent to (i ± d) mod n for each distance d.
pub fn circulant(n: usize, distances: &[usize]) -> Result<Graph, GenerateError> {
    order_guard("circulant", n)?;
    if n == 0 {
        return Err(GenerateError::InvalidParam {
            family: "circulant",
            reason: "circulant needs at least one vertex".into(),
        });
    }
    let mut seen = [false; MAX_VERTICES];
    for &d in distances {
        if d < 1 || d > n / 2 {
            return Err(GenerateError::InvalidParam {
                family: "circulant",
                reason: format!("distance {d} outside 1..={}", n / 2),
            });
        }
        if seen[d] {
            return Err(GenerateError::InvalidParam {
                family: "circulant",
                reason: format!("repeated distance {d}"),
            });
        }
        seen[d] = true;
    }
    let mut g = Graph::empty(n)?;
    for v in 0..n {
        for &d in distances {
            g.add_edge(v, (v + d) % n)?;
        }
    }
    Ok(g)
}

/// Dispatch by family name, for the CLI and FFI surfaces.
pub fn generate(family: &str, params: &[usize]) -> Result<Graph, GenerateError> {
    let one = |family| match params {
        [n] => Ok(*n),
        _ => Err(GenerateError::ParamCount {
            family,
            expected: "1",
            got: params.len(),
        }),
    };
    match family {
        "complete" => complete(one("complete")?),
        "cycle" => cycle(one("cycle")?),
        "path" => path(one("path")?),
        "complete_bipartite" => match params {
            [a, b] => complete_bipartite(*a, *b),
            _ => Err(GenerateError::ParamCount {
                family: "complete_bipartite",
                expected: "2",
                got: params.len(),
            }),
        },
        "prism" => prism(one("prism")?),
        "petersen" => {
            if params.is_empty() {
                petersen()
            } else {
                Err(GenerateError::ParamCount {
                    family: "petersen",
                    expected: "0",
                    got: params.len(),
                })
            }
        }
        "circulant" => match params {
            [n, dists @ ..] if !dists.is_empty() => circulant(*n, dists),
            _ => Err(GenerateError::ParamCount {
                family: "circulant",
                expected: "n followed by at least one distance",
                got: params.len(),
            }),
        },
        other => Err(GenerateError::UnknownFamily(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_shape() {
        let g = petersen().unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
    }

    #[test]
    fn circulant_degrees() {
        let g = circulant(9, &[1, 2]).unwrap();
        assert_eq!(g.n(), 9);
        assert!(g.vertices().all(|v| g.degree(v) == 4));
        // n even with d = n/2 pairs vertices up once
        let h = circulant(6, &[3]).unwrap();
        assert!(h.vertices().all(|v| h.degree(v) == 1));
        assert!(circulant(9, &[5]).is_err());
        assert!(circulant(9, &[0]).is_err());
    }

    #[test]
    fn prism_is_cubic() {
        let g = prism(3).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 9);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
    }

    #[test]
    fn dispatch() {
        assert_eq!(generate("cycle", &[4]).unwrap().edge_count(), 4);
        assert_eq!(generate("petersen", &[]).unwrap().n(), 10);
        assert_eq!(
            generate("complete_bipartite", &[3, 3]).unwrap().edge_count(),
            9
        );
        assert!(matches!(
            generate("moebius", &[4]),
            Err(GenerateError::UnknownFamily(_))
        ));
        assert!(generate("cycle", &[]).is_err());
    }
}
