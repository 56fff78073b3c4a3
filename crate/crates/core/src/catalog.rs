//! A few fixed graphs used throughout the tests, the CLI and the demo.

use crate::lattice::{QCycle, ResolutionGraph, Vertex};

/// Rational graph with eight vertices: the chain `v1 - v2 - v3 - v4 - v6 - v8`
/// with `v5` hanging off `v4` and `v7` off `v6`. All curves are `-2` except
/// `v6`, which is `-3`. The curve germ of interest meets `v4`.
pub fn rational_arrow_graph() -> ResolutionGraph {
    ResolutionGraph::from_parts(
        &[
            ("v1", -2, 0),
            ("v2", -2, 0),
            ("v3", -2, 0),
            ("v4", -2, 0),
            ("v5", -2, 0),
            ("v6", -3, 0),
            ("v7", -2, 0),
            ("v8", -2, 0),
        ],
        &[
            ("v1", "v2"),
            ("v2", "v3"),
            ("v3", "v4"),
            ("v4", "v5"),
            ("v4", "v6"),
            ("v6", "v7"),
            ("v6", "v8"),
        ],
    )
    .expect("valid graph")
}

/// `E*_{v4}` on [`rational_arrow_graph`], the cycle cut out by one arrow at `v4`.
pub fn rational_arrow_cycle() -> QCycle {
    rational_arrow_graph().dual_cycle(3)
}

/// Minimally elliptic chain `E1 - E2 - E3` with `E1` of genus one and
/// self-intersection `-1`, the other two rational `-2` curves.
pub fn elliptic_chain() -> ResolutionGraph {
    ResolutionGraph::from_parts(
        &[("E1", -1, 1), ("E2", -2, 0), ("E3", -2, 0)],
        &[("E1", "E2"), ("E2", "E3")],
    )
    .expect("valid graph")
}

/// Two adjacent `-3` nodes, each carrying two legs of `2n - 1` curves of
/// self-intersection `-2`.
pub fn two_node_graph(n: usize) -> ResolutionGraph {
    assert!(n >= 1, "n must be positive");
    let len = 2 * n - 1;
    let mut vertices = vec![Vertex::new("a", -3, 0), Vertex::new("b", -3, 0)];
    let mut edges = vec![(0, 1)];
    for (node, name) in [(0usize, "a"), (1, "b")] {
        for leg in 0..2 {
            let mut prev = node;
            for k in 0..len {
                vertices.push(Vertex::new(format!("{name}{leg}_{k}"), -2, 0));
                let cur = vertices.len() - 1;
                edges.push((prev, cur));
                prev = cur;
            }
        }
    }
    ResolutionGraph::new(vertices, edges).expect("valid graph")
}

/// The `E8` graph: a `-2` node with legs of lengths 1, 2 and 4.
pub fn e8() -> ResolutionGraph {
    star(-2, 0, &[&[-2], &[-2, -2], &[-2, -2, -2, -2]])
}

/// Star-shaped graph with central Euler number `center`, central genus
/// `genus` and legs listed from the centre outward.
pub fn star(center: i64, genus: u32, legs: &[&[i64]]) -> ResolutionGraph {
    let mut vertices = vec![Vertex::new("c", center, genus)];
    let mut edges = Vec::new();
    for (j, leg) in legs.iter().enumerate() {
        let mut prev = 0;
        for (k, &e) in leg.iter().enumerate() {
            vertices.push(Vertex::new(format!("l{j}_{k}"), e, 0));
            let cur = vertices.len() - 1;
            edges.push((prev, cur));
            prev = cur;
        }
    }
    ResolutionGraph::new(vertices, edges).expect("valid graph")
}

/// Minimal resolution graph of the Brieskorn sphere `Sigma(2,3,7)`.
pub fn brieskorn_237() -> ResolutionGraph {
    star(-1, 0, &[&[-2], &[-3], &[-7]])
}

/// Minimal resolution graph of `Sigma(2,3,5)`, i.e. `E8`.
pub fn brieskorn_235() -> ResolutionGraph {
    e8()
}
