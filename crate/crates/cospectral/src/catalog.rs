//! Named fixture graphs and pairs used by the verification suites, the CLI
//! demos, and the golden-file tests.
//!
//! Each entry is built from its structural definition, never transcribed
//! from a drawing; where a drawing disagrees with a definition, the
//! definition wins.

use crate::constructions::{coalesce, double, family_gknj, family_hknj, tensor_k2};
use crate::graph::Graph;

/// The triangular book `B_3`: an edge joined to three independent vertices,
/// i.e. three triangles sharing one edge. Nonbipartite on 5 vertices with 7
/// edges; the seed graph for the smallest double-cover demo pair.
pub fn book_b3() -> Graph {
    // shared edge {3,4}; pages 0,1,2
    Graph::from_edges(5, &[(3, 4), (0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)])
        .expect("static edge list")
        .with_label("book-b3")
}

/// Bipartite double cover of [`book_b3`] — connected, 10 vertices.
pub fn book_double_cover() -> Graph {
    tensor_k2(&book_b3()).with_label("book-b3-double-cover")
}

/// Two disjoint copies of [`book_b3`] — disconnected, 10 vertices.
pub fn book_two_copies() -> Graph {
    double(&book_b3()).with_label("book-b3-two-copies")
}

/// Two disjoint copies of `K_4`: spectrum `{[3]², [-1]⁶}`.
pub fn two_k4() -> Graph {
    double(&Graph::complete(4)).with_label("two-k4")
}

/// Bipartite double cover of `K_4`: spectrum `{[3]¹, [1]³, [-1]³, [-3]¹}`.
/// Together with [`two_k4`] this is the standard example of a singularly
/// cospectral pair where dropping connectivity breaks almost
/// cospectrality.
pub fn k4_double_cover() -> Graph {
    tensor_k2(&Graph::complete(4)).with_label("k4-double-cover")
}

/// Two copies of `K_5` sharing one edge (vertices 3 and 4): spectrum
/// `{[5]¹, [2]¹, [-1]⁵, [-2]¹}`, inertia `(2, 0, 6)`.
pub fn two_k5_sharing_edge() -> Graph {
    let mut edges = Vec::new();
    for u in 0..5 {
        for v in (u + 1)..5 {
            edges.push((u, v));
        }
    }
    for u in 3..8 {
        for v in (u + 1)..8 {
            edges.push((u, v));
        }
    }
    Graph::from_edges(8, &edges)
        .expect("static edge list")
        .with_label("two-k5-sharing-edge")
}

/// Join of `C_6` (vertices 0..6) with `K_2` (vertices 6, 7): spectrum
/// `{[5]¹, [1]², [-1]³, [-2]²}`, inertia `(3, 0, 5)`. Shares its nonzero
/// singular values `{5, 2, 2, 1⁵}` with [`two_k5_sharing_edge`] while the
/// inertias differ.
pub fn join_c6_k2() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    edges.push((6, 7));
    for u in 0..6 {
        edges.push((u, 6));
        edges.push((u, 7));
    }
    Graph::from_edges(8, &edges)
        .expect("static edge list")
        .with_label("join-c6-k2")
}

/// Coalescence demo: a triangle glued to a 4-cycle at one vertex, with the
/// two parts returned alongside the result. The glue point is vertex 0 of
/// each part.
pub fn triangle_c4_coalescence() -> (Graph, Graph, Graph) {
    let left = Graph::complete(3).with_label("triangle");
    let right = Graph::cycle(4).expect("4 >= 3").with_label("c4");
    let merged = coalesce(&left, 0, &right, 0)
        .expect("valid glue points")
        .with_label("triangle-c4-coalescence");
    (left, right, merged)
}

/// The 11-vertex clique-family pair at `n = 5, j = 3` — the smallest
/// instance drawn in full in the source material for the vertex-added
/// construction.
pub fn clique_family_5_3() -> (Graph, Graph) {
    (
        family_gknj(5, 3).expect("valid parameters"),
        family_hknj(5, 3).expect("valid parameters"),
    )
}

/// All catalog entries by name, for the CLI. Multi-graph entries list
/// every member.
pub fn named(name: &str) -> Option<Vec<Graph>> {
    Some(match name {
        "book-b3" => vec![book_b3()],
        "book-b3-double-cover" => vec![book_double_cover()],
        "book-b3-two-copies" => vec![book_two_copies()],
        "book-pair" => vec![book_double_cover(), book_two_copies()],
        "two-k4" => vec![two_k4()],
        "k4-double-cover" => vec![k4_double_cover()],
        "regular-sc-pair" => vec![k4_double_cover(), two_k4()],
        "two-k5-sharing-edge" => vec![two_k5_sharing_edge()],
        "join-c6-k2" => vec![join_c6_k2()],
        "inertia-sc-pair" => vec![two_k5_sharing_edge(), join_c6_k2()],
        "triangle-c4-coalescence" => {
            let (l, r, m) = triangle_c4_coalescence();
            vec![l, r, m]
        }
        "clique-family-5-3" => {
            let (g, h) = clique_family_5_3();
            vec![g, h]
        }
        _ => return None,
    })
}

/// Names accepted by [`named`], in display order.
pub fn names() -> &'static [&'static str] {
    &[
        "book-b3",
        "book-b3-double-cover",
        "book-b3-two-copies",
        "book-pair",
        "two-k4",
        "k4-double-cover",
        "regular-sc-pair",
        "two-k5-sharing-edge",
        "join-c6-k2",
        "inertia-sc-pair",
        "triangle-c4-coalescence",
        "clique-family-5-3",
    ]
}
