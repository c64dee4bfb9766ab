//! Exhaustive generation of small graphs up to isomorphism.
//!
//! Level-by-level augmentation: every graph on `k` vertices arises from some
//! graph on `k - 1` vertices by attaching one new vertex with an arbitrary
//! neighborhood, so extending every representative with every neighborhood
//! mask and deduplicating by canonical form enumerates each isomorphism
//! class exactly once. Intended scale is `n <= 8`.

use std::collections::BTreeMap;

use crate::canon::canonical_form;
use crate::graph::Graph;
use crate::graph6::parse_graph6;

/// All graphs on exactly `n` vertices up to isomorphism, in canonical form,
/// sorted by their canonical graph6 string.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0)];
    }
    let mut level = vec![Graph::empty(1)];
    for k in 2..=n {
        let mut next: BTreeMap<String, Graph> = BTreeMap::new();
        for g in &level {
            for mask in 0u64..(1u64 << (k - 1)) {
                let mut edges = g.edges();
                for u in 0..(k - 1) {
                    if mask >> u & 1 == 1 {
                        edges.push((u, k - 1));
                    }
                }
                let candidate = Graph::from_edges(k, &edges).expect("augmented edges are valid");
                let form = canonical_form(&candidate).expect("within canonical size bounds");
                if !next.contains_key(&form) {
                    let representative = parse_graph6(&form).expect("canonical form parses");
                    next.insert(form, representative);
                }
            }
        }
        level = next.into_values().collect();
    }
    level
}

/// Connected graphs on exactly `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Connected nonbipartite graphs on exactly `n` vertices up to isomorphism.
pub fn connected_nonbipartite_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(|g| g.is_connected() && !g.is_bipartite())
        .collect()
}
