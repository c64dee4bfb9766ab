//! Canonical labeling for small graphs by backtracking search.
//!
//! The canonical form of a graph is the relabeling that maximizes the
//! upper-triangle adjacency bit string read in graph6 column order. The
//! search places one vertex per level; a candidate's "column" (its adjacency
//! bits against the already-placed prefix) prunes lexicographically against
//! the best leaf found so far. Whenever a second leaf reproduces the best
//! bit string, the pair of labelings yields an automorphism, and discovered
//! automorphisms prune sibling candidates lying in a common orbit — this is
//! what keeps highly symmetric inputs (cliques, unions of cliques, double
//! covers) tractable.
//!
//! Isomorphic graphs map to identical canonical strings; the test suite
//! certifies this against brute-force enumeration of all labelings.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::write_graph6;

const MAX_CANON_VERTICES: usize = 128;

/// Permutation `old vertex -> new position` whose relabeling is canonical.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n > MAX_CANON_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "canonical labeling supports up to {MAX_CANON_VERTICES} vertices, got {n}"
        )));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut search = Search {
        g,
        n,
        placed: Vec::with_capacity(n),
        is_placed: vec![false; n],
        columns: Vec::with_capacity(n),
        best_columns: Vec::new(),
        best_order: Vec::new(),
        automorphisms: Vec::new(),
    };
    search.descend();
    let mut perm = vec![0usize; n];
    for (pos, &orig) in search.best_order.iter().enumerate() {
        perm[orig] = pos;
    }
    Ok(perm)
}

/// graph6 string of the canonically relabeled graph. Isomorphic graphs map
/// to the same string.
pub fn canonical_form(g: &Graph) -> Result<String> {
    let perm = canonical_labeling(g)?;
    Ok(write_graph6(&g.permuted(&perm).expect("canonical permutation is valid")))
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    placed: Vec<usize>,
    is_placed: Vec<bool>,
    /// column value per level: adjacency bits against the prefix, first
    /// placed vertex most significant, packed into an integer
    columns: Vec<u128>,
    best_columns: Vec<u128>,
    best_order: Vec<usize>,
    /// automorphisms discovered at repeated-best leaves, as old -> old maps
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self) {
        let level = self.placed.len();
        if level == self.n {
            // pruning guarantees no completed leaf compares below the best
            match self.best_order.is_empty() {
                true => {
                    self.best_columns = self.columns.clone();
                    self.best_order = self.placed.clone();
                }
                false => match self.columns.cmp(&self.best_columns) {
                    std::cmp::Ordering::Greater => {
                        self.best_columns = self.columns.clone();
                        self.best_order = self.placed.clone();
                    }
                    std::cmp::Ordering::Equal => {
                        // two labelings share the maximal bit string: their
                        // position-wise pairing is an automorphism
                        let mut auto = vec![0usize; self.n];
                        for (pos, &orig) in self.best_order.iter().enumerate() {
                            auto[orig] = self.placed[pos];
                        }
                        debug_assert!(self.is_automorphism(&auto));
                        if !self.automorphisms.contains(&auto) {
                            self.automorphisms.push(auto);
                        }
                    }
                    std::cmp::Ordering::Less => debug_assert!(false, "pruned leaf completed"),
                },
            }
            return;
        }

        // candidate columns for this level
        let mut tied: Vec<usize> = Vec::new();
        let mut max_col = 0u128;
        for v in 0..self.n {
            if self.is_placed[v] {
                continue;
            }
            let mut col = 0u128;
            for &p in &self.placed {
                col = (col << 1) | u128::from(self.g.has_edge(p, v));
            }
            if tied.is_empty() || col > max_col {
                max_col = col;
                tied.clear();
                tied.push(v);
            } else if col == max_col {
                tied.push(v);
            }
        }

        // lexicographic pruning: while the prefix ties the current best,
        // a column below the best's is hopeless
        if !self.best_order.is_empty()
            && self.columns[..] == self.best_columns[..level]
            && max_col < self.best_columns[level]
        {
            return;
        }

        // one representative per orbit under automorphisms fixing the prefix
        let mut tried: Vec<usize> = Vec::new();
        for &v in &tied {
            if self.in_known_orbit(&tried, v) {
                continue;
            }
            tried.push(v);
            self.placed.push(v);
            self.is_placed[v] = true;
            self.columns.push(max_col);
            self.descend();
            self.columns.pop();
            self.is_placed[v] = false;
            self.placed.pop();
        }
    }

    /// True when some product of known prefix-fixing automorphisms maps an
    /// already-tried candidate to `v` (union-find over generator images).
    fn in_known_orbit(&self, tried: &[usize], v: usize) -> bool {
        if tried.is_empty() || self.automorphisms.is_empty() {
            return false;
        }
        let fixing: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|a| self.placed.iter().all(|&p| a[p] == p))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        // closure of {v} under the fixing generators and their inverses
        let mut orbit = vec![false; self.n];
        let mut stack = vec![v];
        orbit[v] = true;
        while let Some(u) = stack.pop() {
            for a in &fixing {
                let fwd = a[u];
                if !orbit[fwd] {
                    orbit[fwd] = true;
                    stack.push(fwd);
                }
                // inverse image
                if let Some(inv) = a.iter().position(|&x| x == u) {
                    if !orbit[inv] {
                        orbit[inv] = true;
                        stack.push(inv);
                    }
                }
            }
        }
        tried.iter().any(|&t| orbit[t])
    }

    fn is_automorphism(&self, a: &[usize]) -> bool {
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.g.has_edge(u, v) != self.g.has_edge(a[u], a[v]) {
                    return false;
                }
            }
        }
        true
    }
}
