//! Immutable simple undirected graphs with bit-packed adjacency rows.
//!
//! Vertices are dense `0..n`. Each adjacency row is a little-endian run of
//! 64-bit words, so the common `n <= 64` case costs one word per row while
//! larger graphs fall through to the same code path with more words. Graphs
//! never change after construction, which makes them safe to share across
//! worker threads without synchronization.

use crate::error::{Error, Result};

/// Simple undirected graph on vertices `0..n`.
///
/// The adjacency relation is symmetric with an empty diagonal; both
/// invariants are enforced by every constructor. The optional `label` is a
/// provenance tag only: it is ignored by equality, hashing and encoding.
#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
    label: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bits == other.bits
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.bits.hash(state);
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words_per_row = n.div_ceil(64).max(1);
        Graph {
            n,
            words_per_row,
            bits: vec![0; n * words_per_row],
            label: None,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges are collapsed;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.set_edge(u, v);
            }
        }
        g
    }

    /// The cycle `C_n` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut g = Self::empty(n);
        for u in 0..n {
            g.set_edge(u, (u + 1) % n);
        }
        Ok(g)
    }

    /// The path `P_n`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 1..n {
            g.set_edge(u - 1, u);
        }
        g
    }

    /// The complete bipartite graph `K_{r,s}` with sides `0..r` and `r..r+s`.
    pub fn complete_bipartite(r: usize, s: usize) -> Self {
        let mut g = Self::empty(r + s);
        for u in 0..r {
            for v in r..(r + s) {
                g.set_edge(u, v);
            }
        }
        g
    }

    /// Attaches a provenance label; structure and identity are unaffected.
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let w = self.words_per_row;
        self.bits[u * w + v / 64] |= 1u64 << (v % 64);
        self.bits[v * w + u / 64] |= 1u64 << (u % 64);
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges `m`.
    pub fn edge_count(&self) -> usize {
        let ones: u32 = self.bits.iter().map(|w| w.count_ones()).sum();
        ones as usize / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.words_per_row + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        let w = self.words_per_row;
        self.bits[v * w..(v + 1) * w]
            .iter()
            .map(|word| word.count_ones() as usize)
            .sum()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let w = self.words_per_row;
        let row = &self.bits[v * w..(v + 1) * w];
        row.iter().enumerate().flat_map(|(wi, &word)| {
            let base = wi * 64;
            BitIter(word).map(move |b| base + b)
        })
    }

    /// All edges `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Degrees sorted ascending. Sums to `2m`.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        ds.sort_unstable();
        ds
    }

    /// `Some(d)` when every vertex has degree `d`.
    pub fn is_regular(&self) -> Option<usize> {
        if self.n == 0 {
            return Some(0);
        }
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    /// BFS 2-coloring. Returns the two color classes (class of vertex 0
    /// first within each component) when no odd cycle exists.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        let left = (0..self.n).filter(|&v| color[v] == 0).collect();
        let right = (0..self.n).filter(|&v| color[v] == 1).collect();
        Some((left, right))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Connectivity via BFS. The empty graph on zero vertices counts as
    /// connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = std::collections::VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == self.n
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation length {} != vertex count {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen[p] = true;
        }
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Checks the structural invariants. Constructors keep these true by
    /// construction; this exists for tests and for decoded input.
    pub fn check_invariants(&self) -> Result<()> {
        for u in 0..self.n {
            if self.has_edge(u, u) {
                return Err(Error::InvalidParameter(format!("self-loop at {u}")));
            }
            for v in 0..self.n {
                if self.has_edge(u, v) != self.has_edge(v, u) {
                    return Err(Error::InvalidParameter(format!(
                        "asymmetric adjacency at ({u},{v})"
                    )));
                }
            }
        }
        // padding bits beyond column n must stay clear
        let w = self.words_per_row;
        for u in 0..self.n {
            for wi in 0..w {
                let hi = (wi + 1) * 64;
                let mask = if self.n >= hi {
                    u64::MAX
                } else if self.n <= wi * 64 {
                    0
                } else {
                    (1u64 << (self.n - wi * 64)) - 1
                };
                if self.bits[u * w + wi] & !mask != 0 {
                    return Err(Error::InvalidParameter(format!("stray bits in row {u}")));
                }
            }
        }
        Ok(())
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

/// Sorted, duplicate-free set of vertex indices, used as the neighborhood
/// of a newly attached vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Every member must index a vertex of a graph on `n` vertices.
    pub fn validate_for(&self, n: usize) -> Result<()> {
        match self.members.last() {
            Some(&max) if max >= n => Err(Error::InvalidParameter(format!(
                "vertex {max} out of range for {n} vertices"
            ))),
            _ => Ok(()),
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter)
    }
}
