//! High-throughput scan of graph6 streams for singularly cospectral pairs.
//!
//! Each graph gets an exact fingerprint whose `sc_key` — a canonical byte
//! encoding of the zero-stripped characteristic polynomial of `A²` — is
//! shared by two graphs exactly when they are singularly cospectral, so
//! bucketing by key finds every pair without any pairwise polynomial
//! comparison. Isomorphic duplicates are rejected up front via canonical
//! forms. Fingerprinting is embarrassingly parallel; aggregation is a
//! single-owner reduction, and results are independent of the worker count.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_form;
use crate::classify::sc_signature;
use crate::graph::Graph;
use crate::graph6::parse_graph6;
use crate::poly::{char_poly, poly_inertia, Inertia, IntPolynomial};

/// Exact per-graph invariants used as bucket keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub vertices: usize,
    pub edges: usize,
    pub rank: usize,
    pub inertia: Inertia,
    /// Key for singular cospectrality: encoding of the zero-stripped
    /// characteristic polynomial of `A²`. Identical for singularly
    /// cospectral mates regardless of vertex count.
    pub sc_key: String,
    /// Key for cospectrality: encoding of the full characteristic
    /// polynomial.
    pub cp_key: String,
    /// Key for almost cospectrality: encoding of the zero-stripped
    /// characteristic polynomial.
    pub ac_key: String,
}

/// Deterministic textual encoding of a polynomial: comma-joined decimal
/// coefficients, constant term first.
fn poly_key(p: &IntPolynomial) -> String {
    let parts: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    parts.join(",")
}

/// Computes the exact fingerprint of one graph.
pub fn fingerprint(g: &Graph) -> Fingerprint {
    let cp = char_poly(g);
    let inertia = poly_inertia(&cp).expect("characteristic polynomial is nonzero");
    let (reduced, _) = cp.strip_zero_roots().expect("nonzero");
    Fingerprint {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        rank: inertia.positive + inertia.negative,
        inertia,
        sc_key: poly_key(&sc_signature(g)),
        cp_key: poly_key(&cp),
        ac_key: poly_key(&reduced),
    }
}

/// One group of mutually singularly cospectral graphs (at least two
/// members). Pair lists are index pairs into `members`.
#[derive(Debug, Clone, Serialize)]
pub struct Bucket {
    pub sc_key: String,
    /// Canonical graph6 strings, sorted.
    pub members: Vec<String>,
    /// Singularly cospectral but not cospectral.
    pub ncsc_pairs: Vec<(usize, usize)>,
    /// Cospectral (and nonisomorphic, since members are deduplicated).
    pub cospectral_pairs: Vec<(usize, usize)>,
    /// Almost cospectral without being cospectral.
    pub ac_only_pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ScanStats {
    pub lines_read: usize,
    pub parse_errors: usize,
    pub graphs_parsed: usize,
    pub distinct_graphs: usize,
    pub buckets_total: usize,
    pub sc_pairs: usize,
    pub ncsc_pairs: usize,
    pub cospectral_pairs: usize,
    /// Wall time is reported for humans but excluded from the serialized
    /// form so repeated scans stay byte-identical.
    #[serde(skip)]
    pub wall: Option<std::time::Duration>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanError {
    pub line: usize,
    pub message: String,
}

/// Scan outcome: nontrivial buckets (two or more members), statistics, and
/// per-line parse failures.
#[derive(Debug, Clone, Serialize)]
pub struct SearchResult {
    pub buckets: Vec<Bucket>,
    pub stats: ScanStats,
    pub errors: Vec<ScanError>,
}

impl SearchResult {
    /// Every NCSC pair as `(canonical g6, canonical g6)`, lexicographically
    /// ordered within pairs and overall.
    pub fn ncsc_pair_strings(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for b in &self.buckets {
            for &(i, j) in &b.ncsc_pairs {
                out.push((b.members[i].clone(), b.members[j].clone()));
            }
        }
        out.sort();
        out
    }
}

/// Scans graph6 lines. Parse failures are recorded with their 1-based line
/// numbers and the scan continues. `workers = 0` uses the global thread
/// pool; any other count builds a dedicated pool, and the result is
/// independent of the choice.
pub fn scan<'a, I>(lines: I, workers: usize) -> SearchResult
where
    I: IntoIterator<Item = &'a str>,
{
    let lines: Vec<&str> = lines.into_iter().collect();
    match workers {
        0 => scan_inner(&lines),
        w => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .expect("thread pool")
            .install(|| scan_inner(&lines)),
    }
}

fn scan_inner(lines: &[&str]) -> SearchResult {
    let started = Instant::now();
    let mut stats = ScanStats::default();
    let mut errors = Vec::new();

    let mut parsed: Vec<Graph> = Vec::new();
    for (idx, line) in lines.iter().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed == ">>graph6<<" {
            continue;
        }
        stats.lines_read += 1;
        match parse_graph6(trimmed) {
            Ok(g) => parsed.push(g),
            Err(e) => {
                stats.parse_errors += 1;
                errors.push(ScanError {
                    line: idx + 1,
                    message: e.to_string(),
                });
            }
        }
    }
    stats.graphs_parsed = parsed.len();

    // isomorph rejection: canonical form of every parsed graph, in parallel
    let canonical: Vec<String> = parsed
        .par_iter()
        .map(|g| canonical_form(g).expect("scan graphs are within canonical bounds"))
        .collect();
    let mut distinct: BTreeMap<String, Graph> = BTreeMap::new();
    for form in canonical {
        if !distinct.contains_key(&form) {
            let g = parse_graph6(&form).expect("canonical forms parse");
            distinct.insert(form, g);
        }
    }
    stats.distinct_graphs = distinct.len();

    // parallel fingerprinting, then a single-owner bucket reduction
    let entries: Vec<(String, Fingerprint)> = distinct
        .par_iter()
        .map(|(form, g)| (form.clone(), fingerprint(g)))
        .collect();
    let mut buckets: BTreeMap<String, Vec<(String, Fingerprint)>> = BTreeMap::new();
    for (form, fp) in entries {
        buckets.entry(fp.sc_key.clone()).or_default().push((form, fp));
    }
    stats.buckets_total = buckets.len();

    let mut out_buckets = Vec::new();
    for (sc_key, mut members) in buckets {
        if members.len() < 2 {
            continue;
        }
        members.sort_by(|a, b| a.0.cmp(&b.0));
        let mut ncsc_pairs = Vec::new();
        let mut cospectral_pairs = Vec::new();
        let mut ac_only_pairs = Vec::new();
        for i in 0..members.len() {
            for j in (i + 1)..members.len() {
                let cospectral = members[i].1.cp_key == members[j].1.cp_key;
                if cospectral {
                    cospectral_pairs.push((i, j));
                } else {
                    ncsc_pairs.push((i, j));
                    if members[i].1.ac_key == members[j].1.ac_key {
                        ac_only_pairs.push((i, j));
                    }
                }
            }
        }
        stats.sc_pairs += ncsc_pairs.len() + cospectral_pairs.len();
        stats.ncsc_pairs += ncsc_pairs.len();
        stats.cospectral_pairs += cospectral_pairs.len();
        out_buckets.push(Bucket {
            sc_key,
            members: members.into_iter().map(|(form, _)| form).collect(),
            ncsc_pairs,
            cospectral_pairs,
            ac_only_pairs,
        });
    }
    stats.wall = Some(started.elapsed());

    SearchResult {
        buckets: out_buckets,
        stats,
        errors,
    }
}
