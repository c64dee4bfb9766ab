//! Graph constructions: double covers, disjoint unions, products, vertex
//! addition (with its spectral-decomposition characteristic polynomial),
//! coalescence, and the parameterized families over complete graphs.
//!
//! Vertex-order conventions are fixed so builds are reproducible bit for
//! bit: two-copy constructions lay out the first copy on `0..n` and the
//! second on `n..2n`; products index `V(G) × V(H)` row-major; an added
//! vertex always takes the last index.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::spectral;

/// Bipartite double cover: adjacency `[[0, A], [A, 0]]`. Vertex `u` of the
/// first copy is adjacent to `n + v` exactly when `uv` is an edge of `f`.
/// Its spectrum is the spectrum of `f` together with its negation.
pub fn tensor_k2(f: &Graph) -> Graph {
    let n = f.vertex_count();
    let mut g = Graph::empty(2 * n);
    for (u, v) in f.edges() {
        g.set_edge(u, n + v);
        g.set_edge(v, n + u);
    }
    g
}

/// Two disjoint copies: adjacency `[[A, 0], [0, A]]`. Doubles every
/// eigenvalue multiplicity.
pub fn double(f: &Graph) -> Graph {
    disjoint_union(f, f)
}

/// Disjoint union, `h` shifted past `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let mut out = Graph::empty(ng + nh);
    for (u, v) in g.edges() {
        out.set_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.set_edge(ng + u, ng + v);
    }
    out
}

fn product_graph(g: &Graph, h: &Graph, rule: impl Fn(bool, bool, bool, bool) -> bool) -> Graph {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let mut out = Graph::empty(ng * nh);
    for g1 in 0..ng {
        for h1 in 0..nh {
            for g2 in 0..ng {
                for h2 in 0..nh {
                    let a = g1 * nh + h1;
                    let b = g2 * nh + h2;
                    if a < b && rule(g1 == g2, g.has_edge(g1, g2), h1 == h2, h.has_edge(h1, h2)) {
                        out.set_edge(a, b);
                    }
                }
            }
        }
    }
    out
}

/// Strong product `G ⊠ H`: coordinates each equal or adjacent, at least one
/// adjacent.
pub fn strong_product(g: &Graph, h: &Graph) -> Graph {
    product_graph(g, h, |ge, ga, he, ha| (ge || ga) && (he || ha))
}

/// Cartesian product `G □ H`: exactly one coordinate moves along an edge.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    product_graph(g, h, |ge, ga, he, ha| (ge && ha) || (ga && he))
}

/// Tensor (categorical) product `G × H`: both coordinates move along edges.
pub fn tensor_product(g: &Graph, h: &Graph) -> Graph {
    product_graph(g, h, |_, ga, _, ha| ga && ha)
}

/// Adds one vertex (index `n`) adjacent exactly to the nonempty set `s`.
pub fn add_vertex(g: &Graph, s: &VertexSet) -> Result<Graph> {
    if s.is_empty() {
        return Err(Error::InvalidParameter(
            "added vertex needs a nonempty neighborhood".into(),
        ));
    }
    let n = g.vertex_count();
    s.validate_for(n)?;
    let mut out = Graph::empty(n + 1);
    for (u, v) in g.edges() {
        out.set_edge(u, v);
    }
    for &v in s.members() {
        out.set_edge(v, n);
    }
    Ok(out)
}

/// Deletes vertex `v` and compacts the indices above it.
pub fn delete_vertex(g: &Graph, v: usize) -> Result<Graph> {
    let n = g.vertex_count();
    if v >= n {
        return Err(Error::InvalidParameter(format!(
            "vertex {v} out of range for {n} vertices"
        )));
    }
    let mut out = Graph::empty(n - 1);
    let map = |u: usize| if u < v { u } else { u - 1 };
    for (a, b) in g.edges() {
        if a != v && b != v {
            out.set_edge(map(a), map(b));
        }
    }
    Ok(out)
}

/// Identifies vertex `gv` of `g` with vertex `hv` of `h`. The merged vertex
/// keeps index `gv`; the remaining vertices of `h` follow after `g`'s, in
/// order. Parallel edges collapse (simple-graph union of neighborhoods).
pub fn coalesce(g: &Graph, gv: usize, h: &Graph, hv: usize) -> Result<Graph> {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    if gv >= ng || hv >= nh {
        return Err(Error::InvalidParameter(format!(
            "coalescence vertices ({gv},{hv}) out of range for ({ng},{nh})"
        )));
    }
    let mut out = Graph::empty(ng + nh - 1);
    for (u, v) in g.edges() {
        out.set_edge(u, v);
    }
    let map = |u: usize| {
        if u == hv {
            gv
        } else {
            ng + if u < hv { u } else { u - 1 }
        }
    };
    for (u, v) in h.edges() {
        out.set_edge(map(u), map(v));
    }
    Ok(out)
}

/// Checks the family parameter ranges shared by the `K_n`-based builders.
fn check_family_params(n: usize, j: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("family needs n >= 3, got {n}")));
    }
    if j == 0 || j > n {
        return Err(Error::InvalidParameter(format!(
            "family needs 1 <= j <= n, got j={j} for n={n}"
        )));
    }
    Ok(())
}

/// Neighborhood of the added vertex: the first `j` vertices of each copy.
fn family_attachment(n: usize, j: usize) -> VertexSet {
    VertexSet::new((0..j).chain(n..n + j))
}

/// Index of the distinguished added vertex in both family builders.
pub fn family_added_vertex(n: usize) -> usize {
    2 * n
}

/// The double cover of `K_n` with one extra vertex attached to the first
/// `j` vertices of each copy.
pub fn family_gknj(n: usize, j: usize) -> Result<Graph> {
    check_family_params(n, j)?;
    let base = tensor_k2(&Graph::complete(n));
    Ok(add_vertex(&base, &family_attachment(n, j))?
        .with_label(format!("gknj({n},{j})")))
}

/// Two disjoint copies of `K_n` with one extra vertex attached to the first
/// `j` vertices of each copy.
pub fn family_hknj(n: usize, j: usize) -> Result<Graph> {
    check_family_params(n, j)?;
    let base = double(&Graph::complete(n));
    Ok(add_vertex(&base, &family_attachment(n, j))?
        .with_label(format!("hknj({n},{j})")))
}

/// `k`-fold coalescence chains of the two family graphs, each round gluing
/// a fresh copy at the distinguished added vertices. Both results have
/// `k(2n + 1) - (k - 1)` vertices; the distinguished vertex keeps index
/// `2n` throughout.
pub fn coalesce_chain(n: usize, j: usize, k: usize) -> Result<(Graph, Graph)> {
    check_family_params(n, j)?;
    if k == 0 {
        return Err(Error::InvalidParameter("chain needs k >= 1".into()));
    }
    let dist = family_added_vertex(n);
    let mut g = family_gknj(n, j)?;
    let mut h = family_hknj(n, j)?;
    for _ in 1..k {
        g = coalesce(&g, dist, &family_gknj(n, j)?, dist)?;
        h = coalesce(&h, dist, &family_hknj(n, j)?, dist)?;
    }
    Ok((
        g.with_label(format!("gknj-chain({n},{j},{k})")),
        h.with_label(format!("hknj-chain({n},{j},{k})")),
    ))
}

/// Characteristic polynomial of `add_vertex(g, s)` assembled from the
/// spectral decomposition of `g` instead of from the built graph:
/// `P*(x) = P(x)·(x - Σ ρ_i²/(x - μ_i))` with `ρ_i = ‖P_i e_S‖` over the
/// distinct eigenvalues `μ_i`. Returns the `n + 2` float coefficients,
/// ascending. Useful as an independent numeric route to cross-check the
/// exact construction.
pub fn rowlinson_charpoly(g: &Graph, s: &VertexSet, tol: f64) -> Result<Vec<f64>> {
    if s.is_empty() {
        return Err(Error::InvalidParameter(
            "added vertex needs a nonempty neighborhood".into(),
        ));
    }
    let n = g.vertex_count();
    s.validate_for(n)?;
    if tol <= 0.0 {
        return Err(Error::InvalidParameter(format!("tolerance {tol} must be > 0")));
    }
    let (values, vectors) = spectral::eigen_decomposition(g)?;

    // group eigenvalue indices into distinct eigenvalues by 10·tol linkage
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).expect("finite"));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &idx in &order {
        match groups.last_mut() {
            Some(group)
                if values[idx] - values[*group.last().unwrap()] <= 10.0 * tol =>
            {
                group.push(idx);
            }
            _ => groups.push(vec![idx]),
        }
    }
    let mus: Vec<f64> = groups
        .iter()
        .map(|grp| grp.iter().map(|&i| values[i]).sum::<f64>() / grp.len() as f64)
        .collect();

    // clustering sanity: regrouped eigenvalues must still reproduce A
    let a = spectral::adjacency_dense(g);
    let mut residual = 0.0f64;
    for i in 0..n {
        for jj in 0..n {
            let mut acc = 0.0;
            for (grp, mu) in groups.iter().zip(&mus) {
                for &k in grp {
                    acc += vectors[i * n + k] * mu * vectors[jj * n + k];
                }
            }
            residual = residual.max((acc - a[i * n + jj]).abs());
        }
    }
    if residual > 1e4 * tol.max(1e-14) {
        return Err(Error::DegenerateClustering { residual });
    }

    // ρ_i² = ‖P_i e_S‖² = Σ_{v in group} ⟨v, e_S⟩²
    let rho_sq: Vec<f64> = groups
        .iter()
        .map(|grp| {
            grp.iter()
                .map(|&k| {
                    let dot: f64 = s.members().iter().map(|&r| vectors[r * n + k]).sum();
                    dot * dot
                })
                .sum()
        })
        .collect();

    // multiply out x·Π(x-μ)^m - Σ ρ² Π(x-μ)^{m or m-1}
    let mut result = float_poly_from_groups(&mus, &groups, None);
    result.insert(0, 0.0); // times x
    for (i, r) in rho_sq.iter().enumerate() {
        let partial = float_poly_from_groups(&mus, &groups, Some(i));
        for (k, c) in partial.iter().enumerate() {
            result[k] -= r * c;
        }
    }
    debug_assert_eq!(result.len(), n + 2);
    Ok(result)
}

/// `Π_i (x - μ_i)^{m_i}`, with one exponent dropped by one when `skip`
/// names a group. Ascending coefficients.
fn float_poly_from_groups(mus: &[f64], groups: &[Vec<usize>], skip: Option<usize>) -> Vec<f64> {
    let mut coeffs = vec![1.0f64];
    for (i, (mu, grp)) in mus.iter().zip(groups).enumerate() {
        let mult = grp.len() - usize::from(skip == Some(i));
        for _ in 0..mult {
            // multiply by (x - mu)
            coeffs.push(0.0);
            for k in (1..coeffs.len()).rev() {
                coeffs[k] = coeffs[k - 1] - mu * coeffs[k];
            }
            coeffs[0] = -mu * coeffs[0];
        }
    }
    coeffs
}

/// Structured description of a single build, validated before execution.
#[derive(Debug, Clone)]
pub enum ConstructionSpec {
    TensorK2 { base: Graph },
    Double { base: Graph },
    DisjointUnion { left: Graph, right: Graph },
    StrongProduct { left: Graph, right: Graph },
    CartesianProduct { left: Graph, right: Graph },
    TensorProduct { left: Graph, right: Graph },
    AddVertex { base: Graph, neighbors: VertexSet },
    FamilyGknj { n: usize, j: usize },
    FamilyHknj { n: usize, j: usize },
    Coalesce { left: Graph, left_vertex: usize, right: Graph, right_vertex: usize },
    CoalesceChain { n: usize, j: usize, copies: usize },
}

impl ConstructionSpec {
    /// Runs the build. Most kinds produce one graph; chains produce the
    /// pair.
    pub fn build(&self) -> Result<Vec<Graph>> {
        Ok(match self {
            Self::TensorK2 { base } => vec![tensor_k2(base)],
            Self::Double { base } => vec![double(base)],
            Self::DisjointUnion { left, right } => vec![disjoint_union(left, right)],
            Self::StrongProduct { left, right } => vec![strong_product(left, right)],
            Self::CartesianProduct { left, right } => vec![cartesian_product(left, right)],
            Self::TensorProduct { left, right } => vec![tensor_product(left, right)],
            Self::AddVertex { base, neighbors } => vec![add_vertex(base, neighbors)?],
            Self::FamilyGknj { n, j } => vec![family_gknj(*n, *j)?],
            Self::FamilyHknj { n, j } => vec![family_hknj(*n, *j)?],
            Self::Coalesce { left, left_vertex, right, right_vertex } => {
                vec![coalesce(left, *left_vertex, right, *right_vertex)?]
            }
            Self::CoalesceChain { n, j, copies } => {
                let (g, h) = coalesce_chain(*n, *j, *copies)?;
                vec![g, h]
            }
        })
    }
}
