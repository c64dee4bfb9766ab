//! Named verification sweeps, one per proved statement the exact kernels
//! implement. Each sweep reports how many cases it checked, how many
//! violated the statement (always zero unless a kernel is buggy), and the
//! worst numeric residual where floating point is involved.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use cospectral::classify::{
    check_regular_pair, check_sc_implies_ac, classify_pair, is_cospectral,
    is_singularly_cospectral, sc_signature,
};
use cospectral::constructions::{
    add_vertex, cartesian_product, coalesce, delete_vertex, double, family_gknj, family_hknj,
    rowlinson_charpoly, strong_product, tensor_k2, tensor_product,
};
use cospectral::enumerate::all_graphs;
use cospectral::poly::{char_poly, even_trace_powers, poly_inertia, Inertia, IntPolynomial};
use cospectral::spectral;
use cospectral::walks::cycle_pair;
use cospectral::{write_graph6, Error, Graph, Result, VertexSet};

pub struct Params {
    pub n_max: Option<usize>,
    pub j_max: Option<usize>,
    pub trials: Option<usize>,
    pub seed: Option<u64>,
    pub workers: usize,
}

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: serde_json::Value,
    pub checked: usize,
    pub violations: usize,
    pub details: Vec<String>,
    pub worst_residual: Option<f64>,
}

pub fn run_suite(name: &str, params: &Params) -> Result<SuiteReport> {
    let run = || -> Result<SuiteReport> {
        match name {
            "gfhf" => gfhf(params.n_max.unwrap_or(7)),
            "gknj" => gknj(params.n_max.unwrap_or(8)),
            "rowlinson" => rowlinson(
                params.trials.unwrap_or(100),
                params.seed.unwrap_or(61),
                params.n_max.unwrap_or(10),
            ),
            "schwenk" => schwenk(
                params.trials.unwrap_or(200),
                params.seed.unwrap_or(71),
                params.n_max.unwrap_or(8),
            ),
            "walks" => walks(params.n_max.unwrap_or(6)),
            "sc-implies-ac" => sc_implies_ac(params.n_max.unwrap_or(6)),
            "regularity" => regularity(params.n_max.unwrap_or(6)),
            "cycles" => cycles(params.j_max.or(params.n_max).unwrap_or(10)),
            "products" => products(params.n_max.unwrap_or(4)),
            other => Err(Error::InvalidParameter(format!(
                "unknown suite `{other}` (known: gfhf, gknj, rowlinson, schwenk, walks, \
                 sc-implies-ac, regularity, cycles, products)"
            ))),
        }
    };
    match params.workers {
        0 => run(),
        w => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .expect("thread pool")
            .install(run),
    }
}

fn report(suite: &str, params: serde_json::Value) -> SuiteReport {
    SuiteReport {
        suite: suite.to_string(),
        params,
        checked: 0,
        violations: 0,
        details: Vec::new(),
        worst_residual: None,
    }
}

/// Double cover vs. two copies: NCSC for every connected nonbipartite seed,
/// cospectral for every connected bipartite seed.
fn gfhf(n_max: usize) -> Result<SuiteReport> {
    let mut rep = report("gfhf", serde_json::json!({ "n_max": n_max }));
    for n in 1..=n_max {
        let graphs = all_graphs(n);
        let seeds: Vec<&Graph> = graphs.iter().filter(|g| g.is_connected()).collect();
        let outcomes: Vec<(bool, bool, String)> = seeds
            .par_iter()
            .map(|f| {
                let g = tensor_k2(f);
                let h = double(f);
                let sc = is_singularly_cospectral(&g, &h);
                let cosp = is_cospectral(&g, &h);
                let ok = if f.is_bipartite() { cosp } else { sc && !cosp };
                (ok, f.is_bipartite(), write_graph6(f))
            })
            .collect();
        let mut nonbip = 0;
        for (ok, bip, g6) in outcomes {
            rep.checked += 1;
            nonbip += usize::from(!bip);
            if !ok {
                rep.violations += 1;
                rep.details.push(format!("violation at seed {g6}"));
            }
        }
        rep.details
            .push(format!("n={n}: {} connected seeds ({nonbip} nonbipartite)", seeds.len()));
    }
    Ok(rep)
}

fn family_q(n: usize, j: usize) -> IntPolynomial {
    let x = IntPolynomial::from_int_coeffs(&[0, 1]);
    let cubic = x
        .mul(&IntPolynomial::x_minus(-1))
        .mul(&IntPolynomial::x_minus(n as i64 - 1));
    cubic.sub(&IntPolynomial::x_minus(n as i64 - 1 - j as i64).scale(&BigInt::from(2 * j)))
}

/// Exact factorization identities and the middle-root sign pattern for the
/// clique families, plus the NCSC verdict for every pair.
fn gknj(n_max: usize) -> Result<SuiteReport> {
    let mut rep = report("gknj", serde_json::json!({ "n_max": n_max }));
    for n in 3..=n_max {
        for j in 1..=n {
            rep.checked += 1;
            let g = family_gknj(n, j)?;
            let h = family_hknj(n, j)?;
            let q = family_q(n, j);
            let rhs_g = IntPolynomial::x_minus(1)
                .pow(n - 1)
                .mul(&IntPolynomial::x_minus(-1).pow(n - 2))
                .mul(&IntPolynomial::x_minus(-(n as i64 - 1)))
                .mul(&q);
            let rhs_h = IntPolynomial::x_minus(-1)
                .pow(2 * n - 3)
                .mul(&IntPolynomial::x_minus(n as i64 - 1))
                .mul(&q);
            let expected_signs = if j <= n - 2 {
                Inertia { positive: 2, zero: 0, negative: 1 }
            } else if j == n - 1 {
                Inertia { positive: 1, zero: 1, negative: 1 }
            } else {
                Inertia { positive: 1, zero: 0, negative: 2 }
            };
            let ok = char_poly(&g) == rhs_g
                && char_poly(&h) == rhs_h
                && poly_inertia(&q)? == expected_signs
                && classify_pair(&g, &h).ncsc;
            if !ok {
                rep.violations += 1;
                rep.details.push(format!("violation at n={n} j={j}"));
            }
        }
    }
    rep.details.push(format!(
        "all factorization identities, sign patterns, and NCSC verdicts for n=3..{n_max}"
    ));
    Ok(rep)
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("generated edges are valid")
}

/// Numeric spectral-decomposition polynomial for vertex addition versus the
/// exact characteristic polynomial of the built graph.
fn rowlinson(trials: usize, seed: u64, n_max: usize) -> Result<SuiteReport> {
    let mut rep = report(
        "rowlinson",
        serde_json::json!({ "trials": trials, "seed": seed, "n_max": n_max }),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..trials {
        rep.checked += 1;
        let n = rng.gen_range(2..=n_max.max(2));
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        let mut members: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        if members.is_empty() {
            members.push(rng.gen_range(0..n));
        }
        let s = VertexSet::new(members);
        let numeric = rowlinson_charpoly(&g, &s, 1e-9)?;
        let exact = char_poly(&add_vertex(&g, &s)?);
        for (k, c) in numeric.iter().enumerate() {
            let e: f64 = exact.coeff(k).to_string().parse().expect("small integer");
            worst = worst.max((c - e).abs());
        }
    }
    if worst >= 1e-5 {
        rep.violations += 1;
        rep.details.push(format!("residual {worst:e} exceeds 1e-5"));
    }
    rep.worst_residual = Some(worst);
    Ok(rep)
}

/// Exact coalescence identity on seeded random pairs.
fn schwenk(trials: usize, seed: u64, n_max: usize) -> Result<SuiteReport> {
    let mut rep = report(
        "schwenk",
        serde_json::json!({ "trials": trials, "seed": seed, "n_max": n_max }),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..trials {
        rep.checked += 1;
        let ng = rng.gen_range(1..=n_max);
        let nh = rng.gen_range(1..=n_max);
        let (pg, ph) = (rng.gen_range(0.2..0.9), rng.gen_range(0.2..0.9));
        let g = random_graph(&mut rng, ng, pg);
        let h = random_graph(&mut rng, nh, ph);
        let gv = rng.gen_range(0..ng);
        let hv = rng.gen_range(0..nh);
        let merged = coalesce(&g, gv, &h, hv)?;
        let x = IntPolynomial::from_int_coeffs(&[0, 1]);
        let p_g_del = char_poly(&delete_vertex(&g, gv)?);
        let p_h_del = char_poly(&delete_vertex(&h, hv)?);
        let rhs = char_poly(&g)
            .mul(&p_h_del)
            .add(&p_g_del.mul(&char_poly(&h)))
            .sub(&x.mul(&p_g_del).mul(&p_h_del));
        if char_poly(&merged) != rhs {
            rep.violations += 1;
            rep.details.push(format!("trial {t} mismatch"));
        }
    }
    rep.details
        .push(format!("{}/{} exact matches", rep.checked - rep.violations, rep.checked));
    Ok(rep)
}

/// Walk-count equivalence versus the exact singular test over all pairs in
/// the corpus of graphs on up to `n_max` vertices.
fn walks(n_max: usize) -> Result<SuiteReport> {
    let mut rep = report("walks", serde_json::json!({ "n_max": n_max }));
    let graphs: Vec<Graph> = (1..=n_max).flat_map(all_graphs).collect();
    let profiles: Vec<Vec<BigInt>> = graphs
        .par_iter()
        .map(|g| even_trace_powers(g, n_max.max(1)))
        .collect();
    let sigs: Vec<IntPolynomial> = graphs.par_iter().map(sc_signature).collect();
    let disagreements: Vec<(usize, usize)> = (0..graphs.len())
        .into_par_iter()
        .flat_map_iter(|i| ((i + 1)..graphs.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            let horizon = graphs[i].vertex_count().max(graphs[j].vertex_count()).max(1);
            (profiles[i][..horizon] == profiles[j][..horizon]) != (sigs[i] == sigs[j])
        })
        .collect();
    rep.checked = graphs.len() * (graphs.len() - 1) / 2;
    rep.violations = disagreements.len();
    for (i, j) in disagreements.into_iter().take(10) {
        rep.details
            .push(format!("disagreement: {} vs {}", write_graph6(&graphs[i]), write_graph6(&graphs[j])));
    }
    rep.details.push(format!(
        "{} graphs, horizon = max vertex count per pair",
        graphs.len()
    ));
    Ok(rep)
}

/// Hypothesis-gated implications from singular to almost cospectrality over
/// every singularly cospectral pair in the corpus.
fn sc_implies_ac(n_max: usize) -> Result<SuiteReport> {
    let mut rep = report("sc-implies-ac", serde_json::json!({ "n_max": n_max }));
    let graphs: Vec<Graph> = (1..=n_max).flat_map(all_graphs).collect();
    let sigs: Vec<IntPolynomial> = graphs.par_iter().map(sc_signature).collect();
    let mut applicable = 0usize;
    for i in 0..graphs.len() {
        for j in (i + 1)..graphs.len() {
            if sigs[i] != sigs[j] {
                continue;
            }
            rep.checked += 1;
            match check_sc_implies_ac(&graphs[i], &graphs[j]) {
                Ok(r) => applicable += usize::from(r.any_applies()),
                Err(e) => {
                    rep.violations += 1;
                    rep.details.push(format!(
                        "{} vs {}: {e}",
                        write_graph6(&graphs[i]),
                        write_graph6(&graphs[j])
                    ));
                }
            }
        }
    }
    rep.details
        .push(format!("{applicable} of {} SC pairs met some hypothesis", rep.checked));
    Ok(rep)
}

/// A regular graph is never singularly cospectral with a non-regular graph
/// on the same number of vertices.
fn regularity(n_max: usize) -> Result<SuiteReport> {
    let mut rep = report("regularity", serde_json::json!({ "n_max": n_max }));
    for n in 1..=n_max {
        let graphs = all_graphs(n);
        for i in 0..graphs.len() {
            for j in (i + 1)..graphs.len() {
                let one_regular =
                    graphs[i].is_regular().is_some() != graphs[j].is_regular().is_some();
                if !one_regular {
                    continue;
                }
                rep.checked += 1;
                if let Err(e) = check_regular_pair(&graphs[i], &graphs[j]) {
                    rep.violations += 1;
                    rep.details.push(format!(
                        "{} vs {}: {e}",
                        write_graph6(&graphs[i]),
                        write_graph6(&graphs[j])
                    ));
                }
            }
        }
    }
    rep.details
        .push("every mixed regular/non-regular pair fails the singular test".to_string());
    Ok(rep)
}

/// The cycle demo family: singularly cospectral for every j, NCSC exactly
/// for odd j.
fn cycles(j_max: usize) -> Result<SuiteReport> {
    let mut rep = report("cycles", serde_json::json!({ "j_max": j_max }));
    for j in 3..=j_max.max(3) {
        rep.checked += 1;
        let (g, h) = cycle_pair(j)?;
        let r = classify_pair(&g, &h);
        let ok = r.singularly_cospectral && (r.ncsc == (j % 2 == 1));
        if !ok {
            rep.violations += 1;
            rep.details.push(format!("violation at j={j}"));
        } else {
            rep.details.push(format!(
                "j={j}: SC, {}",
                if r.ncsc { "NCSC" } else { "cospectral" }
            ));
        }
    }
    Ok(rep)
}

/// Edge counts and energies of the three clique products: reports which
/// pair of products realizes the published edge-count formulas and checks
/// that this pair is equienergetic without being singularly cospectral.
fn products(r: usize) -> Result<SuiteReport> {
    let s = r;
    if r < 4 {
        return Err(Error::InvalidParameter(
            "products needs r = s >= 4 (set via --n-max)".into(),
        ));
    }
    let mut rep = report("products", serde_json::json!({ "r": r, "s": s }));
    let (kr, ks) = (Graph::complete(r), Graph::complete(s));
    let cart = cartesian_product(&kr, &ks);
    let tens = tensor_product(&kr, &ks);
    let strong = strong_product(&kr, &ks);
    let formula_a = r * s * (r + s - 2) / 2;
    let formula_b = r * s * (r - 1) * (s - 1) / 2;
    rep.details.push(format!(
        "edge counts: cartesian {}, tensor {}, strong {}",
        cart.edge_count(),
        tens.edge_count(),
        strong.edge_count()
    ));
    rep.details.push(format!(
        "published formulas: rs(r+s-2)/2 = {formula_a} (matches cartesian), rs(r-1)(s-1)/2 = {formula_b} (matches tensor)"
    ));
    rep.checked = 3;
    if cart.edge_count() != formula_a || tens.edge_count() != formula_b {
        rep.violations += 1;
        rep.details.push("edge-count formulas did not match the expected products".into());
    }
    let e_cart = spectral::energy(&cart, 1e-9)?;
    let e_tens = spectral::energy(&tens, 1e-9)?;
    let gap = (e_cart - e_tens).abs();
    rep.worst_residual = Some(gap);
    if gap > 1e-6 * e_cart.max(1.0) {
        rep.violations += 1;
        rep.details.push(format!("products are not equienergetic: gap {gap:e}"));
    }
    if is_singularly_cospectral(&cart, &tens) {
        rep.violations += 1;
        rep.details.push("cartesian and tensor products must not be singularly cospectral".into());
    }
    rep.details.push(format!(
        "energies {e_cart:.6} vs {e_tens:.6}: equienergetic, not singularly cospectral"
    ));
    Ok(rep)
}
