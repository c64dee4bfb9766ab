//! Acceptance suite: one test per published criterion, each printing a
//! pass line with its measured scale. Every tolerance is pinned in the
//! assertion itself.

use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cospectral::catalog;
use cospectral::classify::{
    check_sc_implies_ac, classify_pair, is_cospectral, is_singularly_cospectral, sc_signature,
};
use cospectral::constructions::{
    add_vertex, coalesce, coalesce_chain, delete_vertex, double, family_gknj, family_hknj,
    rowlinson_charpoly, tensor_k2,
};
use cospectral::enumerate::{all_graphs, connected_nonbipartite_graphs};
use cospectral::graph6::parse_graph6_lines;
use cospectral::poly::{char_poly, even_trace_powers, inertia, poly_inertia, Inertia, IntPolynomial};
use cospectral::search::scan;
use cospectral::spectral::SpectrumNumeric;
use cospectral::walks::cycle_pair;
use cospectral::{parse_graph6, write_graph6, Graph, VertexSet};

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

fn assert_groups(spec: &SpectrumNumeric, expected: &[(f64, usize)], tol: f64) {
    assert_eq!(spec.groups.len(), expected.len(), "group count: {:?}", spec.groups);
    for ((v, m), (ev, em)) in spec.groups.iter().zip(expected) {
        assert!((v - ev).abs() <= tol, "group value {v} vs {ev}");
        assert_eq!(m, em, "multiplicity at {ev}");
    }
}

#[test]
fn criterion_01_complete_graph_char_poly() {
    let started = Instant::now();
    for n in 2..=10usize {
        let expected = IntPolynomial::x_minus(n as i64 - 1)
            .mul(&IntPolynomial::x_minus(-1).pow(n - 1));
        assert_eq!(char_poly(&Graph::complete(n)), expected, "K_{n}");
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 0.1, "took {elapsed:?}, budget 0.1 s");
    println!("criterion 01: PASS — K_n identity exact for n=2..10 in {elapsed:?}");
}

#[test]
fn criterion_02_regular_pair_reproduction() {
    let two_k4 = catalog::two_k4();
    let cover = catalog::k4_double_cover();
    assert_groups(
        &SpectrumNumeric::compute(&two_k4, 1e-9).unwrap(),
        &[(3.0, 2), (-1.0, 6)],
        1e-9,
    );
    assert_groups(
        &SpectrumNumeric::compute(&cover, 1e-9).unwrap(),
        &[(3.0, 1), (1.0, 3), (-1.0, 3), (-3.0, 1)],
        1e-9,
    );
    let report = classify_pair(&two_k4, &cover);
    assert!(report.singularly_cospectral);
    assert!(!report.almost_cospectral);
    println!("criterion 02: PASS — spectra within 1e-9, SC true, almost-cospectral false");
}

#[test]
fn criterion_03_inertia_pair_reproduction() {
    let h1 = catalog::two_k5_sharing_edge();
    let h2 = catalog::join_c6_k2();
    assert_eq!(h1.vertex_count(), 8);
    assert_eq!(h2.vertex_count(), 8);
    assert_groups(
        &SpectrumNumeric::compute(&h1, 1e-9).unwrap(),
        &[(5.0, 1), (2.0, 1), (-1.0, 5), (-2.0, 1)],
        1e-9,
    );
    assert_groups(
        &SpectrumNumeric::compute(&h2, 1e-9).unwrap(),
        &[(5.0, 1), (1.0, 2), (-1.0, 3), (-2.0, 2)],
        1e-9,
    );
    assert!(is_singularly_cospectral(&h1, &h2));
    assert_eq!(inertia(&h1), Inertia { positive: 2, zero: 0, negative: 6 });
    assert_eq!(inertia(&h2), Inertia { positive: 3, zero: 0, negative: 5 });
    println!("criterion 03: PASS — 8-vertex pair spectra, SC, and exact inertias (2,0,6)/(3,0,5)");
}

#[test]
fn criterion_04_double_cover_sweep_nonbipartite_le7() {
    let started = Instant::now();
    // corpus supplied as graph6: enumerate, encode, and parse back
    let expected_counts = [(3usize, 1usize), (4, 3), (5, 16), (6, 95), (7, 809)];
    let mut corpus_text = String::from(">>graph6<<\n");
    for &(n, count) in &expected_counts {
        let graphs = connected_nonbipartite_graphs(n);
        assert_eq!(graphs.len(), count, "connected nonbipartite count at n={n}");
        for g in &graphs {
            corpus_text.push_str(&write_graph6(g));
            corpus_text.push('\n');
        }
    }
    let (parsed, errors) = parse_graph6_lines(&corpus_text);
    assert!(errors.is_empty());
    assert_eq!(parsed.len(), 924);

    for (line, f) in &parsed {
        let g = tensor_k2(f);
        let h = double(f);
        assert!(
            is_singularly_cospectral(&g, &h),
            "line {line}: {} not SC",
            write_graph6(f)
        );
        assert!(
            !is_cospectral(&g, &h),
            "line {line}: {} unexpectedly cospectral",
            write_graph6(f)
        );
    }

    // sharpness: for bipartite seeds the two constructions are cospectral
    let mut bipartite_checked = 0;
    for n in 1..=7usize {
        for f in all_graphs(n)
            .into_iter()
            .filter(|g| g.is_connected() && g.is_bipartite())
        {
            assert!(is_cospectral(&tensor_k2(&f), &double(&f)));
            bipartite_checked += 1;
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "took {elapsed:?}, budget 60 s");
    println!(
        "criterion 04: PASS — 924/924 nonbipartite seeds give NCSC pairs, \
         {bipartite_checked} bipartite seeds give cospectral pairs, single-threaded in {elapsed:?}"
    );
}

fn family_q(n: usize, j: usize) -> IntPolynomial {
    // x(x+1)(x-(n-1)) - 2j(x-(n-1-j))
    let x = IntPolynomial::from_int_coeffs(&[0, 1]);
    let cubic = x
        .mul(&IntPolynomial::x_minus(-1))
        .mul(&IntPolynomial::x_minus(n as i64 - 1));
    let linear = IntPolynomial::x_minus(n as i64 - 1 - j as i64).scale(&BigInt::from(2 * j));
    cubic.sub(&linear)
}

#[test]
fn criterion_05_clique_family_identities() {
    for n in 3..=8usize {
        for j in 1..=n {
            let g = family_gknj(n, j).unwrap();
            let h = family_hknj(n, j).unwrap();
            let q = family_q(n, j);

            let rhs_g = IntPolynomial::x_minus(1)
                .pow(n - 1)
                .mul(&IntPolynomial::x_minus(-1).pow(n - 2))
                .mul(&IntPolynomial::x_minus(-(n as i64 - 1)))
                .mul(&q);
            assert_eq!(char_poly(&g), rhs_g, "added-cover identity at n={n} j={j}");

            let rhs_h = IntPolynomial::x_minus(-1)
                .pow(2 * n - 3)
                .mul(&IntPolynomial::x_minus(n as i64 - 1))
                .mul(&q);
            assert_eq!(char_poly(&h), rhs_h, "added-copies identity at n={n} j={j}");

            // middle root of the cubic factor: positive for j <= n-2,
            // zero for j = n-1, negative for j = n — exact sign counts
            let signs = poly_inertia(&q).unwrap();
            let expected = if j <= n - 2 {
                Inertia { positive: 2, zero: 0, negative: 1 }
            } else if j == n - 1 {
                Inertia { positive: 1, zero: 1, negative: 1 }
            } else {
                Inertia { positive: 1, zero: 0, negative: 2 }
            };
            assert_eq!(signs, expected, "root signs at n={n} j={j}");

            let report = classify_pair(&g, &h);
            assert!(report.ncsc, "family pair must be NCSC at n={n} j={j}");
        }
    }
    println!("criterion 05: PASS — exact factorization identities, root sign pattern, and NCSC for n=3..8, all j");
}

#[test]
fn criterion_06_vertex_addition_numeric_polynomial() {
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    let mut worst: f64 = 0.0;
    for trial in 0..100 {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, p);
        let mut members: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        if members.is_empty() {
            members.push(rng.gen_range(0..n));
        }
        let s = VertexSet::new(members);
        let numeric = rowlinson_charpoly(&g, &s, 1e-9).unwrap();
        let exact = char_poly(&add_vertex(&g, &s).unwrap());
        for (k, c) in numeric.iter().enumerate() {
            let e: f64 = exact.coeff(k).to_string().parse().unwrap();
            let dev = (c - e).abs();
            worst = worst.max(dev);
            assert!(dev < 1e-5, "trial {trial}, coeff {k}: |{c} - {e}| = {dev}");
        }
    }
    println!("criterion 06: PASS — 100 seeded vertex additions, max coefficient deviation {worst:.2e} < 1e-5");
}

#[test]
fn criterion_07_coalescence_polynomial_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(71);
    for trial in 0..200 {
        let ng = rng.gen_range(1..=8);
        let nh = rng.gen_range(1..=8);
        let (pg, ph) = (rng.gen_range(0.2..0.9), rng.gen_range(0.2..0.9));
        let g = random_graph(&mut rng, ng, pg);
        let h = random_graph(&mut rng, nh, ph);
        let gv = rng.gen_range(0..ng);
        let hv = rng.gen_range(0..nh);
        let merged = coalesce(&g, gv, &h, hv).unwrap();

        let p_g = char_poly(&g);
        let p_h = char_poly(&h);
        let p_g_del = char_poly(&delete_vertex(&g, gv).unwrap());
        let p_h_del = char_poly(&delete_vertex(&h, hv).unwrap());
        let x = IntPolynomial::from_int_coeffs(&[0, 1]);
        let rhs = p_g
            .mul(&p_h_del)
            .add(&p_g_del.mul(&p_h))
            .sub(&x.mul(&p_g_del).mul(&p_h_del));
        assert_eq!(char_poly(&merged), rhs, "trial {trial} (tolerance zero)");
    }
    println!("criterion 07: PASS — 200/200 seeded coalescences satisfy the exact identity");
}

#[test]
fn criterion_08_walk_equivalence_5_and_6() {
    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap();
    let (pairs, sc_pairs, disagreements, total) = pool.install(|| {
        use rayon::prelude::*;
        let graphs: Vec<Graph> = all_graphs(5).into_iter().chain(all_graphs(6)).collect();
        assert_eq!(graphs.len(), 190);
        let profiles: Vec<Vec<BigInt>> = graphs
            .par_iter()
            .map(|g| even_trace_powers(g, 6))
            .collect();
        let sigs: Vec<IntPolynomial> = graphs.par_iter().map(sc_signature).collect();

        let indices: Vec<(usize, usize)> = (0..graphs.len())
            .flat_map(|i| ((i + 1)..graphs.len()).map(move |j| (i, j)))
            .collect();
        let results: Vec<(bool, bool)> = indices
            .par_iter()
            .map(|&(i, j)| {
                let horizon = graphs[i].vertex_count().max(graphs[j].vertex_count());
                let walks_equal = profiles[i][..horizon] == profiles[j][..horizon];
                let sc = sigs[i] == sigs[j];
                (walks_equal, sc)
            })
            .collect();
        let sc_pairs = results.iter().filter(|r| r.1).count();
        let disagreements = results.iter().filter(|r| r.0 != r.1).count();
        (indices.len(), sc_pairs, disagreements, graphs.len())
    });
    assert_eq!(total, 190);
    assert_eq!(pairs, 17_955);
    assert_eq!(disagreements, 0, "walk test must agree with the exact SC test");
    assert_eq!(sc_pairs, 45, "singularly cospectral pair count over the 5/6 corpus");
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 600.0, "took {elapsed:?}, budget 10 min");
    println!(
        "criterion 08: PASS — 17955 pairs, 45 SC, zero walk/SC disagreements, 4 workers in {elapsed:?}"
    );
}

/// The n <= 6 corpus with its singularly cospectral pairs (indices).
fn sc_pairs_le6() -> (Vec<Graph>, Vec<(usize, usize)>) {
    let graphs: Vec<Graph> = (1..=6).flat_map(all_graphs).collect();
    assert_eq!(graphs.len(), 208);
    let sigs: Vec<IntPolynomial> = graphs.iter().map(sc_signature).collect();
    let mut pairs = Vec::new();
    for i in 0..graphs.len() {
        for j in (i + 1)..graphs.len() {
            if sigs[i] == sigs[j] {
                pairs.push((i, j));
            }
        }
    }
    (graphs, pairs)
}

#[test]
fn criterion_09_implication_suite_le6() {
    let (graphs, pairs) = sc_pairs_le6();
    assert_eq!(pairs.len(), 94, "SC pairs in the n<=6 corpus");
    let mut bipartite = 0;
    let mut dominant = 0;
    let mut three_half = 0;
    let mut three_full = 0;
    for &(i, j) in &pairs {
        let report = check_sc_implies_ac(&graphs[i], &graphs[j])
            .expect("no implication may be falsified (exit 2 condition)");
        assert!(report.singularly_cospectral);
        bipartite += usize::from(report.bipartite_applies);
        dominant += usize::from(report.dominant_multiplicity_applies);
        three_half += usize::from(report.three_values_half_inertia_applies);
        three_full += usize::from(report.three_values_full_inertia_applies);
        if report.any_applies() {
            assert!(report.almost_cospectral);
        }
    }
    assert_eq!(bipartite, 58, "bipartite-hypothesis coverage");
    assert_eq!(dominant, 1, "dominant-multiplicity coverage");
    println!(
        "criterion 09: PASS — 94 SC pairs, hypotheses applied \
         (bipartite {bipartite}, dominant {dominant}, three-value half/full {three_half}/{three_full}), zero exceptions"
    );
}

#[test]
fn criterion_10_necessary_conditions_le6() {
    let (graphs, pairs) = sc_pairs_le6();
    assert_eq!(pairs.len(), 94);
    for &(i, j) in &pairs {
        let report = classify_pair(&graphs[i], &graphs[j]);
        assert!(report.singularly_cospectral);
        let f = &report.filters;
        assert!(f.edges_equal, "edges differ: {} {}", write_graph6(&graphs[i]), write_graph6(&graphs[j]));
        assert!(f.rank_equal);
        assert!(f.nullity_gap_matches_vertex_gap);
        assert!(f.positive_negative_exchange);
        assert!(report.equienergetic && report.equienergetic_exact);
    }
    println!("criterion 10: PASS — all 94 SC pairs satisfy the necessary conditions and exact equienergeticity");
}

#[test]
fn criterion_11_cycle_family() {
    for j in 3..=10usize {
        let (g, h) = cycle_pair(j).unwrap();
        assert!(is_singularly_cospectral(&g, &h), "cycle pair j={j} must be SC");
        let report = classify_pair(&g, &h);
        assert_eq!(
            report.ncsc,
            j % 2 == 1,
            "cycle pair j={j}: NCSC exactly for odd j"
        );
    }
    println!("criterion 11: PASS — cycle pairs SC for j=3..10, NCSC exactly for odd j");
}

#[test]
fn criterion_12_search_soundness_2000() {
    // deterministic 2000-line mixed corpus
    let mut lines: Vec<String> = Vec::new();
    for n in 1..=6usize {
        for g in all_graphs(n) {
            lines.push(write_graph6(&g));
        }
    }
    for j in 3..=10usize {
        let (g, h) = cycle_pair(j).unwrap();
        lines.push(write_graph6(&g));
        lines.push(write_graph6(&h));
    }
    for n in 3..=5usize {
        for j in 1..=n {
            lines.push(write_graph6(&family_gknj(n, j).unwrap()));
            lines.push(write_graph6(&family_hknj(n, j).unwrap()));
        }
    }
    for (n, j, k) in [(3, 1, 2), (4, 2, 2)] {
        let (g, h) = coalesce_chain(n, j, k).unwrap();
        lines.push(write_graph6(&g));
        lines.push(write_graph6(&h));
    }
    for name in catalog::names() {
        for g in catalog::named(name).unwrap() {
            lines.push(write_graph6(&g));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(121);
    // relabeled duplicates exercise isomorph rejection
    for _ in 0..50 {
        let pick = rng.gen_range(0..lines.len());
        let g = parse_graph6(&lines[pick]).unwrap();
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        lines.push(write_graph6(&g.permuted(&perm).unwrap()));
    }
    while lines.len() < 2000 {
        let n = rng.gen_range(7..=10);
        let p = rng.gen_range(0.15..0.85);
        lines.push(write_graph6(&random_graph(&mut rng, n, p)));
    }
    assert_eq!(lines.len(), 2000);
    let refs: Vec<&str> = lines.iter().map(String::as_str).collect();

    let result_1 = scan(refs.clone(), 1);
    let result_8 = scan(refs.clone(), 8);
    let json_1 = serde_json::to_string(&result_1).unwrap();
    let json_8 = serde_json::to_string(&result_8).unwrap();
    assert_eq!(json_1, json_8, "scan must be deterministic across 1 vs 8 workers");

    // brute-force oracle: canonical dedup, then all-pairs comparison of the
    // exact signatures — no bucketing involved
    let mut distinct: std::collections::BTreeMap<String, Graph> = Default::default();
    for line in &refs {
        let g = parse_graph6(line).unwrap();
        let form = cospectral::canon::canonical_form(&g).unwrap();
        distinct.entry(form).or_insert(g);
    }
    let forms: Vec<&String> = distinct.keys().collect();
    let graphs: Vec<&Graph> = distinct.values().collect();
    let sigs: Vec<IntPolynomial> = graphs.iter().map(|g| sc_signature(g)).collect();
    let cps: Vec<IntPolynomial> = graphs.iter().map(|g| char_poly(g)).collect();
    let mut expected_ncsc: Vec<(String, String)> = Vec::new();
    for i in 0..graphs.len() {
        for j in (i + 1)..graphs.len() {
            if sigs[i] == sigs[j] && cps[i] != cps[j] {
                expected_ncsc.push((forms[i].clone(), forms[j].clone()));
            }
        }
    }
    expected_ncsc.sort();
    let reported = result_1.ncsc_pair_strings();
    assert_eq!(reported, expected_ncsc, "scan NCSC list must equal the brute-force list");
    assert!(!reported.is_empty());

    // every reported pair re-verifies under the full classifier
    for (a, b) in &reported {
        let report = classify_pair(&parse_graph6(a).unwrap(), &parse_graph6(b).unwrap());
        assert!(report.ncsc, "{a} / {b}");
    }
    println!(
        "criterion 12: PASS — {} distinct graphs, {} NCSC pairs identical across 1/8 workers and equal to brute force",
        result_1.stats.distinct_graphs,
        reported.len()
    );
}

#[test]
fn criterion_13_graph6_roundtrip_10000() {
    let mut rng = ChaCha8Rng::seed_from_u64(131);
    for trial in 0..10_000 {
        let n = rng.gen_range(0..=12);
        let p = rng.gen_range(0.0..=1.0);
        let g = random_graph(&mut rng, n, p);
        let line = write_graph6(&g);
        let back = parse_graph6(&line).unwrap();
        assert_eq!(back, g, "trial {trial}");
        assert_eq!(write_graph6(&back), line, "trial {trial} byte-exactness");
    }
    println!("criterion 13: PASS — 10000 random graphs round-trip byte-exact");
}
