//! Command-line front end: spectra, characteristic polynomials, pair
//! classification, constructions, walk profiles, stream search, and the
//! verification sweeps.
//!
//! Exit codes: `0` success, `1` invalid input or I/O failure, `2` internal
//! assertion failure (a proved implication falsified by the exact kernels —
//! this must never occur). Results go to stdout, diagnostics to stderr.

mod verify;

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cospectral::classify::{classify_pair, PairReport};
use cospectral::constructions::ConstructionSpec;
use cospectral::graph6::parse_graph6_lines;
use cospectral::search::scan;
use cospectral::spectral::SpectrumNumeric;
use cospectral::walks::walk_profile;
use cospectral::{parse_graph6, poly, write_graph6, Error, Graph, VertexSet};

/// Workers resolution order: flag, then `COSPECTRAL_WORKERS`, then the
/// rayon default.
fn resolve_workers(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("COSPECTRAL_WORKERS")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(0)
}

#[derive(Parser)]
#[command(
    name = "cospectral",
    version,
    about = "Exact tooling for cospectrality questions on small graphs",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues of the adjacency matrix, grouped by multiplicity
    Spectrum {
        /// graph6 string, or a path to a file whose first line is used
        #[arg(long)]
        graph: String,
        /// Clustering tolerance (default: 1e-9 · max(1, spectral radius))
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        json: bool,
    },
    /// Exact characteristic polynomial (of A, or of A² with --squared)
    Charpoly {
        #[arg(long)]
        graph: String,
        /// Characteristic polynomial of A² instead of A
        #[arg(long)]
        squared: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exact pair classification: cospectral / almost / singularly
    Classify {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        json: bool,
    },
    /// Build graphs from the construction library
    Construct {
        #[command(subcommand)]
        kind: ConstructCmd,
    },
    /// Closed-walk counts of even lengths
    Walks {
        #[arg(long)]
        graph: String,
        /// Largest k: counts walks of lengths 2, 4, ..., 2k
        #[arg(long = "max-k")]
        max_k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Scan a graph6 stream for singularly cospectral pairs
    Search {
        /// Input path, or '-' for stdin
        #[arg(long)]
        input: String,
        #[arg(long)]
        workers: Option<usize>,
        /// Write the full JSON report to this path
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Run a named verification sweep
    Verify {
        /// Suite: gfhf | gknj | rowlinson | schwenk | walks |
        /// sc-implies-ac | regularity | cycles | products
        #[arg(long, visible_alias = "family")]
        suite: String,
        #[arg(long = "n-max")]
        n_max: Option<usize>,
        #[arg(long = "j-max")]
        j_max: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Bipartite double cover of the base graph
    TensorK2 {
        #[arg(long)]
        base: String,
        #[arg(long)]
        spectrum: bool,
    },
    /// Two disjoint copies of the base graph
    Double {
        #[arg(long)]
        base: String,
        #[arg(long)]
        spectrum: bool,
    },
    DisjointUnion {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        spectrum: bool,
    },
    StrongProduct {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        spectrum: bool,
    },
    CartesianProduct {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        spectrum: bool,
    },
    TensorProduct {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        spectrum: bool,
    },
    /// Add one vertex adjacent to the listed (0-based) vertices
    AddVertex {
        #[arg(long)]
        base: String,
        /// Comma-separated 0-based vertex indices
        #[arg(long)]
        neighbors: String,
        #[arg(long)]
        spectrum: bool,
    },
    /// Double cover of K_n plus an attached vertex (parameters n, j)
    Gknj {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        spectrum: bool,
    },
    /// Two copies of K_n plus an attached vertex (parameters n, j)
    Hknj {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        spectrum: bool,
    },
    /// Identify vertex --lv of --left with vertex --rv of --right
    Coalesce {
        #[arg(long)]
        left: String,
        #[arg(long)]
        lv: usize,
        #[arg(long)]
        right: String,
        #[arg(long)]
        rv: usize,
        #[arg(long)]
        spectrum: bool,
    },
    /// k-fold coalescence chains of the gknj/hknj pair
    CoalesceChain {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        spectrum: bool,
    },
    /// A named fixture graph or pair from the built-in catalog
    Catalog {
        #[arg(long)]
        name: String,
        #[arg(long)]
        spectrum: bool,
    },
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::TheoremFalsified(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

/// Accepts an inline graph6 string or a path to a file whose first graph
/// line is taken.
fn load_graph(arg: &str) -> Result<Graph, Error> {
    let path = std::path::Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        let (graphs, errors) = parse_graph6_lines(&text);
        if let Some((line, e)) = errors.into_iter().next() {
            eprintln!("note: line {line} of {arg} skipped: {e}");
        }
        return graphs
            .into_iter()
            .next()
            .map(|(_, g)| g)
            .ok_or_else(|| Error::InvalidParameter(format!("{arg} contains no graphs")));
    }
    parse_graph6(arg)
}

fn one_based(list: &[usize]) -> Vec<usize> {
    list.iter().map(|v| v + 1).collect()
}

fn run() -> Result<(), Error> {
    match Cli::parse().command {
        Command::Spectrum { graph, tol, json } => {
            let g = load_graph(&graph)?;
            let spec = match tol {
                Some(t) => SpectrumNumeric::compute(&g, t)?,
                None => SpectrumNumeric::compute_auto(&g)?,
            };
            if json {
                println!("{}", spec.to_json());
            } else {
                println!("{:>24}  multiplicity", "value");
                for (v, m) in &spec.groups {
                    println!("{v:>24.16e}  {m}");
                }
                eprintln!("tolerance: {:e}", spec.tol);
            }
        }
        Command::Charpoly { graph, squared, json } => {
            let g = load_graph(&graph)?;
            let p = if squared {
                poly::squared_char_poly(&g)
            } else {
                poly::char_poly(&g)
            };
            if json {
                println!("{}", serde_json::to_string(&p).expect("serializable"));
            } else {
                println!("{p}");
            }
        }
        Command::Classify { left, right, json } => {
            let g = load_graph(&left)?;
            let h = load_graph(&right)?;
            let report = classify_pair(&g, &h);
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                print_pair_report(&g, &h, &report);
            }
        }
        Command::Construct { kind } => run_construct(kind)?,
        Command::Walks { graph, max_k, json } => {
            let g = load_graph(&graph)?;
            let profile = walk_profile(&g, max_k)?;
            if json {
                println!("{}", serde_json::to_string(&profile).expect("serializable"));
            } else {
                println!("{:>6}  closed walks", "length");
                for (k, c) in profile.counts.iter().enumerate() {
                    println!("{:>6}  {c}", 2 * (k + 1));
                }
            }
        }
        Command::Search { input, workers, report, json } => {
            let text = if input == "-" {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf)?;
                buf
            } else {
                std::fs::read_to_string(&input)?
            };
            let lines: Vec<&str> = text.lines().collect();
            let result = scan(lines, resolve_workers(workers));
            if let Some(path) = report {
                std::fs::write(&path, serde_json::to_string_pretty(&result).expect("serializable"))?;
                eprintln!("report written to {}", path.display());
            }
            if json {
                println!("{}", serde_json::to_string(&result).expect("serializable"));
            } else {
                print_search_result(&result);
            }
            for e in &result.errors {
                eprintln!("line {}: {}", e.line, e.message);
            }
        }
        Command::Verify { suite, n_max, j_max, trials, seed, workers, json } => {
            let params = verify::Params {
                n_max,
                j_max,
                trials,
                seed,
                workers: resolve_workers(workers),
            };
            let report = verify::run_suite(&suite, &params)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                println!("suite {}: checked {}, violations {}", report.suite, report.checked, report.violations);
                for line in &report.details {
                    println!("  {line}");
                }
                if let Some(r) = report.worst_residual {
                    println!("  worst residual: {r:.3e}");
                }
            }
            if report.violations > 0 {
                return Err(Error::TheoremFalsified(format!(
                    "suite {} reported {} violations",
                    report.suite, report.violations
                )));
            }
        }
    }
    Ok(())
}

fn parse_vertex_list(arg: &str) -> Result<Vec<usize>, Error> {
    arg.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("bad vertex index `{t}`")))
        })
        .collect()
}

fn run_construct(kind: ConstructCmd) -> Result<(), Error> {
    let (spec, with_spectrum) = match kind {
        ConstructCmd::TensorK2 { base, spectrum } => (
            ConstructionSpec::TensorK2 { base: load_graph(&base)? },
            spectrum,
        ),
        ConstructCmd::Double { base, spectrum } => (
            ConstructionSpec::Double { base: load_graph(&base)? },
            spectrum,
        ),
        ConstructCmd::DisjointUnion { left, right, spectrum } => (
            ConstructionSpec::DisjointUnion {
                left: load_graph(&left)?,
                right: load_graph(&right)?,
            },
            spectrum,
        ),
        ConstructCmd::StrongProduct { left, right, spectrum } => (
            ConstructionSpec::StrongProduct {
                left: load_graph(&left)?,
                right: load_graph(&right)?,
            },
            spectrum,
        ),
        ConstructCmd::CartesianProduct { left, right, spectrum } => (
            ConstructionSpec::CartesianProduct {
                left: load_graph(&left)?,
                right: load_graph(&right)?,
            },
            spectrum,
        ),
        ConstructCmd::TensorProduct { left, right, spectrum } => (
            ConstructionSpec::TensorProduct {
                left: load_graph(&left)?,
                right: load_graph(&right)?,
            },
            spectrum,
        ),
        ConstructCmd::AddVertex { base, neighbors, spectrum } => {
            let members = parse_vertex_list(&neighbors)?;
            eprintln!(
                "attaching to vertices {:?} (1-based: {:?})",
                members,
                one_based(&members)
            );
            (
                ConstructionSpec::AddVertex {
                    base: load_graph(&base)?,
                    neighbors: VertexSet::new(members),
                },
                spectrum,
            )
        }
        ConstructCmd::Gknj { n, j, spectrum } => (ConstructionSpec::FamilyGknj { n, j }, spectrum),
        ConstructCmd::Hknj { n, j, spectrum } => (ConstructionSpec::FamilyHknj { n, j }, spectrum),
        ConstructCmd::Coalesce { left, lv, right, rv, spectrum } => {
            eprintln!(
                "identifying vertex {lv} (1-based {}) with vertex {rv} (1-based {})",
                lv + 1,
                rv + 1
            );
            (
                ConstructionSpec::Coalesce {
                    left: load_graph(&left)?,
                    left_vertex: lv,
                    right: load_graph(&right)?,
                    right_vertex: rv,
                },
                spectrum,
            )
        }
        ConstructCmd::CoalesceChain { n, j, k, spectrum } => {
            (ConstructionSpec::CoalesceChain { n, j, copies: k }, spectrum)
        }
        ConstructCmd::Catalog { name, spectrum } => {
            let graphs = cospectral::catalog::named(&name).ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "unknown catalog entry `{name}` (known: {})",
                    cospectral::catalog::names().join(", ")
                ))
            })?;
            for g in &graphs {
                emit_graph(g, spectrum)?;
            }
            return Ok(());
        }
    };
    for g in spec.build()? {
        emit_graph(&g, with_spectrum)?;
    }
    Ok(())
}

fn emit_graph(g: &Graph, with_spectrum: bool) -> Result<(), Error> {
    println!("{}", write_graph6(g));
    if let Some(label) = g.label() {
        eprintln!("  {label}: {} vertices, {} edges", g.vertex_count(), g.edge_count());
    }
    if with_spectrum {
        println!("{}", SpectrumNumeric::compute_auto(g)?.to_json());
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_pair_report(g: &Graph, h: &Graph, report: &PairReport) {
    println!(
        "left:  {} vertices, {} edges   {}",
        g.vertex_count(),
        g.edge_count(),
        write_graph6(g)
    );
    println!(
        "right: {} vertices, {} edges   {}",
        h.vertex_count(),
        h.edge_count(),
        write_graph6(h)
    );
    println!("cospectral:            {}", yes_no(report.cospectral));
    println!("almost cospectral:     {}", yes_no(report.almost_cospectral));
    println!("singularly cospectral: {}", yes_no(report.singularly_cospectral));
    println!("NCSC:                  {}", yes_no(report.ncsc));
    let energy_note = match (report.equienergetic_exact, report.energy_gap) {
        (true, _) => " (exact)".to_string(),
        (false, Some(gap)) => format!(" (numeric, |ΔE| = {gap:.3e})"),
        (false, None) => String::new(),
    };
    println!(
        "equienergetic:         {}{energy_note}",
        yes_no(report.equienergetic)
    );
    let f = &report.filters;
    println!(
        "filters: edges {}/{} rank {}/{} nullity {}/{} inertia {}/{}",
        f.edges.0, f.edges.1, f.rank.0, f.rank.1, f.nullity.0, f.nullity.1, f.inertia.0, f.inertia.1
    );
    println!("char poly left:  {}", report.certificates.char_poly_left);
    println!("char poly right: {}", report.certificates.char_poly_right);
}

fn print_search_result(result: &cospectral::search::SearchResult) {
    let s = &result.stats;
    println!(
        "scanned {} lines: {} graphs, {} distinct, {} buckets, {} SC pairs ({} NCSC, {} cospectral)",
        s.lines_read, s.graphs_parsed, s.distinct_graphs, s.buckets_total, s.sc_pairs, s.ncsc_pairs, s.cospectral_pairs
    );
    if let Some(wall) = s.wall {
        eprintln!("wall time: {wall:?}");
    }
    for (i, b) in result.buckets.iter().enumerate() {
        println!("bucket {i}: {} members", b.members.len());
        for (j, m) in b.members.iter().enumerate() {
            println!("  [{j}] {m}");
        }
        if !b.ncsc_pairs.is_empty() {
            println!("  NCSC pairs: {:?}", b.ncsc_pairs);
        }
        if !b.cospectral_pairs.is_empty() {
            println!("  cospectral pairs: {:?}", b.cospectral_pairs);
        }
    }
}
