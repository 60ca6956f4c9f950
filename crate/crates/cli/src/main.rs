//! `edgerep`: the `(n-2,2)` edge-space invariant from the command line.
//!
//! Every subcommand prints one JSON document on stdout. Errors go to stderr
//! with a distinct exit code per error kind.

mod input;

use clap::{Parser, Subcommand, ValueEnum};
use edgerep::census::{run_census_with_jobs, verify_gm_example};
use edgerep::edge_op::{charpoly_22, dim_22, spectrum_22, DEFAULT_TOL};
use edgerep::graph::{graph6_decode, graph6_encode, three_edge_counts, tree_closed_counts, tree_code};
use edgerep::moments::{moment_table, MomentMethod};
use edgerep::weighted::{weighted_reconstruction, PairClass};
use edgerep::{Error, Graph, Result};
use serde_json::{json, Value};
use std::fs::File;
use std::io::{BufWriter, ErrorKind, Write};
use std::path::PathBuf;
use std::process::ExitCode;

/// Directory for census output when `--out` is not given.
const OUT_DIR_ENV: &str = "EDGEREP_OUT_DIR";

#[derive(Parser)]
#[command(name = "edgerep", version, about = "Spectral invariants of graphs from the (n-2,2) edge representation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial and eigenvalues of X_G on the zero-degree edge space
    Spectrum {
        /// graph6 string or edge-list file
        graph: String,
        /// only the exact characteristic polynomial
        #[arg(long, conflicts_with = "numeric")]
        exact: bool,
        /// only the numeric eigenvalues
        #[arg(long)]
        numeric: bool,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Trace moments M_1..M_r
    Moments {
        graph: String,
        #[arg(long, default_value_t = 6)]
        r_max: usize,
        #[arg(long, value_enum, default_value_t = Method::TraceDifference)]
        method: Method,
        /// cross-check oracle, trace difference and Newton routes
        #[arg(long)]
        verify: bool,
    },
    /// Three-edge subgraph counts
    Counts { graph: String },
    /// Laplacian-cospectral tree census on n vertices
    Census {
        n: usize,
        /// output directory (default: $EDGEREP_OUT_DIR or the current directory)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Check the fixed pair of cospectral 4-regular graphs on ten vertices
    Gm,
    /// Pair coefficients of the weighted trace polynomial and tree reconstruction
    Weighted { tree: String },
    /// Edge-list file (or graph6) to graph6
    Encode { graph: String },
    /// graph6 to vertex count and edge list
    Decode { graph6: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Oracle,
    TraceDifference,
    Newton,
    ClosedForm,
}

impl From<Method> for MomentMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Oracle => MomentMethod::Oracle,
            Method::TraceDifference => MomentMethod::TraceDifference,
            Method::Newton => MomentMethod::Newton,
            Method::ClosedForm => MomentMethod::ClosedForm,
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Malformed(_) | Error::UnsupportedSize { .. } | Error::IndexOutOfRange { .. } => 2,
        Error::RepresentationAbsent { .. } => 3,
        Error::BudgetExceeded { .. } => 4,
        Error::Io(_) => 5,
        Error::NotATree | Error::AmbientTooSmall { .. } | Error::InvalidSwitchingSet(_) => 6,
        Error::NonConvergence { .. } | Error::Inconsistent(_) | Error::Regression(_) => 7,
    }
}

fn edge_pairs(g: &Graph) -> Value {
    g.edges().iter().map(|e| json!([e.u, e.v])).collect()
}

fn cmd_spectrum(graph: &str, exact: bool, numeric: bool, tol: f64) -> Result<Value> {
    let g = input::read_graph(graph)?;
    let (want_exact, want_numeric) = match (exact, numeric) {
        (false, false) => (true, true),
        flags => flags,
    };
    let mut out = json!({ "n": g.n(), "m": g.m(), "dim": dim_22(g.n()) });
    if want_exact {
        let p = charpoly_22(&g)?;
        out["charpoly_22"] = json!(p.to_decimal_strings());
        out["charpoly_22_text"] = json!(p.to_string());
    }
    if want_numeric {
        let s = spectrum_22(&g, tol)?;
        out["eigenvalues"] = json!(s.eigenvalues);
        out["tol"] = json!(tol);
    }
    Ok(out)
}

fn cmd_moments(graph: &str, r_max: usize, method: Method, verify: bool) -> Result<Value> {
    let g = input::read_graph(graph)?;
    let method = MomentMethod::from(method);
    let table = moment_table(&g, r_max, method)?;
    let mut out = json!({
        "n": g.n(),
        "m": g.m(),
        "r_max": r_max,
        "method": method.as_str(),
        "values": table.iter().map(|m| m.value.to_string()).collect::<Vec<_>>(),
    });
    if verify {
        let mut routes = serde_json::Map::new();
        for m in [MomentMethod::Oracle, MomentMethod::TraceDifference, MomentMethod::Newton] {
            let other = moment_table(&g, r_max, m)?;
            if other.iter().zip(&table).any(|(a, b)| a.value != b.value) {
                return Err(Error::Inconsistent(format!(
                    "{} disagrees with {}",
                    m.as_str(),
                    method.as_str()
                )));
            }
            let values: Vec<String> = other.iter().map(|x| x.value.to_string()).collect();
            routes.insert(m.as_str().into(), json!(values));
        }
        out["verified"] = json!(routes);
    }
    Ok(out)
}

fn cmd_counts(graph: &str) -> Result<Value> {
    let g = input::read_graph(graph)?;
    let counts = three_edge_counts(&g);
    let mut out = json!({
        "n": g.n(),
        "m": g.m(),
        "counts": counts,
        "triples": counts.total_triples(),
    });
    if g.is_tree() {
        out["tree_closed_forms"] = json!(tree_closed_counts(&g)?);
    }
    Ok(out)
}

fn cmd_census(n: usize, out: Option<PathBuf>, jobs: Option<usize>) -> Result<Value> {
    let dir = out
        .or_else(|| std::env::var_os(OUT_DIR_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."));
    std::fs::create_dir_all(&dir)?;
    let census = run_census_with_jobs(n, jobs)?;
    let jsonl = dir.join(format!("census_n{n}.jsonl"));
    let csv = dir.join(format!("census_n{n}.csv"));
    census.write_jsonl(BufWriter::new(File::create(&jsonl)?))?;
    census.write_csv(BufWriter::new(File::create(&csv)?))?;
    Ok(json!({
        "summary": census.summary,
        "summary_row": census.summary.row(),
        "jsonl": jsonl.display().to_string(),
        "csv": csv.display().to_string(),
    }))
}

fn cmd_gm() -> Result<Value> {
    Ok(json!(verify_gm_example()?))
}

fn cmd_weighted(tree: &str) -> Result<Value> {
    let t = input::read_graph(tree)?;
    let rep = weighted_reconstruction(&t)?;
    let pairs: Vec<Value> = rep
        .table
        .pairs
        .iter()
        .map(|p| {
            json!({
                "e": [p.e.u, p.e.v],
                "f": [p.f.u, p.f.v],
                "coeff": p.coeff.to_string(),
                "class": match p.class {
                    PairClass::Adjacent => "adjacent",
                    PairClass::Disjoint => "disjoint",
                },
            })
        })
        .collect();
    let lg = &rep.table.line_graph;
    Ok(json!({
        "n": t.n(),
        "route": rep.table.route,
        "pairs": pairs,
        "line_graph": {
            "labels": lg.labels.iter().map(|e| [e.u, e.v]).collect::<Vec<_>>(),
            "edges": edge_pairs(&lg.adjacency),
        },
        "reconstructed_edges": edge_pairs(&rep.reconstruction.tree),
        "canonical_code": rep.canonical_code,
        "input_canonical_code": tree_code(&t),
    }))
}

fn cmd_encode(graph: &str) -> Result<Value> {
    let g = input::read_graph(graph)?;
    Ok(json!({ "graph6": graph6_encode(&g)? }))
}

fn cmd_decode(text: &str) -> Result<Value> {
    let g = graph6_decode(text)?;
    Ok(json!({ "n": g.n(), "m": g.m(), "edges": edge_pairs(&g) }))
}

fn run(cli: Cli) -> Result<Value> {
    match cli.command {
        Command::Spectrum {
            graph,
            exact,
            numeric,
            tol,
        } => cmd_spectrum(&graph, exact, numeric, tol),
        Command::Moments {
            graph,
            r_max,
            method,
            verify,
        } => cmd_moments(&graph, r_max, method, verify),
        Command::Counts { graph } => cmd_counts(&graph),
        Command::Census { n, out, jobs } => cmd_census(n, out, jobs),
        Command::Gm => cmd_gm(),
        Command::Weighted { tree } => cmd_weighted(&tree),
        Command::Encode { graph } => cmd_encode(&graph),
        Command::Decode { graph6 } => cmd_decode(&graph6),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(v) => {
            let text = serde_json::to_string_pretty(&v).expect("serializable payload");
            match writeln!(std::io::stdout().lock(), "{text}") {
                Err(e) if e.kind() != ErrorKind::BrokenPipe => {
                    eprintln!("error: {e}");
                    ExitCode::from(5)
                }
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
