use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use seidelkit::lattice::{classify, enumerate_roots, lambda_lattice};
use seidelkit::maximality::{extremal_construction, is_maximal, is_strongly_maximal, lambda_table, ExtensionVerdict};
use seidelkit::report::SUITES;
use seidelkit::seidel::{p_value, rank_at, seidel_of, seidel_spectrum, Eigenvalue};
use seidelkit::{run_suite, Error, Graph, GraphSpec, QuadraticNumber, Result};

#[derive(Parser)]
#[command(name = "seidelkit", version, about = "Exact tools for Seidel matrices and equiangular lines")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphArg {
    /// Graph as a spec string, e.g. "L(K8)", "C5+K1", "Paley(13)+K1".
    #[arg(long, conflicts_with = "graph6")]
    graph: Option<String>,
    /// Graph as a graph6 string.
    #[arg(long)]
    graph6: Option<String>,
}

impl GraphArg {
    fn load(&self) -> Result<Graph> {
        match (&self.graph, &self.graph6) {
            (Some(s), _) => s.parse::<GraphSpec>()?.build(),
            (None, Some(s)) => Graph::from_graph6(s),
            (None, None) => Err(Error::InvalidSpec("give --graph or --graph6".into())),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Characteristic polynomial and largest eigenvalue of the Seidel matrix.
    Spectrum(GraphArg),
    /// Switch a graph with respect to a vertex set.
    Switch {
        #[command(flatten)]
        g: GraphArg,
        /// Comma-separated vertex indices.
        #[arg(long, value_delimiter = ',')]
        set: Vec<usize>,
    },
    /// Decide switching equivalence of two graphs.
    Equiv {
        #[command(flatten)]
        g: GraphArg,
        /// Second graph as a spec string.
        #[arg(long, conflicts_with = "other_graph6")]
        other: Option<String>,
        /// Second graph as a graph6 string.
        #[arg(long)]
        other_graph6: Option<String>,
    },
    /// Decide maximality (or strong maximality) at the largest eigenvalue.
    Maximal {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long)]
        strong: bool,
    },
    /// Smallest t with B_θ^(t)(G) positive semidefinite.
    PValue {
        #[command(flatten)]
        g: GraphArg,
        /// θ as an exact number, e.g. "2", "3/2", "(1+sqrt(5))/2".
        #[arg(long)]
        theta: String,
    },
    /// The root lattice of a graph with largest Seidel eigenvalue at most 3.
    Lattice {
        #[command(flatten)]
        g: GraphArg,
        #[arg(long, conflicts_with = "classify")]
        roots: bool,
        #[arg(long)]
        classify: bool,
    },
    /// λ(n) for 3 ≤ n ≤ max-n by exhaustive enumeration.
    LambdaTable {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
    /// The extremal construction with eigenvalue 3 and the given rank.
    Extremal {
        #[arg(long)]
        rank: usize,
    },
    /// Run a verification suite; the exit status is nonzero on failure.
    Verify {
        #[arg(long)]
        suite: String,
    },
}

fn approx(x: f64) -> String {
    format!("~{x:.10} (approximate)")
}

fn number(q: &QuadraticNumber) -> String {
    if q.is_rational() {
        q.to_string()
    } else {
        format!("{q}  {}", approx(q.to_f64()))
    }
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn verdict_text(v: &ExtensionVerdict, yes: &str, decided: bool) {
    println!("lambda: {}", number(&v.lambda));
    println!("{yes}: {decided}");
    match v.witness() {
        Some(w) => {
            let signs: Vec<String> = w.iter().map(|s| if *s > 0 { "+".into() } else { "-".into() }).collect();
            println!("witness: {}", signs.join(""));
            if let Some(ext) = v.extension() {
                println!("extension (graph6): {}", ext.to_graph().to_graph6());
            }
        }
        None => println!("exhausted after {} nodes ({} pruned)", v.nodes, v.pruned),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Spectrum(ga) => {
            let g = ga.load()?;
            let s = seidel_of(&g);
            let spec = seidel_spectrum(&s)?;
            let rank = spec.largest.exact().map(|l| rank_at(&s, l));
            if cli.json {
                print_json(&json!({ "graph": g, "order": g.order(), "spectrum": spec, "rank_at_largest": rank }));
            } else {
                println!("order: {}", g.order());
                println!("charpoly: {}", spec.charpoly);
                match &spec.largest {
                    Eigenvalue::Exact(q) => println!("largest: {}", number(q)),
                    other => println!("largest: {other}  {}", approx(spec.approx())),
                }
                println!("multiplicity: {}", spec.largest_multiplicity);
                if let Some(r) = rank {
                    println!("rank at largest: {r}");
                }
            }
        }
        Command::Switch { g, set } => {
            let g = g.load()?;
            if let Some(&v) = set.iter().find(|&&v| v >= g.order()) {
                return Err(Error::InvalidSpec(format!("vertex {v} out of range")));
            }
            let h = g.switch(&set);
            if cli.json {
                print_json(&json!({ "graph": h, "edges": h.edge_count() }));
            } else {
                println!("{}", h.to_graph6());
            }
        }
        Command::Equiv { g, other, other_graph6 } => {
            let a = g.load()?;
            let b = GraphArg { graph: other, graph6: other_graph6 }.load()?;
            let cert = seidelkit::graph::is_switching_equivalent(&a, &b)?;
            if cli.json {
                print_json(&json!({ "equivalent": cert.is_some(), "certificate": cert }));
            } else {
                match cert {
                    Some(c) => {
                        println!("equivalent: true");
                        println!("switch set: {:?}", c.switch_set);
                        println!("permutation: {:?}", c.perm);
                    }
                    None => println!("equivalent: false"),
                }
            }
        }
        Command::Maximal { g, strong } => {
            let g = g.load()?;
            let (decided, v) = if strong { is_strongly_maximal(&g)? } else { is_maximal(&g)? };
            let key = if strong { "strongly_maximal" } else { "maximal" };
            if cli.json {
                let mut out = serde_json::to_value(&v).expect("serializable");
                out[key] = json!(decided);
                print_json(&out);
            } else {
                verdict_text(&v, key, decided);
            }
        }
        Command::PValue { g, theta } => {
            let g = g.load()?;
            let theta: QuadraticNumber = theta.parse()?;
            let p = p_value(&g, &theta)?;
            if cli.json {
                print_json(&json!({ "theta": theta, "p": p, "p_approx": p.as_ref().map(|x| x.to_f64()) }));
            } else {
                match p {
                    Some(p) => println!("p: {}", number(&p)),
                    None => println!("p: undefined (j is outside the column space of A + theta I)"),
                }
            }
        }
        Command::Lattice { g, roots, classify: want_type } => {
            let g = g.load()?;
            let l = lambda_lattice(&g)?;
            if roots {
                let sys = enumerate_roots(&l);
                if cli.json {
                    let rows: Vec<Vec<String>> =
                        sys.roots.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
                    print_json(&json!({ "count": sys.len(), "roots": rows }));
                } else {
                    print!("{}", sys.to_text());
                    println!("# {} roots", sys.len());
                }
            } else if want_type {
                let t = classify(&l)?;
                if cli.json {
                    print_json(&json!({ "type": t, "roots": t.root_count() }));
                } else {
                    println!("{t}");
                }
            } else if cli.json {
                print_json(&l);
            } else {
                println!("rank: {}", l.rank);
                for row in l.gram.rows() {
                    let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
                    println!("{}", cells.join(" "));
                }
            }
        }
        Command::LambdaTable { max_n } => {
            let table = lambda_table(max_n)?;
            if cli.json {
                print_json(&table);
            } else {
                for e in &table {
                    println!(
                        "lambda({}) = {}  {}  minimal polynomial {}  witness {}",
                        e.n,
                        e.value,
                        approx(e.root.approx()),
                        e.minimal_polynomial,
                        e.witness_graph.to_graph6()
                    );
                }
            }
        }
        Command::Extremal { rank } => {
            let (g, rep) = extremal_construction(rank)?;
            if cli.json {
                print_json(&json!({ "graph": g, "check": rep }));
            } else {
                println!("rank {rank}: order {} ({})", g.order(), rep.status);
                println!("construction: {}", rep.get("construction").and_then(|v| v.as_str()).unwrap_or("?"));
                println!("graph6: {}", g.to_graph6());
            }
            if !rep.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Verify { suite } => {
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut ok = true;
            let mut reports = Vec::new();
            for name in names {
                let r = run_suite(name)?;
                ok &= r.passed();
                if !cli.json {
                    print!("{}", r.to_table());
                }
                reports.push(r);
            }
            if cli.json {
                if reports.len() == 1 {
                    println!("{}", reports[0].to_json());
                } else {
                    print_json(&reports);
                }
            }
            if !ok {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
