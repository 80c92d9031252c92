//! Command-line front end for the exact independent-set toolkit.
//!
//! Exit codes: 0 = affirmative (verified / normal / primitive / all suites
//! pass), 1 = decisive negative, 2 = input or usage error, 3 = inconclusive
//! (budget or cap exhausted).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use misnormal_core::checks::{
    check_eq1, check_is_primitive, check_mis_normal, verify_bipartite_corollary, verify_dichotomy,
    verify_imprimitive_partition, verify_induced_ratio, verify_power_corollary,
    verify_primitivity_theorem, verify_product_trichotomy, verify_ratio_bound,
};
use misnormal_core::checks::independence_ratio;
use misnormal_core::solver::{enumerate_mis, mis_membership_counts};
use misnormal_core::{alpha, automorphism_group, direct_product, is_vertex_transitive, Env, Error, Graph, VertexSet};

use misnormal::budget::{WallClock, DEFAULT_BUDGET_SECS};
use misnormal::report::Envelope;
use misnormal::{graph6, input, runner};

#[derive(Parser)]
#[command(name = "misnormal", version, about = "Exact maximum-independent-set structure of direct products of vertex-transitive graphs")]
struct Cli {
    /// Wall-clock budget per solver invocation, in seconds.
    #[arg(long, global = true, env = "MISNORMAL_BUDGET_SECS", default_value_t = DEFAULT_BUDGET_SECS)]
    budget_secs: u64,

    /// Cap on the number of maximum independent sets collected.
    #[arg(long, global = true, default_value_t = 100_000)]
    max_sets: usize,

    /// Cap on product vertex counts.
    #[arg(long, global = true, default_value_t = 4096)]
    max_vertices: usize,

    /// Worker threads for the corpus runner (0 = automatic).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,

    /// Write the JSON report(s) to this path as well as stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Independence number, ratio, and maximum-independent-set census.
    Alpha {
        /// Graphs: family specs (cycle:5, kneser:5,2, ...) or @file inputs.
        #[arg(required = true)]
        graphs: Vec<String>,
    },
    /// Decision procedures: normal | primitive | eq1 | theorem:<id>.
    ///
    /// Theorem ids: ratio-bound, induced-ratio, bipartite, partition (one
    /// graph); dichotomy, product-primitivity, trichotomy (two graphs);
    /// power (one graph, --n).
    Check {
        kind: String,
        #[arg(required = true)]
        graphs: Vec<String>,
        /// Power exponent for theorem:power.
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated vertex subset (induced-ratio: B; trichotomy: G').
        #[arg(long)]
        subset: Option<String>,
    },
    /// Run invariant suites over the built-in corpus.
    Corpus {
        /// Corpus size cap (largest member vertex count).
        max_corpus_vertices: usize,
        /// Suites to run (default: all).
        suites: Vec<String>,
    },
    /// Construct a direct product and print it (graph6 + stats).
    Product {
        g: String,
        h: String,
    },
    /// Structural summary of a graph.
    Info {
        #[arg(required = true)]
        graphs: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = classify_error(&e);
            ExitCode::from(code as u8)
        }
    }
}

/// Maps failures onto the exit-code contract: budget/cap exhaustion is 3,
/// everything else (bad specs, unreadable files, bad arity) is 2.
fn classify_error(e: &anyhow::Error) -> i32 {
    if let Some(core) = e.downcast_ref::<Error>() {
        match core {
            Error::Timeout | Error::CapExceeded { .. } | Error::Inconclusive(_) | Error::OrbitTooLarge { .. } => {
                return 3;
            }
            _ => return 2,
        }
    }
    2
}

fn run(cli: &Cli) -> Result<i32> {
    let budget = WallClock::from_secs(cli.budget_secs);
    let env = Env {
        max_product_vertices: cli.max_vertices,
        max_sets: cli.max_sets,
        budget: &budget,
        ..Env::default()
    };
    match &cli.command {
        Command::Alpha { graphs } => cmd_alpha(cli, &env, graphs),
        Command::Check { kind, graphs, n, subset } => cmd_check(cli, &env, kind, graphs, *n, subset.as_deref()),
        Command::Corpus { max_corpus_vertices, suites } => cmd_corpus(cli, &env, *max_corpus_vertices, suites),
        Command::Product { g, h } => cmd_product(cli, &env, g, h),
        Command::Info { graphs } => cmd_info(cli, &env, graphs),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    println!("{text}");
    if let Some(path) = &cli.out {
        fs::write(path, format!("{text}\n")).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn emit_envelope(cli: &Cli, envelope: &Envelope) -> Result<i32> {
    let text = match cli.format {
        Format::Json => envelope.to_json(),
        Format::Table => envelope.to_table(),
    };
    emit(cli, text.trim_end())?;
    Ok(envelope.exit_code())
}

fn cmd_alpha(cli: &Cli, env: &Env, graphs: &[String]) -> Result<i32> {
    let mut lines = Vec::new();
    for arg in graphs {
        let g = input::load(arg)?;
        let name = input::describe(arg, &g);
        let mis = enumerate_mis(&g, env).map_err(anyhow::Error::from)?;
        let ratio = independence_ratio(mis.alpha, g.n());
        let r = if mis.complete {
            let counts = mis_membership_counts(&g, &mis).map_err(anyhow::Error::from)?;
            if counts.iter().all(|&c| c == counts[0]) {
                Some(counts[0])
            } else {
                None
            }
        } else {
            None
        };
        let obj = serde_json::json!({
            "graph": name,
            "n": g.n(),
            "alpha": mis.alpha,
            "ratio": ratio.to_string(),
            "num_mis": if mis.complete { serde_json::json!(mis.sets.len()) } else { serde_json::Value::Null },
            "r": r,
            "complete": mis.complete,
        });
        lines.push(match cli.format {
            Format::Json => serde_json::to_string(&obj)?,
            Format::Table => format!(
                "{name}: n={} alpha={} ratio={} num_mis={} r={}",
                g.n(),
                mis.alpha,
                ratio,
                if mis.complete { mis.sets.len().to_string() } else { "?".into() },
                r.map(|x| x.to_string()).unwrap_or_else(|| "-".into())
            ),
        });
    }
    emit(cli, &lines.join("\n"))?;
    Ok(0)
}

fn parse_subset(text: &str, n: usize) -> Result<VertexSet> {
    let mut verts = Vec::new();
    for part in text.split(',') {
        let v: usize = part.trim().parse().with_context(|| format!("bad vertex `{part}`"))?;
        if v >= n {
            bail!("vertex {v} out of range for a graph on {n} vertices");
        }
        verts.push(v);
    }
    Ok(VertexSet::from_vertices(n, verts))
}

fn want(graphs: &[Graph], k: usize, kind: &str) -> Result<()> {
    if graphs.len() != k {
        bail!("`{kind}` takes exactly {k} graph argument(s), got {}", graphs.len());
    }
    Ok(())
}

fn cmd_check(cli: &Cli, env: &Env, kind: &str, graph_args: &[String], n: Option<usize>, subset: Option<&str>) -> Result<i32> {
    let graphs: Vec<Graph> = graph_args.iter().map(|a| input::load(a)).collect::<Result<_>>()?;
    let names: Vec<String> = graph_args
        .iter()
        .zip(&graphs)
        .map(|(a, g)| input::describe(a, g))
        .collect();
    let start = Instant::now();
    let envelope = match kind {
        "normal" => {
            want(&graphs, 2, kind)?;
            let report = check_mis_normal(&graphs[0], &graphs[1], env).map_err(anyhow::Error::from)?;
            Envelope::from_normality(&report, names, start.elapsed())
        }
        "primitive" => {
            want(&graphs, 1, kind)?;
            let report = check_is_primitive(&graphs[0], env).map_err(anyhow::Error::from)?;
            Envelope::from_primitivity(&report, names, start.elapsed())
        }
        "eq1" => {
            want(&graphs, 2, kind)?;
            let (lhs, rhs, equal) = check_eq1(&graphs[0], &graphs[1], env).map_err(anyhow::Error::from)?;
            let report = misnormal_core::checks::TheoremReport {
                statement: "eq1".into(),
                hypotheses: Vec::new(),
                conclusion: equal,
                witnesses: Default::default(),
                status: if equal {
                    misnormal_core::checks::TheoremStatus::Verified
                } else {
                    misnormal_core::checks::TheoremStatus::Violated
                },
                notes: vec![format!("alpha(GxH) = {lhs}, max{{a(G)|H|, a(H)|G|}} = {rhs}")],
            };
            Envelope::from_theorem(report, names, start.elapsed())
        }
        theorem if theorem.starts_with("theorem:") => {
            let id = &theorem["theorem:".len()..];
            let report = match id {
                "ratio-bound" => {
                    want(&graphs, 1, theorem)?;
                    verify_ratio_bound(&graphs[0], env)
                }
                "induced-ratio" => {
                    want(&graphs, 1, theorem)?;
                    let text = subset.context("theorem:induced-ratio needs --subset")?;
                    let b = parse_subset(text, graphs[0].n())?;
                    verify_induced_ratio(&graphs[0], &b, env)
                }
                "bipartite" => {
                    want(&graphs, 1, theorem)?;
                    verify_bipartite_corollary(&graphs[0], env)
                }
                "partition" => {
                    want(&graphs, 1, theorem)?;
                    verify_imprimitive_partition(&graphs[0], env)
                }
                "dichotomy" => {
                    want(&graphs, 2, theorem)?;
                    verify_dichotomy(&graphs[0], &graphs[1], env)
                }
                "product-primitivity" => {
                    want(&graphs, 2, theorem)?;
                    verify_primitivity_theorem(&graphs[0], &graphs[1], env)
                }
                "trichotomy" => {
                    want(&graphs, 2, theorem)?;
                    let text = subset.context("theorem:trichotomy needs --subset for G'")?;
                    let gp = parse_subset(text, graphs[0].n())?;
                    verify_product_trichotomy(&graphs[0], &gp, &graphs[1], env)
                }
                "power" => {
                    want(&graphs, 1, theorem)?;
                    let n = n.context("theorem:power needs --n")?;
                    verify_power_corollary(&graphs[0], n, env)
                }
                other => bail!("unknown theorem id `{other}`"),
            }
            .map_err(anyhow::Error::from)?;
            Envelope::from_theorem(report, names, start.elapsed())
        }
        other => bail!("unknown check kind `{other}` (normal | primitive | eq1 | theorem:<id>)"),
    };
    emit_envelope(cli, &envelope)
}

fn cmd_corpus(cli: &Cli, env: &Env, max_corpus_vertices: usize, suites: &[String]) -> Result<i32> {
    let results = runner::run(max_corpus_vertices, suites, cli.workers, env)?;
    let all_pass = results.iter().all(|r| r.pass);
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&results)?,
        Format::Table => {
            let mut out = String::new();
            for r in &results {
                out.push_str(&format!(
                    "{:<4} {:<20} {:<28} {}\n",
                    if r.pass { "pass" } else { "FAIL" },
                    r.suite,
                    r.instance,
                    r.detail
                ));
            }
            out.push_str(&format!(
                "{} checks, {} failures\n",
                results.len(),
                results.iter().filter(|r| !r.pass).count()
            ));
            out.trim_end().to_string()
        }
    };
    emit(cli, &text)?;
    Ok(if all_pass { 0 } else { 1 })
}

fn cmd_product(cli: &Cli, env: &Env, g_arg: &str, h_arg: &str) -> Result<i32> {
    let g = input::load(g_arg)?;
    let h = input::load(h_arg)?;
    let p = direct_product(&g, &h, env.max_product_vertices).map_err(anyhow::Error::from)?;
    let obj = serde_json::json!({
        "factors": [input::describe(g_arg, &g), input::describe(h_arg, &h)],
        "factor_sizes": p.factor_sizes(),
        "n": p.graph.n(),
        "edges": p.graph.edge_count(),
        "connected": p.graph.is_connected(),
        "graph6": graph6::encode(&p.graph),
    });
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&obj)?,
        Format::Table => format!(
            "{} x {}: n={} edges={} graph6={}",
            input::describe(g_arg, &g),
            input::describe(h_arg, &h),
            p.graph.n(),
            p.graph.edge_count(),
            graph6::encode(&p.graph)
        ),
    };
    emit(cli, &text)?;
    Ok(0)
}

fn cmd_info(cli: &Cli, env: &Env, graphs: &[String]) -> Result<i32> {
    let mut lines = Vec::new();
    for arg in graphs {
        let g = input::load(arg)?;
        let name = input::describe(arg, &g);
        let degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
        let transitive = if g.n() <= env.max_automorphism_vertices {
            is_vertex_transitive(&g, env).ok()
        } else {
            None
        };
        let group_order = if g.n() <= env.max_automorphism_vertices {
            automorphism_group(&g, env).ok().map(|grp| grp.order().to_string())
        } else {
            None
        };
        let a = alpha(&g, env).map_err(anyhow::Error::from)?;
        let obj = serde_json::json!({
            "graph": name,
            "n": g.n(),
            "edges": g.edge_count(),
            "min_degree": degrees.iter().min(),
            "max_degree": degrees.iter().max(),
            "bipartite": g.is_bipartite(),
            "connected": g.is_connected(),
            "vertex_transitive": transitive,
            "aut_order": group_order,
            "alpha": a,
            "ratio": independence_ratio(a, g.n()).to_string(),
            "graph6": graph6::encode(&g),
        });
        lines.push(match cli.format {
            Format::Json => serde_json::to_string(&obj)?,
            Format::Table => format!(
                "{name}: n={} edges={} alpha={} bipartite={} connected={} vt={:?} aut={:?}",
                g.n(),
                g.edge_count(),
                a,
                g.is_bipartite(),
                g.is_connected(),
                transitive,
                obj["aut_order"]
            ),
        });
    }
    emit(cli, &lines.join("\n"))?;
    Ok(0)
}
