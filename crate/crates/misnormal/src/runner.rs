//! Corpus runner: invariant suites executed over the deterministic graph
//! corpus on a worker pool. Results are reported in input order, never in
//! completion order, so output is byte-identical for any worker count.

use anyhow::{bail, Result};
use misnormal_core::checks::{
    check_eq1, verify_bipartite_corollary, verify_induced_ratio, verify_ratio_bound, TheoremStatus,
};
use misnormal_core::families::corpus;
use misnormal_core::solver::{enumerate_mis, mis_membership_counts};
use misnormal_core::{Env, Graph, VertexSet};
use rayon::prelude::*;
use serde::Serialize;

use crate::graph6;

pub const ALL_SUITES: [&str; 6] = [
    "ratio-bound",
    "induced-ratio",
    "bipartite-corollary",
    "counting",
    "graph6-roundtrip",
    "eq1-pairs",
];

/// Products larger than this are skipped by the pairwise suite.
const EQ1_PAIR_VERTEX_CAP: usize = 100;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub instance: String,
    pub pass: bool,
    pub detail: String,
}

fn result(suite: &str, instance: String, pass: bool, detail: String) -> SuiteResult {
    SuiteResult { suite: suite.into(), instance, pass, detail }
}

fn status_result(suite: &str, instance: String, status: TheoremStatus) -> SuiteResult {
    result(
        suite,
        instance,
        status != TheoremStatus::Violated,
        format!("{status:?}"),
    )
}

type Job = Box<dyn Fn(&Env) -> SuiteResult + Send + Sync>;

fn jobs_for(suite: &str, graphs: &[(String, Graph)]) -> Result<Vec<Job>> {
    let mut jobs: Vec<Job> = Vec::new();
    match suite {
        "ratio-bound" => {
            for (name, g) in graphs {
                let (name, g) = (name.clone(), g.clone());
                jobs.push(Box::new(move |env| match verify_ratio_bound(&g, env) {
                    Ok(r) => status_result("ratio-bound", name.clone(), r.status),
                    Err(e) => result("ratio-bound", name.clone(), false, e.to_string()),
                }));
            }
        }
        "induced-ratio" => {
            for (name, g) in graphs {
                let (name, g) = (name.clone(), g.clone());
                jobs.push(Box::new(move |env| {
                    // B = N[{0}]: the canonical nontrivial test subset.
                    let b = g.closed_neighborhood(&VertexSet::singleton(g.n(), 0));
                    match verify_induced_ratio(&g, &b, env) {
                        Ok(r) => status_result("induced-ratio", name.clone(), r.status),
                        Err(e) => result("induced-ratio", name.clone(), false, e.to_string()),
                    }
                }));
            }
        }
        "bipartite-corollary" => {
            for (name, g) in graphs {
                let (name, g) = (name.clone(), g.clone());
                if g.edge_count() == 0 {
                    continue;
                }
                jobs.push(Box::new(move |env| {
                    match verify_bipartite_corollary(&g, env) {
                        Ok(r) => status_result("bipartite-corollary", name.clone(), r.status),
                        Err(e) => result("bipartite-corollary", name.clone(), false, e.to_string()),
                    }
                }));
            }
        }
        "counting" => {
            for (name, g) in graphs {
                let (name, g) = (name.clone(), g.clone());
                jobs.push(Box::new(move |env| {
                    let run = || -> Result<String> {
                        let mis = enumerate_mis(&g, env).map_err(|e| anyhow::anyhow!("{e}"))?;
                        if !mis.complete {
                            bail!("enumeration hit its cap");
                        }
                        let counts =
                            mis_membership_counts(&g, &mis).map_err(|e| anyhow::anyhow!("{e}"))?;
                        let r = counts[0];
                        if counts.iter().any(|&c| c != r) {
                            bail!("membership counts not constant: {counts:?}");
                        }
                        if r * g.n() != mis.alpha * mis.sets.len() {
                            bail!(
                                "r|V| = {} but alpha|I| = {}",
                                r * g.n(),
                                mis.alpha * mis.sets.len()
                            );
                        }
                        Ok(format!("r={r}, alpha={}, |I|={}", mis.alpha, mis.sets.len()))
                    };
                    match run() {
                        Ok(detail) => result("counting", name.clone(), true, detail),
                        Err(e) => result("counting", name.clone(), false, e.to_string()),
                    }
                }));
            }
        }
        "graph6-roundtrip" => {
            for (name, g) in graphs {
                let (name, g) = (name.clone(), g.clone());
                jobs.push(Box::new(move |_env| {
                    let encoded = graph6::encode(&g);
                    match graph6::decode(&encoded) {
                        Ok(back) if back.n() == g.n() && back.edges() == g.edges() => {
                            result("graph6-roundtrip", name.clone(), true, encoded.clone())
                        }
                        Ok(_) => result("graph6-roundtrip", name.clone(), false, "adjacency changed".into()),
                        Err(e) => result("graph6-roundtrip", name.clone(), false, e.to_string()),
                    }
                }));
            }
        }
        "eq1-pairs" => {
            for i in 0..graphs.len() {
                for j in i..graphs.len() {
                    let (na, a) = graphs[i].clone();
                    let (nb, b) = graphs[j].clone();
                    if a.n() * b.n() > EQ1_PAIR_VERTEX_CAP {
                        continue;
                    }
                    jobs.push(Box::new(move |env| {
                        let instance = format!("{na} x {nb}");
                        match check_eq1(&a, &b, env) {
                            Ok((lhs, rhs, equal)) => result(
                                "eq1-pairs",
                                instance,
                                equal,
                                format!("alpha(GxH)={lhs}, max-side={rhs}"),
                            ),
                            Err(e) => result("eq1-pairs", instance, false, e.to_string()),
                        }
                    }));
                }
            }
        }
        other => bail!("unknown suite `{other}` (available: {})", ALL_SUITES.join(", ")),
    }
    Ok(jobs)
}

/// Runs the requested suites over corpus(max_vertices) on `workers`
/// threads (0 = library default). Results come back in job order.
pub fn run(max_vertices: usize, suites: &[String], workers: usize, env: &Env) -> Result<Vec<SuiteResult>> {
    let graphs: Vec<(String, Graph)> = corpus(max_vertices)
        .into_iter()
        .map(|(spec, g)| (spec.to_string(), g))
        .collect();
    let mut jobs: Vec<Job> = Vec::new();
    let selected: Vec<String> = if suites.is_empty() {
        ALL_SUITES.iter().map(|s| s.to_string()).collect()
    } else {
        suites.to_vec()
    };
    for suite in &selected {
        jobs.extend(jobs_for(suite, &graphs)?);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()?;
    // `collect` on an indexed parallel iterator preserves job order.
    Ok(pool.install(|| jobs.par_iter().map(|job| job(env)).collect()))
}
