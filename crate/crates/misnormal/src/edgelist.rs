//! Plain edge-list text format: a "n m" header line followed by m
//! "u v" lines. Blank lines and lines starting with `#` are ignored.

use anyhow::{bail, Context, Result};
use misnormal_core::Graph;

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().context("edge list is empty")?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .context("missing vertex count")?
        .parse()
        .context("bad vertex count")?;
    let m: usize = parts
        .next()
        .context("missing edge count")?
        .parse()
        .context("bad edge count")?;
    if parts.next().is_some() {
        bail!("header must be exactly `n m`");
    }
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut parts = line.split_whitespace();
        let u: usize = parts.next().context("missing endpoint")?.parse().context("bad endpoint")?;
        let v: usize = parts
            .next()
            .with_context(|| format!("edge line `{line}` has one endpoint"))?
            .parse()
            .context("bad endpoint")?;
        if parts.next().is_some() {
            bail!("edge line `{line}` has more than two fields");
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        bail!("header promises {m} edges but {} lines follow", edges.len());
    }
    Graph::build(n, &edges).map_err(|e| anyhow::anyhow!("{e}"))
}

pub fn write(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
