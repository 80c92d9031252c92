use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A named vertex-transitive graph family instance.
///
/// Text syntax (used by the CLI): `cycle:5`, `complete:4`, `empty:3`,
/// `kneser:5,2`, `circulant:9,1+2`, `cayley:9,1+2`, `copies:2xcomplete:3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    Circulant { n: usize, connections: Vec<usize> },
    Kneser { n: usize, k: usize },
    CayleyAbelian { n: usize, connections: Vec<usize> },
    Copies { m: usize, inner: Box<FamilySpec> },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
            FamilySpec::Circulant { n, connections } => {
                write!(f, "circulant:{n},{}", join_plus(connections))
            }
            FamilySpec::Kneser { n, k } => write!(f, "kneser:{n},{k}"),
            FamilySpec::CayleyAbelian { n, connections } => {
                write!(f, "cayley:{n},{}", join_plus(connections))
            }
            FamilySpec::Copies { m, inner } => write!(f, "copies:{m}x{inner}"),
        }
    }
}

fn join_plus(xs: &[usize]) -> String {
    let mut out = String::new();
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            out.push('+');
        }
        out.push_str(&x.to_string());
    }
    out
}

impl FamilySpec {
    /// Parses the CLI text syntax.
    pub fn parse(text: &str) -> Result<FamilySpec> {
        let bad = |msg: &str| Error::BadParameters(format!("{msg} in spec `{text}`"));
        let (kind, rest) = text
            .split_once(':')
            .ok_or_else(|| bad("missing `:`"))?;
        let parse_num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad("bad integer"));
        match kind {
            "cycle" => Ok(FamilySpec::Cycle(parse_num(rest)?)),
            "complete" => Ok(FamilySpec::Complete(parse_num(rest)?)),
            "empty" => Ok(FamilySpec::Empty(parse_num(rest)?)),
            "kneser" => {
                let (n, k) = rest.split_once(',').ok_or_else(|| bad("kneser needs n,k"))?;
                Ok(FamilySpec::Kneser { n: parse_num(n)?, k: parse_num(k)? })
            }
            "circulant" | "cayley" | "cayley_abelian" => {
                let (n, conns) = rest
                    .split_once(',')
                    .ok_or_else(|| bad("circulant needs n,s1+s2+.."))?;
                let n = parse_num(n)?;
                let connections = conns
                    .split('+')
                    .map(parse_num)
                    .collect::<Result<Vec<_>>>()?;
                if kind == "circulant" {
                    Ok(FamilySpec::Circulant { n, connections })
                } else {
                    Ok(FamilySpec::CayleyAbelian { n, connections })
                }
            }
            "copies" => {
                let (m, inner) = rest.split_once('x').ok_or_else(|| bad("copies needs MxSPEC"))?;
                Ok(FamilySpec::Copies {
                    m: parse_num(m)?,
                    inner: Box::new(FamilySpec::parse(inner)?),
                })
            }
            _ => Err(bad("unknown family kind")),
        }
    }
}

/// Normalizes a circulant connection set to positive residues in
/// 1..=n/2, rejecting multiples of n.
fn normalize_connections(n: usize, connections: &[usize]) -> Result<Vec<usize>> {
    if n == 0 {
        return Err(Error::BadParameters("circulant needs n >= 1".into()));
    }
    let mut out: Vec<usize> = Vec::new();
    for &s in connections {
        let r = s % n;
        if r == 0 {
            return Err(Error::BadParameters(format!(
                "connection {s} is 0 mod {n} (would create a loop)"
            )));
        }
        out.push(r.min(n - r));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn circulant(n: usize, connections: &[usize]) -> Result<Graph> {
    let conns = normalize_connections(n, connections)?;
    let mut edges = Vec::new();
    for v in 0..n {
        for &s in &conns {
            edges.push((v, (v + s) % n));
        }
    }
    Ok(Graph::build(n, &edges)?.with_label(format!("circulant:{n},{}", join_plus(&conns))))
}

fn kneser(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n < 2 * k {
        return Err(Error::BadParameters(format!("kneser requires n >= 2k >= 2, got n={n}, k={k}")));
    }
    if n > 30 {
        return Err(Error::BadParameters(format!("kneser ground set too large: n={n}")));
    }
    // k-subsets of {0..n-1} in colexicographic order, which coincides with
    // ascending order of their characteristic bitmasks.
    let mut subsets: Vec<u32> = Vec::new();
    let mut mask: u32 = (1u32 << k) - 1;
    let limit: u32 = 1u32 << n;
    while mask < limit {
        subsets.push(mask);
        // Gosper's hack: next bitmask with the same popcount.
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        if c == 0 || r >= limit {
            break;
        }
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    let mut edges = Vec::new();
    for i in 0..subsets.len() {
        for j in i + 1..subsets.len() {
            if subsets[i] & subsets[j] == 0 {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::build(subsets.len(), &edges)?.with_label(format!("kneser:{n},{k}")))
}

fn disjoint_copies(m: usize, inner: &Graph, label: &str) -> Result<Graph> {
    if m == 0 {
        return Err(Error::BadParameters("copies requires m >= 1".into()));
    }
    let block = inner.n();
    let mut edges = Vec::new();
    for c in 0..m {
        for (u, v) in inner.edges() {
            edges.push((c * block + u, c * block + v));
        }
    }
    Ok(Graph::build(m * block, &edges)?.with_label(label))
}

/// Builds the graph for a family spec. Deterministic: identical specs give
/// bit-identical adjacency.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Cycle(n) => {
            if *n < 3 {
                return Err(Error::BadParameters(format!("cycle requires n >= 3, got {n}")));
            }
            Ok(circulant(*n, &[1])?.with_label(format!("cycle:{n}")))
        }
        FamilySpec::Complete(n) => {
            if *n == 0 {
                return Err(Error::BadParameters("complete requires n >= 1".into()));
            }
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    edges.push((u, v));
                }
            }
            Ok(Graph::build(*n, &edges)?.with_label(format!("complete:{n}")))
        }
        FamilySpec::Empty(n) => Ok(Graph::build(*n, &[])?.with_label(format!("empty:{n}"))),
        FamilySpec::Circulant { n, connections } | FamilySpec::CayleyAbelian { n, connections } => {
            circulant(*n, connections)
        }
        FamilySpec::Kneser { n, k } => kneser(*n, *k),
        FamilySpec::Copies { m, inner } => {
            let inner_graph = generate(inner)?;
            disjoint_copies(*m, &inner_graph, &spec.to_string())
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn circulant_is_connected(n: usize, conns: &[usize]) -> bool {
    conns.iter().fold(n, |g, &s| gcd(g, s)) == 1
}

/// The deterministic corpus of vertex-transitive test graphs:
/// all cycles 3..=max, K_2..K_min(max,8), Petersen, kneser(7,3) when it
/// fits, all connected circulants on up to 12 vertices, and 2K_3.
pub fn corpus(max_vertices: usize) -> Vec<(FamilySpec, Graph)> {
    assert!(max_vertices >= 2, "corpus requires max_vertices >= 2");
    let mut out: Vec<FamilySpec> = Vec::new();
    for n in 3..=max_vertices {
        out.push(FamilySpec::Cycle(n));
    }
    for n in 2..=max_vertices.min(8) {
        out.push(FamilySpec::Complete(n));
    }
    if max_vertices >= 10 {
        out.push(FamilySpec::Kneser { n: 5, k: 2 });
    }
    if max_vertices >= 35 {
        out.push(FamilySpec::Kneser { n: 7, k: 3 });
    }
    for n in 3..=max_vertices.min(12) {
        let half = n / 2;
        for mask in 1u32..1 << half {
            let conns: Vec<usize> = (0..half).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
            if circulant_is_connected(n, &conns) {
                out.push(FamilySpec::Circulant { n, connections: conns });
            }
        }
    }
    if max_vertices >= 6 {
        out.push(FamilySpec::Copies { m: 2, inner: Box::new(FamilySpec::Complete(3)) });
    }
    out.into_iter()
        .map(|spec| {
            let graph = generate(&spec).expect("corpus specs are valid by construction");
            (spec, graph)
        })
        .collect()
}
