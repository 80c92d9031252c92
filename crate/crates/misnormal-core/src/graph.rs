use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use serde::{Serialize, Serializer};

use crate::bitset::{words_for, VertexSet};
use crate::error::{Error, Result};

/// An immutable simple loopless graph stored as one adjacency bitset row per
/// vertex. Rows are kept in a single flat buffer of `n * words_per_row`
/// words so solver kernels can slice them without indirection.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words_per_row: usize,
    adj: Vec<u64>,
    label: Option<String>,
}

impl Graph {
    /// Builds a graph from an unordered edge list. Duplicate edges collapse;
    /// loops and out-of-range endpoints are rejected.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let words_per_row = words_for(n);
        let mut adj = vec![0u64; n * words_per_row];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::LoopRejected { vertex: u });
            }
            for &x in &[u, v] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, bound: n });
                }
            }
            adj[u * words_per_row + (v >> 6)] |= 1u64 << (v & 63);
            adj[v * words_per_row + (u >> 6)] |= 1u64 << (u & 63);
        }
        Ok(Graph { n, words_per_row, adj, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = Some(label.into());
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[inline]
    pub fn words_per_row(&self) -> usize {
        self.words_per_row
    }

    /// Raw adjacency row of `v` as a word slice.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words_per_row..(v + 1) * self.words_per_row]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.row(u)[v >> 6] >> (v & 63) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u).iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v).to_vec())
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Open neighborhood N(A): vertices adjacent to some vertex of A.
    pub fn open_neighborhood(&self, a: &VertexSet) -> VertexSet {
        let mut out = VertexSet::empty(self.n);
        for v in a.iter() {
            out.union_with(&self.neighbors(v));
        }
        out
    }

    /// Closed neighborhood N[A] = N(A) union A.
    pub fn closed_neighborhood(&self, a: &VertexSet) -> VertexSet {
        let mut out = self.open_neighborhood(a);
        out.union_with(a);
        out
    }

    /// V(G) - N[A].
    pub fn complement_closed_neighborhood(&self, a: &VertexSet) -> VertexSet {
        self.closed_neighborhood(a).complement()
    }

    pub fn is_independent(&self, a: &VertexSet) -> bool {
        a.iter().all(|v| self.neighbors(v).is_disjoint_from(a))
    }

    /// Subgraph induced by `b`, with vertices relabeled 0..|b|-1 in
    /// ascending order of the original indices.
    pub fn induced_subgraph(&self, b: &VertexSet) -> Result<InducedSubgraph> {
        if b.is_empty() {
            return Err(Error::EmptySelection);
        }
        let vertices: Vec<usize> = b.iter().collect();
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        let mut graph = Graph::build(vertices.len(), &edges)?;
        graph.label = self.label.clone();
        Ok(InducedSubgraph { graph, vertices, parent_n: self.n })
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// A proper 2-coloring if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = Vec::new();
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push(start);
            while let Some(u) = queue.pop() {
                for v in self.neighbors(u).iter() {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.component_of(0).len() == self.n
    }

    fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(self.n, start);
        let mut queue = vec![start];
        while let Some(u) = queue.pop() {
            for v in self.neighbors(u).iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    queue.push(v);
                }
            }
        }
        seen
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertex_set();
        let mut out = Vec::new();
        while let Some(start) = remaining.min_element() {
            let comp = self.component_of(start);
            remaining.subtract(&comp);
            out.push(comp);
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.edge_count())
            .field("label", &self.label)
            .finish()
    }
}

/// An induced subgraph together with the map back to the parent's labels.
/// `vertices[i]` is the parent vertex carrying new index `i`.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub vertices: Vec<usize>,
    pub parent_n: usize,
}

impl InducedSubgraph {
    /// Index of a parent vertex inside the subgraph, if selected.
    pub fn to_local(&self, parent_vertex: usize) -> Option<usize> {
        self.vertices.binary_search(&parent_vertex).ok()
    }

    /// Translates a subgraph vertex set back into parent labels.
    pub fn to_parent(&self, local: &VertexSet) -> VertexSet {
        VertexSet::from_vertices(self.parent_n, local.iter().map(|i| self.vertices[i]))
    }
}

/// An exact nonnegative rational, compared by cross multiplication and kept
/// in lowest terms for display. Used for every independence ratio.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Ratio {
    num: u64,
    den: u64,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Ratio {
        assert!(den > 0, "ratio denominator must be positive");
        let g = gcd(num, den).max(1);
        Ratio { num: num / g, den: den / g }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, serializer: S) -> core::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
