use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default hard cap on product vertex counts; exhaustive operations refuse
/// to run above it rather than degrade.
pub const DEFAULT_PRODUCT_CAP: usize = 4096;

/// A direct (tensor) product together with its factor list.
///
/// Indexing is row-major and left-associated: the vertex with coordinates
/// (c_0, .., c_{k-1}) has index ((c_0 * n_1 + c_1) * n_2 + c_2) ...
#[derive(Debug, Clone)]
pub struct ProductGraph {
    pub graph: Graph,
    factors: Vec<Graph>,
}

fn combine(a: &Graph, b: &Graph) -> Graph {
    let nb = b.n();
    let mut edges = Vec::with_capacity(2 * a.edge_count() * b.edge_count());
    for (u1, v1) in a.edges() {
        for (u2, v2) in b.edges() {
            edges.push((u1 * nb + u2, v1 * nb + v2));
            edges.push((u1 * nb + v2, v1 * nb + u2));
        }
    }
    Graph::build(a.n() * b.n(), &edges).expect("product indices are in range by construction")
}

/// G x H with edges exactly between pairs adjacent in both coordinates.
pub fn direct_product(g: &Graph, h: &Graph, cap: usize) -> Result<ProductGraph> {
    let requested = g.n().checked_mul(h.n()).ok_or(Error::SizeOverflow { requested: usize::MAX, cap })?;
    if requested > cap {
        return Err(Error::SizeOverflow { requested, cap });
    }
    Ok(ProductGraph { graph: combine(g, h), factors: alloc::vec![g.clone(), h.clone()] })
}

/// The n-th direct power of G, left-associated.
pub fn power(g: &Graph, n: usize, cap: usize) -> Result<ProductGraph> {
    assert!(n >= 1, "power exponent must be positive");
    let mut requested = 1usize;
    for _ in 0..n {
        requested = requested
            .checked_mul(g.n())
            .ok_or(Error::SizeOverflow { requested: usize::MAX, cap })?;
    }
    if requested > cap {
        return Err(Error::SizeOverflow { requested, cap });
    }
    let mut graph = g.clone();
    for _ in 1..n {
        graph = combine(&graph, g);
    }
    Ok(ProductGraph { graph, factors: alloc::vec![g.clone(); n] })
}

impl ProductGraph {
    pub fn factors(&self) -> &[Graph] {
        &self.factors
    }

    pub fn factor_sizes(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.n()).collect()
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    fn stride(&self, axis: usize) -> usize {
        self.factors[axis + 1..].iter().map(|f| f.n()).product()
    }

    /// Coordinate of product vertex `v` along `axis`.
    pub fn coordinate(&self, v: usize, axis: usize) -> usize {
        v / self.stride(axis) % self.factors[axis].n()
    }

    /// Product vertex index for a full coordinate tuple.
    pub fn index_of(&self, coords: &[usize]) -> usize {
        debug_assert_eq!(coords.len(), self.arity());
        coords
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, f)| acc * f.n() + c)
    }

    /// Projection of S onto one factor: the coordinates occurring in S.
    pub fn project(&self, s: &VertexSet, axis: usize) -> Result<VertexSet> {
        if axis >= self.arity() {
            return Err(Error::BadAxis { axis, arity: self.arity() });
        }
        let mut out = VertexSet::empty(self.factors[axis].n());
        for v in s.iter() {
            out.insert(self.coordinate(v, axis));
        }
        Ok(out)
    }

    /// Full preimage of a factor vertex set under the projection onto `axis`.
    pub fn preimage(&self, j: &VertexSet, axis: usize) -> Result<VertexSet> {
        if axis >= self.arity() {
            return Err(Error::BadAxis { axis, arity: self.arity() });
        }
        let mut out = VertexSet::empty(self.graph.n());
        for v in 0..self.graph.n() {
            if j.contains(self.coordinate(v, axis)) {
                out.insert(v);
            }
        }
        Ok(out)
    }

    /// The slice of S above a first-coordinate vertex `a` of a two-factor
    /// product: {v in H : (a, v) in S}.
    pub fn fiber(&self, a: usize, s: &VertexSet) -> Result<VertexSet> {
        if self.arity() != 2 {
            return Err(Error::BadAxis { axis: 2, arity: self.arity() });
        }
        let (ng, nh) = (self.factors[0].n(), self.factors[1].n());
        if a >= ng {
            return Err(Error::IndexOutOfRange { index: a, bound: ng });
        }
        let mut out = VertexSet::empty(nh);
        for v in 0..nh {
            if s.contains(a * nh + v) {
                out.insert(v);
            }
        }
        Ok(out)
    }

    /// For a square product G x G: the diagonal {(u, u)} and the subgraph it
    /// induces. Under direct-product adjacency the diagonal is isomorphic to
    /// G itself via u -> (u, u).
    pub fn diagonal_subgraph(&self) -> Result<(VertexSet, Graph)> {
        if self.arity() != 2 || !same_adjacency(&self.factors[0], &self.factors[1]) {
            return Err(Error::NotASquareProduct);
        }
        let m = self.factors[0].n();
        let diag = VertexSet::from_vertices(self.graph.n(), (0..m).map(|u| u * m + u));
        let induced = self.graph.induced_subgraph(&diag)?;
        Ok((diag, induced.graph))
    }
}

fn same_adjacency(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && (0..a.n()).all(|v| a.row(v) == b.row(v))
}
