use alloc::vec::Vec;
use serde::Serialize;

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// A permutation of {0, .., n-1}, stored as its image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Perm {
    image: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { image: (0..n).collect() }
    }

    /// Wraps an image array; must be a bijection on 0..len.
    pub fn from_image(image: Vec<usize>) -> Perm {
        debug_assert!({
            let mut seen = alloc::vec![false; image.len()];
            image.iter().all(|&v| {
                v < seen.len() && !core::mem::replace(&mut seen[v], true)
            })
        });
        Perm { image }
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// self then other: (other * self)(v) = other(self(v)).
    pub fn then(&self, other: &Perm) -> Perm {
        Perm { image: self.image.iter().map(|&v| other.image[v]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut image = alloc::vec![0; self.image.len()];
        for (v, &w) in self.image.iter().enumerate() {
            image[w] = v;
        }
        Perm { image }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(v, &w)| v == w)
    }

    pub fn apply_set(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_vertices(self.degree(), s.iter().map(|v| self.image[v]))
    }

    /// Checks the edge-preservation biconditional on every pair.
    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        if self.degree() != g.n() {
            return false;
        }
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if g.has_edge(u, v) != g.has_edge(self.image[u], self.image[v]) {
                    return false;
                }
            }
        }
        true
    }
}
