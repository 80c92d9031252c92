//! Naive full-powerset reference oracle, independent of the solver path.

use misnormal_core::{Graph, VertexSet};

/// All maximum independent sets by scanning every subset of V(G).
/// Only usable for n <= 25 or so; that is the point.
#[allow(dead_code)]
pub fn brute_force_mis(g: &Graph) -> (usize, Vec<VertexSet>) {
    let n = g.n();
    assert!(n <= 25, "brute force oracle limited to 25 vertices");
    let rows: Vec<u32> = (0..n)
        .map(|v| {
            let mut row = 0u32;
            for u in g.neighbors(v).iter() {
                row |= 1 << u;
            }
            row
        })
        .collect();
    let mut best = 0usize;
    let mut sets: Vec<u32> = vec![0];
    for mask in 1u32..1u32 << n {
        let mut independent = true;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if rows[v] & mask != 0 {
                independent = false;
                break;
            }
        }
        if !independent {
            continue;
        }
        let size = mask.count_ones() as usize;
        match size.cmp(&best) {
            std::cmp::Ordering::Greater => {
                best = size;
                sets = vec![mask];
            }
            std::cmp::Ordering::Equal => sets.push(mask),
            std::cmp::Ordering::Less => {}
        }
    }
    let mut sets: Vec<VertexSet> = sets
        .into_iter()
        .map(|mask| VertexSet::from_vertices(n, (0..n).filter(|v| mask >> v & 1 == 1)))
        .collect();
    sets.sort();
    (best, sets)
}

#[allow(dead_code)]
pub fn set(n: usize, vs: &[usize]) -> VertexSet {
    VertexSet::from_vertices(n, vs.iter().copied())
}
