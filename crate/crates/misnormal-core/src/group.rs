use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::VertexSet;
use crate::env::Env;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Perm;

/// The automorphism group of a graph, held as a generating set found by
/// individualization-refinement search, with the group order from the
/// orbit-stabilizer chain built along the way.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    order: u128,
    point_orbits: Vec<VertexSet>,
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    /// Orbit partition of the points, ordered by smallest member.
    pub fn point_orbits(&self) -> &[VertexSet] {
        &self.point_orbits
    }

    pub fn is_transitive(&self) -> bool {
        self.point_orbits.len() <= 1
    }

    /// Materializes the full element list, capped.
    pub fn elements(&self, cap: usize) -> Result<Vec<Perm>> {
        let mut seen: BTreeSet<Perm> = BTreeSet::new();
        let mut queue: VecDeque<Perm> = VecDeque::new();
        let id = Perm::identity(self.degree);
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let q = p.then(g);
                if seen.insert(q.clone()) {
                    if seen.len() > cap {
                        return Err(Error::OrbitTooLarge { cap });
                    }
                    queue.push_back(q);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// True iff the group preserves no nontrivial partition of the points.
    /// Tests, for every v != 0, whether the minimal block containing {0, v}
    /// is proper.
    pub fn is_primitive(&self) -> Result<bool> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let n = self.degree;
        if n <= 2 {
            return Ok(true);
        }
        for v in 1..n {
            let block_size = self.minimal_block_size(0, v);
            if block_size > 1 && block_size < n {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Size of the class of 0 in the finest group-invariant partition where
    /// `a` and `b` share a class.
    fn minimal_block_size(&self, a: usize, b: usize) -> usize {
        let n = self.degree;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut queue: VecDeque<(usize, usize)> = VecDeque::new();
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[rb] = ra;
        queue.push_back((a, b));
        while let Some((u, v)) = queue.pop_front() {
            for g in &self.generators {
                let (gu, gv) = (g.apply(u), g.apply(v));
                let (ru, rv) = (find(&mut parent, gu), find(&mut parent, gv));
                if ru != rv {
                    parent[rv] = ru;
                    queue.push_back((gu, gv));
                }
            }
        }
        let ra = find(&mut parent, a);
        (0..n).filter(|&x| find(&mut parent, x) == ra).count()
    }

    /// The orbit {sigma(B)} of a vertex set under the group, computed by
    /// closure under the generators, in canonical ascending order.
    pub fn set_orbit(&self, b: &VertexSet, env: &Env) -> Result<Vec<VertexSet>> {
        if b.is_empty() {
            return Err(Error::EmptySelection);
        }
        let mut seen: BTreeSet<VertexSet> = BTreeSet::new();
        let mut queue: VecDeque<VertexSet> = VecDeque::new();
        seen.insert(b.clone());
        queue.push_back(b.clone());
        while let Some(s) = queue.pop_front() {
            for g in &self.generators {
                let t = g.apply_set(&s);
                if !seen.contains(&t) {
                    if seen.len() + 1 > env.max_orbit {
                        return Err(Error::OrbitTooLarge { cap: env.max_orbit });
                    }
                    seen.insert(t.clone());
                    queue.push_back(t);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }
}

/// True iff the listed sets are pairwise disjoint and cover {0, .., n-1}.
pub fn is_set_partition(orbit: &[VertexSet], n: usize) -> bool {
    if orbit.is_empty() {
        return false;
    }
    let mut union = VertexSet::empty(n);
    let mut total = 0usize;
    for s in orbit {
        total += s.len();
        union.union_with(s);
    }
    total == n && union.len() == n
}

fn orbit_of_point(start: usize, n: usize, gens: &[&Perm]) -> VertexSet {
    let mut orbit = VertexSet::singleton(n, start);
    let mut queue = vec![start];
    while let Some(u) = queue.pop() {
        for g in gens {
            let v = g.apply(u);
            if !orbit.contains(v) {
                orbit.insert(v);
                queue.push(v);
            }
        }
    }
    orbit
}

/// Computes Aut(G) by individualization-refinement backtracking, one
/// transporter search per stabilizer-chain orbit element.
pub fn automorphism_group(g: &Graph, env: &Env) -> Result<PermGroup> {
    let n = g.n();
    if n > env.max_automorphism_vertices {
        return Err(Error::TooLarge { n, cap: env.max_automorphism_vertices });
    }
    let mut generators: Vec<Perm> = Vec::new();
    let mut order: u128 = 1;
    for base in 0..n {
        // Generators fixing 0..base-1 pointwise are the ones allowed to act
        // at this level of the chain.
        let mut usable: Vec<&Perm> = generators
            .iter()
            .filter(|p| (0..base).all(|k| p.apply(k) == k))
            .collect();
        let mut orbit = orbit_of_point(base, n, &usable);
        for j in base + 1..n {
            if orbit.contains(j) {
                continue;
            }
            let mut prescribed: Vec<(usize, usize)> = (0..base).map(|k| (k, k)).collect();
            prescribed.push((base, j));
            if let Some(p) = transporter(g, &prescribed) {
                generators.push(p);
                usable = generators[..]
                    .iter()
                    .filter(|p| (0..base).all(|k| p.apply(k) == k))
                    .collect();
                orbit = orbit_of_point(base, n, &usable);
            }
        }
        order *= orbit.len() as u128;
    }
    let all: Vec<&Perm> = generators.iter().collect();
    let mut remaining = VertexSet::full(n);
    let mut point_orbits = Vec::new();
    while let Some(start) = remaining.min_element() {
        let orbit = orbit_of_point(start, n, &all);
        remaining.subtract(&orbit);
        point_orbits.push(orbit);
    }
    Ok(PermGroup { degree: n, generators, order, point_orbits })
}

/// True iff the automorphism group has a single point orbit. The empty
/// graph and the one-vertex graph count as transitive.
pub fn is_vertex_transitive(g: &Graph, env: &Env) -> Result<bool> {
    Ok(automorphism_group(g, env)?.is_transitive())
}

/// Searches for an automorphism of `g` extending the prescribed point map.
/// Complete: returns None only if no such automorphism exists.
pub fn transporter(g: &Graph, prescribed: &[(usize, usize)]) -> Option<Perm> {
    let n = g.n();
    let mut dom = vec![0u32; n];
    let mut cod = vec![0u32; n];
    for (tag, &(x, y)) in prescribed.iter().enumerate() {
        dom[x] = tag as u32 + 1;
        cod[y] = tag as u32 + 1;
    }
    search(g, dom, cod)
}

fn search(g: &Graph, mut dom: Vec<u32>, mut cod: Vec<u32>) -> Option<Perm> {
    if !refine(g, &mut dom, &mut cod) {
        return None;
    }
    let n = g.n();
    // Group vertices by color on each side.
    let mut classes: BTreeMap<u32, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for v in 0..n {
        classes.entry(dom[v]).or_default().0.push(v);
        classes.entry(cod[v]).or_default().1.push(v);
    }
    let mut target: Option<(&Vec<usize>, &Vec<usize>)> = None;
    for (d, c) in classes.values() {
        if d.len() != c.len() {
            return None;
        }
        if d.len() >= 2 && target.is_none_or(|(t, _)| d.len() < t.len()) {
            target = Some((d, c));
        }
    }
    match target {
        None => {
            // Discrete coloring: read the candidate map off the colors.
            let mut image = vec![0usize; n];
            for (d, c) in classes.values() {
                image[d[0]] = c[0];
            }
            let p = Perm::from_image(image);
            p.is_automorphism_of(g).then_some(p)
        }
        Some((d, c)) => {
            let x = d[0];
            let fresh = n as u32 + 1 + dom.iter().copied().max().unwrap_or(0);
            for &y in c {
                let mut dom2 = dom.clone();
                let mut cod2 = cod.clone();
                dom2[x] = fresh;
                cod2[y] = fresh;
                if let Some(p) = search(g, dom2, cod2) {
                    return Some(p);
                }
            }
            None
        }
    }
}

/// Iterated neighbor-color-multiset refinement, applied to both sides in
/// lockstep so color ids stay aligned. Returns false on a class-size
/// mismatch (no extension can exist).
fn refine(g: &Graph, dom: &mut [u32], cod: &mut [u32]) -> bool {
    let n = g.n();
    loop {
        let sig = |colors: &[u32], v: usize| -> (u32, Vec<u32>) {
            let mut neigh: Vec<u32> = g.neighbors(v).iter().map(|u| colors[u]).collect();
            neigh.sort_unstable();
            (colors[v], neigh)
        };
        let dom_sigs: Vec<_> = (0..n).map(|v| sig(dom, v)).collect();
        let cod_sigs: Vec<_> = (0..n).map(|v| sig(cod, v)).collect();
        let mut all: Vec<&(u32, Vec<u32>)> = dom_sigs.iter().chain(cod_sigs.iter()).collect();
        all.sort_unstable();
        all.dedup();
        let id_of = |s: &(u32, Vec<u32>)| all.binary_search(&s).unwrap() as u32;
        let old_classes = count_distinct(dom);
        let mut dom_counts = vec![0usize; all.len()];
        let mut cod_counts = vec![0usize; all.len()];
        for v in 0..n {
            let di = id_of(&dom_sigs[v]);
            let ci = id_of(&cod_sigs[v]);
            dom_counts[di as usize] += 1;
            cod_counts[ci as usize] += 1;
            dom[v] = di;
            cod[v] = ci;
        }
        if dom_counts != cod_counts {
            return false;
        }
        if count_distinct(dom) == old_classes {
            return true;
        }
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    let mut sorted: Vec<u32> = colors.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len()
}
