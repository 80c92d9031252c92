//! Exact maximum-independent-set computation and enumeration.
//!
//! The kernel is a bitset branch-and-bound: branch on a maximum-degree
//! vertex of the residual candidate set (include/exclude, ties to the
//! lowest index), pruned by a greedy clique-cover upper bound and by a
//! table of exact suffix independence numbers built in vertex order.
//! Residual graphs that fall apart are solved per connected component.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::{words_for, VertexSet};
use crate::env::Env;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The outcome of maximum-independent-set enumeration.
#[derive(Debug, Clone)]
pub struct MisResult {
    pub alpha: usize,
    /// All maximum independent sets in canonical ascending order;
    /// meaningful only when `complete` is true.
    pub sets: Vec<VertexSet>,
    pub complete: bool,
}

/// Exact independence number.
pub fn alpha(g: &Graph, env: &Env) -> Result<usize> {
    Kernel::new(g, env)?.alpha()
}

/// All maximum independent sets. A hit on the set cap is reported through
/// `complete = false`, never as a truncated list passed off as exhaustive.
pub fn enumerate_mis(g: &Graph, env: &Env) -> Result<MisResult> {
    let mut kernel = Kernel::new(g, env)?;
    let alpha = kernel.alpha()?;
    let full: Vec<u64> = full_words(g.n());
    match kernel.enum_exact(&full, alpha) {
        Ok(mut raw) => {
            let mut sets: Vec<VertexSet> = raw
                .drain(..)
                .map(|w| VertexSet::from_words(g.n(), w))
                .collect();
            sets.sort();
            sets.dedup();
            Ok(MisResult { alpha, sets, complete: true })
        }
        Err(Error::CapExceeded { .. }) => Ok(MisResult { alpha, sets: Vec::new(), complete: false }),
        Err(e) => Err(e),
    }
}

/// Per-vertex count r(v) = #{S in I(G) : v in S}.
pub fn mis_membership_counts(g: &Graph, result: &MisResult) -> Result<Vec<usize>> {
    if !result.complete {
        return Err(Error::IncompleteEnumeration);
    }
    let mut counts = vec![0usize; g.n()];
    for s in &result.sets {
        for v in s.iter() {
            counts[v] += 1;
        }
    }
    Ok(counts)
}

/// Streams every nonempty subset of an independent set `s` (all of them are
/// independent) to the callback, in ascending bitmask order over the
/// elements of `s`. Stops early if the callback returns false.
pub fn for_each_independent_subset<F: FnMut(&VertexSet) -> bool>(
    g: &Graph,
    s: &VertexSet,
    env: &Env,
    mut f: F,
) -> Result<()> {
    debug_assert!(g.is_independent(s), "subset enumeration requires an independent base set");
    let elems: Vec<usize> = s.iter().collect();
    let k = elems.len();
    if k == 0 {
        return Ok(());
    }
    let total: u64 = if k >= 64 { u64::MAX } else { (1u64 << k) - 1 };
    if total > env.max_subsets {
        return Err(Error::CapExceeded { cap: env.max_subsets as usize });
    }
    for mask in 1..=total {
        let subset =
            VertexSet::from_vertices(g.n(), elems.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v));
        if !f(&subset) {
            break;
        }
    }
    Ok(())
}

fn full_words(n: usize) -> Vec<u64> {
    let mut w = vec![u64::MAX; words_for(n)];
    let rem = n % 64;
    if rem != 0 {
        if let Some(last) = w.last_mut() {
            *last = (1u64 << rem) - 1;
        }
    }
    if n == 0 {
        w.clear();
    }
    w
}

#[inline]
fn popcount(ws: &[u64]) -> usize {
    ws.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline]
fn min_bit(ws: &[u64]) -> Option<usize> {
    for (i, &w) in ws.iter().enumerate() {
        if w != 0 {
            return Some(i * 64 + w.trailing_zeros() as usize);
        }
    }
    None
}

#[inline]
fn clear_bit(ws: &mut [u64], v: usize) {
    ws[v >> 6] &= !(1u64 << (v & 63));
}

#[inline]
fn set_bit(ws: &mut [u64], v: usize) {
    ws[v >> 6] |= 1u64 << (v & 63);
}

#[inline]
fn and_assign(a: &mut [u64], b: &[u64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x &= y;
    }
}

#[inline]
fn and_not_assign(a: &mut [u64], b: &[u64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x &= !y;
    }
}

#[inline]
fn intersection_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

struct Kernel<'a> {
    g: &'a Graph,
    env: &'a Env<'a>,
    /// suffix_alpha[i] = alpha of the subgraph induced by {i, .., n-1};
    /// filled lazily from the back by `alpha`.
    suffix_alpha: Vec<usize>,
    nodes: u64,
}

impl<'a> Kernel<'a> {
    fn new(g: &'a Graph, env: &'a Env<'a>) -> Result<Kernel<'a>> {
        if env.budget.is_exceeded() {
            return Err(Error::Timeout);
        }
        Ok(Kernel { g, env, suffix_alpha: Vec::new(), nodes: 0 })
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1 << 14) && self.env.budget.is_exceeded() {
            return Err(Error::Timeout);
        }
        Ok(())
    }

    /// Builds the suffix table and returns alpha(G) = suffix_alpha[0].
    fn alpha(&mut self) -> Result<usize> {
        let n = self.g.n();
        if !self.suffix_alpha.is_empty() {
            return Ok(self.suffix_alpha[0]);
        }
        let mut c = vec![0usize; n + 1];
        self.suffix_alpha = vec![usize::MAX; n + 1];
        self.suffix_alpha[n] = 0;
        for i in (0..n).rev() {
            // Does {i..n-1} contain an independent set of size c[i+1] + 1
            // through vertex i?
            let mut cand = full_words(n);
            for v in 0..=i {
                clear_bit(&mut cand, v);
            }
            and_not_assign(&mut cand, self.g.row(i));
            c[i] = if self.find_is(&cand, c[i + 1])? { c[i + 1] + 1 } else { c[i + 1] };
            self.suffix_alpha[i] = c[i];
        }
        self.suffix_alpha = c;
        Ok(self.suffix_alpha[0])
    }

    /// Upper bound on the independence number of the candidate set:
    /// greedy clique cover, capped by the suffix table when available.
    fn bound(&self, cand: &[u64]) -> usize {
        let mut ub = popcount(cand);
        if let Some(v) = min_bit(cand) {
            if let Some(&sa) = self.suffix_alpha.get(v) {
                if sa != usize::MAX {
                    ub = ub.min(sa);
                }
            }
        } else {
            return 0;
        }
        ub.min(self.clique_cover(cand))
    }

    fn clique_cover(&self, cand: &[u64]) -> usize {
        let mut uncovered = cand.to_vec();
        let mut count = 0usize;
        while let Some(v) = min_bit(&uncovered) {
            clear_bit(&mut uncovered, v);
            let mut common = self.g.row(v).to_vec();
            and_assign(&mut common, &uncovered);
            while let Some(u) = min_bit(&common) {
                clear_bit(&mut uncovered, u);
                and_assign(&mut common, self.g.row(u));
                and_assign(&mut common, &uncovered);
            }
            count += 1;
        }
        count
    }

    /// Maximum-degree vertex within the candidate set, ties to lowest index.
    fn branch_vertex(&self, cand: &[u64]) -> (usize, usize) {
        let mut best = usize::MAX;
        let mut best_deg = 0usize;
        let mut rest = cand.to_vec();
        while let Some(v) = min_bit(&rest) {
            clear_bit(&mut rest, v);
            let deg = intersection_count(self.g.row(v), cand);
            if best == usize::MAX || deg > best_deg {
                best = v;
                best_deg = deg;
            }
        }
        (best, best_deg)
    }

    /// True iff `cand` contains an independent set of size >= `target`.
    fn find_is(&mut self, cand: &[u64], target: usize) -> Result<bool> {
        if target == 0 {
            return Ok(true);
        }
        self.tick()?;
        if self.bound(cand) < target {
            return Ok(false);
        }
        let (v, deg) = self.branch_vertex(cand);
        if deg == 0 {
            // Edgeless residual: every vertex can be taken.
            return Ok(popcount(cand) >= target);
        }
        // Include v.
        let mut inc = cand.to_vec();
        and_not_assign(&mut inc, self.g.row(v));
        clear_bit(&mut inc, v);
        if self.find_is(&inc, target - 1)? {
            return Ok(true);
        }
        // Exclude v.
        let mut exc = cand.to_vec();
        clear_bit(&mut exc, v);
        self.find_is(&exc, target)
    }

    /// Connected components of the subgraph induced by `cand`.
    fn components(&self, cand: &[u64]) -> Vec<Vec<u64>> {
        let mut remaining = cand.to_vec();
        let mut comps = Vec::new();
        while let Some(start) = min_bit(&remaining) {
            let mut comp = vec![0u64; remaining.len()];
            set_bit(&mut comp, start);
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                let mut nb = self.g.row(u).to_vec();
                and_assign(&mut nb, cand);
                and_not_assign(&mut nb, &comp);
                while let Some(w) = min_bit(&nb) {
                    clear_bit(&mut nb, w);
                    set_bit(&mut comp, w);
                    queue.push(w);
                }
            }
            and_not_assign(&mut remaining, &comp);
            comps.push(comp);
        }
        comps
    }

    /// All independent subsets of `cand` of size exactly `need`.
    fn enum_exact(&mut self, cand: &[u64], need: usize) -> Result<Vec<Vec<u64>>> {
        if need == 0 {
            return Ok(vec![vec![0u64; cand.len()]]);
        }
        self.tick()?;
        if self.bound(cand) < need {
            return Ok(Vec::new());
        }
        let comps = self.components(cand);
        if comps.len() > 1 {
            return self.enum_split(&comps, need);
        }
        let (v, deg) = self.branch_vertex(cand);
        if deg == 0 {
            return self.enum_edgeless(cand, need);
        }
        // Exclude v.
        let mut exc = cand.to_vec();
        clear_bit(&mut exc, v);
        let mut out = self.enum_exact(&exc, need)?;
        // Include v.
        let mut inc = cand.to_vec();
        and_not_assign(&mut inc, self.g.row(v));
        clear_bit(&mut inc, v);
        for mut s in self.enum_exact(&inc, need - 1)? {
            set_bit(&mut s, v);
            out.push(s);
        }
        self.check_cap(out.len())?;
        Ok(out)
    }

    /// Combinations of an edgeless candidate set.
    fn enum_edgeless(&mut self, cand: &[u64], need: usize) -> Result<Vec<Vec<u64>>> {
        let elems: Vec<usize> = iter_bits(cand).collect();
        if elems.len() < need {
            return Ok(Vec::new());
        }
        let mut out: Vec<Vec<u64>> = Vec::new();
        let mut choice: Vec<usize> = (0..need).collect();
        loop {
            let mut s = vec![0u64; cand.len()];
            for &i in &choice {
                set_bit(&mut s, elems[i]);
            }
            out.push(s);
            self.check_cap(out.len())?;
            // Next combination in ascending index order.
            let mut pos = need;
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                if choice[pos] != elems.len() - need + pos {
                    break;
                }
            }
            choice[pos] += 1;
            for j in pos + 1..need {
                choice[j] = choice[j - 1] + 1;
            }
        }
    }

    /// Distributes `need` over the connected components and combines the
    /// per-component solutions.
    fn enum_split(&mut self, comps: &[Vec<u64>], need: usize) -> Result<Vec<Vec<u64>>> {
        let ubs: Vec<usize> = comps.iter().map(|c| self.bound(c)).collect();
        let suffix_ub: Vec<usize> = {
            let mut s = vec![0usize; comps.len() + 1];
            for i in (0..comps.len()).rev() {
                s[i] = s[i + 1] + ubs[i];
            }
            s
        };
        let words = comps[0].len();
        let mut cache: Vec<BTreeMap<usize, Vec<Vec<u64>>>> = vec![BTreeMap::new(); comps.len()];
        let mut out: Vec<Vec<u64>> = Vec::new();
        let mut partial: Vec<u64> = vec![0u64; words];
        self.split_rec(comps, &ubs, &suffix_ub, 0, need, &mut partial, &mut cache, &mut out)?;
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn split_rec(
        &mut self,
        comps: &[Vec<u64>],
        ubs: &[usize],
        suffix_ub: &[usize],
        idx: usize,
        need: usize,
        partial: &mut Vec<u64>,
        cache: &mut Vec<BTreeMap<usize, Vec<Vec<u64>>>>,
        out: &mut Vec<Vec<u64>>,
    ) -> Result<()> {
        if idx == comps.len() {
            if need == 0 {
                out.push(partial.clone());
                self.check_cap(out.len())?;
            }
            return Ok(());
        }
        let hi = ubs[idx].min(need);
        let lo = need.saturating_sub(suffix_ub[idx + 1]);
        for s in lo..=hi {
            if !cache[idx].contains_key(&s) {
                let sols = self.enum_exact(&comps[idx], s)?;
                cache[idx].insert(s, sols);
            }
            let sols = cache[idx].get(&s).cloned().unwrap_or_default();
            for sol in &sols {
                for (a, b) in partial.iter_mut().zip(sol) {
                    *a |= b;
                }
                self.split_rec(comps, ubs, suffix_ub, idx + 1, need - s, partial, cache, out)?;
                for (a, b) in partial.iter_mut().zip(sol) {
                    *a &= !b;
                }
            }
        }
        Ok(())
    }

    fn check_cap(&self, len: usize) -> Result<()> {
        if len > self.env.max_sets {
            return Err(Error::CapExceeded { cap: self.env.max_sets });
        }
        Ok(())
    }
}

fn iter_bits(ws: &[u64]) -> impl Iterator<Item = usize> + '_ {
    ws.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        core::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * 64 + b)
        })
    })
}
