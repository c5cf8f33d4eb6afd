//! Exact brute-force computation of `pi_G(S)` and `pi_k(G)` for small
//! graphs.
//!
//! The pipeline is: enumerate every S-path of the graph (depth-first, with
//! a reachability prune), build the *compatibility graph* whose nodes are
//! the candidate paths and whose edges join internally disjoint pairs, and
//! find a maximum clique by branch and bound with a greedy-coloring upper
//! bound. The clique number equals `pi_G(S)`; minimizing over k-subsets
//! gives `pi_k(G)`.
//!
//! Everything is exact and deterministic: fixed vertex orderings, fixed
//! subset iteration order, and a node-count budget instead of wall-clock
//! cutoffs. Exceeding the budget is an error, never a truncated answer.
//! Results are identical across runs and thread counts; the parallel path
//! of [`pi_k_exact`] evaluates subsets independently and reduces in subset
//! order.
//!
//! Intended scale is graphs of up to roughly a dozen vertices. Vertex sets
//! are `u64` masks and path edge sets are `u128` masks, so the hard caps
//! are 64 vertices and 128 edges.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::path::{Path, SPathFamily};
use crate::value::{PiValue, Provenance};

/// Default unit budget per `pi_G(S)` evaluation. Sized so that full sweeps
/// over all bipartite graphs with `a + b <= 9` run comfortably, while
/// runaway instances fail fast instead of hanging.
pub const DEFAULT_MAX_NODES: u64 = 200_000_000;

/// Most edges a graph may have before the oracle refuses it.
pub const MAX_ORACLE_EDGES: usize = 128;

/// Deterministic work limit for one oracle evaluation.
///
/// Units are charged per enumeration step, per compatibility pair check and
/// per clique search node, so identical inputs always exhaust at the same
/// point. The optional wall-clock limit is off by default because it would
/// make behavior machine-dependent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
    #[serde(skip)]
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub fn nodes(max_nodes: u64) -> SearchBudget {
        SearchBudget {
            max_nodes,
            time_limit: None,
        }
    }
}

impl Default for SearchBudget {
    fn default() -> SearchBudget {
        SearchBudget::nodes(DEFAULT_MAX_NODES)
    }
}

/// Running charge counter for one evaluation.
struct Meter {
    spent: u64,
    max: u64,
    deadline: Option<Instant>,
    ticks: u32,
}

impl Meter {
    fn new(budget: &SearchBudget) -> Meter {
        Meter {
            spent: 0,
            max: budget.max_nodes,
            deadline: budget.time_limit.map(|d| Instant::now() + d),
            ticks: 0,
        }
    }

    #[inline]
    fn charge(&mut self, units: u64) -> Result<()> {
        self.spent += units;
        if self.spent > self.max {
            return Err(Error::BudgetExhausted { nodes: self.spent });
        }
        if let Some(deadline) = self.deadline {
            // Coarse check: the clock is only consulted every 4096 charges.
            self.ticks = self.ticks.wrapping_add(1);
            if self.ticks % 4096 == 0 && Instant::now() > deadline {
                return Err(Error::BudgetExhausted { nodes: self.spent });
            }
        }
        Ok(())
    }
}

fn mask_of(s: &BTreeSet<u32>) -> u64 {
    s.iter().fold(0u64, |m, &v| m | 1 << v)
}

fn check_s(g: &Graph, s: &BTreeSet<u32>) -> Result<()> {
    if s.len() < 2 {
        return Err(Error::invalid("S needs at least two vertices"));
    }
    if let Some(&v) = s.iter().find(|&&v| !g.contains_vertex(v)) {
        return Err(Error::invalid(format!("S contains out-of-range id {v}")));
    }
    Ok(())
}

/// Enumerates every S-path of `g`: every simple path whose vertex set
/// contains `s`, each exactly once up to reversal, in canonical orientation
/// and deterministic order.
pub fn enumerate_s_paths(g: &Graph, s: &BTreeSet<u32>, budget: &SearchBudget) -> Result<Vec<Path>> {
    let mut meter = Meter::new(budget);
    enumerate_with_meter(g, s, &mut meter)
}

fn enumerate_with_meter(g: &Graph, s: &BTreeSet<u32>, meter: &mut Meter) -> Result<Vec<Path>> {
    check_s(g, s)?;
    let s_mask = mask_of(s);
    let mut out = Vec::new();
    let mut seq: Vec<u32> = Vec::with_capacity(g.n());
    for start in 0..g.n() as u32 {
        if !can_still_cover(g, s_mask, start, 1 << start) {
            continue;
        }
        seq.push(start);
        extend(g, s_mask, start, 1 << start, &mut seq, &mut out, meter)?;
        seq.pop();
    }
    Ok(out)
}

/// Depth-first extension at the head of the current directed path. Emits
/// when all of S is covered and the tail id is smaller than the head id,
/// which deduplicates the two orientations.
fn extend(
    g: &Graph,
    s_mask: u64,
    head: u32,
    visited: u64,
    seq: &mut Vec<u32>,
    out: &mut Vec<Path>,
    meter: &mut Meter,
) -> Result<()> {
    meter.charge(1)?;
    if visited & s_mask == s_mask && seq[0] < head {
        out.push(Path::new(seq.clone()).expect("vertices distinct by construction"));
    }
    let mut candidates = g.adj_mask(head) & !visited;
    while candidates != 0 {
        let v = candidates.trailing_zeros();
        candidates &= candidates - 1;
        let now_visited = visited | 1 << v;
        // Prune: every still-missing S vertex must be reachable from the new
        // head through unvisited vertices.
        if can_still_cover(g, s_mask, v, now_visited) {
            seq.push(v);
            extend(g, s_mask, v, now_visited, seq, out, meter)?;
            seq.pop();
        }
    }
    Ok(())
}

fn can_still_cover(g: &Graph, s_mask: u64, head: u32, visited: u64) -> bool {
    let remaining = s_mask & !visited;
    if remaining == 0 {
        return true;
    }
    let avail = !visited;
    let mut reach = 1u64 << head;
    let mut frontier = reach;
    while frontier != 0 {
        let mut nbrs = 0u64;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros();
            f &= f - 1;
            nbrs |= g.adj_mask(v);
        }
        frontier = nbrs & avail & !reach;
        reach |= frontier;
    }
    remaining & !reach == 0
}

/// Candidate S-paths plus the symmetric, irreflexive relation
/// "internally disjoint with respect to S".
pub struct CompatibilityGraph {
    s: BTreeSet<u32>,
    paths: Vec<Path>,
    words: usize,
    adj: Vec<u64>,
}

impl CompatibilityGraph {
    /// Builds the relation by checking both disjointness clauses for every
    /// pair: edge masks must not intersect and vertex masks must intersect
    /// exactly in S.
    pub fn build(
        g: &Graph,
        s: &BTreeSet<u32>,
        paths: Vec<Path>,
        budget: &SearchBudget,
    ) -> Result<CompatibilityGraph> {
        let mut meter = Meter::new(budget);
        Self::build_with_meter(g, s, paths, &mut meter)
    }

    fn build_with_meter(
        g: &Graph,
        s: &BTreeSet<u32>,
        paths: Vec<Path>,
        meter: &mut Meter,
    ) -> Result<CompatibilityGraph> {
        check_s(g, s)?;
        let edge_bit = edge_indexer(g)?;
        let s_mask = mask_of(s);
        let n = paths.len();

        let mut vmasks = Vec::with_capacity(n);
        let mut emasks = Vec::with_capacity(n);
        for p in &paths {
            let mut vm = 0u64;
            for &v in p.vertices() {
                vm |= 1 << v;
            }
            let mut em = 0u128;
            for e in p.edges() {
                em |= 1u128 << edge_bit(e);
            }
            vmasks.push(vm);
            emasks.push(em);
        }

        // Charge the full pair count up front so oversized instances fail
        // before the adjacency matrix is allocated.
        let pairs = n as u64 * (n as u64).saturating_sub(1) / 2;
        meter.charge(pairs)?;

        let words = n.div_ceil(64).max(1);
        let mut adj = vec![0u64; n * words];
        for i in 0..n {
            for j in i + 1..n {
                if emasks[i] & emasks[j] == 0 && vmasks[i] & vmasks[j] == s_mask {
                    adj[i * words + j / 64] |= 1 << (j % 64);
                    adj[j * words + i / 64] |= 1 << (i % 64);
                }
            }
        }
        Ok(CompatibilityGraph {
            s: s.clone(),
            paths,
            words,
            adj,
        })
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.adj[i * self.words..(i + 1) * self.words]
    }

    fn degree(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    fn family(&self, members: &[usize]) -> SPathFamily {
        let mut paths: Vec<Path> = members.iter().map(|&i| self.paths[i].clone()).collect();
        paths.sort();
        SPathFamily::new(self.s.clone(), paths)
    }
}

/// Returns a closure mapping a normalized edge to its bit position.
fn edge_indexer(g: &Graph) -> Result<impl Fn((u32, u32)) -> u32 + '_> {
    if g.edge_count() > MAX_ORACLE_EDGES {
        return Err(Error::TooLarge(format!(
            "{} edges (exact search supports at most {MAX_ORACLE_EDGES})",
            g.edge_count()
        )));
    }
    let index: std::collections::BTreeMap<(u32, u32), u32> = g
        .edges()
        .enumerate()
        .map(|(i, e)| (e, i as u32))
        .collect();
    Ok(move |e: (u32, u32)| index[&e])
}

/// Word-block bitset helpers for the clique search.
fn bs_and_into(dst: &mut [u64], a: &[u64], b: &[u64]) {
    for ((d, &x), &y) in dst.iter_mut().zip(a).zip(b) {
        *d = x & y;
    }
}

fn bs_is_empty(a: &[u64]) -> bool {
    a.iter().all(|&w| w == 0)
}

fn bs_iter(a: &[u64]) -> impl Iterator<Item = usize> + '_ {
    a.iter().enumerate().flat_map(|(wi, &w)| {
        std::iter::successors(Some(w), |&w| Some(w & (w - 1)))
            .take_while(|&w| w != 0)
            .map(move |w| wi * 64 + w.trailing_zeros() as usize)
    })
}

/// Branch-and-bound maximum clique with a greedy-coloring bound.
///
/// Vertices are preordered by degree (descending, index tiebreak). Only
/// cliques strictly larger than `seed` are recorded: with `seed = 0` the
/// search is the plain exact maximum; a positive seed prunes the search and
/// returns `None` when the true maximum is `seed` or below.
struct CliqueSearch<'a> {
    cg: &'a CompatibilityGraph,
    order: Vec<usize>,
    radj: Vec<u64>,
    words: usize,
    best_size: usize,
    best: Option<Vec<usize>>,
}

impl<'a> CliqueSearch<'a> {
    fn new(cg: &'a CompatibilityGraph, seed: usize) -> CliqueSearch<'a> {
        let n = cg.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(cg.degree(i)), i));
        let mut pos_of = vec![0usize; n];
        for (pos, &orig) in order.iter().enumerate() {
            pos_of[orig] = pos;
        }
        let words = n.div_ceil(64).max(1);
        let mut radj = vec![0u64; n * words];
        for (pos, &orig) in order.iter().enumerate() {
            for j in bs_iter(cg.row(orig)) {
                let pj = pos_of[j];
                radj[pos * words + pj / 64] |= 1 << (pj % 64);
            }
        }
        CliqueSearch {
            cg,
            order,
            radj,
            words,
            best_size: seed,
            best: None,
        }
    }

    fn radj_row(&self, pos: usize) -> &[u64] {
        &self.radj[pos * self.words..(pos + 1) * self.words]
    }

    fn run(mut self, meter: &mut Meter) -> Result<Option<Vec<usize>>> {
        let n = self.cg.len();
        if n == 0 {
            return Ok(None);
        }
        let mut p = vec![u64::MAX; self.words];
        // Clear bits beyond n.
        let extra = self.words * 64 - n;
        if extra > 0 {
            *p.last_mut().unwrap() &= u64::MAX >> extra;
        }
        let mut r = Vec::new();
        self.expand(&mut p, &mut r, meter)?;
        Ok(self.best.map(|positions| {
            let mut members: Vec<usize> = positions.iter().map(|&p| self.order[p]).collect();
            members.sort_unstable();
            members
        }))
    }

    fn expand(&mut self, p: &mut [u64], r: &mut Vec<usize>, meter: &mut Meter) -> Result<()> {
        meter.charge(1)?;
        // Greedy coloring of P in position order; the class number of a
        // vertex bounds the largest clique containing it inside P.
        let mut classes: Vec<Vec<u64>> = Vec::new();
        let mut colored: Vec<(usize, usize)> = Vec::new(); // (pos, color), ascending color
        for v in bs_iter(p) {
            meter.charge(1)?;
            let row = &self.radj[v * self.words..(v + 1) * self.words];
            let c = classes
                .iter()
                .position(|class| class.iter().zip(row).all(|(&cw, &aw)| cw & aw == 0))
                .unwrap_or(classes.len());
            if c == classes.len() {
                classes.push(vec![0u64; self.words]);
            }
            classes[c][v / 64] |= 1 << (v % 64);
            colored.push((v, c + 1));
        }
        colored.sort_by_key(|&(v, c)| (c, v));

        let mut p_new = vec![0u64; self.words];
        for idx in (0..colored.len()).rev() {
            let (v, color) = colored[idx];
            if r.len() + color <= self.best_size {
                return Ok(());
            }
            r.push(v);
            bs_and_into(&mut p_new, p, self.radj_row(v));
            if bs_is_empty(&p_new) {
                if r.len() > self.best_size {
                    self.best_size = r.len();
                    self.best = Some(r.clone());
                }
            } else {
                let mut child = p_new.clone();
                self.expand(&mut child, r, meter)?;
            }
            r.pop();
            p[v / 64] &= !(1 << (v % 64));
        }
        Ok(())
    }
}

/// Exact `pi_G(S)` with a maximum witness family.
///
/// The witness always passes [`crate::path::validate_family`] and has
/// exactly `value` paths (possibly zero).
pub fn max_internally_disjoint(g: &Graph, s: &BTreeSet<u32>, budget: &SearchBudget) -> Result<PiValue> {
    let mut meter = Meter::new(budget);
    let paths = enumerate_with_meter(g, s, &mut meter)?;
    let cg = CompatibilityGraph::build_with_meter(g, s, paths, &mut meter)?;
    let clique = CliqueSearch::new(&cg, 0).run(&mut meter)?;
    let members = clique.unwrap_or_default();
    Ok(PiValue {
        value: members.len(),
        provenance: Provenance::Oracle,
        witness: Some(cg.family(&members)),
        argmin_s: Some(s.clone()),
    })
}

/// Exact `pi_G(S)` when it exceeds `floor`, `None` when it is `floor` or
/// less. Seeding the clique search with `floor` prunes branches that cannot
/// beat it; used by the verification sweep with `floor = formula - 1`.
pub fn max_internally_disjoint_above(
    g: &Graph,
    s: &BTreeSet<u32>,
    floor: usize,
    budget: &SearchBudget,
) -> Result<Option<usize>> {
    let mut meter = Meter::new(budget);
    let paths = enumerate_with_meter(g, s, &mut meter)?;
    let cg = CompatibilityGraph::build_with_meter(g, s, paths, &mut meter)?;
    let clique = CliqueSearch::new(&cg, floor).run(&mut meter)?;
    Ok(clique.map(|c| c.len()))
}

/// Finds some family of exactly `target` pairwise internally disjoint
/// S-paths by depth-first packing, stopping at the first hit. Used by the
/// witness builder's oracle fallback, where the closed form guarantees the
/// target is reachable.
pub fn find_disjoint_family(
    g: &Graph,
    s: &BTreeSet<u32>,
    target: usize,
    budget: &SearchBudget,
) -> Result<SPathFamily> {
    if target == 0 {
        check_s(g, s)?;
        return Ok(SPathFamily::new(s.clone(), Vec::new()));
    }
    let mut meter = Meter::new(budget);
    let paths = enumerate_with_meter(g, s, &mut meter)?;
    let edge_bit = edge_indexer(g)?;
    let s_mask = mask_of(s);
    let infos: Vec<(u64, u128)> = paths
        .iter()
        .map(|p| {
            let vm = p.vertices().iter().fold(0u64, |m, &v| m | 1 << v);
            let em = p.edges().fold(0u128, |m, e| m | 1u128 << edge_bit(e));
            (vm, em)
        })
        .collect();

    let mut chosen: Vec<usize> = Vec::new();
    if pack(&infos, s_mask, target, 0, &mut chosen, &mut meter)? {
        let members: Vec<Path> = chosen.iter().map(|&i| paths[i].clone()).collect();
        Ok(SPathFamily::new(s.clone(), members))
    } else {
        Err(Error::WitnessSearchFailed { target })
    }
}

fn pack(
    infos: &[(u64, u128)],
    s_mask: u64,
    target: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    meter: &mut Meter,
) -> Result<bool> {
    if chosen.len() == target {
        return Ok(true);
    }
    for i in start..infos.len() {
        meter.charge(1)?;
        let (vi, ei) = infos[i];
        let ok = chosen.iter().all(|&j| {
            let (vj, ej) = infos[j];
            ei & ej == 0 && vi & vj == s_mask
        });
        if ok {
            chosen.push(i);
            if pack(infos, s_mask, target, i + 1, chosen, meter)? {
                return Ok(true);
            }
            chosen.pop();
        }
    }
    Ok(false)
}

/// Exact `pi_k(G)`: the minimum of `pi_G(S)` over the supplied k-subsets
/// (default: all of them, in lexicographic order).
///
/// The budget applies to each subset evaluation independently, which keeps
/// parallel and sequential runs identical. The reported `argmin_s` and
/// witness come from the first subset attaining the minimum, in iteration
/// order, regardless of `parallel`.
pub fn pi_k_exact(
    g: &Graph,
    k: usize,
    budget: &SearchBudget,
    subsets: Option<&[BTreeSet<u32>]>,
    parallel: bool,
) -> Result<PiValue> {
    if k < 2 || k > g.n() {
        return Err(Error::invalid(format!(
            "k must satisfy 2 <= k <= n; got k={k}, n={}",
            g.n()
        )));
    }
    let own: Vec<BTreeSet<u32>>;
    let subsets: &[BTreeSet<u32>] = match subsets {
        Some(s) => s,
        None => {
            own = (0..g.n() as u32)
                .combinations(k)
                .map(|c| c.into_iter().collect())
                .collect();
            &own
        }
    };
    if subsets.is_empty() {
        return Err(Error::invalid("no subsets to evaluate"));
    }

    let eval = |s: &BTreeSet<u32>| max_internally_disjoint(g, s, budget);
    let results: Vec<Result<PiValue>> = if parallel {
        subsets.par_iter().map(eval).collect()
    } else {
        subsets.iter().map(eval).collect()
    };

    let mut best: Option<PiValue> = None;
    for r in results {
        let v = r?;
        match &best {
            Some(b) if b.value <= v.value => {}
            _ => best = Some(v),
        }
    }
    Ok(best.expect("at least one subset"))
}

/// One representative k-subset per orbit of the part-preserving symmetries
/// of `K_{a,b}`: for each split `(s_x, s_y)` with `s_x + s_y = k`, the set
/// `{x_1..x_sx} ∪ {y_1..y_sy}`, in ascending `s_x` order.
///
/// Feeding these to [`pi_k_exact`] yields the same minimum as the full
/// subset sweep, because `pi_G(S)` is invariant under relabeling within
/// parts.
pub fn bipartite_subset_classes(a: usize, b: usize, k: usize) -> Vec<BTreeSet<u32>> {
    let mut reps = Vec::new();
    for sx in 0..=k.min(a) {
        let sy = k - sx;
        if sy > b {
            continue;
        }
        let rep: BTreeSet<u32> = (0..sx as u32)
            .chain(a as u32..(a + sy) as u32)
            .collect();
        reps.push(rep);
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_complete_bipartite};
    use crate::path::validate_family;

    fn set(ids: &[u32]) -> BTreeSet<u32> {
        ids.iter().copied().collect()
    }

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn path_graph_has_single_s_path() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let paths = enumerate_s_paths(&g, &set(&[0, 2]), &budget()).unwrap();
        assert_eq!(paths, vec![Path::new(vec![0, 1, 2]).unwrap()]);
    }

    #[test]
    fn cycle_s_paths_include_spanning_ones() {
        // C_4 with antipodal S: the two arcs plus the four spanning paths
        // all contain S, so the enumeration yields six S-paths in total.
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let paths = enumerate_s_paths(&g, &set(&[0, 2]), &budget()).unwrap();
        assert_eq!(paths.len(), 6);
        let arcs = [
            Path::new(vec![0, 1, 2]).unwrap(),
            Path::new(vec![0, 3, 2]).unwrap(),
        ];
        for arc in &arcs {
            assert!(paths.contains(arc));
        }
        // Still only two of them fit in one internally disjoint family.
        let v = max_internally_disjoint(&g, &set(&[0, 2]), &budget()).unwrap();
        assert_eq!(v.value, 2);
        let fam = v.witness.unwrap();
        assert!(validate_family(&g, &fam).unwrap().is_ok());
        assert_eq!(fam.paths, arcs);
    }

    #[test]
    fn k33_enumeration_count_is_frozen() {
        // 12 five-vertex paths (3! x-orders, 2 y-sets through y1, 2 y-orders,
        // halved for reversal) plus all 36 spanning paths.
        let (g, lab) = make_complete_bipartite(3, 3).unwrap();
        let s = set(&[lab.x(1), lab.x(2), lab.x(3), lab.y(1)]);
        let paths = enumerate_s_paths(&g, &s, &budget()).unwrap();
        assert_eq!(paths.len(), 48);
    }

    #[test]
    fn enumeration_is_deterministic_and_canonical() {
        let (g, lab) = make_complete_bipartite(3, 3).unwrap();
        let s = set(&[lab.x(1), lab.y(1)]);
        let a = enumerate_s_paths(&g, &s, &budget()).unwrap();
        let b = enumerate_s_paths(&g, &s, &budget()).unwrap();
        assert_eq!(a, b);
        for p in &a {
            assert!(p.vertices().first() <= p.vertices().last());
        }
        let unique: BTreeSet<_> = a.iter().cloned().collect();
        assert_eq!(unique.len(), a.len());
    }

    #[test]
    fn compatibility_relation_is_symmetric_and_irreflexive() {
        let (g, lab) = make_complete_bipartite(2, 2).unwrap();
        let s = set(&[lab.x(1), lab.y(1)]);
        let paths = enumerate_s_paths(&g, &s, &budget()).unwrap();
        let cg = CompatibilityGraph::build(&g, &s, paths, &budget()).unwrap();
        for i in 0..cg.len() {
            assert!(!cg.adjacent(i, i));
            for j in 0..cg.len() {
                assert_eq!(cg.adjacent(i, j), cg.adjacent(j, i));
            }
        }
    }

    #[test]
    fn k33_pinned_set_has_one_disjoint_path() {
        let (g, lab) = make_complete_bipartite(3, 3).unwrap();
        let s = set(&[lab.x(1), lab.x(2), lab.x(3), lab.y(1)]);
        let v = max_internally_disjoint(&g, &s, &budget()).unwrap();
        assert_eq!(v.value, 1);
    }

    #[test]
    fn k11_has_one_path() {
        let (g, _) = make_complete_bipartite(1, 1).unwrap();
        let v = max_internally_disjoint(&g, &set(&[0, 1]), &budget()).unwrap();
        assert_eq!(v.value, 1);
    }

    #[test]
    fn k44_x_plus_two_ys_gives_two() {
        let (g, lab) = make_complete_bipartite(4, 4).unwrap();
        let s = set(&[lab.x(1), lab.x(2), lab.x(3), lab.x(4), lab.y(1), lab.y(2)]);
        let v = max_internally_disjoint(&g, &s, &budget()).unwrap();
        assert_eq!(v.value, 2);
        let fam = v.witness.unwrap();
        assert_eq!(fam.len(), 2);
        assert!(validate_family(&g, &fam).unwrap().is_ok());
    }

    #[test]
    fn pi_k_examples() {
        let (g, _) = make_complete_bipartite(3, 3).unwrap();
        assert_eq!(pi_k_exact(&g, 4, &budget(), None, false).unwrap().value, 1);

        let (g, _) = make_complete_bipartite(2, 4).unwrap();
        assert_eq!(pi_k_exact(&g, 4, &budget(), None, false).unwrap().value, 0);

        let g = make_complete(4).unwrap();
        assert_eq!(pi_k_exact(&g, 2, &budget(), None, false).unwrap().value, 3);
    }

    #[test]
    fn pi_k_argmin_is_first_minimizer_in_subset_order() {
        // For K_{4,4} with k = 5 the very first subset in lexicographic
        // order, X plus y1, already attains the minimum value 1.
        let (g, _) = make_complete_bipartite(4, 4).unwrap();
        let v = pi_k_exact(&g, 5, &budget(), None, false).unwrap();
        assert_eq!(v.value, 1);
        assert_eq!(v.argmin_s.unwrap(), set(&[0, 1, 2, 3, 4]));
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let (g, _) = make_complete_bipartite(3, 3).unwrap();
        for k in 2..=6 {
            let seq = pi_k_exact(&g, k, &budget(), None, false).unwrap();
            let par = pi_k_exact(&g, k, &budget(), None, true).unwrap();
            assert_eq!(seq, par, "k={k}");
        }
    }

    #[test]
    fn orbit_class_examples() {
        assert_eq!(bipartite_subset_classes(3, 3, 4).len(), 3);
        assert_eq!(bipartite_subset_classes(4, 4, 6).len(), 3);
        assert_eq!(bipartite_subset_classes(2, 5, 7).len(), 1);
        let reps = bipartite_subset_classes(3, 3, 4);
        assert_eq!(reps[0], set(&[0, 3, 4, 5]));
        assert_eq!(reps[1], set(&[0, 1, 3, 4]));
        assert_eq!(reps[2], set(&[0, 1, 2, 3]));
    }

    #[test]
    fn seeded_search_matches_exact() {
        let (g, lab) = make_complete_bipartite(3, 3).unwrap();
        let s = set(&[lab.x(1), lab.x(2), lab.y(1)]);
        let exact = max_internally_disjoint(&g, &s, &budget()).unwrap().value;
        assert_eq!(
            max_internally_disjoint_above(&g, &s, exact - 1, &budget()).unwrap(),
            Some(exact)
        );
        assert_eq!(
            max_internally_disjoint_above(&g, &s, exact, &budget()).unwrap(),
            None
        );
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let (g, _) = make_complete_bipartite(3, 3).unwrap();
        let tiny = SearchBudget::nodes(10);
        match enumerate_s_paths(&g, &set(&[0, 3]), &tiny) {
            Err(Error::BudgetExhausted { .. }) => {}
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn find_disjoint_family_packs_kappa_many_paths() {
        let (g, lab) = make_complete_bipartite(3, 3).unwrap();
        let s = set(&[lab.x(1), lab.y(1)]);
        let fam = find_disjoint_family(&g, &s, 3, &budget()).unwrap();
        assert_eq!(fam.len(), 3);
        assert!(validate_family(&g, &fam).unwrap().is_ok());
    }

    #[test]
    fn find_disjoint_family_fails_honestly_above_maximum() {
        let (g, _) = make_complete_bipartite(1, 1).unwrap();
        match find_disjoint_family(&g, &set(&[0, 1]), 2, &budget()) {
            Err(Error::WitnessSearchFailed { target: 2 }) => {}
            other => panic!("expected witness search failure, got {other:?}"),
        }
    }

    #[test]
    fn witness_matches_value_and_validates() {
        let (g, _) = make_complete_bipartite(2, 3).unwrap();
        for k in 2..=5 {
            let v = pi_k_exact(&g, k, &budget(), None, false).unwrap();
            let fam = v.witness.unwrap();
            assert_eq!(fam.len(), v.value);
            assert!(validate_family(&g, &fam).unwrap().is_ok());
            assert_eq!(&fam.s, &v.argmin_s.unwrap());
        }
    }
}
