//! Exhaustive computation of `c2(n, F)` for small `n`, and a randomized
//! spot check of the upper bound for larger `n`.
//!
//! `c2(n, F)` is the largest minimum codegree of an `n`-vertex 3-graph with a
//! vertex in no copy of `F`. By symmetry that vertex can be taken to be 0, so
//! the search asks, for increasing targets `t`, whether some 3-graph has all
//! codegrees at least `t` while 0 stays uncovered. The first infeasible
//! target ends the search.
//!
//! The feasibility search decides triples in lexicographic order, so the
//! triples through 0 (the link of 0) come first. Completed links are reduced
//! to one representative per isomorphism class (relabelings fixing 0) before
//! the remaining triples are searched. Two prunes apply throughout:
//! a triple is only added if no `t`-set through 0 then contains a copy of
//! `F`, and a triple is only left out if every pair it contains can still
//! reach codegree `t` from the undecided triples.

use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cover::{covered_at, first_uncovered};
use crate::error::{invalid, Result};
use crate::pattern::{all_triples, Pattern};
use crate::trigraph::TriGraph;

/// Largest `n` the bitmask representation supports (`C(10, 3) = 120` triples).
pub const MAX_SEARCH_N: usize = 10;
/// Default cap on `n` for [`exact_c2`].
pub const DEFAULT_HARD_CAP: usize = 8;
/// Largest `n` for the unpruned enumeration (`2^20` 3-graphs).
pub const MAX_NAIVE_N: usize = 6;
/// Largest `n` accepted by [`certify_upper_behavior`].
pub const MAX_SPOT_CHECK_N: usize = 12;
pub const DEFAULT_SEED: u64 = 0x5eed_c0de;

/// Limits and switches for [`exact_c2`].
#[derive(Clone, Debug)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
    pub threads: usize,
    /// With `false`, every 3-graph on `n` vertices is enumerated directly.
    pub prune: bool,
    pub hard_cap: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_nodes: None,
            max_time: None,
            threads: 1,
            prune: true,
            hard_cap: DEFAULT_HARD_CAP,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchResult {
    pub n: usize,
    pub pattern: String,
    /// Best minimum codegree found with vertex 0 uncovered; equals `c2(n, F)`
    /// when `exhaustive`.
    pub value: usize,
    #[serde(serialize_with = "serialize_witness")]
    pub witness: TriGraph,
    pub exhaustive: bool,
    pub nodes_explored: u64,
    /// Number of non-isomorphic links of 0 examined at the last target.
    pub link_classes: usize,
    #[serde(serialize_with = "serialize_duration")]
    pub elapsed: Duration,
}

fn serialize_witness<S: serde::Serializer>(h: &TriGraph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&crate::format::write_trigraph(h))
}

fn serialize_duration<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

type Mask = u128;

/// Shared search bookkeeping: node count, deadline, abort flag.
struct Meter {
    nodes: AtomicU64,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    aborted: AtomicBool,
}

impl Meter {
    /// Counts one node; false once the budget is spent.
    fn tick(&self) -> bool {
        if self.aborted.load(Ordering::Relaxed) {
            return false;
        }
        let count = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over_nodes = self.max_nodes.is_some_and(|m| count > m);
        let over_time = count.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d);
        if over_nodes || over_time {
            self.aborted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }
}

/// Precomputed index tables for one `(n, F)`.
struct Tables {
    n: usize,
    triples: Vec<[usize; 3]>,
    /// Pair indices of each triple.
    tri_pairs: Vec<[usize; 3]>,
    pair_count: usize,
    /// Number of triples containing vertex 0; they come first.
    link_len: usize,
    /// For each triple, the masks of copies of F through 0 that use it.
    copies_with: Vec<Vec<Mask>>,
}

fn pair_index(n: usize, a: usize, b: usize) -> usize {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    a * n - a * (a + 1) / 2 + (b - a - 1)
}

impl Tables {
    fn new(n: usize, f: &Pattern) -> Self {
        let triples = all_triples(n);
        let index_of = |e: [usize; 3]| triples.binary_search(&e).expect("sorted triple");
        let tri_pairs = triples
            .iter()
            .map(|&[a, b, c]| [pair_index(n, a, b), pair_index(n, a, c), pair_index(n, b, c)])
            .collect();
        let link_len = (n - 1) * (n - 2) / 2;

        // Local copies of F on a t-set: edge masks over the C(t,3) local triples.
        let t = f.t();
        let local = all_triples(t);
        let mut local_copies: Vec<u64> = Vec::new();
        for perm in permutations(t) {
            let mut mask = 0u64;
            for &[a, b, c] in f.edges() {
                let mut e = [perm[a], perm[b], perm[c]];
                e.sort_unstable();
                mask |= 1 << local.binary_search(&e).expect("local triple");
            }
            local_copies.push(mask);
        }
        local_copies.sort_unstable();
        local_copies.dedup();

        let mut copies_with = vec![Vec::new(); triples.len()];
        for rest in all_subsets(n - 1, t - 1) {
            let set: Vec<usize> = std::iter::once(0).chain(rest.iter().map(|&v| v + 1)).collect();
            let global: Vec<usize> = local
                .iter()
                .map(|&[a, b, c]| index_of([set[a], set[b], set[c]]))
                .collect();
            for &lm in &local_copies {
                let mut gm: Mask = 0;
                for (i, &g) in global.iter().enumerate() {
                    if lm >> i & 1 == 1 {
                        gm |= 1 << g;
                    }
                }
                for (i, &g) in global.iter().enumerate() {
                    if lm >> i & 1 == 1 {
                        copies_with[g].push(gm);
                    }
                }
            }
        }

        Self {
            n,
            pair_count: n * (n - 1) / 2,
            triples,
            tri_pairs,
            link_len,
            copies_with,
        }
    }

    /// Whether adding triple `e` to `present` completes a copy of F through 0.
    #[inline]
    fn completes_copy(&self, present: Mask, e: usize) -> bool {
        let with = present | 1 << e;
        self.copies_with[e].iter().any(|&c| c & !with == 0)
    }

    /// Canonical form of the link of 0 encoded in the low `link_len` bits:
    /// the smallest pair mask over relabelings of `1..n` that list vertices
    /// by a degree-based invariant.
    fn canonical_link(&self, present: Mask) -> u64 {
        let k = self.n - 1;
        let mut adj = vec![0u16; k];
        let mut idx = 0;
        for a in 0..k {
            for b in a + 1..k {
                if present >> idx & 1 == 1 {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
                idx += 1;
            }
        }
        let deg: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
        let key: Vec<(u32, Vec<u32>)> = (0..k)
            .map(|v| {
                let mut nd: Vec<u32> = (0..k).filter(|&u| adj[v] >> u & 1 == 1).map(|u| deg[u]).collect();
                nd.sort_unstable();
                (deg[v], nd)
            })
            .collect();
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by(|&a, &b| key[a].cmp(&key[b]));
        // Cells of equal key; permutations act within cells only.
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for &v in &order {
            match cells.last_mut() {
                Some(cell) if key[cell[0]] == key[v] => cell.push(v),
                _ => cells.push(vec![v]),
            }
        }
        let mut best = u64::MAX;
        let mut label = vec![0usize; k];
        fill_cells(&cells, 0, 0, &mut label, &mut |label| {
            let mut mask = 0u64;
            for a in 0..k {
                let mut nb = adj[a];
                while nb != 0 {
                    let b = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    let (la, lb) = (label[a], label[b]);
                    if la < lb {
                        mask |= 1 << pair_index(k, la, lb);
                    }
                }
            }
            best = best.min(mask);
        });
        best
    }
}

/// Assigns labels `start..` to the vertices of `cells[ci..]` in every
/// within-cell order.
fn fill_cells<F: FnMut(&[usize])>(cells: &[Vec<usize>], ci: usize, start: usize, label: &mut [usize], visit: &mut F) {
    if ci == cells.len() {
        visit(label);
        return;
    }
    let cell = &cells[ci];
    for perm in permutations(cell.len()) {
        for (i, &p) in perm.iter().enumerate() {
            label[cell[i]] = start + p;
        }
        fill_cells(cells, ci + 1, start + cell.len(), label, visit);
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    heap_permute(k, &mut cur, &mut out);
    out.sort();
    out
}

fn heap_permute(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k - 1 {
        heap_permute(k - 1, cur, out);
        if k.is_multiple_of(2) {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
    heap_permute(k - 1, cur, out);
}

/// All `k`-subsets of `0..n`, lexicographic.
fn all_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Mutable state of one depth-first feasibility search.
struct State<'a> {
    tables: &'a Tables,
    target: u8,
    present: Mask,
    cur: Vec<u8>,
    avail: Vec<u8>,
    meter: &'a Meter,
}

enum Outcome {
    Found(Mask),
    Infeasible,
    Aborted,
}

impl<'a> State<'a> {
    fn new(tables: &'a Tables, target: usize, meter: &'a Meter) -> Self {
        let mut avail = vec![0u8; tables.pair_count];
        for tp in &tables.tri_pairs {
            for &p in tp {
                avail[p] += 1;
            }
        }
        Self {
            tables,
            target: target as u8,
            present: 0,
            cur: vec![0; tables.pair_count],
            avail,
            meter,
        }
    }

    /// State after fixing the link of 0 to `link` (bits of the first
    /// `link_len` triples).
    fn with_link(tables: &'a Tables, target: usize, meter: &'a Meter, link: Mask) -> Self {
        let mut s = Self::new(tables, target, meter);
        for e in 0..tables.link_len {
            for &p in &tables.tri_pairs[e] {
                s.avail[p] -= 1;
                if link >> e & 1 == 1 {
                    s.cur[p] += 1;
                }
            }
        }
        s.present = link;
        s
    }

    /// Explores triples `pos..end`; at `end`, calls `leaf` which decides
    /// whether to stop (true) or keep enumerating (false).
    fn dfs(&mut self, pos: usize, end: usize, leaf: &mut dyn FnMut(&Self) -> bool) -> Option<bool> {
        if !self.meter.tick() {
            return None;
        }
        if pos == end {
            return Some(leaf(self));
        }
        let pairs = self.tables.tri_pairs[pos];
        if !self.tables.completes_copy(self.present, pos) {
            self.present |= 1 << pos;
            for &p in &pairs {
                self.cur[p] += 1;
                self.avail[p] -= 1;
            }
            let r = self.dfs(pos + 1, end, leaf);
            for &p in &pairs {
                self.cur[p] -= 1;
                self.avail[p] += 1;
            }
            self.present &= !(1 << pos);
            if r != Some(false) {
                return r;
            }
        }
        for &p in &pairs {
            self.avail[p] -= 1;
        }
        let ok = pairs.iter().all(|&p| self.cur[p] + self.avail[p] >= self.target);
        let r = if ok { self.dfs(pos + 1, end, leaf) } else { Some(false) };
        for &p in &pairs {
            self.avail[p] += 1;
        }
        r
    }
}

/// Links of 0 admitting minimum codegree `target` and leaving 0 uncovered by
/// link triples alone, one per isomorphism class, in discovery order.
fn link_classes(tables: &Tables, target: usize, meter: &Meter) -> Option<Vec<Mask>> {
    let mut seen = HashSet::new();
    let mut reps = Vec::new();
    let mut state = State::new(tables, target, meter);
    let end = tables.link_len;
    let r = state.dfs(0, end, &mut |s: &State| {
        let link = s.present & ((1 << end) - 1);
        if seen.insert(tables.canonical_link(link)) {
            reps.push(link);
        }
        false
    });
    r.map(|_| reps)
}

fn complete_link(tables: &Tables, target: usize, meter: &Meter, link: Mask) -> Outcome {
    let mut state = State::with_link(tables, target, meter, link);
    let mut found = None;
    let r = state.dfs(tables.link_len, tables.triples.len(), &mut |s: &State| {
        found = Some(s.present);
        true
    });
    match (r, found) {
        (_, Some(mask)) => Outcome::Found(mask),
        (Some(_), None) => Outcome::Infeasible,
        (None, None) => Outcome::Aborted,
    }
}

/// Is there a 3-graph with minimum codegree >= `target` and vertex 0
/// uncovered? Returns the link-class count with the outcome.
fn feasible(tables: &Tables, target: usize, meter: &Meter, threads: usize) -> (Outcome, usize) {
    let Some(reps) = link_classes(tables, target, meter) else {
        return (Outcome::Aborted, 0);
    };
    let classes = reps.len();
    if threads <= 1 {
        for &link in &reps {
            match complete_link(tables, target, meter, link) {
                Outcome::Infeasible => continue,
                other => return (other, classes),
            }
        }
        return (Outcome::Infeasible, classes);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    // The first class in discovery order that resolves wins, so the witness
    // matches the single-threaded run.
    let first = pool.install(|| {
        reps.par_iter()
            .find_map_first(|&link| match complete_link(tables, target, meter, link) {
                Outcome::Infeasible => None,
                other => Some(other),
            })
    });
    (first.unwrap_or(Outcome::Infeasible), classes)
}

fn mask_to_trigraph(tables: &Tables, mask: Mask) -> TriGraph {
    let edges = (0..tables.triples.len())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| tables.triples[i]);
    TriGraph::new(tables.n, edges).expect("search produces simple 3-graphs")
}

/// Computes `c2(n, F)`, or a lower bound when the budget runs out.
pub fn exact_c2(n: usize, f: &Pattern, budget: &Budget) -> Result<SearchResult> {
    if f.edges().is_empty() {
        return invalid("pattern has no edges; every vertex is trivially covered");
    }
    if n < f.t() {
        return invalid(format!("n = {n} is smaller than the pattern ({} vertices)", f.t()));
    }
    if !budget.prune {
        return naive_c2(n, f);
    }
    let cap = budget.hard_cap.min(MAX_SEARCH_N);
    if n > cap {
        return invalid(format!("n = {n} exceeds the search cap {cap}"));
    }
    let start = Instant::now();
    let meter = Meter {
        nodes: AtomicU64::new(0),
        max_nodes: budget.max_nodes,
        deadline: budget.max_time.map(|d| start + d),
        aborted: AtomicBool::new(false),
    };
    let tables = Tables::new(n, f);
    let mut witness = TriGraph::edgeless(n);
    let mut value = 0;
    let mut exhaustive = true;
    let mut link_count = 0;
    let mut target = 1;
    while target <= n - 2 {
        let (outcome, classes) = feasible(&tables, target, &meter, budget.threads);
        link_count = classes;
        match outcome {
            Outcome::Found(mask) => {
                let h = mask_to_trigraph(&tables, mask);
                let d = h.delta2();
                assert!(d >= target, "witness codegree {d} below target {target}");
                assert!(
                    covered_at(&h, 0, f).expect("vertex 0").is_none(),
                    "witness covers vertex 0"
                );
                value = d;
                witness = h;
                target = d + 1;
            }
            Outcome::Infeasible => break,
            Outcome::Aborted => {
                exhaustive = false;
                break;
            }
        }
    }
    Ok(SearchResult {
        n,
        pattern: f.name().to_string(),
        value,
        witness,
        exhaustive,
        nodes_explored: meter.nodes.load(Ordering::Relaxed),
        link_classes: link_count,
        elapsed: start.elapsed(),
    })
}

/// Enumerates every 3-graph on `n <= 6` vertices and takes the largest
/// minimum codegree among those with some vertex in no copy of `F`.
pub fn naive_c2(n: usize, f: &Pattern) -> Result<SearchResult> {
    if n > MAX_NAIVE_N {
        return invalid(format!("unpruned enumeration supports n <= {MAX_NAIVE_N}"));
    }
    if n < f.t() || f.edges().is_empty() {
        return invalid(format!("pattern {f} unsuitable for n = {n}"));
    }
    let start = Instant::now();
    let triples = all_triples(n);
    let total: u64 = 1 << triples.len();
    let mut best: Option<(usize, u64)> = None;
    for mask in 0..total {
        let h = TriGraph::new(
            n,
            (0..triples.len()).filter(|&i| mask >> i & 1 == 1).map(|i| triples[i]),
        )
        .expect("distinct triples");
        let d = h.delta2();
        if best.is_some_and(|(b, _)| d <= b) {
            continue;
        }
        if first_uncovered(&h, f).is_some() {
            best = Some((d, mask));
        }
    }
    let (value, mask) = best.expect("the edgeless 3-graph has no covering");
    let witness = TriGraph::new(
        n,
        (0..triples.len()).filter(|&i| mask >> i & 1 == 1).map(|i| triples[i]),
    )?;
    Ok(SearchResult {
        n,
        pattern: f.name().to_string(),
        value,
        witness,
        exhaustive: true,
        nodes_explored: total,
        link_classes: 0,
        elapsed: start.elapsed(),
    })
}

/// Outcome of a randomized search for 3-graphs with minimum codegree above
/// `t` that have no `F`-covering.
#[derive(Clone, Debug, Serialize)]
pub struct SpotCheckReport {
    pub n: usize,
    pub pattern: String,
    pub t: usize,
    pub samples: usize,
    pub seed: u64,
    pub counterexample_count: usize,
    /// Up to the first 5 counterexamples in edge-list form.
    pub counterexamples: Vec<String>,
}

/// Samples `samples` random 3-graphs on `n` vertices with minimum codegree
/// above `t` and reports those with a vertex in no copy of `f`. Every
/// reported counterexample is re-checked from scratch.
///
/// Each sample starts from a random density and is then topped up with
/// random triples until every pair has codegree above `t`. Sample `i` uses
/// its own stream of the seeded generator, so results do not depend on the
/// thread count.
pub fn certify_upper_behavior(n: usize, f: &Pattern, t: usize, samples: usize, seed: u64) -> Result<SpotCheckReport> {
    if n > MAX_SPOT_CHECK_N {
        return invalid(format!("spot checks support n <= {MAX_SPOT_CHECK_N}"));
    }
    if n < 3 || t + 3 > n {
        return invalid(format!("minimum codegree above {t} is impossible on {n} vertices"));
    }
    let triples = all_triples(n);
    let hits: Vec<TriGraph> = (0..samples as u64)
        .into_par_iter()
        .filter_map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i);
            let h = sample_above(n, t, &triples, &mut rng);
            first_uncovered(&h, f).map(|_| h)
        })
        .collect();
    for h in &hits {
        let d = h.min_codegree()?.min;
        let v = first_uncovered(h, f).expect("sample had an uncovered vertex");
        assert!(
            d > t && covered_at(h, v, f)?.is_none(),
            "counterexample failed re-check"
        );
    }
    Ok(SpotCheckReport {
        n,
        pattern: f.name().to_string(),
        t,
        samples,
        seed,
        counterexample_count: hits.len(),
        counterexamples: hits.iter().take(5).map(crate::format::write_trigraph).collect(),
    })
}

fn sample_above(n: usize, t: usize, triples: &[[usize; 3]], rng: &mut ChaCha8Rng) -> TriGraph {
    let density: f64 = rng.gen_range(0.0..0.6);
    let mut present = vec![false; triples.len()];
    let mut codeg = vec![0usize; n * n];
    let index_of = |e: [usize; 3]| triples.binary_search(&e).expect("sorted triple");
    let add = |i: usize, present: &mut Vec<bool>, codeg: &mut Vec<usize>| {
        present[i] = true;
        let [a, b, c] = triples[i];
        for (p, q) in [(a, b), (a, c), (b, c)] {
            codeg[p * n + q] += 1;
            codeg[q * n + p] += 1;
        }
    };
    for i in 0..triples.len() {
        if rng.gen_bool(density) {
            add(i, &mut present, &mut codeg);
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    // Fisher-Yates so the top-up order varies between samples.
    for i in (1..pairs.len()).rev() {
        pairs.swap(i, rng.gen_range(0..=i));
    }
    for (a, b) in pairs {
        while codeg[a * n + b] <= t {
            let free: Vec<usize> = (0..n)
                .filter(|&c| c != a && c != b)
                .map(|c| {
                    let mut e = [a, b, c];
                    e.sort_unstable();
                    index_of(e)
                })
                .filter(|&i| !present[i])
                .collect();
            let pick = free[rng.gen_range(0..free.len())];
            add(pick, &mut present, &mut codeg);
        }
    }
    TriGraph::new(n, (0..triples.len()).filter(|&i| present[i]).map(|i| triples[i])).expect("distinct triples")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_index_is_dense() {
        let n = 7;
        let mut seen = HashSet::new();
        for a in 0..n {
            for b in a + 1..n {
                assert!(seen.insert(pair_index(n, a, b)));
                assert_eq!(pair_index(n, a, b), pair_index(n, b, a));
            }
        }
        assert_eq!(seen.into_iter().max(), Some(n * (n - 1) / 2 - 1));
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(all_subsets(6, 3).len(), 20);
    }

    #[test]
    fn k4_minus_copy_tables() {
        let t = Tables::new(5, &Pattern::builtin("K4-").unwrap());
        // Triple {0,1,2} lies in 2 four-sets through 0, each with 3 copies using it.
        assert_eq!(t.copies_with[0].len(), 6);
        assert_eq!(t.link_len, 6);
    }

    #[test]
    fn canonical_link_is_invariant() {
        let tables = Tables::new(6, &Pattern::builtin("K4-").unwrap());
        // Link pairs over 1..5 in lexicographic order: (1,2),(1,3),(1,4),(1,5),(2,3),...
        let path_a: Mask = 0b1 | 1 << 4; // 1-2, 2-3
        let path_b: Mask = 1 << 3 | 1 << 9; // 1-5, 4-5
        assert_eq!(tables.canonical_link(path_a), tables.canonical_link(path_b));
        let matching: Mask = 0b1 | 1 << 9; // 1-2, 4-5
        assert_ne!(tables.canonical_link(path_a), tables.canonical_link(matching));
    }

    #[test]
    fn tiny_search_matches_naive() {
        for name in ["K4-", "K4"] {
            let f = Pattern::builtin(name).unwrap();
            let fast = exact_c2(5, &f, &Budget::default()).unwrap();
            let slow = naive_c2(5, &f).unwrap();
            assert!(fast.exhaustive);
            assert_eq!(fast.value, slow.value, "{name}");
        }
    }

    #[test]
    fn node_budget_gives_lower_bound() {
        let f = Pattern::builtin("K4-").unwrap();
        let budget = Budget {
            max_nodes: Some(50),
            ..Budget::default()
        };
        let r = exact_c2(6, &f, &budget).unwrap();
        assert!(!r.exhaustive);
        assert!(r.value <= 2);
        assert!(covered_at(&r.witness, 0, &f).unwrap().is_none());
    }

    #[test]
    fn rejects_out_of_range() {
        let f = Pattern::builtin("K5-").unwrap();
        assert!(exact_c2(4, &f, &Budget::default()).is_err());
        assert!(exact_c2(9, &f, &Budget::default()).is_err());
        assert!(naive_c2(7, &f).is_err());
        assert!(certify_upper_behavior(13, &f, 3, 1, 0).is_err());
    }

    #[test]
    fn spot_check_below_threshold_finds_witnesses() {
        let f = Pattern::builtin("K4-").unwrap();
        let r = certify_upper_behavior(6, &f, 1, 200, DEFAULT_SEED).unwrap();
        for text in &r.counterexamples {
            let h = crate::format::parse_trigraph(text).unwrap();
            assert!(h.delta2() > 1);
            assert!(first_uncovered(&h, &f).is_some());
        }
    }
}
