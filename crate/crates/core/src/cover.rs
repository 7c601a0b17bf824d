//! Embedding search for covering patterns and whole-graph covering reports.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::pattern::Pattern;
use crate::trigraph::TriGraph;
use crate::Vertex;

/// `embedding[i]` is the host vertex that pattern vertex `i` maps to.
pub type Embedding = Vec<Vertex>;

/// Static search plan: the order in which pattern vertices are placed and
/// what can be checked when each one is placed.
struct Plan {
    order: Vec<usize>,
    /// Pairs of earlier positions that form a pattern edge with position `k`.
    closing: Vec<Vec<(usize, usize)>>,
    /// Earlier positions `j` and the pattern codegree of `(order[j], order[k])`.
    pair_need: Vec<Vec<(usize, usize)>>,
}

impl Plan {
    fn new(f: &Pattern, order: Vec<usize>) -> Self {
        let t = order.len();
        let mut closing = vec![Vec::new(); t];
        let mut pair_need = vec![Vec::new(); t];
        for k in 0..t {
            for j in 0..k {
                let need = f.codegree(order[j], order[k]);
                if need > 0 {
                    pair_need[k].push((j, need));
                }
                for i in 0..j {
                    if f.contains(order[i], order[j], order[k]) {
                        closing[k].push((i, j));
                    }
                }
            }
        }
        Self {
            order,
            closing,
            pair_need,
        }
    }

    /// Anchor first, then repeatedly the vertex closing the most pattern edges
    /// with those already placed (ties: higher pattern degree, lower index).
    fn anchored(f: &Pattern, anchor: usize) -> Self {
        let mut order = vec![anchor];
        let mut left: Vec<usize> = (0..f.t()).filter(|&u| u != anchor).collect();
        while !left.is_empty() {
            let score = |u: usize| {
                let mut closed = 0;
                for (i, &a) in order.iter().enumerate() {
                    for &b in &order[i + 1..] {
                        closed += usize::from(f.contains(a, b, u));
                    }
                }
                (closed, f.degree(u))
            };
            let best = (0..left.len())
                .max_by(|&x, &y| score(left[x]).cmp(&score(left[y])).then(left[y].cmp(&left[x])))
                .expect("non-empty");
            order.push(left.remove(best));
        }
        Self::new(f, order)
    }

    /// Find the first embedding in the plan's order (candidates ascending).
    /// `anchor` pins position 0; `must_use` requires the vertex in the image.
    fn first(&self, h: &TriGraph, anchor: Option<Vertex>, must_use: Option<Vertex>) -> Option<Embedding> {
        let t = self.order.len();
        let mut placed = vec![0; t];
        let mut used = vec![false; h.n()];
        if self.dfs(h, 0, anchor, must_use, &mut placed, &mut used) {
            let mut phi = vec![0; t];
            for (k, &u) in self.order.iter().enumerate() {
                phi[u] = placed[k];
            }
            Some(phi)
        } else {
            None
        }
    }

    fn dfs(
        &self,
        h: &TriGraph,
        k: usize,
        anchor: Option<Vertex>,
        must_use: Option<Vertex>,
        placed: &mut [Vertex],
        used: &mut [bool],
    ) -> bool {
        let t = self.order.len();
        if k == t {
            return true;
        }
        let forced = match (k, anchor, must_use) {
            (0, Some(v), _) => Some(v),
            (_, _, Some(v)) if k == t - 1 && !used[v] => Some(v),
            _ => None,
        };
        let candidates = match forced {
            Some(v) => v..v + 1,
            None => 0..h.n(),
        };
        for c in candidates {
            if used[c] {
                continue;
            }
            let fits = self.pair_need[k]
                .iter()
                .all(|&(j, need)| h.codegree_unchecked(placed[j], c) >= need)
                && self.closing[k]
                    .iter()
                    .all(|&(i, j)| h.contains(placed[i], placed[j], c));
            if !fits {
                continue;
            }
            placed[k] = c;
            used[c] = true;
            let found = self.dfs(h, k + 1, anchor, must_use, placed, used);
            used[c] = false;
            if found {
                return true;
            }
        }
        false
    }
}

fn check_vertex(h: &TriGraph, v: Vertex) -> Result<()> {
    if v >= h.n() {
        return invalid(format!("vertex {v} out of range for n = {}", h.n()));
    }
    Ok(())
}

/// Whether some copy of `f` (as a subgraph, not necessarily induced)
/// contains `v`, found by backtracking with `v` pinned to each pattern
/// vertex in turn.
pub fn is_covered(h: &TriGraph, v: Vertex, f: &Pattern) -> Result<bool> {
    check_vertex(h, v)?;
    if f.t() > h.n() || h.n() == 0 {
        return Ok(false);
    }
    Ok((0..f.t()).any(|anchor| Plan::anchored(f, anchor).first(h, Some(v), None).is_some()))
}

/// The lexicographically smallest embedding of `f` whose image contains `v`,
/// or `None` if `v` lies in no copy of `f`.
pub fn covered_at(h: &TriGraph, v: Vertex, f: &Pattern) -> Result<Option<Embedding>> {
    if !is_covered(h, v, f)? {
        return Ok(None);
    }
    let plan = Plan::new(f, (0..f.t()).collect());
    Ok(plan.first(h, None, Some(v)))
}

/// Direct check for `K_t` and `K_t-`: is there a `t`-set through `v` that
/// misses at most `missing` of its triples? Returns an embedding of
/// `Pattern::complete_minus(t)` (or `complete(t)` when `missing == 0`).
pub fn covered_by_near_complete(h: &TriGraph, v: Vertex, t: usize, missing: usize) -> Result<Option<Embedding>> {
    check_vertex(h, v)?;
    if t < 3 || t > h.n() || missing > 1 {
        return Ok(None);
    }
    let others: Vec<Vertex> = (0..h.n()).filter(|&u| u != v).collect();
    let mut chosen = Vec::with_capacity(t);
    let mut found = None;
    choose(&others, t - 1, 0, &mut chosen, &mut |rest| {
        let mut set: Vec<Vertex> = rest.to_vec();
        set.push(v);
        set.sort_unstable();
        let mut absent = Vec::new();
        'outer: for a in 0..t {
            for b in a + 1..t {
                for c in b + 1..t {
                    if !h.contains(set[a], set[b], set[c]) {
                        absent.push([set[a], set[b], set[c]]);
                        if absent.len() > missing {
                            break 'outer;
                        }
                    }
                }
            }
        }
        if absent.len() > missing {
            return false;
        }
        // K_t- drops {0,1,2}: send those pattern vertices onto the absent triple.
        let phi = match absent.first() {
            Some(gap) => {
                let mut phi = gap.to_vec();
                phi.extend(set.iter().copied().filter(|u| !gap.contains(u)));
                phi
            }
            None => set,
        };
        found = Some(phi);
        true
    });
    Ok(found)
}

/// Calls `visit` on each `k`-subset of `items` in lexicographic order until it
/// returns true.
fn choose<F>(items: &[Vertex], k: usize, start: usize, acc: &mut Vec<Vertex>, visit: &mut F) -> bool
where
    F: FnMut(&[Vertex]) -> bool,
{
    if acc.len() == k {
        return visit(acc);
    }
    let need = k - acc.len();
    for i in start..=items.len().saturating_sub(need) {
        if i >= items.len() {
            break;
        }
        acc.push(items[i]);
        let stop = choose(items, k, i + 1, acc, visit);
        acc.pop();
        if stop {
            return true;
        }
    }
    false
}

/// Whether `phi` is an injective map of `f` into `h` with `v` in its image.
pub fn is_valid_embedding(h: &TriGraph, f: &Pattern, phi: &[Vertex], v: Vertex) -> bool {
    if phi.len() != f.t() || phi.iter().any(|&u| u >= h.n()) {
        return false;
    }
    let distinct: BTreeSet<_> = phi.iter().collect();
    distinct.len() == phi.len()
        && phi.contains(&v)
        && f.edges().iter().all(|&[a, b, c]| h.contains(phi[a], phi[b], phi[c]))
}

/// Which vertices lie in a copy of the pattern, with one witness each.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub pattern: String,
    pub uncovered: BTreeSet<Vertex>,
    pub witness_embeddings: BTreeMap<Vertex, Embedding>,
}

impl CoverReport {
    pub fn has_covering(&self) -> bool {
        self.uncovered.is_empty()
    }
}

/// Covering status of every vertex. Vertices are checked in parallel; each
/// witness is the lexicographically smallest embedding, so the report does
/// not depend on scheduling.
pub fn covering_report(h: &TriGraph, f: &Pattern) -> CoverReport {
    let per_vertex: Vec<Option<Embedding>> = (0..h.n())
        .into_par_iter()
        .map(|v| covered_at(h, v, f).expect("vertex in range"))
        .collect();
    let mut uncovered = BTreeSet::new();
    let mut witness_embeddings = BTreeMap::new();
    for (v, w) in per_vertex.into_iter().enumerate() {
        match w {
            Some(phi) => {
                witness_embeddings.insert(v, phi);
            }
            None => {
                uncovered.insert(v);
            }
        }
    }
    CoverReport {
        pattern: f.name().to_string(),
        uncovered,
        witness_embeddings,
    }
}

/// First vertex lying in no copy of `f`, scanning in index order.
pub fn first_uncovered(h: &TriGraph, f: &Pattern) -> Option<Vertex> {
    (0..h.n()).find(|&v| !is_covered(h, v, f).expect("vertex in range"))
}

/// Outcome of the link-based obstruction check for `K4-` at a vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Observation1 {
    /// The link is triangle-free and no edge avoiding `x` spans two link edges.
    Holds,
    /// A triangle in the link of `x` (hypergraph vertex indices).
    LinkTriangle([Vertex; 3]),
    /// An edge avoiding `x` that spans `spanned >= 2` link edges.
    EdgeSpansPath { edge: [Vertex; 3], spanned: usize },
}

impl Observation1 {
    pub fn holds(&self) -> bool {
        matches!(self, Observation1::Holds)
    }
}

/// Checks the sufficient condition for `x` to lie in no copy of `K4-`: the
/// link of `x` is triangle-free, and every edge avoiding `x` spans at most
/// one link edge.
pub fn observation1(h: &TriGraph, x: Vertex) -> Result<Observation1> {
    let link = h.link_graph(x)?;
    if let Some(tri) = link.graph.find_triangle() {
        return Ok(Observation1::LinkTriangle(tri.map(|i| link.index_map[i])));
    }
    for &e in h.edges() {
        if e.contains(&x) {
            continue;
        }
        let local = e.map(|v| link.local(v).expect("vertex other than x"));
        let spanned = link.graph.spanned_edges(local)?;
        if spanned > 1 {
            return Ok(Observation1::EdgeSpansPath { edge: e, spanned });
        }
    }
    Ok(Observation1::Holds)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4m() -> Pattern {
        Pattern::builtin("K4-").unwrap()
    }

    #[test]
    fn pattern_covers_itself() {
        let f = k4m();
        let h = TriGraph::new(4, f.edges().to_vec()).unwrap();
        for v in 0..4 {
            let phi = covered_at(&h, v, &f).unwrap().unwrap();
            assert!(is_valid_embedding(&h, &f, &phi, v));
        }
    }

    #[test]
    fn complete_five_is_k5_minus_covered() {
        let r = covering_report(&TriGraph::complete(5), &Pattern::builtin("K5-").unwrap());
        assert!(r.uncovered.is_empty());
        assert_eq!(r.witness_embeddings.len(), 5);
    }

    #[test]
    fn edgeless_is_uncovered() {
        let r = covering_report(&TriGraph::edgeless(6), &k4m());
        assert_eq!(r.uncovered.len(), 6);
        assert!(!r.has_covering());
    }

    #[test]
    fn pattern_larger_than_host() {
        assert_eq!(
            covered_at(&TriGraph::complete(4), 0, &Pattern::complete(5)).unwrap(),
            None
        );
        assert!(covered_at(&TriGraph::complete(4), 4, &k4m()).is_err());
    }

    #[test]
    fn lexicographically_smallest_witness() {
        let h = TriGraph::complete(6);
        let phi = covered_at(&h, 4, &k4m()).unwrap().unwrap();
        assert_eq!(phi, vec![0, 1, 2, 4]);
    }

    #[test]
    fn near_complete_check_matches() {
        let h = TriGraph::complete(5).without_edge([1, 2, 3]).unwrap();
        let phi = covered_by_near_complete(&h, 0, 5, 1).unwrap().unwrap();
        assert_eq!(&phi[..3], &[1, 2, 3]);
        assert!(is_valid_embedding(&h, &Pattern::builtin("K5-").unwrap(), &phi, 0));
        assert!(covered_by_near_complete(&h, 0, 5, 0).unwrap().is_none());
    }

    #[test]
    fn observation1_fails_on_k4() {
        let h = TriGraph::complete(4);
        assert_eq!(observation1(&h, 0).unwrap(), Observation1::LinkTriangle([1, 2, 3]));
    }

    #[test]
    fn observation1_reports_spanning_edge() {
        // Link of 0 is the path 1-2-3, and 123 is an edge.
        let h = TriGraph::new(4, [[0, 1, 2], [0, 2, 3], [1, 2, 3]]).unwrap();
        assert_eq!(
            observation1(&h, 0).unwrap(),
            Observation1::EdgeSpansPath {
                edge: [1, 2, 3],
                spanned: 2
            }
        );
    }
}
