//! Edge colouring of bipartite graphs with maximum-degree many matchings.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::Vertex;

const FREE: usize = usize::MAX;

/// A partition of a graph's edges into matchings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeColoring {
    /// Each class is a matching; pairs are `(a, b)` with `a < b`, sorted.
    pub classes: Vec<Vec<(Vertex, Vertex)>>,
    pub delta: usize,
}

impl EdgeColoring {
    pub fn edge_count(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }
}

/// Colours the edges of a bipartite graph with exactly `Δ(G)` matchings.
///
/// `side_a` and `side_b` must partition the vertex set and every edge must
/// run between them. Edges are inserted one at a time; when the colours
/// free at the two endpoints differ, the two-coloured alternating path from
/// one endpoint is recoloured first.
pub fn bipartite_edge_coloring(
    g: &Graph,
    side_a: &BTreeSet<Vertex>,
    side_b: &BTreeSet<Vertex>,
) -> Result<EdgeColoring> {
    let n = g.n();
    if let Some(v) = side_a.intersection(side_b).next() {
        return invalid(format!("vertex {v} is on both sides"));
    }
    if let Some(v) = side_a.iter().chain(side_b).find(|&&v| v >= n) {
        return invalid(format!("side vertex {v} out of range for n = {n}"));
    }
    if side_a.len() + side_b.len() != n {
        let missing = (0..n).find(|v| !side_a.contains(v) && !side_b.contains(v));
        return invalid(format!("vertex {} is on neither side", missing.unwrap_or(0)));
    }
    if let Some((a, b)) = g.edges().find(|(a, b)| side_a.contains(a) == side_a.contains(b)) {
        return invalid(format!("edge {a}-{b} does not cross the bipartition"));
    }

    let delta = g.max_degree();
    // at[v * delta + c] = neighbour joined to v by colour c, or FREE.
    let mut at = vec![FREE; n * delta];
    let free_colour = |at: &[usize], v: Vertex| {
        (0..delta)
            .find(|&c| at[v * delta + c] == FREE)
            .expect("a vertex below maximum degree has a free colour")
    };

    for (u, v) in g.edges() {
        let alpha = free_colour(&at, u);
        let beta = free_colour(&at, v);
        if at[v * delta + alpha] != FREE {
            // Walk the alpha/beta path starting at v along alpha and swap it.
            let mut path = Vec::new();
            let (mut cur, mut colour) = (v, alpha);
            loop {
                let next = at[cur * delta + colour];
                if next == FREE {
                    break;
                }
                path.push((cur, next, colour));
                cur = next;
                colour = if colour == alpha { beta } else { alpha };
            }
            for &(p, q, c) in &path {
                at[p * delta + c] = FREE;
                at[q * delta + c] = FREE;
            }
            for &(p, q, c) in &path {
                let swapped = if c == alpha { beta } else { alpha };
                at[p * delta + swapped] = q;
                at[q * delta + swapped] = p;
            }
            debug_assert!(at[u * delta + alpha] == FREE, "alternating path reached u");
        }
        at[u * delta + alpha] = v;
        at[v * delta + alpha] = u;
    }

    let mut classes = vec![Vec::new(); delta];
    for a in 0..n {
        for (c, class) in classes.iter_mut().enumerate() {
            let b = at[a * delta + c];
            if b != FREE && a < b {
                class.push((a, b));
            }
        }
    }
    Ok(EdgeColoring { classes, delta })
}

/// Round-robin colouring of `K(a, b)` with parts `0..a` and `a..a+b`:
/// class `i` joins `j` to `a + (j + i) mod b`.
pub fn complete_bipartite_matchings(a: usize, b: usize) -> Result<EdgeColoring> {
    if a == 0 || b == 0 {
        return Ok(EdgeColoring {
            classes: Vec::new(),
            delta: 0,
        });
    }
    if a > b {
        return invalid(format!("expected a <= b, got a = {a}, b = {b}"));
    }
    let classes = (0..b).map(|i| (0..a).map(|j| (j, a + (j + i) % b)).collect()).collect();
    Ok(EdgeColoring { classes, delta: b })
}

/// Checks that `coloring` partitions the edges of `g` into at most `delta`
/// matchings. Returns a description of the first violation.
pub fn check_coloring(g: &Graph, coloring: &EdgeColoring) -> std::result::Result<(), String> {
    let mut seen = BTreeSet::new();
    for (i, class) in coloring.classes.iter().enumerate() {
        let mut touched = BTreeSet::new();
        for &(a, b) in class {
            if !g.has_edge(a, b) {
                return Err(format!("class {i} uses non-edge {a}-{b}"));
            }
            if !touched.insert(a) || !touched.insert(b) {
                return Err(format!("class {i} is not a matching at {a}-{b}"));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(format!("edge {a}-{b} coloured twice"));
            }
        }
    }
    if seen.len() != g.edge_count() {
        return Err(format!("{} of {} edges coloured", seen.len(), g.edge_count()));
    }
    if coloring.classes.len() > coloring.delta {
        return Err(format!(
            "{} classes for delta {}",
            coloring.classes.len(),
            coloring.delta
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sides(
        a: impl IntoIterator<Item = usize>,
        b: impl IntoIterator<Item = usize>,
    ) -> (BTreeSet<usize>, BTreeSet<usize>) {
        (a.into_iter().collect(), b.into_iter().collect())
    }

    #[test]
    fn k33_splits_into_perfect_matchings() {
        let g = Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap();
        let (a, b) = sides(0..3, 3..6);
        let col = bipartite_edge_coloring(&g, &a, &b).unwrap();
        assert_eq!(col.classes.len(), 3);
        assert!(col.classes.iter().all(|c| c.len() == 3));
        check_coloring(&g, &col).unwrap();
    }

    #[test]
    fn path_uses_two_singletons() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let (a, b) = sides([1], [0, 2]);
        let col = bipartite_edge_coloring(&g, &a, &b).unwrap();
        assert_eq!(col.delta, 2);
        assert!(col.classes.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn rejects_edge_within_side() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let (a, b) = sides([0, 1], [2]);
        let err = bipartite_edge_coloring(&g, &a, &b).unwrap_err().to_string();
        assert!(err.contains("0-1"), "{err}");
        let (a, b) = sides([0], [2]);
        assert!(bipartite_edge_coloring(&g, &a, &b).is_err());
    }

    #[test]
    fn round_robin_small_cases() {
        let c = complete_bipartite_matchings(2, 2).unwrap();
        assert_eq!(c.classes, vec![vec![(0, 2), (1, 3)], vec![(0, 3), (1, 2)]]);
        let c = complete_bipartite_matchings(1, 3).unwrap();
        assert_eq!(c.classes.len(), 3);
        assert!(c.classes.iter().all(|m| m.len() == 1));
        let c = complete_bipartite_matchings(2, 3).unwrap();
        let g = Graph::from_edges(5, (0..2).flat_map(|a| (2..5).map(move |b| (a, b)))).unwrap();
        assert_eq!(c.classes.len(), 3);
        check_coloring(&g, &c).unwrap();
        assert_eq!(complete_bipartite_matchings(0, 4).unwrap().delta, 0);
        assert!(complete_bipartite_matchings(3, 2).is_err());
    }
}
