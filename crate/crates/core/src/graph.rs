//! Simple undirected 2-graphs.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{invalid, Result};
use crate::Vertex;

/// A simple graph on vertices `0..n` stored as per-vertex neighbour sets.
///
/// Adjacency is always symmetric and loop-free. An optional class label per
/// vertex records where the vertex came from (a base vertex of a blowup, a
/// part of a partite graph, or its name in a hand-written construction).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<BTreeSet<Vertex>>,
    class_of: Option<Vec<String>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![BTreeSet::new(); n],
            class_of: None,
        }
    }

    /// Builds a graph from an edge list. Loops, out-of-range endpoints and
    /// repeated edges are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Self::empty(n);
        for (a, b) in edges {
            g.insert_edge(a, b)?;
        }
        Ok(g)
    }

    fn insert_edge(&mut self, a: Vertex, b: Vertex) -> Result<()> {
        let n = self.n();
        if a >= n || b >= n {
            return invalid(format!("edge {a}-{b} out of range for n = {n}"));
        }
        if a == b {
            return invalid(format!("loop at vertex {a}"));
        }
        if !self.adjacency[a].insert(b) {
            return invalid(format!("duplicate edge {a}-{b}"));
        }
        self.adjacency[b].insert(a);
        Ok(())
    }

    /// Returns a copy with the given edges added. Every pair must be a
    /// non-edge with distinct endpoints, and no pair may repeat.
    pub fn with_edges_added<I>(&self, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = self.clone();
        for (a, b) in pairs {
            g.insert_edge(a, b)?;
        }
        Ok(g)
    }

    /// Attaches a class label to every vertex.
    pub fn with_classes(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return invalid(format!("{} class labels for {} vertices", labels.len(), self.n()));
        }
        self.class_of = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &BTreeSet<Vertex> {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.adjacency.get(a).is_some_and(|s| s.contains(&b))
    }

    pub fn class_of(&self) -> Option<&[String]> {
        self.class_of.as_deref()
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, nb)| nb.range(a + 1..).map(move |&b| (a, b)))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Map degree -> number of vertices with that degree.
    pub fn degree_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for v in 0..self.n() {
            *hist.entry(self.degree(v)).or_insert(0) += 1;
        }
        hist
    }

    /// Some triangle `a < b < c` of the graph, or `None` if it is
    /// triangle-free. The lexicographically smallest triangle is returned.
    pub fn find_triangle(&self) -> Option<[Vertex; 3]> {
        for (a, b) in self.edges() {
            let (small, large) = if self.degree(a) <= self.degree(b) {
                (a, b)
            } else {
                (b, a)
            };
            if let Some(&c) = self.adjacency[small]
                .range(b + 1..)
                .find(|&&c| self.adjacency[large].contains(&c))
            {
                return Some([a, b, c]);
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    /// Number of edges of the graph inside the 3-set `s` (0 to 3).
    pub fn spanned_edges(&self, s: [Vertex; 3]) -> Result<usize> {
        let [a, b, c] = s;
        if a == b || a == c || b == c {
            return invalid(format!("{s:?} is not a 3-set"));
        }
        if s.iter().any(|&v| v >= self.n()) {
            return invalid(format!("{s:?} out of range for n = {}", self.n()));
        }
        Ok(usize::from(self.has_edge(a, b)) + usize::from(self.has_edge(a, c)) + usize::from(self.has_edge(b, c)))
    }

    /// Vertices adjacent to both `a` and `b`.
    pub fn common_neighbors(&self, a: Vertex, b: Vertex) -> BTreeSet<Vertex> {
        self.adjacency[a].intersection(&self.adjacency[b]).copied().collect()
    }
}
