//! Simple 3-uniform hypergraphs with codegree and link queries.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::Vertex;

/// Index of the sorted triple `a < b < c` in the combinatorial number system.
#[inline]
fn triple_index(a: usize, b: usize, c: usize) -> usize {
    c * (c - 1) * (c - 2) / 6 + b * (b - 1) / 2 + a
}

fn sort3([a, b, c]: [Vertex; 3]) -> [Vertex; 3] {
    let mut t = [a, b, c];
    t.sort_unstable();
    t
}

/// A simple 3-graph on vertices `0..n`.
///
/// Edges are kept as sorted triples in lexicographic order together with a
/// membership bitset and a table of pair codegrees, both filled once at
/// construction. The value is immutable afterwards.
#[derive(Clone, Debug)]
pub struct TriGraph {
    n: usize,
    edges: Vec<[Vertex; 3]>,
    member: Vec<u64>,
    codegrees: Vec<u32>,
    distinguished: Option<Vertex>,
    classes: Option<Vec<String>>,
}

impl PartialEq for TriGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.edges == other.edges
            && self.distinguished == other.distinguished
            && self.classes == other.classes
    }
}

impl Eq for TriGraph {}

impl TriGraph {
    /// Builds a 3-graph from triples given in any vertex order. Triples with
    /// repeated or out-of-range vertices and duplicate triples are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = [Vertex; 3]>,
    {
        let mut sorted = Vec::new();
        for e in edges {
            let e = sort3(e);
            if e[2] >= n {
                return invalid(format!("edge {e:?} out of range for n = {n}"));
            }
            if e[0] == e[1] || e[1] == e[2] {
                return invalid(format!("edge {e:?} has a repeated vertex"));
            }
            sorted.push(e);
        }
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return invalid(format!("duplicate edge {:?}", w[0]));
        }
        Ok(Self::from_sorted_unique(n, sorted))
    }

    fn from_sorted_unique(n: usize, edges: Vec<[Vertex; 3]>) -> Self {
        let slots = if n >= 3 { triple_index(0, 1, n) } else { 0 };
        let mut member = vec![0u64; slots.div_ceil(64)];
        let mut codegrees = vec![0u32; n * n];
        for &[a, b, c] in &edges {
            let i = triple_index(a, b, c);
            member[i / 64] |= 1 << (i % 64);
            for (p, q) in [(a, b), (a, c), (b, c)] {
                codegrees[p * n + q] += 1;
                codegrees[q * n + p] += 1;
            }
        }
        Self {
            n,
            edges,
            member,
            codegrees,
            distinguished: None,
            classes: None,
        }
    }

    /// The complete 3-graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    edges.push([a, b, c]);
                }
            }
        }
        Self::from_sorted_unique(n, edges)
    }

    pub fn edgeless(n: usize) -> Self {
        Self::from_sorted_unique(n, Vec::new())
    }

    /// Marks `x` as the distinguished vertex.
    pub fn with_distinguished(mut self, x: Vertex) -> Result<Self> {
        if x >= self.n {
            return invalid(format!("distinguished vertex {x} out of range"));
        }
        self.distinguished = Some(x);
        Ok(self)
    }

    /// Attaches one class label per vertex. Labels must be non-empty and free
    /// of whitespace so that they survive the edge-list format.
    pub fn with_classes(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return invalid(format!("{} class labels for {} vertices", labels.len(), self.n));
        }
        if let Some(bad) = labels
            .iter()
            .find(|l| l.is_empty() || l.chars().any(char::is_whitespace))
        {
            return invalid(format!("class label {bad:?} must be a non-empty token"));
        }
        self.classes = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges in lexicographic order of sorted triples.
    pub fn edges(&self) -> &[[Vertex; 3]] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn distinguished(&self) -> Option<Vertex> {
        self.distinguished
    }

    pub fn classes(&self) -> Option<&[String]> {
        self.classes.as_deref()
    }

    /// Whether `{a, b, c}` is an edge. Vertices may be given in any order;
    /// non-sets and out-of-range vertices are simply not edges.
    #[inline]
    pub fn contains(&self, a: Vertex, b: Vertex, c: Vertex) -> bool {
        let [a, b, c] = sort3([a, b, c]);
        if a == b || b == c || c >= self.n {
            return false;
        }
        let i = triple_index(a, b, c);
        self.member[i / 64] >> (i % 64) & 1 == 1
    }

    /// Unchecked codegree lookup for valid distinct `a`, `b`.
    #[inline]
    pub(crate) fn codegree_unchecked(&self, a: Vertex, b: Vertex) -> usize {
        self.codegrees[a * self.n + b] as usize
    }

    /// Number of vertices `c` with `{a, b, c}` an edge.
    pub fn codegree(&self, a: Vertex, b: Vertex) -> Result<usize> {
        self.check_pair(a, b)?;
        Ok(self.codegree_unchecked(a, b))
    }

    /// The vertices `c` with `{a, b, c}` an edge, ascending.
    pub fn pair_neighborhood(&self, a: Vertex, b: Vertex) -> Result<Vec<Vertex>> {
        self.check_pair(a, b)?;
        Ok((0..self.n)
            .filter(|&c| c != a && c != b && self.contains(a, b, c))
            .collect())
    }

    fn check_pair(&self, a: Vertex, b: Vertex) -> Result<()> {
        if a >= self.n || b >= self.n {
            return invalid(format!("pair ({a}, {b}) out of range for n = {}", self.n));
        }
        if a == b {
            return invalid(format!("pair ({a}, {b}) is not a 2-set"));
        }
        Ok(())
    }

    /// Codegree statistics over all unordered pairs; `min` is the minimum
    /// codegree.
    pub fn min_codegree(&self) -> Result<PairDegreeProfile> {
        if self.n < 2 {
            return invalid(format!("minimum codegree needs n >= 2, got {}", self.n));
        }
        let mut histogram = BTreeMap::new();
        let mut min = usize::MAX;
        let mut argmin_pairs = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                let d = self.codegree_unchecked(a, b);
                *histogram.entry(d).or_insert(0) += 1;
                if d < min {
                    min = d;
                    argmin_pairs.clear();
                }
                if d == min {
                    argmin_pairs.push((a, b));
                }
            }
        }
        Ok(PairDegreeProfile {
            min,
            argmin_pairs,
            histogram,
        })
    }

    /// Minimum codegree, or 0 when `n < 2`.
    pub fn delta2(&self) -> usize {
        self.min_codegree().map(|p| p.min).unwrap_or(0)
    }

    /// The link graph of `x`: the graph on `V \ {x}` whose edges are the pairs
    /// `ab` with `xab` an edge. Vertices are re-indexed to `0..n-1`.
    pub fn link_graph(&self, x: Vertex) -> Result<LinkGraph> {
        if x >= self.n {
            return invalid(format!("vertex {x} out of range for n = {}", self.n));
        }
        let index_map: Vec<Vertex> = (0..self.n).filter(|&v| v != x).collect();
        let local = |v: Vertex| if v < x { v } else { v - 1 };
        let pairs = self.edges.iter().filter(|e| e.contains(&x)).map(|e| {
            let mut rest = e.iter().copied().filter(|&v| v != x);
            let a = rest.next().expect("edge has three vertices");
            let b = rest.next().expect("edge has three vertices");
            (local(a), local(b))
        });
        let graph = Graph::from_edges(self.n - 1, pairs)?;
        Ok(LinkGraph { graph, index_map })
    }

    /// Degree of a single vertex (number of edges containing it).
    pub fn vertex_degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    /// A copy without the edge `{a, b, c}`, keeping labels and the
    /// distinguished vertex.
    pub fn without_edge(&self, e: [Vertex; 3]) -> Result<Self> {
        let e = sort3(e);
        if !self.contains(e[0], e[1], e[2]) {
            return invalid(format!("{e:?} is not an edge"));
        }
        let edges = self.edges.iter().copied().filter(|&f| f != e).collect();
        Ok(self.relabelled_copy(edges))
    }

    /// A copy with extra edges (duplicates of present edges are ignored).
    pub fn with_edges_added<I>(&self, extra: I) -> Result<Self>
    where
        I: IntoIterator<Item = [Vertex; 3]>,
    {
        let mut all: Vec<[Vertex; 3]> = self.edges.clone();
        for e in extra {
            let s = sort3(e);
            if s[2] >= self.n || s[0] == s[1] || s[1] == s[2] {
                return invalid(format!("{e:?} is not a valid triple"));
            }
            all.push(s);
        }
        all.sort_unstable();
        all.dedup();
        Ok(self.relabelled_copy(all))
    }

    fn relabelled_copy(&self, edges: Vec<[Vertex; 3]>) -> Self {
        let mut h = Self::from_sorted_unique(self.n, edges);
        h.distinguished = self.distinguished;
        h.classes = self.classes.clone();
        h
    }
}

/// A link graph together with the map from its compact vertex indices back
/// to vertices of the hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkGraph {
    pub graph: Graph,
    /// `index_map[i]` is the hypergraph vertex behind link vertex `i`.
    pub index_map: Vec<Vertex>,
}

impl LinkGraph {
    /// Link index of a hypergraph vertex, if it is in the link's vertex set.
    pub fn local(&self, v: Vertex) -> Option<usize> {
        self.index_map.binary_search(&v).ok()
    }
}

/// Minimum codegree with the pairs attaining it and the full codegree
/// histogram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairDegreeProfile {
    pub min: usize,
    pub argmin_pairs: Vec<(Vertex, Vertex)>,
    pub histogram: BTreeMap<usize, usize>,
}
