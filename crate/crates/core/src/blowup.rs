//! Vertex blowups of graphs and the matching insertions layered on top of
//! them.

use crate::error::{invalid, Result};
use crate::graph::Graph;
use crate::Vertex;

/// A base graph and a positive multiplicity for each of its vertices.
#[derive(Clone, Debug)]
pub struct BlowupSpec {
    base: Graph,
    multiplicity: Vec<usize>,
}

impl BlowupSpec {
    pub fn new(base: Graph, multiplicity: Vec<usize>) -> Result<Self> {
        if multiplicity.len() != base.n() {
            return invalid(format!(
                "{} multiplicities for {} base vertices",
                multiplicity.len(),
                base.n()
            ));
        }
        if let Some(v) = multiplicity.iter().position(|&k| k == 0) {
            return invalid(format!("base vertex {v} has multiplicity 0"));
        }
        Ok(Self { base, multiplicity })
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn multiplicity(&self) -> &[usize] {
        &self.multiplicity
    }
}

/// The blown-up graph with the copies of each base vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupResult {
    pub graph: Graph,
    /// `class_members[v]` lists the copies of base vertex `v`, ascending.
    pub class_members: Vec<Vec<Vertex>>,
}

/// Replaces each base vertex `v` by `multiplicity(v)` independent copies;
/// copies are adjacent exactly when their base vertices are. Copies are
/// numbered base vertex by base vertex, then by copy index.
pub fn blowup(spec: &BlowupSpec) -> BlowupResult {
    blowup_unchecked(&spec.base, &spec.multiplicity)
}

/// Like [`blowup`] but a multiplicity of 0 deletes the base vertex, leaving an
/// empty class behind. Constructions whose parameter makes some class empty
/// go through here.
pub fn blowup_allowing_empty(base: &Graph, multiplicity: &[usize]) -> Result<BlowupResult> {
    if multiplicity.len() != base.n() {
        return invalid(format!(
            "{} multiplicities for {} base vertices",
            multiplicity.len(),
            base.n()
        ));
    }
    Ok(blowup_unchecked(base, multiplicity))
}

fn blowup_unchecked(base: &Graph, multiplicity: &[usize]) -> BlowupResult {
    let mut class_members = Vec::with_capacity(base.n());
    let mut next = 0;
    for &k in multiplicity {
        class_members.push((next..next + k).collect::<Vec<_>>());
        next += k;
    }
    let mut pairs = Vec::new();
    for (u, v) in base.edges() {
        for &a in &class_members[u] {
            for &b in &class_members[v] {
                pairs.push((a, b));
            }
        }
    }
    let labels = (0..base.n())
        .flat_map(|v| {
            let label = base.class_of().map_or_else(|| v.to_string(), |l| l[v].clone());
            std::iter::repeat_n(label, multiplicity[v])
        })
        .collect();
    let graph = Graph::from_edges(next, pairs)
        .and_then(|g| g.with_classes(labels))
        .expect("blowup of a simple graph is simple");
    BlowupResult { graph, class_members }
}

/// Joins the `i`-th copy of `class_a` to the `i`-th copy of `class_b`.
pub fn add_matching_between(result: &BlowupResult, class_a: Vertex, class_b: Vertex) -> Result<Graph> {
    let (Some(a), Some(b)) = (result.class_members.get(class_a), result.class_members.get(class_b)) else {
        return invalid(format!("unknown class {class_a} or {class_b}"));
    };
    if class_a == class_b {
        return invalid("cannot match a class with itself");
    }
    if a.len() != b.len() {
        return invalid(format!(
            "classes have sizes {} and {}; a perfect matching needs equal sizes",
            a.len(),
            b.len()
        ));
    }
    add_edge_list(&result.graph, a.iter().copied().zip(b.iter().copied()))
}

/// Adds the given pairs, each of which must currently be a non-edge.
pub fn add_edge_list<I>(g: &Graph, pairs: I) -> Result<Graph>
where
    I: IntoIterator<Item = (Vertex, Vertex)>,
{
    g.with_edges_added(pairs)
}
