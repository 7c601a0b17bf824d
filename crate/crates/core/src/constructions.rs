//! Extremal constructions for `K4-` and `K5-` covering and the verifiers
//! that check their codegree and covering properties.
//!
//! Vertex numbering. Base graphs `G1`-`G3` list their outer vertices first
//! (label `i` is index `i - 1`), then `v1`..`v6`. The hypergraphs `H1`-`H3`
//! put `x` at index 0, so outer vertex `i` is index `i`, followed by the
//! blown-up classes `V1`..`V6`. `T` uses `V1`, `V2`, `V3` in that order, and
//! `H4` places `x` at 0 followed by `V1`, `V2`, `V3`. Every construction carries
//! a labeling table mapping these names to indices.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::blowup::{add_edge_list, add_matching_between, blowup_allowing_empty};
use crate::cover::{covered_at, covered_by_near_complete, observation1, Observation1};
use crate::error::{invalid, Error, Result};
use crate::format::EdgeList;
use crate::graph::Graph;
use crate::koenig::complete_bipartite_matchings;
use crate::pattern::Pattern;
use crate::trigraph::TriGraph;
use crate::{k4_minus_threshold, k5_minus_threshold, Vertex};

/// Which construction, with its parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionId {
    G1,
    G2,
    G3,
    /// `H1` with parameter `m`, on `6m` vertices.
    H1(usize),
    /// `H2` with parameter `m`, on `6m + 3` vertices.
    H2(usize),
    /// `H3` with parameter `m`, on `6m + 4` vertices.
    H3(usize),
    /// `T` with part sizes `(|V1|, |V2|, |V3|)`.
    T([usize; 3]),
    /// `H4` on `n` vertices.
    H4(usize),
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionId::G1 => write!(f, "G1"),
            ConstructionId::G2 => write!(f, "G2"),
            ConstructionId::G3 => write!(f, "G3"),
            ConstructionId::H1(m) => write!(f, "H1(m={m})"),
            ConstructionId::H2(m) => write!(f, "H2(m={m})"),
            ConstructionId::H3(m) => write!(f, "H3(m={m})"),
            ConstructionId::T([a, b, c]) => write!(f, "T(sizes={a},{b},{c})"),
            ConstructionId::H4(n) => write!(f, "H4(n={n})"),
        }
    }
}

impl Serialize for ConstructionId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseGraph {
    G1,
    G2,
    G3,
}

type EdgeTable = &'static [(u8, u8)];

/// (outer vertex count, outer cycle length, outer extra edges, cross edges)
fn base_data(which: BaseGraph) -> (usize, usize, EdgeTable, EdgeTable) {
    match which {
        BaseGraph::G1 => (
            5,
            5,
            &[],
            &[
                (1, 1),
                (1, 3),
                (2, 2),
                (2, 5),
                (3, 4),
                (3, 6),
                (4, 3),
                (4, 5),
                (5, 2),
                (5, 6),
            ],
        ),
        BaseGraph::G2 => (
            8,
            8,
            &[],
            &[
                (1, 1),
                (1, 3),
                (2, 2),
                (2, 6),
                (3, 1),
                (3, 5),
                (4, 3),
                (4, 6),
                (5, 2),
                (5, 4),
                (6, 3),
                (6, 5),
                (7, 4),
                (7, 6),
                (8, 2),
                (8, 5),
            ],
        ),
        BaseGraph::G3 => (
            9,
            8,
            &[(1, 9), (3, 9), (7, 9)],
            &[
                (1, 1),
                (1, 3),
                (2, 2),
                (2, 6),
                (3, 1),
                (3, 4),
                (4, 3),
                (4, 5),
                (5, 4),
                (5, 6),
                (6, 1),
                (6, 5),
                (7, 3),
                (7, 6),
                (8, 2),
                (8, 4),
                (9, 2),
                (9, 5),
            ],
        ),
    }
}

/// The base graph: a 6-cycle `v1..v6`, the outer cycle `1..k` (plus vertex 9
/// for `G3`) and the listed cross edges. Vertices carry their names as class
/// labels.
pub fn base_graph(which: BaseGraph) -> Graph {
    let (outer, cycle, extra, cross) = base_data(which);
    let v = |i: u8| outer + i as usize - 1;
    let o = |i: u8| i as usize - 1;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    edges.extend((0..cycle).map(|i| (i, (i + 1) % cycle)));
    edges.extend((1..=6u8).map(|i| (v(i), v(i % 6 + 1))));
    edges.extend(extra.iter().map(|&(a, b)| (o(a), o(b))));
    edges.extend(cross.iter().map(|&(a, b)| (o(a), v(b))));
    let labels = (1..=outer)
        .map(|i| i.to_string())
        .chain((1..=6).map(|i| format!("v{i}")))
        .collect();
    Graph::from_edges(outer + 6, edges)
        .and_then(|g| g.with_classes(labels))
        .expect("base graph edge lists are simple")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KFamily {
    H1,
    H2,
    H3,
}

impl KFamily {
    fn base(self) -> BaseGraph {
        match self {
            KFamily::H1 => BaseGraph::G1,
            KFamily::H2 => BaseGraph::G2,
            KFamily::H3 => BaseGraph::G3,
        }
    }
}

/// The link graph of `x` in `H1`/`H2`/`H3`: the blowup of the base graph with
/// classes of size `m - 1` for `v1..v6`, plus the extra matchings.
pub fn k4_link(which: KFamily, m: usize) -> Result<Graph> {
    if m < 1 {
        return invalid(format!("m must be at least 1, got {m}"));
    }
    let base = base_graph(which.base());
    let outer = base.n() - 6;
    let mult: Vec<usize> = (0..base.n()).map(|i| if i < outer { 1 } else { m - 1 }).collect();
    let blown = blowup_allowing_empty(&base, &mult)?;
    // Outer vertices are singleton classes, so base index = blowup index.
    let v1 = outer;
    let v4 = outer + 3;
    let outer_pairs =
        |pairs: &[(usize, usize)]| -> Vec<(Vertex, Vertex)> { pairs.iter().map(|&(a, b)| (a - 1, b - 1)).collect() };
    match which {
        KFamily::H1 => add_matching_between(&blown, v1, v4),
        KFamily::H2 => {
            let g = add_matching_between(&blown, v1, v4)?;
            add_edge_list(&g, outer_pairs(&[(1, 5), (2, 6), (3, 7), (4, 8)]))
        }
        KFamily::H3 => add_edge_list(&blown.graph, outer_pairs(&[(1, 5), (2, 6), (4, 8)])),
    }
}

/// Builds the 3-graph with vertex 0 as `x`, link of `x` equal to `link`
/// (shifted by one), and every triple avoiding `x` an edge iff it spans at
/// most one link edge.
fn hypergraph_from_link(link: &Graph) -> TriGraph {
    let k = link.n();
    let mut edges = Vec::new();
    for (a, b) in link.edges() {
        edges.push([0, a + 1, b + 1]);
    }
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                let spanned = usize::from(link.has_edge(a, b))
                    + usize::from(link.has_edge(a, c))
                    + usize::from(link.has_edge(b, c));
                if spanned <= 1 {
                    edges.push([a + 1, b + 1, c + 1]);
                }
            }
        }
    }
    let labels = std::iter::once("x".to_string())
        .chain(link.class_of().expect("link graphs are labelled").iter().cloned())
        .collect();
    TriGraph::new(k + 1, edges)
        .and_then(|h| h.with_distinguished(0))
        .and_then(|h| h.with_classes(labels))
        .expect("link construction yields a simple 3-graph")
}

/// `H1`, `H2` or `H3` with parameter `m >= 1`.
pub fn construct_h(which: KFamily, m: usize) -> Result<TriGraph> {
    Ok(hypergraph_from_link(&k4_link(which, m)?))
}

/// The 3-partite 3-graph `T` on parts of sizes `(a, m, l)` with
/// `a <= m <= l`: the `i`-th round-robin matching of `K(V1, V2)` is joined to
/// the `i`-th vertex of `V3`.
pub fn construct_t(sizes: [usize; 3]) -> Result<TriGraph> {
    let [a, m, l] = sizes;
    if !(a <= m && m <= l) {
        return invalid(format!("T needs |V1| <= |V2| <= |V3|, got {a},{m},{l}"));
    }
    let edges = t_edges(sizes, 0)?;
    let labels = part_labels(sizes);
    TriGraph::new(a + m + l, edges)?.with_classes(labels)
}

/// Edges of `T` with its vertices shifted by `offset`.
fn t_edges([a, m, _]: [usize; 3], offset: usize) -> Result<Vec<[Vertex; 3]>> {
    let coloring = complete_bipartite_matchings(a, m)?;
    let third = offset + a + m;
    Ok(coloring
        .classes
        .iter()
        .enumerate()
        .flat_map(|(i, class)| class.iter().map(move |&(p, q)| [offset + p, offset + q, third + i]))
        .collect())
}

fn part_labels(sizes: [usize; 3]) -> Vec<String> {
    (0..3)
        .flat_map(|i| std::iter::repeat_n(format!("V{}", i + 1), sizes[i]))
        .collect()
}

/// Part sizes of `H4` on `n` vertices: the unique `(|V1|, |V2|, |V3|)` with
/// `m-1 <= |V1| <= |V2| = m <= |V3| <= m+1`, `|V3| - |V1| <= 1` and sum `n - 1`.
pub fn h4_part_sizes(n: usize) -> Result<[usize; 3]> {
    if n < 5 {
        return invalid(format!("H4 needs n >= 5, got {n}"));
    }
    let s = n - 1;
    Ok(match s % 3 {
        0 => [s / 3, s / 3, s / 3],
        1 => [(s - 1) / 3, (s - 1) / 3, (s - 1) / 3 + 1],
        _ => [(s + 1) / 3 - 1, (s + 1) / 3, (s + 1) / 3],
    })
}

/// Which part each non-`x` vertex of `H4` lies in (index 0 is `x`).
fn h4_part_of(sizes: [usize; 3]) -> Vec<Option<usize>> {
    std::iter::once(None)
        .chain((0..3).flat_map(|i| std::iter::repeat_n(Some(i), sizes[i])))
        .collect()
}

/// `H4` on `n >= 5` vertices with `x = 0`: `x` is joined to every pair from
/// different parts, every triple of `V1 ∪ V2 ∪ V3` that is not transversal is
/// an edge, and the transversal edges are those of `T`.
pub fn construct_h4(n: usize) -> Result<TriGraph> {
    let sizes = h4_part_sizes(n)?;
    let part = h4_part_of(sizes);
    let mut edges = Vec::new();
    for a in 1..n {
        for b in a + 1..n {
            if part[a] != part[b] {
                edges.push([0, a, b]);
            }
            for c in b + 1..n {
                let distinct = part[a] != part[b] && part[a] != part[c] && part[b] != part[c];
                if !distinct {
                    edges.push([a, b, c]);
                }
            }
        }
    }
    edges.extend(t_edges(sizes, 1)?);
    let labels = std::iter::once("x".to_string()).chain(part_labels(sizes)).collect();
    TriGraph::new(n, edges)?.with_distinguished(0)?.with_classes(labels)
}

/// A built construction with its labeling table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub id: ConstructionId,
    pub object: EdgeList,
    pub labeling: Vec<LabelEntry>,
}

/// Name of a vertex in the construction's own notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelEntry {
    pub label: String,
    pub vertex: Vertex,
}

/// Turns per-vertex class labels into unique names. Named single vertices
/// (`x` and the outer vertices `1`, `2`, ...) keep their label; members of a
/// class (`V1`, ... or a blown-up `v1`, ...) become `V1[i]`.
fn labeling_table(classes: &[String]) -> Vec<LabelEntry> {
    let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
    classes
        .iter()
        .enumerate()
        .map(|(vertex, c)| {
            let named = c == "x" || c.bytes().all(|b| b.is_ascii_digit());
            let label = if named {
                c.clone()
            } else {
                let i = seen.entry(c).or_insert(0);
                let label = format!("{}[{i}]", c.replacen('v', "V", 1));
                *i += 1;
                label
            };
            LabelEntry { label, vertex }
        })
        .collect()
}

pub fn build(id: ConstructionId) -> Result<Construction> {
    let object = match id {
        ConstructionId::G1 => EdgeList::Graph(base_graph(BaseGraph::G1)),
        ConstructionId::G2 => EdgeList::Graph(base_graph(BaseGraph::G2)),
        ConstructionId::G3 => EdgeList::Graph(base_graph(BaseGraph::G3)),
        ConstructionId::H1(m) => EdgeList::TriGraph(construct_h(KFamily::H1, m)?),
        ConstructionId::H2(m) => EdgeList::TriGraph(construct_h(KFamily::H2, m)?),
        ConstructionId::H3(m) => EdgeList::TriGraph(construct_h(KFamily::H3, m)?),
        ConstructionId::T(sizes) => EdgeList::TriGraph(construct_t(sizes)?),
        ConstructionId::H4(n) => EdgeList::TriGraph(construct_h4(n)?),
    };
    let classes = match &object {
        EdgeList::Graph(g) => g.class_of(),
        EdgeList::TriGraph(h) => h.classes(),
    };
    let labeling = labeling_table(classes.unwrap_or(&[]));
    Ok(Construction { id, object, labeling })
}

/// One named sub-check of a claim.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            pass,
            detail: detail.into(),
        }
    }
}

/// Result of checking a construction against its claimed properties.
/// `pass` holds exactly when every entry of `checks` passes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub construction: ConstructionId,
    pub n: usize,
    pub pattern: Option<String>,
    pub expected_delta2: Option<usize>,
    pub measured_delta2: Option<usize>,
    pub link_triangle_free: Option<bool>,
    pub link_degree_profile: Option<BTreeMap<usize, usize>>,
    pub observation1: Option<bool>,
    pub x_uncovered: Option<bool>,
    pub checks: Vec<Check>,
    pub labeling: Vec<LabelEntry>,
    pub pass: bool,
}

impl ClaimReport {
    fn new(id: ConstructionId, n: usize, labeling: Vec<LabelEntry>) -> Self {
        Self {
            construction: id,
            n,
            pattern: None,
            expected_delta2: None,
            measured_delta2: None,
            link_triangle_free: None,
            link_degree_profile: None,
            observation1: None,
            x_uncovered: None,
            checks: Vec::new(),
            labeling,
            pass: false,
        }
    }

    fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    fn finish(mut self) -> Self {
        self.pass = !self.checks.is_empty() && self.checks.iter().all(|c| c.pass);
        self
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Builds the construction and checks its claimed properties.
pub fn verify_claim(id: ConstructionId) -> Result<ClaimReport> {
    let c = build(id)?;
    verify_object(id, &c.object)
}

/// Checks an already-built object (possibly read from a file, possibly
/// altered) against the claims for `id`.
pub fn verify_object(id: ConstructionId, object: &EdgeList) -> Result<ClaimReport> {
    let classes = match object {
        EdgeList::Graph(g) => g.class_of(),
        EdgeList::TriGraph(h) => h.classes(),
    };
    let labeling = labeling_table(classes.unwrap_or(&[]));
    match (id, object) {
        (ConstructionId::G1 | ConstructionId::G2 | ConstructionId::G3, EdgeList::Graph(g)) => {
            Ok(verify_base(id, g, labeling))
        }
        (ConstructionId::H1(m), EdgeList::TriGraph(h)) => verify_k4(id, KFamily::H1, m, h, labeling),
        (ConstructionId::H2(m), EdgeList::TriGraph(h)) => verify_k4(id, KFamily::H2, m, h, labeling),
        (ConstructionId::H3(m), EdgeList::TriGraph(h)) => verify_k4(id, KFamily::H3, m, h, labeling),
        (ConstructionId::T(sizes), EdgeList::TriGraph(h)) => Ok(verify_t(id, sizes, h, labeling)),
        (ConstructionId::H4(n), EdgeList::TriGraph(h)) => verify_h4(id, n, h, labeling),
        _ => invalid(format!("{id} does not match a {}-graph", object.uniformity())),
    }
}

fn verify_base(id: ConstructionId, g: &Graph, labeling: Vec<LabelEntry>) -> ClaimReport {
    let (n, m) = match id {
        ConstructionId::G1 => (11, 21),
        ConstructionId::G2 => (14, 30),
        _ => (15, 35),
    };
    let mut r = ClaimReport::new(id, g.n(), labeling);
    r.push(Check::new(
        "vertex_count",
        g.n() == n,
        format!("{} (expected {n})", g.n()),
    ));
    r.push(Check::new(
        "edge_count",
        g.edge_count() == m,
        format!("{} (expected {m})", g.edge_count()),
    ));
    let tri = g.find_triangle();
    r.push(Check::new("triangle_free", tri.is_none(), format!("{tri:?}")));
    r.finish()
}

fn verify_t(id: ConstructionId, sizes: [usize; 3], h: &TriGraph, labeling: Vec<LabelEntry>) -> ClaimReport {
    let mut r = ClaimReport::new(id, h.n(), labeling);
    let total: usize = sizes.iter().sum();
    r.push(Check::new(
        "vertex_count",
        h.n() == total,
        format!("{} (expected {total})", h.n()),
    ));
    let part: Vec<usize> = (0..3).flat_map(|i| std::iter::repeat_n(i, sizes[i])).collect();
    let partite = h.n() == total
        && h.edges()
            .iter()
            .all(|e| part[e[0]] == 0 && part[e[1]] == 1 && part[e[2]] == 2);
    r.push(Check::new("tripartite", partite, "every edge meets V1, V2, V3 once"));
    let max = (0..h.n())
        .flat_map(|a| (a + 1..h.n()).map(move |b| (a, b)))
        .map(|(a, b)| h.codegree_unchecked(a, b))
        .max()
        .unwrap_or(0);
    r.push(Check::new(
        "max_codegree_at_most_1",
        max <= 1,
        format!("max codegree {max}"),
    ));
    let expected_edges = sizes[0] * sizes[1];
    r.push(Check::new(
        "edge_count",
        h.edge_count() == expected_edges,
        format!("{} (expected |V1||V2| = {expected_edges})", h.edge_count()),
    ));
    r.finish()
}

/// Shared checks: minimum codegree and whether `x` is covered.
fn codegree_and_cover(r: &mut ClaimReport, h: &TriGraph, x: Vertex, expected: usize, f: &Pattern) -> Result<()> {
    r.pattern = Some(f.name().to_string());
    r.expected_delta2 = Some(expected);
    let profile = h.min_codegree()?;
    r.measured_delta2 = Some(profile.min);
    r.push(Check::new(
        "delta2",
        profile.min == expected,
        match profile.argmin_pairs.first() {
            Some((a, b)) => format!("measured {} expected {expected}; minimum at pair {a},{b}", profile.min),
            None => format!("measured {} expected {expected}", profile.min),
        },
    ));

    let witness = covered_at(h, x, f)?;
    let uncovered = witness.is_none();
    r.x_uncovered = Some(uncovered);
    r.push(Check::new(
        "x_uncovered",
        uncovered,
        match &witness {
            Some(phi) => format!("x lies in a copy of {f}: {phi:?}"),
            None => format!("x lies in no copy of {f}"),
        },
    ));
    if let Some(missing) = f.missing_from_complete() {
        let direct = covered_by_near_complete(h, x, f.t(), missing)?.is_none();
        r.push(Check::new(
            "direct_check_agrees",
            direct == uncovered,
            format!("direct {t}-set scan says uncovered = {direct}", t = f.t()),
        ));
    }
    Ok(())
}

fn verify_k4(
    id: ConstructionId,
    which: KFamily,
    m: usize,
    h: &TriGraph,
    labeling: Vec<LabelEntry>,
) -> Result<ClaimReport> {
    if m < 1 {
        return invalid(format!("m must be at least 1, got {m}"));
    }
    let n = match which {
        KFamily::H1 => 6 * m,
        KFamily::H2 => 6 * m + 3,
        KFamily::H3 => 6 * m + 4,
    };
    let expected = match which {
        KFamily::H1 => 2 * m,
        KFamily::H2 | KFamily::H3 => 2 * m + 1,
    };
    debug_assert_eq!(expected, k4_minus_threshold(n));
    let x = h.distinguished().unwrap_or(0);
    let mut r = ClaimReport::new(id, h.n(), labeling);
    r.push(Check::new(
        "vertex_count",
        h.n() == n,
        format!("{} (expected {n})", h.n()),
    ));
    if h.n() != n {
        return Ok(r.finish());
    }

    let link = h.link_graph(x)?;
    let tri = link.graph.find_triangle();
    r.link_triangle_free = Some(tri.is_none());
    r.push(Check::new(
        "link_triangle_free",
        tri.is_none(),
        match tri {
            Some(t) => format!("triangle {:?}", t.map(|i| link.index_map[i])),
            None => "no triangle".to_string(),
        },
    ));

    let hist = link.graph.degree_histogram();
    let expected_hist: BTreeMap<usize, usize> = match which {
        KFamily::H1 => BTreeMap::from([(2 * m, n - 1)]),
        KFamily::H2 => BTreeMap::from([(2 * m + 1, n - 1)]),
        KFamily::H3 => BTreeMap::from([(2 * m + 1, n - 2), (2 * m + 2, 1)]),
    };
    let mut profile_ok = hist == expected_hist;
    if which == KFamily::H3 && x == 0 {
        // Outer vertex 1 is the one of higher degree.
        profile_ok &= link.local(1).is_some_and(|i| link.graph.degree(i) == 2 * m + 2);
    }
    r.push(Check::new(
        "link_degree_profile",
        profile_ok,
        format!("degree histogram {hist:?}, expected {expected_hist:?}"),
    ));
    r.link_degree_profile = Some(hist);

    let obs = observation1(h, x)?;
    r.observation1 = Some(obs.holds());
    r.push(Check::new(
        "observation1",
        obs.holds(),
        match &obs {
            Observation1::Holds => "link triangle-free and no edge spans two link edges".to_string(),
            other => format!("{other:?}"),
        },
    ));

    let f = Pattern::builtin("K4-")?;
    codegree_and_cover(&mut r, h, x, expected, &f)?;
    if obs.holds() {
        r.push(Check::new(
            "observation1_implies_uncovered",
            r.x_uncovered == Some(true),
            "obstruction at x agrees with the embedding search",
        ));
    }
    Ok(r.finish())
}

fn verify_h4(id: ConstructionId, n: usize, h: &TriGraph, labeling: Vec<LabelEntry>) -> Result<ClaimReport> {
    let sizes = h4_part_sizes(n)?;
    let mut r = ClaimReport::new(id, h.n(), labeling);
    r.push(Check::new(
        "vertex_count",
        h.n() == n,
        format!("{} (expected {n})", h.n()),
    ));
    if h.n() != n {
        return Ok(r.finish());
    }
    let x = h.distinguished().unwrap_or(0);
    let expected = k5_minus_threshold(n);

    let link = h.link_graph(x)?;
    r.link_triangle_free = Some(link.graph.is_triangle_free());
    let hist = link.graph.degree_histogram();
    let mut expected_hist = BTreeMap::new();
    for &size in &sizes {
        if size > 0 {
            *expected_hist.entry(n - 1 - size).or_insert(0) += size;
        }
    }
    r.push(Check::new(
        "link_degree_profile",
        hist == expected_hist,
        format!("degree histogram {hist:?}, expected {expected_hist:?}"),
    ));
    r.link_degree_profile = Some(hist);

    // Per-pair codegree formulas, with d_T taken from an independently built T.
    let t = construct_t(sizes)?;
    let part = h4_part_of(sizes);
    let mut bad = Vec::new();
    let mut checked = 0;
    for a in 0..n {
        for b in a + 1..n {
            let want = match (part[a], part[b]) {
                (None, Some(i)) | (Some(i), None) => n - 1 - sizes[i],
                (Some(i), Some(j)) if i == j => n - 3,
                (Some(i), Some(j)) => sizes[i] + sizes[j] - 1 + t.codegree_unchecked(a - 1, b - 1),
                (None, None) => unreachable!("only one x"),
            };
            checked += 1;
            let got = h.codegree_unchecked(a, b);
            if got != want {
                bad.push((a, b, got, want));
            }
        }
    }
    r.push(Check::new(
        "pair_codegree_formulas",
        bad.is_empty(),
        match bad.first() {
            None => format!("all {checked} pairs match"),
            Some((a, b, got, want)) => {
                format!("{} pairs differ, first ({a},{b}): {got} vs {want}", bad.len())
            }
        },
    ));

    let f = Pattern::builtin("K5-")?;
    codegree_and_cover(&mut r, h, x, expected, &f)?;
    Ok(r.finish())
}

/// A hypergraph certifying `c2(n, F) >= delta2(H)` for `F = K4-` or `K5-`,
/// with its verification report.
pub fn lower_bound_certificate(n: usize, f: &Pattern) -> Result<(TriGraph, ClaimReport)> {
    let id = match f.name() {
        "K4-" => match n % 6 {
            0 if n >= 6 => ConstructionId::H1(n / 6),
            3 if n >= 9 => ConstructionId::H2(n / 6),
            4 if n >= 10 => ConstructionId::H3(n / 6),
            0 | 3 | 4 => return invalid(format!("no K4- construction for n = {n}; need n >= 6")),
            residue => return Err(Error::UnsupportedResidue { n, residue }),
        },
        "K5-" => ConstructionId::H4(n),
        other => return invalid(format!("lower-bound constructions exist for K4- and K5-, not {other}")),
    };
    let c = build(id)?;
    let report = verify_object(id, &c.object)?;
    match c.object {
        EdgeList::TriGraph(h) => Ok((h, report)),
        EdgeList::Graph(_) => unreachable!("H constructions are 3-graphs"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_graph_shapes() {
        for (which, n, m) in [
            (BaseGraph::G1, 11, 21),
            (BaseGraph::G2, 14, 30),
            (BaseGraph::G3, 15, 35),
        ] {
            let g = base_graph(which);
            assert_eq!((g.n(), g.edge_count()), (n, m), "{which:?}");
            assert!(g.is_triangle_free(), "{which:?}");
        }
    }

    #[test]
    fn g1_v1_degree() {
        let g = base_graph(BaseGraph::G1);
        let v1 = 5;
        assert_eq!(g.class_of().unwrap()[v1], "v1");
        // v2, v6 and outer 1.
        let names: Vec<_> = g
            .neighbors(v1)
            .iter()
            .map(|&u| g.class_of().unwrap()[u].clone())
            .collect();
        assert_eq!(names, vec!["1", "v2", "v6"]);
    }

    #[test]
    fn g3_vertex_nine() {
        let g = base_graph(BaseGraph::G3);
        let names: Vec<_> = g
            .neighbors(8)
            .iter()
            .map(|&u| g.class_of().unwrap()[u].clone())
            .collect();
        assert_eq!(names, vec!["1", "3", "7", "v2", "v5"]);
    }

    #[test]
    fn h1_small() {
        let h = construct_h(KFamily::H1, 1).unwrap();
        assert_eq!(h.n(), 6);
        let link = h.link_graph(0).unwrap();
        assert_eq!(
            link.graph.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
        );
        for a in 1..6 {
            assert_eq!(h.codegree(0, a).unwrap(), 2);
        }
        assert_eq!(h.delta2(), 2);
    }

    #[test]
    fn h3_vertex_one() {
        let h = construct_h(KFamily::H3, 2).unwrap();
        assert_eq!(h.n(), 16);
        assert_eq!(h.codegree(0, 1).unwrap(), 6);
        assert_eq!(h.delta2(), 5);
        let link = construct_h(KFamily::H3, 1).unwrap().link_graph(0).unwrap();
        assert_eq!(link.graph.degree_histogram(), BTreeMap::from([(3, 8), (4, 1)]));
        assert_eq!(link.graph.degree(0), 4);
    }

    #[test]
    fn h4_sizes() {
        assert_eq!(h4_part_sizes(5).unwrap(), [1, 1, 2]);
        assert_eq!(h4_part_sizes(7).unwrap(), [2, 2, 2]);
        assert_eq!(h4_part_sizes(9).unwrap(), [2, 3, 3]);
        assert_eq!(h4_part_sizes(10).unwrap(), [3, 3, 3]);
        assert!(h4_part_sizes(4).is_err());
        for n in 5..60 {
            let [a, b, c] = h4_part_sizes(n).unwrap();
            let m = b;
            assert!(m - 1 <= a && a <= m && m <= c && c <= m + 1 && c - a <= 1, "n = {n}");
            assert_eq!(a + b + c, n - 1);
        }
    }

    #[test]
    fn t_small() {
        let t = construct_t([1, 1, 2]).unwrap();
        assert_eq!(t.edges(), &[[0, 1, 2]]);
        let t = construct_t([2, 2, 2]).unwrap();
        for a in 0..2 {
            for b in 2..4 {
                assert_eq!(t.codegree(a, b).unwrap(), 1);
            }
        }
        assert!(construct_t([3, 2, 2]).is_err());
        assert!(construct_t([1, 3, 2]).is_err());
    }

    #[test]
    fn h4_x_codegrees() {
        let h = construct_h4(7).unwrap();
        assert_eq!(h.delta2(), 4);
        let sizes = h4_part_sizes(7).unwrap();
        for b in 1..7 {
            assert_eq!(h.codegree(0, b).unwrap(), 6 - sizes[(b - 1) / 2]);
        }
    }

    #[test]
    fn certificate_residues() {
        let f = Pattern::builtin("K4-").unwrap();
        let (h, r) = lower_bound_certificate(12, &f).unwrap();
        assert_eq!(r.construction, ConstructionId::H1(2));
        assert_eq!(h.delta2(), 4);
        let (_, r) = lower_bound_certificate(10, &f).unwrap();
        assert_eq!(r.construction, ConstructionId::H3(1));
        assert_eq!(r.measured_delta2, Some(3));
        assert!(matches!(
            lower_bound_certificate(8, &f),
            Err(Error::UnsupportedResidue { n: 8, residue: 2 })
        ));
        assert!(lower_bound_certificate(7, &Pattern::complete(4)).is_err());
    }

    #[test]
    fn labeling_names() {
        let c = build(ConstructionId::H1(2)).unwrap();
        let labels: Vec<_> = c.labeling.iter().map(|e| e.label.as_str()).collect();
        assert_eq!(&labels[..7], &["x", "1", "2", "3", "4", "5", "V1[0]"]);
        assert_eq!(labels.len(), 12);
    }

    #[test]
    fn mutated_h1_fails() {
        let h = construct_h(KFamily::H1, 2).unwrap();
        let e = *h.edges().iter().find(|e| e[0] == 0).unwrap();
        let bad = h.without_edge(e).unwrap();
        let r = verify_object(ConstructionId::H1(2), &EdgeList::TriGraph(bad)).unwrap();
        assert!(!r.pass);
        assert_eq!(r.measured_delta2, Some(3));
        assert!(r.failed_checks().any(|c| c.name == "delta2"));
    }
}
