//! The edge-list text format and its JSON mirror.
//!
//! ```text
//! # comment lines start with '#'
//! HG 3 <n> <edge_count>
//! X <x>                 (optional, 3-graphs only)
//! CLASS <vertex> <label>  (optional; if present, one line per vertex)
//! <a> <b> <c>           (one edge per line, strictly increasing indices)
//! ```
//!
//! `HG 2` files carry 2-graphs with `<a> <b>` edge lines. Output of the
//! writers is canonical: header, `X`, `CLASS` lines by vertex, then edges in
//! lexicographic order, LF-terminated. Parsing a written file and writing it
//! again reproduces the same bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::trigraph::TriGraph;
use crate::Vertex;

/// Contents of an edge-list file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeList {
    Graph(Graph),
    TriGraph(TriGraph),
}

impl EdgeList {
    pub fn uniformity(&self) -> usize {
        match self {
            EdgeList::Graph(_) => 2,
            EdgeList::TriGraph(_) => 3,
        }
    }
}

pub fn write_trigraph(h: &TriGraph) -> String {
    let mut out = String::new();
    writeln!(out, "HG 3 {} {}", h.n(), h.edge_count()).unwrap();
    if let Some(x) = h.distinguished() {
        writeln!(out, "X {x}").unwrap();
    }
    write_classes(&mut out, h.classes());
    for [a, b, c] in h.edges() {
        writeln!(out, "{a} {b} {c}").unwrap();
    }
    out
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "HG 2 {} {}", g.n(), g.edge_count()).unwrap();
    write_classes(&mut out, g.class_of());
    for (a, b) in g.edges() {
        writeln!(out, "{a} {b}").unwrap();
    }
    out
}

pub fn write(list: &EdgeList) -> String {
    match list {
        EdgeList::Graph(g) => write_graph(g),
        EdgeList::TriGraph(h) => write_trigraph(h),
    }
}

fn write_classes(out: &mut String, classes: Option<&[String]>) {
    for (v, label) in classes.into_iter().flatten().enumerate() {
        writeln!(out, "CLASS {v} {label}").unwrap();
    }
}

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

fn parse_index(tok: &str, line: usize) -> Result<usize> {
    // Leading '+' and zeros would not survive a round trip.
    let canonical = !tok.is_empty() && tok.bytes().all(|b| b.is_ascii_digit()) && (tok == "0" || !tok.starts_with('0'));
    match tok.parse() {
        Ok(v) if canonical => Ok(v),
        _ => parse_err(line, format!("expected a non-negative integer, got {tok:?}")),
    }
}

/// Parses an `HG 2` or `HG 3` edge-list document.
pub fn parse(text: &str) -> Result<EdgeList> {
    let mut lines = text
        .split('\n')
        .enumerate()
        .map(|(i, l)| (i + 1, l.strip_suffix('\r').unwrap_or(l)))
        .filter(|(_, l)| !l.starts_with('#') && !l.trim().is_empty());

    let Some((hline, header)) = lines.next() else {
        return parse_err(1, "missing HG header");
    };
    let toks: Vec<&str> = header.split(' ').collect();
    if toks.len() != 4 || toks[0] != "HG" {
        return parse_err(hline, "header must be `HG <k> <n> <edge_count>`");
    }
    let k = parse_index(toks[1], hline)?;
    let n = parse_index(toks[2], hline)?;
    let m = parse_index(toks[3], hline)?;
    if k != 2 && k != 3 {
        return parse_err(hline, format!("unsupported uniformity {k}"));
    }

    let mut distinguished = None;
    let mut classes: BTreeMap<Vertex, String> = BTreeMap::new();
    let mut edges: Vec<Vec<Vertex>> = Vec::with_capacity(m);
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split(' ').collect();
        match toks[0] {
            "X" => {
                if k != 3 {
                    return parse_err(ln, "X line only allowed in 3-graph files");
                }
                if toks.len() != 2 || distinguished.is_some() || !edges.is_empty() {
                    return parse_err(ln, "X line must appear once, before edges, as `X <v>`");
                }
                let x = parse_index(toks[1], ln)?;
                if x >= n {
                    return parse_err(ln, format!("X vertex {x} out of range"));
                }
                distinguished = Some(x);
            }
            "CLASS" => {
                if toks.len() != 3 || !edges.is_empty() {
                    return parse_err(ln, "CLASS line must be `CLASS <v> <label>` before edges");
                }
                let v = parse_index(toks[1], ln)?;
                if v >= n {
                    return parse_err(ln, format!("CLASS vertex {v} out of range"));
                }
                if toks[2].is_empty() || classes.insert(v, toks[2].to_string()).is_some() {
                    return parse_err(ln, format!("bad or repeated CLASS for vertex {v}"));
                }
            }
            _ => {
                if toks.len() != k {
                    return parse_err(ln, format!("edge line must have {k} indices"));
                }
                let e = toks.iter().map(|t| parse_index(t, ln)).collect::<Result<Vec<_>>>()?;
                if e.windows(2).any(|w| w[0] >= w[1]) {
                    return parse_err(ln, "edge indices must be strictly increasing");
                }
                if e[k - 1] >= n {
                    return parse_err(ln, "edge vertex out of range");
                }
                if edges.last().is_some_and(|prev| *prev >= e) {
                    return parse_err(ln, "edges must be listed once in lexicographic order");
                }
                edges.push(e);
            }
        }
    }
    if edges.len() != m {
        return parse_err(hline, format!("header announces {m} edges, found {}", edges.len()));
    }
    if !classes.is_empty() && classes.len() != n {
        return parse_err(hline, format!("CLASS lines cover {} of {n} vertices", classes.len()));
    }
    let labels = (!classes.is_empty()).then(|| classes.into_values().collect::<Vec<_>>());

    if k == 2 {
        let mut g = Graph::from_edges(n, edges.iter().map(|e| (e[0], e[1])))?;
        if let Some(l) = labels {
            g = g.with_classes(l)?;
        }
        Ok(EdgeList::Graph(g))
    } else {
        let mut h = TriGraph::new(n, edges.iter().map(|e| [e[0], e[1], e[2]]))?;
        if let Some(x) = distinguished {
            h = h.with_distinguished(x)?;
        }
        if let Some(l) = labels {
            h = h.with_classes(l)?;
        }
        Ok(EdgeList::TriGraph(h))
    }
}

pub fn parse_trigraph(text: &str) -> Result<TriGraph> {
    match parse(text)? {
        EdgeList::TriGraph(h) => Ok(h),
        EdgeList::Graph(_) => parse_err(1, "expected an HG 3 file"),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    match parse(text)? {
        EdgeList::Graph(g) => Ok(g),
        EdgeList::TriGraph(_) => parse_err(1, "expected an HG 2 file"),
    }
}

/// JSON form of an edge-list document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeListJson {
    pub uniformity: usize,
    pub n: usize,
    pub edges: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distinguished: Option<Vertex>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<String>>,
}

impl From<&EdgeList> for EdgeListJson {
    fn from(list: &EdgeList) -> Self {
        match list {
            EdgeList::Graph(g) => EdgeListJson {
                uniformity: 2,
                n: g.n(),
                edges: g.edges().map(|(a, b)| vec![a, b]).collect(),
                distinguished: None,
                classes: g.class_of().map(<[String]>::to_vec),
            },
            EdgeList::TriGraph(h) => EdgeListJson {
                uniformity: 3,
                n: h.n(),
                edges: h.edges().iter().map(|e| e.to_vec()).collect(),
                distinguished: h.distinguished(),
                classes: h.classes().map(<[String]>::to_vec),
            },
        }
    }
}

impl TryFrom<EdgeListJson> for EdgeList {
    type Error = Error;

    fn try_from(j: EdgeListJson) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            line: 0,
            msg: msg.to_string(),
        };
        if j.edges.iter().any(|e| e.len() != j.uniformity) {
            return Err(bad("edge arity does not match uniformity"));
        }
        match j.uniformity {
            2 => {
                if j.distinguished.is_some() {
                    return Err(bad("distinguished vertex only allowed for 3-graphs"));
                }
                let mut g = Graph::from_edges(j.n, j.edges.iter().map(|e| (e[0], e[1])))?;
                if let Some(l) = j.classes {
                    g = g.with_classes(l)?;
                }
                Ok(EdgeList::Graph(g))
            }
            3 => {
                let mut h = TriGraph::new(j.n, j.edges.iter().map(|e| [e[0], e[1], e[2]]))?;
                if let Some(x) = j.distinguished {
                    h = h.with_distinguished(x)?;
                }
                if let Some(l) = j.classes {
                    h = h.with_classes(l)?;
                }
                Ok(EdgeList::TriGraph(h))
            }
            k => Err(bad(&format!("unsupported uniformity {k}"))),
        }
    }
}

/// Pretty, key-sorted JSON for an edge-list document.
pub fn to_json(list: &EdgeList) -> String {
    let value = serde_json::to_value(EdgeListJson::from(list)).expect("plain data serializes");
    let mut s = serde_json::to_string_pretty(&value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<EdgeList> {
    let j: EdgeListJson = serde_json::from_str(text)?;
    EdgeList::try_from(j)
}
