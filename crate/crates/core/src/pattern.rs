//! Small 3-graphs used as covering targets.

use std::fmt;

use crate::error::{invalid, Result};

/// A 3-graph on pattern vertices `0..t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    name: String,
    t: usize,
    edges: Vec<[usize; 3]>,
}

impl Pattern {
    /// A pattern from arbitrary triples over `0..t`; triples are sorted and
    /// deduplicated.
    pub fn new(name: impl Into<String>, t: usize, edges: Vec<[usize; 3]>) -> Result<Self> {
        let mut sorted = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            if e[0] == e[1] || e[1] == e[2] || e[2] >= t {
                return invalid(format!("pattern edge {e:?} invalid for t = {t}"));
            }
            sorted.push(e);
        }
        sorted.sort_unstable();
        sorted.dedup();
        Ok(Self {
            name: name.into(),
            t,
            edges: sorted,
        })
    }

    /// `K_t`, all triples of `0..t`.
    pub fn complete(t: usize) -> Self {
        Self {
            name: format!("K{t}"),
            t,
            edges: all_triples(t),
        }
    }

    /// `K_t-`, all triples of `0..t` except `{0, 1, 2}`.
    pub fn complete_minus(t: usize) -> Result<Self> {
        if t < 4 {
            return invalid(format!("K_t- needs t >= 4, got {t}"));
        }
        Ok(Self {
            name: format!("K{t}-"),
            t,
            edges: all_triples(t).into_iter().skip(1).collect(),
        })
    }

    /// Resolves `K4`, `K4-`, `K5`, `K5-`, `Kt:<t>` and `Kt-:<t>`.
    pub fn builtin(name: &str) -> Result<Self> {
        let parse_t = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| crate::Error::InvalidArgument(format!("bad pattern size in {name:?}")))
        };
        match name {
            "K4" => Ok(Self::complete(4)),
            "K5" => Ok(Self::complete(5)),
            "K4-" => Self::complete_minus(4),
            "K5-" => Self::complete_minus(5),
            _ => {
                if let Some(t) = name.strip_prefix("Kt-:") {
                    Self::complete_minus(parse_t(t)?)
                } else if let Some(t) = name.strip_prefix("Kt:") {
                    let t = parse_t(t)?;
                    if t < 3 {
                        return invalid(format!("K_t needs t >= 3, got {t}"));
                    }
                    Ok(Self::complete(t))
                } else {
                    invalid(format!("unknown pattern {name:?}"))
                }
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn edges(&self) -> &[[usize; 3]] {
        &self.edges
    }

    pub fn contains(&self, a: usize, b: usize, c: usize) -> bool {
        let mut e = [a, b, c];
        e.sort_unstable();
        self.edges.binary_search(&e).is_ok()
    }

    pub fn codegree(&self, a: usize, b: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(&a) && e.contains(&b)).count()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.contains(&v)).count()
    }

    /// `Some(missing)` when the pattern is `K_t` (0) or `K_t` minus one edge
    /// (1); `None` otherwise.
    pub fn missing_from_complete(&self) -> Option<usize> {
        let total = self.t * self.t.saturating_sub(1) * self.t.saturating_sub(2) / 6;
        match total - self.edges.len() {
            m @ (0 | 1) => Some(m),
            _ => None,
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

pub(crate) fn all_triples(t: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..t {
        for b in a + 1..t {
            for c in b + 1..t {
                out.push([a, b, c]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_sizes() {
        let k4m = Pattern::builtin("K4-").unwrap();
        assert_eq!((k4m.t(), k4m.edges().len()), (4, 3));
        let k5m = Pattern::builtin("K5-").unwrap();
        assert_eq!((k5m.t(), k5m.edges().len()), (5, 9));
        let k4 = Pattern::builtin("K4").unwrap();
        assert_eq!((k4.t(), k4.edges().len()), (4, 4));
        assert_eq!(Pattern::builtin("Kt:6").unwrap().edges().len(), 20);
        assert_eq!(Pattern::builtin("Kt-:6").unwrap().edges().len(), 19);
    }

    #[test]
    fn removed_edge_is_first_triple() {
        let p = Pattern::builtin("K5-").unwrap();
        assert!(!p.contains(2, 0, 1));
        assert!(p.contains(0, 1, 3));
        assert_eq!(p.missing_from_complete(), Some(1));
        assert_eq!(Pattern::complete(5).missing_from_complete(), Some(0));
    }

    #[test]
    fn unknown_names_rejected() {
        for bad in ["K3-", "K6", "Kt-:3", "Kt:x", "triangle"] {
            assert!(Pattern::builtin(bad).is_err(), "{bad}");
        }
    }
}
