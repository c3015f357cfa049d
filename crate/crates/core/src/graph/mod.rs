//! Weighted plumbing graphs, their text format, Hirzebruch–Jung continued
//! fractions and the star-shaped plumbing of a small Seifert fibred space.

mod continued_fraction;
pub mod families;
mod parse;
mod seifert;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

pub use continued_fraction::{hj_expansion, CfExpansion};
pub use parse::{parse_document, parse_plumbing, Document};
pub use seifert::{seifert_to_plumbing, SeifertData};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("duplicate vertex id {0}")]
    DuplicateId(String),
    #[error("dangling endpoint {0}")]
    DanglingEndpoint(String),
    #[error("self-loop at {0}")]
    SelfLoop(String),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(String, String),
    #[error("continued fraction needs a rational < -1, got {0}")]
    CfDomain(String),
    #[error("Seifert invariant {0} is not in the open interval (0,1)")]
    SeifertRange(String),
    #[error("weight {0} does not fit in a 64-bit integer")]
    WeightOverflow(String),
    #[error("vertex order is not a permutation of 0..{0}")]
    BadPermutation(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub id: String,
    pub weight: i64,
    pub genus: u32,
}

impl Vertex {
    pub fn new(id: impl Into<String>, weight: i64) -> Self {
        Vertex {
            id: id.into(),
            weight,
            genus: 0,
        }
    }

    pub fn with_genus(mut self, genus: u32) -> Self {
        self.genus = genus;
        self
    }
}

/// A finite weighted graph of curves. Vertex order is significant: it fixes
/// the row order of the intersection matrix and of every cycle.
///
/// Edges are stored as index pairs `(i, j)` with `i < j`, sorted, so two
/// graphs compare equal exactly when they have the same vertex list and the
/// same edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
}

impl PlumbingGraph {
    pub fn new<S: AsRef<str>>(vertices: Vec<Vertex>, edges: &[(S, S)]) -> Result<Self, GraphError> {
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.id.as_str(), i).is_some() {
                return Err(GraphError::DuplicateId(v.id.clone()));
            }
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let i = *index
                .get(a)
                .ok_or_else(|| GraphError::DanglingEndpoint(a.to_string()))?;
            let j = *index
                .get(b)
                .ok_or_else(|| GraphError::DanglingEndpoint(b.to_string()))?;
            if i == j {
                return Err(GraphError::SelfLoop(a.to_string()));
            }
            if !set.insert((i.min(j), i.max(j))) {
                return Err(GraphError::DuplicateEdge(a.to_string(), b.to_string()));
            }
        }
        Ok(PlumbingGraph {
            vertices,
            edges: set.into_iter().collect(),
        })
    }

    pub(crate) fn from_indices(vertices: Vec<Vertex>, edges: Vec<(usize, usize)>) -> Self {
        let set: BTreeSet<_> = edges
            .into_iter()
            .map(|(i, j)| (i.min(j), i.max(j)))
            .collect();
        PlumbingGraph {
            vertices,
            edges: set.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Vertex {
        &self.vertices[i]
    }

    /// Edges as sorted index pairs with the smaller index first.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weights(&self) -> Vec<i64> {
        self.vertices.iter().map(|v| v.weight).collect()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter_map(move |&(a, b)| {
            if a == i {
                Some(b)
            } else if b == i {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.len()];
        for &(a, b) in &self.edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in self.neighbors(i) {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.len()
    }

    /// Re-enumerates the vertices: position `k` of the result holds the
    /// vertex that sat at index `order[k]`.
    pub fn reordered(&self, order: &[usize]) -> Result<Self, GraphError> {
        let n = self.len();
        let mut inverse = vec![usize::MAX; n];
        if order.len() != n {
            return Err(GraphError::BadPermutation(n));
        }
        for (new, &old) in order.iter().enumerate() {
            if old >= n || inverse[old] != usize::MAX {
                return Err(GraphError::BadPermutation(n));
            }
            inverse[old] = new;
        }
        let vertices = order
            .iter()
            .map(|&old| self.vertices[old].clone())
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| (inverse[a], inverse[b]))
            .collect();
        Ok(Self::from_indices(vertices, edges))
    }

    /// Serializes to the line format: vertices in order, then edges sorted
    /// lexicographically by their (smaller id, larger id) pair.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            out.push_str(&format!("vertex {} {}", v.id, v.weight));
            if v.genus > 0 {
                out.push_str(&format!(" genus {}", v.genus));
            }
            out.push('\n');
        }
        for (a, b) in self.sorted_edge_ids() {
            out.push_str(&format!("edge {a} {b}\n"));
        }
        out
    }

    pub fn sorted_edge_ids(&self) -> Vec<(&str, &str)> {
        let mut pairs: Vec<(&str, &str)> = self
            .edges
            .iter()
            .map(|&(i, j)| {
                let (a, b) = (self.vertices[i].id.as_str(), self.vertices[j].id.as_str());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        pairs.sort_unstable();
        pairs
    }
}

impl fmt::Display for PlumbingGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Number of incident edges of every vertex, in vertex order.
pub fn vertex_degrees(g: &PlumbingGraph) -> Vec<usize> {
    g.degrees()
}
