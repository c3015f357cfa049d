//! Line-oriented input format.
//!
//! ```text
//! # comment
//! vertex <id> <weight> [genus <g>]
//! edge <id> <id>
//! ```
//!
//! or, as the only statement of a file, `seifert <e0> <p1>/<q1> <p2>/<q2> <p3>/<q3>`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{seifert_to_plumbing, GraphError, PlumbingGraph, SeifertData, Vertex};

/// A parsed input file: the graph, plus the Seifert data when the file was a
/// `seifert` line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub graph: PlumbingGraph,
    pub seifert: Option<SeifertData>,
}

pub fn parse_plumbing(text: &str) -> Result<PlumbingGraph, GraphError> {
    parse_document(text).map(|d| d.graph)
}

pub fn parse_document(text: &str) -> Result<Document, GraphError> {
    let mut vertices = Vec::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut seifert: Option<(usize, SeifertData)> = None;
    let mut first_graph_line = None;

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&head, args)) = tokens.split_first() else {
            continue;
        };
        let syntax = |message: String| GraphError::Syntax { line, message };
        match head {
            "vertex" => {
                let (id, weight, genus) = match args {
                    [id, w] => (id, w, None),
                    [id, w, "genus", g] => (id, w, Some(g)),
                    _ => return Err(syntax("expected `vertex <id> <weight> [genus <g>]`".into())),
                };
                let weight = i64::from_str(weight)
                    .map_err(|_| syntax(format!("invalid weight `{weight}`")))?;
                let genus = match genus {
                    Some(g) => {
                        u32::from_str(g).map_err(|_| syntax(format!("invalid genus `{g}`")))?
                    }
                    None => 0,
                };
                first_graph_line.get_or_insert(line);
                vertices.push(Vertex::new(*id, weight).with_genus(genus));
            }
            "edge" => {
                let [a, b] = args else {
                    return Err(syntax("expected `edge <id> <id>`".into()));
                };
                first_graph_line.get_or_insert(line);
                edges.push((a.to_string(), b.to_string()));
            }
            "seifert" => {
                if seifert.is_some() {
                    return Err(syntax("more than one `seifert` statement".into()));
                }
                let [e0, r1, r2, r3] = args else {
                    return Err(syntax(
                        "expected `seifert <e0> <p1>/<q1> <p2>/<q2> <p3>/<q3>`".into(),
                    ));
                };
                let e0 = i64::from_str(e0).map_err(|_| syntax(format!("invalid e0 `{e0}`")))?;
                let r = [r1, r2, r3].map(|t| parse_fraction(t));
                let [Some(r1), Some(r2), Some(r3)] = r else {
                    return Err(syntax("Seifert invariants must be fractions p/q".into()));
                };
                let data = SeifertData::new(e0, [r1, r2, r3]).map_err(|e| syntax(e.to_string()))?;
                seifert = Some((line, data));
            }
            other => return Err(syntax(format!("unknown statement `{other}`"))),
        }
    }

    match seifert {
        Some((line, data)) => {
            if let Some(other) = first_graph_line {
                return Err(GraphError::Syntax {
                    line: line.max(other),
                    message: "`seifert` cannot be mixed with vertex/edge statements".into(),
                });
            }
            let graph = seifert_to_plumbing(&data)?;
            Ok(Document {
                graph,
                seifert: Some(data),
            })
        }
        None => {
            if vertices.is_empty() && edges.is_empty() {
                return Err(GraphError::Syntax {
                    line: 0,
                    message: "empty document".into(),
                });
            }
            let graph = PlumbingGraph::new(vertices, &edges)?;
            Ok(Document {
                graph,
                seifert: None,
            })
        }
    }
}

fn parse_fraction(token: &str) -> Option<BigRational> {
    let (p, q) = token.split_once('/')?;
    let p = BigInt::from_str(p).ok()?;
    let q = BigInt::from_str(q).ok()?;
    if q == BigInt::from(0) {
        return None;
    }
    Some(BigRational::new(p, q))
}
