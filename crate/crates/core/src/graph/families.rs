//! Named plumbing graphs with fixed vertex enumerations.
//!
//! The star-shaped families are enumerated left to right along the "top
//! row" of their usual picture with the remaining leg vertex last, which is
//! the order in which their fundamental cycles are customarily written.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{hj_expansion, seifert_to_plumbing, GraphError, PlumbingGraph, SeifertData, Vertex};

fn star(e0: i64, r: [(i64, i64); 3]) -> PlumbingGraph {
    let s = SeifertData::from_fractions(e0, r).expect("valid Seifert data");
    seifert_to_plumbing(&s).expect("small weights")
}

/// `Y(-2; 1/2, 1/2, 1/n)`: leaf, centre, leaf, then the `-n` vertex.
pub fn n_family(n: i64) -> PlumbingGraph {
    assert!(n >= 2);
    star(-2, [(1, 2), (1, 2), (1, n)])
        .reordered(&[1, 0, 2, 3])
        .unwrap()
}

/// `Y(-2; 1/2, 1/2, 1/2)`, the D4 graph, in the `n_family(2)` order.
pub fn d4() -> PlumbingGraph {
    n_family(2)
}

/// `Y(-2; 1/3, 1/3, (2k+1)/(2k+3))`: the first `-3` leaf, centre, the long
/// leg outwards, then the second `-3` leaf.
pub fn m_family(k: i64) -> PlumbingGraph {
    assert!(k >= 0);
    let g = star(-2, [(1, 3), (1, 3), (2 * k + 1, 2 * k + 3)]);
    let mut order = vec![1, 0];
    order.extend(3..g.len());
    order.push(2);
    g.reordered(&order).unwrap()
}

/// `Y(-2; 1/3, 2/3, p/(p+1))`: the `p` chain from its far end inwards,
/// centre, the `[-2,-2]` leg outwards, then the `-3` leaf.
pub fn gamma_family(p: i64) -> PlumbingGraph {
    assert!(p >= 2);
    let g = star(-2, [(1, 3), (2, 3), (p, p + 1)]);
    let mut order: Vec<usize> = (4..g.len()).rev().collect();
    order.extend([0, 2, 3, 1]);
    g.reordered(&order).unwrap()
}

/// `Y(-2; 1/(n+1), n/(n+1), n/(n+1))`: one `-2` chain from its far end
/// inwards, centre, the other chain outwards, then the `-(n+1)` leaf.
pub fn p_family(n: i64) -> PlumbingGraph {
    assert!(n >= 2);
    let g = star(-2, [(1, n + 1), (n, n + 1), (n, n + 1)]);
    let n = n as usize;
    let mut order: Vec<usize> = (2..n + 2).rev().collect();
    order.push(0);
    order.extend(n + 2..2 * n + 2);
    order.push(1);
    g.reordered(&order).unwrap()
}

pub fn e6() -> PlumbingGraph {
    star(-2, [(1, 2), (2, 3), (2, 3)])
}

pub fn e7() -> PlumbingGraph {
    star(-2, [(1, 2), (2, 3), (3, 4)])
}

pub fn e8() -> PlumbingGraph {
    star(-2, [(1, 2), (2, 3), (4, 5)])
}

/// Linear chain of the continued fraction of `-p/q`, the plumbing of the
/// lens space `L(p, q)`. Vertex ids are `u1, u2, ...`.
pub fn lens_chain(p: i64, q: i64) -> Result<PlumbingGraph, GraphError> {
    let cf = hj_expansion(&BigRational::new(BigInt::from(-p), BigInt::from(q)))?;
    let weights = cf
        .to_i64()
        .ok_or_else(|| GraphError::WeightOverflow(format!("-{p}/{q}")))?;
    Ok(chain(&weights))
}

/// Linear chain with the given weights, ids `u1, u2, ...`.
pub fn chain(weights: &[i64]) -> PlumbingGraph {
    let vertices = weights
        .iter()
        .enumerate()
        .map(|(i, &w)| Vertex::new(format!("u{}", i + 1), w))
        .collect();
    let edges = (1..weights.len()).map(|i| (i - 1, i)).collect();
    PlumbingGraph::from_indices(vertices, edges)
}
