//! Fundamental cycle, Artin's rationality criterion and bad vertices.

use std::fmt;

use thiserror::Error;

use crate::graph::PlumbingGraph;
use crate::lattice::{intersection_matrix, is_negative_definite};

pub const DEFAULT_COEFF_CAP: i64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("vertex {0} has positive genus")]
    HigherGenus(String),
    #[error("graph is empty")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph contains a cycle")]
    NotATree,
    #[error("intersection form is not negative definite")]
    NotNegativeDefinite,
    #[error("coefficient at vertex {vertex} exceeded the cap {cap}")]
    CapExceeded { vertex: String, cap: i64 },
    #[error("scan order is not a permutation of the vertices")]
    BadOrder,
    #[error("cycle has {got} coefficients, graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
}

/// Divisor `Z = sum z_i E_i` on the exceptional curves, indexed in vertex
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(Vec<i64>);

impl Cycle {
    pub fn new(coefficients: Vec<i64>) -> Self {
        Cycle(coefficients)
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(Z . E_i)_i`, i.e. the intersection matrix applied to `z`.
    pub fn dot_vertices(&self, g: &PlumbingGraph) -> Result<Vec<i128>, CycleError> {
        if self.len() != g.len() {
            return Err(CycleError::LengthMismatch {
                expected: g.len(),
                got: self.len(),
            });
        }
        Ok(pairing(g, &self.0))
    }

    pub fn self_intersection(&self, g: &PlumbingGraph) -> Result<i128, CycleError> {
        let dots = self.dot_vertices(g)?;
        Ok(dots.iter().zip(&self.0).map(|(d, &z)| d * z as i128).sum())
    }

    pub fn is_anti_nef(&self, g: &PlumbingGraph) -> Result<bool, CycleError> {
        Ok(self.dot_vertices(g)?.iter().all(|&d| d <= 0))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|z| z.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn pairing(g: &PlumbingGraph, z: &[i64]) -> Vec<i128> {
    let mut out: Vec<i128> = g
        .vertices()
        .iter()
        .zip(z)
        .map(|(v, &zi)| v.weight as i128 * zi as i128)
        .collect();
    for &(a, b) in g.edges() {
        out[a] += z[b] as i128;
        out[b] += z[a] as i128;
    }
    out
}

#[derive(Debug, Clone)]
pub struct LauferOptions {
    pub coeff_cap: i64,
    /// Vertex indices in the order the scan visits them; `None` means
    /// `0, 1, ..., r-1`.
    pub scan_order: Option<Vec<usize>>,
}

impl Default for LauferOptions {
    fn default() -> Self {
        LauferOptions {
            coeff_cap: DEFAULT_COEFF_CAP,
            scan_order: None,
        }
    }
}

/// Checks the shared preconditions: nonempty, connected tree of spheres with
/// negative definite intersection form.
pub fn check_resolution_graph(g: &PlumbingGraph) -> Result<(), CycleError> {
    if g.is_empty() {
        return Err(CycleError::Empty);
    }
    if let Some(v) = g.vertices().iter().find(|v| v.genus > 0) {
        return Err(CycleError::HigherGenus(v.id.clone()));
    }
    if !g.is_connected() {
        return Err(CycleError::Disconnected);
    }
    if !g.is_tree() {
        return Err(CycleError::NotATree);
    }
    let definite =
        is_negative_definite(&intersection_matrix(g)).expect("symmetric by construction");
    if !definite {
        return Err(CycleError::NotNegativeDefinite);
    }
    Ok(())
}

pub fn fundamental_cycle(g: &PlumbingGraph) -> Result<Cycle, CycleError> {
    fundamental_cycle_with(g, &LauferOptions::default())
}

/// Laufer's algorithm: start at all ones and raise one coefficient at a time
/// wherever `Z . E_i > 0`, rescanning from the start after every step.
pub fn fundamental_cycle_with(
    g: &PlumbingGraph,
    opts: &LauferOptions,
) -> Result<Cycle, CycleError> {
    check_resolution_graph(g)?;
    laufer(g, opts)
}

pub(crate) fn laufer(g: &PlumbingGraph, opts: &LauferOptions) -> Result<Cycle, CycleError> {
    let r = g.len();
    let order: Vec<usize> = match &opts.scan_order {
        Some(o) => {
            let mut seen = vec![false; r];
            if o.len() != r
                || o.iter()
                    .any(|&i| i >= r || std::mem::replace(&mut seen[i], true))
            {
                return Err(CycleError::BadOrder);
            }
            o.clone()
        }
        None => (0..r).collect(),
    };
    let adjacency: Vec<Vec<usize>> = (0..r).map(|i| g.neighbors(i).collect()).collect();
    let mut z = vec![1i64; r];
    let mut dots = pairing(g, &z);
    'scan: loop {
        for &i in &order {
            if dots[i] > 0 {
                z[i] += 1;
                if z[i] > opts.coeff_cap {
                    return Err(CycleError::CapExceeded {
                        vertex: g.vertex(i).id.clone(),
                        cap: opts.coeff_cap,
                    });
                }
                dots[i] += g.vertex(i).weight as i128;
                for &j in &adjacency[i] {
                    dots[j] += 1;
                }
                continue 'scan;
            }
        }
        return Ok(Cycle(z));
    }
}

/// Outcome of Artin's criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalityCertificate {
    pub cycle: Cycle,
    pub self_intersection: i128,
    /// `Z.Z + sum z_i (-e_i - 2)`; equals -2 exactly for rational graphs.
    pub sum: i128,
    pub rational: bool,
}

pub fn is_rational(g: &PlumbingGraph) -> Result<RationalityCertificate, CycleError> {
    is_rational_with(g, &LauferOptions::default())
}

pub fn is_rational_with(
    g: &PlumbingGraph,
    opts: &LauferOptions,
) -> Result<RationalityCertificate, CycleError> {
    let cycle = fundamental_cycle_with(g, opts)?;
    let self_intersection = cycle.self_intersection(g)?;
    let correction: i128 = g
        .vertices()
        .iter()
        .zip(cycle.coefficients())
        .map(|(v, &z)| z as i128 * (-(v.weight as i128) - 2))
        .sum();
    let sum = self_intersection + correction;
    Ok(RationalityCertificate {
        cycle,
        self_intersection,
        sum,
        rational: sum == -2,
    })
}

/// Vertices with `e + d > 0`, in vertex order.
pub fn bad_vertices(g: &PlumbingGraph) -> Vec<String> {
    g.vertices()
        .iter()
        .zip(g.degrees())
        .filter(|(v, d)| v.weight + *d as i64 > 0)
        .map(|(v, _)| v.id.clone())
        .collect()
}
