//! Milnor open books of rational surface singularity links.

use std::fmt;

use thiserror::Error;

use crate::cycle::{bad_vertices, is_rational_with, Cycle, CycleError, LauferOptions};
use crate::graph::{PlumbingGraph, SeifertData};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpenBookError {
    #[error(transparent)]
    Cycle(#[from] CycleError),
    #[error("graph is not rational (Artin sum {0}, expected -2)")]
    NotRational(i128),
    #[error("invalid m: {0}")]
    InvalidM(String),
    #[error("bad vertices present: {}", .0.join(", "))]
    BadVertices(Vec<String>),
    #[error("binding count must be at least 1")]
    NoBinding,
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MilnorOpenBook {
    pub m: Cycle,
    pub n: Vec<i64>,
    pub page_genus: i64,
    pub binding_count: i64,
    pub norm: i64,
}

impl MilnorOpenBook {
    pub fn class(&self) -> SupportClass {
        SupportClass::from_genus(self.page_genus)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SupportClass {
    Planar,
    Elliptic,
    Higher(i64),
}

impl SupportClass {
    pub fn from_genus(g: i64) -> Self {
        match g {
            0 => SupportClass::Planar,
            1 => SupportClass::Elliptic,
            g => SupportClass::Higher(g),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SupportClass::Planar => "planar",
            SupportClass::Elliptic => "elliptic",
            SupportClass::Higher(_) => "higher",
        }
    }
}

impl fmt::Display for SupportClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SupportClass::Higher(g) => write!(f, "higher({g})"),
            other => f.write_str(other.name()),
        }
    }
}

/// A plumbing graph already known to be a negative definite rational tree,
/// together with its fundamental cycle.
#[derive(Debug, Clone)]
pub struct RationalGraph<'a> {
    graph: &'a PlumbingGraph,
    degrees: Vec<i64>,
    fundamental: Cycle,
}

impl<'a> RationalGraph<'a> {
    pub fn new(graph: &'a PlumbingGraph) -> Result<Self, OpenBookError> {
        Self::with_options(graph, &LauferOptions::default())
    }

    pub fn with_options(
        graph: &'a PlumbingGraph,
        opts: &LauferOptions,
    ) -> Result<Self, OpenBookError> {
        let cert = is_rational_with(graph, opts)?;
        if !cert.rational {
            return Err(OpenBookError::NotRational(cert.sum));
        }
        let degrees = graph.degrees().into_iter().map(|d| d as i64).collect();
        Ok(RationalGraph {
            graph,
            degrees,
            fundamental: cert.cycle,
        })
    }

    pub fn graph(&self) -> &PlumbingGraph {
        self.graph
    }

    pub fn fundamental_cycle(&self) -> &Cycle {
        &self.fundamental
    }

    pub fn open_book(&self, m: &Cycle) -> Result<MilnorOpenBook, OpenBookError> {
        let z = m.coefficients();
        if z.len() != self.graph.len() {
            return Err(CycleError::LengthMismatch {
                expected: self.graph.len(),
                got: z.len(),
            }
            .into());
        }
        if let Some(i) = z.iter().position(|&x| x < 1) {
            return Err(OpenBookError::InvalidM(format!(
                "coefficient at {} is {}, must be positive",
                self.graph.vertex(i).id,
                z[i]
            )));
        }
        let dots = m.dot_vertices(self.graph)?;
        if let Some(i) = dots.iter().position(|&d| d > 0) {
            return Err(OpenBookError::InvalidM(format!(
                "n at {} would be {}",
                self.graph.vertex(i).id,
                -dots[i]
            )));
        }
        if dots.iter().all(|&d| d == 0) {
            return Err(OpenBookError::InvalidM("n is zero".into()));
        }
        let n: Vec<i64> = dots
            .iter()
            .map(|&d| i64::try_from(-d))
            .collect::<Result<_, _>>()
            .map_err(|_| OpenBookError::InvalidM("binding multiplicity overflow".into()))?;
        self.assemble(m.clone(), n)
    }

    fn assemble(&self, m: Cycle, n: Vec<i64>) -> Result<MilnorOpenBook, OpenBookError> {
        let mut twice: i128 = 0;
        for ((&d, &mi), &ni) in self.degrees.iter().zip(m.coefficients()).zip(&n) {
            twice += (d as i128 - 2) * mi as i128 + (mi as i128 - 1) * ni as i128;
        }
        if twice % 2 != 0 {
            return Err(OpenBookError::Inconsistent(format!(
                "odd genus numerator {twice} for m = {m}"
            )));
        }
        let page_genus = 1 + twice / 2;
        if page_genus < 0 {
            return Err(OpenBookError::Inconsistent(format!(
                "negative page genus for m = {m}"
            )));
        }
        let page_genus = i64::try_from(page_genus)
            .map_err(|_| OpenBookError::Inconsistent("page genus overflow".into()))?;
        let binding_count: i64 = n.iter().sum();
        Ok(MilnorOpenBook {
            m,
            n,
            page_genus,
            binding_count,
            norm: 2 * page_genus - 2 + binding_count,
        })
    }

    pub fn minimal(&self) -> MilnorOpenBook {
        self.open_book(&self.fundamental)
            .expect("the fundamental cycle of a rational graph is a valid m")
    }

    /// Every valid `m` with `1 <= m_i <= bounds[i]`, in lexicographic order.
    pub fn valid_cycles(&self, bounds: &[i64]) -> Vec<MilnorOpenBook> {
        assert_eq!(bounds.len(), self.graph.len());
        let r = bounds.len();
        let mut out = Vec::new();
        if bounds.iter().any(|&b| b < 1) {
            return out;
        }
        let mut z = vec![1i64; r];
        loop {
            if let Ok(ob) = self.open_book(&Cycle::new(z.clone())) {
                out.push(ob);
            }
            let mut k = r;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if z[k] < bounds[k] {
                    z[k] += 1;
                    break;
                }
                z[k] = 1;
            }
        }
    }

    /// Searches all valid `m` with `m_i <= z_i + slack`.
    pub fn minimality(&self, slack: i64) -> MinimalityReport {
        let bounds: Vec<i64> = self
            .fundamental
            .coefficients()
            .iter()
            .map(|z| z + slack)
            .collect();
        let all = self.valid_cycles(&bounds);
        let min_genus = all
            .iter()
            .map(|o| o.page_genus)
            .min()
            .expect("fundamental cycle is valid");
        let min_sum = all
            .iter()
            .map(|o| o.page_genus + o.binding_count)
            .min()
            .expect("fundamental cycle is valid");
        let minimizers = all
            .iter()
            .filter(|o| o.page_genus == min_genus && o.page_genus + o.binding_count == min_sum)
            .map(|o| o.m.clone())
            .collect();
        MinimalityReport {
            minimal: self.minimal(),
            candidates: all.len(),
            min_genus,
            min_sum,
            minimizers,
        }
    }
}

/// Result of enumerating valid `m` in a box around the fundamental cycle.
#[derive(Debug, Clone)]
pub struct MinimalityReport {
    pub minimal: MilnorOpenBook,
    pub candidates: usize,
    pub min_genus: i64,
    /// Minimum of `page_genus + binding_count`.
    pub min_sum: i64,
    /// Cycles attaining both minima.
    pub minimizers: Vec<Cycle>,
}

impl MinimalityReport {
    pub fn holds(&self) -> bool {
        self.minimal.page_genus == self.min_genus
            && self.minimal.page_genus + self.minimal.binding_count == self.min_sum
            && self.minimizers == [self.minimal.m.clone()]
    }
}

pub fn milnor_openbook(g: &PlumbingGraph, m: &Cycle) -> Result<MilnorOpenBook, OpenBookError> {
    RationalGraph::new(g)?.open_book(m)
}

pub fn minimal_milnor_openbook(g: &PlumbingGraph) -> Result<MilnorOpenBook, OpenBookError> {
    Ok(RationalGraph::new(g)?.minimal())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlanarInvariants {
    pub mg: i64,
    pub mb: i64,
    pub mn: i64,
}

/// Planar invariants of a graph without bad vertices, `Mb = -sum(e + d)`,
/// cross-checked against the minimal Milnor open book.
pub fn planar_invariants(g: &PlumbingGraph) -> Result<PlanarInvariants, OpenBookError> {
    let bad = bad_vertices(g);
    if !bad.is_empty() {
        return Err(OpenBookError::BadVertices(bad));
    }
    let rg = RationalGraph::new(g)?;
    let mb: i64 = -g
        .vertices()
        .iter()
        .zip(g.degrees())
        .map(|(v, d)| v.weight + d as i64)
        .sum::<i64>();
    let inv = PlanarInvariants {
        mg: 0,
        mb,
        mn: mb - 2,
    };
    let minimal = rg.minimal();
    if minimal.m.coefficients().iter().any(|&z| z != 1)
        || minimal.page_genus != 0
        || minimal.binding_count != mb
    {
        return Err(OpenBookError::Inconsistent(format!(
            "planar formula gives Mb = {mb}, minimal open book has m = {}, genus {}, binding {}",
            minimal.m, minimal.page_genus, minimal.binding_count
        )));
    }
    Ok(inv)
}

pub fn classify_support(g: &PlumbingGraph) -> Result<SupportClass, OpenBookError> {
    Ok(minimal_milnor_openbook(g)?.class())
}

/// Classification of a Seifert input, cross-checked against the criterion
/// planar iff `e0 <= -3`.
pub fn classify_seifert(s: &SeifertData, g: &PlumbingGraph) -> Result<SupportClass, OpenBookError> {
    let class = classify_support(g)?;
    let planar = class == SupportClass::Planar;
    if planar != (s.e0() <= -3) {
        return Err(OpenBookError::Inconsistent(format!(
            "{s} classified {class}, contradicting the e0 criterion"
        )));
    }
    Ok(class)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeegaardBounds {
    /// Genus of the Heegaard surface obtained by doubling a page.
    pub heegaard_upper: i64,
    /// `2g + r - 2`, the negated Euler characteristic of a page.
    pub page_norm: i64,
}

impl HeegaardBounds {
    /// `rank(pi_1) <= Hg <= 1 + sn`, with the page norm standing in for `sn`.
    pub fn chain_holds(&self, rank_pi1: i64, heegaard_genus: i64) -> bool {
        rank_pi1 <= heegaard_genus && heegaard_genus <= 1 + self.page_norm
    }
}

pub fn heegaard_bounds(
    page_genus: i64,
    binding_count: i64,
) -> Result<HeegaardBounds, OpenBookError> {
    if binding_count < 1 {
        return Err(OpenBookError::NoBinding);
    }
    if page_genus < 0 {
        return Err(OpenBookError::Inconsistent("negative page genus".into()));
    }
    Ok(HeegaardBounds {
        heegaard_upper: 2 * page_genus + binding_count - 1,
        page_norm: 2 * page_genus + binding_count - 2,
    })
}
