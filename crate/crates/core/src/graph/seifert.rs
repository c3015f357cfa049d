use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{hj_expansion, GraphError, PlumbingGraph, Vertex};

/// Small Seifert fibred space `Y(e0; r1, r2, r3)` with `0 < ri < 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertData {
    e0: i64,
    r: [BigRational; 3],
}

impl SeifertData {
    pub fn new(e0: i64, r: [BigRational; 3]) -> Result<Self, GraphError> {
        for ri in &r {
            if *ri <= BigRational::zero() || *ri >= BigRational::one() {
                return Err(GraphError::SeifertRange(ri.to_string()));
            }
        }
        Ok(SeifertData { e0, r })
    }

    /// Shorthand for machine-sized fractions `(p, q)` meaning `p/q`.
    pub fn from_fractions(e0: i64, r: [(i64, i64); 3]) -> Result<Self, GraphError> {
        let [a, b, c] = r.map(|(p, q)| BigRational::new(p.into(), q.into()));
        Self::new(e0, [a, b, c])
    }

    pub fn e0(&self) -> i64 {
        self.e0
    }

    pub fn r(&self) -> &[BigRational; 3] {
        &self.r
    }
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "seifert {}", self.e0)?;
        for ri in &self.r {
            write!(f, " {}/{}", ri.numer(), ri.denom())?;
        }
        Ok(())
    }
}

/// Star-shaped plumbing of `Y(e0; r1, r2, r3)`.
///
/// Enumeration: the central vertex `v0` first, then the legs in argument
/// order, each from the vertex adjacent to the centre outwards. Leg `i`
/// vertex `j` (both 1-based) gets the id `v{i}_{j}`.
pub fn seifert_to_plumbing(s: &SeifertData) -> Result<PlumbingGraph, GraphError> {
    let mut vertices = vec![Vertex::new("v0", s.e0)];
    let mut edges = Vec::new();
    for (leg, ri) in s.r.iter().enumerate() {
        let cf = hj_expansion(&(-ri.recip()))?;
        let mut prev = 0;
        for (j, a) in cf.terms().iter().enumerate() {
            let w = i64::try_from(a).map_err(|_| GraphError::WeightOverflow(a.to_string()))?;
            vertices.push(Vertex::new(format!("v{}_{}", leg + 1, j + 1), w));
            let cur = vertices.len() - 1;
            edges.push((prev, cur));
            prev = cur;
        }
    }
    Ok(PlumbingGraph::from_indices(vertices, edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weights(g: &PlumbingGraph) -> Vec<i64> {
        g.weights()
    }

    #[test]
    fn d4_star() {
        let s = SeifertData::from_fractions(-2, [(1, 2), (1, 2), (1, 2)]).unwrap();
        let g = seifert_to_plumbing(&s).unwrap();
        assert_eq!(weights(&g), vec![-2; 4]);
        assert_eq!(g.degrees(), vec![3, 1, 1, 1]);
    }

    #[test]
    fn gamma_p_legs() {
        for p in 2..=6i64 {
            let s = SeifertData::from_fractions(-2, [(1, 3), (2, 3), (p, p + 1)]).unwrap();
            let g = seifert_to_plumbing(&s).unwrap();
            let mut expect = vec![-2, -3, -2, -2];
            expect.extend(std::iter::repeat_n(-2, p as usize));
            assert_eq!(weights(&g), expect);
            let deg = g.degrees();
            assert_eq!(deg[0], 3);
            // leg ends: [-3], second -2 of leg 2, last of leg 3
            assert_eq!(deg[1], 1);
            assert_eq!(deg[3], 1);
            assert_eq!(*deg.last().unwrap(), 1);
            assert!(deg[4..deg.len() - 1].iter().all(|&d| d == 2));
        }
    }

    #[test]
    fn degenerate_star_legs() {
        let s = SeifertData::from_fractions(-2, [(1, 2), (2, 3), (5, 6)]).unwrap();
        let g = seifert_to_plumbing(&s).unwrap();
        assert_eq!(g.len(), 1 + 1 + 2 + 5);
        assert!(weights(&g).iter().all(|&w| w == -2));
        assert!(g.is_tree());
    }

    #[test]
    fn vertex_count_matches_leg_lengths() {
        for (a, b) in [(1, 2), (2, 5), (3, 7), (4, 9), (5, 13)] {
            let s = SeifertData::from_fractions(-3, [(a, b), (1, 3), (b - a, b)]).unwrap();
            let g = seifert_to_plumbing(&s).unwrap();
            let total: usize = s
                .r()
                .iter()
                .map(|r| hj_expansion(&(-r.recip())).unwrap().len())
                .sum();
            assert_eq!(g.len(), 1 + total);
        }
    }

    #[test]
    fn range_checked() {
        assert!(SeifertData::from_fractions(-2, [(1, 2), (2, 2), (1, 3)]).is_err());
        assert!(SeifertData::from_fractions(-2, [(0, 2), (1, 2), (1, 3)]).is_err());
        assert!(SeifertData::from_fractions(-2, [(-1, 2), (1, 2), (1, 3)]).is_err());
    }
}
