//! Exact integer linear algebra on the intersection lattice.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graph::PlumbingGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("rows have unequal length or the matrix is not square")]
    NotSquare,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("internal check failed: {0}")]
    Inconsistent(String),
}

/// Square matrix of arbitrary-precision integers, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            data: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self, LatticeError> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(LatticeError::NotSquare);
            }
            data.extend(row.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix { dim, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.data.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    /// Simultaneous row/column permutation: entry `(a, b)` of the result is
    /// entry `(order[a], order[b])` of `self`.
    pub fn permuted(&self, order: &[usize]) -> Self {
        let mut m = Self::zeros(self.dim);
        for (a, &i) in order.iter().enumerate() {
            for (b, &j) in order.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Upper-left `k x k` block.
    pub fn leading(&self, k: usize) -> Self {
        let mut m = Self::zeros(k);
        for i in 0..k {
            for j in 0..k {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim);
        self.rows()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        self.rows()
            .map(|r| r.iter().map(|x| i64::try_from(x).ok()).collect())
            .collect()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.dim + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Weights on the diagonal, edge multiplicities off the diagonal.
pub fn intersection_matrix(g: &PlumbingGraph) -> IntMatrix {
    let mut m = IntMatrix::zeros(g.len());
    for (i, v) in g.vertices().iter().enumerate() {
        m[(i, i)] = BigInt::from(v.weight);
    }
    for &(a, b) in g.edges() {
        m[(a, b)] += 1;
        m[(b, a)] += 1;
    }
    m
}

/// Bareiss fraction-free elimination. The empty matrix has determinant 1.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.dim();
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                let tmp = a[(k, j)].clone();
                a[(k, j)] = a[(p, j)].clone();
                a[(p, j)] = tmp;
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[(n - 1, n - 1)]
}

/// Sylvester's criterion: `(-1)^k` times the `k`-th leading principal minor
/// is positive for every `k`.
pub fn is_negative_definite(m: &IntMatrix) -> Result<bool, LatticeError> {
    if !m.is_symmetric() {
        return Err(LatticeError::NotSymmetric);
    }
    for k in 1..=m.dim() {
        let minor = determinant(&m.leading(k));
        let signed = if k % 2 == 0 { minor } else { -minor };
        if !signed.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Cokernel of an integer matrix: free rank plus torsion invariant factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyStructure {
    pub rank: usize,
    /// Factors `>= 2`, each dividing the next.
    pub invariant_factors: Vec<BigInt>,
    /// Product of the factors, or 0 when the rank is positive.
    pub order: BigInt,
}

impl fmt::Display for HomologyStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.rank > 0 {
            parts.push(if self.rank == 1 {
                "Z".into()
            } else {
                format!("Z^{}", self.rank)
            });
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Smith normal form, pivoting on the smallest nonzero entry in magnitude.
pub fn smith_normal_form(m: &IntMatrix) -> HomologyStructure {
    let n = m.dim();
    let mut a = m.clone();
    let mut diagonal = Vec::with_capacity(n);

    for t in 0..n {
        while let Some((pi, pj)) = smallest_entry(&a, t) {
            swap_rows(&mut a, t, pi);
            swap_cols(&mut a, t, pj);
            let mut clean = true;
            for i in t + 1..n {
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                if !q.is_zero() {
                    for j in t..n {
                        let v = &a[(t, j)] * &q;
                        a[(i, j)] -= v;
                    }
                }
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..n {
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                if !q.is_zero() {
                    for i in t..n {
                        let v = &a[(i, t)] * &q;
                        a[(i, j)] -= v;
                    }
                }
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // pivot must divide the rest of the block
            let bad = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a[(i, j)].is_multiple_of(&a[(t, t)]));
            match bad {
                Some((i, _)) => {
                    for j in t..n {
                        let v = a[(i, j)].clone();
                        a[(t, j)] += v;
                    }
                }
                None => break,
            }
        }
        diagonal.push(a[(t, t)].abs());
    }

    let rank = diagonal.iter().filter(|d| d.is_zero()).count();
    let mut invariant_factors: Vec<BigInt> = diagonal
        .into_iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .collect();
    invariant_factors.sort();
    let order = if rank > 0 {
        BigInt::zero()
    } else {
        invariant_factors.iter().product()
    };
    HomologyStructure {
        rank,
        invariant_factors,
        order,
    }
}

fn smallest_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let n = a.dim();
    let mut best: Option<(usize, usize)> = None;
    for i in t..n {
        for j in t..n {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn swap_rows(a: &mut IntMatrix, i: usize, k: usize) {
    if i != k {
        for j in 0..a.dim() {
            let tmp = a[(i, j)].clone();
            a[(i, j)] = a[(k, j)].clone();
            a[(k, j)] = tmp;
        }
    }
}

fn swap_cols(a: &mut IntMatrix, j: usize, k: usize) {
    if j != k {
        for i in 0..a.dim() {
            let tmp = a[(i, j)].clone();
            a[(i, j)] = a[(i, k)].clone();
            a[(i, k)] = tmp;
        }
    }
}

/// Linking matrix of the Seifert space carried by the planar three-holed
/// open book with monodromy `t1^q t2^r t3^s`.
pub fn three_holed_linking_matrix(q: u64, r: u64, s: u64) -> IntMatrix {
    let (q, r, s) = (q as i128, r as i128, s as i128);
    IntMatrix::from_rows(&[
        vec![0i128, 1, 1, 1],
        vec![1, q, 0, 0],
        vec![1, 0, r, 0],
        vec![1, 0, 0, s],
    ])
    .expect("square")
}

/// `|H1| = qr + qs + rs`, checked against the determinant of the linking
/// matrix.
pub fn h1_order_three_holed(q: u64, r: u64, s: u64) -> Result<BigInt, LatticeError> {
    let (bq, br, bs) = (BigInt::from(q), BigInt::from(r), BigInt::from(s));
    let formula = &bq * &br + &bq * &bs + &br * &bs;
    let det = determinant(&three_holed_linking_matrix(q, r, s)).abs();
    if det != formula {
        return Err(LatticeError::Inconsistent(format!(
            "qr+qs+rs = {formula} but |det| = {det} for ({q},{r},{s})"
        )));
    }
    Ok(formula)
}
