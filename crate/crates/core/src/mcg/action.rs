use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Letter, McgError, Relation, SurfaceModel, TwistWord};
use crate::lattice::IntMatrix;

/// Matrix of `t_gamma^exp` on the model's homology basis, acting on column
/// vectors: `x -> x + exp <x, gamma> gamma`.
pub fn transvection(s: &SurfaceModel, letter: &Letter) -> Result<IntMatrix, McgError> {
    let gamma = &s.curve(&letter.curve)?.class;
    let r = s.rank();
    // row vector x -> <x, gamma> is (J gamma)^T
    let j_gamma: Vec<i64> = (0..r)
        .map(|i| (0..r).map(|j| s.form()[i][j] * gamma[j]).sum())
        .collect();
    let mut m = IntMatrix::identity(r);
    for i in 0..r {
        if gamma[i] == 0 {
            continue;
        }
        for j in 0..r {
            m[(i, j)] += BigInt::from(letter.exp as i64 * gamma[i] * j_gamma[j]);
        }
    }
    Ok(m)
}

/// Product of the letters' transvections, left to right, so that the
/// rightmost twist is applied first.
pub fn homology_action(w: &TwistWord, s: &SurfaceModel) -> Result<IntMatrix, McgError> {
    let mut acc = IntMatrix::identity(s.rank());
    for l in w.letters() {
        acc = &acc * &transvection(s, l)?;
    }
    Ok(acc)
}

pub fn form_matrix(s: &SurfaceModel) -> IntMatrix {
    IntMatrix::from_rows(s.form()).expect("square form")
}

/// `A^T J A = J`.
pub fn preserves_form(a: &IntMatrix, s: &SurfaceModel) -> bool {
    let j = form_matrix(s);
    &(&a.transpose() * &j) * a == j
}

pub fn trace(a: &IntMatrix) -> BigInt {
    (0..a.dim()).map(|i| a[(i, i)].clone()).sum()
}

pub fn is_identity(a: &IntMatrix) -> bool {
    (0..a.dim()).all(|i| {
        (0..a.dim()).all(|j| {
            a[(i, j)]
                == if i == j {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomologyVerdict {
    EqualOnHomology,
    DistinctOnHomology,
}

impl HomologyVerdict {
    pub fn is_equal(&self) -> bool {
        *self == HomologyVerdict::EqualOnHomology
    }

    pub fn name(&self) -> &'static str {
        match self {
            HomologyVerdict::EqualOnHomology => "equal-on-homology",
            HomologyVerdict::DistinctOnHomology => "distinct-on-homology",
        }
    }
}

pub fn compare_on_homology(
    a: &TwistWord,
    b: &TwistWord,
    s: &SurfaceModel,
) -> Result<HomologyVerdict, McgError> {
    Ok(if homology_action(a, s)? == homology_action(b, s)? {
        HomologyVerdict::EqualOnHomology
    } else {
        HomologyVerdict::DistinctOnHomology
    })
}

/// Equality of the two sides on homology. This is necessary for the
/// relation to hold in the mapping class group, not sufficient: twists
/// along boundary-parallel curves act trivially.
pub fn verify_relation(r: &Relation, s: &SurfaceModel) -> Result<HomologyVerdict, McgError> {
    compare_on_homology(&r.left, &r.right, s)
}
