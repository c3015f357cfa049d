use super::surface::SurfaceModel;
use super::{Letter, McgError, TwistWord};

type Remap = Box<dyn Fn(usize) -> Option<usize>>;

/// Page plus monodromy.
#[derive(Debug, Clone)]
pub struct AbstractOpenBook {
    pub surface: SurfaceModel,
    pub monodromy: TwistWord,
}

impl AbstractOpenBook {
    pub fn new(surface: SurfaceModel, monodromy: TwistWord) -> Result<Self, McgError> {
        surface.check_word(&monodromy)?;
        Ok(AbstractOpenBook { surface, monodromy })
    }
}

/// Where the feet of the new 1-handle go.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HandleAttachment {
    /// Both feet on boundary component `j`: one more boundary component.
    SameBoundary(usize),
    /// Feet on two different components, which merge: one more genus.
    JoinBoundaries(usize, usize),
}

/// The curve added by a stabilization: it runs once over the new handle and
/// otherwise follows a path in the old page with homology class `base`.
#[derive(Debug, Clone)]
pub struct StabilizingCurve {
    pub name: String,
    pub attachment: HandleAttachment,
    pub base: Vec<i64>,
}

/// Attaches a 1-handle to the page and composes the monodromy with a right
/// twist along a curve crossing the handle once.
pub fn positive_stabilization(
    ob: &AbstractOpenBook,
    new: &StabilizingCurve,
) -> Result<AbstractOpenBook, McgError> {
    let old = &ob.surface;
    let r = old.rank();
    let nb = old.boundary_count();
    if new.base.len() != r {
        return Err(McgError::Stabilization(format!(
            "base class has {} coordinates, page homology has rank {r}",
            new.base.len()
        )));
    }
    if old.curve(&new.name).is_ok() {
        return Err(McgError::Stabilization(format!(
            "curve {} already exists",
            new.name
        )));
    }
    let extend = |v: &[i64], last: i64| -> Vec<i64> {
        let mut out = v.to_vec();
        out.push(last);
        out
    };
    let mut form: Vec<Vec<i64>> = old.form().iter().map(|row| extend(row, 0)).collect();
    form.push(vec![0; r + 1]);
    let mut basis = old.basis().to_vec();
    basis.push(format!("h{}", r + 1));
    let mut h = vec![0; r + 1];
    h[r] = 1;

    let (genus, boundaries, remap): (usize, Vec<Vec<i64>>, Remap) = match new.attachment {
        HandleAttachment::SameBoundary(j) => {
            if j >= nb {
                return Err(McgError::Stabilization(format!(
                    "no boundary component {j}"
                )));
            }
            let mut bs: Vec<Vec<i64>> = old.boundaries().iter().map(|b| extend(b, 0)).collect();
            for (x, y) in bs[j].iter_mut().zip(&h) {
                *x -= y;
            }
            bs.push(h.clone());
            (old.genus(), bs, Box::new(move |k| (k != j).then_some(k)))
        }
        HandleAttachment::JoinBoundaries(i, j) => {
            if i >= nb || j >= nb || i == j {
                return Err(McgError::Stabilization(format!(
                    "cannot join boundary components {i} and {j}"
                )));
            }
            let bi = old.boundaries()[i].clone();
            let bj = old.boundaries()[j].clone();
            let target = |k: usize| -> i64 {
                if k == i {
                    1
                } else if k == j {
                    -1
                } else {
                    0
                }
            };
            let row = solve_boundary_pairing(old, &target)?;
            for k in 0..r {
                form[k][r] = row[k];
                form[r][k] = -row[k];
            }
            let merged: Vec<i64> = bi.iter().zip(&bj).map(|(x, y)| x + y).collect();
            let mut bs: Vec<Vec<i64>> = Vec::with_capacity(nb - 1);
            let mut map = vec![None; nb];
            for (k, slot) in map.iter_mut().enumerate() {
                if k != i && k != j {
                    *slot = Some(bs.len());
                    bs.push(extend(&old.boundaries()[k], 0));
                }
            }
            bs.push(extend(&merged, 0));
            (old.genus() + 1, bs, Box::new(move |k| map[k]))
        }
    };

    let name = format!("{} stabilized", old.name());
    let mut s = SurfaceModel::from_parts(name, genus, basis, form, boundaries);
    for c in old.curves() {
        s.add_curve(&c.name, extend(&c.class, 0), c.boundary.and_then(&remap))?;
    }
    let class: Vec<i64> = extend(&new.base, 1);
    s.add_curve(&new.name, class, None)?;
    s.copy_declarations_from(old);
    s.validate()?;
    let monodromy = ob
        .monodromy
        .concat(&TwistWord::new(vec![Letter::new(new.name.clone(), 1)]));
    AbstractOpenBook::new(s, monodromy)
}

/// Row `<e_k, h>` for the boundary basis vectors realizing the requested
/// pairings `<b_m, h> = target(m)` with every boundary class `b_m`.
fn solve_boundary_pairing(
    old: &SurfaceModel,
    target: &dyn Fn(usize) -> i64,
) -> Result<Vec<i64>, McgError> {
    let r = old.rank();
    let nb = old.boundary_count();
    let first = 2 * old.genus();
    let mut row = vec![0; r];
    // the first nb - 1 boundaries are the basis vectors c_k
    for m in 0..nb - 1 {
        row[first + m] = target(m);
    }
    let check: i64 = old.boundaries()[nb - 1]
        .iter()
        .zip(&row)
        .map(|(x, y)| x * y)
        .sum();
    if check != target(nb - 1) {
        return Err(McgError::Stabilization(
            "inconsistent boundary pairing".into(),
        ));
    }
    Ok(row)
}
