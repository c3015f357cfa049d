//! Model surfaces: a homology basis, its intersection form, and named curves.
//!
//! Basis order is `a1, b1, ..., ag, bg, c1, ..., c_{r-1}` with
//! `<a_i, b_i> = 1` and the boundary classes `c_k` in the radical of the form.
//! The last boundary component has class `-(c1 + ... + c_{r-1})`.

use std::collections::{BTreeMap, BTreeSet};

use super::{McgError, TwistWord};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    pub name: String,
    pub class: Vec<i64>,
    /// Index of the boundary component this curve is parallel to.
    pub boundary: Option<usize>,
}

/// Named identity between twist words on a model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub name: String,
    pub left: TwistWord,
    pub right: TwistWord,
}

impl Relation {
    pub fn new(name: impl Into<String>, left: &str, right: &str) -> Result<Self, McgError> {
        Ok(Relation {
            name: name.into(),
            left: TwistWord::parse(left)?,
            right: TwistWord::parse(right)?,
        })
    }

    /// Curve names the relation binds.
    pub fn curves(&self) -> BTreeSet<&str> {
        self.left
            .curve_names()
            .chain(self.right.curve_names())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceModel {
    name: String,
    genus: usize,
    basis: Vec<String>,
    form: Vec<Vec<i64>>,
    boundaries: Vec<Vec<i64>>,
    curves: Vec<Curve>,
    index: BTreeMap<String, usize>,
    disjoint: BTreeSet<(usize, usize)>,
    meets_once: BTreeSet<(usize, usize)>,
    relations: Vec<Relation>,
}

fn ordered(i: usize, j: usize) -> (usize, usize) {
    if i <= j {
        (i, j)
    } else {
        (j, i)
    }
}

pub(crate) fn pair(form: &[Vec<i64>], x: &[i64], y: &[i64]) -> i64 {
    let mut s = 0;
    for (i, row) in form.iter().enumerate() {
        if x[i] == 0 {
            continue;
        }
        for (j, &f) in row.iter().enumerate() {
            s += x[i] * f * y[j];
        }
    }
    s
}

impl SurfaceModel {
    /// Standard basis of a genus `g` surface with `r >= 1` boundary
    /// components and no curves.
    pub fn standard(
        name: impl Into<String>,
        genus: usize,
        boundary_count: usize,
    ) -> Result<Self, McgError> {
        if boundary_count == 0 {
            return Err(McgError::Model(
                "a page needs at least one boundary component".into(),
            ));
        }
        let rank = 2 * genus + boundary_count - 1;
        let mut basis = Vec::with_capacity(rank);
        for i in 1..=genus {
            if genus == 1 {
                basis.extend(["a".to_string(), "b".to_string()]);
            } else {
                basis.extend([format!("a{i}"), format!("b{i}")]);
            }
        }
        basis.extend((1..boundary_count).map(|k| format!("c{k}")));
        let mut form = vec![vec![0; rank]; rank];
        for i in 0..genus {
            form[2 * i][2 * i + 1] = 1;
            form[2 * i + 1][2 * i] = -1;
        }
        let mut boundaries = Vec::with_capacity(boundary_count);
        for k in 0..boundary_count - 1 {
            let mut v = vec![0; rank];
            v[2 * genus + k] = 1;
            boundaries.push(v);
        }
        let mut last = vec![0; rank];
        for x in last.iter_mut().skip(2 * genus) {
            *x = -1;
        }
        boundaries.push(last);
        Ok(SurfaceModel {
            name: name.into(),
            genus,
            basis,
            form,
            boundaries,
            curves: Vec::new(),
            index: BTreeMap::new(),
            disjoint: BTreeSet::new(),
            meets_once: BTreeSet::new(),
            relations: Vec::new(),
        })
    }

    /// Builds a class from basis names, e.g. `[("a", 1), ("c1", 1)]`.
    pub fn class(&self, terms: &[(&str, i64)]) -> Vec<i64> {
        let mut v = vec![0; self.rank()];
        for &(name, k) in terms {
            let i = self
                .basis
                .iter()
                .position(|b| b == name)
                .expect("basis name");
            v[i] += k;
        }
        v
    }

    pub fn add_curve(
        &mut self,
        name: &str,
        class: Vec<i64>,
        boundary: Option<usize>,
    ) -> Result<(), McgError> {
        if class.len() != self.rank() {
            return Err(McgError::Model(format!(
                "curve {name} has a class of the wrong rank"
            )));
        }
        if self.index.contains_key(name) {
            return Err(McgError::Model(format!("curve {name} defined twice")));
        }
        if let Some(k) = boundary {
            if k >= self.boundary_count() {
                return Err(McgError::Model(format!(
                    "curve {name}: no boundary component {k}"
                )));
            }
        }
        self.index.insert(name.to_string(), self.curves.len());
        self.curves.push(Curve {
            name: name.to_string(),
            class,
            boundary,
        });
        Ok(())
    }

    fn idx(&self, name: &str) -> Result<usize, McgError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| McgError::UnknownCurve(name.to_string()))
    }

    pub fn declare_disjoint(&mut self, a: &str, b: &str) -> Result<(), McgError> {
        let (i, j) = (self.idx(a)?, self.idx(b)?);
        if pair(&self.form, &self.curves[i].class, &self.curves[j].class) != 0 {
            return Err(McgError::Model(format!(
                "{a} and {b} are declared disjoint but pair nontrivially"
            )));
        }
        self.disjoint.insert(ordered(i, j));
        Ok(())
    }

    pub fn declare_meets_once(&mut self, a: &str, b: &str) -> Result<(), McgError> {
        let (i, j) = (self.idx(a)?, self.idx(b)?);
        if pair(&self.form, &self.curves[i].class, &self.curves[j].class).abs() != 1 {
            return Err(McgError::Model(format!(
                "{a} and {b} are declared to meet once but pair to {}",
                pair(&self.form, &self.curves[i].class, &self.curves[j].class)
            )));
        }
        self.meets_once.insert(ordered(i, j));
        Ok(())
    }

    pub fn add_relation(&mut self, name: &str, left: &str, right: &str) -> Result<(), McgError> {
        let r = Relation::new(name, left, right)?;
        for c in r.curves() {
            self.idx(c)?;
        }
        self.relations.push(r);
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn boundary_count(&self) -> usize {
        self.boundaries.len()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        2 - 2 * self.genus as i64 - self.boundary_count() as i64
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn form(&self) -> &[Vec<i64>] {
        &self.form
    }

    pub fn boundaries(&self) -> &[Vec<i64>] {
        &self.boundaries
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn curve(&self, name: &str) -> Result<&Curve, McgError> {
        Ok(&self.curves[self.idx(name)?])
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn relation(&self, name: &str) -> Option<&Relation> {
        self.relations.iter().find(|r| r.name == name)
    }

    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        pair(&self.form, x, y)
    }

    pub fn are_disjoint(&self, a: &str, b: &str) -> bool {
        match (self.index.get(a), self.index.get(b)) {
            (Some(&i), Some(&j)) => self.disjoint.contains(&ordered(i, j)),
            _ => false,
        }
    }

    pub fn meet_once(&self, a: &str, b: &str) -> bool {
        match (self.index.get(a), self.index.get(b)) {
            (Some(&i), Some(&j)) => self.meets_once.contains(&ordered(i, j)),
            _ => false,
        }
    }

    pub fn meets_once_pairs(&self) -> Vec<(&str, &str)> {
        self.meets_once
            .iter()
            .map(|&(i, j)| (self.curves[i].name.as_str(), self.curves[j].name.as_str()))
            .collect()
    }

    /// Boundary-parallel, or declared disjoint from every other curve.
    pub fn is_central(&self, name: &str) -> bool {
        let Some(&i) = self.index.get(name) else {
            return false;
        };
        self.curves[i].boundary.is_some()
            || (0..self.curves.len()).all(|j| j == i || self.disjoint.contains(&ordered(i, j)))
    }

    /// Twists along `a` and `b` commute in the mapping class group.
    pub fn commute(&self, a: &str, b: &str) -> bool {
        a == b || self.is_central(a) || self.is_central(b) || self.are_disjoint(a, b)
    }

    pub fn check_word(&self, w: &TwistWord) -> Result<(), McgError> {
        for c in w.curve_names() {
            self.idx(c)?;
        }
        Ok(())
    }

    /// Structural checks: skew form, boundary classes summing to zero and in
    /// the radical, boundary-parallel curves in the radical.
    pub fn validate(&self) -> Result<(), McgError> {
        let r = self.rank();
        if r != 2 * self.genus + self.boundary_count() - 1 {
            return Err(McgError::Model("rank is not 2g + r - 1".into()));
        }
        for i in 0..r {
            for j in 0..r {
                if self.form[i][j] != -self.form[j][i] {
                    return Err(McgError::Model("intersection form is not skew".into()));
                }
            }
        }
        let mut total = vec![0; r];
        for b in &self.boundaries {
            for (t, x) in total.iter_mut().zip(b) {
                *t += x;
            }
            if (0..r).any(|j| {
                let mut e = vec![0; r];
                e[j] = 1;
                self.pairing(b, &e) != 0
            }) {
                return Err(McgError::Model(
                    "a boundary class pairs nontrivially".into(),
                ));
            }
        }
        if total.iter().any(|&x| x != 0) {
            return Err(McgError::Model(
                "boundary classes do not sum to zero".into(),
            ));
        }
        for c in &self.curves {
            if let Some(k) = c.boundary {
                let b = &self.boundaries[k];
                if c.class != *b && c.class.iter().zip(b).any(|(x, y)| *x != -y) {
                    return Err(McgError::Model(format!(
                        "{} is not homologous to its boundary",
                        c.name
                    )));
                }
            }
        }
        Ok(())
    }

    /// Parses `name [param]` as used on the `surface` line of a script.
    pub fn by_name(spec: &str) -> Result<Self, McgError> {
        let parts: Vec<&str> = spec.split_whitespace().collect();
        let param = |p: Option<&&str>| -> Result<i64, McgError> {
            p.ok_or_else(|| McgError::Model(format!("`{spec}` needs a parameter")))?
                .parse::<i64>()
                .map_err(|_| McgError::Model(format!("bad parameter in `{spec}`")))
        };
        match parts.as_slice() {
            ["disk"] => disk(),
            ["one-holed-torus"] => one_holed_torus(),
            ["two-holed-torus"] => n_family_torus(3),
            ["four-holed-torus"] => four_holed_torus(),
            ["n-family", rest @ ..] if rest.len() == 1 => n_family_torus(param(rest.first())?),
            _ => Err(McgError::Model(format!("unknown surface `{spec}`"))),
        }
    }

    pub(crate) fn from_parts(
        name: String,
        genus: usize,
        basis: Vec<String>,
        form: Vec<Vec<i64>>,
        boundaries: Vec<Vec<i64>>,
    ) -> Self {
        SurfaceModel {
            name,
            genus,
            basis,
            form,
            boundaries,
            curves: Vec::new(),
            index: BTreeMap::new(),
            disjoint: BTreeSet::new(),
            meets_once: BTreeSet::new(),
            relations: Vec::new(),
        }
    }

    pub(crate) fn copy_declarations_from(&mut self, other: &SurfaceModel) {
        for &(i, j) in &other.disjoint {
            let _ = self.declare_disjoint(&other.curves[i].name, &other.curves[j].name);
        }
        for &(i, j) in &other.meets_once {
            let _ = self.declare_meets_once(&other.curves[i].name, &other.curves[j].name);
        }
        for r in &other.relations {
            self.relations.push(r.clone());
        }
    }
}

pub fn disk() -> Result<SurfaceModel, McgError> {
    SurfaceModel::standard("disk", 0, 1)
}

pub fn one_holed_torus() -> Result<SurfaceModel, McgError> {
    let mut s = SurfaceModel::standard("one-holed-torus", 1, 1)?;
    s.add_curve("alpha", s.class(&[("a", 1)]), None)?;
    s.add_curve("beta", s.class(&[("b", 1)]), None)?;
    s.add_curve("delta", s.class(&[]), Some(0))?;
    s.declare_meets_once("alpha", "beta")?;
    s.add_relation("chain", "(alpha beta)^6", "delta")?;
    s.validate()?;
    Ok(s)
}

/// Torus with `n - 1` boundary components carrying the `N_n` curve system:
/// `alpha1`, `alpha2` cobound the punctured annulus around `delta1 ...
/// delta_{n-2}`, `beta` meets both once, `gamma` is `alpha1` twisted along
/// `beta`, and `x` encloses the small punctures.
pub fn n_family_torus(n: i64) -> Result<SurfaceModel, McgError> {
    if n < 2 {
        return Err(McgError::Model("n-family needs n >= 2".into()));
    }
    let punctures = (n - 2) as usize;
    let name = if n == 3 {
        "two-holed-torus".to_string()
    } else {
        format!("n-family {n}")
    };
    let mut s = SurfaceModel::standard(name, 1, punctures + 1)?;
    let cs: Vec<String> = (1..=punctures).map(|k| format!("c{k}")).collect();
    let all_c: Vec<(&str, i64)> = cs.iter().map(|c| (c.as_str(), 1)).collect();
    s.add_curve("alpha1", s.class(&[("a", 1)]), None)?;
    let mut alpha2 = all_c.clone();
    alpha2.push(("a", 1));
    s.add_curve("alpha2", s.class(&alpha2), None)?;
    s.add_curve("beta", s.class(&[("b", 1)]), None)?;
    s.add_curve("gamma", s.class(&[("a", 1), ("b", 1)]), None)?;
    for (k, c) in cs.iter().enumerate() {
        s.add_curve(
            &format!("delta{}", k + 1),
            s.class(&[(c.as_str(), 1)]),
            Some(k),
        )?;
    }
    let outer: Vec<(&str, i64)> = cs.iter().map(|c| (c.as_str(), -1)).collect();
    s.add_curve(&format!("delta{}", n - 1), s.class(&outer), Some(punctures))?;
    if n >= 3 {
        s.add_curve("x", s.class(&all_c), None)?;
        for other in ["alpha1", "alpha2", "beta", "gamma"] {
            s.declare_disjoint("x", other)?;
        }
        for k in 1..n {
            s.declare_disjoint("x", &format!("delta{k}"))?;
        }
    }
    s.declare_disjoint("alpha1", "alpha2")?;
    s.declare_meets_once("alpha1", "beta")?;
    s.declare_meets_once("alpha2", "beta")?;
    s.declare_meets_once("gamma", "alpha1")?;
    s.declare_meets_once("gamma", "beta")?;
    s.add_relation("gamma-beta", "gamma beta", "beta alpha1")?;
    if n >= 3 {
        s.add_relation(
            "two-holed-torus",
            &format!("delta{} x", n - 1),
            "(alpha1 alpha2 beta)^4",
        )?;
    } else {
        s.add_relation("two-holed-torus", "delta1", "(alpha1 alpha2 beta)^4")?;
    }
    s.validate()?;
    Ok(s)
}

/// Torus with four boundary components carrying the `M_k` curve system.
pub fn four_holed_torus() -> Result<SurfaceModel, McgError> {
    let mut s = SurfaceModel::standard("four-holed-torus", 1, 4)?;
    s.add_curve("alpha1", s.class(&[("a", 1)]), None)?;
    s.add_curve("alpha2", s.class(&[("a", 1), ("c1", 1)]), None)?;
    s.add_curve("alpha3", s.class(&[("a", 1), ("c1", 1), ("c2", 1)]), None)?;
    s.add_curve(
        "alpha4",
        s.class(&[("a", 1), ("c1", 1), ("c2", 1), ("c3", 1)]),
        None,
    )?;
    s.add_curve("beta", s.class(&[("b", 1)]), None)?;
    s.add_curve(
        "gamma1",
        s.class(&[("a", 1), ("c1", 1), ("c2", 1), ("b", 1)]),
        None,
    )?;
    s.add_curve(
        "gamma2",
        s.class(&[("a", 1), ("c1", 1), ("c2", 1), ("c3", 1), ("b", 1)]),
        None,
    )?;
    s.add_curve("beta1", s.class(&[("b", 1), ("c2", 1)]), None)?;
    for k in 1..=3 {
        s.add_curve(
            &format!("delta{k}"),
            s.class(&[(format!("c{k}").as_str(), 1)]),
            Some(k - 1),
        )?;
    }
    s.add_curve(
        "delta4",
        s.class(&[("c1", -1), ("c2", -1), ("c3", -1)]),
        Some(3),
    )?;
    for i in 1..=4 {
        for j in i + 1..=4 {
            s.declare_disjoint(&format!("alpha{i}"), &format!("alpha{j}"))?;
        }
        s.declare_meets_once(&format!("alpha{i}"), "beta")?;
    }
    s.declare_disjoint("beta1", "beta")?;
    s.declare_meets_once("gamma1", "beta")?;
    s.declare_meets_once("gamma2", "beta")?;
    s.declare_meets_once("gamma1", "alpha3")?;
    s.declare_meets_once("gamma2", "alpha4")?;
    s.add_relation("gamma1-beta", "gamma1 beta", "beta alpha3")?;
    s.add_relation("gamma2-beta", "gamma2 beta", "beta alpha4")?;
    s.add_relation(
        "beta1-slide",
        "beta1 alpha2 alpha3^-1",
        "alpha2 alpha3^-1 beta",
    )?;
    s.add_relation(
        "four-holed-torus",
        "(alpha1 alpha3 beta alpha2 alpha4 beta)^2",
        "delta1 delta2 delta3 delta4",
    )?;
    s.validate()?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn models_validate() {
        for spec in [
            "disk",
            "one-holed-torus",
            "two-holed-torus",
            "four-holed-torus",
            "n-family 2",
            "n-family 6",
        ] {
            let s = SurfaceModel::by_name(spec).unwrap();
            s.validate().unwrap();
            assert_eq!(s.rank(), 2 * s.genus() + s.boundary_count() - 1);
        }
        assert!(SurfaceModel::by_name("n-family 1").is_err());
        assert!(SurfaceModel::by_name("klein-bottle").is_err());
    }

    #[test]
    fn central_curves() {
        let s = n_family_torus(4).unwrap();
        assert!(s.is_central("delta1"));
        assert!(s.is_central("delta3"));
        assert!(s.is_central("x"));
        assert!(!s.is_central("alpha1"));
        assert!(s.commute("alpha1", "alpha2"));
        assert!(!s.commute("alpha1", "beta"));
        let f = four_holed_torus().unwrap();
        assert!(f.commute("beta1", "beta"));
        assert!(!f.commute("beta1", "alpha2"));
    }

    #[test]
    fn declarations_are_checked() {
        let mut s = one_holed_torus().unwrap();
        assert!(s.declare_disjoint("alpha", "beta").is_err());
        assert!(s.add_curve("alpha", vec![1, 0], None).is_err());
        assert!(s.add_relation("bogus", "alpha", "zeta").is_err());
    }
}
