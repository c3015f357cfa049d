//! Legendrian surgery diagrams for plumbing trees with all weights at most -2.

use thiserror::Error;

use crate::graph::PlumbingGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LegendrianError {
    #[error(
        "cusp counts must be nonnegative with an even total of at least 2 (down {down}, up {up})"
    )]
    BadCusps { down: i64, up: i64 },
    #[error("vertex {vertex} has weight {weight}; Legendrian realization needs weight <= -2")]
    WeightTooLarge { vertex: String, weight: i64 },
    #[error("component {index} is {found}, graph vertex is {expected}")]
    VertexMismatch {
        index: usize,
        expected: String,
        found: String,
    },
    #[error("diagram has {found} components, graph has {expected} vertices")]
    CountMismatch { expected: usize, found: usize },
    #[error("component {vertex}: surgery coefficient {surgery} differs from weight {weight}")]
    FramingMismatch {
        vertex: String,
        surgery: i64,
        weight: i64,
    },
    #[error("component {vertex}: tb {tb}, rot {rot} is not realizable by a Legendrian unknot")]
    NotRealizable { vertex: String, tb: i64, rot: i64 },
    #[error("component {0} has no zigzag on the up side to flip")]
    NoZigzag(String),
    #[error("component index {0} out of range")]
    NoSuchComponent(usize),
}

/// Combinatorial data of a front projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FrontData {
    pub writhe: i64,
    pub cusps_down: i64,
    pub cusps_up: i64,
}

impl FrontData {
    pub fn new(writhe: i64, cusps_down: i64, cusps_up: i64) -> Result<Self, LegendrianError> {
        let f = FrontData {
            writhe,
            cusps_down,
            cusps_up,
        };
        f.validate()?;
        Ok(f)
    }

    fn validate(&self) -> Result<(), LegendrianError> {
        let (down, up) = (self.cusps_down, self.cusps_up);
        if down < 0 || up < 0 || (down + up) % 2 != 0 || down + up < 2 {
            return Err(LegendrianError::BadCusps { down, up });
        }
        Ok(())
    }
}

/// `(tb, rot)` of a front: `tb = w - c/2`, `rot = (c_d - c_u)/2`.
pub fn front_invariants(f: &FrontData) -> Result<(i64, i64), LegendrianError> {
    f.validate()?;
    let tb = f.writhe - (f.cusps_down + f.cusps_up) / 2;
    let rot = (f.cusps_down - f.cusps_up) / 2;
    Ok((tb, rot))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    AllUp,
    AllDown,
}

impl Orientation {
    pub fn name(&self) -> &'static str {
        match self {
            Orientation::AllUp => "all-up",
            Orientation::AllDown => "all-down",
        }
    }

    fn sign(&self) -> i64 {
        match self {
            Orientation::AllUp => 1,
            Orientation::AllDown => -1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LegendrianComponent {
    pub vertex: String,
    pub weight: i64,
    pub front: FrontData,
    pub tb: i64,
    pub rot: i64,
    /// Contact framing minus one.
    pub surgery: i64,
}

impl LegendrianComponent {
    fn from_front(vertex: String, weight: i64, front: FrontData) -> Result<Self, LegendrianError> {
        let (tb, rot) = front_invariants(&front)?;
        let c = LegendrianComponent {
            vertex,
            weight,
            front,
            tb,
            rot,
            surgery: tb - 1,
        };
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> Result<(), LegendrianError> {
        if self.surgery != self.weight || self.surgery != self.tb - 1 {
            return Err(LegendrianError::FramingMismatch {
                vertex: self.vertex.clone(),
                surgery: self.surgery,
                weight: self.weight,
            });
        }
        let realizable =
            self.tb <= -1 && self.rot.abs() < -self.tb && (self.rot - self.tb - 1) % 2 == 0;
        if !realizable {
            return Err(LegendrianError::NotRealizable {
                vertex: self.vertex.clone(),
                tb: self.tb,
                rot: self.rot,
            });
        }
        Ok(())
    }
}

/// Surgery diagram on a chain-mail of Legendrian unknots, one per vertex,
/// clasped along the edges of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegendrianDiagram {
    components: Vec<LegendrianComponent>,
    clasps: Vec<(String, String)>,
    orientation: Orientation,
}

impl LegendrianDiagram {
    pub fn components(&self) -> &[LegendrianComponent] {
        &self.components
    }

    pub fn clasps(&self) -> &[(String, String)] {
        &self.clasps
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Moves one zigzag of component `j` from the up side to the down side.
    pub fn flip_zigzag(&self, j: usize) -> Result<Self, LegendrianError> {
        let c = self
            .components
            .get(j)
            .ok_or(LegendrianError::NoSuchComponent(j))?;
        let f = c.front;
        if f.cusps_up < 2 || f.cusps_down + f.cusps_up < 4 {
            return Err(LegendrianError::NoZigzag(c.vertex.clone()));
        }
        let front = FrontData::new(f.writhe, f.cusps_down + 2, f.cusps_up - 2)?;
        let mut out = self.clone();
        out.components[j] = LegendrianComponent::from_front(c.vertex.clone(), c.weight, front)?;
        Ok(out)
    }

    /// The same diagram with every component's orientation reversed, which
    /// exchanges up and down cusps.
    pub fn reversed(&self) -> Self {
        let components = self
            .components
            .iter()
            .map(|c| {
                let front = FrontData {
                    cusps_down: c.front.cusps_up,
                    cusps_up: c.front.cusps_down,
                    ..c.front
                };
                LegendrianComponent {
                    front,
                    rot: -c.rot,
                    ..c.clone()
                }
            })
            .collect();
        let orientation = match self.orientation {
            Orientation::AllUp => Orientation::AllDown,
            Orientation::AllDown => Orientation::AllUp,
        };
        LegendrianDiagram {
            components,
            clasps: self.clasps.clone(),
            orientation,
        }
    }
}

/// One unknot per vertex with `tb = e + 1`, every extra zigzag pushed to the
/// up side: one down cusp, `-2e - 3` up cusps, writhe zero.
pub fn canonical_surgery_diagram(g: &PlumbingGraph) -> Result<LegendrianDiagram, LegendrianError> {
    let mut components = Vec::with_capacity(g.len());
    for v in g.vertices() {
        if v.weight > -2 {
            return Err(LegendrianError::WeightTooLarge {
                vertex: v.id.clone(),
                weight: v.weight,
            });
        }
        let front = FrontData::new(0, 1, -2 * v.weight - 3)?;
        components.push(LegendrianComponent::from_front(
            v.id.clone(),
            v.weight,
            front,
        )?);
    }
    Ok(LegendrianDiagram {
        components,
        clasps: g
            .sorted_edge_ids()
            .into_iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
        orientation: Orientation::AllUp,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjunctionReport {
    pub holds: bool,
    /// `(vertex, rot, tb + 1)` for every component, in vertex order.
    pub per_vertex: Vec<(String, i64, i64)>,
    pub failures: Vec<String>,
}

/// Certifies `<c1, S_j> = S_j^2 + 2`, i.e. `rot = tb + 1` on every component
/// (with the sign flipped for an all-down diagram).
pub fn adjunction_check(
    d: &LegendrianDiagram,
    g: &PlumbingGraph,
) -> Result<AdjunctionReport, LegendrianError> {
    if d.components.len() != g.len() {
        return Err(LegendrianError::CountMismatch {
            expected: g.len(),
            found: d.components.len(),
        });
    }
    let sign = d.orientation.sign();
    let mut per_vertex = Vec::with_capacity(g.len());
    let mut failures = Vec::new();
    for (index, (c, v)) in d.components.iter().zip(g.vertices()).enumerate() {
        if c.vertex != v.id {
            return Err(LegendrianError::VertexMismatch {
                index,
                expected: v.id.clone(),
                found: c.vertex.clone(),
            });
        }
        if c.surgery != v.weight {
            return Err(LegendrianError::FramingMismatch {
                vertex: c.vertex.clone(),
                surgery: c.surgery,
                weight: v.weight,
            });
        }
        let expected = sign * (c.tb + 1);
        if c.rot != expected {
            failures.push(c.vertex.clone());
        }
        per_vertex.push((c.vertex.clone(), c.rot, expected));
    }
    Ok(AdjunctionReport {
        holds: failures.is_empty(),
        per_vertex,
        failures,
    })
}

/// `<c1(J), S_j>` for the Stein filling, which is the rotation number of
/// each attaching curve.
pub fn chern_evaluation(d: &LegendrianDiagram) -> Vec<i64> {
    d.components.iter().map(|c| c.rot).collect()
}
