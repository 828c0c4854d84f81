//! Generators for extremal and witness drawings.

mod bundle;
mod dodecahedron;
mod multigraph;
mod quasiplanar;
mod random;
mod squares;
mod wheel;
mod zarankiewicz;

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

pub use dodecahedron::gen_dodecahedron_diagonals;
pub use multigraph::gen_multigraph_extremal;
pub use quasiplanar::{gen_quasiplanar_witness, gen_quasiplanar_witness_default};
pub use random::{random_polyline_drawing, RandomDrawingParams};
pub use squares::gen_nested_squares;
pub use wheel::{full_wheel_t, gen_wheel_witness};
pub use zarankiewicz::{gen_zarankiewicz, gen_zarankiewicz_seeded, zarankiewicz_number, Layout};

use crate::error::{Error, Result};
use crate::geometry::{compute_crossings, CrossingSet, Drawing, Point, Rational};
use crate::solver::GapAssignment;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedCounts {
    pub n: usize,
    pub m: usize,
    pub crossings: usize,
}

/// A generated drawing with its declared counts and, when the construction
/// prescribes one, a gap assignment over the drawing's canonical crossings.
#[derive(Clone, Debug)]
pub struct GeneratedFamily {
    pub family: &'static str,
    pub params: BTreeMap<String, i64>,
    pub drawing: Drawing,
    pub expected: ExpectedCounts,
    pub crossings: CrossingSet,
    pub assignment: Option<GapAssignment>,
}

impl GeneratedFamily {
    fn new(
        family: &'static str,
        params: &[(&str, i64)],
        drawing: Drawing,
        expected: ExpectedCounts,
    ) -> Result<Self> {
        let crossings = compute_crossings(&drawing)?;
        let found = ExpectedCounts {
            n: drawing.vertex_count(),
            m: drawing.edge_count(),
            crossings: crossings.len(),
        };
        if found != expected {
            return Err(Error::Generator(format!(
                "{family}: expected {expected:?}, generated {found:?}"
            )));
        }
        Ok(GeneratedFamily {
            family,
            params: params.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            drawing,
            expected,
            crossings,
            assignment: None,
        })
    }

    /// Attaches a 1-gap assignment given by a rule on edge-id pairs: the rule
    /// receives the two crossing edge ids and names the one taking the gap.
    fn with_rule(mut self, rule: &HashMap<(String, String), String>) -> Result<Self> {
        let edges = self.drawing.edges();
        let mut assigned = Vec::with_capacity(self.crossings.len());
        for c in &self.crossings.crossings {
            let (a, b) = (&edges[c.edge_a].id, &edges[c.edge_b].id);
            let key = if a < b {
                (a.clone(), b.clone())
            } else {
                (b.clone(), a.clone())
            };
            let target = rule.get(&key).ok_or_else(|| {
                Error::Generator(format!(
                    "{}: no gap rule for crossing of `{a}` and `{b}`",
                    self.family
                ))
            })?;
            assigned.push(if *target == *a { c.edge_a } else { c.edge_b });
        }
        let cg = self.crossings.crossing_graph();
        self.assignment = Some(GapAssignment::from_assigned(&cg, 1, assigned)?);
        Ok(self)
    }

    pub fn manifest(&self) -> FamilyManifest {
        let assignment = self
            .assignment
            .as_ref()
            .map(|a| crate::io::AssignmentDocument::from_assignment(&self.drawing, a));
        FamilyManifest {
            family: self.family.to_string(),
            params: self.params.clone(),
            n: self.expected.n,
            m: self.expected.m,
            expected_crossings: self.expected.crossings,
            assignment,
        }
    }
}

#[derive(Clone, Debug, Serialize, serde::Deserialize, PartialEq, Eq)]
pub struct FamilyManifest {
    pub family: String,
    pub params: BTreeMap<String, i64>,
    pub n: usize,
    pub m: usize,
    pub expected_crossings: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub assignment: Option<crate::io::AssignmentDocument>,
}

/// Gap rule table keyed by the sorted pair of edge ids.
#[derive(Default)]
struct Rules(HashMap<(String, String), String>);

impl Rules {
    /// The crossing of `gap` and `other` is charged to `gap`.
    fn charge(&mut self, gap: &str, other: &str) {
        let key = if gap < other {
            (gap.to_string(), other.to_string())
        } else {
            (other.to_string(), gap.to_string())
        };
        self.0.insert(key, gap.to_string());
    }
}

/// Rounds a floating design coordinate onto the integer grid.
fn grid(x: f64, y: f64) -> Point {
    Point::new(int(x.round() as i64), int(y.round() as i64))
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn polar(r: f64, deg: f64) -> (f64, f64) {
    let t = deg.to_radians();
    (r * t.cos(), r * t.sin())
}
