//! Certificate and report documents.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::density::{crossing_lower_bounds, density_report, DensityReport, GraphKind, Verdict};
use crate::error::{Error, Result};
use crate::geometry::{
    compute_crossings, format_rational, homotopic_parallel_pairs, planarization_stats, planarize,
    simplicity_report, CrossingSet, Drawing,
};
use crate::solver::{
    degeneracy, feasible_k, has_cycle, max_crossings_per_edge, max_pairwise_crossing, min_gap_k,
    pseudoforest_decomposition, Feasibility, GapAssignment, ViolationWitness,
};

/// Document id of the crossing at canonical index `i`.
pub fn crossing_id(i: usize) -> String {
    format!("x{i}")
}

fn crossing_index(id: &str) -> Option<usize> {
    id.strip_prefix('x')?.parse().ok()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AssignmentEntry {
    pub crossing: String,
    pub edge: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GapCount {
    pub edge: String,
    pub count: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AssignmentDocument {
    pub k: usize,
    pub assignments: Vec<AssignmentEntry>,
    pub gaps_per_edge: Vec<GapCount>,
}

impl AssignmentDocument {
    pub fn from_assignment(d: &Drawing, ga: &GapAssignment) -> Self {
        let edges = d.edges();
        AssignmentDocument {
            k: ga.k,
            assignments: ga
                .assigned
                .iter()
                .enumerate()
                .map(|(c, &e)| AssignmentEntry {
                    crossing: crossing_id(c),
                    edge: edges[e].id.clone(),
                })
                .collect(),
            gaps_per_edge: ga
                .gaps_per_edge
                .iter()
                .enumerate()
                .map(|(e, &count)| GapCount {
                    edge: edges[e].id.clone(),
                    count,
                })
                .collect(),
        }
    }

    /// Resolves ids against the drawing and validates the result.
    pub fn to_assignment(&self, d: &Drawing, cs: &CrossingSet) -> Result<GapAssignment> {
        let bad = |m: String| Error::InvalidAssignment(m);
        let mut assigned = vec![usize::MAX; cs.len()];
        for entry in &self.assignments {
            let c = crossing_index(&entry.crossing)
                .filter(|&c| c < cs.len())
                .ok_or_else(|| bad(format!("unknown crossing `{}`", entry.crossing)))?;
            let e = d
                .edge_index(&entry.edge)
                .ok_or_else(|| bad(format!("unknown edge `{}`", entry.edge)))?;
            if assigned[c] != usize::MAX {
                return Err(bad(format!("crossing `{}` assigned twice", entry.crossing)));
            }
            assigned[c] = e;
        }
        if let Some(c) = assigned.iter().position(|&e| e == usize::MAX) {
            return Err(bad(format!(
                "crossing `{}` has no assignment",
                crossing_id(c)
            )));
        }
        GapAssignment::from_assigned(&cs.crossing_graph(), self.k, assigned)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct WitnessDocument {
    pub k: usize,
    pub subset: Vec<String>,
    pub crossings_in_subset: usize,
}

impl WitnessDocument {
    pub fn from_witness(d: &Drawing, w: &ViolationWitness) -> Self {
        WitnessDocument {
            k: w.k,
            subset: w.subset.iter().map(|&e| d.edges()[e].id.clone()).collect(),
            crossings_in_subset: w.crossings_in_subset,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CrossingEntry {
    pub id: String,
    pub edge_a: String,
    pub edge_b: String,
    pub x: String,
    pub y: String,
    pub segment_a: usize,
    pub segment_b: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SelfCrossingEntry {
    pub edge: String,
    pub x: String,
    pub y: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CrossingReportDocument {
    pub crossings: Vec<CrossingEntry>,
    pub self_crossings: Vec<SelfCrossingEntry>,
    pub multiply_crossing_pairs: Vec<(String, String, usize)>,
    pub adjacent_crossings: Vec<String>,
}

impl CrossingReportDocument {
    pub fn new(d: &Drawing, cs: &CrossingSet) -> Self {
        let id = |e: usize| d.edges()[e].id.clone();
        CrossingReportDocument {
            crossings: cs
                .crossings
                .iter()
                .enumerate()
                .map(|(i, c)| CrossingEntry {
                    id: crossing_id(i),
                    edge_a: id(c.edge_a),
                    edge_b: id(c.edge_b),
                    x: format_rational(&c.point.x),
                    y: format_rational(&c.point.y),
                    segment_a: c.segment_a,
                    segment_b: c.segment_b,
                })
                .collect(),
            self_crossings: cs
                .report
                .self_crossings
                .iter()
                .map(|s| SelfCrossingEntry {
                    edge: id(s.edge),
                    x: format_rational(&s.point.x),
                    y: format_rational(&s.point.y),
                })
                .collect(),
            multiply_crossing_pairs: cs
                .report
                .multiple_pairs
                .iter()
                .map(|&(a, b, n)| (id(a), id(b), n))
                .collect(),
            adjacent_crossings: cs
                .report
                .adjacent_crossings
                .iter()
                .map(|&c| crossing_id(c))
                .collect(),
        }
    }
}

pub fn density_value(r: &DensityReport) -> Value {
    json!({
        "n": r.n,
        "m": r.m,
        "k": r.k,
        "bounds": r.bounds.iter().map(|b| json!({
            "name": b.name,
            "threshold": b.threshold.to_string(),
            "satisfied": b.satisfied,
            "note": b.note,
        })).collect::<Vec<_>>(),
        "verdict": match r.verdict {
            Verdict::Possibly => "possibly k-gap-planar",
            Verdict::NotGapPlanar => "not k-gap-planar",
        },
    })
}

/// Clique search is exponential; beyond this many crossing edges it is skipped.
pub const CLIQUE_LIMIT: usize = 64;

/// Full analysis of a drawing. `k` adds a feasibility check at that k.
pub fn analysis_report(d: &Drawing, k: Option<usize>) -> Result<Value> {
    let cs = compute_crossings(d)?;
    let cg = cs.crossing_graph();
    let ids = |v: &[usize]| {
        v.iter()
            .map(|&e| d.edges()[e].id.clone())
            .collect::<Vec<_>>()
    };

    let min = min_gap_k(&cg);
    let gap_free = ids(&min.assignment.gap_free_edges(&cg));
    let decomposition_ok = pseudoforest_decomposition(&cg, &min.assignment).is_ok();
    let at_k = k.map(|k| match feasible_k(&cg, k) {
        Feasibility::Feasible(a) => json!({
            "k": k,
            "feasible": true,
            "assignment": AssignmentDocument::from_assignment(d, &a),
        }),
        Feasibility::Infeasible(w) => json!({
            "k": k,
            "feasible": false,
            "witness": WitnessDocument::from_witness(d, &w),
        }),
    });

    let deg = degeneracy(&cg);
    let cycle = has_cycle(&cg).map(|c| ids(&c.nodes));
    let clique = match max_pairwise_crossing(&cg, CLIQUE_LIMIT) {
        Ok(c) => json!({"size": c.size, "edges": ids(&c.members)}),
        Err(e) => json!({"skipped": e.to_string()}),
    };
    let counts = max_crossings_per_edge(&cs);
    let simple = simplicity_report(&cs);

    let (n, m) = (d.vertex_count(), d.edge_count());
    let kind = if d.is_multigraph() {
        let h = homotopic_parallel_pairs(d, &cs);
        GraphKind::Multigraph {
            no_homotopic_parallels: h.homotopic.is_empty() && h.undecided.is_empty(),
        }
    } else {
        GraphKind::Simple
    };
    let density_k = k.unwrap_or(min.k).max(1);
    let density = if n >= 3 {
        density_value(&density_report(n, m, density_k, kind)?)
    } else {
        Value::Null
    };
    let lower = crossing_lower_bounds(n.max(3), m)?;

    let planar = if cs.report.self_crossings.is_empty() {
        let p = planarize(d, &cs)?;
        let st = planarization_stats(&p);
        json!({
            "n": st.n,
            "m": st.m,
            "f": st.f,
            "connected": st.connected,
            "biconnected": st.biconnected,
            "face_incidence": d.vertices().iter().zip(&st.face_incidence)
                .map(|(v, &c)| json!({"vertex": v.id, "faces": c})).collect::<Vec<_>>(),
            "face_sharing_pairs": st.face_sharing_pairs,
            "components": st.components.len(),
        })
    } else {
        Value::Null
    };

    Ok(json!({
        "n": n,
        "m": m,
        "multigraph": d.is_multigraph(),
        "crossing_count": cs.len(),
        "crossings": CrossingReportDocument::new(d, &cs),
        "simple_topological": simple.is_simple_topological,
        "k_star": min.k,
        "assignment": AssignmentDocument::from_assignment(d, &min.assignment),
        "witness_below": min.witness.as_ref().map(|w| WitnessDocument::from_witness(d, w)),
        "gap_free_edges": gap_free,
        "pseudoforest_decomposition_valid": decomposition_ok,
        "at_k": at_k,
        "degeneracy": deg.d,
        "crossing_graph_cycle": cycle,
        "max_pairwise_crossing": clique,
        "max_crossings_per_edge": counts.max,
        "crossings_per_edge": d.edges().iter().zip(&counts.per_edge)
            .map(|(e, &c)| json!({"edge": e.id, "count": c})).collect::<Vec<_>>(),
        "density": density,
        "crossing_lower_bounds": {
            "linear": format_rational(&lower.linear),
            "cubic": lower.cubic.as_ref().map(format_rational),
        },
        "planarization": planar,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{compute_crossings, load_drawing};
    use crate::solver::feasible_k;

    fn x() -> Drawing {
        load_drawing(
            r#"{"vertices":[{"id":"a","x":0,"y":0},{"id":"b","x":2,"y":2},{"id":"c","x":0,"y":2},{"id":"d","x":2,"y":0}],
            "edges":[{"id":"ab","source":"a","target":"b"},{"id":"cd","source":"c","target":"d"}]}"#,
        )
        .unwrap()
    }

    #[test]
    fn assignment_document_round_trip() {
        let d = x();
        let cs = compute_crossings(&d).unwrap();
        let ga = feasible_k(&cs.crossing_graph(), 1)
            .assignment()
            .unwrap()
            .clone();
        let doc = AssignmentDocument::from_assignment(&d, &ga);
        assert_eq!(doc.assignments[0].crossing, "x0");
        let text = serde_json::to_string(&doc).unwrap();
        let back: AssignmentDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_assignment(&d, &cs).unwrap(), ga);
    }

    #[test]
    fn mismatched_assignment_rejected() {
        let d = x();
        let cs = compute_crossings(&d).unwrap();
        let doc = AssignmentDocument {
            k: 1,
            assignments: vec![AssignmentEntry {
                crossing: "x3".into(),
                edge: "ab".into(),
            }],
            gaps_per_edge: vec![],
        };
        assert!(matches!(
            doc.to_assignment(&d, &cs),
            Err(Error::InvalidAssignment(_))
        ));
        let empty = AssignmentDocument {
            k: 1,
            assignments: vec![],
            gaps_per_edge: vec![],
        };
        assert!(empty.to_assignment(&d, &cs).is_err());
    }
}
