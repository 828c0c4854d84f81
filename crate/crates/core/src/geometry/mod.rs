mod crossings;
mod drawing;
mod homotopy;
mod planarization;
mod point;
mod segment;

pub use crossings::{
    compute_crossings, Crossing, CrossingGraph, CrossingSet, DegeneracyReport, SelfCrossing,
};
pub use drawing::{
    emit_drawing, is_strictly_convex, load_drawing, BendDocument, Drawing, DrawingBuilder,
    DrawingDocument, Edge, EdgeDocument, Vertex, VertexDocument,
};
pub use homotopy::{homotopic_parallel_pairs, HomotopyReport};
pub use planarization::{
    planarization_stats, planarize, ComponentStats, Planarization, PlanarizationStats,
};
pub use point::{angle_cmp, format_rational, orientation, parse_rational, to_f64, Point, Rational};
pub use segment::{classify, on_segment, Contact};

use std::collections::BTreeSet;

/// Simple-topological check without any redrawing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityReport {
    pub is_simple_topological: bool,
    pub self_crossing_edges: Vec<usize>,
    pub multiply_crossing_pairs: Vec<(usize, usize)>,
    pub adjacent_crossings: Vec<usize>,
}

pub fn simplicity_report(cs: &CrossingSet) -> SimplicityReport {
    let selfs: BTreeSet<usize> = cs.report.self_crossings.iter().map(|s| s.edge).collect();
    let report = SimplicityReport {
        is_simple_topological: cs.report.is_clean(),
        self_crossing_edges: selfs.into_iter().collect(),
        multiply_crossing_pairs: cs
            .report
            .multiple_pairs
            .iter()
            .map(|&(a, b, _)| (a, b))
            .collect(),
        adjacent_crossings: cs.report.adjacent_crossings.clone(),
    };
    report
}
