use std::collections::{BTreeMap, HashMap};

use super::drawing::Drawing;
use super::point::Point;
use super::segment::{classify, Bbox, Contact};
use crate::error::{Error, Result};

/// A transversal crossing between two distinct edges. `edge_a < edge_b`
/// (drawing indices); segment indices refer to each edge's polyline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub edge_a: usize,
    pub edge_b: usize,
    pub point: Point,
    pub segment_a: usize,
    pub segment_b: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfCrossing {
    pub edge: usize,
    pub point: Point,
    pub segment_a: usize,
    pub segment_b: usize,
}

/// Non-fatal irregularities: the crossing set is still usable.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DegeneracyReport {
    pub self_crossings: Vec<SelfCrossing>,
    /// `(edge_a, edge_b, times)` for pairs that cross at least twice.
    pub multiple_pairs: Vec<(usize, usize, usize)>,
    /// Indices into the crossing list of crossings between edges sharing an endpoint.
    pub adjacent_crossings: Vec<usize>,
}

impl DegeneracyReport {
    pub fn is_clean(&self) -> bool {
        self.self_crossings.is_empty()
            && self.multiple_pairs.is_empty()
            && self.adjacent_crossings.is_empty()
    }
}

/// All crossings of a drawing in canonical order. The crossing id is its index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingSet {
    pub crossings: Vec<Crossing>,
    pub edge_count: usize,
    pub report: DegeneracyReport,
}

impl CrossingSet {
    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn crossing_graph(&self) -> CrossingGraph {
        CrossingGraph::new(
            self.edge_count,
            self.crossings
                .iter()
                .map(|c| (c.edge_a, c.edge_b))
                .collect(),
        )
    }
}

struct Seg<'a> {
    edge: usize,
    index: usize,
    a: &'a Point,
    b: &'a Point,
    bbox: Bbox,
}

/// Finds every transversal crossing exactly. Triple points, collinear
/// overlaps and contacts at bend points are hard errors.
pub fn compute_crossings(d: &Drawing) -> Result<CrossingSet> {
    let mut segs = Vec::new();
    let polylines: Vec<Vec<&Point>> = (0..d.edge_count()).map(|e| d.polyline(e)).collect();
    for (e, pts) in polylines.iter().enumerate() {
        for (i, w) in pts.windows(2).enumerate() {
            segs.push(Seg {
                edge: e,
                index: i,
                a: w[0],
                b: w[1],
                bbox: Bbox::of_segment(w[0], w[1]),
            });
        }
    }
    // sweep over x so that only bbox-overlapping pairs reach the exact test
    let mut order: Vec<usize> = (0..segs.len()).collect();
    order.sort_by(|&i, &j| segs[i].bbox.min_x.total_cmp(&segs[j].bbox.min_x));

    let vertex_at: HashMap<&Point, usize> = d
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, v)| (&v.point, i))
        .collect();
    let edge_name = |e: usize| d.edges()[e].id.clone();

    let mut crossings = Vec::new();
    let mut self_crossings = Vec::new();
    // an overlap also touches at a bend, so report overlaps in preference
    let mut bend_contact = None;
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[pos + 1..] {
            if segs[j].bbox.min_x > segs[i].bbox.max_x {
                break;
            }
            if !segs[i].bbox.overlaps(&segs[j].bbox) {
                continue;
            }
            let (s, t) = if (segs[i].edge, segs[i].index) < (segs[j].edge, segs[j].index) {
                (&segs[i], &segs[j])
            } else {
                (&segs[j], &segs[i])
            };
            match classify(s.a, s.b, t.a, t.b) {
                Contact::Disjoint => {}
                Contact::Overlap => {
                    return Err(Error::Overlap(edge_name(s.edge), edge_name(t.edge)))
                }
                Contact::Proper(point) => {
                    if s.edge == t.edge {
                        self_crossings.push(SelfCrossing {
                            edge: s.edge,
                            point,
                            segment_a: s.index,
                            segment_b: t.index,
                        });
                    } else {
                        crossings.push(Crossing {
                            edge_a: s.edge,
                            edge_b: t.edge,
                            point,
                            segment_a: s.index,
                            segment_b: t.index,
                        });
                    }
                }
                Contact::Touch(point) => {
                    // consecutive segments of one polyline share their bend
                    if s.edge == t.edge && t.index == s.index + 1 && *s.b == point {
                        continue;
                    }
                    // meeting at a common vertex is how adjacent edges touch
                    if vertex_at.contains_key(&point) {
                        continue;
                    }
                    bend_contact.get_or_insert(Error::BendContact {
                        a: edge_name(s.edge),
                        b: edge_name(t.edge),
                        point: point.to_string(),
                    });
                }
            }
        }
    }

    if let Some(err) = bend_contact {
        return Err(err);
    }

    // two crossing records at one point mean three or more curves pass through it
    let mut at: HashMap<&Point, Vec<usize>> = HashMap::new();
    for c in &crossings {
        at.entry(&c.point).or_default().extend([c.edge_a, c.edge_b]);
    }
    for c in &self_crossings {
        at.entry(&c.point).or_default().extend([c.edge, c.edge]);
    }
    let mut worst: Option<(&Point, Vec<usize>)> = None;
    for (p, mut es) in at {
        if es.len() > 2 {
            es.sort_unstable();
            es.dedup();
            if worst.as_ref().is_none_or(|(q, _)| p < *q) {
                worst = Some((p, es));
            }
        }
    }
    if let Some((p, es)) = worst {
        return Err(Error::TriplePoint {
            point: p.to_string(),
            edges: es.into_iter().map(edge_name).collect(),
        });
    }

    crossings.sort_by(|x, y| {
        (x.edge_a, x.edge_b, x.segment_a, x.segment_b).cmp(&(
            y.edge_a,
            y.edge_b,
            y.segment_a,
            y.segment_b,
        ))
    });
    self_crossings.sort_by(|x, y| {
        (x.edge, x.segment_a, x.segment_b).cmp(&(y.edge, y.segment_a, y.segment_b))
    });

    let mut pair_counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for c in &crossings {
        *pair_counts.entry((c.edge_a, c.edge_b)).or_default() += 1;
    }
    let multiple_pairs = pair_counts
        .into_iter()
        .filter(|&(_, n)| n >= 2)
        .map(|((a, b), n)| (a, b, n))
        .collect();
    let adjacent = |a: usize, b: usize| {
        let (ea, eb) = (&d.edges()[a], &d.edges()[b]);
        [ea.source, ea.target]
            .iter()
            .any(|v| *v == eb.source || *v == eb.target)
    };
    let adjacent_crossings = crossings
        .iter()
        .enumerate()
        .filter(|(_, c)| adjacent(c.edge_a, c.edge_b))
        .map(|(i, _)| i)
        .collect();

    Ok(CrossingSet {
        crossings,
        edge_count: d.edge_count(),
        report: DegeneracyReport {
            self_crossings,
            multiple_pairs,
            adjacent_crossings,
        },
    })
}

/// Crossing graph: node per drawing edge, arc per crossing (arc index = crossing id).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingGraph {
    node_count: usize,
    arcs: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
}

impl CrossingGraph {
    pub fn new(node_count: usize, arcs: Vec<(usize, usize)>) -> Self {
        let mut incident = vec![Vec::new(); node_count];
        for (i, &(a, b)) in arcs.iter().enumerate() {
            assert!(
                a != b && a < node_count && b < node_count,
                "bad crossing-graph arc"
            );
            incident[a].push(i);
            incident[b].push(i);
        }
        CrossingGraph {
            node_count,
            arcs,
            incident,
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arc ids incident to node `v`.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incident[v].len()
    }

    pub fn other(&self, arc: usize, v: usize) -> usize {
        let (a, b) = self.arcs[arc];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Nodes with at least one arc.
    pub fn participants(&self) -> Vec<usize> {
        (0..self.node_count)
            .filter(|&v| self.degree(v) > 0)
            .collect()
    }
}
