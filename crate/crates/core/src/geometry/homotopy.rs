use std::cmp::Ordering;
use std::collections::HashSet;

use super::crossings::CrossingSet;
use super::drawing::Drawing;
use super::point::{orientation, Point};

/// Verdicts for every pair of parallel edges (pairs as drawing edge indices).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomotopyReport {
    pub homotopic: Vec<(usize, usize)>,
    pub non_homotopic: Vec<(usize, usize)>,
    /// Pairs whose union is not a simple closed curve.
    pub undecided: Vec<(usize, usize)>,
}

/// Decides homotopy of parallel pairs whose two polylines bound a simple lens:
/// homotopic iff no vertex lies strictly inside the lens.
pub fn homotopic_parallel_pairs(d: &Drawing, cs: &CrossingSet) -> HomotopyReport {
    let crossing_pairs: HashSet<(usize, usize)> =
        cs.crossings.iter().map(|c| (c.edge_a, c.edge_b)).collect();
    let self_crossing: HashSet<usize> = cs.report.self_crossings.iter().map(|s| s.edge).collect();
    let key = |e: usize| {
        let edge = &d.edges()[e];
        (edge.source.min(edge.target), edge.source.max(edge.target))
    };
    let mut report = HomotopyReport::default();
    let m = d.edge_count();
    for e in 0..m {
        let (s, t) = key(e);
        if s == t {
            continue;
        }
        for f in e + 1..m {
            if key(f) != (s, t) {
                continue;
            }
            if crossing_pairs.contains(&(e, f))
                || self_crossing.contains(&e)
                || self_crossing.contains(&f)
            {
                report.undecided.push((e, f));
                continue;
            }
            let mut ring: Vec<&Point> = d.polyline(e);
            let mut back = d.polyline(f);
            if d.edges()[f].source == d.edges()[e].source {
                back.reverse();
            }
            ring.extend(&back[1..back.len() - 1]);
            let inside = d
                .vertices()
                .iter()
                .enumerate()
                .any(|(v, vx)| v != s && v != t && point_in_polygon(&ring, &vx.point));
            if inside {
                report.non_homotopic.push((e, f));
            } else {
                report.homotopic.push((e, f));
            }
        }
    }
    report
}

/// Even-odd test for a point not on the boundary of a simple polygon.
pub fn point_in_polygon(ring: &[&Point], p: &Point) -> bool {
    let mut inside = false;
    for i in 0..ring.len() {
        let (a, b) = (ring[i], ring[(i + 1) % ring.len()]);
        if (a.y > p.y) != (b.y > p.y) {
            let o = orientation(a, b, p);
            let right = if b.y > a.y {
                o == Ordering::Greater
            } else {
                o == Ordering::Less
            };
            if right {
                inside = !inside;
            }
        }
    }
    inside
}
