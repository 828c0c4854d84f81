use std::cmp::Ordering;
use std::collections::HashSet;

use super::crossings::CrossingSet;
use super::drawing::Drawing;
use super::point::{angle_cmp, Point};
use crate::error::{Error, Result};
use crate::union_find::UnionFind;

/// A piece of an original edge between two consecutive planarization nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarEdge {
    pub u: usize,
    pub v: usize,
    pub original: usize,
    pub points: Vec<Point>,
}

/// Plane graph with nodes `0..real_count` for drawing vertices followed by one
/// dummy node per crossing. Dart `2e` runs `u -> v` along edge `e`, dart `2e+1` back.
#[derive(Clone, Debug)]
pub struct Planarization {
    real_count: usize,
    dummy_count: usize,
    edges: Vec<PlanarEdge>,
    rotation: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
}

impl Planarization {
    pub fn node_count(&self) -> usize {
        self.real_count + self.dummy_count
    }

    pub fn real_count(&self) -> usize {
        self.real_count
    }

    pub fn dummy_count(&self) -> usize {
        self.dummy_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[PlanarEdge] {
        &self.edges
    }

    pub fn is_dummy(&self, v: usize) -> bool {
        v >= self.real_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    /// Outgoing darts around `v` in counterclockwise order.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Facial walks as dart sequences.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn dart_tail(&self, dart: usize) -> usize {
        let e = &self.edges[dart / 2];
        if dart.is_multiple_of(2) {
            e.u
        } else {
            e.v
        }
    }
}

/// Position of a point along segment `a -> b`, comparable between points on it.
fn along(a: &Point, b: &Point, p: &Point) -> super::Rational {
    if a.x != b.x {
        if a.x < b.x {
            &p.x - &a.x
        } else {
            &a.x - &p.x
        }
    } else if a.y < b.y {
        &p.y - &a.y
    } else {
        &a.y - &p.y
    }
}

pub fn planarize(d: &Drawing, cs: &CrossingSet) -> Result<Planarization> {
    if let Some(s) = cs.report.self_crossings.first() {
        return Err(Error::SelfCrossing(d.edges()[s.edge].id.clone()));
    }
    let real_count = d.vertex_count();
    let mut on_edge: Vec<Vec<(usize, usize)>> = vec![Vec::new(); d.edge_count()];
    for (i, c) in cs.crossings.iter().enumerate() {
        on_edge[c.edge_a].push((c.segment_a, i));
        on_edge[c.edge_b].push((c.segment_b, i));
    }
    let mut edges = Vec::new();
    for (e, stops) in on_edge.iter_mut().enumerate() {
        let pts = d.polyline(e);
        stops.sort_by(|&(sa, ca), &(sb, cb)| {
            sa.cmp(&sb).then_with(|| {
                let (a, b) = (pts[sa], pts[sa + 1]);
                along(a, b, &cs.crossings[ca].point).cmp(&along(a, b, &cs.crossings[cb].point))
            })
        });
        let edge = &d.edges()[e];
        let mut node = edge.source;
        let mut piece = vec![pts[0].clone()];
        let mut seg = 0;
        for &(s, c) in stops.iter() {
            while seg < s {
                seg += 1;
                piece.push(pts[seg].clone());
            }
            piece.push(cs.crossings[c].point.clone());
            let dummy = real_count + c;
            edges.push(PlanarEdge {
                u: node,
                v: dummy,
                original: e,
                points: std::mem::replace(&mut piece, vec![cs.crossings[c].point.clone()]),
            });
            node = dummy;
        }
        while seg + 1 < pts.len() {
            seg += 1;
            piece.push(pts[seg].clone());
        }
        edges.push(PlanarEdge {
            u: node,
            v: edge.target,
            original: e,
            points: piece,
        });
    }

    let node_count = real_count + cs.len();
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); node_count];
    for (i, e) in edges.iter().enumerate() {
        rotation[e.u].push(2 * i);
        rotation[e.v].push(2 * i + 1);
    }
    let direction = |dart: usize| -> (super::Rational, super::Rational) {
        let pts = &edges[dart / 2].points;
        let (from, to) = if dart.is_multiple_of(2) {
            (&pts[0], &pts[1])
        } else {
            (&pts[pts.len() - 1], &pts[pts.len() - 2])
        };
        (&to.x - &from.x, &to.y - &from.y)
    };
    for darts in rotation.iter_mut() {
        let mut keyed: Vec<_> = darts.iter().map(|&dd| (direction(dd), dd)).collect();
        keyed.sort_by(
            |(a, da), (b, db)| match angle_cmp((&a.0, &a.1), (&b.0, &b.1)) {
                // only a closed loop at its own vertex can leave twice in one direction
                Ordering::Equal => da.cmp(db),
                o => o,
            },
        );
        *darts = keyed.into_iter().map(|(_, dd)| dd).collect();
    }

    // position of every dart within its tail's rotation
    let mut slot = vec![0usize; 2 * edges.len()];
    for darts in &rotation {
        for (i, &dd) in darts.iter().enumerate() {
            slot[dd] = i;
        }
    }
    let head = |dart: usize| {
        let e = &edges[dart / 2];
        if dart.is_multiple_of(2) {
            e.v
        } else {
            e.u
        }
    };
    let mut seen = vec![false; 2 * edges.len()];
    let mut faces = Vec::new();
    for start in 0..2 * edges.len() {
        if seen[start] {
            continue;
        }
        let mut face = Vec::new();
        let mut dart = start;
        while !seen[dart] {
            seen[dart] = true;
            face.push(dart);
            let twin = dart ^ 1;
            let v = head(dart);
            let ring = &rotation[v];
            dart = ring[(slot[twin] + ring.len() - 1) % ring.len()];
        }
        faces.push(face);
    }

    Ok(Planarization {
        real_count,
        dummy_count: cs.len(),
        edges,
        rotation,
        faces,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentStats {
    pub nodes: usize,
    pub edges: usize,
    /// Facial walks of this component on its own.
    pub faces: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarizationStats {
    pub n: usize,
    pub m: usize,
    /// Faces of the whole plane embedding, `m - n + 1 + components`.
    pub f: usize,
    pub connected: bool,
    pub biconnected: bool,
    /// `|F(u)|` for each real vertex.
    pub face_incidence: Vec<usize>,
    /// Unordered pairs of real vertices lying on a common face.
    pub face_sharing_pairs: usize,
    pub components: Vec<ComponentStats>,
}

/// Faces of a plane graph by Euler's formula.
pub fn euler_face_count(n: usize, m: usize, components: usize) -> i64 {
    m as i64 - n as i64 + 1 + components as i64
}

pub fn planarization_stats(p: &Planarization) -> PlanarizationStats {
    let n = p.node_count();
    let m = p.edge_count();
    let mut comp = UnionFind::new(n);
    for e in &p.edges {
        comp.union(e.u, e.v);
    }
    let mut roots: Vec<usize> = (0..n).map(|v| comp.find(v)).collect();
    let mut ids: Vec<usize> = roots.clone();
    ids.sort_unstable();
    ids.dedup();
    for r in roots.iter_mut() {
        *r = ids.binary_search(r).unwrap();
    }
    let mut components = vec![
        ComponentStats {
            nodes: 0,
            edges: 0,
            faces: 0,
        };
        ids.len()
    ];
    for v in 0..n {
        components[roots[v]].nodes += 1;
    }
    for e in &p.edges {
        components[roots[e.u]].edges += 1;
    }
    for face in &p.faces {
        components[roots[p.dart_tail(face[0])]].faces += 1;
    }
    for c in components.iter_mut() {
        // a lone vertex bounds the single face around it
        if c.edges == 0 {
            c.faces = 1;
        }
    }

    let mut incidence = vec![HashSet::new(); p.real_count];
    let mut shared: HashSet<(usize, usize)> = HashSet::new();
    for (fi, face) in p.faces.iter().enumerate() {
        let mut real: Vec<usize> = face
            .iter()
            .map(|&d| p.dart_tail(d))
            .filter(|&v| !p.is_dummy(v))
            .collect();
        real.sort_unstable();
        real.dedup();
        for (i, &u) in real.iter().enumerate() {
            incidence[u].insert(fi);
            for &w in &real[i + 1..] {
                shared.insert((u, w));
            }
        }
    }
    let face_incidence = incidence
        .iter()
        .enumerate()
        .map(|(u, s)| if p.degree(u) == 0 { 1 } else { s.len() })
        .collect();
    let connected = components.len() <= 1;
    PlanarizationStats {
        n,
        m,
        f: euler_face_count(n, m, components.len().max(1)) as usize,
        connected,
        biconnected: connected && n >= 3 && !has_articulation_point(p),
        face_incidence,
        face_sharing_pairs: shared.len(),
        components,
    }
}

fn has_articulation_point(p: &Planarization) -> bool {
    let n = p.node_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    // iterative DFS over darts; the arrival dart is skipped by id so parallel edges still count
    let root = 0;
    disc[root] = timer;
    low[root] = timer;
    timer += 1;
    let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
    let mut root_children = 0;
    while let Some(&mut (v, via, ref mut next)) = stack.last_mut() {
        if *next < p.rotation[v].len() {
            let dart = p.rotation[v][*next];
            *next += 1;
            if via != usize::MAX && dart == via ^ 1 {
                continue;
            }
            let e = &p.edges[dart / 2];
            let w = if dart.is_multiple_of(2) { e.v } else { e.u };
            if disc[w] == usize::MAX {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                if v == root {
                    root_children += 1;
                }
                stack.push((w, dart, 0));
            } else {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(parent, _, _)) = stack.last() {
                low[parent] = low[parent].min(low[v]);
                if parent != root && low[v] >= disc[parent] {
                    return true;
                }
            }
        }
    }
    root_children > 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{compute_crossings, load_drawing};

    fn planar(text: &str) -> (Planarization, PlanarizationStats) {
        let d = load_drawing(text).unwrap();
        let cs = compute_crossings(&d).unwrap();
        let p = planarize(&d, &cs).unwrap();
        let s = planarization_stats(&p);
        (p, s)
    }

    #[test]
    fn triangle() {
        let (p, s) = planar(
            r#"{"vertices":[{"id":"a","x":0,"y":0},{"id":"b","x":4,"y":0},{"id":"c","x":0,"y":3}],
            "edges":[{"id":"ab","source":"a","target":"b"},{"id":"bc","source":"b","target":"c"},
            {"id":"ca","source":"c","target":"a"}]}"#,
        );
        assert_eq!(p.dummy_count(), 0);
        assert_eq!((s.n, s.m, s.f), (3, 3, 2));
        assert_eq!(p.faces().len(), 2);
        assert_eq!(s.face_incidence, vec![2, 2, 2]);
        assert!(s.biconnected);
        assert_eq!(s.face_sharing_pairs, 3);
    }

    #[test]
    fn single_x_is_a_tree() {
        let (p, s) = planar(
            r#"{"vertices":[{"id":"a","x":0,"y":0},{"id":"b","x":2,"y":2},{"id":"c","x":0,"y":2},{"id":"d","x":2,"y":0}],
            "edges":[{"id":"ab","source":"a","target":"b"},{"id":"cd","source":"c","target":"d"}]}"#,
        );
        assert_eq!((s.n, s.m, s.f), (5, 4, 1));
        assert_eq!(p.degree(4), 4);
        assert!(p.is_dummy(4));
        assert_eq!(p.faces().len(), 1);
        assert!(!s.biconnected);
        assert!(s.connected);
    }

    #[test]
    fn dummy_degree_law_and_euler_on_k4_with_crossing() {
        let (p, s) = planar(
            r#"{"vertices":[{"id":"a","x":0,"y":0},{"id":"b","x":4,"y":0},{"id":"c","x":4,"y":4},{"id":"d","x":0,"y":4}],
            "edges":[{"id":"ab","source":"a","target":"b"},{"id":"bc","source":"b","target":"c"},
            {"id":"cd","source":"c","target":"d"},{"id":"da","source":"d","target":"a"},
            {"id":"ac","source":"a","target":"c"},{"id":"bd","source":"b","target":"d"}]}"#,
        );
        assert_eq!((s.n, s.m), (5, 8));
        assert_eq!(s.f, 5);
        assert_eq!(p.faces().len(), 5);
        let dummy_degrees: usize = (p.real_count()..p.node_count()).map(|v| p.degree(v)).sum();
        assert_eq!(dummy_degrees, 4);
        assert_eq!(s.face_incidence, vec![3, 3, 3, 3]);
        assert!(s.biconnected);
    }

    #[test]
    fn bent_edges_and_disconnected_parts() {
        let (p, s) = planar(
            r#"{"vertices":[{"id":"a","x":0,"y":0},{"id":"b","x":4,"y":0},{"id":"c","x":10,"y":0},{"id":"d","x":12,"y":0}],
            "edges":[{"id":"ab1","source":"a","target":"b","bends":[{"x":2,"y":2}]},
            {"id":"cd","source":"c","target":"d"}]}"#,
        );
        assert_eq!(p.edges()[0].points.len(), 3);
        assert!(!s.connected);
        assert_eq!(s.components.len(), 2);
        assert!(s
            .components
            .iter()
            .all(|c| c.faces == c.edges + 2 - c.nodes));
        assert_eq!(s.f, 1);
    }

    #[test]
    fn self_crossing_rejected() {
        let d = load_drawing(
            r#"{"vertices":[{"id":"a","x":0,"y":0},{"id":"b","x":4,"y":0}],
            "edges":[{"id":"ab","source":"a","target":"b","bends":[{"x":4,"y":2},{"x":2,"y":-2},{"x":1,"y":3}]}]}"#,
        )
        .unwrap();
        let cs = compute_crossings(&d).unwrap();
        assert!(matches!(planarize(&d, &cs), Err(Error::SelfCrossing(_))));
    }

    #[test]
    fn synthetic_k9_planarization_counts() {
        // 9 real vertices of degree 8 and 36 dummies of degree 4
        let n = 9 + 36;
        let m = (9 * 8 + 36 * 4) / 2;
        assert_eq!((n, m), (45, 108));
        assert_eq!(euler_face_count(n, m, 1), 65);
    }
}
