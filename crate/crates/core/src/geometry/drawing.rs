use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::point::{format_rational, orientation, parse_rational, Point};
use super::segment::{on_segment, Bbox};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub point: Point,
}

/// A polyline edge. `source`/`target` index into [`Drawing::vertices`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub source: usize,
    pub target: usize,
    pub bends: Vec<Point>,
}

/// A validated geometric drawing: distinct vertex points, polyline edges that
/// avoid foreign vertices, and (unless `multigraph`) no loops or parallel edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drawing {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    multigraph: bool,
}

impl Drawing {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>, multigraph: bool) -> Result<Self> {
        let d = Drawing {
            vertices,
            edges,
            multigraph,
        };
        d.validate()?;
        Ok(d)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_multigraph(&self) -> bool {
        self.multigraph
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    /// Full polyline of edge `e`: source, bends, target.
    pub fn polyline(&self, e: usize) -> Vec<&Point> {
        let edge = &self.edges[e];
        let mut pts = Vec::with_capacity(edge.bends.len() + 2);
        pts.push(&self.vertices[edge.source].point);
        pts.extend(edge.bends.iter());
        pts.push(&self.vertices[edge.target].point);
        pts
    }

    pub fn segment_count(&self, e: usize) -> usize {
        self.edges[e].bends.len() + 1
    }

    /// Same drawing with a subset of edges (in the given order).
    pub fn restrict_edges(&self, keep: &[usize]) -> Drawing {
        Drawing {
            vertices: self.vertices.clone(),
            edges: keep.iter().map(|&e| self.edges[e].clone()).collect(),
            multigraph: self.multigraph,
        }
    }

    pub fn translate(&self, dx: &super::Rational, dy: &super::Rational) -> Drawing {
        Drawing {
            vertices: self
                .vertices
                .iter()
                .map(|v| Vertex {
                    id: v.id.clone(),
                    point: v.point.translate(dx, dy),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    bends: e.bends.iter().map(|p| p.translate(dx, dy)).collect(),
                    ..e.clone()
                })
                .collect(),
            multigraph: self.multigraph,
        }
    }

    fn validate(&self) -> Result<()> {
        let mut ids = HashSet::new();
        let mut points: HashMap<&Point, &str> = HashMap::new();
        for v in &self.vertices {
            if !ids.insert(v.id.as_str()) {
                return Err(Error::DuplicateVertexId(v.id.clone()));
            }
            if let Some(other) = points.insert(&v.point, &v.id) {
                return Err(Error::DuplicatePoint(other.to_string(), v.id.clone()));
            }
        }
        let mut edge_ids = HashSet::new();
        let mut pairs: HashMap<(usize, usize), &str> = HashMap::new();
        for e in &self.edges {
            if !edge_ids.insert(e.id.as_str()) {
                return Err(Error::DuplicateEdgeId(e.id.clone()));
            }
            for end in [e.source, e.target] {
                if end >= self.vertices.len() {
                    return Err(Error::DanglingEndpoint {
                        edge: e.id.clone(),
                        vertex: format!("#{end}"),
                    });
                }
            }
            if !self.multigraph {
                if e.source == e.target {
                    return Err(Error::SelfLoop(e.id.clone()));
                }
                let key = (e.source.min(e.target), e.source.max(e.target));
                if let Some(other) = pairs.insert(key, &e.id) {
                    return Err(Error::ParallelEdges(other.to_string(), e.id.clone()));
                }
            }
        }
        let vertex_boxes: Vec<Bbox> = self
            .vertices
            .iter()
            .map(|v| Bbox::of_point(&v.point))
            .collect();
        for (ei, e) in self.edges.iter().enumerate() {
            let pts = self.polyline(ei);
            if pts.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::RepeatedPolylinePoint(e.id.clone()));
            }
            let last = pts.len() - 2;
            for (si, w) in pts.windows(2).enumerate() {
                let bb = Bbox::of_segment(w[0], w[1]);
                for (vi, v) in self.vertices.iter().enumerate() {
                    if !bb.overlaps(&vertex_boxes[vi]) {
                        continue;
                    }
                    // the polyline's own end vertices are allowed at its two ends
                    let allowed = (si == 0 && vi == e.source && *w[0] == v.point)
                        || (si == last && vi == e.target && *w[1] == v.point);
                    if allowed {
                        continue;
                    }
                    if on_segment(w[0], w[1], &v.point) {
                        return Err(Error::EdgeThroughVertex {
                            edge: e.id.clone(),
                            vertex: v.id.clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn from_document(doc: &DrawingDocument) -> Result<Drawing> {
        let mut index = HashMap::new();
        let mut vertices = Vec::with_capacity(doc.vertices.len());
        for v in &doc.vertices {
            if index.insert(v.id.clone(), vertices.len()).is_some() {
                return Err(Error::DuplicateVertexId(v.id.clone()));
            }
            vertices.push(Vertex {
                id: v.id.clone(),
                point: Point::new(coord(&v.x)?, coord(&v.y)?),
            });
        }
        let mut edges = Vec::with_capacity(doc.edges.len());
        for e in &doc.edges {
            let lookup = |id: &str| {
                index
                    .get(id)
                    .copied()
                    .ok_or_else(|| Error::DanglingEndpoint {
                        edge: e.id.clone(),
                        vertex: id.to_string(),
                    })
            };
            let bends = e
                .bends
                .iter()
                .map(|b| Ok(Point::new(coord(&b.x)?, coord(&b.y)?)))
                .collect::<Result<Vec<_>>>()?;
            edges.push(Edge {
                id: e.id.clone(),
                source: lookup(&e.source)?,
                target: lookup(&e.target)?,
                bends,
            });
        }
        Drawing::new(vertices, edges, doc.multigraph)
    }

    pub fn to_document(&self) -> DrawingDocument {
        let xy = |p: &Point| BendDocument {
            x: Value::String(format_rational(&p.x)),
            y: Value::String(format_rational(&p.y)),
        };
        DrawingDocument {
            multigraph: self.multigraph,
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexDocument {
                    id: v.id.clone(),
                    x: Value::String(format_rational(&v.point.x)),
                    y: Value::String(format_rational(&v.point.y)),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeDocument {
                    id: e.id.clone(),
                    source: self.vertices[e.source].id.clone(),
                    target: self.vertices[e.target].id.clone(),
                    bends: e.bends.iter().map(xy).collect(),
                })
                .collect(),
        }
    }
}

/// Validates and loads a drawing from its JSON text.
pub fn load_drawing(text: &str) -> Result<Drawing> {
    let doc: DrawingDocument =
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    Drawing::from_document(&doc)
}

pub fn emit_drawing(d: &Drawing) -> String {
    serde_json::to_string_pretty(&d.to_document()).expect("drawing documents always serialize")
}

fn coord(v: &Value) -> Result<super::Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        // arbitrary_precision keeps the literal text of JSON numbers
        Value::Number(n) => parse_rational(&n.to_string()),
        other => Err(Error::Schema(format!(
            "coordinate must be a string or number, got {other}"
        ))),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DrawingDocument {
    #[serde(default)]
    pub multigraph: bool,
    pub vertices: Vec<VertexDocument>,
    pub edges: Vec<EdgeDocument>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexDocument {
    pub id: String,
    pub x: Value,
    pub y: Value,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDocument {
    pub id: String,
    pub source: String,
    pub target: String,
    #[serde(default)]
    pub bends: Vec<BendDocument>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BendDocument {
    pub x: Value,
    pub y: Value,
}

/// Incremental construction used by the generators.
#[derive(Default)]
pub struct DrawingBuilder {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    multigraph: bool,
}

impl DrawingBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn multigraph(mut self, yes: bool) -> Self {
        self.multigraph = yes;
        self
    }

    pub fn vertex(&mut self, id: impl Into<String>, point: Point) -> usize {
        self.vertices.push(Vertex {
            id: id.into(),
            point,
        });
        self.vertices.len() - 1
    }

    pub fn edge(
        &mut self,
        id: impl Into<String>,
        source: usize,
        target: usize,
        bends: Vec<Point>,
    ) -> usize {
        self.edges.push(Edge {
            id: id.into(),
            source,
            target,
            bends,
        });
        self.edges.len() - 1
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v].id
    }

    pub fn point(&self, v: usize) -> &Point {
        &self.vertices[v].point
    }

    pub fn build(self) -> Result<Drawing> {
        Drawing::new(self.vertices, self.edges, self.multigraph)
    }
}

/// Signed area test helper re-exported for generators that check convexity.
pub fn is_strictly_convex(points: &[Point]) -> bool {
    let n = points.len();
    if n < 3 {
        return false;
    }
    let first = orientation(&points[0], &points[1], &points[2]);
    if first == std::cmp::Ordering::Equal {
        return false;
    }
    (0..n).all(|i| orientation(&points[i], &points[(i + 1) % n], &points[(i + 2) % n]) == first)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc(text: &str) -> Result<Drawing> {
        load_drawing(text)
    }

    #[test]
    fn loads_two_disjoint_segments() {
        let d = doc(r#"{"vertices":[{"id":"a","x":0,"y":0},{"id":"b","x":1,"y":0},
            {"id":"c","x":"0","y":"1"},{"id":"d","x":"1/1","y":"1.0"}],
            "edges":[{"id":"ab","source":"a","target":"b"},{"id":"cd","source":"c","target":"d"}]}"#)
        .unwrap();
        assert_eq!(d.vertex_count(), 4);
        assert_eq!(d.edge_count(), 2);
    }

    #[test]
    fn reports_dangling_endpoint() {
        let err = doc(r#"{"vertices":[{"id":"a","x":0,"y":0}],
            "edges":[{"id":"e","source":"a","target":"zz"}]}"#)
        .unwrap_err();
        assert!(matches!(err, Error::DanglingEndpoint { ref vertex, .. } if vertex == "zz"));
        assert!(err.to_string().contains("dangling endpoint"));
    }

    #[test]
    fn rejects_duplicate_points_and_through_vertex() {
        let dup = doc(r#"{"vertices":[{"id":"a","x":0,"y":0},{"id":"b","x":0,"y":0}],"edges":[]}"#);
        assert!(matches!(dup, Err(Error::DuplicatePoint(..))));
        let through = doc(
            r#"{"vertices":[{"id":"a","x":0,"y":0},{"id":"b","x":2,"y":0},{"id":"c","x":1,"y":0}],
            "edges":[{"id":"ab","source":"a","target":"b"}]}"#,
        );
        assert!(matches!(through, Err(Error::EdgeThroughVertex { .. })));
    }

    #[test]
    fn rejects_loops_and_parallels_outside_multigraphs() {
        let base = r#""vertices":[{"id":"a","x":0,"y":0},{"id":"b","x":2,"y":0}]"#;
        let par = format!(
            r#"{{{base},"edges":[{{"id":"e","source":"a","target":"b"}},
            {{"id":"f","source":"b","target":"a","bends":[{{"x":1,"y":1}}]}}]}}"#
        );
        assert!(matches!(doc(&par), Err(Error::ParallelEdges(..))));
        let multi = par.replacen('{', r#"{"multigraph":true,"#, 1);
        assert_eq!(doc(&multi).unwrap().edge_count(), 2);
        let lp = format!(
            r#"{{{base},"edges":[{{"id":"l","source":"a","target":"a","bends":[{{"x":1,"y":1}},{{"x":1,"y":-1}}]}}]}}"#
        );
        assert!(matches!(doc(&lp), Err(Error::SelfLoop(_))));
    }

    #[test]
    fn rejects_repeated_bend_and_unknown_fields() {
        let rep = doc(
            r#"{"vertices":[{"id":"a","x":0,"y":0},{"id":"b","x":2,"y":0}],
            "edges":[{"id":"e","source":"a","target":"b","bends":[{"x":1,"y":1},{"x":1,"y":1}]}]}"#,
        );
        assert!(matches!(rep, Err(Error::RepeatedPolylinePoint(_))));
        let extra = doc(r#"{"vertices":[],"edges":[],"colour":1}"#);
        assert!(matches!(extra, Err(Error::Schema(_))));
    }

    #[test]
    fn document_round_trip_is_identity() {
        let d = doc(
            r#"{"vertices":[{"id":"a","x":"1/3","y":0.25},{"id":"b","x":2,"y":0}],
            "edges":[{"id":"e","source":"a","target":"b","bends":[{"x":"-7/2","y":1e1}]}]}"#,
        )
        .unwrap();
        let again = load_drawing(&emit_drawing(&d)).unwrap();
        assert_eq!(d, again);
    }
}
