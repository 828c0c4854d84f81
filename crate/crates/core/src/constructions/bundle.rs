use super::grid;
use crate::geometry::DrawingBuilder;

/// Replaces the edge `u -> v` drawn along `path` (floating design
/// coordinates, endpoints included) by `t` edge-disjoint paths of length two.
/// Copies are offset sideways by distinct nonzero amounts within `width`;
/// each copy gets a middle vertex on its middle segment. Returns the new edge ids.
pub(super) fn bundle(
    b: &mut DrawingBuilder,
    id: &str,
    u: usize,
    v: usize,
    path: &[(f64, f64)],
    t: usize,
    width: f64,
) -> Vec<String> {
    let mut pts = path.to_vec();
    let h = (pts.len() - 2) / 2;
    let mid = (
        (pts[h].0 + pts[h + 1].0) / 2.0,
        (pts[h].1 + pts[h + 1].1) / 2.0,
    );
    pts.insert(h + 1, mid);
    let normals: Vec<(f64, f64)> = (1..pts.len() - 1)
        .map(|j| miter(pts[j - 1], pts[j], pts[j + 1]))
        .collect();
    let step = width / t as f64;
    let mut ids = Vec::with_capacity(2 * t);
    for i in 0..t {
        // quarter-step shift keeps every offset away from zero
        let o = step * (i as f64 - (t as f64 - 1.0) / 2.0 + 0.25);
        let inner: Vec<_> = (1..pts.len() - 1)
            .map(|j| {
                let n = normals[j - 1];
                grid(pts[j].0 + o * n.0, pts[j].1 + o * n.1)
            })
            .collect();
        let m = b.vertex(format!("{id}.m{i}"), inner[h].clone());
        let (first, second) = (format!("{id}.{i}a"), format!("{id}.{i}b"));
        b.edge(first.clone(), u, m, inner[..h].to_vec());
        b.edge(second.clone(), m, v, inner[h + 1..].to_vec());
        ids.push(first);
        ids.push(second);
    }
    ids
}

fn unit_normal(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let (dx, dy) = (b.0 - a.0, b.1 - a.1);
    let len = dx.hypot(dy);
    (-dy / len, dx / len)
}

/// Offset direction at `p` that keeps both adjacent offset segments parallel.
fn miter(prev: (f64, f64), p: (f64, f64), next: (f64, f64)) -> (f64, f64) {
    let (n1, n2) = (unit_normal(prev, p), unit_normal(p, next));
    let s = 1.0 + n1.0 * n2.0 + n1.1 * n2.1;
    ((n1.0 + n2.0) / s, (n1.1 + n2.1) / s)
}
