use super::{grid, polar, ExpectedCounts, GeneratedFamily, Rules};
use crate::error::{Error, Result};
use crate::geometry::{DrawingBuilder, Point};

const R: f64 = 1_000_000.0;
const EPS: f64 = 0.15;
const SAMPLES: usize = 16;

type P = (f64, f64);

/// Disk homeomorphism fixing the circle and sending `a` to the origin, followed
/// by inversion. `a` sits inside the pentagram's core so no edge is sent through
/// infinity.
fn flip(a: P, p: P) -> P {
    let s = (R * R - p.0 * p.0 - p.1 * p.1) / (R * R - a.0 * a.0 - a.1 * a.1);
    let q = (p.0 - a.0 * s, p.1 - a.1 * s);
    let k = R * R / (q.0 * q.0 + q.1 * q.1);
    (q.0 * k, q.1 * k)
}

fn meet(p: P, q: P, r: P, s: P) -> P {
    let d = (q.0 - p.0) * (s.1 - r.1) - (q.1 - p.1) * (s.0 - r.0);
    let t = ((r.0 - p.0) * (s.1 - r.1) - (r.1 - p.1) * (s.0 - r.0)) / d;
    (p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1))
}

/// Sampled image of a polyline under `flip`.
fn inverted(a: P, path: &[P]) -> Vec<P> {
    let invert = |p| flip(a, p);
    let mut out = vec![invert(path[0])];
    for w in path.windows(2) {
        // offset samples so no bend lands on a crossing with another edge
        for s in 0..SAMPLES {
            let t = (s as f64 + 0.381966) / SAMPLES as f64;
            out.push(invert((
                w[0].0 + t * (w[1].0 - w[0].0),
                w[0].1 + t * (w[1].1 - w[0].1),
            )));
        }
        out.push(invert(w[1]));
    }
    out
}

fn interior(path: &[P]) -> Vec<Point> {
    path[1..path.len() - 1]
        .iter()
        .map(|p| grid(p.0, p.1))
        .collect()
}

struct Side<'a> {
    b: &'a mut DrawingBuilder,
    rules: &'a mut Rules,
    /// Uppercase prefix marks the copy outside the polygon.
    outside: bool,
    core: P,
}

impl Side<'_> {
    fn tag(&self, s: &str) -> String {
        if self.outside {
            s.to_uppercase()
        } else {
            s.to_string()
        }
    }

    fn edge(&mut self, id: &str, u: usize, v: usize, path: &[P]) -> String {
        let id = self.tag(id);
        let pts = if self.outside {
            inverted(self.core, path)
        } else {
            path.to_vec()
        };
        self.b.edge(id.clone(), u, v, interior(&pts));
        id
    }

    fn vertex(&mut self, id: &str, p: P) -> usize {
        let q = if self.outside { flip(self.core, p) } else { p };
        let id = self.tag(id);
        self.b.vertex(id, grid(q.0, q.1))
    }
}

/// Polygon `P_0` with `n0` corners; inside, a pentagon on five spread corners
/// carrying a pentagram, the caps fan-triangulated, and each triangle holding a
/// gadget (center, three spokes, three parallel edges). The outside repeats
/// the inside under circle inversion.
pub fn gen_multigraph_extremal(n0: usize) -> Result<GeneratedFamily> {
    if n0 < 5 {
        return Err(Error::InvalidParameter(format!(
            "n0 must be at least 5, got {n0}"
        )));
    }
    let mut b = DrawingBuilder::new().multigraph(true);
    let pos: Vec<P> = (0..n0)
        .map(|i| polar(R, 90.0 + 360.0 * i as f64 / n0 as f64))
        .collect();
    let v: Vec<usize> = (0..n0)
        .map(|i| b.vertex(format!("p{i}"), grid(pos[i].0, pos[i].1)))
        .collect();
    for i in 0..n0 {
        b.edge(format!("e{i}"), v[i], v[(i + 1) % n0], vec![]);
    }
    let spread: Vec<usize> = (0..5).map(|j| j * n0 / 5).collect();
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    let mut chords: Vec<(usize, usize)> = Vec::new();
    for j in 0..5 {
        let (s, e) = (spread[j], if j == 4 { n0 } else { spread[j + 1] });
        for i in s + 2..=e {
            chords.push((s, i % n0));
        }
        for i in s + 1..e {
            triangles.push([s, i, (i + 1) % n0]);
        }
    }

    let corner = |j: usize| pos[spread[j % 5]];
    let mut core = (0.0, 0.0);
    for j in 0..5 {
        let x = meet(corner(j), corner(j + 2), corner(j + 1), corner(j + 3));
        core = (core.0 + x.0 / 5.0, core.1 + x.1 / 5.0);
    }

    let mut rules = Rules::default();
    for outside in [false, true] {
        let mut side = Side {
            b: &mut b,
            rules: &mut rules,
            outside,
            core,
        };
        for &(x, y) in &chords {
            side.edge(&format!("c{x}-{y}"), v[x], v[y], &[pos[x], pos[y]]);
        }
        let diag: Vec<String> = (0..5)
            .map(|j| {
                let (x, y) = (spread[j], spread[(j + 2) % 5]);
                side.edge(&format!("d{j}"), v[x], v[y], &[pos[x], pos[y]])
            })
            .collect();
        for j in 0..5 {
            side.rules.charge(&diag[j], &diag[(j + 1) % 5]);
        }
        for (ti, tri) in triangles.iter().enumerate() {
            let p: Vec<P> = tri.iter().map(|&i| pos[i]).collect();
            let w = (
                (p[0].0 + p[1].0 + p[2].0) / 3.0,
                (p[0].1 + p[1].1 + p[2].1) / 3.0,
            );
            let wv = side.vertex(&format!("w{ti}"), w);
            let spokes: Vec<String> = (0..3)
                .map(|r| side.edge(&format!("g{ti}s{r}"), wv, v[tri[r]], &[w, p[r]]))
                .collect();
            let mut parallels = Vec::new();
            for r in 0..3 {
                // parallel to the side opposite corner r, pulled past the center
                let (x, y, z) = (p[(r + 1) % 3], p[(r + 2) % 3], p[r]);
                let m = ((w.0 + z.0) / 2.0, (w.1 + z.1) / 2.0);
                let toward = |q: P| (m.0 + EPS * (q.0 - m.0), m.1 + EPS * (q.1 - m.1));
                let path = [x, toward(x), toward(y), y];
                parallels.push(side.edge(
                    &format!("g{ti}q{r}"),
                    v[tri[(r + 1) % 3]],
                    v[tri[(r + 2) % 3]],
                    &path,
                ));
            }
            for r in 0..3 {
                side.rules.charge(&spokes[r], &parallels[r]);
                side.rules.charge(&parallels[r], &parallels[(r + 1) % 3]);
            }
        }
    }

    let drawing = b.build()?;
    let expected = ExpectedCounts {
        n: 3 * n0 - 10,
        m: 15 * n0 - 60,
        crossings: 2 * (5 + 6 * (n0 - 5)),
    };
    GeneratedFamily::new("multigraph", &[("n0", n0 as i64)], drawing, expected)?.with_rule(&rules.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::homotopic_parallel_pairs;

    #[test]
    fn pentagon_case() {
        let g = gen_multigraph_extremal(5).unwrap();
        assert_eq!((g.drawing.vertex_count(), g.drawing.edge_count()), (5, 15));
        let h = homotopic_parallel_pairs(&g.drawing, &g.crossings);
        assert!(h.homotopic.is_empty() && h.undecided.is_empty());
        assert_eq!(h.non_homotopic.len(), 5);
    }

    #[test]
    fn larger_polygons() {
        for n0 in 6..=9 {
            let g = gen_multigraph_extremal(n0).unwrap();
            assert_eq!(g.drawing.edge_count(), 5 * g.drawing.vertex_count() - 10);
            let h = homotopic_parallel_pairs(&g.drawing, &g.crossings);
            assert!(
                h.homotopic.is_empty() && h.undecided.is_empty(),
                "n0 = {n0}: {h:?}"
            );
        }
    }
}
