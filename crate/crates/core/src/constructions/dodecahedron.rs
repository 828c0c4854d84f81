use super::{grid, polar, ExpectedCounts, GeneratedFamily, Rules};
use crate::error::{Error, Result};
use crate::geometry::{DrawingBuilder, Point};

const SCALE: f64 = 1000.0;
const R: f64 = 100.0;

/// Line intersection in floating point, used only to place insertion centers.
fn meet(p: (f64, f64), q: (f64, f64), r: (f64, f64), s: (f64, f64)) -> (f64, f64) {
    let (d1, d2) = ((q.0 - p.0, q.1 - p.1), (s.0 - r.0, s.1 - r.1));
    let den = d1.0 * d2.1 - d1.1 * d2.0;
    let t = ((r.0 - p.0) * d2.1 - (r.1 - p.1) * d2.0) / den;
    (p.0 + t * d1.0, p.1 + t * d1.1)
}

fn invert(p: (f64, f64)) -> (f64, f64) {
    let k = R * R / (p.0 * p.0 + p.1 * p.1);
    (p.0 * k, p.1 * k)
}

fn on_grid(p: (f64, f64)) -> Point {
    grid(p.0 * SCALE, p.1 * SCALE)
}

/// Dodecahedron with a pentagram in each of its 12 pentagonal faces; the first
/// `insertions` faces additionally get a center vertex joined to the face corners.
pub fn gen_dodecahedron_diagonals(insertions: usize) -> Result<GeneratedFamily> {
    if insertions > 12 {
        return Err(Error::InvalidParameter(format!(
            "insertions must be in 0..=12, got {insertions}"
        )));
    }
    let theta = |i: usize| 90.0 + 72.0 * i as f64;
    let mut pos: Vec<(f64, f64)> = Vec::new();
    let mut b = DrawingBuilder::new();
    let mut add = |b: &mut DrawingBuilder, id: String, p: (f64, f64)| {
        pos.push(p);
        b.vertex(id, on_grid(p))
    };
    let a: Vec<usize> = (0..5)
        .map(|i| add(&mut b, format!("a{i}"), polar(R, theta(i))))
        .collect();
    let m: Vec<usize> = (0..10)
        .map(|j| {
            let (r, t) = if j % 2 == 0 {
                (62.0, theta(j / 2))
            } else {
                (45.0, theta(j / 2) + 36.0)
            };
            add(&mut b, format!("m{j}"), polar(r, t))
        })
        .collect();
    let c: Vec<usize> = (0..5)
        .map(|i| add(&mut b, format!("c{i}"), polar(22.0, theta(i) + 36.0)))
        .collect();

    let name = |b: &DrawingBuilder, v: usize, w: usize| format!("{}-{}", vid(b, v), vid(b, w));
    let mut plane = Vec::new();
    for i in 0..5 {
        plane.push((a[i], a[(i + 1) % 5]));
        plane.push((a[i], m[2 * i]));
        plane.push((m[2 * i + 1], c[i]));
        plane.push((c[i], c[(i + 1) % 5]));
    }
    for j in 0..10 {
        plane.push((m[j], m[(j + 1) % 10]));
    }
    for &(v, w) in &plane {
        let id = name(&b, v, w);
        b.edge(id, v, w, vec![]);
    }

    let mut faces: Vec<[usize; 5]> = vec![[c[0], c[1], c[2], c[3], c[4]]];
    for i in 0..5 {
        faces.push([
            m[2 * i + 1],
            m[(2 * i + 2) % 10],
            m[(2 * i + 3) % 10],
            c[(i + 1) % 5],
            c[i],
        ]);
    }
    for i in 0..5 {
        faces.push([
            a[i],
            a[(i + 1) % 5],
            m[(2 * i + 2) % 10],
            m[2 * i + 1],
            m[2 * i],
        ]);
    }
    let outer = [a[0], a[1], a[2], a[3], a[4]];

    let mut rules = Rules::default();
    for (f, face) in faces.iter().enumerate() {
        let diag = |j: usize| format!("d{f}.{j}");
        for j in 0..5 {
            b.edge(diag(j), face[j], face[(j + 2) % 5], vec![]);
            rules.charge(&diag(j), &diag((j + 1) % 5));
        }
        if f < insertions {
            let p = |j: usize| pos[face[j % 5]];
            let mut sum = (0.0, 0.0);
            for j in 0..5 {
                let q = meet(p(j), p(j + 2), p(j + 1), p(j + 3));
                sum = (sum.0 + q.0 / 5.0, sum.1 + q.1 / 5.0);
            }
            let x = b.vertex(format!("x{f}"), on_grid(sum));
            for (j, &corner) in face.iter().enumerate().take(5) {
                let spoke = format!("s{f}.{j}");
                b.edge(spoke.clone(), x, corner, vec![]);
                for l in 0..5 {
                    rules.charge(&spoke, &diag(l));
                }
            }
        }
    }

    // outer face: the inner pentagram inverted through the circle of the a's
    let f = faces.len();
    let diag = |j: usize| format!("d{f}.{j}");
    for j in 0..5 {
        let (p, q) = (pos[outer[j]], pos[outer[(j + 2) % 5]]);
        let bends = (1..15)
            .map(|s| {
                let t = s as f64 / 15.0;
                on_grid(invert((p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1))))
            })
            .collect();
        b.edge(diag(j), outer[j], outer[(j + 2) % 5], bends);
        rules.charge(&diag(j), &diag((j + 1) % 5));
    }
    if insertions == 12 {
        // the center sits beyond all arcs; spokes leave radially, then circle
        // around at distinct radii on either side of the center's direction
        let w_angle = 126.0;
        let x = b.vertex(format!("x{f}"), on_grid(polar(700.0, w_angle)));
        let routes: [(usize, f64, f64, f64); 5] = [
            // (corner, radius, arc end angle, start angle unwrapped)
            (0, 400.0, w_angle - 2.0, 90.0),
            (4, 440.0, w_angle - 4.0, 18.0),
            (3, 480.0, w_angle - 6.0, 306.0 - 360.0),
            (1, 400.0, w_angle + 2.0, 162.0),
            (2, 440.0, w_angle + 4.0, 234.0),
        ];
        for (j, r, end, start) in routes {
            let mut bends = vec![on_grid(polar(r, start))];
            let steps = ((end - start).abs() / 6.0).ceil() as usize;
            for s in 1..=steps {
                let t = start + (end - start) * s as f64 / steps as f64;
                bends.push(on_grid(polar(r, t)));
            }
            let spoke = format!("s{f}.{j}");
            b.edge(
                spoke.clone(),
                x,
                outer[j],
                bends.into_iter().rev().collect(),
            );
            for l in 0..5 {
                rules.charge(&spoke, &diag(l));
            }
        }
    }

    let drawing = b.build()?;
    let n = 20 + insertions;
    let expected = ExpectedCounts {
        n,
        m: 5 * n - 10,
        crossings: 60 + 5 * insertions,
    };
    GeneratedFamily::new(
        "dodecahedron",
        &[("insertions", insertions as i64)],
        drawing,
        expected,
    )?
    .with_rule(&rules.0)
}

fn vid(b: &DrawingBuilder, v: usize) -> String {
    b.vertex_id(v).to_string()
}
