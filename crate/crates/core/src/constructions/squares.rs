use super::{grid, polar, ExpectedCounts, GeneratedFamily, Rules};
use crate::error::{Error, Result};
use crate::geometry::{DrawingBuilder, Point};

const INNER: f64 = 1000.0;
// coprime to 6 so no sample lands on a strip crossing at t = 1/3, 1/2, 2/3
const SAMPLES: usize = 25;

/// Offset of ring `r` in quarter turns: rings alternate by 45 degrees and the
/// outermost ring has its corners on the axes.
fn ring_offset(r: usize, s: usize) -> f64 {
    if (s - 1 - r).is_multiple_of(2) {
        0.0
    } else {
        45.0
    }
}

fn ring_radius(r: usize) -> f64 {
    INNER * 3f64.powi(r as i32)
}

/// Distance from the origin to the boundary of ring `r` along direction `deg`.
fn boundary(r: usize, s: usize, deg: f64) -> f64 {
    let rel = (deg - ring_offset(r, s) - 45.0).rem_euclid(90.0);
    let delta = (rel - 45.0).abs().min(45.0);
    // corners sit at relative angle 0 or 90, edge midpoints at 45
    let from_mid = 45.0 - delta;
    ring_radius(r) * 45f64.to_radians().cos() / from_mid.to_radians().cos()
}

/// `s` nested squares joined by 16 edges per annulus, with two diagonals
/// inside the innermost square and two routed around the outermost one.
pub fn gen_nested_squares(s: usize) -> Result<GeneratedFamily> {
    if s < 2 {
        return Err(Error::InvalidParameter(format!(
            "s must be at least 2, got {s}"
        )));
    }
    let mut b = DrawingBuilder::new();
    let mut ring = Vec::new();
    for r in 0..s {
        let vs: Vec<usize> = (0..4)
            .map(|j| {
                let (x, y) = polar(ring_radius(r), ring_offset(r, s) + 90.0 * j as f64);
                b.vertex(format!("r{r}v{j}"), grid(x, y))
            })
            .collect();
        for j in 0..4 {
            b.edge(format!("r{r}e{j}"), vs[j], vs[(j + 1) % 4], vec![]);
        }
        ring.push(vs);
    }

    let mut rules = Rules::default();
    let labels = [('M', -1.5), ('S', -0.5), ('Q', 0.5), ('P', 1.5)];
    for r in 0..s - 1 {
        let base = ring_offset(r + 1, s);
        // inner corner j sits at x = j + 1/2 in quarter turns from the outer ring
        let inner_index = |x: f64| {
            (((base + 90.0 * x - ring_offset(r, s)) / 90.0).round() as i64).rem_euclid(4) as usize
        };
        for j in 0..4 {
            let x0 = j as f64 + 0.5;
            for &(label, off) in &labels {
                let outer = ((x0 + off).round() as i64).rem_euclid(4) as usize;
                let bends: Vec<Point> = (1..SAMPLES)
                    .map(|k| {
                        let t = k as f64 / SAMPLES as f64;
                        let deg = base + 90.0 * (x0 + off * t);
                        let rad = (1.0 - t) * boundary(r, s, deg) + t * boundary(r + 1, s, deg);
                        let (x, y) = polar(rad, deg);
                        grid(x, y)
                    })
                    .collect();
                b.edge(
                    format!("a{r}{label}{j}"),
                    ring[r][inner_index(x0)],
                    ring[r + 1][outer],
                    bends,
                );
            }
        }
        let id = |label: char, j: usize| format!("a{r}{label}{}", j % 4);
        for j in 0..4 {
            rules.charge(&id('S', j + 1), &id('P', j));
            rules.charge(&id('Q', j), &id('M', j + 1));
            rules.charge(&id('P', j), &id('M', j + 1));
            rules.charge(&id('M', j + 2), &id('P', j));
        }
    }

    let inner = &ring[0];
    b.edge("in0", inner[0], inner[2], vec![]);
    b.edge("in1", inner[1], inner[3], vec![]);
    rules.charge("in0", "in1");
    let outer = &ring[s - 1];
    let k = ring_radius(s - 1) / 3000.0;
    let scaled = |x: f64, y: f64| grid(x * k, y * k);
    b.edge(
        "out0",
        outer[0],
        outer[2],
        vec![scaled(4000.0, 4000.0), scaled(-4000.0, 4000.0)],
    );
    b.edge(
        "out1",
        outer[1],
        outer[3],
        vec![scaled(-5000.0, 2000.0), scaled(-5000.0, -5000.0)],
    );
    rules.charge("out0", "out1");

    let drawing = b.build()?;
    let expected = ExpectedCounts {
        n: 4 * s,
        m: 20 * s - 12,
        crossings: 16 * (s - 1) + 2,
    };
    GeneratedFamily::new("squares", &[("s", s as i64)], drawing, expected)?.with_rule(&rules.0)
}
