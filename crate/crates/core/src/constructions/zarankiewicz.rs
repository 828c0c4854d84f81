use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{int, ExpectedCounts, GeneratedFamily};
use crate::error::{Error, Result};
use crate::geometry::{DrawingBuilder, Point};
use crate::solver::feasible_k;

const SPACING: i64 = 1000;
const JITTER: i64 = 40;
const ATTEMPTS: u64 = 16;

/// Which coordinate schedule produced a drawing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layout {
    /// Axis layout perturbed by the given attempt of the seeded schedule.
    Canonical { attempt: u64 },
    /// Stored coordinates, used where the axis layout is not 1-gap-planar.
    Fallback,
}

/// `floor(p/2) floor((p-1)/2) floor(q/2) floor((q-1)/2)`
pub fn zarankiewicz_number(p: usize, q: usize) -> usize {
    (p / 2) * (p.saturating_sub(1) / 2) * (q / 2) * (q.saturating_sub(1) / 2)
}

// Straight-line drawings with the Zarankiewicz number of crossings that admit a
// 1-gap assignment; the first `p` points form the smaller part. Found by a
// randomized search over integer coordinates.
/// (p, q, coordinates of the p-part then the q-part)
type Table = [(usize, usize, &'static [(i64, i64)]); 3];

const FALLBACK: Table = [
    (
        3,
        12,
        &[
            (0, 300),
            (-260, -150),
            (260, -150),
            (840, -215),
            (-194, -91),
            (78, 573),
            (-11, 87),
            (-33, 176),
            (54, 431),
            (662, -155),
            (-637, -294),
            (31, 44),
            (-42, 107),
            (51, 29),
            (-446, -236),
        ],
    ),
    (
        4,
        8,
        &[
            (-374, -556),
            (512, -142),
            (2147, -615),
            (-714, -835),
            (-446, 380),
            (357, -400),
            (300, -819),
            (376, -986),
            (-731, 911),
            (-871, 1334),
            (883, -1442),
            (-232, 255),
        ],
    ),
    (
        5,
        6,
        &[
            (-234, -134),
            (-135, -9),
            (-99, 77),
            (-42, 24),
            (-140, 79),
            (-154, 80),
            (-177, 181),
            (83, 62),
            (-73, 16),
            (363, 95),
            (-111, 57),
        ],
    ),
];

fn fallback(p: usize, q: usize) -> Option<(Vec<Point>, Vec<Point>)> {
    let pts = |s: &[(i64, i64)]| {
        s.iter()
            .map(|&(x, y)| Point::from_ints(x, y))
            .collect::<Vec<_>>()
    };
    FALLBACK.iter().find_map(|&(a, b, coords)| {
        if (p, q) == (a, b) {
            Some((pts(&coords[..a]), pts(&coords[a..])))
        } else if (p, q) == (b, a) {
            Some((pts(&coords[a..]), pts(&coords[..a])))
        } else {
            None
        }
    })
}

fn axis_positions(count: usize) -> Vec<i64> {
    let up = count.div_ceil(2) as i64;
    let down = (count / 2) as i64;
    (1..=up)
        .chain((1..=down).map(|i| -i))
        .map(|i| i * SPACING)
        .collect()
}

fn build(us: Vec<Point>, vs: Vec<Point>) -> Result<crate::geometry::Drawing> {
    let mut b = DrawingBuilder::new();
    let u: Vec<usize> = us
        .into_iter()
        .enumerate()
        .map(|(i, pt)| b.vertex(format!("u{i}"), pt))
        .collect();
    let v: Vec<usize> = vs
        .into_iter()
        .enumerate()
        .map(|(j, pt)| b.vertex(format!("v{j}"), pt))
        .collect();
    for (i, &ui) in u.iter().enumerate() {
        for (j, &vj) in v.iter().enumerate() {
            b.edge(format!("u{i}v{j}"), ui, vj, vec![]);
        }
    }
    b.build()
}

pub fn gen_zarankiewicz(p: usize, q: usize) -> Result<(GeneratedFamily, Layout)> {
    gen_zarankiewicz_seeded(p, q, 0)
}

/// Straight-line K_{p,q}: one part on the vertical axis, the other on the
/// horizontal axis, every coordinate jittered by a seeded schedule to reach
/// general position.
pub fn gen_zarankiewicz_seeded(p: usize, q: usize, seed: u64) -> Result<(GeneratedFamily, Layout)> {
    if p < 1 || q < 1 {
        return Err(Error::InvalidParameter(format!(
            "p and q must be positive, got ({p}, {q})"
        )));
    }
    let expected = ExpectedCounts {
        n: p + q,
        m: p * q,
        crossings: zarankiewicz_number(p, q),
    };
    let params = [("p", p as i64), ("q", q as i64), ("seed", seed as i64)];
    let mut last = None;
    for attempt in 0..ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(ATTEMPTS).wrapping_add(attempt));
        let mut jitter = || rng.gen_range(-JITTER..=JITTER);
        let us = axis_positions(p)
            .into_iter()
            .map(|y| Point::new(int(jitter()), int(y + jitter())))
            .collect();
        let vs = axis_positions(q)
            .into_iter()
            .map(|x| Point::new(int(x + jitter()), int(jitter())))
            .collect();
        let generated = build(us, vs)
            .and_then(|d| GeneratedFamily::new("zarankiewicz", &params, d, expected.clone()));
        match generated {
            Ok(g) => {
                if let Some((us, vs)) = fallback(p, q) {
                    if !feasible_k(&g.crossings.crossing_graph(), 1).is_feasible() {
                        let d = build(us, vs)?;
                        let g = GeneratedFamily::new("zarankiewicz", &params, d, expected)?;
                        return Ok((g, Layout::Fallback));
                    }
                }
                return Ok((g, Layout::Canonical { attempt }));
            }
            Err(e) => last = Some(e),
        }
    }
    Err(Error::Generator(format!(
        "no general-position layout of K_{{{p},{q}}} after {ATTEMPTS} attempts: {}",
        last.map(|e| e.to_string()).unwrap_or_default()
    )))
}
