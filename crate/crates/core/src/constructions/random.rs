use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::int;
use crate::error::{Error, Result};
use crate::geometry::{compute_crossings, CrossingSet, Drawing, DrawingBuilder, Point};

#[derive(Clone, Copy, Debug)]
pub struct RandomDrawingParams {
    pub vertices: usize,
    pub max_edges: usize,
    pub max_bends: usize,
    pub max_crossings: usize,
    /// Coordinates are drawn from `0..=extent` in both axes.
    pub extent: i64,
}

impl Default for RandomDrawingParams {
    fn default() -> Self {
        RandomDrawingParams {
            vertices: 7,
            max_edges: 10,
            max_bends: 2,
            max_crossings: 14,
            extent: 40,
        }
    }
}

const ATTEMPTS: usize = 10_000;

/// Simple polyline drawing on a small integer grid. Degenerate samples (triple
/// points, touching bends, overlaps) and samples over the crossing budget are
/// discarded and redrawn from the same stream.
pub fn random_polyline_drawing(
    seed: u64,
    params: RandomDrawingParams,
) -> Result<(Drawing, CrossingSet)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = params.vertices;
    if n < 2 || params.max_edges == 0 {
        return Err(Error::InvalidParameter(
            "need at least 2 vertices and 1 edge".into(),
        ));
    }
    for _ in 0..ATTEMPTS {
        if let Some(found) = sample(&mut rng, &params) {
            return Ok(found);
        }
    }
    Err(Error::Generator(format!(
        "no admissible random drawing after {ATTEMPTS} attempts"
    )))
}

fn sample(rng: &mut ChaCha8Rng, params: &RandomDrawingParams) -> Option<(Drawing, CrossingSet)> {
    let n = params.vertices;
    let coord = |rng: &mut ChaCha8Rng| {
        Point::new(
            int(rng.gen_range(0..=params.extent)),
            int(rng.gen_range(0..=params.extent)),
        )
    };
    let mut b = DrawingBuilder::new();
    let mut seen = std::collections::HashSet::new();
    let mut vs = Vec::new();
    while vs.len() < n {
        let p = coord(rng);
        if seen.insert(p.clone()) {
            vs.push(b.vertex(format!("v{}", vs.len()), p));
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let hi = params.max_edges.min(pairs.len());
    let m = rng.gen_range(hi.div_ceil(2)..=hi);
    for e in 0..m {
        let (i, j) = pairs.swap_remove(rng.gen_range(0..pairs.len()));
        let bends = (0..rng.gen_range(0..=params.max_bends))
            .map(|_| coord(rng))
            .collect();
        b.edge(format!("e{e}"), vs[i], vs[j], bends);
    }
    let d = b.build().ok()?;
    let cs = compute_crossings(&d).ok()?;
    (cs.len() <= params.max_crossings && cs.report.self_crossings.is_empty()).then_some((d, cs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn respects_budget_and_is_reproducible() {
        let params = RandomDrawingParams::default();
        for seed in 0..20 {
            let (d, cs) = random_polyline_drawing(seed, params).unwrap();
            assert!(d.edge_count() <= 10 && cs.len() <= 14);
            assert_eq!(random_polyline_drawing(seed, params).unwrap().0, d);
        }
    }
}
