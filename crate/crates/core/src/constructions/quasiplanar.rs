use super::bundle::bundle;
use super::{grid, polar, ExpectedCounts, GeneratedFamily};
use crate::error::{Error, Result};
use crate::geometry::DrawingBuilder;

const R: f64 = 1_000_000.0;

/// Default bundle size for parameter `k`.
pub fn gen_quasiplanar_witness_default(k: usize) -> Result<GeneratedFamily> {
    gen_quasiplanar_witness(k, 19 * k)
}

/// K_{3,3} drawn on a hexagon with a single crossing, every edge replaced by
/// `t` paths of length two. Only the copies of the crossing pair cross.
pub fn gen_quasiplanar_witness(k: usize, t: usize) -> Result<GeneratedFamily> {
    if k < 1 || t < 2 {
        return Err(Error::InvalidParameter(format!(
            "need k >= 1 and t >= 2, got k={k}, t={t}"
        )));
    }
    let mut b = DrawingBuilder::new();
    // u1, v1, u2, v2, u3, v3 around the hexagon
    let names = ["u1", "v1", "u2", "v2", "u3", "v3"];
    let pos: Vec<(f64, f64)> = (0..6).map(|i| polar(R, 60.0 * i as f64)).collect();
    let hv: Vec<usize> = (0..6)
        .map(|i| b.vertex(names[i], grid(pos[i].0, pos[i].1)))
        .collect();
    let width = 0.1 * R;
    let route = |b: &mut DrawingBuilder, i: usize, j: usize, path: Vec<(f64, f64)>| {
        bundle(
            b,
            &format!("{}{}", names[i], names[j]),
            hv[i],
            hv[j],
            &path,
            t,
            width,
        );
    };
    for i in 0..6 {
        let j = (i + 1) % 6;
        route(&mut b, i, j, vec![pos[i], pos[j]]);
    }
    route(&mut b, 0, 3, vec![pos[0], pos[3]]);
    route(&mut b, 4, 1, vec![pos[4], pos[1]]);
    // u2-v3 goes around the outside, angle-monotone from 120 to 300 degrees
    let outside: Vec<(f64, f64)> = (0..=12)
        .map(|s| {
            let r = R * (1.0 + 0.5 * (std::f64::consts::PI * s as f64 / 12.0).sin());
            polar(r, 120.0 + 15.0 * s as f64)
        })
        .collect();
    route(&mut b, 2, 5, outside);

    let drawing = b.build()?;
    let expected = ExpectedCounts {
        n: 6 + 9 * t,
        m: 18 * t,
        crossings: t * t,
    };
    GeneratedFamily::new(
        "quasiplanar",
        &[("k", k as i64), ("t", t as i64)],
        drawing,
        expected,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{feasible_k, max_pairwise_crossing};

    #[test]
    fn small_bundles() {
        for t in 2..=5 {
            let g = gen_quasiplanar_witness(1, t).unwrap();
            assert!(g.crossings.report.is_clean());
            let cg = g.crossings.crossing_graph();
            assert_eq!(max_pairwise_crossing(&cg, 64).unwrap().size, 2);
        }
        let g = gen_quasiplanar_witness(1, 2).unwrap();
        assert!(feasible_k(&g.crossings.crossing_graph(), 1).is_feasible());
    }

    #[test]
    fn parameters_checked() {
        assert!(gen_quasiplanar_witness(0, 3).is_err());
        assert!(gen_quasiplanar_witness(1, 1).is_err());
    }
}
