use super::bundle::bundle;
use super::{grid, ExpectedCounts, GeneratedFamily, Rules};
use crate::error::{Error, Result};
use crate::geometry::DrawingBuilder;

const H: f64 = 1000.0;

/// Bundle size that makes the counting argument work for every k.
pub fn full_wheel_t(k: usize) -> usize {
    5 * (k + 1).pow(4)
}

/// Edge `(a, b)` crossed by the `k + 1` disjoint edges `(c_i, d_i)`, inside a
/// wheel whose rim is `a, c_1..c_{k+1}, b, d_{k+1}..d_1`. Every wheel edge is
/// replaced by `t` paths of length two; the rim edges and spokes stay uncrossed.
pub fn gen_wheel_witness(k: usize, t: usize) -> Result<GeneratedFamily> {
    if k < 1 || t < 1 {
        return Err(Error::InvalidParameter(format!(
            "need k >= 1 and t >= 1, got k={k}, t={t}"
        )));
    }
    let l = 500.0 * (k + 2) as f64;
    let xs: Vec<f64> = (1..=k + 1)
        .map(|i| -l + 2.0 * l * i as f64 / (k + 2) as f64)
        .collect();
    let lift = |x: f64| H + 0.3 * H * (1.0 - (x / l) * (x / l));
    let mut b = DrawingBuilder::new();
    let a_pos = (-l, 0.0);
    let b_pos = (l, 0.0);
    let a = b.vertex("a", grid(a_pos.0, a_pos.1));
    let bb = b.vertex("b", grid(b_pos.0, b_pos.1));
    let c_pos: Vec<(f64, f64)> = xs.iter().map(|&x| (x, lift(x))).collect();
    let d_pos: Vec<(f64, f64)> = xs.iter().map(|&x| (x, -lift(x))).collect();
    let c: Vec<usize> = (0..=k)
        .map(|i| b.vertex(format!("c{}", i + 1), grid(c_pos[i].0, c_pos[i].1)))
        .collect();
    let d: Vec<usize> = (0..=k)
        .map(|i| b.vertex(format!("d{}", i + 1), grid(d_pos[i].0, d_pos[i].1)))
        .collect();
    let hub_pos = (0.0, -((k + 2) as f64 * H + 2.0 * H));
    let hub = b.vertex("v0", grid(hub_pos.0, hub_pos.1));

    let mut rules = Rules::default();
    b.edge("ab", a, bb, vec![]);
    for i in 0..=k {
        let id = format!("c{0}d{0}", i + 1);
        b.edge(id.clone(), c[i], d[i], vec![]);
        rules.charge(&id, "ab");
    }

    let width = 0.1 * H;
    // rim: a, c_1..c_{k+1}, b, d_{k+1}..d_1
    let mut rim: Vec<(usize, (f64, f64), String)> = vec![(a, a_pos, "a".into())];
    rim.extend((0..=k).map(|i| (c[i], c_pos[i], format!("c{}", i + 1))));
    rim.push((bb, b_pos, "b".into()));
    rim.extend(
        (0..=k)
            .rev()
            .map(|i| (d[i], d_pos[i], format!("d{}", i + 1))),
    );
    for w in 0..rim.len() {
        let (p, q) = (&rim[w], &rim[(w + 1) % rim.len()]);
        bundle(
            &mut b,
            &format!("rim.{}{}", p.2, q.2),
            p.0,
            q.0,
            &[p.1, q.1],
            t,
            width,
        );
    }

    // spokes: straight to a, b and the lower rim; nested detours to the upper rim
    let spoke = |b: &mut DrawingBuilder, to: usize, name: &str, path: Vec<(f64, f64)>| {
        bundle(b, &format!("spoke.{name}"), hub, to, &path, t, width);
    };
    spoke(&mut b, a, "a", vec![hub_pos, a_pos]);
    spoke(&mut b, bb, "b", vec![hub_pos, b_pos]);
    for i in 0..=k {
        spoke(
            &mut b,
            d[i],
            &format!("d{}", i + 1),
            vec![hub_pos, d_pos[i]],
        );
    }
    let left = (k + 2) / 2;
    for i in 0..=k {
        // level grows outward from the nearer end of the rim
        let (level, side) = if i < left {
            (i + 1, -1.0)
        } else {
            (k + 1 - i, 1.0)
        };
        let level = level as f64;
        let x_out = side * (l + 300.0 * level);
        let top = 1.3 * H + 500.0 * level;
        let path = vec![hub_pos, (x_out, 0.0), (x_out, top), (xs[i], top), c_pos[i]];
        spoke(&mut b, c[i], &format!("c{}", i + 1), path);
    }

    let drawing = b.build()?;
    let wheel_edges = 4 * k + 8;
    let expected = ExpectedCounts {
        n: 2 * k + 5 + wheel_edges * t,
        m: 1 + (k + 1) + wheel_edges * 2 * t,
        crossings: k + 1,
    };
    GeneratedFamily::new(
        "wheel",
        &[("k", k as i64), ("t", t as i64)],
        drawing,
        expected,
    )?
    .with_rule(&rules.0)
}
