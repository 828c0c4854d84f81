//! Cased SVG output: each gap interrupts its assigned edge around the crossing.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::geometry::{to_f64, CrossingSet, Drawing, Rational};
use crate::solver::GapAssignment;

#[derive(Clone, Debug)]
pub struct RenderOptions {
    /// Gap length in drawing units; `None` picks one from the drawing.
    pub gap_width: Option<Rational>,
    pub stroke_width: f64,
    pub vertex_radius: f64,
    pub scheme: ColorScheme,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorScheme {
    Mono,
    Palette,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            gap_width: None,
            stroke_width: 1.0,
            vertex_radius: 2.5,
            scheme: ColorScheme::Mono,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RenderWarning {
    /// Two gaps of this edge overlap at the chosen width and print as one.
    MergedGaps { edge: String },
}

const PALETTE: [&str; 8] = [
    "#1b6ca8", "#c0392b", "#27ae60", "#8e44ad", "#d35400", "#16a085", "#7f8c8d", "#2c3e50",
];

/// Decimal with 12 significant digits, trailing zeros dropped.
pub fn decimal12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return "0".into();
    }
    let mag = x.abs().log10().floor() as i32;
    let s = if mag < 11 {
        format!("{:.*}", (11 - mag).max(0) as usize, x)
    } else {
        let scale = 10f64.powi(mag - 11);
        format!("{:.0}", (x / scale).round() * scale)
    };
    let s = if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

type P = (f64, f64);

fn dist(a: P, b: P) -> f64 {
    (a.0 - b.0).hypot(a.1 - b.1)
}

fn at(pts: &[P], cum: &[f64], s: f64) -> P {
    let i = cum.partition_point(|&c| c <= s).clamp(1, pts.len() - 1) - 1;
    let len = cum[i + 1] - cum[i];
    let t = if len > 0.0 {
        ((s - cum[i]) / len).clamp(0.0, 1.0)
    } else {
        0.0
    };
    (
        pts[i].0 + t * (pts[i + 1].0 - pts[i].0),
        pts[i].1 + t * (pts[i + 1].1 - pts[i].1),
    )
}

/// Points of the polyline restricted to arc length [a, b].
fn piece(pts: &[P], cum: &[f64], a: f64, b: f64) -> Vec<P> {
    let mut out = vec![at(pts, cum, a)];
    for i in 1..pts.len() - 1 {
        if cum[i] > a && cum[i] < b {
            out.push(pts[i]);
        }
    }
    out.push(at(pts, cum, b));
    out
}

fn auto_gap(d: &Drawing, centers: &[Vec<f64>]) -> f64 {
    let pts: Vec<P> = d.vertices().iter().map(|v| v.point.to_f64()).collect();
    let (mut lo, mut hi) = ((f64::MAX, f64::MAX), (f64::MIN, f64::MIN));
    for e in 0..d.edge_count() {
        for p in d.polyline(e) {
            let p = p.to_f64();
            lo = (lo.0.min(p.0), lo.1.min(p.1));
            hi = (hi.0.max(p.0), hi.1.max(p.1));
        }
    }
    let mut w = if pts.is_empty() {
        1.0
    } else {
        dist(lo, hi).max(1e-9) / 50.0
    };
    for c in centers {
        for pair in c.windows(2) {
            if pair[1] - pair[0] > 0.0 {
                w = w.min((pair[1] - pair[0]) / 2.0);
            }
        }
    }
    w
}

pub fn render_svg(
    d: &Drawing,
    cs: &CrossingSet,
    assignment: &GapAssignment,
    opts: &RenderOptions,
) -> Result<(String, Vec<RenderWarning>)> {
    if cs.edge_count != d.edge_count() {
        return Err(Error::InvalidAssignment(
            "crossing set does not belong to this drawing".into(),
        ));
    }
    assignment.validate(&cs.crossing_graph())?;

    let polylines: Vec<Vec<P>> = (0..d.edge_count())
        .map(|e| d.polyline(e).into_iter().map(|p| p.to_f64()).collect())
        .collect();
    let cums: Vec<Vec<f64>> = polylines
        .iter()
        .map(|pts| {
            let mut c = vec![0.0];
            for w in pts.windows(2) {
                c.push(c.last().unwrap() + dist(w[0], w[1]));
            }
            c
        })
        .collect();
    let mut centers: Vec<Vec<f64>> = vec![Vec::new(); d.edge_count()];
    for (c, x) in cs.crossings.iter().enumerate() {
        let e = assignment.assigned[c];
        let seg = if e == x.edge_a {
            x.segment_a
        } else {
            x.segment_b
        };
        let p = x.point.to_f64();
        centers[e].push(cums[e][seg] + dist(polylines[e][seg], p));
    }
    for c in &mut centers {
        c.sort_by(f64::total_cmp);
    }
    let gap = match &opts.gap_width {
        Some(g) if *g > Rational::from_integer(0.into()) => to_f64(g),
        Some(_) => return Err(Error::InvalidParameter("gap width must be positive".into())),
        None => auto_gap(d, &centers),
    };

    let mut warnings = Vec::new();
    let (mut lo, mut hi) = ((f64::MAX, f64::MAX), (f64::MIN, f64::MIN));
    for p in polylines.iter().flatten() {
        lo = (lo.0.min(p.0), lo.1.min(p.1));
        hi = (hi.0.max(p.0), hi.1.max(p.1));
    }
    for v in d.vertices() {
        let p = v.point.to_f64();
        lo = (lo.0.min(p.0), lo.1.min(p.1));
        hi = (hi.0.max(p.0), hi.1.max(p.1));
    }
    if lo.0 > hi.0 {
        lo = (0.0, 0.0);
        hi = (1.0, 1.0);
    }
    // stroke and radius scale with the drawing so output is legible at any size
    let unit = dist(lo, hi).max(1e-9) / 400.0;
    let margin = 10.0 * unit;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        decimal12(lo.0 - margin),
        decimal12(-hi.1 - margin),
        decimal12(hi.0 - lo.0 + 2.0 * margin),
        decimal12(hi.1 - lo.1 + 2.0 * margin)
    );
    let _ = writeln!(
        svg,
        r#"<g fill="none" stroke-width="{}" stroke-linecap="butt">"#,
        decimal12(opts.stroke_width * unit)
    );
    for (e, edge) in d.edges().iter().enumerate() {
        let (pts, cum) = (&polylines[e], &cums[e]);
        let total = *cum.last().unwrap();
        let mut cuts: Vec<(f64, f64)> = Vec::new();
        for &s in &centers[e] {
            let (a, b) = ((s - gap / 2.0).max(0.0), (s + gap / 2.0).min(total));
            match cuts.last_mut() {
                Some(last) if a <= last.1 => {
                    last.1 = last.1.max(b);
                    warnings.push(RenderWarning::MergedGaps {
                        edge: edge.id.clone(),
                    });
                }
                _ => cuts.push((a, b)),
            }
        }
        let mut pieces = Vec::new();
        let mut start = 0.0;
        for &(a, b) in &cuts {
            if a > start {
                pieces.push(piece(pts, cum, start, a));
            }
            start = b;
        }
        if start < total || cuts.is_empty() {
            pieces.push(piece(pts, cum, start, total));
        }
        let mut path = String::new();
        for pc in &pieces {
            for (i, p) in pc.iter().enumerate() {
                let _ = write!(
                    path,
                    "{}{} {} ",
                    if i == 0 { "M" } else { "L" },
                    decimal12(p.0),
                    decimal12(-p.1)
                );
            }
        }
        let color = match opts.scheme {
            ColorScheme::Mono => "#000000",
            ColorScheme::Palette => PALETTE[e % PALETTE.len()],
        };
        let _ = writeln!(
            svg,
            r#"<path data-edge="{}" data-gaps="{}" stroke="{}" d="{}"/>"#,
            xml_escape(&edge.id),
            assignment.gaps_per_edge[e],
            color,
            path.trim_end()
        );
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, r##"<g fill="#000000">"##);
    for v in d.vertices() {
        let p = v.point.to_f64();
        let _ = writeln!(
            svg,
            r#"<circle data-vertex="{}" cx="{}" cy="{}" r="{}"/>"#,
            xml_escape(&v.id),
            decimal12(p.0),
            decimal12(-p.1),
            decimal12(opts.vertex_radius * unit)
        );
    }
    let _ = writeln!(svg, "</g>\n</svg>");
    warnings.dedup();
    Ok((svg, warnings))
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Number of interruptions in each edge's path, read back from an SVG.
pub fn count_interruptions(svg: &str) -> Vec<(String, usize)> {
    svg.lines()
        .filter_map(|line| {
            let rest = line.strip_prefix(r#"<path data-edge=""#)?;
            let id = &rest[..rest.find('"')?];
            let d = &line[line.find(r#" d=""#)? + 4..];
            Some((id.to_string(), d.matches('M').count().saturating_sub(1)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{compute_crossings, load_drawing};
    use crate::solver::min_gap_k;

    #[test]
    fn twelve_digits() {
        assert_eq!(decimal12(1.0), "1");
        assert_eq!(decimal12(-0.5), "-0.5");
        assert_eq!(decimal12(1.0 / 3.0), "0.333333333333");
        assert_eq!(decimal12(123456.7890123456), "123456.789012");
        assert_eq!(decimal12(1e15 + 7.0), "1000000000000000");
    }

    #[test]
    fn single_x() {
        let d = load_drawing(
            r#"{"vertices":[{"id":"a","x":0,"y":0},{"id":"b","x":2,"y":2},{"id":"c","x":0,"y":2},{"id":"d","x":2,"y":0}],
               "edges":[{"id":"ab","source":"a","target":"b"},{"id":"cd","source":"c","target":"d"}]}"#,
        )
        .unwrap();
        let cs = compute_crossings(&d).unwrap();
        let a = min_gap_k(&cs.crossing_graph()).assignment;
        let (svg, warnings) = render_svg(&d, &cs, &a, &RenderOptions::default()).unwrap();
        assert!(warnings.is_empty());
        let counts = count_interruptions(&svg);
        let total: usize = counts.iter().map(|c| c.1).sum();
        assert_eq!(total, 1);
        let (again, _) = render_svg(&d, &cs, &a, &RenderOptions::default()).unwrap();
        assert_eq!(svg, again);
    }

    #[test]
    fn merged_gaps_warn() {
        // one long edge crossed twice close together
        let d = load_drawing(
            r#"{"vertices":[{"id":"a","x":0,"y":0},{"id":"b","x":10,"y":0},
                 {"id":"c","x":4,"y":1},{"id":"d","x":4,"y":-1},{"id":"e","x":5,"y":1},{"id":"f","x":5,"y":-1}],
               "edges":[{"id":"ab","source":"a","target":"b"},{"id":"cd","source":"c","target":"d"},{"id":"ef","source":"e","target":"f"}]}"#,
        )
        .unwrap();
        let cs = compute_crossings(&d).unwrap();
        let cg = cs.crossing_graph();
        let ab = GapAssignment::from_assigned(&cg, 2, vec![0, 0]).unwrap();
        let opts = RenderOptions {
            gap_width: Some(Rational::from_integer(3.into())),
            ..Default::default()
        };
        let (_, w) = render_svg(&d, &cs, &ab, &opts).unwrap();
        assert_eq!(w, vec![RenderWarning::MergedGaps { edge: "ab".into() }]);
    }
}
