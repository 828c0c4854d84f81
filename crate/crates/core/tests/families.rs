use gapplanar::constructions::*;
use gapplanar::density::{density_report, GraphKind, Verdict};
use gapplanar::homotopic_parallel_pairs;
use gapplanar::solver::{
    feasible_k, has_cycle, max_crossings_per_edge, max_pairwise_crossing, min_gap_k,
};

fn k_star(g: &GeneratedFamily) -> usize {
    min_gap_k(&g.crossings.crossing_graph()).k
}

#[test]
fn k8_from_nested_squares() {
    let g = gen_nested_squares(2).unwrap();
    assert_eq!((g.drawing.vertex_count(), g.drawing.edge_count()), (8, 28));
    assert_eq!(g.crossings.len(), 18);
    assert_eq!(k_star(&g), 1);
    let cg = g.crossings.crossing_graph();
    g.assignment.as_ref().unwrap().validate(&cg).unwrap();
}

#[test]
fn nested_squares_density() {
    for s in 2..=4 {
        let g = gen_nested_squares(s).unwrap();
        let n = g.drawing.vertex_count();
        assert_eq!(g.drawing.edge_count(), 5 * n - 12);
        assert_eq!(k_star(&g), 1);
    }
}

#[test]
fn dodecahedron_insertions_meet_density_bound() {
    for i in 0..=12 {
        let g = gen_dodecahedron_diagonals(i).unwrap();
        let (n, m) = (g.drawing.vertex_count(), g.drawing.edge_count());
        assert_eq!(n, 20 + i);
        assert_eq!(m, 5 * n - 10, "insertions {i}");
        let cg = g.crossings.crossing_graph();
        assert_eq!(min_gap_k(&cg).k, 1);
        assert!(has_cycle(&cg).is_some());
        g.assignment.as_ref().unwrap().validate(&cg).unwrap();
        let r = density_report(n, m, 1, GraphKind::Simple).unwrap();
        assert_eq!(r.verdict, Verdict::Possibly);
    }
}

#[test]
fn zarankiewicz_k312() {
    let (g, _) = gen_zarankiewicz(3, 12).unwrap();
    assert_eq!(g.drawing.edge_count(), 36);
    assert_eq!(g.crossings.len(), 30);
    let cg = g.crossings.crossing_graph();
    let a = feasible_k(&cg, 1).assignment().unwrap().clone();
    assert_eq!(a.gap_free_edges(&cg).len(), 6);
}

#[test]
fn zarankiewicz_counts() {
    for (p, q) in [(1, 7), (2, 5), (3, 4), (5, 6), (4, 8), (6, 6)] {
        let (g, _) = gen_zarankiewicz(p, q).unwrap();
        assert_eq!(
            g.crossings.len(),
            zarankiewicz_number(p, q),
            "K_{{{p},{q}}}"
        );
    }
}

#[test]
fn quasiplanar_witness_is_not_one_gap() {
    let g = gen_quasiplanar_witness(1, 19).unwrap();
    assert_eq!(g.drawing.edge_count(), 342);
    assert_eq!(g.crossings.len(), 361);
    let cg = g.crossings.crossing_graph();
    let w = feasible_k(&cg, 1).witness().unwrap().clone();
    assert!(w.verify(&cg));
    assert!(w.crossings_in_subset > w.subset.len());
    assert_eq!(max_pairwise_crossing(&cg, 64).unwrap().size, 2);
}

#[test]
fn wheel_witness() {
    let g = gen_wheel_witness(3, 1).unwrap();
    assert_eq!(k_star(&g), 1);
    assert_eq!(max_crossings_per_edge(&g.crossings).max, 4);
}

#[test]
fn multigraph_family() {
    for n0 in 5..=10 {
        let g = gen_multigraph_extremal(n0).unwrap();
        let (n, m) = (g.drawing.vertex_count(), g.drawing.edge_count());
        assert_eq!(m, 5 * n - 10);
        assert_eq!(k_star(&g), 1);
        let h = homotopic_parallel_pairs(&g.drawing, &g.crossings);
        assert!(h.homotopic.is_empty() && h.undecided.is_empty());
        let kind = GraphKind::Multigraph {
            no_homotopic_parallels: true,
        };
        assert_eq!(
            density_report(n, m, 1, kind).unwrap().verdict,
            Verdict::Possibly
        );
    }
}

#[test]
fn manifests_carry_counts() {
    let g = gen_dodecahedron_diagonals(0).unwrap();
    let m = g.manifest();
    assert_eq!((m.n, m.m), (20, 90));
    assert_eq!(m.assignment.unwrap().assignments.len(), g.crossings.len());
}
