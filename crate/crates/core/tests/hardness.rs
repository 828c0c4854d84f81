use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gapplanar::hardness::*;

/// Valid instance built from m triples that each sum to I.
fn random_instance(seed: u64) -> ThreePartitionInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let m = rng.gen_range(1..=3);
        let i: u64 = rng.gen_range(9..=30);
        let (lo, hi) = (i / 4 + 1, (i - 1) / 2);
        if lo > hi {
            continue;
        }
        let mut a = Vec::new();
        for _ in 0..m {
            for _ in 0..100 {
                let x = rng.gen_range(lo..=hi);
                let y = rng.gen_range(lo..=hi);
                if x + y < i && (lo..=hi).contains(&(i - x - y)) {
                    a.extend([x, y, i - x - y]);
                    break;
                }
            }
        }
        if a.len() == 3 * m {
            for j in (1..a.len()).rev() {
                a.swap(j, rng.gen_range(0..=j));
            }
            let inst = ThreePartitionInstance::new(m, a, i);
            assert!(inst.validate().is_ok(), "{inst:?}");
            return inst;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reduction_matches_closed_forms(seed in any::<u64>()) {
        let inst = random_instance(seed);
        let g = reduce(&inst).unwrap();
        let s = expected_sizes(&inst);
        prop_assert_eq!(g.recount(), s.clone());
        prop_assert_eq!(blob_subgraphs_are_k312(&g).unwrap() as u64, s.total_blobs);
        // noncentral cells are strictly fuller than every central cell
        prop_assert!(inst.a.iter().all(|&x| x < s.noncentral_pairs));
        let deg = g.degrees();
        for p in &g.transversal_paths {
            prop_assert!(p[1..p.len() - 1].iter().all(|&v| deg[v] == 2));
        }
        prop_assert_eq!(deg[g.apex] as u64, 2 * (s.beam_blobs + 1));
    }

    #[test]
    fn solver_output_verifies(seed in any::<u64>()) {
        let inst = random_instance(seed);
        let p = brute_solve_3partition(&inst).unwrap().expect("built from a partition");
        prop_assert!(verify_partition(&inst, &p));
    }
}

#[test]
fn example_instance_audit() {
    let inst = example_instance();
    let g = reduce(&inst).unwrap();
    let s = expected_sizes(&inst);
    assert_eq!(g.recount(), s);
    assert_eq!(s.beam_blobs, 127);
    assert_eq!(g.gadgets[&Gadget::TopBeam].len(), 128);
    assert_eq!((s.columns, s.cells_per_column), (9, 5));
    assert_eq!(s.transversal_path_edges, 102);
    for p in &g.transversal_paths {
        assert_eq!(p.len() - 1, 102);
    }
    assert!(verify_partition(&inst, &[[0, 1, 8], [2, 3, 7], [4, 5, 6]]));
}

#[test]
fn path_gadgets_have_k_plus_one_attaching_vertices() {
    let g = reduce(&example_instance()).unwrap();
    for (gadget, att) in &g.gadgets {
        let k = g.blobs.iter().filter(|b| b.gadget == *gadget).count();
        assert_eq!(att.len(), k + 1, "{gadget}");
        // consecutive blobs share exactly their common attaching vertex
        let chain: Vec<_> = g.blobs.iter().filter(|b| b.gadget == *gadget).collect();
        for w in chain.windows(2) {
            assert_eq!(w[0].v, w[1].u);
        }
    }
}

#[test]
fn doubling_scales_half_bound_counts() {
    let inst = example_instance();
    let twice = ThreePartitionInstance::new(3, inst.a.iter().map(|x| 2 * x).collect(), 2 * inst.i);
    let (s, t) = (expected_sizes(&inst), expected_sizes(&twice));
    assert_eq!(t.half_bound, 2 * s.half_bound);
    // beam length is 3m(h + 2) + 1
    assert_eq!(t.beam_blobs - s.beam_blobs, 9 * s.half_bound);
    assert_eq!(reduce(&twice).unwrap().recount(), t);
}

#[test]
fn rejects_invalid_instances() {
    let bad = ThreePartitionInstance::new(1, vec![12, 6, 6], 24);
    assert!(reduce(&bad).is_err());
}
