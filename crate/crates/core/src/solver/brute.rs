use crate::error::{Error, Result};
use crate::geometry::CrossingGraph;

pub const BRUTE_FORCE_GUARD: usize = 20;

/// `max over nonempty S of ceil(arcs(S) / |S|)` by enumerating every subset
/// of the crossing edges. Exponential; refuses more than `guard` participants.
pub fn brute_force_min_k(cg: &CrossingGraph, guard: usize) -> Result<usize> {
    let nodes = cg.participants();
    if nodes.len() > guard.min(30) {
        return Err(Error::SizeGuard {
            what: "crossing graph",
            limit: guard.min(30),
            actual: nodes.len(),
        });
    }
    let p = nodes.len();
    let mut local = vec![usize::MAX; cg.node_count()];
    for (i, &v) in nodes.iter().enumerate() {
        local[v] = i;
    }
    let mut mult = vec![vec![0u32; p]; p];
    for &(a, b) in cg.arcs() {
        let (a, b) = (local[a], local[b]);
        mult[a][b] += 1;
        mult[b][a] += 1;
    }
    let mut arcs_in = vec![0u32; 1usize << p];
    let mut best = 0usize;
    for mask in 1usize..(1 << p) {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let mut add = 0;
        let mut r = rest;
        while r != 0 {
            let u = r.trailing_zeros() as usize;
            add += mult[v][u];
            r &= r - 1;
        }
        arcs_in[mask] = arcs_in[rest] + add;
        let size = mask.count_ones() as usize;
        best = best.max((arcs_in[mask] as usize).div_ceil(size));
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            brute_force_min_k(&CrossingGraph::new(0, vec![]), 20).unwrap(),
            0
        );
        let c5 = CrossingGraph::new(5, (0..5).map(|i| (i, (i + 1) % 5)).collect());
        assert_eq!(brute_force_min_k(&c5, 20).unwrap(), 1);
        let doubled = CrossingGraph::new(3, vec![(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)]);
        assert_eq!(brute_force_min_k(&doubled, 20).unwrap(), 2);
    }

    #[test]
    fn guard() {
        let big = CrossingGraph::new(22, (0..11).map(|i| (2 * i, 2 * i + 1)).collect());
        assert!(matches!(
            brute_force_min_k(&big, 20),
            Err(Error::SizeGuard { actual: 22, .. })
        ));
        assert_eq!(brute_force_min_k(&big, 22).unwrap(), 1);
    }
}
