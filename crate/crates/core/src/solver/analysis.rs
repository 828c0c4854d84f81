use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::geometry::{CrossingGraph, CrossingSet};
use crate::union_find::UnionFind;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degeneracy {
    pub d: usize,
    /// Peeling order: each node has at most `d` neighbours later in it.
    pub order: Vec<usize>,
}

/// Minimum-degree peeling; parallel arcs count with multiplicity.
pub fn degeneracy(cg: &CrossingGraph) -> Degeneracy {
    let n = cg.node_count();
    let mut deg: Vec<usize> = (0..n).map(|v| cg.degree(v)).collect();
    let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (deg[v], v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut d = 0;
    while let Some((dv, v)) = queue.pop_first() {
        d = d.max(dv);
        removed[v] = true;
        order.push(v);
        for &c in cg.incident(v) {
            let u = cg.other(c, v);
            if !removed[u] {
                queue.remove(&(deg[u], u));
                deg[u] -= 1;
                queue.insert((deg[u], u));
            }
        }
    }
    Degeneracy { d, order }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWitness {
    /// Nodes around the cycle, first not repeated.
    pub nodes: Vec<usize>,
    pub arcs: Vec<usize>,
}

/// Finds a cycle if any; two parallel arcs form a cycle of length 2.
pub fn has_cycle(cg: &CrossingGraph) -> Option<CycleWitness> {
    let n = cg.node_count();
    let mut uf = UnionFind::new(n);
    let mut tree: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (c, &(a, b)) in cg.arcs().iter().enumerate() {
        if !uf.union(a, b) {
            // the tree path from b back to a closes the cycle
            let mut parent = vec![None; n];
            let mut seen = vec![false; n];
            seen[a] = true;
            let mut queue = VecDeque::from([a]);
            while let Some(x) = queue.pop_front() {
                for &(y, arc) in &tree[x] {
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = Some((x, arc));
                        queue.push_back(y);
                    }
                }
            }
            let mut nodes = vec![b];
            let mut arcs = vec![c];
            let mut y = b;
            while let Some((x, arc)) = parent[y] {
                arcs.push(arc);
                nodes.push(x);
                y = x;
            }
            return Some(CycleWitness { nodes, arcs });
        }
        tree[a].push((b, c));
        tree[b].push((a, c));
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueResult {
    pub size: usize,
    pub members: Vec<usize>,
}

/// Largest set of pairwise-crossing edges (Bron-Kerbosch with pivoting).
pub fn max_pairwise_crossing(cg: &CrossingGraph, limit: usize) -> Result<CliqueResult> {
    let nodes = cg.participants();
    // a triangle-free graph with an arc has clique number exactly 2
    if let (Some(&(a, b)), false) = (cg.arcs().first(), has_triangle(cg)) {
        let mut members = vec![a, b];
        members.sort_unstable();
        return Ok(CliqueResult { size: 2, members });
    }
    let cap = limit.min(64);
    if nodes.len() > cap {
        return Err(Error::SizeGuard {
            what: "crossing graph",
            limit: cap,
            actual: nodes.len(),
        });
    }
    if nodes.is_empty() {
        let size = usize::from(cg.node_count() > 0);
        return Ok(CliqueResult {
            size,
            members: (0..size).collect(),
        });
    }
    let mut local = vec![usize::MAX; cg.node_count()];
    for (i, &v) in nodes.iter().enumerate() {
        local[v] = i;
    }
    let mut adj = vec![0u64; nodes.len()];
    for &(a, b) in cg.arcs() {
        adj[local[a]] |= 1 << local[b];
        adj[local[b]] |= 1 << local[a];
    }
    let all = if nodes.len() == 64 {
        u64::MAX
    } else {
        (1u64 << nodes.len()) - 1
    };
    let mut best = 0u64;
    bron_kerbosch(&adj, 0, all, 0, &mut best);
    let members = (0..nodes.len())
        .filter(|&i| best >> i & 1 == 1)
        .map(|i| nodes[i])
        .collect();
    Ok(CliqueResult {
        size: best.count_ones() as usize,
        members,
    })
}

fn has_triangle(cg: &CrossingGraph) -> bool {
    let n = cg.node_count();
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in cg.arcs() {
        nbrs[a].push(b);
        nbrs[b].push(a);
    }
    let mut mark = vec![usize::MAX; n];
    for (v, around) in nbrs.iter().enumerate() {
        for &u in around {
            mark[u] = v;
        }
        for &(a, b) in cg.arcs() {
            if a != v && b != v && mark[a] == v && mark[b] == v {
                return true;
            }
        }
    }
    false
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, best: &mut u64) {
    if p == 0 && x == 0 {
        if r.count_ones() > best.count_ones() {
            *best = r;
        }
        return;
    }
    if r.count_ones() + p.count_ones() <= best.count_ones() {
        return;
    }
    let pivot = (p | x).trailing_zeros() as usize;
    let mut candidates = p & !adj[pivot];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        bron_kerbosch(adj, r | 1 << v, p & adj[v], x & adj[v], best);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCrossingCounts {
    pub per_edge: Vec<usize>,
    pub max: usize,
}

/// Crossings on each edge; the maximum is the drawing's k-planarity.
pub fn max_crossings_per_edge(cs: &CrossingSet) -> EdgeCrossingCounts {
    let mut per_edge = vec![0; cs.edge_count];
    for c in &cs.crossings {
        per_edge[c.edge_a] += 1;
        per_edge[c.edge_b] += 1;
    }
    let max = per_edge.iter().copied().max().unwrap_or(0);
    EdgeCrossingCounts { per_edge, max }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> CrossingGraph {
        CrossingGraph::new(5, (0..5).map(|i| (i, (i + 1) % 5)).collect())
    }

    #[test]
    fn degeneracy_examples() {
        let forest = CrossingGraph::new(5, vec![(0, 1), (1, 2), (3, 4)]);
        assert_eq!(degeneracy(&forest).d, 1);
        let dg = degeneracy(&c5());
        assert_eq!(dg.d, 2);
        assert_eq!(dg.order.len(), 5);
        let doubled = CrossingGraph::new(2, vec![(0, 1), (0, 1)]);
        assert_eq!(degeneracy(&doubled).d, 2);
    }

    #[test]
    fn cycles() {
        assert!(has_cycle(&CrossingGraph::new(2, vec![(0, 1)])).is_none());
        let w = has_cycle(&c5()).unwrap();
        assert_eq!(w.nodes.len(), 5);
        assert_eq!(w.arcs.len(), 5);
        let w = has_cycle(&CrossingGraph::new(3, vec![(0, 1), (1, 2), (1, 2)])).unwrap();
        assert_eq!(w.arcs, vec![2, 1]);
    }

    #[test]
    fn cliques() {
        let x = CrossingGraph::new(2, vec![(0, 1)]);
        assert_eq!(max_pairwise_crossing(&x, 64).unwrap().size, 2);
        assert_eq!(max_pairwise_crossing(&c5(), 64).unwrap().size, 2);
        let tri = CrossingGraph::new(4, vec![(0, 1), (1, 2), (0, 2), (2, 3)]);
        let r = max_pairwise_crossing(&tri, 64).unwrap();
        assert_eq!((r.size, r.members), (3, vec![0, 1, 2]));
        assert_eq!(
            max_pairwise_crossing(&CrossingGraph::new(3, vec![]), 64)
                .unwrap()
                .size,
            1
        );
        // triangle-free graphs skip the search regardless of size
        let wide = CrossingGraph::new(70, (0..35).map(|i| (2 * i, 2 * i + 1)).collect());
        assert_eq!(max_pairwise_crossing(&wide, 64).unwrap().size, 2);
        let mut arcs: Vec<_> = (0..35).map(|i| (2 * i, 2 * i + 1)).collect();
        arcs.extend([(0, 2), (1, 2)]);
        assert!(max_pairwise_crossing(&CrossingGraph::new(70, arcs), 64).is_err());
    }
}
