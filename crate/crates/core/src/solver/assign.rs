use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::geometry::CrossingGraph;
use crate::union_find::UnionFind;

/// Each crossing (arc) mapped to one of its two edges, at most `k` per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapAssignment {
    pub k: usize,
    /// `assigned[c]` is the edge that takes the gap at crossing `c`.
    pub assigned: Vec<usize>,
    pub gaps_per_edge: Vec<usize>,
}

impl GapAssignment {
    pub fn from_assigned(cg: &CrossingGraph, k: usize, assigned: Vec<usize>) -> Result<Self> {
        let mut gaps_per_edge = vec![0; cg.node_count()];
        for &e in &assigned {
            if e < gaps_per_edge.len() {
                gaps_per_edge[e] += 1;
            }
        }
        let ga = GapAssignment {
            k,
            assigned,
            gaps_per_edge,
        };
        ga.validate(cg)?;
        Ok(ga)
    }

    pub fn validate(&self, cg: &CrossingGraph) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidAssignment(m));
        if self.assigned.len() != cg.arc_count() {
            return bad(format!(
                "{} crossings but {} assignments",
                cg.arc_count(),
                self.assigned.len()
            ));
        }
        let mut count = vec![0; cg.node_count()];
        for (c, &e) in self.assigned.iter().enumerate() {
            let (a, b) = cg.arcs()[c];
            if e != a && e != b {
                return bad(format!("crossing {c} assigned to a non-responsible edge"));
            }
            count[e] += 1;
        }
        if count != self.gaps_per_edge {
            return bad("gap counts do not match the assignment".into());
        }
        if let Some(e) = count.iter().position(|&g| g > self.k) {
            return bad(format!(
                "edge {e} has {} gaps, more than k = {}",
                count[e], self.k
            ));
        }
        Ok(())
    }

    /// Edges that take no gap (uncrossed edges included).
    pub fn gap_free_edges(&self, cg: &CrossingGraph) -> Vec<usize> {
        (0..cg.node_count())
            .filter(|&e| self.gaps_per_edge[e] == 0)
            .collect()
    }

    pub fn gapped_edge_count(&self) -> usize {
        self.gaps_per_edge.iter().filter(|&&g| g > 0).count()
    }
}

/// An edge subset inducing more than `k` crossings per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ViolationWitness {
    pub k: usize,
    pub subset: Vec<usize>,
    pub crossings_in_subset: usize,
}

impl ViolationWitness {
    /// Recounts the induced crossings and checks the strict inequality.
    pub fn verify(&self, cg: &CrossingGraph) -> bool {
        let mut inside = vec![false; cg.node_count()];
        for &e in &self.subset {
            match inside.get_mut(e) {
                Some(slot) if !*slot => *slot = true,
                _ => return false,
            }
        }
        let count = cg
            .arcs()
            .iter()
            .filter(|&&(a, b)| inside[a] && inside[b])
            .count();
        count == self.crossings_in_subset && count > self.k * self.subset.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(GapAssignment),
    Infeasible(ViolationWitness),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn assignment(&self) -> Option<&GapAssignment> {
        match self {
            Feasibility::Feasible(a) => Some(a),
            Feasibility::Infeasible(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&ViolationWitness> {
        match self {
            Feasibility::Feasible(_) => None,
            Feasibility::Infeasible(w) => Some(w),
        }
    }
}

/// Unit-capacity b-matching of crossings to edges by augmenting paths.
///
/// Crossings are inserted in canonical order; each one goes to its lower edge
/// if that edge has room, else to the other, else along a shortest
/// reassignment path. When no path exists, the edges reachable by
/// reassignment are all full and together induce more than `k` crossings each.
pub fn feasible_k(cg: &CrossingGraph, k: usize) -> Feasibility {
    let n = cg.node_count();
    let mut assigned = vec![usize::MAX; cg.arc_count()];
    let mut load = vec![0usize; n];
    // crossings currently charged to each edge
    let mut charged: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];

    for (c, &(a, b)) in cg.arcs().iter().enumerate() {
        let direct = [a, b].into_iter().find(|&e| load[e] < k);
        if let Some(e) = direct {
            assigned[c] = e;
            load[e] += 1;
            charged[e].push(c);
            continue;
        }
        let mut touched = vec![a, b];
        seen[a] = true;
        seen[b] = true;
        parent[a] = None;
        parent[b] = None;
        let mut queue: VecDeque<usize> = VecDeque::from([a, b]);
        let mut free = None;
        'bfs: while let Some(x) = queue.pop_front() {
            for &c2 in &charged[x] {
                let y = cg.other(c2, x);
                if seen[y] {
                    continue;
                }
                seen[y] = true;
                touched.push(y);
                parent[y] = Some((x, c2));
                if load[y] < k {
                    free = Some(y);
                    break 'bfs;
                }
                queue.push_back(y);
            }
        }
        match free {
            Some(mut y) => {
                load[y] += 1;
                while let Some((x, c2)) = parent[y] {
                    assigned[c2] = y;
                    charged[x].retain(|&z| z != c2);
                    charged[y].push(c2);
                    y = x;
                }
                assigned[c] = y;
                charged[y].push(c);
                for v in touched {
                    seen[v] = false;
                }
            }
            None => {
                let mut subset: Vec<usize> = touched;
                subset.sort_unstable();
                let crossings_in_subset = cg
                    .arcs()
                    .iter()
                    .filter(|&&(p, q)| seen[p] && seen[q])
                    .count();
                return Feasibility::Infeasible(ViolationWitness {
                    k,
                    subset,
                    crossings_in_subset,
                });
            }
        }
    }
    Feasibility::Feasible(GapAssignment {
        k,
        assigned,
        gaps_per_edge: load,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinGap {
    pub k: usize,
    pub assignment: GapAssignment,
    /// Certificate that `k - 1` fails; absent when `k = 0`.
    pub witness: Option<ViolationWitness>,
}

/// Smallest feasible `k`, found by binary search over `0..=crossings`.
pub fn min_gap_k(cg: &CrossingGraph) -> MinGap {
    let (mut lo, mut hi) = (0usize, cg.arc_count());
    let mut best = match feasible_k(cg, hi) {
        Feasibility::Feasible(a) => a,
        Feasibility::Infeasible(_) => unreachable!("k = |crossings| is always feasible"),
    };
    while lo < hi {
        let mid = (lo + hi) / 2;
        match feasible_k(cg, mid) {
            Feasibility::Feasible(a) => {
                best = a;
                hi = mid;
            }
            Feasibility::Infeasible(_) => lo = mid + 1,
        }
    }
    let witness = (lo > 0).then(|| match feasible_k(cg, lo - 1) {
        Feasibility::Infeasible(w) => w,
        Feasibility::Feasible(_) => unreachable!("binary search invariant"),
    });
    best.k = lo;
    MinGap {
        k: lo,
        assignment: best,
        witness,
    }
}

/// Arcs split into `k` classes, each a pseudoforest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoforestDecomposition {
    /// Arc ids per part.
    pub parts: Vec<Vec<usize>>,
    /// Head (assigned edge) of every arc; within one part each node is a head at most once.
    pub heads: Vec<usize>,
}

pub fn pseudoforest_decomposition(
    cg: &CrossingGraph,
    ga: &GapAssignment,
) -> Result<PseudoforestDecomposition> {
    ga.validate(cg)?;
    let mut rank = vec![0usize; cg.node_count()];
    let mut parts: Vec<Vec<usize>> = vec![Vec::new(); ga.k];
    for (c, &head) in ga.assigned.iter().enumerate() {
        parts[rank[head]].push(c);
        rank[head] += 1;
    }
    for (i, part) in parts.iter().enumerate() {
        if !is_pseudoforest(cg, part) {
            return Err(Error::InvalidAssignment(format!(
                "part {i} is not a pseudoforest"
            )));
        }
    }
    Ok(PseudoforestDecomposition {
        parts,
        heads: ga.assigned.clone(),
    })
}

/// Every connected component has at most as many arcs as nodes.
pub(crate) fn is_pseudoforest(cg: &CrossingGraph, arcs: &[usize]) -> bool {
    let n = cg.node_count();
    let mut uf = UnionFind::new(n);
    for &c in arcs {
        let (a, b) = cg.arcs()[c];
        uf.union(a, b);
    }
    let mut nodes = vec![0usize; n];
    let mut edges = vec![0usize; n];
    let mut used = vec![false; n];
    for &c in arcs {
        let (a, b) = cg.arcs()[c];
        used[a] = true;
        used[b] = true;
        edges[uf.find(a)] += 1;
    }
    for v in 0..n {
        if used[v] {
            nodes[uf.find(v)] += 1;
        }
    }
    (0..n).all(|r| edges[r] <= nodes[r])
}
