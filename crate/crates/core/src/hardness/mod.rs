//! 3-Partition utilities and the reduction to 1-gap-planarity.

mod reduce;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use reduce::{
    blob_subgraphs_are_k312, expected_sizes, reduce, Blob, Gadget, ReducedEdge, ReducedGraph,
    ReducedGraphDocument, ReducedVertex, ReductionSizes, Role,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThreePartitionInstance {
    pub m: usize,
    #[serde(rename = "A")]
    pub a: Vec<u64>,
    #[serde(rename = "I")]
    pub i: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: &'static str,
    pub detail: String,
}

impl ThreePartitionInstance {
    pub fn new(m: usize, a: Vec<u64>, i: u64) -> Self {
        ThreePartitionInstance { m, a, i }
    }

    pub fn validate(&self) -> std::result::Result<(), Vec<Violation>> {
        let mut v = Vec::new();
        let mut push = |kind, detail: String| v.push(Violation { kind, detail });
        if self.m == 0 {
            push("m", "m must be positive".into());
        }
        if self.i == 0 {
            push("bound", "I must be positive".into());
        }
        if self.a.len() != 3 * self.m {
            push(
                "count",
                format!("expected {} integers, got {}", 3 * self.m, self.a.len()),
            );
        }
        for (idx, &x) in self.a.iter().enumerate() {
            // I/4 < x < I/2
            if !(4 * x > self.i && 2 * x < self.i) {
                push(
                    "range",
                    format!("a[{idx}] = {x} is outside ({}/4, {}/2)", self.i, self.i),
                );
            }
        }
        let sum: u64 = self.a.iter().sum();
        if sum != self.m as u64 * self.i {
            push(
                "sum",
                format!("sum is {sum}, expected m*I = {}", self.m as u64 * self.i),
            );
        }
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }

    pub(crate) fn validated(&self) -> Result<()> {
        self.validate().map_err(|v| {
            let parts: Vec<String> = v
                .iter()
                .map(|x| format!("{}: {}", x.kind, x.detail))
                .collect();
            Error::InvalidParameter(format!(
                "invalid 3-partition instance ({})",
                parts.join("; ")
            ))
        })
    }
}

pub fn validate_instance(inst: &ThreePartitionInstance) -> std::result::Result<(), Vec<Violation>> {
    inst.validate()
}

/// True when the triples use every index exactly once and each sums to I.
pub fn verify_partition(inst: &ThreePartitionInstance, partition: &[[usize; 3]]) -> bool {
    if partition.len() != inst.m || inst.a.len() != 3 * inst.m {
        return false;
    }
    let mut used = vec![false; inst.a.len()];
    for triple in partition {
        let mut sum = 0;
        for &x in triple {
            if x >= used.len() || used[x] {
                return false;
            }
            used[x] = true;
            sum += inst.a[x];
        }
        if sum != inst.i {
            return false;
        }
    }
    true
}

pub const BRUTE_3P_GUARD: usize = 4;

/// Exhaustive search; returns triples of indices in ascending order.
pub fn brute_solve_3partition(inst: &ThreePartitionInstance) -> Result<Option<Vec<[usize; 3]>>> {
    if inst.m > BRUTE_3P_GUARD {
        return Err(Error::SizeGuard {
            what: "3-partition m",
            limit: BRUTE_3P_GUARD,
            actual: inst.m,
        });
    }
    if inst.a.len() != 3 * inst.m {
        return Ok(None);
    }
    let mut used = vec![false; inst.a.len()];
    let mut out = Vec::new();
    Ok(search(inst, &mut used, &mut out).then_some(out))
}

fn search(inst: &ThreePartitionInstance, used: &mut [bool], out: &mut Vec<[usize; 3]>) -> bool {
    let Some(first) = used.iter().position(|u| !u) else {
        return true;
    };
    used[first] = true;
    let n = used.len();
    for j in first + 1..n {
        if used[j] || inst.a[first] + inst.a[j] >= inst.i {
            continue;
        }
        used[j] = true;
        for k in j + 1..n {
            if used[k] || inst.a[first] + inst.a[j] + inst.a[k] != inst.i {
                continue;
            }
            used[k] = true;
            out.push([first, j, k]);
            if search(inst, used, out) {
                return true;
            }
            out.pop();
            used[k] = false;
        }
        used[j] = false;
    }
    used[first] = false;
    false
}

pub fn example_instance() -> ThreePartitionInstance {
    ThreePartitionInstance::new(3, vec![7, 7, 7, 8, 8, 8, 8, 9, 10], 24)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(example_instance().validate().is_ok());
        let half = ThreePartitionInstance::new(1, vec![12, 6, 6], 24);
        let kinds: Vec<_> = half
            .validate()
            .unwrap_err()
            .iter()
            .map(|v| v.kind)
            .collect();
        assert!(kinds.contains(&"range"));
        let sum = ThreePartitionInstance::new(1, vec![7, 7, 7], 24);
        let kinds: Vec<_> = sum.validate().unwrap_err().iter().map(|v| v.kind).collect();
        assert_eq!(kinds, vec!["sum"]);
    }

    #[test]
    fn partitions() {
        let inst = example_instance();
        // A1 = {7,7,10}, A2 = {7,8,9}, A3 = {8,8,8}
        assert!(verify_partition(&inst, &[[0, 1, 8], [2, 3, 7], [4, 5, 6]]));
        assert!(!verify_partition(&inst, &[[0, 0, 8], [2, 3, 7], [4, 5, 6]]));
        assert!(!verify_partition(&inst, &[[0, 1, 3], [2, 8, 7], [4, 5, 6]]));
        let found = brute_solve_3partition(&inst).unwrap().unwrap();
        assert!(verify_partition(&inst, &found));
    }

    #[test]
    fn brute_edge_cases() {
        let one = ThreePartitionInstance::new(1, vec![7, 8, 9], 24);
        assert_eq!(brute_solve_3partition(&one).unwrap(), Some(vec![[0, 1, 2]]));
        // valid ranges and sum, but no triple reaches 30
        let none = ThreePartitionInstance::new(2, vec![8, 8, 8, 12, 12, 12], 30);
        assert!(none.validate().is_ok());
        assert_eq!(brute_solve_3partition(&none).unwrap(), None);
        let big = ThreePartitionInstance::new(5, vec![7; 15], 21);
        assert!(matches!(
            brute_solve_3partition(&big),
            Err(Error::SizeGuard { .. })
        ));
    }
}
