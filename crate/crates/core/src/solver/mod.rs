mod analysis;
mod assign;
mod brute;

pub use analysis::{
    degeneracy, has_cycle, max_crossings_per_edge, max_pairwise_crossing, CliqueResult,
    CycleWitness, Degeneracy, EdgeCrossingCounts,
};
pub use assign::{
    feasible_k, min_gap_k, pseudoforest_decomposition, Feasibility, GapAssignment, MinGap,
    PseudoforestDecomposition, ViolationWitness,
};
pub use brute::{brute_force_min_k, BRUTE_FORCE_GUARD};
