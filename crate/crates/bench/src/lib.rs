//! Benchmark fixtures; see benches/.
