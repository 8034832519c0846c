//! Criterion benchmarks for `ravenel-core`; see `benches/kernels.rs`.
