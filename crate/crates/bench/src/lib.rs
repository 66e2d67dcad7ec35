//! Criterion benchmarks for `permstat-core` live under `benches/`.
