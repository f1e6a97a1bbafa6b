//! Criterion benchmarks for `lounesto-core`; see `benches/`.
