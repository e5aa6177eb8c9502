//! Criterion benchmarks for repst; see `benches/`.
