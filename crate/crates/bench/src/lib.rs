//! Criterion benchmarks for tdc-core; see `benches/`.
