//! Benchmarks for the twobridge census live in `benches/`.
