//! Criterion benchmarks for rewriting, completion and classification; see
//! `benches/`.
