//! Criterion benchmarks for `vertexfreq`; see `benches/`.
