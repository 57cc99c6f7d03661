//! Benchmark-only crate; see `benches/ribbon.rs`.
