//! Benchmarks live in `benches/`; run them with `cargo bench -p bipass-bench`.
