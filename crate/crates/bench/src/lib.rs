//! Criterion benchmarks for elimination, double-point search and meshing;
//! run with `cargo bench -p circsurf-bench`.
