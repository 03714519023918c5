//! Shared graph builders for the benchmark targets.

use census_core::{gen_barabasi_albert, gen_erdos_renyi, gen_watts_strogatz, Graph};

/// The three 1500-node generator graphs used across benchmarks.
pub fn benchmark_trio() -> Vec<(&'static str, Graph)> {
    vec![
        ("erdos_renyi_1500", gen_erdos_renyi(1500, 0.02, 42).unwrap()),
        ("watts_strogatz_1500", gen_watts_strogatz(1500, 32, 0.09, 42).unwrap()),
        ("barabasi_albert_1500", gen_barabasi_albert(1500, 16, 42).unwrap()),
    ]
}
