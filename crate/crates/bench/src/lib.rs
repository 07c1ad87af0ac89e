//! Fixtures shared by the benchmarks.

use sgstar::constructions;
use sgstar::SignedGraph;

/// Seeded random graphs of one order, for stable timing runs.
pub fn random_graphs(n: usize, count: u64) -> Vec<SignedGraph> {
    (0..count).map(|seed| constructions::random_signed_graph(n, 0.5, 0.5, seed)).collect()
}
