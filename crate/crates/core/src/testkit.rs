//! Seeded random graphs for test harnesses. Not part of the stable API.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

/// Erdős–Rényi `G(n, p)` drawn from a ChaCha8 stream seeded by `seed`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are valid")
}

/// `count` connected Erdős–Rényi graphs with `min_n <= n <= max_n`,
/// rejecting disconnected draws. Deterministic in `seed`.
pub fn random_connected_graphs(count: usize, min_n: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.random_range(min_n..=max_n);
        let p = rng.random_range(0.25..0.75);
        let g = erdos_renyi(n, p, rng.random());
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Vector of `n` uniform values in `[-1, 1)`.
pub fn random_vector(n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(-1.0..1.0)).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
