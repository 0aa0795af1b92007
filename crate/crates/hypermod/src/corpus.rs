//! Seeded random hypergraphs for property checks.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hypermod_core::metrics::partition_connectivity;
use hypermod_core::{ratio, EdgeSpec, Hypergraph, Limits, Rational};

#[derive(Debug, Clone, Copy)]
pub struct CorpusSpec {
    pub seed: u64,
    pub count: usize,
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Keep only partition-connected instances.
    pub partition_connected: bool,
}

impl CorpusSpec {
    pub fn new(seed: u64, count: usize) -> Self {
        Self {
            seed,
            count,
            max_vertices: 7,
            max_edges: 8,
            partition_connected: false,
        }
    }
}

/// One random hypergraph on `2..=max_vertices` vertices with
/// `1..=max_edges` edges of size 2 to 4. May be disconnected.
pub fn random_hypergraph(rng: &mut impl Rng, max_vertices: usize, max_edges: usize) -> Hypergraph {
    let n = rng.gen_range(2..=max_vertices);
    let m = rng.gen_range(1..=max_edges);
    let vertices: Vec<String> = (0..n).map(|i| format!("v{}", i + 1)).collect();
    let edges = (0..m)
        .map(|i| {
            let size = match rng.gen_range(0..10) {
                0..=4 => 2,
                5..=7 => 3,
                _ => 4,
            }
            .min(n);
            let mut members: Vec<usize> = sample(rng, n, size).into_vec();
            members.sort_unstable();
            EdgeSpec {
                id: format!("e{}", i + 1),
                vertices: members.iter().map(|&v| vertices[v].clone()).collect(),
                weight: None,
            }
        })
        .collect();
    Hypergraph::new(vertices, edges).expect("generated edges are valid")
}

/// `count` connected instances, drawn in a fixed order from the seed.
pub fn corpus(spec: &CorpusSpec) -> Vec<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let lim = Limits::default();
    let mut out = Vec::with_capacity(spec.count);
    while out.len() < spec.count {
        let h = random_hypergraph(&mut rng, spec.max_vertices, spec.max_edges);
        if !h.is_connected() {
            continue;
        }
        if spec.partition_connected
            && partition_connectivity(&h, &lim).expect("corpus sizes are within the caps") == 0
        {
            continue;
        }
        out.push(h);
    }
    out
}

/// Positive rational weights `p/q` with `1 <= p <= 9`, `1 <= q <= 4`.
pub fn random_weights(rng: &mut impl Rng, m: usize) -> Vec<Rational> {
    (0..m)
        .map(|_| ratio(rng.gen_range(1..=9), rng.gen_range(1..=4)))
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_filtered() {
        let mut spec = CorpusSpec::new(7, 20);
        spec.partition_connected = true;
        let a = corpus(&spec);
        assert_eq!(a, corpus(&spec));
        let lim = Limits::default();
        for h in &a {
            assert!(h.num_vertices() <= 7 && h.num_edges() <= 8);
            assert!(partition_connectivity(h, &lim).unwrap() >= 1);
        }
    }
}
