#![allow(dead_code)]

use hypermod_core::{EdgeSpec, Hypergraph, Rational};
use proptest::prelude::*;

pub fn q(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

pub fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| q(x, 1)).collect()
}

/// A hypergraph on `n` vertices from edge bitmasks; masks with fewer than
/// two bits are dropped.
pub fn from_masks(n: usize, masks: &[u32]) -> Hypergraph {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let edges = masks
        .iter()
        .map(|m| m & ((1 << n) - 1))
        .filter(|m| m.count_ones() >= 2)
        .enumerate()
        .map(|(i, m)| {
            let vs: Vec<&str> = (0..n).filter(|v| m >> v & 1 == 1).map(|v| names[v].as_str()).collect();
            EdgeSpec::new(format!("e{i}"), &vs)
        })
        .collect();
    Hypergraph::new(names.clone(), edges).unwrap()
}

/// Hypergraphs with `2..=max_v` vertices and up to `max_e` edges.
pub fn hypergraph(max_v: usize, max_e: usize) -> impl Strategy<Value = Hypergraph> {
    (2..=max_v).prop_flat_map(move |n| {
        prop::collection::vec(1u32..(1 << n), 1..=max_e).prop_map(move |m| from_masks(n, &m))
    })
}

pub fn connected(max_v: usize, max_e: usize) -> impl Strategy<Value = Hypergraph> {
    hypergraph(max_v, max_e).prop_filter("connected", |h| h.num_edges() > 0 && h.is_connected())
}
