//! Identities that must hold on every small hypergraph.

mod common;

use common::{connected, hypergraph, q};
use hypermod_core::fulkerson::{blocker_omega, is_antichain};
use hypermod_core::matroid::{all_subset_ranks, greedy_rank, matroid_arboricity, rank};
use hypermod_core::metrics::{arboricity, arboricity_by_edge_subsets, strength};
use hypermod_core::modulus::{mod2_mnp, ExplicitFamily, SolverOptions};
use hypermod_core::oracle::{
    enumerate_multitrees, greedy_hyperforest_size, polyhedron_vertices, strength_by_contractions,
};
use hypermod_core::{Hypergraph, Limits, Rational};
use proptest::prelude::*;

fn lim() -> Limits {
    Limits::default()
}

fn subsets(m: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..1usize << m).map(move |mask| (0..m).filter(|i| mask >> i & 1 == 1).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_formula_matches_greedy(h in hypergraph(6, 6)) {
        let table = all_subset_ranks(&h, &lim()).unwrap();
        for (mask, f) in subsets(h.num_edges()).enumerate() {
            let r = rank(&h, &f, &lim()).unwrap();
            prop_assert_eq!(r, greedy_hyperforest_size(&h, &f, &lim()).unwrap());
            prop_assert_eq!(r, greedy_rank(&h, &f, &lim()).unwrap());
            prop_assert_eq!(r, table[mask] as usize);
        }
    }

    #[test]
    fn rank_is_a_matroid_rank(h in hypergraph(5, 6)) {
        let m = h.num_edges();
        let table = all_subset_ranks(&h, &lim()).unwrap();
        for a in 0..1usize << m {
            prop_assert!(table[a] as u32 <= a.count_ones());
            for e in 0..m {
                let b = a | 1 << e;
                prop_assert!(table[a] <= table[b] && table[b] <= table[a] + 1);
            }
            for b in 0..1usize << m {
                prop_assert!(table[a | b] as u32 + table[a & b] as u32 <= table[a] as u32 + table[b] as u32);
            }
        }
    }

    #[test]
    fn strength_and_arboricity_cross_checks(h in connected(6, 7)) {
        let s = strength(&h, None, &lim()).unwrap().value;
        let d = arboricity(&h, &lim()).unwrap().value;
        prop_assert_eq!(&s, &strength_by_contractions(&h, &lim()).unwrap());
        prop_assert_eq!(&d, &arboricity_by_edge_subsets(&h, &lim()).unwrap());
        prop_assert!(s <= d);
        if s >= q(1, 1) {
            // Partition-connected: the matroid arboricity equals the hypergraph's.
            prop_assert_eq!(matroid_arboricity(&h, &lim()).unwrap().0, d);
        }
    }

    #[test]
    fn multitree_cap_is_sufficient(h in connected(5, 5)) {
        let n = h.num_vertices() as u32;
        let a = enumerate_multitrees(&h, n, &lim()).unwrap();
        let b = enumerate_multitrees(&h, n + 1, &lim()).unwrap();
        prop_assert_eq!(a.members(), b.members());
    }

    #[test]
    fn polyhedron_vertices_are_multitrees(h in connected(5, 5)) {
        let omega = enumerate_multitrees(&h, h.num_vertices() as u32, &lim()).unwrap();
        for v in polyhedron_vertices(&h, &lim()).unwrap() {
            prop_assert!(v.iter().all(Rational::is_integer));
            prop_assert!(omega.members().contains(&v));
        }
    }

    #[test]
    fn blocker_is_an_antichain_and_admissible(h in connected(5, 6)) {
        let omega = enumerate_multitrees(&h, h.num_vertices() as u32, &lim()).unwrap();
        let b: Vec<Vec<Rational>> = blocker_omega(&h, &lim())
            .unwrap()
            .into_iter()
            .map(|e| e.usage.vector.values)
            .collect();
        prop_assert!(is_antichain(&b));
        for w in &b {
            for g in omega.members() {
                let cost = w.iter().zip(g).fold(q(0, 1), |s, (a, b)| s + a * b);
                prop_assert!(cost >= q(1, 1));
            }
        }
    }

    #[test]
    fn adding_members_never_lowers_the_modulus(h in connected(4, 5), extra in prop::collection::vec(0u32..3, 5)) {
        let omega = enumerate_multitrees(&h, h.num_vertices() as u32, &lim()).unwrap();
        let m = h.num_edges();
        let new: Vec<Rational> = extra.iter().take(m).map(|&c| q(c as i64, 1)).collect();
        prop_assume!(new.len() == m && new.iter().any(|c| *c > q(0, 1)));
        let mut bigger = omega.members().to_vec();
        bigger.push(new);
        let bigger = ExplicitFamily::new(h.edge_ids(), bigger).unwrap();
        let w = vec![1.0; m];
        let opts = SolverOptions::default();
        let small = mod2_mnp(&omega, &w, &opts).unwrap().value_f64();
        let large = mod2_mnp(&bigger, &w, &opts).unwrap().value_f64();
        prop_assert!(large >= small - 1e-9);
    }
}

#[test]
fn lmo_returns_a_member() {
    let h: Hypergraph = hypermod_core::catalog::dense_block();
    let fam = hypermod_core::modulus::family(&h, hypermod_core::modulus::TreeFamily::Multitree, &lim()).unwrap();
    let members = fam.members(&lim()).unwrap();
    for cost in [[1.0, 2.0, 3.0, 4.0, 5.0], [5.0, 1.0, 1.0, 2.0, 0.5]] {
        let x: Vec<Rational> = fam.minimize(&cost).unwrap().iter().map(|&v| q(v as i64, 1)).collect();
        assert!(members.contains(&x));
    }
}
