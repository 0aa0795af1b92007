//! The production solvers against the brute-force references on the
//! catalog, with weights.

mod common;

use common::{ints, q};
use hypermod_core::catalog;
use hypermod_core::decompose::{check_density_extremes, hdp, hsp, DecomposeOptions, NodeKind};
use hypermod_core::metrics::strength;
use hypermod_core::modulus::*;
use hypermod_core::oracle::*;
use hypermod_core::{to_f64, Limits, Rational};

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn exact_lp_agrees_with_the_basic_scan() {
    let tri = catalog::triangle();
    let trees = enumerate_hypertrees(&tri, &lim()).unwrap();
    let rows: Vec<(Vec<Rational>, Rational)> =
        trees.members().iter().map(|g| (g.clone(), q(1, 1))).collect();
    for w in [ints(&[1, 1, 1]), ints(&[1, 2, 3]), vec![q(1, 3), q(5, 2), q(1, 1)]] {
        let a = lp_min(&w, &rows).unwrap();
        let b = lp_min_basic_scan(&w, &rows, 100_000).unwrap();
        assert_eq!(a.value, b.value);
    }
    let a = lp_min(&ints(&[1, 1, 1]), &rows).unwrap();
    assert_eq!(a.value, q(3, 2));
    assert_eq!(a.point, vec![q(1, 2); 3]);
    let fig = lp_min(&ints(&[1, 2]), &[(ints(&[1, 1]), q(1, 1))]).unwrap();
    assert_eq!((fig.value, fig.point), (q(1, 1), ints(&[1, 0])));
    assert_eq!(lp_min(&ints(&[0, 0]), &[(ints(&[1, 1]), q(1, 1))]).unwrap().value, q(0, 1));
    assert!(matches!(
        lp_min(&ints(&[1]), &[(ints(&[-1]), q(1, 1))]),
        Err(hypermod_core::Error::Infeasible(_))
    ));
    assert!(matches!(
        lp_min(&ints(&[-1]), &[(ints(&[1]), q(1, 1))]),
        Err(hypermod_core::Error::Unbounded(_))
    ));
}

#[test]
fn one_modulus_of_multitrees_is_weighted_strength() {
    for (name, h) in catalog::all() {
        if !h.is_connected() || h.num_edges() > lim().max_polyhedron_edges {
            continue;
        }
        let w: Vec<Rational> = (0..h.num_edges()).map(|i| q(1 + (i as i64 * 7) % 5, 1 + i as i64 % 3)).collect();
        let r = mod1(&h, TreeFamily::Multitree, &w, &lim()).unwrap();
        assert_eq!(r.value.exact().unwrap(), &strength(&h, Some(&w), &lim()).unwrap().value, "{name}");
        let rho: Vec<Rational> = r.rho_star.unwrap().values.iter().map(|s| s.exact().unwrap().clone()).collect();
        let fam = family(&h, TreeFamily::Multitree, &lim()).unwrap();
        assert!(is_admissible(fam.as_ref(), &rho, 0.0).unwrap(), "{name}");
        assert_eq!(energy(&rho, &w, 1), *r.value.exact().unwrap(), "{name}");
    }
}

#[test]
fn two_modulus_matches_the_hull_projection() {
    for (name, h) in catalog::all() {
        if !h.is_connected() || h.num_edges() > 12 {
            continue;
        }
        let weights: Vec<Rational> = (0..h.num_edges()).map(|i| q(1 + i as i64 % 3, 1)).collect();
        let wf: Vec<f64> = weights.iter().map(to_f64).collect();
        for kind in [TreeFamily::Tree, TreeFamily::Multitree] {
            let Ok(fam) = family(&h, kind, &lim()) else {
                continue;
            };
            let res = mod2_mnp(fam.as_ref(), &wf, &SolverOptions::default()).unwrap();
            let qp = qp_min_norm(&fam.members(&lim()).unwrap(), &weights).unwrap();
            let dual = res.dual_value.as_ref().unwrap().to_f64();
            assert!((dual - qp.value).abs() < 1e-6, "{name} {kind:?}: {dual} vs {}", qp.value);
            assert!(qp.exact.is_some(), "{name} {kind:?}: no exact certificate");
            for (a, b) in res.eta_star.as_ref().unwrap().values.iter().zip(&qp.point) {
                assert!((a - b).abs() < 1e-6, "{name} {kind:?}");
            }
            duality_pair(&res, &wf, 1e-9).unwrap();
        }
    }
}

#[test]
fn quotient_of_parallel_copies() {
    let h = catalog::double_triple();
    let big = h.parallelize(3).unwrap();
    assert_eq!(enumerate_hypertrees(&big.hypergraph, &lim()).unwrap().len(), 15);
    let gamma = HypertreeFamily::new(&big.hypergraph, &lim()).unwrap();
    let opts = SolverOptions::default();
    let r = mod2_mnp(&gamma, &[1.0; 6], &opts).unwrap();
    assert!((r.value_f64() / 3.0 - 0.5).abs() < 1e-9);
    let rho = r.rho_star.unwrap();
    assert!(rho.values.iter().all(|s| (s.to_f64() - 0.5).abs() < 1e-9));
}

#[test]
fn decomposition_of_the_three_level_instance() {
    let h = catalog::three_level();
    let opts = DecomposeOptions::default();
    let root = hdp(&h, TreeFamily::Multitree, &opts).unwrap();
    let kinds: Vec<NodeKind> = root.children.iter().map(|c| c.kind).collect();
    assert_eq!(
        kinds,
        [NodeKind::Homogeneous, NodeKind::Split, NodeKind::Split, NodeKind::Isolated, NodeKind::Isolated]
    );
    assert_eq!(root.children[1].hypergraph.num_edges(), root.children[2].hypergraph.num_edges());
    let mut levels: Vec<Rational> = root
        .walk()
        .iter()
        .filter(|n| n.kind == NodeKind::Homogeneous)
        .map(|n| q(1, 1) / n.strength.clone().unwrap())
        .collect();
    levels.sort();
    levels.dedup();
    assert_eq!(levels, [q(3, 5), q(1, 1), q(3, 2)]);
    for n in root.walk() {
        if n.kind == NodeKind::Homogeneous {
            assert_eq!(n.strength, n.arboricity);
        }
    }
    let r = check_density_extremes(&h, &opts).unwrap();
    assert!(r.passed(1e-6), "{r:?}");
    assert_eq!((r.strength, r.arboricity), (q(2, 3), q(5, 3)));
    // Shrinking goes bottom up: the blocks, then the acx edges.
    let steps = hsp(&h, TreeFamily::Multitree, &opts).unwrap();
    assert_eq!(steps.len(), 2);
    assert_eq!(steps[0].cores.len(), 2);
}
