//! The small examples every operation is documented against.

mod common;

use common::{ints, q};
use hypermod_core::catalog::*;
use hypermod_core::matroid::*;
use hypermod_core::metrics::*;
use hypermod_core::partitions::*;
use hypermod_core::{EdgeSpec, Hypergraph, Limits};

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn structure() {
    let h = double_triple();
    assert_eq!((h.num_vertices(), h.num_edges()), (3, 2));
    let single = Hypergraph::new(vec!["x".into()], vec![]).unwrap();
    assert!(single.is_connected());
    assert!(Hypergraph::new(vec!["x".into()], vec![EdgeSpec::new("l", &["x"])]).is_err());

    assert_eq!(h.induced_by_vertices(&[0, 1]).unwrap().num_edges(), 0);
    let t = triple_with_tail();
    assert_eq!(t.induced_by_vertices(&[2, 3]).unwrap().edge_ids(), ["e2"]);
    assert_eq!(h.induced_by_edges(&[2, 0]).unwrap().num_edges(), 2);
    let ie = t.induced_by_edges(&[2, 1]).unwrap();
    assert_eq!((ie.num_vertices(), ie.num_edges()), (4, 3));

    let c = t.contract(&[1]);
    assert_eq!((c.num_vertices(), c.num_edges()), (3, 1));
    assert_eq!(c.edge(0).members.len(), 3);
    let c = h.contract(&[0]);
    assert_eq!((c.num_vertices(), c.num_edges()), (1, 0));

    let p = Partition::from_classes(&t, &[vec![0], vec![1], vec![2, 3]]).unwrap();
    let s = t.shrink_partition(&p).unwrap();
    assert_eq!((s.num_vertices(), s.edge_ids()), (3, vec!["e1".to_string()]));
    let tri = triangle();
    let s = tri.shrink_partition(&Partition::from_classes(&tri, &[vec![0, 1], vec![2]]).unwrap()).unwrap();
    assert_eq!((s.num_vertices(), s.num_edges()), (2, 2));

    assert_eq!(path3().delete_vertex(1).unwrap().num_edges(), 0);
    let d = h.delete_vertex(0).unwrap();
    assert_eq!((d.num_vertices(), d.num_edges()), (2, 2));
    assert_eq!(tri.delete_vertex(0).unwrap().edge_ids(), ["bc"]);

    assert!(!path3().is_vertex_biconnected().unwrap());
    assert!(h.is_vertex_biconnected().unwrap());
    assert!(single_pair().is_vertex_biconnected().unwrap());

    let par = h.parallelize(3).unwrap();
    assert_eq!((par.hypergraph.num_edges(), par.groups.len()), (6, 2));
    assert_eq!(tri.parallelize(2).unwrap().hypergraph.num_edges(), 6);

    let comps = t.spanning_subgraph(&[1]).components();
    assert_eq!(comps.len(), 3);
    assert_eq!(comps[2].edge_ids(), ["e2"]);
}

#[test]
fn partitions() {
    let h = double_triple();
    assert_eq!(all_partitions(&h, 1, &lim()).unwrap().count(), 5);
    assert_eq!(all_partitions(&h, 2, &lim()).unwrap().count(), 4);
    assert_eq!(all_partitions(&triple_with_tail(), 1, &lim()).unwrap().count(), 15);
    let single = Partition::singletons(&h);
    assert_eq!(cut_of(&h, &single, &[0, 1]), [0, 1]);
    assert!(cut_of(&h, &single, &[]).is_empty());
    let t = triple_with_tail();
    let p = Partition::from_classes(&t, &[vec![0], vec![1], vec![2, 3]]).unwrap();
    assert_eq!(cut_of(&t, &p, &[0, 1]), [0]);
    assert!(is_feasible(&t, &p));
    assert!(!is_feasible(&h, &Partition::from_classes(&h, &[vec![0, 1], vec![2]]).unwrap()));
    let f = feasible_partitions(&h, &lim()).unwrap();
    assert_eq!(f.len(), 1);
    assert_eq!(f[0].vector.values, [q(1, 2), q(1, 2)]);
    assert_eq!(feasible_partitions(&triangle(), &lim()).unwrap().len(), 4);
    assert_eq!(feasible_partitions(&single_pair(), &lim()).unwrap()[0].vector.values, [q(1, 1)]);
}

#[test]
fn matroid() {
    let h = double_triple();
    let t = triple_with_tail();
    let tri = triangle();
    assert!(is_hyperforest(&h, &[1, 1], &lim()).unwrap());
    assert!(!is_hyperforest(&t, &[1, 2], &lim()).unwrap());
    assert!(is_hyperforest(&t, &[0, 0], &lim()).unwrap());
    assert_eq!(rank(&single_triple(), &[0], &lim()).unwrap(), 1);
    assert_eq!(rank(&t, &[], &lim()).unwrap(), 0);
    assert_eq!(rank(&t, &[0, 1], &lim()).unwrap(), 2);
    assert!(!is_independent(&tri, &[0, 1, 2], &lim()).unwrap());
    assert!(is_independent(&tri, &[2], &lim()).unwrap());
    assert!(is_independent(&h, &[0, 1], &lim()).unwrap());
    assert!(is_hypertree(&h, &[2, 0], &lim()).unwrap());
    assert!(is_hypertree(&t, &[2, 1], &lim()).unwrap());
    assert!(!is_hypertree(&t, &[1, 1], &lim()).unwrap());
    assert_eq!(greedy_min_basis(&tri, &[1, 2, 3], 1, &lim()).unwrap(), [1, 1, 0]);
    assert_eq!(greedy_min_basis(&h, &[1, 2], 3, &lim()).unwrap(), [2, 0]);
    assert_eq!(greedy_min_basis(&t, &[1, 1], 4, &lim()).unwrap(), [2, 1]);
    assert!(closure_contains(&tri, &[0, 1], 2, &lim()).unwrap());
    assert!(!closure_contains(&tri, &[], 0, &lim()).unwrap());
    assert!(!closure_contains(&t, &[0], 1, &lim()).unwrap());
    let rep = forest_representation(&h, &[0, 1], &lim()).unwrap().unwrap();
    assert_eq!(rep.pairs.len(), 2);
    assert!(forest_representation(&tri, &[0, 1, 2], &lim()).unwrap().is_none());
    let rep = forest_representation(&single_pair(), &[0], &lim()).unwrap().unwrap();
    assert_eq!((rep.pairs[0].1, rep.pairs[0].2), (0, 1));
    assert_eq!(matroid_strength(&single_triple(), &ints(&[1]), &lim()).unwrap().0, q(1, 1));
    assert_eq!(matroid_strength(&tri, &ints(&[1, 1, 1]), &lim()).unwrap().0, q(3, 2));
    assert_eq!(matroid_strength(&h, &ints(&[1, 1]), &lim()).unwrap().0, q(1, 1));
    assert_eq!(matroid_arboricity(&tri, &lim()).unwrap().0, q(3, 2));
    assert_eq!(matroid_arboricity(&single_pair(), &lim()).unwrap().0, q(1, 1));
    assert_eq!(matroid_arboricity(&h, &lim()).unwrap().0, q(1, 1));
}

#[test]
fn metrics() {
    let h = double_triple();
    let t = triple_with_tail();
    let tri = triangle();
    assert_eq!(density(&tri, &[0, 1, 2]).unwrap(), q(3, 2));
    assert_eq!(density(&single_pair(), &[0]).unwrap(), q(1, 1));
    assert_eq!(density(&h, &[0, 1]).unwrap(), q(1, 1));
    assert_eq!(strength(&h, Some(&ints(&[1, 2])), &lim()).unwrap().value, q(3, 2));
    assert_eq!(strength(&single_triple(), None, &lim()).unwrap().value, q(1, 2));
    let s = strength(&t, None, &lim()).unwrap();
    assert_eq!(s.value, q(1, 2));
    assert_eq!(s.witness.classes(), [vec![0], vec![1], vec![2, 3]]);
    let d = arboricity(&t, &lim()).unwrap();
    assert_eq!((d.value, d.witness), (q(1, 1), vec![2, 3]));
    assert_eq!(arboricity(&tri, &lim()).unwrap().value, q(3, 2));
    assert_eq!(arboricity(&h, &lim()).unwrap().value, q(1, 1));
    assert!(is_k_partition_connected(&h, 1, &lim()).unwrap());
    assert!(!is_k_partition_connected(&t, 1, &lim()).unwrap());
    assert!(!is_k_partition_connected(&tri, 2, &lim()).unwrap());
    assert_eq!(max_disjoint_hypertrees(&tri, &lim()).unwrap(), 1);
    assert_eq!(max_disjoint_hypertrees(&h, &lim()).unwrap(), 1);
    assert_eq!(max_disjoint_hypertrees(&t, &lim()).unwrap(), 0);
    assert_eq!(min_hyperforest_cover(&tri, &lim()).unwrap().0, 2);
    assert_eq!(min_hyperforest_cover(&single_pair(), &lim()).unwrap().0, 1);
    assert_eq!(min_hyperforest_cover(&h, &lim()).unwrap().0, 1);
    assert!(strength(&path3().spanning_subgraph(&[0]), None, &lim()).is_err());
}

#[test]
fn capacity_is_reported() {
    let names: Vec<String> = (0..13).map(|i| format!("x{i}")).collect();
    let edges = (0..12)
        .map(|i| EdgeSpec::new(format!("e{i}"), &[names[i].as_str(), names[i + 1].as_str()]))
        .collect();
    let big = Hypergraph::new(names, edges).unwrap();
    assert!(matches!(
        strength(&big, None, &lim()),
        Err(hypermod_core::Error::Capacity { .. })
    ));
}
