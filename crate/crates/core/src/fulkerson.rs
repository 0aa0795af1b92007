//! The blocker of the multi-tree family: feasible partitions whose shrunk
//! hypergraphs are vertex-biconnected, with their usage vectors
//! `(1/(|P|-1)) 1_{δ(P)}`, and exact checks of extremality against the
//! admissible set of `Ω(H)` and the partition polyhedron.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::hypergraph::Hypergraph;
use crate::linalg;
use crate::oracle::{admissible_vertices, enumerate_multitrees, polyhedron_vertices};
use crate::partitions::{feasible_partitions, visit_partitions, Partition, PartitionUsage};
use crate::{Error, Limits, Rational, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct BlockerElement {
    pub usage: PartitionUsage,
    /// `H_P`, one vertex per class.
    pub shrunk: Hypergraph,
    pub biconnected: bool,
}

fn require_connected(h: &Hypergraph) -> Result<()> {
    if h.num_vertices() < 2 {
        return Err(Error::Argument("need at least two vertices".into()));
    }
    if !h.is_connected() {
        return Err(Error::Argument("hypergraph is disconnected".into()));
    }
    Ok(())
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rational::zero(), |s, (x, y)| s + x * y)
}

/// Every feasible partition with at least two classes, with its shrunk
/// hypergraph and biconnectivity flag, in restricted-growth-string order.
pub fn feasible_elements(h: &Hypergraph, lim: &Limits) -> Result<Vec<BlockerElement>> {
    require_connected(h)?;
    feasible_partitions(h, lim)?
        .into_iter()
        .map(|usage| {
            let shrunk = h.shrink_partition(&usage.partition)?;
            let biconnected = shrunk.is_vertex_biconnected()?;
            Ok(BlockerElement {
                usage,
                shrunk,
                biconnected,
            })
        })
        .collect()
}

/// The blocker `Ω̂`: feasible partitions with vertex-biconnected `H_P`.
pub fn blocker_omega(h: &Hypergraph, lim: &Limits) -> Result<Vec<BlockerElement>> {
    Ok(feasible_elements(h, lim)?
        .into_iter()
        .filter(|b| b.biconnected)
        .collect())
}

/// Membership in `{x >= 0 : x(δ(P)) >= |P| - 1 for every partition P}`.
pub fn in_partition_polyhedron(h: &Hypergraph, x: &[Rational], lim: &Limits) -> Result<bool> {
    if x.len() != h.num_edges() {
        return Err(Error::Argument("vector length differs from the edge count".into()));
    }
    if x.iter().any(|v| v < &Rational::zero()) {
        return Ok(false);
    }
    if h.num_vertices() < 2 {
        return Ok(true);
    }
    let mut ok = true;
    visit_partitions(h, 2, lim, |p| {
        if ok {
            let s = p.cut().iter().fold(Rational::zero(), |s, &e| s + &x[e]);
            ok = s >= Rational::from_integer((p.size() - 1).into());
        }
    })?;
    Ok(ok)
}

/// Rank of the rows tight at `x` (given rows `a·x >= b`) together with the
/// coordinate rows of the zero entries.
fn tight_rank(rows: &[(Vec<Rational>, Rational)], x: &[Rational]) -> usize {
    let m = x.len();
    let mut tight: Vec<Vec<Rational>> = rows
        .iter()
        .filter(|(a, b)| dot(a, x) == *b)
        .map(|(a, _)| a.clone())
        .collect();
    for (e, v) in x.iter().enumerate() {
        if v.is_zero() {
            let mut r = alloc::vec![Rational::zero(); m];
            r[e] = Rational::one();
            tight.push(r);
        }
    }
    linalg::rank(&tight)
}

fn multitrees(h: &Hypergraph, lim: &Limits) -> Result<Vec<Vec<Rational>>> {
    Ok(enumerate_multitrees(h, h.num_vertices() as u32, lim)?
        .members()
        .to_vec())
}

fn extreme_in_admissible(members: &[Vec<Rational>], w: &[Rational]) -> Result<bool> {
    if w.iter().any(|v| v < &Rational::zero()) || members.iter().any(|g| dot(g, w) < Rational::one()) {
        return Err(Error::Argument("vector is not admissible for the multi-tree family".into()));
    }
    let rows: Vec<(Vec<Rational>, Rational)> =
        members.iter().map(|g| (g.clone(), Rational::one())).collect();
    Ok(tight_rank(&rows, w) == w.len())
}

/// True when `w` is an extreme point of `Adm(Ω(H))`: the member rows
/// `g·w = 1` and the zero coordinates of `w` have full rank.
pub fn verify_extreme(h: &Hypergraph, w: &[Rational], lim: &Limits) -> Result<bool> {
    require_connected(h)?;
    if w.len() != h.num_edges() {
        return Err(Error::Argument("vector length differs from the edge count".into()));
    }
    extreme_in_admissible(&multitrees(h, lim)?, w)
}

/// True when `x` is a vertex of the partition polyhedron.
pub fn is_polyhedron_vertex(h: &Hypergraph, x: &[Rational], lim: &Limits) -> Result<bool> {
    require_connected(h)?;
    if !in_partition_polyhedron(h, x, lim)? {
        return Err(Error::Argument("vector is outside the partition polyhedron".into()));
    }
    let mut rows = Vec::new();
    visit_partitions(h, 2, lim, |p| {
        let mut a = alloc::vec![Rational::zero(); h.num_edges()];
        for &e in p.cut() {
            a[e] = Rational::one();
        }
        rows.push((a, Rational::from_integer((p.size() - 1).into())));
    })?;
    Ok(tight_rank(&rows, x) == x.len())
}

/// `(1/(|P|-1)) 1_{δ(P)} = λ₁ u₁ + λ₂ u₂` with `u₁ ≠ u₂`, built from a cut
/// vertex of `H_P`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexSplit {
    pub cut_class: usize,
    pub first: PartitionUsage,
    pub second: PartitionUsage,
    pub lambda: (Rational, Rational),
}

/// Splits the usage vector of a feasible partition whose shrunk hypergraph
/// has a cut vertex into two other feasible partitions' vectors; `None`
/// when `H_P` is biconnected. The identity is checked exactly.
pub fn cut_vertex_split(h: &Hypergraph, p: &Partition) -> Result<Option<ConvexSplit>> {
    let shrunk = h.shrink_partition(p)?;
    let Some(j) = shrunk.cut_vertex() else {
        return Ok(None);
    };
    let rest = shrunk.delete_vertex(j)?;
    let (comp, _) = rest.component_labels();
    // Shrunk vertex i is class i; after deleting j, positions above j shift.
    let side_a = |i: usize| comp[if i > j { i - 1 } else { i }] == 0;
    let k = p.size();
    let mut first = alloc::vec![0usize; h.num_vertices()];
    let mut second = alloc::vec![0usize; h.num_vertices()];
    for v in 0..h.num_vertices() {
        let c = p.labels()[v];
        // P₁ keeps the A classes and merges B ∪ {j}; P₂ the reverse.
        first[v] = if c != j && side_a(c) { c + 1 } else { 0 };
        second[v] = if c != j && !side_a(c) { c + 1 } else { 0 };
    }
    let first = PartitionUsage::new(h, Partition::from_labels(h, &first)?)?;
    let second = PartitionUsage::new(h, Partition::from_labels(h, &second)?)?;
    let denom = Rational::from_integer((k - 1).into());
    let l1 = Rational::from_integer((first.partition.size() - 1).into()) / &denom;
    let l2 = Rational::from_integer((second.partition.size() - 1).into()) / &denom;
    let whole = PartitionUsage::new(h, p.clone())?;
    let combined: Vec<Rational> = first
        .vector
        .values
        .iter()
        .zip(&second.vector.values)
        .map(|(a, b)| &l1 * a + &l2 * b)
        .collect();
    if combined != whole.vector.values
        || &l1 + &l2 != Rational::one()
        || first.vector.values == second.vector.values
        || !crate::partitions::is_feasible(h, &first.partition)
        || !crate::partitions::is_feasible(h, &second.partition)
    {
        return Err(Error::Consistency(format!(
            "cut-vertex split of a {k}-class partition failed"
        )));
    }
    Ok(Some(ConvexSplit {
        cut_class: j,
        first,
        second,
        lambda: (l1, l2),
    }))
}

/// No vector is entrywise at least another distinct vector.
pub fn is_antichain(vectors: &[Vec<Rational>]) -> bool {
    vectors.iter().enumerate().all(|(i, u)| {
        vectors
            .iter()
            .enumerate()
            .all(|(j, v)| i == j || u == v || !u.iter().zip(v).all(|(a, b)| a >= b))
    })
}

fn sorted(mut v: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    v.sort();
    v.dedup();
    v
}

/// Cross-validation of the blocker against vertex enumeration.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockerCheck {
    pub blocker: Vec<Vec<Rational>>,
    /// Vertices of `Adm(Ω)`.
    pub admissible_vertices: Vec<Vec<Rational>>,
    /// Vertices of the partition polyhedron.
    pub polyhedron_vertices: Vec<Vec<Rational>>,
    pub multitrees: Vec<Vec<Rational>>,
    /// One line per failed check; empty when everything agrees.
    pub failures: Vec<String>,
}

impl BlockerCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that the blocker equals the vertex set of `Adm(Ω)`, that every
/// vertex of the partition polyhedron is a multi-tree, that the polyhedron
/// is `Adm` of all feasible-partition vectors and equals `Dom(Ω)`, and that
/// every non-biconnected feasible partition splits convexly.
pub fn blocker_matches_extremes(h: &Hypergraph, lim: &Limits) -> Result<BlockerCheck> {
    require_connected(h)?;
    let m = h.num_edges();
    let elements = feasible_elements(h, lim)?;
    let omega = multitrees(h, lim)?;
    let mut failures = Vec::new();

    let blocker = sorted(
        elements
            .iter()
            .filter(|b| b.biconnected)
            .map(|b| b.usage.vector.values.clone())
            .collect(),
    );
    let adm = sorted(admissible_vertices(m, &omega)?);
    for w in &blocker {
        if !extreme_in_admissible(&omega, w)? {
            failures.push(format!("blocker vector {w:?} is not extreme in Adm(Ω)"));
        }
    }
    if blocker != adm {
        failures.push(format!("blocker {blocker:?} differs from the vertices of Adm(Ω) {adm:?}"));
    }
    if !is_antichain(&blocker) {
        failures.push("blocker vectors are not an antichain".into());
    }
    for w in &blocker {
        if let Some(g) = omega.iter().find(|g| dot(g, w) < Rational::one()) {
            failures.push(format!("blocker vector {w:?} gives multi-tree {g:?} cost below 1"));
        }
    }

    let poly = sorted(polyhedron_vertices(h, lim)?);
    for x in &poly {
        if !x.iter().all(|v| v.is_integer()) {
            failures.push(format!("polyhedron vertex {x:?} is not integral"));
        } else if !omega.contains(x) {
            failures.push(format!("polyhedron vertex {x:?} is not a multi-tree"));
        }
    }
    // Adm(Φ) for Φ = all feasible-partition vectors is the partition
    // polyhedron; Dom(Ω) equals it when both have the same vertices and
    // every multi-tree lies in it (both recede along the orthant).
    let phi: Vec<Vec<Rational>> = elements.iter().map(|b| b.usage.vector.values.clone()).collect();
    let adm_phi = sorted(admissible_vertices(m, &phi)?);
    if adm_phi != poly {
        failures.push(format!("Adm(Φ) vertices {adm_phi:?} differ from the polyhedron's {poly:?}"));
    }
    for g in &omega {
        if let Some(f) = phi.iter().find(|f| dot(f, g) < Rational::one()) {
            failures.push(format!("multi-tree {g:?} violates partition vector {f:?}"));
        }
    }
    let minimal: Vec<Vec<Rational>> = omega
        .iter()
        .filter(|g| !omega.iter().any(|o| o != *g && o.iter().zip(g.iter()).all(|(a, b)| a <= b)))
        .cloned()
        .collect();
    for x in &poly {
        if !minimal.contains(x) {
            failures.push(format!("polyhedron vertex {x:?} is not a minimal multi-tree"));
        }
    }

    for b in elements.iter().filter(|b| !b.biconnected) {
        if cut_vertex_split(h, &b.usage.partition)?.is_none() {
            failures.push(format!(
                "no cut-vertex split for partition {:?}",
                b.usage.partition.class_names(h)
            ));
        }
    }

    Ok(BlockerCheck {
        blocker,
        admissible_vertices: adm,
        polyhedron_vertices: poly,
        multitrees: omega,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{catalog, ratio};

    fn lim() -> Limits {
        Limits::default()
    }

    fn q(xs: &[(i64, i64)]) -> Vec<Rational> {
        xs.iter().map(|&(a, b)| ratio(a, b)).collect()
    }

    fn vectors(b: &[BlockerElement]) -> Vec<Vec<Rational>> {
        sorted(b.iter().map(|e| e.usage.vector.values.clone()).collect())
    }

    #[test]
    fn blocker_examples() {
        let b = blocker_omega(&catalog::double_triple(), &lim()).unwrap();
        assert_eq!(vectors(&b), [q(&[(1, 2), (1, 2)])]);
        let b = blocker_omega(&catalog::triangle(), &lim()).unwrap();
        assert_eq!(
            vectors(&b),
            [
                q(&[(0, 1), (1, 1), (1, 1)]),
                q(&[(1, 2), (1, 2), (1, 2)]),
                q(&[(1, 1), (0, 1), (1, 1)]),
                q(&[(1, 1), (1, 1), (0, 1)]),
            ]
        );
        let b = blocker_omega(&catalog::single_pair(), &lim()).unwrap();
        assert_eq!(vectors(&b), [q(&[(1, 1)])]);
    }

    #[test]
    fn polyhedron_membership() {
        let h = catalog::double_triple();
        assert!(in_partition_polyhedron(&h, &q(&[(1, 1), (1, 1)]), &lim()).unwrap());
        assert!(!in_partition_polyhedron(&h, &q(&[(0, 1), (0, 1)]), &lim()).unwrap());
        let t = catalog::triangle();
        assert!(in_partition_polyhedron(&t, &q(&[(1, 1), (1, 1), (0, 1)]), &lim()).unwrap());
        assert!(!in_partition_polyhedron(&t, &q(&[(1, 1), (0, 1), (0, 1)]), &lim()).unwrap());
    }

    #[test]
    fn extremality() {
        let h = catalog::double_triple();
        assert!(verify_extreme(&h, &q(&[(1, 2), (1, 2)]), &lim()).unwrap());
        assert!(!verify_extreme(&h, &q(&[(1, 1), (1, 1)]), &lim()).unwrap());
        assert!(verify_extreme(&h, &q(&[(1, 4), (1, 4)]), &lim()).is_err());
        let t = catalog::triangle();
        assert!(verify_extreme(&t, &q(&[(1, 1), (1, 1), (0, 1)]), &lim()).unwrap());
        assert!(is_polyhedron_vertex(&h, &q(&[(2, 1), (0, 1)]), &lim()).unwrap());
        assert!(!is_polyhedron_vertex(&h, &q(&[(1, 1), (1, 1)]), &lim()).unwrap());
    }

    #[test]
    fn path_has_a_cut_vertex_split() {
        let h = catalog::path3();
        let p = Partition::singletons(&h);
        let s = cut_vertex_split(&h, &p).unwrap().unwrap();
        assert_eq!(s.lambda, (ratio(1, 2), ratio(1, 2)));
        assert_eq!(s.cut_class, 1);
        assert!(cut_vertex_split(&catalog::triangle(), &Partition::singletons(&catalog::triangle()))
            .unwrap()
            .is_none());
    }

    #[test]
    fn cross_validation_passes_on_the_catalog() {
        for (name, h) in catalog::all() {
            if !h.is_connected() || h.num_edges() > lim().max_polyhedron_edges {
                continue;
            }
            let c = blocker_matches_extremes(&h, &lim()).unwrap();
            assert!(c.passed(), "{name}: {:?}", c.failures);
        }
        let c = blocker_matches_extremes(&catalog::double_triple(), &lim()).unwrap();
        assert_eq!(c.polyhedron_vertices, [q(&[(0, 1), (2, 1)]), q(&[(2, 1), (0, 1)])]);
    }
}
