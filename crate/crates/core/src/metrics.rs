//! Strength, fractional arboricity, density, partition-connectivity and
//! hyperforest covers.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::hypergraph::Hypergraph;
use crate::matroid::ForestBuilder;
use crate::partitions::{for_each_rgs, is_feasible, CutScanner, Partition};
use crate::{Error, Limits, Rational, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct StrengthReport {
    pub value: Rational,
    /// The first optimal partition in restricted-growth-string order.
    pub witness: Partition,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArboricityReport {
    pub value: Rational,
    /// Vertex positions of the optimal set with the smallest bitmask.
    pub witness: Vec<usize>,
}

/// A partition of the edges into hyperforests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperforestCover {
    pub forests: Vec<Vec<usize>>,
}

/// `θ(F) = |F| / (|V[F]| - 1)`.
pub fn density(h: &Hypergraph, f: &[usize]) -> Result<Rational> {
    if f.is_empty() {
        return Err(Error::Argument("density of an empty edge set".into()));
    }
    let span = h.covered_vertices(f).len();
    Ok(Rational::new(f.len().into(), (span - 1).into()))
}

/// Weights scaled to a common denominator, as machine integers when they fit.
enum ScaledWeights {
    Small(Vec<i128>),
    Big(Vec<Rational>),
}

impl ScaledWeights {
    fn new(weights: &[Rational]) -> Self {
        let lcm = weights
            .iter()
            .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
        let ints: Option<Vec<i128>> = weights
            .iter()
            .map(|w| {
                let x = w.numer() * (&lcm / w.denom());
                x.to_i128().filter(|v| v.abs() < 1 << 60)
            })
            .collect();
        match ints {
            Some(v) => Self::Small(v),
            None => Self::Big(weights.to_vec()),
        }
    }
}

/// Minimum of `σ(δ(P)) / (|P| - 1)` over partitions with at least two classes,
/// optionally only feasible ones. Returns the first optimum in RGS order.
fn min_cut_ratio(
    h: &Hypergraph,
    weights: &[Rational],
    feasible_only: bool,
    lim: &Limits,
) -> Result<StrengthReport> {
    let n = h.num_vertices();
    if n < 2 {
        return Err(Error::Argument("strength needs at least two vertices".into()));
    }
    if weights.len() != h.num_edges() {
        return Err(Error::Argument("weight length differs from |E|".into()));
    }
    lim.check_vertices(n)?;
    let scan = CutScanner::new(h)?;
    let scaled = ScaledWeights::new(weights);
    let mut best_labels: Option<Vec<u8>> = None;
    let mut best_small = (0i128, 1i128);
    let mut best_big = (Rational::zero(), 1usize);
    let mut buf = alloc::vec![0usize; n];
    for_each_rgs(n, |labels, k| {
        if k < 2 {
            return true;
        }
        if feasible_only {
            for (b, &l) in buf.iter_mut().zip(labels) {
                *b = l as usize;
            }
            let p = Partition::from_labels(h, &buf).expect("valid labels");
            if !is_feasible(h, &p) {
                return true;
            }
        }
        let cut = scan.cut_mask(labels);
        let better = match &scaled {
            ScaledWeights::Small(w) => {
                let mut total = 0i128;
                let mut c = cut;
                while c != 0 {
                    total += w[c.trailing_zeros() as usize];
                    c &= c - 1;
                }
                let cand = (total, (k - 1) as i128);
                let better = best_labels.is_none() || cand.0 * best_small.1 < best_small.0 * cand.1;
                if better {
                    best_small = cand;
                }
                better
            }
            ScaledWeights::Big(w) => {
                let mut total = Rational::zero();
                let mut c = cut;
                while c != 0 {
                    total += &w[c.trailing_zeros() as usize];
                    c &= c - 1;
                }
                let value = total / Rational::from_integer((k - 1).into());
                let better = best_labels.is_none() || value < best_big.0;
                if better {
                    best_big = (value, k);
                }
                better
            }
        };
        if better {
            best_labels = Some(labels.to_vec());
        }
        true
    });
    let labels = best_labels.expect("some partition has two classes");
    let labels: Vec<usize> = labels.iter().map(|&l| l as usize).collect();
    let witness = Partition::from_labels(h, &labels)?;
    let value = witness
        .cut()
        .iter()
        .fold(Rational::zero(), |acc, &e| acc + &weights[e])
        / Rational::from_integer((witness.size() - 1).into());
    Ok(StrengthReport { value, witness })
}

/// `S_σ(H) = min σ(δ(P)) / (|P| - 1)` over partitions with `|P| >= 2`;
/// unit weights when `weights` is `None`.
pub fn strength(
    h: &Hypergraph,
    weights: Option<&[Rational]>,
    lim: &Limits,
) -> Result<StrengthReport> {
    if !h.is_connected() {
        return Err(Error::Argument("strength needs a connected hypergraph".into()));
    }
    let ones;
    let w = match weights {
        Some(w) => w,
        None => {
            ones = alloc::vec![Rational::one(); h.num_edges()];
            &ones
        }
    };
    min_cut_ratio(h, w, false, lim)
}

/// Strength with the minimum taken over feasible partitions only.
pub fn feasible_strength(
    h: &Hypergraph,
    weights: Option<&[Rational]>,
    lim: &Limits,
) -> Result<StrengthReport> {
    if !h.is_connected() {
        return Err(Error::Argument("strength needs a connected hypergraph".into()));
    }
    let w = weights
        .map(<[Rational]>::to_vec)
        .unwrap_or_else(|| alloc::vec![Rational::one(); h.num_edges()]);
    min_cut_ratio(h, &w, true, lim)
}

/// `D(H) = max |E[X]| / (|X| - 1)` over vertex sets with `|X| >= 2`.
///
/// When the edge count allows, the same maximum is recomputed over edge
/// subsets as `max θ(F)` and the two must agree.
pub fn arboricity(h: &Hypergraph, lim: &Limits) -> Result<ArboricityReport> {
    let n = h.num_vertices();
    let m = h.num_edges();
    if m == 0 {
        return Err(Error::Argument("arboricity needs at least one edge".into()));
    }
    lim.check_vertices(n)?;
    let masks = h.edge_masks()?;
    let mut best: Option<(Rational, u64)> = None;
    for x in 1u64..(1 << n) {
        let size = x.count_ones();
        if size < 2 {
            continue;
        }
        let inside = masks.iter().filter(|&&e| e & !x == 0).count();
        let value = Rational::new(inside.into(), ((size - 1) as usize).into());
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, x));
        }
    }
    let (value, x) = best.expect("an edge spans two vertices");
    if m <= lim.max_edges {
        let by_edges = arboricity_by_edge_subsets(h, lim)?;
        if by_edges != value {
            return Err(Error::Consistency(format!(
                "arboricity over vertex sets is {value}, over edge sets {by_edges}"
            )));
        }
    }
    Ok(ArboricityReport {
        value,
        witness: (0..n).filter(|&v| x >> v & 1 == 1).collect(),
    })
}

/// `max θ(F)` over nonempty edge subsets.
pub fn arboricity_by_edge_subsets(h: &Hypergraph, lim: &Limits) -> Result<Rational> {
    let m = h.num_edges();
    if m == 0 {
        return Err(Error::Argument("arboricity needs at least one edge".into()));
    }
    lim.check_edges(m)?;
    let masks = h.edge_masks()?;
    let mut best = Rational::zero();
    for f in 1usize..(1 << m) {
        let span = (0..m)
            .filter(|&i| f >> i & 1 == 1)
            .fold(0u64, |acc, i| acc | masks[i]);
        let value = Rational::new(
            (f.count_ones() as usize).into(),
            ((span.count_ones() - 1) as usize).into(),
        );
        if value > best {
            best = value;
        }
    }
    Ok(best)
}

/// `|δ(P)| >= k(|P| - 1)` for every partition with `|P| >= 2`.
pub fn is_k_partition_connected(h: &Hypergraph, k: u64, lim: &Limits) -> Result<bool> {
    if k == 0 {
        return Err(Error::Argument("k must be positive".into()));
    }
    let n = h.num_vertices();
    if n < 2 {
        return Ok(true);
    }
    lim.check_vertices(n)?;
    let scan = CutScanner::new(h)?;
    let mut ok = true;
    for_each_rgs(n, |labels, classes| {
        if classes >= 2 && (scan.cut_mask(labels).count_ones() as u64) < k * (classes as u64 - 1) {
            ok = false;
        }
        ok
    });
    Ok(ok)
}

/// Largest `k` with `k` edge-disjoint hypertrees, i.e. `⌊S(H)⌋`.
pub fn max_disjoint_hypertrees(h: &Hypergraph, lim: &Limits) -> Result<u64> {
    if h.num_vertices() < 2 {
        return Err(Error::Argument("needs at least two vertices".into()));
    }
    let s = strength(h, None, lim)?.value;
    Ok(s.floor().to_integer().to_u64().unwrap_or(u64::MAX))
}

/// Fewest hyperforests partitioning the edges, `⌈D(H)⌉`, with a witness.
///
/// Greedy peeling (take a maximal hyperforest, repeat) is tried first; if it
/// needs more forests than the bound, a bounded backtracking assignment
/// takes over.
pub fn min_hyperforest_cover(h: &Hypergraph, lim: &Limits) -> Result<(u64, HyperforestCover)> {
    let d = arboricity(h, lim)?.value;
    let k = d.ceil().to_integer().to_u64().unwrap_or(u64::MAX) as usize;
    let m = h.num_edges();

    let mut remaining: Vec<usize> = (0..m).collect();
    let mut forests = Vec::new();
    while !remaining.is_empty() {
        let mut fb = ForestBuilder::new(h, lim)?;
        let mut taken = Vec::new();
        remaining.retain(|&e| {
            if fb.try_add(e) {
                taken.push(e);
                false
            } else {
                true
            }
        });
        forests.push(taken);
    }
    if forests.len() == k {
        return Ok((k as u64, HyperforestCover { forests }));
    }

    let mut builders: Vec<ForestBuilder> = (0..k)
        .map(|_| ForestBuilder::new(h, lim))
        .collect::<Result<_>>()?;
    let mut assign = alloc::vec![usize::MAX; m];
    let mut budget = lim.backtrack_budget;
    fn place(
        e: usize,
        m: usize,
        builders: &mut [ForestBuilder],
        assign: &mut [usize],
        budget: &mut u64,
    ) -> Option<bool> {
        if e == m {
            return Some(true);
        }
        let mut tried_empty = false;
        for f in 0..builders.len() {
            // Empty forests are interchangeable; try only one of them.
            if builders[f].size() == 0 {
                if tried_empty {
                    continue;
                }
                tried_empty = true;
            }
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            if builders[f].try_add(e) {
                assign[e] = f;
                if place(e + 1, m, builders, assign, budget)? {
                    return Some(true);
                }
                builders[f].remove(e);
            }
        }
        Some(false)
    }
    match place(0, m, &mut builders, &mut assign, &mut budget) {
        Some(true) => {
            let mut forests = alloc::vec![Vec::new(); k];
            for (e, &f) in assign.iter().enumerate() {
                forests[f].push(e);
            }
            Ok((k as u64, HyperforestCover { forests }))
        }
        Some(false) => Err(Error::Consistency(format!(
            "no partition into {k} hyperforests although the arboricity is {d}"
        ))),
        None => Err(Error::Capacity {
            what: "hyperforest cover search nodes",
            actual: lim.backtrack_budget as usize + 1,
            limit: lim.backtrack_budget as usize,
        }),
    }
}

/// Partition-connectivity degree: the largest `k` with `|δ(P)| >= k(|P|-1)`
/// for all partitions, 0 when not even 1-partition-connected.
pub fn partition_connectivity(h: &Hypergraph, lim: &Limits) -> Result<u64> {
    if !h.is_connected() {
        return Ok(0);
    }
    max_disjoint_hypertrees(h, lim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{catalog, ratio};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn density_examples() {
        let tri = catalog::triangle();
        assert_eq!(density(&tri, &[0, 1, 2]).unwrap(), ratio(3, 2));
        assert_eq!(density(&catalog::single_pair(), &[0]).unwrap(), ratio(1, 1));
        assert_eq!(density(&catalog::double_triple(), &[0, 1]).unwrap(), ratio(1, 1));
        assert!(density(&tri, &[]).is_err());
    }

    #[test]
    fn strength_examples() {
        let h = catalog::double_triple();
        let w = [ratio(1, 1), ratio(2, 1)];
        assert_eq!(strength(&h, Some(&w), &lim()).unwrap().value, ratio(3, 2));
        assert_eq!(strength(&catalog::single_triple(), None, &lim()).unwrap().value, ratio(1, 2));
        let r = strength(&catalog::triple_with_tail(), None, &lim()).unwrap();
        assert_eq!(r.value, ratio(1, 2));
        let huge = [ratio(1, 1 << 40), ratio(3, (1 << 41) + 1)];
        let big = strength(&h, Some(&huge), &lim()).unwrap().value;
        assert_eq!(big, (&huge[0] + &huge[1]) / ratio(2, 1));
    }

    #[test]
    fn arboricity_examples() {
        let r = arboricity(&catalog::triple_with_tail(), &lim()).unwrap();
        assert_eq!((r.value, r.witness), (ratio(1, 1), alloc::vec![2, 3]));
        assert_eq!(arboricity(&catalog::triangle(), &lim()).unwrap().value, ratio(3, 2));
        assert_eq!(arboricity(&catalog::double_triple(), &lim()).unwrap().value, ratio(1, 1));
        assert_eq!(arboricity(&catalog::dense_block(), &lim()).unwrap().value, ratio(5, 3));
        assert_eq!(strength(&catalog::dense_block(), None, &lim()).unwrap().value, ratio(5, 3));
    }

    #[test]
    fn connectivity_examples() {
        assert!(is_k_partition_connected(&catalog::double_triple(), 1, &lim()).unwrap());
        assert!(!is_k_partition_connected(&catalog::triple_with_tail(), 1, &lim()).unwrap());
        assert!(!is_k_partition_connected(&catalog::triangle(), 2, &lim()).unwrap());
        assert_eq!(max_disjoint_hypertrees(&catalog::triangle(), &lim()).unwrap(), 1);
        assert_eq!(max_disjoint_hypertrees(&catalog::double_triple(), &lim()).unwrap(), 1);
        assert_eq!(max_disjoint_hypertrees(&catalog::triple_with_tail(), &lim()).unwrap(), 0);
    }

    #[test]
    fn cover_examples() {
        let (k, cover) = min_hyperforest_cover(&catalog::triangle(), &lim()).unwrap();
        assert_eq!((k, cover.forests.len()), (2, 2));
        assert_eq!(min_hyperforest_cover(&catalog::single_pair(), &lim()).unwrap().0, 1);
        assert_eq!(min_hyperforest_cover(&catalog::double_triple(), &lim()).unwrap().0, 1);
        assert_eq!(min_hyperforest_cover(&catalog::three_level(), &lim()).unwrap().0, 2);
    }
}
