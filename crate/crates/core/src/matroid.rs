//! The hypergraphic matroid: hyperforests are the independent sets.
//!
//! Independence is the subset condition `|F[X]| <= |X| - 1` for every
//! nonempty `X`, checked against a table of edge counts over all vertex
//! subsets. The rank also has the partition formula
//! `r(F) = min_P |V| - |P| + |δ_F(P)|`, implemented separately so the two can
//! be compared.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_traits::Zero;

use crate::dsu::Dsu;
use crate::hypergraph::{EdgeId, Hypergraph};
use crate::partitions::{for_each_rgs, CutScanner};
use crate::{Error, Limits, Rational, Result};

/// Incremental hyperforest builder over the vertex subsets of a hypergraph.
///
/// `count[X]` is the number of chosen edges (with multiplicity) inside `X`;
/// an edge `e` can join when every `X ⊇ e` still has room, i.e.
/// `count[X] <= |X| - 2`.
#[derive(Debug, Clone)]
pub struct ForestBuilder {
    n: usize,
    masks: Vec<u64>,
    count: Vec<u16>,
    chosen: Vec<u32>,
    size: usize,
}

impl ForestBuilder {
    pub fn new(h: &Hypergraph, lim: &Limits) -> Result<Self> {
        let n = h.num_vertices();
        lim.check_vertices(n)?;
        Ok(Self {
            n,
            masks: h.edge_masks()?,
            count: alloc::vec![0; 1 << n],
            chosen: alloc::vec![0; h.num_edges()],
            size: 0,
        })
    }

    fn supersets(&self, mask: u64) -> impl Iterator<Item = u64> {
        let rest = ((1u64 << self.n) - 1) & !mask;
        let mut sub = 0u64;
        let mut done = false;
        core::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = mask | sub;
            sub = sub.wrapping_sub(rest) & rest;
            done = sub == 0;
            Some(out)
        })
    }

    pub fn can_add(&self, e: usize) -> bool {
        self.supersets(self.masks[e])
            .all(|x| (self.count[x as usize] as u32) + 2 <= x.count_ones())
    }

    /// Adds `e` if the result stays a hyperforest.
    pub fn try_add(&mut self, e: usize) -> bool {
        if !self.can_add(e) {
            return false;
        }
        let mask = self.masks[e];
        let rest = ((1u64 << self.n) - 1) & !mask;
        let mut sub = 0u64;
        loop {
            self.count[(mask | sub) as usize] += 1;
            sub = sub.wrapping_sub(rest) & rest;
            if sub == 0 {
                break;
            }
        }
        self.chosen[e] += 1;
        self.size += 1;
        true
    }

    /// Removes one copy of `e`, which must have been added.
    pub fn remove(&mut self, e: usize) {
        assert!(self.chosen[e] > 0, "edge not in the forest");
        let mask = self.masks[e];
        let rest = ((1u64 << self.n) - 1) & !mask;
        let mut sub = 0u64;
        loop {
            self.count[(mask | sub) as usize] -= 1;
            sub = sub.wrapping_sub(rest) & rest;
            if sub == 0 {
                break;
            }
        }
        self.chosen[e] -= 1;
        self.size -= 1;
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Multiplicity of every edge in the current forest.
    pub fn multiset(&self) -> &[u32] {
        &self.chosen
    }
}

/// Direct check of `|A[X]| <= |X| - 1` over every nonempty `X ⊆ V[A]`.
pub fn is_hyperforest(h: &Hypergraph, multiplicity: &[u32], lim: &Limits) -> Result<bool> {
    if multiplicity.len() != h.num_edges() {
        return Err(Error::Argument("multiset length differs from |E|".into()));
    }
    let support: Vec<usize> = (0..h.num_edges()).filter(|&i| multiplicity[i] > 0).collect();
    let covered = h.covered_vertices(&support);
    lim.check_vertices(covered.len())?;
    // Re-index the covered vertices to 0..k.
    let mut local = alloc::vec![usize::MAX; h.num_vertices()];
    for (i, &v) in covered.iter().enumerate() {
        local[v] = i;
    }
    let edges: Vec<(u64, u32)> = support
        .iter()
        .map(|&i| {
            let m = h.edge(i).members.iter().fold(0u64, |m, &v| m | 1 << local[v]);
            (m, multiplicity[i])
        })
        .collect();
    let k = covered.len();
    for x in 1u64..(1u64 << k) {
        let inside: u64 = edges
            .iter()
            .filter(|(m, _)| m & !x == 0)
            .map(|&(_, c)| c as u64)
            .sum();
        if inside + 1 > x.count_ones() as u64 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn indicator(h: &Hypergraph, f: &[usize]) -> Result<Vec<u32>> {
    let mut x = alloc::vec![0u32; h.num_edges()];
    for &i in f {
        if i >= x.len() {
            return Err(Error::Argument(format!("edge position {i} out of range")));
        }
        if x[i] == 1 {
            return Err(Error::Argument(format!("edge position {i} listed twice")));
        }
        x[i] = 1;
    }
    Ok(x)
}

pub fn is_independent(h: &Hypergraph, f: &[usize], lim: &Limits) -> Result<bool> {
    is_hyperforest(h, &indicator(h, f)?, lim)
}

/// A hyperforest of `|V| - 1` edges; with multiplicities this is membership
/// in the multi-tree family.
pub fn is_hypertree(h: &Hypergraph, multiplicity: &[u32], lim: &Limits) -> Result<bool> {
    let total: u64 = multiplicity.iter().map(|&c| c as u64).sum();
    if total != h.num_vertices() as u64 - 1 {
        return Ok(false);
    }
    let support: Vec<usize> = (0..h.num_edges()).filter(|&i| multiplicity[i] > 0).collect();
    if h.num_vertices() > 1 && h.covered_vertices(&support).len() != h.num_vertices() {
        return Ok(false);
    }
    is_hyperforest(h, multiplicity, lim)
}

/// Rank by the partition formula `min_P |V| - |P| + |δ_F(P)|`.
pub fn rank(h: &Hypergraph, f: &[usize], lim: &Limits) -> Result<usize> {
    let n = h.num_vertices();
    lim.check_vertices(n)?;
    let f_mask = indicator(h, f)?
        .iter()
        .enumerate()
        .fold(0u128, |m, (i, &x)| if x > 0 { m | 1 << i } else { m });
    let scan = CutScanner::new(h)?;
    let mut best = usize::MAX;
    for_each_rgs(n, |labels, k| {
        let cut = (scan.cut_mask(labels) & f_mask).count_ones() as usize;
        best = best.min(n - k + cut);
        true
    });
    Ok(best)
}

/// Size of a maximal hyperforest inside `f` built greedily.
pub fn greedy_rank(h: &Hypergraph, f: &[usize], lim: &Limits) -> Result<usize> {
    let mut fb = ForestBuilder::new(h, lim)?;
    for &e in f {
        fb.try_add(e);
    }
    Ok(fb.size())
}

/// Greedy rank of every edge subset, indexed by edge bitmask.
pub fn all_subset_ranks(h: &Hypergraph, lim: &Limits) -> Result<Vec<u8>> {
    let m = h.num_edges();
    lim.check_edges(m)?;
    let mut fb = ForestBuilder::new(h, lim)?;
    let mut ranks = alloc::vec![0u8; 1 << m];
    fn walk(i: usize, m: usize, mask: usize, fb: &mut ForestBuilder, ranks: &mut [u8]) {
        if i == m {
            ranks[mask] = fb.size() as u8;
            return;
        }
        walk(i + 1, m, mask, fb, ranks);
        let added = fb.try_add(i);
        walk(i + 1, m, mask | 1 << i, fb, ranks);
        if added {
            fb.remove(i);
        }
    }
    walk(0, m, 0, &mut fb, &mut ranks);
    Ok(ranks)
}

/// Minimum-cost maximal hyperforest of `M(H^cap)`.
///
/// Edges are scanned in ascending `(cost, edge id)` order and each is taken
/// as many times as independence and the cap allow.
pub fn greedy_min_basis<T: PartialOrd>(
    h: &Hypergraph,
    cost: &[T],
    cap: u32,
    lim: &Limits,
) -> Result<Vec<u32>> {
    if cost.len() != h.num_edges() {
        return Err(Error::Argument("cost length differs from |E|".into()));
    }
    if cap == 0 {
        return Err(Error::Argument("multiplicity cap must be positive".into()));
    }
    let mut order: Vec<usize> = (0..h.num_edges()).collect();
    order.sort_by(|&a, &b| {
        cost[a]
            .partial_cmp(&cost[b])
            .unwrap_or(Ordering::Equal)
            .then_with(|| h.edge(a).id.cmp(&h.edge(b).id))
    });
    let mut fb = ForestBuilder::new(h, lim)?;
    let target = h.num_vertices() - 1;
    for e in order {
        if fb.size() == target {
            break;
        }
        while fb.multiset()[e] < cap && fb.try_add(e) {}
    }
    Ok(fb.multiset().to_vec())
}

/// Like [`greedy_min_basis`] but fails unless the result is a hypertree.
pub fn min_cost_hypertree<T: PartialOrd>(
    h: &Hypergraph,
    cost: &[T],
    cap: u32,
    lim: &Limits,
) -> Result<Vec<u32>> {
    let basis = greedy_min_basis(h, cost, cap, lim)?;
    let size: u32 = basis.iter().sum();
    if size as usize != h.num_vertices() - 1 {
        return Err(Error::Infeasible(format!(
            "no hypertree with edge multiplicity at most {cap}: the largest hyperforest has \
             {size} edges, a hypertree needs {}",
            h.num_vertices() - 1
        )));
    }
    Ok(basis)
}

/// True when adding `e` to `f` does not raise the rank.
pub fn closure_contains(h: &Hypergraph, f: &[usize], e: usize, lim: &Limits) -> Result<bool> {
    if f.contains(&e) {
        return Err(Error::Argument("edge already in the set".into()));
    }
    let mut with = f.to_vec();
    with.push(e);
    Ok(rank(h, &with, lim)? == rank(h, f, lim)?)
}

/// A choice of two vertices per edge such that the chosen pairs form a
/// forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestRepresentation {
    pub pairs: Vec<(EdgeId, usize, usize)>,
}

/// Searches for a forest representation of `f` by backtracking over pair
/// choices. `None` when `f` is not a hyperforest.
pub fn forest_representation(
    h: &Hypergraph,
    f: &[usize],
    lim: &Limits,
) -> Result<Option<ForestRepresentation>> {
    indicator(h, f)?;
    let mut order = f.to_vec();
    // Small edges first: fewer choices near the root of the search.
    order.sort_by_key(|&i| h.edge(i).members.len());
    let mut dsu = Dsu::new(h.num_vertices());
    let mut chosen: Vec<(usize, usize)> = Vec::with_capacity(order.len());
    let mut budget = lim.backtrack_budget;

    fn search(
        h: &Hypergraph,
        order: &[usize],
        dsu: &mut Dsu,
        chosen: &mut Vec<(usize, usize)>,
        budget: &mut u64,
    ) -> Result<bool> {
        let depth = chosen.len();
        if depth == order.len() {
            return Ok(true);
        }
        let m = &h.edge(order[depth]).members;
        for a in 0..m.len() {
            for b in a + 1..m.len() {
                if *budget == 0 {
                    return Err(Error::Capacity {
                        what: "forest representation search nodes",
                        actual: usize::MAX,
                        limit: 0,
                    });
                }
                *budget -= 1;
                if dsu.union(m[a], m[b]) {
                    chosen.push((m[a], m[b]));
                    if search(h, order, dsu, chosen, budget)? {
                        return Ok(true);
                    }
                    chosen.pop();
                    dsu.undo();
                }
            }
        }
        Ok(false)
    }

    match search(h, &order, &mut dsu, &mut chosen, &mut budget) {
        Ok(true) => Ok(Some(ForestRepresentation {
            pairs: order
                .iter()
                .zip(chosen)
                .map(|(&e, (u, v))| (h.edge(e).id.clone(), u, v))
                .collect(),
        })),
        Ok(false) => Ok(None),
        Err(Error::Capacity { what, .. }) => Err(Error::Capacity {
            what,
            actual: lim.backtrack_budget as usize + 1,
            limit: lim.backtrack_budget as usize,
        }),
        Err(e) => Err(e),
    }
}

/// Compares `(value, |X|, X)` candidates: smaller value first, then larger
/// set, then lexicographically smaller position list.
fn better_min(a: (&Rational, &[usize]), b: (&Rational, &[usize])) -> bool {
    match a.0.cmp(b.0) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => match a.1.len().cmp(&b.1.len()) {
            Ordering::Greater => true,
            Ordering::Less => false,
            Ordering::Equal => a.1 < b.1,
        },
    }
}

fn positions(mask: usize, m: usize) -> Vec<usize> {
    (0..m).filter(|&i| mask >> i & 1 == 1).collect()
}

/// `s_σ(M) = min σ(X) / (r(E) - r(E∖X))` over `X` with `r(E∖X) < r(E)`.
/// The witness is the largest optimal set (ties: smallest position list).
pub fn matroid_strength(
    h: &Hypergraph,
    weights: &[Rational],
    lim: &Limits,
) -> Result<(Rational, Vec<usize>)> {
    let m = h.num_edges();
    if weights.len() != m {
        return Err(Error::Argument("weight length differs from |E|".into()));
    }
    let ranks = all_subset_ranks(h, lim)?;
    let full = (1usize << m) - 1;
    let r_full = ranks[full];
    if r_full == 0 {
        return Err(Error::Argument("matroid strength needs rank at least 1".into()));
    }
    let mut best: Option<(Rational, Vec<usize>)> = None;
    for x in 1..=full {
        let drop = r_full - ranks[full & !x];
        if drop == 0 {
            continue;
        }
        let xs = positions(x, m);
        let sigma = xs.iter().fold(Rational::zero(), |acc, &i| acc + &weights[i]);
        let value = sigma / Rational::from_integer(drop.into());
        if best
            .as_ref()
            .is_none_or(|(bv, bx)| better_min((&value, &xs), (bv, bx)))
        {
            best = Some((value, xs));
        }
    }
    Ok(best.expect("the full set lowers the rank"))
}

/// `D(M) = max |X| / r(X)` over `X` with positive rank. The witness is the
/// largest optimal set.
pub fn matroid_arboricity(h: &Hypergraph, lim: &Limits) -> Result<(Rational, Vec<usize>)> {
    let m = h.num_edges();
    if m == 0 {
        return Err(Error::Argument("matroid arboricity needs an edge".into()));
    }
    let ranks = all_subset_ranks(h, lim)?;
    let mut best: Option<(Rational, Vec<usize>)> = None;
    for x in 1..(1usize << m) {
        let r = ranks[x];
        if r == 0 {
            continue;
        }
        let xs = positions(x, m);
        let value = Rational::new(xs.len().into(), (r as usize).into());
        // Maximize: negate for the shared comparison.
        let neg = -value.clone();
        if best
            .as_ref()
            .is_none_or(|(bv, bx)| better_min((&neg, &xs), (&-bv.clone(), bx)))
        {
            best = Some((value, xs));
        }
    }
    Ok(best.expect("every edge has rank 1"))
}

/// Vertex names of a representation pair, for display.
pub fn pair_names(h: &Hypergraph, pair: &(EdgeId, usize, usize)) -> (String, String) {
    (h.vertices()[pair.1].clone(), h.vertices()[pair.2].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{catalog, ratio};

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn hyperforest_examples() {
        let h = catalog::double_triple();
        assert!(is_hyperforest(&h, &[1, 1], &lim()).unwrap());
        let t = catalog::triple_with_tail();
        assert!(!is_hyperforest(&t, &[1, 2], &lim()).unwrap());
        assert!(is_hyperforest(&t, &[0, 0], &lim()).unwrap());
        assert!(!is_independent(&catalog::triangle(), &[0, 1, 2], &lim()).unwrap());
        assert!(is_independent(&catalog::triangle(), &[1], &lim()).unwrap());
    }

    #[test]
    fn hypertree_examples() {
        let h = catalog::double_triple();
        assert!(is_hypertree(&h, &[2, 0], &lim()).unwrap());
        let t = catalog::triple_with_tail();
        assert!(is_hypertree(&t, &[2, 1], &lim()).unwrap());
        assert!(!is_hypertree(&t, &[1, 1], &lim()).unwrap());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&catalog::single_triple(), &[0], &lim()).unwrap(), 1);
        assert_eq!(rank(&catalog::triangle(), &[], &lim()).unwrap(), 0);
        assert_eq!(rank(&catalog::triple_with_tail(), &[0, 1], &lim()).unwrap(), 2);
        let ranks = all_subset_ranks(&catalog::triangle(), &lim()).unwrap();
        assert_eq!(ranks, [0, 1, 1, 2, 1, 2, 2, 2]);
    }

    #[test]
    fn greedy_examples() {
        let tri = catalog::triangle();
        let b = greedy_min_basis(&tri, &[1, 2, 3], 1, &lim()).unwrap();
        assert_eq!(b, [1, 1, 0]);
        let h = catalog::double_triple();
        assert_eq!(greedy_min_basis(&h, &[1, 2], 3, &lim()).unwrap(), [2, 0]);
        let t = catalog::triple_with_tail();
        assert_eq!(greedy_min_basis(&t, &[1, 1], 4, &lim()).unwrap(), [2, 1]);
        assert!(matches!(
            min_cost_hypertree(&t, &[1, 1], 1, &lim()),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn closure_examples() {
        let tri = catalog::triangle();
        assert!(closure_contains(&tri, &[0, 1], 2, &lim()).unwrap());
        assert!(!closure_contains(&tri, &[], 2, &lim()).unwrap());
        let t = catalog::triple_with_tail();
        assert!(!closure_contains(&t, &[0], 1, &lim()).unwrap());
    }

    #[test]
    fn representation_examples() {
        let h = catalog::double_triple();
        let rep = forest_representation(&h, &[0, 1], &lim()).unwrap().unwrap();
        assert_eq!(rep.pairs.len(), 2);
        assert!(forest_representation(&catalog::triangle(), &[0, 1, 2], &lim())
            .unwrap()
            .is_none());
        let one = forest_representation(&catalog::single_triple(), &[0], &lim())
            .unwrap()
            .unwrap();
        assert_eq!(one.pairs, [("e1".into(), 0, 1)]);
    }

    #[test]
    fn strength_and_arboricity_of_the_matroid() {
        let ones = |m: usize| alloc::vec![ratio(1, 1); m];
        let (s, _) = matroid_strength(&catalog::single_triple(), &ones(1), &lim()).unwrap();
        assert_eq!(s, ratio(1, 1));
        let (s, x) = matroid_strength(&catalog::triangle(), &ones(3), &lim()).unwrap();
        assert_eq!((s, x), (ratio(3, 2), alloc::vec![0, 1, 2]));
        let (s, _) = matroid_strength(&catalog::double_triple(), &ones(2), &lim()).unwrap();
        assert_eq!(s, ratio(1, 1));
        assert_eq!(matroid_arboricity(&catalog::triangle(), &lim()).unwrap().0, ratio(3, 2));
        assert_eq!(matroid_arboricity(&catalog::single_pair(), &lim()).unwrap().0, ratio(1, 1));
        assert_eq!(matroid_arboricity(&catalog::double_triple(), &lim()).unwrap().0, ratio(1, 1));
    }
}
