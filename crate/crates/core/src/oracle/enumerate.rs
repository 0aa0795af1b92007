use alloc::vec::Vec;

use crate::hypergraph::Hypergraph;
use crate::matroid::{is_hyperforest, is_hypertree};
use crate::modulus::ExplicitFamily;
use crate::{Error, Limits, Rational, Result};

fn check_caps(h: &Hypergraph, lim: &Limits) -> Result<()> {
    lim.check_vertices(h.num_vertices())?;
    lim.check_edges(h.num_edges())?;
    if h.num_vertices() < 2 {
        return Err(Error::Argument("hypertree families need at least two vertices".into()));
    }
    Ok(())
}

/// Every edge set of size `|V| - 1` that is a hypertree, in lexicographic
/// order of position lists.
pub fn enumerate_hypertrees(h: &Hypergraph, lim: &Limits) -> Result<ExplicitFamily> {
    check_caps(h, lim)?;
    let m = h.num_edges();
    let k = h.num_vertices() - 1;
    let mut members = Vec::new();
    if k <= m {
        let mut pick: Vec<usize> = (0..k).collect();
        loop {
            let mut x = alloc::vec![0u32; m];
            for &i in &pick {
                x[i] = 1;
            }
            if is_hypertree(h, &x, lim)? {
                members.push(x.iter().map(|&c| Rational::from_integer(c.into())).collect());
            }
            // Next k-combination.
            let Some(i) = (0..k).rev().find(|&i| pick[i] < m - k + i) else {
                break;
            };
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    ExplicitFamily::new(h.edge_ids(), members)
}

/// Every edge multiset with multiplicities at most `cap` forming a
/// hypertree. An edge `e` can appear at most `|e| - 1` times in any
/// hyperforest, which bounds the search.
pub fn enumerate_multitrees(h: &Hypergraph, cap: u32, lim: &Limits) -> Result<ExplicitFamily> {
    check_caps(h, lim)?;
    let m = h.num_edges();
    let total = h.num_vertices() as u32 - 1;
    let bound: Vec<u32> = h
        .edges()
        .iter()
        .map(|e| cap.min(e.members.len() as u32 - 1))
        .collect();
    let mut members = Vec::new();
    let mut x = alloc::vec![0u32; m];
    fn walk(
        i: usize,
        left: u32,
        h: &Hypergraph,
        bound: &[u32],
        x: &mut [u32],
        lim: &Limits,
        out: &mut Vec<Vec<Rational>>,
    ) -> Result<()> {
        if i == x.len() {
            if left == 0 && is_hypertree(h, x, lim)? {
                out.push(x.iter().map(|&c| Rational::from_integer(c.into())).collect());
            }
            return Ok(());
        }
        let room: u32 = bound[i..].iter().sum();
        if room < left {
            return Ok(());
        }
        for c in (0..=bound[i].min(left)).rev() {
            x[i] = c;
            if c > 0 && !is_hyperforest(h, x, lim)? {
                continue;
            }
            walk(i + 1, left - c, h, bound, x, lim, out)?;
        }
        x[i] = 0;
        Ok(())
    }
    walk(0, total, h, &bound, &mut x, lim, &mut members)?;
    ExplicitFamily::new(h.edge_ids(), members)
}

/// Size of a maximal hyperforest inside `f`, grown edge by edge with the
/// definitional subset test.
pub fn greedy_hyperforest_size(h: &Hypergraph, f: &[usize], lim: &Limits) -> Result<usize> {
    let mut x = alloc::vec![0u32; h.num_edges()];
    let mut size = 0;
    for &e in f {
        x[e] += 1;
        if is_hyperforest(h, &x, lim)? {
            size += 1;
        } else {
            x[e] -= 1;
        }
    }
    Ok(size)
}

/// `min θ(H/F)` over edge sets `F` whose contraction keeps at least two
/// vertices; equals the strength of a connected hypergraph.
pub fn strength_by_contractions(h: &Hypergraph, lim: &Limits) -> Result<Rational> {
    let m = h.num_edges();
    lim.check_edges(m)?;
    let mut best: Option<Rational> = None;
    for mask in 0usize..(1 << m) {
        let f: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
        let c = h.contract(&f);
        if c.num_vertices() < 2 {
            continue;
        }
        let value = Rational::new(c.num_edges().into(), (c.num_vertices() - 1).into());
        if best.as_ref().is_none_or(|b| value < *b) {
            best = Some(value);
        }
    }
    best.ok_or_else(|| Error::Argument("needs at least two vertices".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{catalog, ratio};

    fn lim() -> Limits {
        Limits::default()
    }

    fn ints(rows: &[Vec<Rational>]) -> Vec<Vec<i64>> {
        use num_traits::ToPrimitive;
        rows.iter()
            .map(|r| r.iter().map(|q| q.to_integer().to_i64().unwrap()).collect())
            .collect()
    }

    #[test]
    fn hypertrees() {
        assert_eq!(enumerate_hypertrees(&catalog::triangle(), &lim()).unwrap().len(), 3);
        let f = enumerate_hypertrees(&catalog::double_triple(), &lim()).unwrap();
        assert_eq!(ints(f.members()), [[1, 1]]);
        assert!(enumerate_hypertrees(&catalog::triple_with_tail(), &lim()).unwrap().is_empty());
    }

    #[test]
    fn multitrees() {
        let f = enumerate_multitrees(&catalog::double_triple(), 3, &lim()).unwrap();
        let mut got = ints(f.members());
        got.sort();
        assert_eq!(got, [[0, 2], [1, 1], [2, 0]]);
        let f = enumerate_multitrees(&catalog::triple_with_tail(), 4, &lim()).unwrap();
        assert_eq!(ints(f.members()), [[2, 1]]);
        let f = enumerate_multitrees(&catalog::single_pair(), 2, &lim()).unwrap();
        assert_eq!(ints(f.members()), [[1]]);
    }

    #[test]
    fn contraction_formula_for_strength() {
        assert_eq!(strength_by_contractions(&catalog::triangle(), &lim()).unwrap(), ratio(3, 2));
        assert_eq!(
            strength_by_contractions(&catalog::triple_with_tail(), &lim()).unwrap(),
            ratio(1, 2)
        );
    }
}
