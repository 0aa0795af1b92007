//! Quotients of a family by groups of symmetric edges.
//!
//! When the edges of each group are interchangeable for the family (as the
//! parallel copies in `H^t` are for `Γ(H^t)`), the modulus problem can be
//! solved on one element per group: usage is summed over the group and the
//! weight of a group element is `σ(e) |E_i|`. The optimal dual density of the
//! quotient is then `|E_i| η*(e)`.

use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::hypergraph::EdgeId;
use crate::modulus::{FamilyKind, ObjectFamily};
use crate::{Error, Limits, Rational, Result};

pub struct QuotientFamily<'a> {
    inner: &'a dyn ObjectFamily,
    groups: Vec<Vec<usize>>,
    group_of: Vec<usize>,
    ids: Vec<EdgeId>,
}

impl<'a> QuotientFamily<'a> {
    /// `groups[i]` lists the inner ground positions merged into quotient
    /// element `ids[i]`; the groups must partition the inner ground set.
    pub fn new(inner: &'a dyn ObjectFamily, groups: Vec<Vec<usize>>, ids: Vec<EdgeId>) -> Result<Self> {
        let n = inner.ground().len();
        if ids.len() != groups.len() {
            return Err(Error::Argument("one id per group is required".into()));
        }
        let mut group_of = alloc::vec![usize::MAX; n];
        for (g, members) in groups.iter().enumerate() {
            if members.is_empty() {
                return Err(Error::Argument(format!("group {} is empty", ids[g])));
            }
            for &e in members {
                if e >= n || group_of[e] != usize::MAX {
                    return Err(Error::Argument(format!(
                        "ground position {e} is out of range or in two groups"
                    )));
                }
                group_of[e] = g;
            }
        }
        if group_of.contains(&usize::MAX) {
            return Err(Error::Argument("groups do not cover the ground set".into()));
        }
        Ok(Self {
            inner,
            groups,
            group_of,
            ids,
        })
    }

    fn fold<T: Clone + core::ops::AddAssign>(&self, big: &[T], zero: T) -> Vec<T> {
        let mut out = alloc::vec![zero; self.groups.len()];
        for (e, x) in big.iter().enumerate() {
            out[self.group_of[e]] += x.clone();
        }
        out
    }

    fn lift<T: Clone>(&self, small: &[T]) -> Vec<T> {
        self.group_of.iter().map(|&g| small[g].clone()).collect()
    }
}

impl ObjectFamily for QuotientFamily<'_> {
    fn ground(&self) -> &[EdgeId] {
        &self.ids
    }

    fn kind(&self) -> FamilyKind {
        FamilyKind::Quotient
    }

    fn minimize(&self, cost: &[f64]) -> Result<Vec<f64>> {
        let v = self.inner.minimize(&self.lift(cost))?;
        Ok(self.fold(&v, 0.0))
    }

    fn minimize_exact(&self, cost: &[Rational]) -> Result<Vec<Rational>> {
        let v = self.inner.minimize_exact(&self.lift(cost))?;
        Ok(self.fold(&v, Rational::zero()))
    }

    fn members(&self, lim: &Limits) -> Result<Vec<Vec<Rational>>> {
        let mut out: Vec<Vec<Rational>> = Vec::new();
        for m in self.inner.members(lim)? {
            let q = self.fold(&m, Rational::zero());
            if !out.contains(&q) {
                out.push(q);
            }
        }
        Ok(out)
    }
}

/// Quotient weights `σ(e) |E_i|` from one representative weight per group.
pub fn quotient_weights<T>(representative: &[T], groups: &[Vec<usize>]) -> Vec<T>
where
    T: Clone + core::ops::Mul<Output = T> + From<u32>,
{
    representative
        .iter()
        .zip(groups)
        .map(|(w, g)| w.clone() * T::from(g.len() as u32))
        .collect()
}

/// Sums a density over each group; for a symmetric optimum this is
/// `|E_i| η*(e)`.
pub fn quotient_eta(big: &[f64], groups: &[Vec<usize>]) -> Vec<f64> {
    groups
        .iter()
        .map(|g| g.iter().map(|&e| big[e]).sum())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::modulus::{mod2_mnp, HypertreeFamily, MultitreeFamily, SolverOptions};

    #[test]
    fn parallel_copies_reproduce_the_multitree_modulus() {
        let lim = Limits::default();
        for h in [catalog::double_triple(), catalog::triangle(), catalog::triple_with_tail()] {
            let t = h.num_vertices();
            let big = h.parallelize(t).unwrap();
            let gamma = HypertreeFamily::new(&big.hypergraph, &lim).unwrap();
            let opts = SolverOptions::default();
            let big_res = mod2_mnp(&gamma, &alloc::vec![1.0; big.hypergraph.num_edges()], &opts).unwrap();
            let omega = MultitreeFamily::new(&h, &lim).unwrap();
            let small = mod2_mnp(&omega, &alloc::vec![1.0; h.num_edges()], &opts).unwrap();
            assert!((big_res.value_f64() / t as f64 - small.value_f64()).abs() < 1e-8);

            let q = QuotientFamily::new(&gamma, big.groups.clone(), h.edge_ids()).unwrap();
            let qw = quotient_weights(&alloc::vec![1.0; h.num_edges()], &big.groups);
            let qres = mod2_mnp(&q, &qw, &opts).unwrap();
            assert!((qres.value_f64() - big_res.value_f64()).abs() < 1e-8);
            let folded = quotient_eta(&big_res.eta_star.unwrap().values, &big.groups);
            for (a, b) in folded.iter().zip(&qres.eta_star.unwrap().values) {
                assert!((a - b).abs() < 1e-7);
            }
        }
    }

    #[test]
    fn trivial_groups_are_the_identity() {
        let lim = Limits::default();
        let h = catalog::triangle();
        let g = HypertreeFamily::new(&h, &lim).unwrap();
        let q = QuotientFamily::new(&g, alloc::vec![alloc::vec![0], alloc::vec![1], alloc::vec![2]], h.edge_ids())
            .unwrap();
        assert_eq!(q.members(&lim).unwrap(), g.members(&lim).unwrap());
        assert!(QuotientFamily::new(&g, alloc::vec![alloc::vec![0, 1]], alloc::vec!["x".into()]).is_err());
    }
}
