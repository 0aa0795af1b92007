//! p-modulus of hypertree-like families for `p ∈ {1, 2}`.
//!
//! A family is accessed through a linear-minimization oracle (cheapest member
//! for a given edge cost) and, for small inputs, an exhaustive member list.
//! 1-modulus is read off strength quantities and backed by an exact LP when
//! the edge count allows. 2-modulus is computed in its dual form: the
//! minimum of `Σ η(e)² / σ(e)` over the convex hull of the usage vectors,
//! found with Wolfe's minimum-norm-point method, and
//! `Mod_{2,σ} = 1 / min`.

mod symmetry;
mod wolfe;

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::hypergraph::{EdgeId, EdgeVector, Hypergraph};
use crate::matroid::{greedy_min_basis, matroid_strength, min_cost_hypertree};
use crate::metrics::strength;
use crate::oracle;
use crate::{to_f64, Error, Limits, Rational, Result};

pub use symmetry::{quotient_eta, quotient_weights, QuotientFamily};
pub use wolfe::{min_norm_point, MinNormPoint, SolverOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// Hypertrees `Γ(H)`: edge sets, multiplicity at most one.
    Hypertree,
    /// Multi-trees `Ω(H)`: edge multisets forming a hypertree.
    Multitree,
    Explicit,
    Quotient,
}

/// A finite family of objects, each with a nonnegative usage vector over a
/// common ground set of edges.
pub trait ObjectFamily {
    fn ground(&self) -> &[EdgeId];
    fn kind(&self) -> FamilyKind;
    /// A member minimizing `cost · usage`.
    fn minimize(&self, cost: &[f64]) -> Result<Vec<f64>>;
    /// Exact version of [`ObjectFamily::minimize`].
    fn minimize_exact(&self, cost: &[Rational]) -> Result<Vec<Rational>>;
    /// Every member's usage vector, deduplicated.
    fn members(&self, lim: &Limits) -> Result<Vec<Vec<Rational>>>;
}

fn ints_to_f64(x: &[u32]) -> Vec<f64> {
    x.iter().map(|&c| c as f64).collect()
}

fn ints_to_rational(x: &[u32]) -> Vec<Rational> {
    x.iter().map(|&c| Rational::from_integer(c.into())).collect()
}

/// `Γ(H)`. The minimization oracle is the greedy minimum-cost hypertree.
#[derive(Debug, Clone)]
pub struct HypertreeFamily {
    h: Hypergraph,
    ids: Vec<EdgeId>,
    lim: Limits,
}

impl HypertreeFamily {
    /// Fails when `h` has no hypertree, i.e. is not partition-connected.
    pub fn new(h: &Hypergraph, lim: &Limits) -> Result<Self> {
        let zeros = alloc::vec![0u8; h.num_edges()];
        let basis = greedy_min_basis(h, &zeros, 1, lim)?;
        let size: u32 = basis.iter().sum();
        if size as usize + 1 != h.num_vertices() {
            return Err(Error::Infeasible(format!(
                "the hypertree family is empty: a hypergraph contains a hypertree only if \
                 |δ(P)| >= |P| - 1 for every vertex partition P, and here the largest \
                 hyperforest has {size} edges while {} are needed",
                h.num_vertices() - 1
            )));
        }
        Ok(Self {
            h: h.clone(),
            ids: h.edge_ids(),
            lim: *lim,
        })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.h
    }
}

impl ObjectFamily for HypertreeFamily {
    fn ground(&self) -> &[EdgeId] {
        &self.ids
    }

    fn kind(&self) -> FamilyKind {
        FamilyKind::Hypertree
    }

    fn minimize(&self, cost: &[f64]) -> Result<Vec<f64>> {
        Ok(ints_to_f64(&min_cost_hypertree(&self.h, cost, 1, &self.lim)?))
    }

    fn minimize_exact(&self, cost: &[Rational]) -> Result<Vec<Rational>> {
        Ok(ints_to_rational(&min_cost_hypertree(&self.h, cost, 1, &self.lim)?))
    }

    fn members(&self, lim: &Limits) -> Result<Vec<Vec<Rational>>> {
        Ok(oracle::enumerate_hypertrees(&self.h, lim)?.members().to_vec())
    }
}

/// `Ω(H)` with multiplicities capped at `|V|`.
#[derive(Debug, Clone)]
pub struct MultitreeFamily {
    h: Hypergraph,
    ids: Vec<EdgeId>,
    cap: u32,
    lim: Limits,
}

impl MultitreeFamily {
    /// Fails when `h` is disconnected (then no multi-tree exists).
    pub fn new(h: &Hypergraph, lim: &Limits) -> Result<Self> {
        if !h.is_connected() {
            return Err(Error::Infeasible(
                "the multi-tree family of a disconnected hypergraph is empty".into(),
            ));
        }
        Ok(Self {
            h: h.clone(),
            ids: h.edge_ids(),
            cap: h.num_vertices() as u32,
            lim: *lim,
        })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.h
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }
}

impl ObjectFamily for MultitreeFamily {
    fn ground(&self) -> &[EdgeId] {
        &self.ids
    }

    fn kind(&self) -> FamilyKind {
        FamilyKind::Multitree
    }

    fn minimize(&self, cost: &[f64]) -> Result<Vec<f64>> {
        Ok(ints_to_f64(&min_cost_hypertree(&self.h, cost, self.cap, &self.lim)?))
    }

    fn minimize_exact(&self, cost: &[Rational]) -> Result<Vec<Rational>> {
        Ok(ints_to_rational(&min_cost_hypertree(
            &self.h, cost, self.cap, &self.lim,
        )?))
    }

    fn members(&self, lim: &Limits) -> Result<Vec<Vec<Rational>>> {
        Ok(oracle::enumerate_multitrees(&self.h, self.cap, lim)?
            .members()
            .to_vec())
    }
}

/// A family given by its member list.
#[derive(Debug, Clone, PartialEq)]
pub struct ExplicitFamily {
    ids: Vec<EdgeId>,
    members: Vec<Vec<Rational>>,
    members_f64: Vec<Vec<f64>>,
}

impl ExplicitFamily {
    /// Members must be nonnegative and nonzero; duplicates are dropped. An
    /// empty family is allowed but cannot be minimized over.
    pub fn new(ids: Vec<EdgeId>, members: Vec<Vec<Rational>>) -> Result<Self> {
        let mut kept: Vec<Vec<Rational>> = Vec::with_capacity(members.len());
        for m in members {
            if m.len() != ids.len() {
                return Err(Error::Argument("member length differs from the ground set".into()));
            }
            if m.iter().any(Signed::is_negative) || m.iter().all(Zero::is_zero) {
                return Err(Error::Argument(
                    "usage vectors must be nonnegative and nonzero".into(),
                ));
            }
            if !kept.contains(&m) {
                kept.push(m);
            }
        }
        let members_f64 = kept.iter().map(|m| m.iter().map(to_f64).collect()).collect();
        Ok(Self {
            ids,
            members: kept,
            members_f64,
        })
    }

    pub fn members(&self) -> &[Vec<Rational>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

impl ObjectFamily for ExplicitFamily {
    fn ground(&self) -> &[EdgeId] {
        &self.ids
    }

    fn kind(&self) -> FamilyKind {
        FamilyKind::Explicit
    }

    fn minimize(&self, cost: &[f64]) -> Result<Vec<f64>> {
        if self.members.is_empty() {
            return Err(Error::Infeasible("the family has no members".into()));
        }
        let score = |m: &[f64]| m.iter().zip(cost).map(|(a, b)| a * b).sum::<f64>();
        let best = self
            .members_f64
            .iter()
            .min_by(|a, b| score(a).total_cmp(&score(b)))
            .expect("nonempty family");
        Ok(best.clone())
    }

    fn minimize_exact(&self, cost: &[Rational]) -> Result<Vec<Rational>> {
        if self.members.is_empty() {
            return Err(Error::Infeasible("the family has no members".into()));
        }
        let score = |m: &[Rational]| {
            m.iter()
                .zip(cost)
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
        };
        let mut best = &self.members[0];
        let mut best_score = score(best);
        for m in &self.members[1..] {
            let s = score(m);
            if s < best_score {
                best = m;
                best_score = s;
            }
        }
        Ok(best.clone())
    }

    fn members(&self, _lim: &Limits) -> Result<Vec<Vec<Rational>>> {
        Ok(self.members.clone())
    }
}

/// A scalar that is exact when it came from exact arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(Rational),
    Float(f64),
}

impl Scalar {
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(q) => to_f64(q),
            Scalar::Float(x) => *x,
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Scalar::Exact(q) => Some(q),
            Scalar::Float(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ModulusResult {
    pub p: u8,
    pub value: Scalar,
    /// Modulus of the dual problem; for `p = 2` the minimum of
    /// `Σ η²/σ` over the hull, for `p = 1` absent.
    pub dual_value: Option<Scalar>,
    pub rho_star: Option<EdgeVector<Scalar>>,
    pub eta_star: Option<EdgeVector<f64>>,
    pub gap: f64,
    pub iterations: usize,
    /// The convex combination of family members behind `eta_star`.
    pub support: Vec<(f64, Vec<f64>)>,
}

impl ModulusResult {
    pub fn value_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

/// Which family a modulus computation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeFamily {
    Tree,
    Multitree,
}

/// Builds the family object for `h`.
pub fn family(h: &Hypergraph, kind: TreeFamily, lim: &Limits) -> Result<Box<dyn ObjectFamily>> {
    Ok(match kind {
        TreeFamily::Tree => Box::new(HypertreeFamily::new(h, lim)?),
        TreeFamily::Multitree => Box::new(MultitreeFamily::new(h, lim)?),
    })
}

/// `Ω(H)` as a family object.
pub fn multitree_family(h: &Hypergraph, lim: &Limits) -> Result<MultitreeFamily> {
    MultitreeFamily::new(h, lim)
}

/// `E_{p,σ}(ρ) = Σ σ(e) ρ(e)^p`.
pub fn energy(rho: &[Rational], weights: &[Rational], p: u8) -> Rational {
    rho.iter().zip(weights).fold(Rational::zero(), |acc, (r, w)| {
        acc + w * num_traits::pow(r.clone(), p as usize)
    })
}

pub fn energy_f64(rho: &[f64], weights: &[f64], p: u8) -> f64 {
    rho.iter()
        .zip(weights)
        .map(|(r, w)| w * num_traits::float::FloatCore::powi(*r, p as i32))
        .sum()
}

/// `ρ` is admissible when every member has total cost at least `1 - tol`;
/// checked exactly through the minimization oracle.
pub fn is_admissible(fam: &dyn ObjectFamily, rho: &[Rational], tol: f64) -> Result<bool> {
    if rho.iter().any(Signed::is_negative) {
        return Ok(false);
    }
    let best = fam.minimize_exact(rho)?;
    let cost = best
        .iter()
        .zip(rho)
        .fold(Rational::zero(), |acc, (a, b)| acc + a * b);
    Ok(to_f64(&cost) >= 1.0 - tol)
}

/// 1-modulus. For multi-trees it equals the weighted strength, for
/// hypertrees the strength of the hypergraphic matroid. An optimal density
/// from the exact LP over the enumerated family is attached when the edge
/// count is within `lim.max_polyhedron_edges`; the LP value must agree.
pub fn mod1(
    h: &Hypergraph,
    kind: TreeFamily,
    weights: &[Rational],
    lim: &Limits,
) -> Result<ModulusResult> {
    if weights.len() != h.num_edges() || weights.iter().any(|w| !w.is_positive()) {
        return Err(Error::Argument("weights must be positive, one per edge".into()));
    }
    let fam = family(h, kind, lim)?;
    let value = match kind {
        TreeFamily::Multitree => strength(h, Some(weights), lim)?.value,
        TreeFamily::Tree => matroid_strength(h, weights, lim)?.0,
    };
    let mut rho_star = None;
    if h.num_edges() <= lim.max_polyhedron_edges {
        let members = fam.members(lim)?;
        let rows: Vec<(Vec<Rational>, Rational)> =
            members.into_iter().map(|m| (m, Rational::one())).collect();
        let lp = oracle::lp_min(weights, &rows)?;
        if lp.value != value {
            return Err(Error::Consistency(format!(
                "1-modulus from the LP is {}, from strength {value}",
                lp.value
            )));
        }
        rho_star = Some(EdgeVector::new(
            h,
            lp.point.into_iter().map(Scalar::Exact).collect(),
        ));
    }
    Ok(ModulusResult {
        p: 1,
        value: Scalar::Exact(value),
        dual_value: None,
        rho_star,
        eta_star: None,
        gap: 0.0,
        iterations: 0,
        support: Vec::new(),
    })
}

/// 2-modulus through the minimum-norm point of the family's hull.
///
/// `η* = argmin Σ η²/σ` over the hull, the dual modulus is that minimum and
/// `Mod_{2,σ} = 1/min`. The density `ρ* = η* Mod / σ` is rescaled by the
/// exact cheapest member cost so it is admissible.
pub fn mod2_mnp(
    fam: &dyn ObjectFamily,
    weights: &[f64],
    opts: &SolverOptions,
) -> Result<ModulusResult> {
    let ids = fam.ground().to_vec();
    if weights.len() != ids.len() || weights.iter().any(|&w| !(w > 0.0 && w.is_finite())) {
        return Err(Error::Argument("weights must be positive, one per edge".into()));
    }
    let mnp = min_norm_point(fam, weights, opts)?;
    let dual = mnp.value;
    let value = 1.0 / dual;
    let rho: Vec<f64> = mnp
        .point
        .iter()
        .zip(weights)
        .map(|(eta, w)| eta * value / w)
        .collect();
    // Exact cheapest member under rho, to normalize admissibility.
    let rho_q: Vec<Rational> = rho.iter().map(|&x| crate::snap_rational(x, 1 << 40)).collect();
    let cheapest = fam.minimize_exact(&rho_q)?;
    let min_cost = to_f64(
        &cheapest
            .iter()
            .zip(&rho_q)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b),
    );
    let rho_hat: Vec<f64> = if min_cost > 0.0 {
        rho.iter().map(|x| x / min_cost).collect()
    } else {
        rho
    };
    Ok(ModulusResult {
        p: 2,
        value: Scalar::Float(value),
        dual_value: Some(Scalar::Float(dual)),
        rho_star: Some(EdgeVector {
            ids: ids.clone(),
            values: rho_hat.into_iter().map(Scalar::Float).collect(),
        }),
        eta_star: Some(EdgeVector {
            ids,
            values: mnp.point,
        }),
        gap: mnp.gap,
        iterations: mnp.iterations,
        support: mnp.support,
    })
}

/// The `(ρ*, η*)` pair of a 2-modulus result, after checking
/// `η*(e) = σ(e) ρ*(e) / Mod` and `E_{2,σ}(ρ*) · Mod_dual = 1` to `10·tol`.
pub fn duality_pair(res: &ModulusResult, weights: &[f64], tol: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    if res.p != 2 {
        return Err(Error::Argument("duality pairs are defined for p = 2 only".into()));
    }
    let (Some(rho), Some(eta), Some(dual)) = (&res.rho_star, &res.eta_star, &res.dual_value)
    else {
        return Err(Error::Argument("result has no densities".into()));
    };
    let rho: Vec<f64> = rho.values.iter().map(Scalar::to_f64).collect();
    let eta = eta.values.clone();
    let value = res.value_f64();
    let limit = 10.0 * tol;
    let product = energy_f64(&rho, weights, 2) * dual.to_f64();
    if (product - 1.0).abs() > limit.max(1e-12) {
        return Err(Error::Consistency(format!(
            "energy of ρ* times the dual modulus is {product}, expected 1"
        )));
    }
    for ((r, e), w) in rho.iter().zip(&eta).zip(weights) {
        if (w * r / value - e).abs() > limit.max(1e-12) * (1.0 + e.abs()) {
            return Err(Error::Consistency(format!(
                "η* entry {e} differs from σρ*/Mod = {}",
                w * r / value
            )));
        }
    }
    Ok((rho, eta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{catalog, ratio};

    fn lim() -> Limits {
        Limits::default()
    }

    fn opts() -> SolverOptions {
        SolverOptions::default()
    }

    #[test]
    fn admissibility_and_energy() {
        let tri = catalog::triangle();
        let g = HypertreeFamily::new(&tri, &lim()).unwrap();
        let half = alloc::vec![ratio(1, 2); 3];
        assert!(is_admissible(&g, &half, 1e-12).unwrap());
        assert!(!is_admissible(&g, &alloc::vec![ratio(0, 1); 3], 1e-12).unwrap());
        let om = MultitreeFamily::new(&catalog::double_triple(), &lim()).unwrap();
        assert!(is_admissible(&om, &[ratio(1, 2), ratio(1, 2)], 1e-12).unwrap());
        assert_eq!(energy(&half, &alloc::vec![ratio(1, 1); 3], 2), ratio(3, 4));
        assert_eq!(energy(&[ratio(1, 1), ratio(0, 1)], &[ratio(1, 1), ratio(2, 1)], 1), ratio(1, 1));
    }

    #[test]
    fn one_modulus_examples() {
        let h = catalog::double_triple();
        let w = [ratio(1, 1), ratio(2, 1)];
        let g = mod1(&h, TreeFamily::Tree, &w, &lim()).unwrap();
        assert_eq!(g.value, Scalar::Exact(ratio(1, 1)));
        let o = mod1(&h, TreeFamily::Multitree, &w, &lim()).unwrap();
        assert_eq!(o.value, Scalar::Exact(ratio(3, 2)));
        let t = mod1(&catalog::triangle(), TreeFamily::Tree, &[ratio(1, 1), ratio(1, 1), ratio(1, 1)], &lim())
            .unwrap();
        assert_eq!(t.value, Scalar::Exact(ratio(3, 2)));
        assert!(matches!(
            mod1(&catalog::triple_with_tail(), TreeFamily::Tree, &[ratio(1, 1), ratio(1, 1)], &lim()),
            Err(Error::Infeasible(_))
        ));
    }

    #[test]
    fn two_modulus_examples() {
        let close = |a: f64, b: f64| (a - b).abs() < 1e-9;
        let tri = HypertreeFamily::new(&catalog::triangle(), &lim()).unwrap();
        let r = mod2_mnp(&tri, &[1.0; 3], &opts()).unwrap();
        assert!(close(r.value_f64(), 0.75));
        assert!(r.eta_star.as_ref().unwrap().values.iter().all(|&x| close(x, 2.0 / 3.0)));
        let om = MultitreeFamily::new(&catalog::double_triple(), &lim()).unwrap();
        let r = mod2_mnp(&om, &[1.0; 2], &opts()).unwrap();
        assert!(close(r.value_f64(), 0.5));
        let om = MultitreeFamily::new(&catalog::triple_with_tail(), &lim()).unwrap();
        let r = mod2_mnp(&om, &[1.0; 2], &opts()).unwrap();
        assert!(close(r.dual_value.as_ref().unwrap().to_f64(), 5.0));
        assert_eq!(r.eta_star.unwrap().values, [2.0, 1.0]);
    }

    #[test]
    fn duality_pair_of_a_single_member_family() {
        let g = HypertreeFamily::new(&catalog::double_triple(), &lim()).unwrap();
        let r = mod2_mnp(&g, &[1.0; 2], &opts()).unwrap();
        let (rho, eta) = duality_pair(&r, &[1.0; 2], 1e-9).unwrap();
        assert!(rho.iter().all(|&x| (x - 0.5).abs() < 1e-12));
        assert!(eta.iter().all(|&x| (x - 1.0).abs() < 1e-12));
        let rho_q: Vec<Rational> = rho.iter().map(|&x| crate::snap_rational(x, 1000)).collect();
        assert!(is_admissible(&g, &rho_q, 0.0).unwrap());
    }
}
