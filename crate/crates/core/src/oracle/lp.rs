//! Exact linear programs `min c·x  s.t.  a_i·x >= b_i, x >= 0`.
//!
//! [`lp_min`] runs Bland's-rule simplex on the dual
//! `max b·y  s.t.  Aᵀy <= c, y >= 0`, whose row count is the number of
//! variables of the original program (small here) however many constraints
//! it has. The primal optimum is recovered from the final basis and checked
//! against strong duality. [`lp_min_basic_scan`] is the textbook
//! alternative: solve every square subsystem of tight constraints and keep
//! the best feasible point.

use alloc::format;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::linalg;
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub value: Rational,
    pub point: Vec<Rational>,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            *x /= &p;
        }
        self.rhs[r] /= &p;
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for j in 0..self.rows[i].len() {
                if !self.rows[r][j].is_zero() {
                    let d = &f * &self.rows[r][j];
                    self.rows[i][j] -= d;
                }
            }
            let d = &f * &self.rhs[r];
            self.rhs[i] -= d;
        }
        self.basis[r] = c;
    }

    /// Minimizes `cost · z` over the current tableau; columns with
    /// `allowed[j] == false` never enter.
    fn minimize(&mut self, cost: &[Rational], allowed: &[bool]) -> Outcome {
        loop {
            let price: Vec<Rational> = (0..cost.len())
                .map(|j| {
                    let mut r = cost[j].clone();
                    for (i, &b) in self.basis.iter().enumerate() {
                        if !self.rows[i][j].is_zero() && !cost[b].is_zero() {
                            r -= &cost[b] * &self.rows[i][j];
                        }
                    }
                    r
                })
                .collect();
            let Some(enter) = (0..cost.len()).find(|&j| allowed[j] && price[j].is_negative()) else {
                return Outcome::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][enter].is_positive() {
                    let ratio = &self.rhs[i] / &self.rows[i][enter];
                    let better = match &leave {
                        None => true,
                        Some((l, best)) => {
                            ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l])
                        }
                    };
                    if better {
                        leave = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else {
                return Outcome::Unbounded;
            };
            self.pivot(r, enter);
        }
    }
}

/// Solves `max f·y  s.t.  M y <= c, y >= 0` (`M` is `d × k`). Returns
/// `Ok(None)` when infeasible, `Err(Unbounded)` when unbounded, otherwise the
/// optimal `y` and basis in the system `[M I]`.
fn dual_simplex_max(
    m: &[Vec<Rational>],
    c: &[Rational],
    f: &[Rational],
) -> Result<Option<(Vec<Rational>, Vec<usize>)>> {
    let d = m.len();
    let k = f.len();
    let negative: Vec<usize> = (0..d).filter(|&i| c[i].is_negative()).collect();
    let cols = k + d + negative.len();
    let mut t = Tableau {
        rows: Vec::with_capacity(d),
        rhs: Vec::with_capacity(d),
        basis: Vec::with_capacity(d),
    };
    for i in 0..d {
        let mut row = alloc::vec![Rational::zero(); cols];
        let flip = c[i].is_negative();
        for j in 0..k {
            row[j] = if flip { -m[i][j].clone() } else { m[i][j].clone() };
        }
        row[k + i] = Rational::from_integer(if flip { (-1).into() } else { 1.into() });
        if flip {
            let a = k + d + negative.iter().position(|&x| x == i).unwrap();
            row[a] = Rational::from_integer(1.into());
            t.basis.push(a);
        } else {
            t.basis.push(k + i);
        }
        t.rhs.push(c[i].abs());
        t.rows.push(row);
    }
    let mut allowed = alloc::vec![true; cols];
    if !negative.is_empty() {
        let mut phase1 = alloc::vec![Rational::zero(); cols];
        for a in k + d..cols {
            phase1[a] = Rational::from_integer(1.into());
        }
        t.minimize(&phase1, &allowed);
        let infeasibility = t
            .basis
            .iter()
            .zip(&t.rhs)
            .filter(|(&b, _)| b >= k + d)
            .fold(Rational::zero(), |acc, (_, r)| acc + r);
        if infeasibility.is_positive() {
            return Ok(None);
        }
        // Pivot zero-level artificials out of the basis.
        for r in 0..d {
            if t.basis[r] >= k + d {
                if let Some(c) = (0..k + d).find(|&j| !t.rows[r][j].is_zero()) {
                    t.pivot(r, c);
                }
            }
        }
        for a in allowed.iter_mut().skip(k + d) {
            *a = false;
        }
    }
    let mut cost = alloc::vec![Rational::zero(); cols];
    for j in 0..k {
        cost[j] = -f[j].clone();
    }
    match t.minimize(&cost, &allowed) {
        Outcome::Unbounded => Err(Error::Unbounded("dual objective unbounded".into())),
        Outcome::Optimal => {
            let mut y = alloc::vec![Rational::zero(); k];
            for (i, &b) in t.basis.iter().enumerate() {
                if b < k {
                    y[b] = t.rhs[i].clone();
                }
            }
            Ok(Some((y, t.basis)))
        }
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

fn feasible(x: &[Rational], constraints: &[(Vec<Rational>, Rational)]) -> bool {
    x.iter().all(|v| !v.is_negative()) && constraints.iter().all(|(a, b)| dot(a, x) >= *b)
}

fn check_shapes(objective: &[Rational], constraints: &[(Vec<Rational>, Rational)]) -> Result<()> {
    if constraints.iter().any(|(a, _)| a.len() != objective.len()) {
        return Err(Error::Argument("constraint length differs from the objective".into()));
    }
    Ok(())
}

/// Exact `min c·x  s.t.  a_i·x >= b_i, x >= 0`.
pub fn lp_min(objective: &[Rational], constraints: &[(Vec<Rational>, Rational)]) -> Result<LpSolution> {
    check_shapes(objective, constraints)?;
    let d = objective.len();
    let k = constraints.len();
    // M = Aᵀ, d × k.
    let m: Vec<Vec<Rational>> = (0..d)
        .map(|i| constraints.iter().map(|(a, _)| a[i].clone()).collect())
        .collect();
    let b: Vec<Rational> = constraints.iter().map(|(_, b)| b.clone()).collect();
    let primal_infeasible = || Error::Infeasible("the constraints have no nonnegative solution".into());
    let (y, basis) = match dual_simplex_max(&m, objective, &b) {
        Ok(Some(sol)) => sol,
        Ok(None) => {
            // The dual is infeasible: the primal is unbounded if it is
            // feasible at all, which the zero-cost dual decides.
            let zeros = alloc::vec![Rational::zero(); d];
            return match dual_simplex_max(&m, &zeros, &b) {
                Err(Error::Unbounded(_)) => Err(primal_infeasible()),
                _ => Err(Error::Unbounded("the objective is unbounded below".into())),
            };
        }
        Err(Error::Unbounded(_)) => return Err(primal_infeasible()),
        Err(e) => return Err(e),
    };
    // Multipliers π with πᵀB = f_B for the basis B of [M I]; π is the
    // primal optimum.
    let column = |j: usize| -> Vec<Rational> {
        if j < k {
            (0..d).map(|i| m[i][j].clone()).collect()
        } else {
            let mut e = alloc::vec![Rational::zero(); d];
            e[j - k] = Rational::from_integer(1.into());
            e
        }
    };
    let bt: Vec<Vec<Rational>> = basis.iter().map(|&j| column(j)).collect();
    let fb: Vec<Rational> = basis
        .iter()
        .map(|&j| if j < k { b[j].clone() } else { Rational::zero() })
        .collect();
    let x = linalg::solve(&bt, &fb)
        .ok_or_else(|| Error::Consistency("singular final simplex basis".into()))?;
    let value = dot(objective, &x);
    let dual_value = dot(&b, &y);
    if value != dual_value || !feasible(&x, constraints) {
        return Err(Error::Consistency(format!(
            "LP duality check failed: primal {value}, dual {dual_value}"
        )));
    }
    Ok(LpSolution { value, point: x })
}

/// `min c·x` by solving every square subsystem of `d` tight rows (taken
/// from the constraints and `x >= 0`), assuming the optimum is attained at
/// a vertex. At most `max_subsystems` subsystems are tried.
pub fn lp_min_basic_scan(
    objective: &[Rational],
    constraints: &[(Vec<Rational>, Rational)],
    max_subsystems: usize,
) -> Result<LpSolution> {
    check_shapes(objective, constraints)?;
    let d = objective.len();
    let mut rows: Vec<(Vec<Rational>, Rational)> = constraints.to_vec();
    for i in 0..d {
        let mut e = alloc::vec![Rational::zero(); d];
        e[i] = Rational::from_integer(1.into());
        rows.push((e, Rational::zero()));
    }
    let r = rows.len();
    if d > r {
        return Err(Error::Argument("fewer rows than variables".into()));
    }
    let mut count: u128 = 1;
    for i in 0..d {
        count = count * (r - i) as u128 / (i + 1) as u128;
    }
    if count > max_subsystems as u128 {
        return Err(Error::Capacity {
            what: "basic subsystems",
            actual: count.min(usize::MAX as u128) as usize,
            limit: max_subsystems,
        });
    }
    let mut best: Option<LpSolution> = None;
    let mut pick: Vec<usize> = (0..d).collect();
    loop {
        let a: Vec<Vec<Rational>> = pick.iter().map(|&i| rows[i].0.clone()).collect();
        let b: Vec<Rational> = pick.iter().map(|&i| rows[i].1.clone()).collect();
        if let Some(x) = linalg::solve(&a, &b) {
            if feasible(&x, constraints) {
                let value = dot(objective, &x);
                if best.as_ref().is_none_or(|s| value < s.value) {
                    best = Some(LpSolution { value, point: x });
                }
            }
        }
        let Some(i) = (0..d).rev().find(|&i| pick[i] < r - d + i) else {
            break;
        };
        pick[i] += 1;
        for j in i + 1..d {
            pick[j] = pick[j - 1] + 1;
        }
    }
    best.ok_or_else(|| Error::Infeasible("no basic feasible point".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    fn q(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| ratio(x, 1)).collect()
    }

    #[test]
    fn weighted_single_constraint() {
        let s = lp_min(&q(&[1, 2]), &[(q(&[1, 1]), ratio(1, 1))]).unwrap();
        assert_eq!((s.value, s.point), (ratio(1, 1), q(&[1, 0])));
        let s = lp_min(&q(&[0, 0]), &[(q(&[1, 1]), ratio(1, 1))]).unwrap();
        assert_eq!(s.value, ratio(0, 1));
    }

    #[test]
    fn spanning_tree_covering() {
        let rows = [
            (q(&[1, 1, 0]), ratio(1, 1)),
            (q(&[0, 1, 1]), ratio(1, 1)),
            (q(&[1, 0, 1]), ratio(1, 1)),
        ];
        let s = lp_min(&q(&[1, 1, 1]), &rows).unwrap();
        assert_eq!(s.value, ratio(3, 2));
        assert_eq!(s.point, alloc::vec![ratio(1, 2); 3]);
        let scan = lp_min_basic_scan(&q(&[1, 1, 1]), &rows, 1000).unwrap();
        assert_eq!(scan.value, ratio(3, 2));
    }

    #[test]
    fn infeasible_and_unbounded() {
        let rows = [(q(&[-1]), ratio(1, 1))];
        assert!(matches!(lp_min(&q(&[1]), &rows), Err(Error::Infeasible(_))));
        let rows = [(q(&[1]), ratio(1, 1))];
        assert!(matches!(lp_min(&q(&[-1]), &rows), Err(Error::Unbounded(_))));
        let s = lp_min(&q(&[-1, 1]), &[(q(&[-1, 0]), ratio(-3, 1))]).unwrap();
        assert_eq!(s.value, ratio(-3, 1));
    }
}
