//! Minimum of `Σ η(e)² / scale(e)` over the convex hull of an explicit list
//! of points.
//!
//! Accelerated projected gradient runs on the simplex of member weights. The
//! float answer is then polished: the members nearly tight at the iterate
//! span an affine hull whose exact minimum-norm point is computed over the
//! rationals, and accepted when it lies in their hull and every member
//! satisfies the optimality condition `<x, g> >= <x, x>` exactly.

use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::linalg::{independent_rows, solve};
use crate::num::one;
use crate::oracle::lp::lp_min;
use crate::{to_f64, Error, Rational, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct QpSolution {
    pub value: f64,
    pub point: Vec<f64>,
    /// Certified exact optimum `(value, point)` when the polish succeeds.
    pub exact: Option<(Rational, Vec<Rational>)>,
}

const MAX_ITERATIONS: usize = 200_000;

/// Euclidean projection onto the probability simplex.
fn project_simplex(y: &mut [f64]) {
    let mut u: Vec<f64> = y.to_vec();
    u.sort_by(|a, b| b.total_cmp(a));
    let mut sum = 0.0;
    let mut theta = 0.0;
    for (i, ui) in u.iter().enumerate() {
        sum += ui;
        let t = (sum - 1.0) / (i + 1) as f64;
        if ui - t > 0.0 {
            theta = t;
        }
    }
    for v in y.iter_mut() {
        *v = (*v - theta).max(0.0);
    }
}

struct Problem<'a> {
    g: Vec<Vec<f64>>,
    w: &'a [f64],
}

impl Problem<'_> {
    fn point(&self, lambda: &[f64]) -> Vec<f64> {
        let mut x = alloc::vec![0.0; self.w.len()];
        for (l, g) in lambda.iter().zip(&self.g) {
            if *l != 0.0 {
                for (xi, gi) in x.iter_mut().zip(g) {
                    *xi += l * gi;
                }
            }
        }
        x
    }

    fn ip(&self, a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).zip(self.w).map(|((x, y), w)| x * y * w).sum()
    }

    /// Objective and its gradient in member weights.
    fn eval(&self, lambda: &[f64]) -> (f64, Vec<f64>, Vec<f64>) {
        let x = self.point(lambda);
        let f = self.ip(&x, &x);
        let grad = self.g.iter().map(|g| 2.0 * self.ip(g, &x)).collect();
        (f, grad, x)
    }
}

/// Runs from `lambda` until the Frank-Wolfe gap is at most `tol` relative to
/// the objective, or the iteration budget is spent.
fn projected_gradient(p: &Problem, mut lambda: Vec<f64>, tol: f64, budget: &mut usize) -> Vec<f64> {
    let mut y = lambda.clone();
    let mut t = 1.0f64;
    let mut lip = 1.0f64;
    let (mut f_prev, _, _) = p.eval(&lambda);
    while *budget > 0 {
        *budget -= 1;
        let (fy, gy, _) = p.eval(&y);
        // Backtracking on the Lipschitz estimate.
        let next = loop {
            let mut z: Vec<f64> = y.iter().zip(&gy).map(|(a, b)| a - b / lip).collect();
            project_simplex(&mut z);
            let d: Vec<f64> = z.iter().zip(&y).map(|(a, b)| a - b).collect();
            let (fz, _, _) = p.eval(&z);
            let model = fy
                + gy.iter().zip(&d).map(|(a, b)| a * b).sum::<f64>()
                + 0.5 * lip * d.iter().map(|v| v * v).sum::<f64>();
            if fz <= model + 1e-15 * fy.abs().max(1.0) || lip > 1e16 {
                break (z, fz);
            }
            lip *= 2.0;
        };
        let (z, fz) = next;
        if fz > f_prev {
            // Adaptive restart.
            t = 1.0;
            y = lambda.clone();
            continue;
        }
        let t_next = (1.0 + libm::sqrt(1.0 + 4.0 * t * t)) / 2.0;
        let beta = (t - 1.0) / t_next;
        y = z.iter().zip(&lambda).map(|(a, b)| a + beta * (a - b)).collect();
        lambda = z;
        t = t_next;
        f_prev = fz;
        let x = p.point(&lambda);
        let xx = p.ip(&x, &x);
        let gap = xx - p.g.iter().map(|g| p.ip(g, &x)).fold(f64::INFINITY, f64::min);
        if gap <= tol * xx.max(1.0) {
            break;
        }
    }
    lambda
}

fn ip_exact(a: &[Rational], b: &[Rational], w: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .zip(w)
        .filter(|((x, y), _)| !x.is_zero() && !y.is_zero())
        .map(|((x, y), w)| x * y / w)
        .fold(Rational::zero(), |s, v| s + v)
}

/// Exact minimum-norm point of the affine hull of `pts` and a certificate
/// that it is the minimum over the hull of `all`.
fn polish(all: &[Vec<Rational>], pts: &[usize], scale: &[Rational]) -> Result<Option<(Rational, Vec<Rational>)>> {
    let lifted: Vec<Vec<Rational>> = pts
        .iter()
        .map(|&i| {
            let mut r = all[i].clone();
            r.push(one());
            r
        })
        .collect();
    let basis: Vec<usize> = independent_rows(&lifted).into_iter().map(|j| pts[j]).collect();
    let r = basis.len();
    // Bordered system [Gram 1; 1ᵀ 0] [μ; ν] = [0; 1].
    let mut a = Vec::with_capacity(r + 1);
    for &i in &basis {
        let mut row: Vec<Rational> = basis.iter().map(|&j| ip_exact(&all[i], &all[j], scale)).collect();
        row.push(one());
        a.push(row);
    }
    let mut last = alloc::vec![one(); r];
    last.push(Rational::zero());
    a.push(last);
    let mut b = alloc::vec![Rational::zero(); r];
    b.push(one());
    let Some(mu) = solve(&a, &b) else {
        return Ok(None);
    };
    let dim = scale.len();
    let mut x = alloc::vec![Rational::zero(); dim];
    for (m, &i) in mu.iter().zip(&basis) {
        for (xe, ge) in x.iter_mut().zip(&all[i]) {
            *xe += m * ge;
        }
    }
    let xx = ip_exact(&x, &x, scale);
    if all.iter().any(|g| ip_exact(g, &x, scale) < xx) {
        return Ok(None);
    }
    // Membership of x in the hull of pts: μ >= 0, Σ μ = 1, Σ μ g = x.
    if mu.iter().any(Signed::is_negative) {
        let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::new();
        for e in 0..dim {
            let a: Vec<Rational> = pts.iter().map(|&i| all[i][e].clone()).collect();
            rows.push((a.iter().map(|v| -v).collect(), -x[e].clone()));
            rows.push((a, x[e].clone()));
        }
        rows.push((alloc::vec![one(); pts.len()], one()));
        rows.push((alloc::vec![-one(); pts.len()], -one()));
        match lp_min(&alloc::vec![Rational::zero(); pts.len()], &rows) {
            Ok(_) => {}
            Err(Error::Infeasible(_)) => return Ok(None),
            Err(e) => return Err(e),
        }
    }
    Ok(Some((xx, x)))
}

/// Minimizes `Σ η(e)² / scale(e)` over the convex hull of `members`.
pub fn qp_min_norm(members: &[Vec<Rational>], scale: &[Rational]) -> Result<QpSolution> {
    if members.is_empty() {
        return Err(Error::Argument("empty hull".into()));
    }
    if members.iter().any(|g| g.len() != scale.len()) {
        return Err(Error::Argument("member length differs from the scale".into()));
    }
    if scale.iter().any(|s| !s.is_positive()) {
        return Err(Error::Argument("scale entries must be positive".into()));
    }
    let w: Vec<f64> = scale.iter().map(|s| 1.0 / to_f64(s)).collect();
    let p = Problem {
        g: members.iter().map(|g| g.iter().map(to_f64).collect()).collect(),
        w: &w,
    };
    // Loose first; the exact polish certifies the answer, so tighter
    // stages only run when it fails.
    let k = members.len();
    let mut lambda = alloc::vec![1.0 / k as f64; k];
    let mut budget = MAX_ITERATIONS;
    let mut exact = None;
    let mut x = Vec::new();
    let mut value = 0.0;
    for tol in [1e-8, 1e-11, 1e-14] {
        lambda = projected_gradient(&p, lambda, tol, &mut budget);
        x = p.point(&lambda);
        value = p.ip(&x, &x);
        let slack: Vec<f64> = p.g.iter().map(|g| p.ip(g, &x) - value).collect();
        let delta = 1e-6 * value.max(1.0);
        let tight: Vec<usize> = (0..k).filter(|&i| slack[i] <= delta).collect();
        let support: Vec<usize> = (0..k).filter(|&i| lambda[i] > 1e-9).collect();
        for pts in [&support, &tight] {
            if pts.is_empty() {
                continue;
            }
            if let Some(found) = polish(members, pts, scale)? {
                exact = Some(found);
                break;
            }
        }
        if exact.is_some() {
            break;
        }
    }
    Ok(match exact {
        Some((v, pt)) => QpSolution {
            value: to_f64(&v),
            point: pt.iter().map(to_f64).collect(),
            exact: Some((v, pt)),
        },
        None => QpSolution {
            value,
            point: x,
            exact: None,
        },
    })
}
