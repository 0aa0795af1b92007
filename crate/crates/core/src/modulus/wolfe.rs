//! Wolfe's minimum-norm-point algorithm over the hull of a family, with the
//! weighted inner product `<x, y> = Σ x(e) y(e) / σ(e)`.
//!
//! The weighted norm is the plain norm after the substitution
//! `η'(e) = η(e) / √σ(e)`; working with the weighted inner product directly
//! avoids the square roots. The oracle cost at `x` is the gradient `x / σ`.

use alloc::vec::Vec;

use crate::linalg::solve_f64;
use crate::modulus::ObjectFamily;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Stop when `<x, x> - min_v <x, v>` is at most this.
    pub tol: f64,
    /// Cap on major cycles (oracle calls).
    pub max_iterations: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            max_iterations: 100_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MinNormPoint {
    /// `Σ x(e)² / σ(e)` at the returned point.
    pub value: f64,
    pub point: Vec<f64>,
    /// Final Frank-Wolfe gap.
    pub gap: f64,
    pub iterations: usize,
    /// Convex combination `(λ, vertex)` producing `point`.
    pub support: Vec<(f64, Vec<f64>)>,
}

const ZERO_WEIGHT: f64 = 1e-12;

struct Corral<'a> {
    w: &'a [f64],
    points: Vec<Vec<f64>>,
    lambda: Vec<f64>,
}

impl Corral<'_> {
    fn ip(&self, a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).zip(self.w).map(|((x, y), w)| x * y / w).sum()
    }

    fn combine(&self, lambda: &[f64]) -> Vec<f64> {
        let mut x = alloc::vec![0.0; self.w.len()];
        for (l, p) in lambda.iter().zip(&self.points) {
            for (xi, pi) in x.iter_mut().zip(p) {
                *xi += l * pi;
            }
        }
        x
    }

    /// Affine weights of the minimum-norm point of the affine hull, from the
    /// bordered system `[G 1; 1ᵀ 0] [α; μ] = [0; 1]`.
    fn affine_minimizer(&self) -> Vec<f64> {
        let k = self.points.len();
        let mut a = alloc::vec![alloc::vec![0.0; k + 1]; k + 1];
        for i in 0..k {
            for j in i..k {
                let g = self.ip(&self.points[i], &self.points[j]);
                a[i][j] = g;
                a[j][i] = g;
            }
            a[i][k] = 1.0;
            a[k][i] = 1.0;
        }
        let mut b = alloc::vec![0.0; k + 1];
        b[k] = 1.0;
        let mut ridge = 0.0;
        loop {
            let mut m = a.clone();
            for (i, row) in m.iter_mut().enumerate().take(k) {
                row[i] += ridge;
            }
            if let Some(x) = solve_f64(m, b.clone()) {
                return x[..k].to_vec();
            }
            let scale = a.iter().take(k).map(|r| r[0].abs()).fold(1.0f64, f64::max);
            ridge = if ridge == 0.0 { 1e-13 * scale } else { ridge * 10.0 };
        }
    }

    fn drop_zeros(&mut self) {
        let mut i = 0;
        while i < self.points.len() {
            if self.lambda[i] <= ZERO_WEIGHT {
                self.points.swap_remove(i);
                self.lambda.swap_remove(i);
            } else {
                i += 1;
            }
        }
        let total: f64 = self.lambda.iter().sum();
        for l in &mut self.lambda {
            *l /= total;
        }
    }
}

/// Minimum of `Σ η(e)²/σ(e)` over the convex hull of the family.
pub fn min_norm_point(
    fam: &dyn ObjectFamily,
    weights: &[f64],
    opts: &SolverOptions,
) -> Result<MinNormPoint> {
    if !(opts.tol > 0.0) {
        return Err(Error::Argument("solver tolerance must be positive".into()));
    }
    let start_cost: Vec<f64> = weights.iter().map(|w| 1.0 / w).collect();
    let first = fam.minimize(&start_cost)?;
    let mut c = Corral {
        w: weights,
        points: alloc::vec![first.clone()],
        lambda: alloc::vec![1.0],
    };
    let mut x = first;
    let mut gap;
    let mut iterations = 0;
    loop {
        iterations += 1;
        let cost: Vec<f64> = x.iter().zip(weights).map(|(xi, w)| xi / w).collect();
        let v = fam.minimize(&cost)?;
        let xx = c.ip(&x, &x);
        gap = xx - c.ip(&x, &v);
        if gap <= opts.tol {
            break;
        }
        if c
            .points
            .iter()
            .any(|p| p.iter().zip(&v).all(|(a, b)| (a - b).abs() <= 1e-12))
        {
            // The oracle returned a corral point: the affine minimizer is as
            // good as floating point allows.
            break;
        }
        if iterations >= opts.max_iterations {
            return Err(Error::NonConvergence {
                iterations,
                gap,
                best: x,
            });
        }
        c.points.push(v);
        c.lambda.push(0.0);
        loop {
            let alpha = c.affine_minimizer();
            if alpha.iter().all(|&a| a > ZERO_WEIGHT) {
                c.lambda = alpha;
                x = c.combine(&c.lambda);
                break;
            }
            let mut theta = 1.0f64;
            for (l, a) in c.lambda.iter().zip(&alpha) {
                if *a <= ZERO_WEIGHT && l - a > 0.0 {
                    theta = theta.min(l / (l - a));
                }
            }
            let lambda: Vec<f64> = c
                .lambda
                .iter()
                .zip(&alpha)
                .map(|(l, a)| (theta * a + (1.0 - theta) * l).max(0.0))
                .collect();
            c.lambda = lambda;
            let before = c.points.len();
            c.drop_zeros();
            if c.points.len() == before {
                // Numerical stall: drop the smallest weight to make progress.
                let (i, _) = c
                    .lambda
                    .iter()
                    .enumerate()
                    .min_by(|a, b| a.1.total_cmp(b.1))
                    .expect("nonempty corral");
                c.points.swap_remove(i);
                c.lambda.swap_remove(i);
                let total: f64 = c.lambda.iter().sum();
                c.lambda.iter_mut().for_each(|l| *l /= total);
            }
            x = c.combine(&c.lambda);
            if c.points.len() == 1 {
                break;
            }
        }
    }
    let value = c.ip(&x, &x);
    Ok(MinNormPoint {
        value,
        point: x,
        gap: gap.max(0.0),
        iterations,
        support: c.lambda.into_iter().zip(c.points).collect(),
    })
}
