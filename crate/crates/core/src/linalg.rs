//! Small dense linear algebra: exact rational elimination and a float LU
//! solve.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::Rational;

/// Row echelon reduction in place; returns the pivot columns.
fn echelon(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                for j in c..cols {
                    let d = &f * &rows[r][j];
                    rows[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank over the rationals.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    echelon(&mut m).len()
}

/// Indices of a maximal linearly independent subset of the rows, chosen
/// greedily in order.
pub fn independent_rows(rows: &[Vec<Rational>]) -> Vec<usize> {
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    let mut out = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        basis.push(r.clone());
        if rank(&basis) == basis.len() {
            out.push(i);
        } else {
            basis.pop();
        }
    }
    out
}

/// Solves the square system `a x = b`; `None` when `a` is singular.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut m);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some((0..n).map(|i| &m[i][n] / &m[i][i]).collect())
}

/// Solves `a x = b` by LU with partial pivoting; `None` when a pivot falls
/// below `1e-14` times the largest entry.
pub fn solve_f64(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = a.len();
    let scale = a
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |m, x| m.max(x.abs()))
        .max(1e-300);
    for c in 0..n {
        let p = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))?;
        if a[p][c].abs() <= 1e-14 * scale {
            return None;
        }
        a.swap(c, p);
        b.swap(c, p);
        for i in c + 1..n {
            let f = a[i][c] / a[c][c];
            if f != 0.0 {
                for j in c..n {
                    a[i][j] -= f * a[c][j];
                }
                b[i] -= f * b[c];
            }
        }
    }
    let mut x = alloc::vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|j| a[i][j] * x[j]).sum();
        x[i] = (b[i] - s) / a[i][i];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    fn row(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| ratio(x, 1)).collect()
    }

    #[test]
    fn rank_and_independent_rows() {
        let rows = [row(&[1, 1, 0]), row(&[2, 2, 0]), row(&[0, 1, 1]), row(&[1, 2, 1])];
        assert_eq!(rank(&rows), 2);
        assert_eq!(independent_rows(&rows), [0, 2]);
    }

    #[test]
    fn exact_and_float_solve() {
        let a = [row(&[2, 1]), row(&[1, 3])];
        let x = solve(&a, &[ratio(3, 1), ratio(5, 1)]).unwrap();
        assert_eq!(x, [ratio(4, 5), ratio(7, 5)]);
        assert!(solve(&[row(&[1, 1]), row(&[2, 2])], &[ratio(1, 1), ratio(2, 1)]).is_none());
        let y = solve_f64(alloc::vec![alloc::vec![0.0, 1.0], alloc::vec![2.0, 1.0]], alloc::vec![1.0, 3.0])
            .unwrap();
        assert!((y[0] - 1.0).abs() < 1e-15 && (y[1] - 1.0).abs() < 1e-15);
    }
}
