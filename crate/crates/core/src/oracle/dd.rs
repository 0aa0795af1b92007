//! Vertex enumeration of `{x >= 0 : a_i·x >= b_i}` by the double-description
//! method on the homogenized cone `{(x, t) >= 0 : a_i·x - b_i t >= 0}`.
//!
//! Rays are primitive integer vectors. Two rays are combined only when they
//! are adjacent, tested combinatorially: the constraints tight at both must
//! number at least `dim - 2` and be tight at no third ray.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::hypergraph::Hypergraph;
use crate::partitions::{for_each_rgs, CutScanner};
use crate::{Error, Limits, Rational, Result};

/// Vertices and extreme recession directions of a polyhedron.
#[derive(Debug, Clone, PartialEq)]
pub struct VertexSet {
    pub vertices: Vec<Vec<Rational>>,
    pub rays: Vec<Vec<Rational>>,
}

#[derive(Clone)]
struct Ray {
    v: Vec<i128>,
    zeros: Vec<u64>,
}

fn set_bit(z: &mut [u64], i: usize) {
    z[i / 64] |= 1 << (i % 64);
}

fn overflow() -> Error {
    Error::Capacity {
        what: "vertex enumeration integer size (bits)",
        actual: 128,
        limit: 127,
    }
}

fn primitive(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
}

fn eval(row: &[i128], v: &[i128]) -> Result<i128> {
    let mut s: i128 = 0;
    for (a, b) in row.iter().zip(v) {
        if *a != 0 && *b != 0 {
            s = s
                .checked_add(a.checked_mul(*b).ok_or_else(overflow)?)
                .ok_or_else(overflow)?;
        }
    }
    Ok(s)
}

/// Scales a rational row `(a, b)` meaning `a·x >= b` to the integer row
/// `(a, -b)` over `(x, t)`.
fn integer_row(a: &[Rational], b: &Rational) -> Result<Vec<i128>> {
    let lcm = a
        .iter()
        .chain(core::iter::once(b))
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut out: Vec<i128> = a
        .iter()
        .chain(core::iter::once(&-b.clone()))
        .map(|q| (q.numer() * (&lcm / q.denom())).to_i128().ok_or_else(overflow))
        .collect::<Result<_>>()?;
    primitive(&mut out);
    Ok(out)
}

/// Vertices (and recession rays) of `{x >= 0 : a_i·x >= b_i}`.
pub fn vertex_enumeration(dim: usize, rows: &[(Vec<Rational>, Rational)]) -> Result<VertexSet> {
    if rows.iter().any(|(a, _)| a.len() != dim) {
        return Err(Error::Argument("row length differs from the dimension".into()));
    }
    let mut int_rows: Vec<Vec<i128>> = Vec::with_capacity(rows.len());
    for (a, b) in rows {
        let r = integer_row(a, b)?;
        if !int_rows.contains(&r) {
            int_rows.push(r);
        }
    }
    // Lexicographic order tends to keep the intermediate cones small.
    int_rows.sort();
    let cone_dim = dim + 1;
    let total = cone_dim + int_rows.len();
    let words = total.div_ceil(64);
    // Start from the orthant: constraints 0..cone_dim are y_j >= 0.
    let mut rays: Vec<Ray> = (0..cone_dim)
        .map(|j| {
            let mut v = alloc::vec![0i128; cone_dim];
            v[j] = 1;
            let mut zeros = alloc::vec![0u64; words];
            for i in 0..cone_dim {
                if i != j {
                    set_bit(&mut zeros, i);
                }
            }
            Ray { v, zeros }
        })
        .collect();
    for (ri, row) in int_rows.iter().enumerate() {
        let c = cone_dim + ri;
        let values: Vec<i128> = rays.iter().map(|r| eval(row, &r.v)).collect::<Result<_>>()?;
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i] < 0).collect();
        if neg.is_empty() {
            for (i, r) in rays.iter_mut().enumerate() {
                if values[i] == 0 {
                    set_bit(&mut r.zeros, c);
                }
            }
            continue;
        }
        let mut next: Vec<Ray> = Vec::new();
        for (i, r) in rays.iter().enumerate() {
            if values[i] >= 0 {
                let mut r = r.clone();
                if values[i] == 0 {
                    set_bit(&mut r.zeros, c);
                }
                next.push(r);
            }
        }
        for &p in &pos {
            for &n in &neg {
                let common: Vec<u64> = rays[p]
                    .zeros
                    .iter()
                    .zip(&rays[n].zeros)
                    .map(|(a, b)| a & b)
                    .collect();
                let size: u32 = common.iter().map(|w| w.count_ones()).sum();
                if (size as usize) + 2 < cone_dim {
                    continue;
                }
                let blocked = rays.iter().enumerate().any(|(o, r)| {
                    o != p
                        && o != n
                        && r.zeros.iter().zip(&common).all(|(z, c)| z & c == *c)
                });
                if blocked {
                    continue;
                }
                let (vp, vn) = (values[p], -values[n]);
                let mut v = Vec::with_capacity(cone_dim);
                for (a, b) in rays[p].v.iter().zip(&rays[n].v) {
                    let x = vp
                        .checked_mul(*b)
                        .and_then(|x| vn.checked_mul(*a).and_then(|y| x.checked_add(y)))
                        .ok_or_else(overflow)?;
                    v.push(x);
                }
                primitive(&mut v);
                let mut zeros = common;
                set_bit(&mut zeros, c);
                next.push(Ray { v, zeros });
            }
        }
        rays = next;
    }
    let mut vertices = Vec::new();
    let mut directions = Vec::new();
    for r in rays {
        let t = r.v[dim];
        if t > 0 {
            vertices.push(
                r.v[..dim]
                    .iter()
                    .map(|&x| Rational::new(x.into(), t.into()))
                    .collect::<Vec<_>>(),
            );
        } else {
            directions.push(
                r.v[..dim]
                    .iter()
                    .map(|&x| Rational::from_integer(x.into()))
                    .collect::<Vec<_>>(),
            );
        }
    }
    vertices.sort();
    vertices.dedup();
    directions.sort();
    directions.dedup();
    Ok(VertexSet {
        vertices,
        rays: directions,
    })
}

/// Vertices of the partition polyhedron
/// `{x >= 0 : x(δ(P)) >= |P| - 1 for every partition P}`.
pub fn polyhedron_vertices(h: &Hypergraph, lim: &Limits) -> Result<Vec<Vec<Rational>>> {
    let m = h.num_edges();
    if m > lim.max_polyhedron_edges {
        return Err(Error::Capacity {
            what: "edge count for polyhedron vertex enumeration",
            actual: m,
            limit: lim.max_polyhedron_edges,
        });
    }
    lim.check_vertices(h.num_vertices())?;
    let scan = CutScanner::new(h)?;
    // Strongest right-hand side per distinct cut.
    let mut by_cut: BTreeMap<u128, usize> = BTreeMap::new();
    for_each_rgs(h.num_vertices(), |labels, k| {
        if k >= 2 {
            let e = by_cut.entry(scan.cut_mask(labels)).or_insert(0);
            *e = (*e).max(k - 1);
        }
        true
    });
    let rows: Vec<(Vec<Rational>, Rational)> = by_cut
        .into_iter()
        .map(|(mask, rhs)| {
            let a = (0..m)
                .map(|i| Rational::from_integer(((mask >> i & 1) as i64).into()))
                .collect();
            (a, Rational::from_integer(rhs.into()))
        })
        .collect();
    Ok(vertex_enumeration(m, &rows)?.vertices)
}

/// Vertices of `Adm = {ρ >= 0 : g·ρ >= 1 for every member g}`.
pub fn admissible_vertices(dim: usize, members: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    if members.is_empty() {
        return Err(Error::Argument("empty family".into()));
    }
    if members.iter().any(|g| g.iter().any(Signed::is_negative) || g.iter().all(Zero::is_zero)) {
        return Err(Error::Argument(format!(
            "usage vectors must be nonnegative and nonzero (dimension {dim})"
        )));
    }
    let rows: Vec<(Vec<Rational>, Rational)> =
        members.iter().map(|g| (g.clone(), Rational::one())).collect();
    Ok(vertex_enumeration(dim, &rows)?.vertices)
}
