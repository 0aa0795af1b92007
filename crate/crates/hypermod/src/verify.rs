//! The identity battery run by `hypermod verify`.
//!
//! Each check recomputes a quantity two independent ways (or checks a
//! witness) on the given instance. A check that would exceed an enumeration
//! cap is reported as skipped, never as failed.

use std::fmt;

use serde::Serialize;

use hypermod_core::decompose::{
    check_density_extremes, hdp, hsp, is_homogeneous_checked, solve, DecomposeOptions,
};
use hypermod_core::fulkerson::blocker_matches_extremes;
use hypermod_core::matroid::{greedy_rank, is_hyperforest, matroid_arboricity, matroid_strength, rank};
use hypermod_core::metrics::{
    arboricity, arboricity_by_edge_subsets, min_hyperforest_cover, partition_connectivity, strength,
};
use hypermod_core::modulus::{
    duality_pair, family, mod2_mnp, HypertreeFamily, MultitreeFamily, TreeFamily,
};
use hypermod_core::oracle::{
    enumerate_hypertrees, enumerate_multitrees, lp_min, qp_min_norm, strength_by_contractions,
};
use hypermod_core::{to_f64, Error, Hypergraph, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Fail).count()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            writeln!(f, "{tag}  {}: {}", c.name, c.detail)?;
        }
        let count = |s| self.checks.iter().filter(|c| c.status == s).count();
        writeln!(
            f,
            "{} passed, {} failed, {} skipped",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Skipped)
        )
    }
}

enum Outcome {
    Pass(String),
    Fail(String),
    Skip(String),
}

fn verdict(ok: bool, detail: String) -> Result<Outcome, Error> {
    Ok(if ok {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    })
}

fn bell(n: usize) -> f64 {
    // Bell triangle.
    let mut row = vec![1.0f64];
    for _ in 1..n.max(1) {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            next.push(next.last().unwrap() + x);
        }
        row = next;
    }
    *row.last().unwrap()
}

const WORK_LIMIT: f64 = 5e6;
const MEMBER_LIMIT: usize = 5000;

/// Largest number of pairwise disjoint masks, or `None` past the node budget.
fn max_packing(masks: &[u64], budget: &mut u64) -> Option<usize> {
    fn go(masks: &[u64], from: usize, used: u64, budget: &mut u64) -> Option<usize> {
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        let mut best = 0;
        for i in from..masks.len() {
            if masks[i] & used == 0 {
                best = best.max(1 + go(masks, i + 1, used | masks[i], budget)?);
            }
        }
        Some(best)
    }
    go(masks, 0, 0, budget)
}

struct Battery {
    checks: Vec<Check>,
}

impl Battery {
    fn run(&mut self, name: &'static str, f: impl FnOnce() -> Result<Outcome, Error>) {
        let (status, detail) = match f() {
            Ok(Outcome::Pass(d)) => (Status::Pass, d),
            Ok(Outcome::Fail(d)) => (Status::Fail, d),
            Ok(Outcome::Skip(d)) => (Status::Skipped, d),
            Err(e @ Error::Capacity { .. }) => (Status::Skipped, e.to_string()),
            Err(e) => (Status::Fail, e.to_string()),
        };
        self.checks.push(Check { name, status, detail });
    }
}

fn lp_value(members: Vec<Vec<Rational>>, weights: &[Rational]) -> Result<Rational, Error> {
    let rows: Vec<(Vec<Rational>, Rational)> = members
        .into_iter()
        .map(|g| (g, Rational::from_integer(1.into())))
        .collect();
    Ok(lp_min(weights, &rows)?.value)
}

/// Runs every identity that applies to `h`; edge weights of `h` (1 where
/// absent) are used by the weighted checks.
pub fn battery(h: &Hypergraph, opts: &DecomposeOptions) -> VerifyReport {
    let lim = &opts.limits;
    let n = h.num_vertices();
    let m = h.num_edges();
    let sigma = h.weights();
    let ones = vec![Rational::from_integer(1.into()); m];
    let connected = h.is_connected() && n >= 2;
    let k = if connected { partition_connectivity(h, lim).ok() } else { Some(0) };
    let pc = k.is_some_and(|k| k >= 1);
    let mut b = Battery { checks: Vec::new() };
    let disconnected = || Ok(Outcome::Skip("needs a connected hypergraph with two or more vertices".into()));
    let not_pc = || Ok(Outcome::Skip("not partition-connected (k = 0): there are no hypertrees".into()));

    b.run("rank: partition formula equals greedy hyperforest size on every edge subset", || {
        let work = (m as f64).exp2() * bell(n);
        if work > WORK_LIMIT {
            return Ok(Outcome::Skip(format!("{work:.0} partition-subset pairs exceed {WORK_LIMIT:.0}")));
        }
        for mask in 0usize..1 << m {
            let f: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            let (a, g) = (rank(h, &f, lim)?, greedy_rank(h, &f, lim)?);
            if a != g {
                return Ok(Outcome::Fail(format!("edge subset {f:?}: formula {a}, greedy {g}")));
            }
        }
        Ok(Outcome::Pass(format!("{} subsets, r(E) = {}", 1usize << m, rank(h, &(0..m).collect::<Vec<_>>(), lim)?)))
    });

    b.run("strength: partition minimum equals minimum density over contractions", || {
        if !connected {
            return disconnected();
        }
        let (s, c) = (strength(h, None, lim)?.value, strength_by_contractions(h, lim)?);
        verdict(s == c, format!("S = {s}, contractions give {c}"))
    });

    b.run("arboricity: vertex-set maximum equals edge-subset maximum", || {
        if m == 0 {
            return Ok(Outcome::Skip("no edges".into()));
        }
        let (d, e) = (arboricity(h, lim)?.value, arboricity_by_edge_subsets(h, lim)?);
        verdict(d == e, format!("D = {d}, edge subsets give {e}"))
    });

    b.run("packing: most disjoint hypertrees equals partition-connectivity k", || {
        if !connected {
            return disconnected();
        }
        let k = partition_connectivity(h, lim)?;
        let trees = enumerate_hypertrees(h, lim)?;
        if trees.len() > MEMBER_LIMIT {
            return Ok(Outcome::Skip(format!("{} hypertrees exceed {MEMBER_LIMIT}", trees.len())));
        }
        let masks: Vec<u64> = trees
            .members()
            .iter()
            .map(|g| g.iter().enumerate().filter(|(_, x)| **x > Rational::default()).fold(0, |a, (i, _)| a | 1 << i))
            .collect();
        let mut budget = 2_000_000;
        let Some(best) = max_packing(&masks, &mut budget) else {
            return Ok(Outcome::Skip("packing search budget exhausted".into()));
        };
        verdict(best as u64 == k, format!("k = {k}, largest disjoint packing {best} of {} hypertrees", masks.len()))
    });

    b.run("covering: fewest hyperforests equals the ceiling of D", || {
        if m == 0 {
            return Ok(Outcome::Skip("no edges".into()));
        }
        let d = arboricity(h, lim)?.value;
        let (count, cover) = min_hyperforest_cover(h, lim)?;
        let mut seen = vec![0u32; m];
        for forest in &cover.forests {
            let mut x = vec![0u32; m];
            for &e in forest {
                x[e] += 1;
                seen[e] += 1;
            }
            if !is_hyperforest(h, &x, lim)? {
                return Ok(Outcome::Fail(format!("cover part {forest:?} is not a hyperforest")));
            }
        }
        let ceil = d.ceil().to_integer();
        let ok = seen.iter().all(|&c| c == 1)
            && cover.forests.len() as u64 == count
            && Rational::from_integer(count.into()) == Rational::from_integer(ceil.clone());
        verdict(ok, format!("D = {d}, cover with {count} hyperforests"))
    });

    b.run("Mod_1 of multi-trees equals the weighted strength", || {
        if !connected {
            return disconnected();
        }
        let s = strength(h, Some(&sigma), lim)?.value;
        let members = enumerate_multitrees(h, n as u32, lim)?;
        if members.len() > MEMBER_LIMIT {
            return Ok(Outcome::Skip(format!("{} multi-trees exceed {MEMBER_LIMIT}", members.len())));
        }
        let v = lp_value(members.members().to_vec(), &sigma)?;
        verdict(v == s, format!("LP over {} multi-trees gives {v}, S_σ = {s}", members.len()))
    });

    b.run("Mod_1 of hypertrees equals the matroid strength", || {
        if !connected {
            return disconnected();
        }
        if !pc {
            return not_pc();
        }
        let s = matroid_strength(h, &sigma, lim)?.0;
        let members = enumerate_hypertrees(h, lim)?;
        if members.len() > MEMBER_LIMIT {
            return Ok(Outcome::Skip(format!("{} hypertrees exceed {MEMBER_LIMIT}", members.len())));
        }
        let v = lp_value(members.members().to_vec(), &sigma)?;
        verdict(v == s, format!("LP over {} hypertrees gives {v}, s_σ(M) = {s}", members.len()))
    });

    b.run("matroid strength equals S when partition-connected and exceeds it otherwise", || {
        if !connected {
            return disconnected();
        }
        let s = strength(h, None, lim)?.value;
        let sm = matroid_strength(h, &ones, lim)?.0;
        if pc {
            verdict(sm == s, format!("s(M) = {sm}, S = {s}"))
        } else {
            verdict(sm > s, format!("s(M) = {sm} > S = {s}"))
        }
    });

    b.run("matroid arboricity equals D when partition-connected", || {
        if !connected {
            return disconnected();
        }
        if !pc {
            return not_pc();
        }
        let (dm, d) = (matroid_arboricity(h, lim)?.0, arboricity(h, lim)?.value);
        verdict(dm == d, format!("D(M) = {dm}, D = {d}"))
    });

    b.run("blocker of multi-trees equals the extreme points of the admissible set", || {
        if !connected {
            return disconnected();
        }
        let r = blocker_matches_extremes(h, lim)?;
        let detail = format!(
            "{} blocker elements, {} polyhedron vertices, {} multi-trees",
            r.blocker.len(),
            r.polyhedron_vertices.len(),
            r.multitrees.len()
        );
        if r.passed() {
            Ok(Outcome::Pass(detail))
        } else {
            Ok(Outcome::Fail(format!("{detail}; {}", r.failures.join("; "))))
        }
    });

    let sigma_f: Vec<f64> = sigma.iter().map(to_f64).collect();
    for (kind, name) in [
        (TreeFamily::Multitree, "Mod_2 solver matches the reference quadratic program (multi-trees)"),
        (TreeFamily::Tree, "Mod_2 solver matches the reference quadratic program (hypertrees)"),
    ] {
        let sigma_f = &sigma_f;
        let sigma = &sigma;
        b.run(name, || {
            if !connected {
                return disconnected();
            }
            if kind == TreeFamily::Tree && !pc {
                return not_pc();
            }
            let fam = family(h, kind, lim)?;
            let members = fam.members(lim)?;
            if members.len() > MEMBER_LIMIT {
                return Ok(Outcome::Skip(format!("{} members exceed {MEMBER_LIMIT}", members.len())));
            }
            let res = mod2_mnp(fam.as_ref(), sigma_f, &opts.solver)?;
            let qp = qp_min_norm(&members, sigma)?;
            let dual = res.dual_value.as_ref().map_or(f64::NAN, |d| d.to_f64());
            let err = (dual - qp.value).abs();
            duality_pair(&res, sigma_f, opts.check_tol)?;
            verdict(
                err <= opts.check_tol,
                format!("dual {dual:.10} vs reference {:.10} over {} members", qp.value, members.len()),
            )
        });
    }

    b.run("η* of hypertrees and multi-trees agree", || {
        if !connected {
            return disconnected();
        }
        if !pc {
            return not_pc();
        }
        let a = solve(h, TreeFamily::Tree, opts)?.eta;
        let c = solve(h, TreeFamily::Multitree, opts)?.eta;
        let err = a.values.iter().zip(&c.values).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max);
        verdict(err <= opts.check_tol, format!("largest entry difference {err:e}"))
    });

    b.run("extreme values of the multi-tree η* are 1/S and 1/D", || {
        if !connected {
            return disconnected();
        }
        let r = check_density_extremes(h, opts)?;
        verdict(
            r.passed(opts.check_tol),
            format!(
                "S = {}, D = {}, 1/η_max = {:.10}, 1/η_min = {:.10}",
                r.strength,
                r.arboricity,
                1.0 / r.eta_max,
                1.0 / r.eta_min
            ),
        )
    });

    b.run("homogeneous exactly when the multi-tree η* is constant", || {
        if !connected {
            return disconnected();
        }
        let hom = is_homogeneous_checked(h, opts)?;
        Ok(Outcome::Pass(format!("homogeneous: {hom}")))
    });

    for (kind, name) in [
        (TreeFamily::Multitree, "decomposition splits are additive and leaves have S = D (multi-trees)"),
        (TreeFamily::Tree, "decomposition splits are additive and leaves have S = D (hypertrees)"),
    ] {
        b.run(name, || {
            if !connected {
                return disconnected();
            }
            if kind == TreeFamily::Tree && !pc {
                return not_pc();
            }
            let root = hdp(h, kind, opts).map_err(|e| e.error)?;
            let worst = root
                .walk()
                .iter()
                .flat_map(|n| [n.additivity_error, n.restriction_error])
                .flatten()
                .fold(0.0, f64::max);
            Ok(Outcome::Pass(format!(
                "{} nodes, depth {}, largest split error {worst:e}",
                root.walk().len(),
                root.depth()
            )))
        });
    }

    b.run("shrinking ends at a homogeneous hypergraph", || {
        if !connected {
            return disconnected();
        }
        let steps = hsp(h, TreeFamily::Multitree, opts)?;
        Ok(Outcome::Pass(format!("{} step(s)", steps.len())))
    });

    b.run("parallel copies: Mod_2 of multi-trees equals Mod_2 of hypertrees of H^t over t", || {
        if !connected {
            return disconnected();
        }
        if n > 4 {
            return Ok(Outcome::Skip("needs at most four vertices".into()));
        }
        let big = h.without_weights().parallelize(n)?;
        let gamma = HypertreeFamily::new(&big.hypergraph, lim)?;
        let omega = MultitreeFamily::new(&h.without_weights(), lim)?;
        let a = mod2_mnp(&omega, &vec![1.0; m], &opts.solver)?.value_f64();
        let t = mod2_mnp(&gamma, &vec![1.0; big.hypergraph.num_edges()], &opts.solver)?.value_f64();
        let err = (a - t / n as f64).abs();
        verdict(err <= opts.check_tol, format!("t = {n}: {a:.10} vs {:.10}", t / n as f64))
    });

    VerifyReport { checks: b.checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing() {
        let mut budget = 1000;
        assert_eq!(max_packing(&[0b011, 0b110, 0b100, 0b001], &mut budget), Some(2));
        assert_eq!(bell(4), 15.0);
        assert_eq!(bell(1), 1.0);
    }
}
