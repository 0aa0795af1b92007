//! Level sets of the optimal dual density and the decompositions they drive.
//!
//! With `η*` the minimum-norm point of the family's hull, the edges where
//! `η*` is largest form the cut `δ(P)` of a feasible partition. Removing
//! them splits the problem into the shrunk hypergraph `H/(E ∖ E_max)` and
//! the components of `H[E ∖ E_max]` (the serial rule). Repeating until
//! every piece has constant `η*` is the decomposition process; contracting
//! the bottom level set instead is the shrinking process. Along the way
//! `η*_max = 1/S` and `η*_min = 1/D` are checked against the exact values.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::hypergraph::{EdgeId, EdgeVector, Hypergraph};
use crate::metrics::{arboricity, is_k_partition_connected, strength};
use crate::modulus::{family, mod2_mnp, SolverOptions, TreeFamily};
use crate::partitions::Partition;
use crate::{snap_rational, to_f64, Error, Limits, Rational, Result};

/// Tolerances for a decomposition run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecomposeOptions {
    pub solver: SolverOptions,
    /// Values of `η*` closer than this belong to one level.
    pub cluster_tol: f64,
    /// Tolerance for the identities checked at every split.
    pub check_tol: f64,
    pub limits: Limits,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        Self {
            solver: SolverOptions::default(),
            cluster_tol: 1e-5,
            check_tol: 1e-6,
            limits: Limits::default(),
        }
    }
}

/// One level set of `η*`, highest first.
#[derive(Debug, Clone, PartialEq)]
pub struct Level {
    /// Mean of the clustered values.
    pub value: f64,
    /// Small-denominator rational within the cluster tolerance, if any.
    pub exact: Option<Rational>,
    pub edges: Vec<EdgeId>,
}

const SNAP_DENOMINATOR: u64 = 10_000;

/// Clusters the entries of `eta` into levels, sorted by value descending.
///
/// Sorted neighbours at most `cluster_tol` apart share a level. A gap
/// between levels below `10 · cluster_tol` is reported as an accuracy error
/// since the split cannot be trusted.
pub fn extract_levels(eta: &EdgeVector<f64>, cluster_tol: f64) -> Result<Vec<Level>> {
    if !(cluster_tol > 0.0) {
        return Err(Error::Argument("cluster tolerance must be positive".into()));
    }
    if eta.values.is_empty() {
        return Ok(Vec::new());
    }
    let mut order: Vec<usize> = (0..eta.values.len()).collect();
    order.sort_by(|&a, &b| eta.values[b].total_cmp(&eta.values[a]).then(a.cmp(&b)));
    let mut groups: Vec<Vec<usize>> = alloc::vec![alloc::vec![order[0]]];
    for w in order.windows(2) {
        let gap = eta.values[w[0]] - eta.values[w[1]];
        if gap <= cluster_tol {
            groups.last_mut().expect("nonempty").push(w[1]);
        } else if gap <= 10.0 * cluster_tol {
            return Err(Error::Accuracy(format!(
                "η* values {} and {} are {gap:e} apart, too close to separate at cluster tolerance \
                 {cluster_tol:e}; tighten the solver tolerance",
                eta.values[w[0]], eta.values[w[1]]
            )));
        } else {
            groups.push(alloc::vec![w[1]]);
        }
    }
    Ok(groups
        .into_iter()
        .map(|mut g| {
            g.sort_unstable();
            let value = g.iter().map(|&i| eta.values[i]).sum::<f64>() / g.len() as f64;
            let q = snap_rational(value, SNAP_DENOMINATOR);
            let exact = ((to_f64(&q) - value).abs() <= cluster_tol).then_some(q);
            Level {
                value,
                exact,
                edges: g.iter().map(|&i| eta.ids[i].clone()).collect(),
            }
        })
        .collect())
}

/// `S(H) = D(H)`, exactly.
pub fn is_homogeneous(h: &Hypergraph, lim: &Limits) -> Result<bool> {
    Ok(strength(h, None, lim)?.value == arboricity(h, lim)?.value)
}

/// [`is_homogeneous`], cross-checked against the constancy of `η*` for the
/// multi-tree family; disagreement is a consistency error.
pub fn is_homogeneous_checked(h: &Hypergraph, opts: &DecomposeOptions) -> Result<bool> {
    let exact = is_homogeneous(h, &opts.limits)?;
    let solved = solve(h, TreeFamily::Multitree, opts)?;
    let constant = extract_levels(&solved.eta, opts.cluster_tol)?.len() == 1;
    if exact != constant {
        return Err(Error::Consistency(format!(
            "S = D is {exact} but η* is {}constant",
            if constant { "" } else { "not " }
        )));
    }
    Ok(exact)
}

/// Dual minimum and optimal density of a unit-weight 2-modulus solve.
#[derive(Debug, Clone, PartialEq)]
pub struct Solved {
    pub dual: f64,
    pub eta: EdgeVector<f64>,
    pub gap: f64,
}

/// Solves the unit-weight 2-modulus problem of `h`'s family.
pub fn solve(h: &Hypergraph, kind: TreeFamily, opts: &DecomposeOptions) -> Result<Solved> {
    let fam = family(h, kind, &opts.limits)?;
    let weights = alloc::vec![1.0; h.num_edges()];
    let res = mod2_mnp(fam.as_ref(), &weights, &opts.solver)?;
    Ok(Solved {
        dual: res.dual_value.expect("2-modulus has a dual").to_f64(),
        eta: res.eta_star.expect("2-modulus has a density"),
        gap: res.gap,
    })
}

/// Result of removing the top level set.
#[derive(Debug, Clone, PartialEq)]
pub struct SerialSplit {
    /// `H/(E ∖ E_max)`; its edges are exactly `E_max`.
    pub shrunk: Hypergraph,
    /// Components of `H[E ∖ E_max]` with at least two vertices.
    pub parts: Vec<Hypergraph>,
    /// Names of vertices left isolated.
    pub isolated: Vec<String>,
    /// Edge positions of `E_max`.
    pub e_max: Vec<usize>,
    /// Vertex sets of the components; `E_max` is its cut.
    pub partition: Partition,
    pub level: Level,
}

/// The serial rule: removes `E_max` and checks that it is the cut of the
/// partition into components of what is left.
pub fn serial_split(
    h: &Hypergraph,
    kind: TreeFamily,
    eta: &EdgeVector<f64>,
    opts: &DecomposeOptions,
) -> Result<SerialSplit> {
    if eta.ids != h.edge_ids() {
        return Err(Error::Argument("density is over a different edge set".into()));
    }
    let levels = extract_levels(eta, opts.cluster_tol)?;
    if levels.len() < 2 {
        return Err(Error::Argument("η* is constant; there is nothing to split".into()));
    }
    let top = levels.into_iter().next().expect("two levels");
    let ids: Vec<&str> = top.edges.iter().map(String::as_str).collect();
    let e_max = h.edge_positions(&ids)?;
    let rest: Vec<usize> = (0..h.num_edges()).filter(|i| !e_max.contains(i)).collect();
    let (labels, _) = h.spanning_subgraph(&rest).component_labels();
    let partition = Partition::from_labels(h, &labels)?;
    if partition.cut() != e_max.as_slice() {
        return Err(Error::Accuracy(format!(
            "top level set {:?} is not the cut of the components it leaves",
            top.edges
        )));
    }
    let mut parts = Vec::new();
    let mut isolated = Vec::new();
    for class in partition.classes() {
        if class.len() == 1 {
            isolated.push(h.vertices()[class[0]].clone());
            continue;
        }
        let part = h.induced_by_vertices(class)?;
        if kind == TreeFamily::Tree && !is_k_partition_connected(&part, 1, &opts.limits)? {
            return Err(Error::Accuracy(format!(
                "component {:?} of the top-level removal is not partition-connected",
                class.iter().map(|&v| h.vertices()[v].as_str()).collect::<Vec<_>>()
            )));
        }
        parts.push(part);
    }
    Ok(SerialSplit {
        shrunk: h.contract(&rest),
        parts,
        isolated,
        e_max,
        partition,
        level: top,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    /// `η*` is constant and `S = D`.
    Homogeneous,
    /// The top level set was removed; see the children.
    Split,
    /// A vertex left without edges; homogeneous by convention.
    Isolated,
    /// Work on this node stopped with an error.
    Unresolved,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Root,
    /// `H/(E ∖ E_max)` of the parent.
    Shrunk,
    /// A component of `H[E ∖ E_max]` of the parent.
    Component,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionNode {
    pub hypergraph: Hypergraph,
    pub kind: NodeKind,
    pub provenance: Provenance,
    /// The parent's removed level, absent at the root.
    pub eta_level: Option<Level>,
    pub strength: Option<Rational>,
    pub arboricity: Option<Rational>,
    /// Minimum of `Σ η²` over the hull, i.e. the dual 2-modulus.
    pub dual_modulus: Option<f64>,
    pub eta: Option<EdgeVector<f64>>,
    /// At a split: `|dual(H) - Σ dual(children)|`.
    pub additivity_error: Option<f64>,
    /// At a split: largest `|η*_H(e) - η*_child(e)|`.
    pub restriction_error: Option<f64>,
    pub children: Vec<DecompositionNode>,
}

impl DecompositionNode {
    fn new(h: Hypergraph, provenance: Provenance, eta_level: Option<Level>) -> Self {
        Self {
            hypergraph: h,
            kind: NodeKind::Unresolved,
            provenance,
            eta_level,
            strength: None,
            arboricity: None,
            dual_modulus: None,
            eta: None,
            additivity_error: None,
            restriction_error: None,
            children: Vec::new(),
        }
    }

    /// Nodes in depth-first preorder.
    pub fn walk(&self) -> Vec<&DecompositionNode> {
        let mut out = alloc::vec![self];
        for c in &self.children {
            out.extend(c.walk());
        }
        out
    }

    pub fn leaves(&self) -> Vec<&DecompositionNode> {
        self.walk().into_iter().filter(|n| n.children.is_empty()).collect()
    }

    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(|c| c.depth()).max().unwrap_or(0)
    }
}

/// A decomposition that stopped early, with the tree built so far.
#[derive(Debug, Clone, PartialEq)]
pub struct DecomposeError {
    pub error: Error,
    pub partial: DecompositionNode,
}

impl core::fmt::Display for DecomposeError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        self.error.fmt(f)
    }
}

fn reciprocal(q: &Rational) -> f64 {
    1.0 / to_f64(q)
}

fn near(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + b.abs())
}

fn fill(node: &mut DecompositionNode, kind: TreeFamily, opts: &DecomposeOptions) -> Result<()> {
    let lim = &opts.limits;
    let h = node.hypergraph.clone();
    let s = strength(&h, None, lim)?.value;
    let d = arboricity(&h, lim)?.value;
    node.strength = Some(s.clone());
    node.arboricity = Some(d.clone());
    let solved = solve(&h, kind, opts)?;
    node.dual_modulus = Some(solved.dual);
    node.eta = Some(solved.eta.clone());
    let levels = extract_levels(&solved.eta, opts.cluster_tol)?;
    let top = levels[0].value;
    if !near(top, reciprocal(&s), opts.check_tol) {
        return Err(Error::Accuracy(format!("η*_max = {top} but 1/S = {}", reciprocal(&s))));
    }
    if levels.len() == 1 {
        if s != d {
            return Err(Error::Consistency(format!(
                "η* is constant but S = {s} differs from D = {d}"
            )));
        }
        node.kind = NodeKind::Homogeneous;
        return Ok(());
    }
    if s == d {
        return Err(Error::Accuracy(format!(
            "S = D = {s} but η* has {} levels",
            levels.len()
        )));
    }
    let split = serial_split(&h, kind, &solved.eta, opts)?;
    let level = split.level.clone();
    let mut children = Vec::new();
    children.push(DecompositionNode::new(split.shrunk.clone(), Provenance::Shrunk, Some(level.clone())));
    for p in &split.parts {
        children.push(DecompositionNode::new(p.clone(), Provenance::Component, Some(level.clone())));
    }
    for v in &split.isolated {
        let single = Hypergraph::new(alloc::vec![v.clone()], Vec::new())?;
        let mut n = DecompositionNode::new(single, Provenance::Component, Some(level.clone()));
        n.kind = NodeKind::Isolated;
        children.push(n);
    }
    node.kind = NodeKind::Split;
    node.children = children;
    Ok(())
}

fn split_checks(node: &mut DecompositionNode, opts: &DecomposeOptions) -> Result<()> {
    let s = node.strength.clone().expect("filled");
    let shrunk_s = node.children[0].strength.clone().expect("filled");
    if shrunk_s != s {
        return Err(Error::Consistency(format!(
            "S(H) = {s} differs from S(H/(E ∖ E_max)) = {shrunk_s}"
        )));
    }
    let eta = node.eta.as_ref().expect("filled");
    let mut sum = 0.0;
    let mut worst: f64 = 0.0;
    for c in node.children.iter().filter(|c| c.kind != NodeKind::Isolated) {
        sum += c.dual_modulus.expect("filled");
        for (id, v) in c.eta.as_ref().expect("filled").iter() {
            let parent = eta.get(id).ok_or_else(|| {
                Error::Consistency(format!("child edge {id} is not an edge of the parent"))
            })?;
            worst = worst.max((parent - v).abs());
        }
    }
    let additivity = (node.dual_modulus.expect("filled") - sum).abs();
    node.additivity_error = Some(additivity);
    node.restriction_error = Some(worst);
    if additivity > opts.check_tol {
        return Err(Error::Accuracy(format!(
            "dual modulus {} is not the sum {sum} over the split",
            node.dual_modulus.expect("filled")
        )));
    }
    if worst > opts.check_tol {
        return Err(Error::Accuracy(format!(
            "restriction of η* differs from a child's η* by {worst:e}"
        )));
    }
    Ok(())
}

fn build(node: &mut DecompositionNode, kind: TreeFamily, opts: &DecomposeOptions) -> Result<()> {
    if node.kind == NodeKind::Isolated {
        return Ok(());
    }
    fill(node, kind, opts)?;
    if node.kind != NodeKind::Split {
        return Ok(());
    }
    for c in node.children.iter_mut() {
        build(c, kind, opts)?;
    }
    split_checks(node, opts)
}

fn check_input(h: &Hypergraph, kind: TreeFamily, lim: &Limits) -> Result<()> {
    if h.num_vertices() < 2 || !h.is_connected() {
        return Err(Error::Argument("decomposition needs a connected hypergraph".into()));
    }
    if kind == TreeFamily::Tree && !is_k_partition_connected(h, 1, lim)? {
        return Err(Error::Infeasible(
            "the hypertree family is empty: the hypergraph is not partition-connected".into(),
        ));
    }
    Ok(())
}

/// The decomposition process: split off the top level set until every
/// piece has constant `η*`. At each split the shrunk child keeps the
/// parent's strength, the dual moduli add up and the parent's `η*`
/// restricts to each child's; every leaf has `S = D`.
pub fn hdp(
    h: &Hypergraph,
    kind: TreeFamily,
    opts: &DecomposeOptions,
) -> core::result::Result<DecompositionNode, DecomposeError> {
    let mut root = DecompositionNode::new(h.clone(), Provenance::Root, None);
    let outcome = check_input(h, kind, &opts.limits).and_then(|()| build(&mut root, kind, opts));
    match outcome {
        Ok(()) => Ok(root),
        Err(error) => Err(DecomposeError {
            error,
            partial: root,
        }),
    }
}

/// One step of the shrinking process.
#[derive(Debug, Clone, PartialEq)]
pub struct ShrinkStep {
    /// The bottom level removed.
    pub level: Level,
    /// Homogeneous cores: components of `H[E_min]`, vertex-induced.
    pub cores: Vec<Hypergraph>,
    /// `H` with every core contracted.
    pub shrunk: Hypergraph,
    /// `|dual(H) - dual(shrunk) - Σ dual(cores)|`.
    pub additivity_error: f64,
}

/// The shrinking process: contract the homogeneous cores of the bottom
/// level set until `η*` is constant. Empty for a homogeneous input. The
/// last hypergraph `L` satisfies `η*_max = 1/S(L) = 1/D(L)`.
pub fn hsp(h: &Hypergraph, kind: TreeFamily, opts: &DecomposeOptions) -> Result<Vec<ShrinkStep>> {
    let lim = &opts.limits;
    check_input(h, kind, lim)?;
    let mut steps = Vec::new();
    let mut cur = h.clone();
    loop {
        let solved = solve(&cur, kind, opts)?;
        let levels = extract_levels(&solved.eta, opts.cluster_tol)?;
        if levels.len() == 1 {
            let s = strength(&cur, None, lim)?.value;
            let d = arboricity(&cur, lim)?.value;
            if s != d || !near(levels[0].value, reciprocal(&s), opts.check_tol) {
                return Err(Error::Consistency(format!(
                    "final hypergraph has S = {s}, D = {d}, η* = {}",
                    levels[0].value
                )));
            }
            return Ok(steps);
        }
        let bottom = levels.last().expect("two levels").clone();
        let ids: Vec<&str> = bottom.edges.iter().map(String::as_str).collect();
        let e_min = cur.edge_positions(&ids)?;
        let d = arboricity(&cur, lim)?.value;
        if !near(bottom.value, reciprocal(&d), opts.check_tol) {
            return Err(Error::Accuracy(format!(
                "η*_min = {} but 1/D = {}",
                bottom.value,
                reciprocal(&d)
            )));
        }
        let sub = cur.spanning_subgraph(&e_min);
        let mut cores = Vec::new();
        let mut dual_sum = 0.0;
        for class in sub.component_vertex_sets().into_iter().filter(|c| c.len() > 1) {
            let core = cur.induced_by_vertices(&class)?;
            let inside: Vec<&str> = core.edges().iter().map(|e| e.id.as_str()).collect();
            if inside.iter().any(|id| !ids.contains(id)) {
                return Err(Error::Accuracy(format!(
                    "core on {:?} is not vertex-induced by the bottom level",
                    class.iter().map(|&v| cur.vertices()[v].as_str()).collect::<Vec<_>>()
                )));
            }
            let cs = strength(&core, None, lim)?.value;
            if cs != arboricity(&core, lim)?.value || !near(bottom.value, reciprocal(&cs), opts.check_tol)
            {
                return Err(Error::Accuracy(format!(
                    "core on {:?} is not homogeneous at level {}",
                    class.iter().map(|&v| cur.vertices()[v].as_str()).collect::<Vec<_>>(),
                    bottom.value
                )));
            }
            dual_sum += solve(&core, kind, opts)?.dual;
            cores.push(core);
        }
        let shrunk = cur.contract(&e_min);
        dual_sum += solve(&shrunk, kind, opts)?.dual;
        let additivity_error = (solved.dual - dual_sum).abs();
        if additivity_error > opts.check_tol {
            return Err(Error::Accuracy(format!(
                "dual modulus {} is not the sum {dual_sum} over the shrink",
                solved.dual
            )));
        }
        steps.push(ShrinkStep {
            level: bottom,
            cores,
            shrunk: shrunk.clone(),
            additivity_error,
        });
        cur = shrunk;
    }
}

/// Comparison of the extreme values of `η̃*` (multi-tree family) with the
/// exact strength and fractional arboricity.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityExtremes {
    pub strength: Rational,
    pub arboricity: Rational,
    pub eta_max: f64,
    pub eta_min: f64,
    /// `|1/η̃*_max - S|`.
    pub strength_error: f64,
    /// `|1/η̃*_min - D|`.
    pub arboricity_error: f64,
    /// `|E_max| / (|P| - 1) = S` for `P` the components of `H - E_max`.
    pub e_max_attains_strength: bool,
    /// Every component `K` of `H[E_min]` has `|E(K)| / (|V(K)| - 1) = D`.
    pub e_min_attains_arboricity: bool,
}

impl DensityExtremes {
    pub fn passed(&self, tol: f64) -> bool {
        self.strength_error <= tol
            && self.arboricity_error <= tol
            && self.e_max_attains_strength
            && self.e_min_attains_arboricity
    }
}

/// Checks `S(H) = 1/η̃*_max` and `D(H) = 1/η̃*_min` for the multi-tree
/// family, and that the extreme level sets attain both optima.
pub fn check_density_extremes(h: &Hypergraph, opts: &DecomposeOptions) -> Result<DensityExtremes> {
    let lim = &opts.limits;
    check_input(h, TreeFamily::Multitree, lim)?;
    let s = strength(h, None, lim)?.value;
    let d = arboricity(h, lim)?.value;
    let solved = solve(h, TreeFamily::Multitree, opts)?;
    let levels = extract_levels(&solved.eta, opts.cluster_tol)?;
    let top = &levels[0];
    let bottom = levels.last().expect("nonempty");
    let eta_max = solved.eta.values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let eta_min = solved.eta.values.iter().copied().fold(f64::INFINITY, f64::min);

    let positions = |l: &Level| -> Result<Vec<usize>> {
        h.edge_positions(&l.edges.iter().map(String::as_str).collect::<Vec<_>>())
    };
    let e_max = positions(top)?;
    let rest: Vec<usize> = (0..h.num_edges()).filter(|i| !e_max.contains(i)).collect();
    let (labels, k) = h.spanning_subgraph(&rest).component_labels();
    let p = Partition::from_labels(h, &labels)?;
    let e_max_attains_strength = k >= 2
        && p.cut() == e_max.as_slice()
        && Rational::new((e_max.len() as i64).into(), ((k - 1) as i64).into()) == s;
    let e_min = positions(bottom)?;
    let sub = h.spanning_subgraph(&e_min);
    let (comp, _) = sub.component_labels();
    let cores: Vec<Vec<usize>> = sub.component_vertex_sets().into_iter().filter(|c| c.len() > 1).collect();
    let e_min_attains_arboricity = cores.iter().all(|c| {
        let inside = e_min.iter().filter(|&&e| comp[h.edge(e).members[0]] == comp[c[0]]).count();
        Rational::new((inside as i64).into(), ((c.len() - 1) as i64).into()) == d
    });

    Ok(DensityExtremes {
        strength_error: (1.0 / eta_max - to_f64(&s)).abs(),
        arboricity_error: (1.0 / eta_min - to_f64(&d)).abs(),
        strength: s,
        arboricity: d,
        eta_max,
        eta_min,
        e_max_attains_strength,
        e_min_attains_arboricity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{catalog, ratio};

    fn opts() -> DecomposeOptions {
        DecomposeOptions::default()
    }

    fn ev(ids: &[&str], values: &[f64]) -> EdgeVector<f64> {
        EdgeVector {
            ids: ids.iter().map(|s| String::from(*s)).collect(),
            values: values.to_vec(),
        }
    }

    #[test]
    fn level_extraction() {
        let l = extract_levels(&ev(&["a", "b", "c"], &[1.0, 2.0, 1.0 + 1e-7]), 1e-5).unwrap();
        assert_eq!(l.len(), 2);
        assert_eq!(l[0].exact, Some(ratio(2, 1)));
        assert_eq!(l[1].edges, ["a", "c"]);
        let l = extract_levels(&ev(&["a", "b"], &[0.6, 0.6]), 1e-5).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l[0].exact, Some(ratio(3, 5)));
        assert!(matches!(
            extract_levels(&ev(&["a", "b"], &[1.0, 1.0 + 5e-5]), 1e-5),
            Err(Error::Accuracy(_))
        ));
    }

    #[test]
    fn homogeneity() {
        let lim = Limits::default();
        assert!(is_homogeneous(&catalog::triangle(), &lim).unwrap());
        assert!(is_homogeneous(&catalog::double_triple(), &lim).unwrap());
        assert!(!is_homogeneous(&catalog::triple_with_tail(), &lim).unwrap());
        assert!(is_homogeneous_checked(&catalog::triangle(), &opts()).unwrap());
        assert!(!is_homogeneous_checked(&catalog::triple_with_tail(), &opts()).unwrap());
    }

    #[test]
    fn serial_rule_on_the_tail_example() {
        let h = catalog::triple_with_tail();
        let eta = solve(&h, TreeFamily::Multitree, &opts()).unwrap().eta;
        let s = serial_split(&h, TreeFamily::Multitree, &eta, &opts()).unwrap();
        assert_eq!(s.shrunk.num_vertices(), 3);
        assert_eq!(s.shrunk.edge_ids(), ["e1"]);
        assert_eq!(s.parts.len(), 1);
        assert_eq!(s.parts[0].edge_ids(), ["e2"]);
        assert_eq!(s.isolated, ["v1", "v2"]);
        let flat = ev(&["e1", "e2"], &[1.0, 1.0]);
        assert!(serial_split(&h, TreeFamily::Multitree, &flat, &opts()).is_err());
    }

    #[test]
    fn decomposition_of_the_tail_example() {
        let t = hdp(&catalog::triple_with_tail(), TreeFamily::Multitree, &opts()).unwrap();
        assert_eq!(t.kind, NodeKind::Split);
        let kinds: Vec<NodeKind> = t.children.iter().map(|c| c.kind).collect();
        assert_eq!(
            kinds,
            [NodeKind::Homogeneous, NodeKind::Homogeneous, NodeKind::Isolated, NodeKind::Isolated]
        );
        assert_eq!(t.children[0].strength, Some(ratio(1, 2)));
        assert_eq!(t.children[1].strength, Some(ratio(1, 1)));
        let leaf = hdp(&catalog::triangle(), TreeFamily::Tree, &opts()).unwrap();
        assert_eq!(leaf.kind, NodeKind::Homogeneous);
        assert!(leaf.children.is_empty());
    }

    #[test]
    fn shrinking() {
        let steps = hsp(&catalog::triple_with_tail(), TreeFamily::Multitree, &opts()).unwrap();
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].cores[0].edge_ids(), ["e2"]);
        assert_eq!(steps[0].shrunk.num_vertices(), 3);
        assert!(hsp(&catalog::triangle(), TreeFamily::Tree, &opts()).unwrap().is_empty());
        let steps = hsp(&catalog::triangle_with_pendant(), TreeFamily::Tree, &opts()).unwrap();
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].cores[0].edge_ids(), ["ab", "bc", "ca"]);
    }

    #[test]
    fn density_extremes() {
        for h in [catalog::triple_with_tail(), catalog::double_triple(), catalog::triangle()] {
            let r = check_density_extremes(&h, &opts()).unwrap();
            assert!(r.passed(1e-6), "{r:?}");
        }
        let r = check_density_extremes(&catalog::triple_with_tail(), &opts()).unwrap();
        assert_eq!((r.strength, r.arboricity), (ratio(1, 2), ratio(1, 1)));
    }
}
