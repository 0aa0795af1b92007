//! Serializable reports. Exact values are `"p/q"` strings; solver output
//! stays `f64`.

use std::collections::BTreeMap;
use std::fmt::{self, Display, Write as _};

use serde::Serialize;

use hypermod_core::decompose::{extract_levels, DecompositionNode, Level, NodeKind, Provenance, ShrinkStep};
use hypermod_core::modulus::{ModulusResult, Scalar};
use hypermod_core::{Hypergraph, Partition, Rational};

pub fn q(x: &Rational) -> String {
    x.to_string()
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn class_names(h: &Hypergraph, p: &Partition) -> Vec<Vec<String>> {
    p.class_names(h)
        .into_iter()
        .map(|c| c.into_iter().map(str::to_string).collect())
        .collect()
}

pub fn edge_names(h: &Hypergraph, positions: &[usize]) -> Vec<String> {
    positions.iter().map(|&i| h.edge(i).id.clone()).collect()
}

fn braces(xs: &[String]) -> String {
    format!("{{{}}}", xs.join(","))
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub vertices: Vec<String>,
    pub num_vertices: usize,
    pub num_edges: usize,
    pub partition_connectivity: Option<u64>,
    pub strength: Option<String>,
    pub arboricity: Option<String>,
    pub density: Option<String>,
    pub homogeneous: bool,
}

impl Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dash = |x: &Option<String>| x.clone().unwrap_or_else(|| "-".into());
        writeln!(f, "vertices: {}", self.num_vertices)?;
        writeln!(f, "edges: {}", self.num_edges)?;
        writeln!(
            f,
            "partition-connectivity k: {}",
            self.partition_connectivity.map_or_else(|| "-".into(), |k| k.to_string())
        )?;
        writeln!(f, "strength S: {}", dash(&self.strength))?;
        writeln!(f, "arboricity D: {}", dash(&self.arboricity))?;
        writeln!(f, "density θ(E): {}", dash(&self.density))?;
        writeln!(f, "homogeneous: {}", yes(self.homogeneous))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InfoReport {
    pub connected: bool,
    #[serde(flatten)]
    pub summary: Summary,
    /// Per-component summaries of a disconnected input.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<Summary>,
}

impl Display for InfoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "connected: {}", yes(self.connected))?;
        if self.connected {
            return self.summary.fmt(f);
        }
        writeln!(f, "vertices: {}", self.summary.num_vertices)?;
        writeln!(f, "edges: {}", self.summary.num_edges)?;
        for (i, c) in self.components.iter().enumerate() {
            writeln!(f, "component {} {}:", i + 1, braces(&c.vertices))?;
            for line in c.to_string().lines() {
                writeln!(f, "  {line}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StrengthReport {
    pub value: String,
    pub weighted: bool,
    pub partition: Vec<Vec<String>>,
    pub cut: Vec<String>,
}

impl Display for StrengthReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = if self.weighted { "weighted strength S_σ" } else { "strength S" };
        writeln!(f, "{label}: {}", self.value)?;
        let classes: Vec<String> = self.partition.iter().map(|c| braces(c)).collect();
        writeln!(f, "optimal partition: {}", classes.join(" "))?;
        writeln!(f, "cut: {}", braces(&self.cut))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ArboricityReport {
    pub value: String,
    pub densest: Vec<String>,
    pub cover_size: u64,
    pub cover: Vec<Vec<String>>,
}

impl Display for ArboricityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "arboricity D: {}", self.value)?;
        writeln!(f, "densest vertex set: {}", braces(&self.densest))?;
        writeln!(f, "fewest covering hyperforests: {}", self.cover_size)?;
        for (i, forest) in self.cover.iter().enumerate() {
            writeln!(f, "  forest {}: {}", i + 1, braces(forest))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RankReport {
    pub edges: Vec<String>,
    pub rank: usize,
    pub greedy_rank: usize,
    pub independent: bool,
    /// Two vertices per edge forming a forest, when the set is independent.
    pub representation: Option<Vec<(String, String, String)>>,
}

impl Display for RankReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "edges: {}", braces(&self.edges))?;
        writeln!(f, "rank (partition formula): {}", self.rank)?;
        writeln!(f, "rank (greedy): {}", self.greedy_rank)?;
        writeln!(f, "hyperforest: {}", yes(self.independent))?;
        if let Some(rep) = &self.representation {
            for (e, u, v) in rep {
                writeln!(f, "  {e}: {u} - {v}")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub family: &'static str,
    pub count: usize,
    /// Edge id to multiplicity, zero entries omitted.
    pub members: Vec<BTreeMap<String, String>>,
}

impl Display for FamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} members: {}", self.family, self.count)?;
        for m in &self.members {
            let parts: Vec<String> = m
                .iter()
                .map(|(e, c)| if c == "1" { e.clone() } else { format!("{e}^{c}") })
                .collect();
            writeln!(f, "  {}", parts.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum Number {
    Exact(String),
    Float(f64),
}

impl From<&Scalar> for Number {
    fn from(s: &Scalar) -> Self {
        match s {
            Scalar::Exact(x) => Number::Exact(q(x)),
            Scalar::Float(x) => Number::Float(*x),
        }
    }
}

impl Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Number::Exact(s) => f.write_str(s),
            Number::Float(x) => write!(f, "{x:.10}"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Term {
    pub lambda: f64,
    pub usage: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ModulusReport {
    pub p: u8,
    pub family: &'static str,
    pub edges: Vec<String>,
    pub value: Number,
    pub dual_value: Option<Number>,
    pub rho_star: Option<Vec<Number>>,
    pub eta_star: Option<Vec<f64>>,
    pub gap: f64,
    pub iterations: usize,
    pub support: Vec<Term>,
}

impl ModulusReport {
    pub fn new(res: &ModulusResult, family: &'static str, h: &Hypergraph) -> Self {
        Self {
            p: res.p,
            family,
            edges: h.edge_ids(),
            value: (&res.value).into(),
            dual_value: res.dual_value.as_ref().map(Number::from),
            rho_star: res
                .rho_star
                .as_ref()
                .map(|v| v.values.iter().map(Number::from).collect()),
            eta_star: res.eta_star.as_ref().map(|v| v.values.clone()),
            gap: res.gap,
            iterations: res.iterations,
            support: res
                .support
                .iter()
                .map(|(lambda, usage)| Term {
                    lambda: *lambda,
                    usage: usage.clone(),
                })
                .collect(),
        }
    }
}

impl Display for ModulusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mod_{}({}) = {}", self.p, self.family, self.value)?;
        if let Some(d) = &self.dual_value {
            writeln!(f, "dual minimum Σ η²/σ = {d}")?;
        }
        if let Some(rho) = &self.rho_star {
            writeln!(f, "ρ*:")?;
            for (e, r) in self.edges.iter().zip(rho) {
                writeln!(f, "  {e}: {r}")?;
            }
        }
        if let Some(eta) = &self.eta_star {
            writeln!(f, "η*:")?;
            for (e, x) in self.edges.iter().zip(eta) {
                writeln!(f, "  {e}: {x:.10}")?;
            }
        }
        if self.p == 2 {
            writeln!(f, "gap: {:e} after {} iterations", self.gap, self.iterations)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BlockerEntry {
    pub partition: Vec<Vec<String>>,
    /// Nonzero entries `1/(|P|-1)` on the cut edges.
    pub vector: BTreeMap<String, String>,
    /// The shrunk hypergraph is vertex-biconnected, so the vector is an
    /// extreme point of the admissible set.
    pub extreme: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BlockerReport {
    pub edges: Vec<String>,
    pub elements: Vec<BlockerEntry>,
}

impl Display for BlockerReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let extreme = self.elements.iter().filter(|b| b.extreme).count();
        writeln!(f, "blocker elements: {extreme}")?;
        for b in &self.elements {
            let classes: Vec<String> = b.partition.iter().map(|c| braces(c)).collect();
            let vector: Vec<String> = self
                .edges
                .iter()
                .map(|e| b.vector.get(e).cloned().unwrap_or_else(|| "0".into()))
                .collect();
            let note = if b.extreme { "" } else { "  not extreme: shrunk hypergraph has a cut vertex" };
            writeln!(f, "  {}  ({}){note}", classes.join(" "), vector.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LevelReport {
    pub value: f64,
    pub exact: Option<String>,
    pub edges: Vec<String>,
}

impl From<&Level> for LevelReport {
    fn from(l: &Level) -> Self {
        Self {
            value: l.value,
            exact: l.exact.as_ref().map(q),
            edges: l.edges.clone(),
        }
    }
}

impl LevelReport {
    fn label(&self) -> String {
        self.exact.clone().unwrap_or_else(|| format!("{:.8}", self.value))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NodeReport {
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
    pub kind: &'static str,
    pub provenance: &'static str,
    /// The parent's level removed to produce this node.
    pub removed_level: Option<LevelReport>,
    pub strength: Option<String>,
    pub arboricity: Option<String>,
    pub dual_modulus: Option<f64>,
    pub levels: Vec<LevelReport>,
    pub additivity_error: Option<f64>,
    pub restriction_error: Option<f64>,
    pub children: Vec<NodeReport>,
}

pub fn kind_name(k: NodeKind) -> &'static str {
    match k {
        NodeKind::Homogeneous => "homogeneous",
        NodeKind::Split => "split",
        NodeKind::Isolated => "isolated",
        NodeKind::Unresolved => "unresolved",
    }
}

pub fn provenance_name(p: Provenance) -> &'static str {
    match p {
        Provenance::Root => "root",
        Provenance::Shrunk => "shrunk",
        Provenance::Component => "component",
    }
}

impl NodeReport {
    pub fn new(n: &DecompositionNode, cluster_tol: f64) -> Self {
        let levels = n
            .eta
            .as_ref()
            .and_then(|eta| extract_levels(eta, cluster_tol).ok())
            .map(|ls| ls.iter().map(LevelReport::from).collect())
            .unwrap_or_default();
        Self {
            vertices: n.hypergraph.vertices().to_vec(),
            edges: n.hypergraph.edge_ids(),
            kind: kind_name(n.kind),
            provenance: provenance_name(n.provenance),
            removed_level: n.eta_level.as_ref().map(LevelReport::from),
            strength: n.strength.as_ref().map(q),
            arboricity: n.arboricity.as_ref().map(q),
            dual_modulus: n.dual_modulus,
            levels,
            additivity_error: n.additivity_error,
            restriction_error: n.restriction_error,
            children: n.children.iter().map(|c| NodeReport::new(c, cluster_tol)).collect(),
        }
    }

    fn render(&self, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        let _ = write!(
            out,
            "{pad}[{}] {} V={} |E|={}",
            self.provenance,
            self.kind,
            braces(&self.vertices),
            self.edges.len()
        );
        if self.strength.is_some() || self.arboricity.is_some() {
            let dash = |x: &Option<String>| x.clone().unwrap_or_else(|| "-".into());
            let _ = write!(out, " S={} D={}", dash(&self.strength), dash(&self.arboricity));
        }
        if !self.levels.is_empty() {
            let ls: Vec<String> = self
                .levels
                .iter()
                .map(|l| format!("{} ({})", l.label(), l.edges.len()))
                .collect();
            let _ = write!(out, " η levels: {}", ls.join(", "));
        }
        out.push('\n');
        for c in &self.children {
            c.render(depth + 1, out);
        }
    }

    /// Distinct η values over the whole tree, highest first.
    pub fn all_levels(&self) -> Vec<LevelReport> {
        let mut out: Vec<LevelReport> = Vec::new();
        let mut stack = vec![self];
        while let Some(n) = stack.pop() {
            for l in &n.levels {
                if !out.iter().any(|o| (o.value - l.value).abs() <= 1e-6) {
                    out.push(LevelReport {
                        value: l.value,
                        exact: l.exact.clone(),
                        edges: Vec::new(),
                    });
                }
            }
            stack.extend(n.children.iter());
        }
        out.sort_by(|a, b| b.value.total_cmp(&a.value));
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DecomposeReport {
    pub family: &'static str,
    pub levels: Vec<String>,
    pub depth: usize,
    /// Set when the process stopped early; `tree` is then partial.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub tree: NodeReport,
}

impl DecomposeReport {
    pub fn new(family: &'static str, root: &DecompositionNode, cluster_tol: f64, error: Option<String>) -> Self {
        let tree = NodeReport::new(root, cluster_tol);
        Self {
            family,
            levels: tree.all_levels().iter().map(LevelReport::label).collect(),
            depth: root.depth(),
            error,
            tree,
        }
    }
}

impl Display for DecomposeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family: {}", self.family)?;
        writeln!(f, "η levels: {}", self.levels.join(", "))?;
        writeln!(f, "depth: {}", self.depth)?;
        if let Some(e) = &self.error {
            writeln!(f, "stopped early: {e}")?;
        }
        let mut out = String::new();
        self.tree.render(0, &mut out);
        f.write_str(&out)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ShrinkReport {
    pub family: &'static str,
    pub steps: Vec<ShrinkStepReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ShrinkStepReport {
    pub level: LevelReport,
    pub cores: Vec<Vec<String>>,
    pub shrunk_vertices: Vec<String>,
    pub shrunk_edges: Vec<String>,
    pub additivity_error: f64,
}

impl From<&ShrinkStep> for ShrinkStepReport {
    fn from(s: &ShrinkStep) -> Self {
        Self {
            level: (&s.level).into(),
            cores: s.cores.iter().map(|c| c.vertices().to_vec()).collect(),
            shrunk_vertices: s.shrunk.vertices().to_vec(),
            shrunk_edges: s.shrunk.edge_ids(),
            additivity_error: s.additivity_error,
        }
    }
}

impl Display for ShrinkReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "family: {}", self.family)?;
        if self.steps.is_empty() {
            return writeln!(f, "homogeneous: nothing to shrink");
        }
        for (i, s) in self.steps.iter().enumerate() {
            let cores: Vec<String> = s.cores.iter().map(|c| braces(c)).collect();
            writeln!(f, "step {}: level {} ({} edges)", i + 1, s.level.label(), s.level.edges.len())?;
            writeln!(f, "  cores: {}", cores.join(" "))?;
            writeln!(
                f,
                "  shrunk: V={} E={}",
                braces(&s.shrunk_vertices),
                braces(&s.shrunk_edges)
            )?;
            writeln!(f, "  additivity error: {:e}", s.additivity_error)?;
        }
        Ok(())
    }
}

pub fn rational_map(h: &Hypergraph, values: &[Rational]) -> BTreeMap<String, String> {
    h.edges()
        .iter()
        .zip(values)
        .filter(|(_, v)| **v != Rational::from_integer(0.into()))
        .map(|(e, v)| (e.id.clone(), q(v)))
        .collect()
}
