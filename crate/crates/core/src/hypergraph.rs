//! Hypergraphs with stable edge identifiers and the structural operations on
//! them.
//!
//! Vertices are addressed by position and carry a display name; edges carry a
//! string id that survives every operation that keeps the edge, so vectors
//! indexed by edge id can be carried between a hypergraph and its minors.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{One, Signed};

use crate::dsu::Dsu;
use crate::partitions::Partition;
use crate::{Error, Rational, Result};

pub type EdgeId = String;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    /// Sorted vertex positions, at least two, no repeats.
    pub members: Vec<usize>,
    pub weight: Option<Rational>,
}

/// An edge given by vertex names, as read from input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSpec {
    pub id: EdgeId,
    pub vertices: Vec<String>,
    pub weight: Option<Rational>,
}

impl EdgeSpec {
    pub fn new(id: impl Into<String>, vertices: &[&str]) -> Self {
        Self {
            id: id.into(),
            vertices: vertices.iter().map(|v| v.to_string()).collect(),
            weight: None,
        }
    }

    pub fn weighted(mut self, w: Rational) -> Self {
        self.weight = Some(w);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

/// `H^t` together with the parallel groups: `groups[e]` lists the positions
/// of the copies of edge `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parallelized {
    pub hypergraph: Hypergraph,
    pub groups: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(vertices: Vec<String>, edges: Vec<EdgeSpec>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Validation("the vertex set is empty".into()));
        }
        let mut index = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::Validation(format!("vertex {v:?} listed twice")));
            }
        }
        let mut built = Vec::with_capacity(edges.len());
        for spec in edges {
            let mut members = Vec::with_capacity(spec.vertices.len());
            for name in &spec.vertices {
                let Some(&i) = index.get(name) else {
                    return Err(Error::Validation(format!(
                        "edge {}: unknown vertex {name:?}",
                        spec.id
                    )));
                };
                members.push(i);
            }
            members.sort_unstable();
            let before = members.len();
            members.dedup();
            if members.len() != before {
                return Err(Error::Validation(format!(
                    "edge {}: a vertex is repeated",
                    spec.id
                )));
            }
            built.push(Edge {
                id: spec.id,
                members,
                weight: spec.weight,
            });
        }
        Self::from_edges(vertices, built)
    }

    /// Builds from position-based edges, validating everything `new` does.
    pub fn from_edges(vertices: Vec<String>, edges: Vec<Edge>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Validation("the vertex set is empty".into()));
        }
        let mut ids = BTreeSet::new();
        for e in &edges {
            if !ids.insert(e.id.as_str()) {
                return Err(Error::Validation(format!("edge id {:?} used twice", e.id)));
            }
            if e.members.len() < 2 {
                return Err(Error::Validation(format!(
                    "edge {} has {} vertex; loops are not allowed",
                    e.id,
                    e.members.len()
                )));
            }
            if e.members.windows(2).any(|w| w[0] >= w[1])
                || *e.members.last().unwrap() >= vertices.len()
            {
                return Err(Error::Validation(format!("edge {}: bad member list", e.id)));
            }
            if let Some(w) = &e.weight {
                if !w.is_positive() {
                    return Err(Error::Validation(format!(
                        "edge {}: weight {w} is not positive",
                        e.id
                    )));
                }
            }
        }
        let names: BTreeSet<&str> = vertices.iter().map(String::as_str).collect();
        if names.len() != vertices.len() {
            return Err(Error::Validation("duplicate vertex name".into()));
        }
        Ok(Self { vertices, edges })
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn edge_ids(&self) -> Vec<EdgeId> {
        self.edges.iter().map(|e| e.id.clone()).collect()
    }

    pub fn has_weights(&self) -> bool {
        self.edges.iter().any(|e| e.weight.is_some())
    }

    /// Edge weights, 1 where none is given.
    pub fn weights(&self) -> Vec<Rational> {
        self.edges
            .iter()
            .map(|e| e.weight.clone().unwrap_or_else(Rational::one))
            .collect()
    }

    /// Same hypergraph with the given weights attached.
    pub fn with_weights(&self, w: &[Rational]) -> Result<Self> {
        if w.len() != self.edges.len() {
            return Err(Error::Argument(format!(
                "{} weights for {} edges",
                w.len(),
                self.edges.len()
            )));
        }
        let mut out = self.clone();
        for (e, w) in out.edges.iter_mut().zip(w) {
            if !w.is_positive() {
                return Err(Error::Validation(format!(
                    "edge {}: weight {w} is not positive",
                    e.id
                )));
            }
            e.weight = Some(w.clone());
        }
        Ok(out)
    }

    pub fn without_weights(&self) -> Self {
        let mut out = self.clone();
        for e in &mut out.edges {
            e.weight = None;
        }
        out
    }

    /// Vertex bitmask of every edge. Needs at most 64 vertices.
    pub fn edge_masks(&self) -> Result<Vec<u64>> {
        if self.vertices.len() > 64 {
            return Err(Error::Capacity {
                what: "vertex count for bitmask routines",
                actual: self.vertices.len(),
                limit: 64,
            });
        }
        Ok(self
            .edges
            .iter()
            .map(|e| e.members.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect())
    }

    /// Vertex names of an edge.
    pub fn edge_vertex_names(&self, i: usize) -> Vec<&str> {
        self.edges[i]
            .members
            .iter()
            .map(|&v| self.vertices[v].as_str())
            .collect()
    }

    /// `H[X] = (X, E[X])`: the edges lying inside `x`.
    pub fn induced_by_vertices(&self, x: &[usize]) -> Result<Self> {
        let mut keep: Vec<usize> = x.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.is_empty() {
            return Err(Error::Argument("empty vertex subset".into()));
        }
        if *keep.last().unwrap() >= self.vertices.len() {
            return Err(Error::Argument("vertex out of range".into()));
        }
        let mut map = alloc::vec![usize::MAX; self.vertices.len()];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = new;
        }
        let vertices = keep.iter().map(|&v| self.vertices[v].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| e.members.iter().all(|&v| map[v] != usize::MAX))
            .map(|e| Edge {
                id: e.id.clone(),
                members: e.members.iter().map(|&v| map[v]).collect(),
                weight: e.weight.clone(),
            })
            .collect();
        Self::from_edges(vertices, edges)
    }

    /// `H[A] = (V[A], A)` for a multiset of edges; an edge of multiplicity
    /// `k > 1` becomes `k` copies with ids `id^1..id^k`.
    pub fn induced_by_edges(&self, multiplicity: &[u32]) -> Result<Self> {
        if multiplicity.len() != self.edges.len() {
            return Err(Error::Argument("multiset length differs from |E|".into()));
        }
        if multiplicity.iter().all(|&k| k == 0) {
            return Err(Error::Argument("empty edge multiset".into()));
        }
        let mut used = alloc::vec![false; self.vertices.len()];
        for (e, &k) in self.edges.iter().zip(multiplicity) {
            if k > 0 {
                for &v in &e.members {
                    used[v] = true;
                }
            }
        }
        let mut map = alloc::vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        for (v, &u) in used.iter().enumerate() {
            if u {
                map[v] = vertices.len();
                vertices.push(self.vertices[v].clone());
            }
        }
        let mut edges = Vec::new();
        for (e, &k) in self.edges.iter().zip(multiplicity) {
            for copy in 1..=k {
                let id = if k == 1 {
                    e.id.clone()
                } else {
                    format!("{}^{copy}", e.id)
                };
                edges.push(Edge {
                    id,
                    members: e.members.iter().map(|&v| map[v]).collect(),
                    weight: e.weight.clone(),
                });
            }
        }
        Self::from_edges(vertices, edges)
    }

    /// `(V, F)`: all vertices, only the listed edges.
    pub fn spanning_subgraph(&self, edges: &[usize]) -> Self {
        let mut keep = edges.to_vec();
        keep.sort_unstable();
        keep.dedup();
        Self {
            vertices: self.vertices.clone(),
            edges: keep.iter().map(|&i| self.edges[i].clone()).collect(),
        }
    }

    /// `H/F`. Returns the contracted hypergraph and the map from old vertex
    /// positions to new ones.
    ///
    /// Vertices joined by contracted edges merge into one vertex named by
    /// joining the member names with `+`. Every other edge is rewritten
    /// through the merge map; edges left with fewer than two vertices
    /// disappear, the rest keep their ids (parallel results are kept).
    pub fn contract_with_map(&self, f: &[usize]) -> (Self, Vec<usize>) {
        let n = self.vertices.len();
        let mut dsu = Dsu::new(n);
        let mut contracted = alloc::vec![false; self.edges.len()];
        for &i in f {
            contracted[i] = true;
            let e = &self.edges[i];
            for &v in &e.members[1..] {
                dsu.union(e.members[0], v);
            }
        }
        let (labels, k) = dsu.labels();
        let mut classes: Vec<Vec<usize>> = alloc::vec![Vec::new(); k];
        for (v, &c) in labels.iter().enumerate() {
            classes[c].push(v);
        }
        let vertices = self.class_names(&classes);
        let mut edges = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if contracted[i] {
                continue;
            }
            let mut members: Vec<usize> = e.members.iter().map(|&v| labels[v]).collect();
            members.sort_unstable();
            members.dedup();
            if members.len() >= 2 {
                edges.push(Edge {
                    id: e.id.clone(),
                    members,
                    weight: e.weight.clone(),
                });
            }
        }
        (Self { vertices, edges }, labels)
    }

    pub fn contract(&self, f: &[usize]) -> Self {
        self.contract_with_map(f).0
    }

    fn class_names(&self, classes: &[Vec<usize>]) -> Vec<String> {
        let mut taken: BTreeSet<String> = BTreeSet::new();
        for c in classes {
            if c.len() == 1 {
                taken.insert(self.vertices[c[0]].clone());
            }
        }
        classes
            .iter()
            .map(|c| {
                if c.len() == 1 {
                    return self.vertices[c[0]].clone();
                }
                let joined = c
                    .iter()
                    .map(|&v| self.vertices[v].as_str())
                    .collect::<Vec<_>>()
                    .join("+");
                let mut name = joined.clone();
                let mut k = 1;
                while taken.contains(&name) {
                    k += 1;
                    name = format!("{joined}#{k}");
                }
                taken.insert(name.clone());
                name
            })
            .collect()
    }

    /// The shrunk hypergraph `H_P = H/(E ∖ δ(P))`: one vertex per class of a
    /// feasible partition, edges are the cut edges.
    pub fn shrink_partition(&self, p: &Partition) -> Result<Self> {
        if p.labels().len() != self.vertices.len() {
            return Err(Error::Argument("partition is over a different vertex set".into()));
        }
        if let Some(bad) = p
            .classes()
            .iter()
            .find(|c| !self.induced_by_vertices(c).map(|s| s.is_connected()).unwrap_or(false))
        {
            let names: Vec<&str> = bad.iter().map(|&v| self.vertices[v].as_str()).collect();
            return Err(Error::Argument(format!(
                "partition is not feasible: class {{{}}} is disconnected",
                names.join(", ")
            )));
        }
        let vertices = self.class_names(p.classes());
        let labels = p.labels();
        let mut edges = Vec::new();
        for e in &self.edges {
            let mut members: Vec<usize> = e.members.iter().map(|&v| labels[v]).collect();
            members.sort_unstable();
            members.dedup();
            if members.len() >= 2 {
                edges.push(Edge {
                    id: e.id.clone(),
                    members,
                    weight: e.weight.clone(),
                });
            }
        }
        Ok(Self { vertices, edges })
    }

    /// Removes `v` from the vertex set and from every edge; edges left with
    /// fewer than two vertices disappear.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.vertices.len() {
            return Err(Error::Argument("vertex out of range".into()));
        }
        if self.vertices.len() == 1 {
            return Err(Error::Argument("cannot delete the only vertex".into()));
        }
        let shift = |u: usize| if u > v { u - 1 } else { u };
        let mut vertices = self.vertices.clone();
        vertices.remove(v);
        let edges = self
            .edges
            .iter()
            .filter_map(|e| {
                let members: Vec<usize> = e
                    .members
                    .iter()
                    .filter(|&&u| u != v)
                    .map(|&u| shift(u))
                    .collect();
                (members.len() >= 2).then(|| Edge {
                    id: e.id.clone(),
                    members,
                    weight: e.weight.clone(),
                })
            })
            .collect();
        Ok(Self { vertices, edges })
    }

    /// Component label of every vertex (numbered by smallest vertex) and the
    /// number of components.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut dsu = Dsu::new(self.vertices.len());
        for e in &self.edges {
            for &v in &e.members[1..] {
                dsu.union(e.members[0], v);
            }
        }
        dsu.labels()
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels().1 == 1
    }

    /// True when no single vertex deletion disconnects the hypergraph. One-
    /// and two-vertex hypergraphs count as biconnected.
    pub fn is_vertex_biconnected(&self) -> Result<bool> {
        if !self.is_connected() {
            return Err(Error::Argument("hypergraph is disconnected".into()));
        }
        if self.vertices.len() <= 2 {
            return Ok(true);
        }
        Ok(self.cut_vertex().is_none())
    }

    /// A vertex whose deletion disconnects a connected hypergraph, if any.
    pub fn cut_vertex(&self) -> Option<usize> {
        if self.vertices.len() <= 2 {
            return None;
        }
        (0..self.vertices.len())
            .find(|&v| !self.delete_vertex(v).map(|h| h.is_connected()).unwrap_or(true))
    }

    /// Connected components as vertex position lists, ordered by smallest
    /// vertex.
    pub fn component_vertex_sets(&self) -> Vec<Vec<usize>> {
        let (labels, k) = self.component_labels();
        let mut out = alloc::vec![Vec::new(); k];
        for (v, &c) in labels.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// Connected components; isolated vertices are single-vertex components.
    pub fn components(&self) -> Vec<Self> {
        self.component_vertex_sets()
            .iter()
            .map(|c| self.induced_by_vertices(c).expect("component is nonempty"))
            .collect()
    }

    /// `H^t`: every edge replaced by `t` parallel copies `id^1..id^t`.
    pub fn parallelize(&self, t: usize) -> Result<Parallelized> {
        if t == 0 {
            return Err(Error::Argument("parallel copy count must be positive".into()));
        }
        let mut edges = Vec::with_capacity(self.edges.len() * t);
        let mut groups = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let mut g = Vec::with_capacity(t);
            for copy in 1..=t {
                g.push(edges.len());
                edges.push(Edge {
                    id: format!("{}^{copy}", e.id),
                    members: e.members.clone(),
                    weight: e.weight.clone(),
                });
            }
            groups.push(g);
        }
        Ok(Parallelized {
            hypergraph: Self::from_edges(self.vertices.clone(), edges)?,
            groups,
        })
    }

    /// Positions of the edges whose ids are listed; unknown ids are an error.
    pub fn edge_positions(&self, ids: &[&str]) -> Result<Vec<usize>> {
        ids.iter()
            .map(|id| {
                self.edge_index(id)
                    .ok_or_else(|| Error::Argument(format!("unknown edge id {id:?}")))
            })
            .collect()
    }

    /// Vertex positions of the listed names; unknown names are an error.
    pub fn vertex_positions(&self, names: &[&str]) -> Result<Vec<usize>> {
        names
            .iter()
            .map(|n| {
                self.vertex_index(n)
                    .ok_or_else(|| Error::Argument(format!("unknown vertex {n:?}")))
            })
            .collect()
    }

    /// Vertex positions covered by the listed edges.
    pub fn covered_vertices(&self, edges: &[usize]) -> Vec<usize> {
        let mut used = alloc::vec![false; self.vertices.len()];
        for &i in edges {
            for &v in &self.edges[i].members {
                used[v] = true;
            }
        }
        (0..self.vertices.len()).filter(|&v| used[v]).collect()
    }
}

/// A vector indexed by the edges of a hypergraph, in edge order.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeVector<T> {
    pub ids: Vec<EdgeId>,
    pub values: Vec<T>,
}

impl<T: Clone> EdgeVector<T> {
    pub fn new(h: &Hypergraph, values: Vec<T>) -> Self {
        assert_eq!(values.len(), h.num_edges(), "one value per edge");
        Self {
            ids: h.edge_ids(),
            values,
        }
    }

    pub fn get(&self, id: &str) -> Option<&T> {
        self.ids.iter().position(|i| i == id).map(|k| &self.values[k])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &T)> {
        self.ids.iter().map(String::as_str).zip(&self.values)
    }

    /// The entries for the edges of `h`, in `h`'s edge order.
    pub fn restrict(&self, h: &Hypergraph) -> Result<Self> {
        let values = h
            .edges()
            .iter()
            .map(|e| {
                self.get(&e.id).cloned().ok_or_else(|| {
                    Error::Argument(format!("edge {} missing from the vector", e.id))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            ids: h.edge_ids(),
            values,
        })
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> EdgeVector<U> {
        EdgeVector {
            ids: self.ids.clone(),
            values: self.values.iter().map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn rejects_loops_unknown_vertices_and_bad_weights() {
        let v = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        assert!(matches!(
            Hypergraph::new(v(&["a", "b"]), alloc::vec![EdgeSpec::new("e", &["a"])]),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            Hypergraph::new(v(&["a", "b"]), alloc::vec![EdgeSpec::new("e", &["a", "z"])]),
            Err(Error::Validation(_))
        ));
        assert!(matches!(
            Hypergraph::new(
                v(&["a", "b"]),
                alloc::vec![EdgeSpec::new("e", &["a", "b"]).weighted(crate::ratio(0, 1))]
            ),
            Err(Error::Validation(_))
        ));
        let single = Hypergraph::new(v(&["a"]), alloc::vec![]).unwrap();
        assert!(single.is_connected());
    }

    #[test]
    fn induced_subhypergraphs() {
        let h = catalog::double_triple();
        assert_eq!(h.induced_by_vertices(&[0, 1]).unwrap().num_edges(), 0);
        let t = catalog::triple_with_tail();
        let x = t.induced_by_vertices(&[2, 3]).unwrap();
        assert_eq!(x.edge_ids(), ["e2"]);
        let a = h.induced_by_edges(&[2, 0]).unwrap();
        assert_eq!((a.num_vertices(), a.num_edges()), (3, 2));
        let b = t.induced_by_edges(&[2, 1]).unwrap();
        assert_eq!((b.num_vertices(), b.num_edges()), (4, 3));
        assert!(h.induced_by_edges(&[0, 0]).is_err());
    }

    #[test]
    fn contraction_and_shrinking() {
        let t = catalog::triple_with_tail();
        let c = t.contract(&[1]);
        assert_eq!(c.num_vertices(), 3);
        assert_eq!(c.edge_ids(), ["e1"]);
        assert_eq!(c.edge(0).members.len(), 3);
        let h = catalog::double_triple();
        let c = h.contract(&[0]);
        assert_eq!((c.num_vertices(), c.num_edges()), (1, 0));

        let p = Partition::from_labels(&t, &[0, 1, 2, 2]).unwrap();
        let s = t.shrink_partition(&p).unwrap();
        assert_eq!((s.num_vertices(), s.num_edges()), (3, 1));
        let tri = catalog::triangle();
        let p = Partition::from_labels(&tri, &[0, 0, 1]).unwrap();
        let s = tri.shrink_partition(&p).unwrap();
        assert_eq!((s.num_vertices(), s.num_edges()), (2, 2));
        let bad = Partition::from_labels(&h, &[0, 0, 1]).unwrap();
        assert!(h.shrink_partition(&bad).is_err());
    }

    #[test]
    fn deletion_and_biconnectivity() {
        let path = catalog::path3();
        let d = path.delete_vertex(1).unwrap();
        assert_eq!(d.num_edges(), 0);
        assert!(!path.is_vertex_biconnected().unwrap());
        let h = catalog::double_triple();
        let d = h.delete_vertex(0).unwrap();
        assert_eq!((d.num_vertices(), d.num_edges()), (2, 2));
        assert!(h.is_vertex_biconnected().unwrap());
        assert!(catalog::single_pair().is_vertex_biconnected().unwrap());
        let tri = catalog::triangle().delete_vertex(0).unwrap();
        assert_eq!(tri.edge_ids(), ["bc"]);
    }

    #[test]
    fn components_and_parallel_copies() {
        let t = catalog::triple_with_tail();
        let parts = t.spanning_subgraph(&[1]).components();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[2].edge_ids(), ["e2"]);
        let p = catalog::double_triple().parallelize(3).unwrap();
        assert_eq!(p.hypergraph.num_edges(), 6);
        assert_eq!(p.groups, [[0, 1, 2], [3, 4, 5]]);
        assert!(catalog::triangle().parallelize(0).is_err());
    }
}
