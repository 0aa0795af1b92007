//! Set partitions of the vertex set, cut sets and feasibility.
//!
//! Partitions are produced in restricted-growth-string order: vertex 0 is in
//! class 0 and every later vertex joins an existing class or opens the next
//! one. The scans stream; nothing proportional to the Bell number is kept.

use alloc::format;
use alloc::vec::Vec;

use num_traits::One;

use crate::hypergraph::{EdgeVector, Hypergraph};
use crate::{Error, Limits, Rational, Result};

/// A partition of the vertex set of a particular hypergraph, with its cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    classes: Vec<Vec<usize>>,
    labels: Vec<usize>,
    cut: Vec<usize>,
}

impl Partition {
    /// From a class label per vertex. Labels are renumbered by first
    /// appearance, so any labelling of the same partition gives equal values.
    pub fn from_labels(h: &Hypergraph, labels: &[usize]) -> Result<Self> {
        if labels.len() != h.num_vertices() {
            return Err(Error::Argument(format!(
                "{} labels for {} vertices",
                labels.len(),
                h.num_vertices()
            )));
        }
        let mut renumber: Vec<(usize, usize)> = Vec::new();
        let mut norm = Vec::with_capacity(labels.len());
        for &l in labels {
            let k = match renumber.iter().find(|(old, _)| *old == l) {
                Some(&(_, new)) => new,
                None => {
                    renumber.push((l, renumber.len()));
                    renumber.len() - 1
                }
            };
            norm.push(k);
        }
        let mut classes = alloc::vec![Vec::new(); renumber.len()];
        for (v, &k) in norm.iter().enumerate() {
            classes[k].push(v);
        }
        let cut = cut_positions(h, &norm, 0..h.num_edges());
        Ok(Self {
            classes,
            labels: norm,
            cut,
        })
    }

    /// From explicit classes, which must be disjoint, nonempty and cover V.
    pub fn from_classes(h: &Hypergraph, classes: &[Vec<usize>]) -> Result<Self> {
        let mut labels = alloc::vec![usize::MAX; h.num_vertices()];
        for (k, c) in classes.iter().enumerate() {
            if c.is_empty() {
                return Err(Error::Argument("empty partition class".into()));
            }
            for &v in c {
                if v >= labels.len() || labels[v] != usize::MAX {
                    return Err(Error::Argument(format!(
                        "vertex position {v} is out of range or in two classes"
                    )));
                }
                labels[v] = k;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(Error::Argument("classes do not cover every vertex".into()));
        }
        Self::from_labels(h, &labels)
    }

    pub fn singletons(h: &Hypergraph) -> Self {
        let labels: Vec<usize> = (0..h.num_vertices()).collect();
        Self::from_labels(h, &labels).expect("one label per vertex")
    }

    pub fn size(&self) -> usize {
        self.classes.len()
    }

    /// Classes as sorted vertex positions, ordered by smallest member.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Class index of every vertex.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Positions of the edges meeting at least two classes.
    pub fn cut(&self) -> &[usize] {
        &self.cut
    }

    /// Classes by vertex name.
    pub fn class_names<'a>(&self, h: &'a Hypergraph) -> Vec<Vec<&'a str>> {
        self.classes
            .iter()
            .map(|c| c.iter().map(|&v| h.vertices()[v].as_str()).collect())
            .collect()
    }

    /// True when `other` refines `self` (every class of `other` lies inside
    /// a class of `self`).
    pub fn is_refined_by(&self, other: &Partition) -> bool {
        other
            .classes
            .iter()
            .all(|c| c.iter().all(|&v| self.labels[v] == self.labels[c[0]]))
    }
}

/// A partition with at least two classes and its usage vector
/// `(1/(|P|-1)) 1_{δ(P)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PartitionUsage {
    pub partition: Partition,
    pub vector: EdgeVector<Rational>,
}

impl PartitionUsage {
    pub fn new(h: &Hypergraph, partition: Partition) -> Result<Self> {
        if partition.size() < 2 {
            return Err(Error::Argument(
                "usage vectors need at least two classes".into(),
            ));
        }
        let share = Rational::one() / Rational::from_integer((partition.size() - 1).into());
        let mut values = alloc::vec![Rational::default(); h.num_edges()];
        for &e in partition.cut() {
            values[e] = share.clone();
        }
        Ok(Self {
            vector: EdgeVector::new(h, values),
            partition,
        })
    }
}

fn cut_positions(
    h: &Hypergraph,
    labels: &[usize],
    edges: impl IntoIterator<Item = usize>,
) -> Vec<usize> {
    edges
        .into_iter()
        .filter(|&i| {
            let m = &h.edge(i).members;
            m[1..].iter().any(|&v| labels[v] != labels[m[0]])
        })
        .collect()
}

/// `δ_F(P)`: the edges of `f` meeting at least two classes.
pub fn cut_of(h: &Hypergraph, p: &Partition, f: &[usize]) -> Vec<usize> {
    cut_positions(h, p.labels(), f.iter().copied())
}

/// True when every class induces a connected subhypergraph.
pub fn is_feasible(h: &Hypergraph, p: &Partition) -> bool {
    p.classes().iter().all(|c| {
        c.len() == 1
            || h
                .induced_by_vertices(c)
                .map(|s| s.is_connected())
                .unwrap_or(false)
    })
}

/// Splits every disconnected class into its components. The cut is
/// unchanged and the class count can only grow.
pub fn feasible_completion(h: &Hypergraph, p: &Partition) -> Partition {
    let mut labels = alloc::vec![0; h.num_vertices()];
    let mut next = 0;
    for c in p.classes() {
        let sub = h.induced_by_vertices(c).expect("classes are nonempty");
        let (comp, k) = sub.component_labels();
        for (i, &v) in c.iter().enumerate() {
            labels[v] = next + comp[i];
        }
        next += k;
    }
    Partition::from_labels(h, &labels).expect("one label per vertex")
}

/// Streams restricted growth strings of length `n` to `visit` as
/// `(labels, class count)`; `visit` returns `false` to stop early.
pub(crate) fn for_each_rgs(n: usize, mut visit: impl FnMut(&[u8], usize) -> bool) {
    if n == 0 {
        return;
    }
    let mut a = alloc::vec![0u8; n];
    // prefix_max[i] = max(a[0..=i])
    let mut prefix_max = alloc::vec![0u8; n];
    loop {
        if !visit(&a, prefix_max[n - 1] as usize + 1) {
            return;
        }
        let mut i = n - 1;
        loop {
            if i == 0 {
                return;
            }
            if a[i] <= prefix_max[i - 1] {
                break;
            }
            i -= 1;
        }
        a[i] += 1;
        prefix_max[i] = prefix_max[i - 1].max(a[i]);
        for j in i + 1..n {
            a[j] = 0;
            prefix_max[j] = prefix_max[i];
        }
    }
}

/// Precomputed edge data for fast cut evaluation inside partition scans.
pub(crate) struct CutScanner {
    members: Vec<Vec<usize>>,
}

impl CutScanner {
    pub(crate) fn new(h: &Hypergraph) -> Result<Self> {
        Limits::check_mask_edges(h.num_edges())?;
        Ok(Self {
            members: h.edges().iter().map(|e| e.members.clone()).collect(),
        })
    }

    pub(crate) fn cut_mask(&self, labels: &[u8]) -> u128 {
        let mut mask = 0u128;
        for (i, m) in self.members.iter().enumerate() {
            let first = labels[m[0]];
            if m[1..].iter().any(|&v| labels[v] != first) {
                mask |= 1 << i;
            }
        }
        mask
    }
}

/// Streaming iterator over set partitions in restricted-growth-string order.
pub struct Partitions<'a> {
    h: &'a Hypergraph,
    a: Vec<u8>,
    prefix_max: Vec<u8>,
    min_classes: usize,
    done: bool,
}

impl Partitions<'_> {
    fn advance(&mut self) {
        let n = self.a.len();
        let mut i = n - 1;
        loop {
            if i == 0 {
                self.done = true;
                return;
            }
            if self.a[i] <= self.prefix_max[i - 1] {
                break;
            }
            i -= 1;
        }
        self.a[i] += 1;
        self.prefix_max[i] = self.prefix_max[i - 1].max(self.a[i]);
        for j in i + 1..n {
            self.a[j] = 0;
            self.prefix_max[j] = self.prefix_max[i];
        }
    }
}

impl Iterator for Partitions<'_> {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        while !self.done {
            let k = *self.prefix_max.last().unwrap() as usize + 1;
            let hit = (k >= self.min_classes).then(|| {
                let labels: Vec<usize> = self.a.iter().map(|&x| x as usize).collect();
                Partition::from_labels(self.h, &labels).expect("valid labels")
            });
            self.advance();
            if hit.is_some() {
                return hit;
            }
        }
        None
    }
}

/// Every set partition with at least `min_classes` classes, in
/// restricted-growth-string order.
pub fn all_partitions<'a>(
    h: &'a Hypergraph,
    min_classes: usize,
    lim: &Limits,
) -> Result<Partitions<'a>> {
    let n = h.num_vertices();
    if min_classes == 0 || min_classes > n {
        return Err(Error::Argument(format!(
            "minimum class count {min_classes} outside 1..={n}"
        )));
    }
    lim.check_vertices(n)?;
    Ok(Partitions {
        h,
        a: alloc::vec![0; n],
        prefix_max: alloc::vec![0; n],
        min_classes,
        done: false,
    })
}

/// Streams every set partition with at least `min_classes` classes to
/// `visit` without collecting them.
pub fn visit_partitions(
    h: &Hypergraph,
    min_classes: usize,
    lim: &Limits,
    mut visit: impl FnMut(&Partition),
) -> Result<()> {
    let n = h.num_vertices();
    if min_classes == 0 || min_classes > n {
        return Err(Error::Argument(format!(
            "minimum class count {min_classes} outside 1..={n}"
        )));
    }
    lim.check_vertices(n)?;
    let mut labels = alloc::vec![0usize; n];
    for_each_rgs(n, |a, k| {
        if k >= min_classes {
            for (l, &x) in labels.iter_mut().zip(a) {
                *l = x as usize;
            }
            visit(&Partition::from_labels(h, &labels).expect("valid labels"));
        }
        true
    });
    Ok(())
}

/// Usage vectors of all feasible partitions with at least two classes.
pub fn feasible_partitions(h: &Hypergraph, lim: &Limits) -> Result<Vec<PartitionUsage>> {
    if h.num_vertices() < 2 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut failure = None;
    visit_partitions(h, 2, lim, |p| {
        if failure.is_none() && is_feasible(h, p) {
            match PartitionUsage::new(h, p.clone()) {
                Ok(u) => out.push(u),
                Err(e) => failure = Some(e),
            }
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(out),
    }
}
