use alloc::string::String;
use alloc::vec::Vec;

/// Errors raised by the analysis routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The input does not describe a valid hypergraph.
    #[error("invalid hypergraph: {0}")]
    Validation(String),
    /// An argument violates the documented precondition of an operation.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// An exhaustive enumeration would exceed the configured cap.
    #[error("capacity exceeded: {what} is {actual}, limit is {limit}")]
    Capacity {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    /// The requested object or family does not exist for this input.
    #[error("infeasible: {0}")]
    Infeasible(String),
    /// A linear program has no finite optimum.
    #[error("unbounded: {0}")]
    Unbounded(String),
    /// The min-norm-point solver hit its iteration cap.
    #[error("no convergence after {iterations} iterations (gap {gap:e})")]
    NonConvergence {
        iterations: usize,
        gap: f64,
        best: Vec<f64>,
    },
    /// Solver output is not accurate enough to read off exact structure.
    #[error("solver accuracy: {0}")]
    Accuracy(String),
    /// Two computations that must agree did not.
    #[error("internal consistency: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Caps on the exhaustive enumerations.
///
/// Partition scans are `Bell(|V|)`, vertex-subset scans `2^|V|` and
/// edge-subset scans `2^|E|`, so every routine that enumerates checks the
/// relevant cap up front and fails with [`Error::Capacity`] instead of
/// running away.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex count for partition and vertex-subset enumeration.
    pub max_vertices: usize,
    /// Largest edge count for edge-subset enumeration.
    pub max_edges: usize,
    /// Node budget for backtracking searches.
    pub backtrack_budget: u64,
    /// Largest edge count for exact vertex enumeration of polyhedra.
    pub max_polyhedron_edges: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_vertices: 12,
            max_edges: 20,
            backtrack_budget: 10_000_000,
            max_polyhedron_edges: 8,
        }
    }
}

/// Vertex subsets are `u64` masks and edge sets in partition scans are `u128`
/// masks; these bound the caps whatever the configuration says.
pub(crate) const HARD_MAX_VERTICES: usize = 24;
pub(crate) const HARD_MAX_MASK_EDGES: usize = 128;

impl Limits {
    pub(crate) fn check_vertices(&self, n: usize) -> Result<()> {
        let limit = self.max_vertices.min(HARD_MAX_VERTICES);
        if n > limit {
            return Err(Error::Capacity {
                what: "vertex count",
                actual: n,
                limit,
            });
        }
        Ok(())
    }

    pub(crate) fn check_edges(&self, m: usize) -> Result<()> {
        let limit = self.max_edges.min(30);
        if m > limit {
            return Err(Error::Capacity {
                what: "edge count",
                actual: m,
                limit,
            });
        }
        Ok(())
    }

    pub(crate) fn check_mask_edges(m: usize) -> Result<()> {
        if m > HARD_MAX_MASK_EDGES {
            return Err(Error::Capacity {
                what: "edge count",
                actual: m,
                limit: HARD_MAX_MASK_EDGES,
            });
        }
        Ok(())
    }
}
