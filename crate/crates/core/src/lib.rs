//! Hypergraphic matroids and the modulus of hypertree families.
//!
//! The crate computes, for small finite hypergraphs:
//!
//! * structural operations (induced subhypergraphs, contraction, shrinking a
//!   partition, vertex deletion, parallel copies, connectivity);
//! * the hypergraphic matroid: hyperforest tests, the partition rank formula,
//!   greedy bases, forest representations, matroid strength and arboricity;
//! * strength `S`, weighted strength `S_σ`, fractional arboricity `D`,
//!   partition-connectivity and hyperforest covers;
//! * 1- and 2-modulus of the hypertree family `Γ(H)` and the multi-tree family
//!   `Ω(H)`, the latter computed as a minimum-norm point over the dominant with
//!   Wolfe's algorithm and a greedy linear-minimization oracle;
//! * the Fulkerson blocker of `Ω(H)` from feasible partitions with
//!   vertex-biconnected shrunk hypergraphs;
//! * the level-set decomposition of a hypergraph driven by the optimal dual
//!   density, in both the removal and the shrinking direction;
//! * brute-force reference implementations (`oracle`) used to cross-check all
//!   of the above.
//!
//! Everything is exhaustive and meant for desk-scale inputs; the enumeration
//! caps live in [`Limits`].
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod dsu;
mod error;
mod num;

pub mod catalog;
pub mod decompose;
pub mod fulkerson;
pub mod hypergraph;
pub mod linalg;
pub mod matroid;
pub mod metrics;
pub mod modulus;
pub mod oracle;
pub mod partitions;

pub use error::{Error, Limits, Result};
pub use hypergraph::{Edge, EdgeId, EdgeSpec, EdgeVector, Hypergraph, Parallelized};
pub use num::{parse_rational, ratio, snap_rational, to_f64, Rational};
pub use partitions::{Partition, PartitionUsage};
