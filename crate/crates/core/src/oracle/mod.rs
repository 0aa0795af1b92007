//! Brute-force reference computations.
//!
//! These share no code with the production paths beyond the hypergraph type
//! and the definitional hyperforest test: families are materialized by
//! exhaustive search, LPs are solved exactly, polyhedra are enumerated
//! vertex by vertex, and the hull projection runs a different algorithm from
//! the production solver.

mod dd;
mod enumerate;
mod lp;
mod qp;

pub use dd::{admissible_vertices, polyhedron_vertices, vertex_enumeration, VertexSet};
pub use enumerate::{
    enumerate_hypertrees, enumerate_multitrees, greedy_hyperforest_size, strength_by_contractions,
};
pub use lp::{lp_min, lp_min_basic_scan, LpSolution};
pub use qp::{qp_min_norm, QpSolution};

pub use crate::modulus::ExplicitFamily;
