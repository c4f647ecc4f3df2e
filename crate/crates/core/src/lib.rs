//! Book Ramsey numbers `r(B_m, B_n)`: closed-form bounds, strongly regular
//! lower-bound certificates, exhaustive and stochastic colouring search, and
//! a step-by-step analysis of colourings with few red pages.
//!
//! The book `B_n` is `n` triangles sharing one edge. Colourings of `K_N` are
//! stored as their red graph; blue is the complement.

pub mod bounds;
pub mod chromatic;
pub mod error;
pub mod extract;
pub mod field;
pub mod graph;
pub mod graph6;
pub mod metrics;
pub mod rational;
pub mod search;
pub mod srg;
pub mod srg_table;

pub use error::{Error, Graph6Error, Result};
pub use graph::{Graph, VertexSet};
pub use graph6::{from_graph6, to_graph6};
