//! The graph G on the 42 ordered pencils of the Fano plane, its K4 and
//! K222 subgraphs, its automorphism group, and the configurations, holes
//! and tori built from it.
//!
//! Everything is computed from first principles and checked by
//! independent routines:
//!
//! - [`fano`]: points, lines, ordered lines and ordered pencils.
//! - [`construct`]: G with strong and weak edge colours, its ordered-line
//!   presentation and its quotient onto 2K7.
//! - [`census`]: tetrahedra, octahedra, fastening and neighbourhoods.
//! - [`symmetry`]: the group generated by the sixteen involutions,
//!   stabilizers, ultrahomogeneity certificates and the regular-subgroup
//!   search.
//! - [`incidence`]: configurations with Levi, Menger and dual Menger graphs.
//! - [`holes_tori`]: labelled six-holes, tori and stars.
//! - [`generalized`]: the same construction over P(r−1, 2).
//! - [`graph`]: the generic graph layer (isomorphism, automorphisms,
//!   holes, induced copies, metrics, reference graphs).
//! - [`report`], [`export`], [`query`]: the verification report, graph
//!   serialization and single lookups behind the `fano42` binary.
//!
//! ```text
//! let g = fano42::construct::g();
//! let v = g.parse_vertex("1^a")?;
//! assert_eq!(g.graph().degree(v), 12);
//! ```

pub mod census;
pub mod construct;
pub mod error;
pub mod export;
pub mod fano;
pub mod generalized;
pub mod graph;
pub mod holes_tori;
pub mod incidence;
#[cfg(test)]
mod oracles;
pub mod query;
pub mod report;
pub mod symmetry;

pub use error::{Error, Result};
