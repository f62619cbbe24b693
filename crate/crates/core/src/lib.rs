//! Order divisor graphs of finite groups.
//!
//! Groups are explicit Cayley tables ([`group`]). From a group this crate
//! builds the order divisor graph, where distinct elements of different
//! orders are adjacent when one order divides the other ([`odgraph`]), along
//! with the comparability graph of the divisor lattice of `n` and its
//! phi-weighted blow-up. [`graph`] holds the classifiers (stars, complete
//! multipartite structure, exact chromatic number, twin reduction,
//! isomorphism) and [`theorems`] runs exhaustive checks of the structural
//! claims about these graphs over bounded corpora.

pub mod error;
pub mod export;
pub mod graph;
pub mod group;
pub mod numtheory;
pub mod odgraph;
pub mod theorems;

pub use error::{Error, Result};

pub use graph::Graph;
pub use group::{FiniteGroup, GroupSpec, OrderPartition, Subgroup};
pub use odgraph::OdGraph;

/// Integer type for element orders, divisors and group orders.
pub type Order = u64;

/// Vertex and element indices.
pub type Index = usize;
