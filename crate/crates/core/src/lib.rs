//! Finite groups given by multiplication tables, the power graphs built on
//! them, and the graph/number-theoretic invariants used to cross-check the
//! closed-form characterizations against exact algorithms.

#![forbid(unsafe_code)]

pub mod bits;
pub mod claims;
pub mod error;
pub mod graph;
pub mod group;
pub mod powergraph;
pub mod weight;

pub use error::{Error, Result};
