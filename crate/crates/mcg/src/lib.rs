//! Matching covered graphs at desk scale: perfect matching structure, tight
//! cut decomposition, brick and brace classification, edge classification
//! (removable / b-invariant / solitary), solidity testing, and a verification
//! harness that checks structural claims over exhaustive small-graph corpora.
//!
//! Everything is exact and exhaustive, designed for graphs on at most 16
//! vertices.

pub mod alternating;
pub mod connectivity;
pub mod edge_class;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod iso;
pub mod matching;
pub mod odd_cycles;
pub mod solid;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{contract_shore, Edge, Graph, Shore, VertexSet, MAX_ORDER};
pub use graph6::{parse_graph6, to_graph6};
pub use matching::Matching;
