//! Minimum hub counts in multi-pair flow networks.
//!
//! A [`Network`] is a mixed multigraph with source/sink pairs and vertex-cut
//! demands. The crate provides exact vertex cuts, minimality predicates and
//! minimal-subgraph extraction, the canonical degree-3 representation of
//! minimal two-pair networks with its alternating-path decomposition, the
//! interconnecting-path search that bounds their hub count, generators for
//! extremal networks, and brute-force oracles for small instances.

pub mod cuts;
pub mod error;
pub mod extremal;
mod flow;
pub mod graph;
pub mod interconnect;
pub mod io;
pub mod minimality;
pub mod oracle;
pub mod random;
pub mod representation;
pub mod suite;

pub use error::{Error, GraphError, ParseError, Result};
pub use graph::{
    classify_edges, hub_count, Edge, EdgeClass, EdgeId, HubCount, Network, Pair, Path, PathSystem,
    RoutedNetwork, Step, Terminal, VertexId,
};
