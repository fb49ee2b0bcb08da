//! Exact checkers, searchers and corpus scanners for desk-scale graph
//! problems: edge coloring, list packing, perfect matchings, crumby
//! partitions, rainbow connectivity and parity-constrained vertex orders.
//! Every positive verdict carries a certificate that an independent
//! checker can re-verify.

pub mod connectivity;
pub mod crumby;
pub mod edge_color;
pub mod enumerate;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod matchings;
pub mod order;
pub mod planarity;
pub mod props;
pub mod rainbow;
pub mod xp;

pub use graph::{Graph, GraphError};
pub use graph6::{decode_graph6, encode_graph6, Graph6Error};
