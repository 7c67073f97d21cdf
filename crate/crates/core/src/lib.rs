//! Spanning-tree packing numbers, graph spectra and edge connectivity, the
//! clique-pair extremal families built on them, and executable checks of the
//! extremal statements relating the three.

pub mod apps;
pub mod cli;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod packing;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexPartition};
