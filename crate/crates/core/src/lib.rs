//! Edge ideals of very well-covered graphs.
//!
//! Graphs are classified against the unmixedness conditions, reduced to an
//! acyclic form, and checked against exact homological oracles: Reisner's
//! criterion, shellability, vertex decomposability and Hochster's formula.

pub mod classify;
pub mod cli;
pub mod complexes;
pub mod error;
pub mod generators;
pub mod graph;
pub mod homology;
pub mod io;
pub mod reduction;
pub mod report;
pub mod verify;
pub mod vertex_set;

pub use classify::{classify, find_vwc_labeling, Classification, Status, VwcLabeling};
pub use error::{Error, Result};
pub use graph::Graph;
pub use homology::Field;
pub use vertex_set::VertexSet;
