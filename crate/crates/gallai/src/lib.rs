//! Graph structure and online list coloring toolkit for desk-scale graphs:
//! block decompositions and Gallai-tree recognition, induced even cycles
//! with at most one chord, orientations whose Eulerian subgraph parity
//! census certifies colorability from degree-sized lists, exhaustive
//! choosability oracles, and an exact solver for the Mr. Paint /
//! Mrs. Correct game.
//!
//! All operations are pure functions over immutable values. Exponential
//! enumerations carry explicit capacity bounds and fail with a capacity
//! error beyond them.

pub mod at;
pub mod cli;
pub mod coloring;
pub mod error;
pub mod graph;
pub mod paint;
pub mod structure;

pub use error::{Error, Result};
pub use graph::{Format, Graph, Orientation, VertexSet};
