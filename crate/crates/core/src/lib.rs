//! Minimum temporal `(s, z)`-separators in temporal graphs.

pub mod core_fpt;
pub mod error;
pub mod exact;
pub mod flow;
pub mod generators;
pub mod graph;
pub mod instance;
pub mod io;
pub mod nwc;
pub mod pathfinding;
pub mod preprocess;
pub mod tau4;

pub use error::{GeneratorError, GraphError, ParseError, SolveError};
pub use graph::{PathModel, StaticGraph, Step, TemporalGraph, TemporalPath, Time, TimeEdge, Vertex};
pub use instance::{Query, SeparatorInstance, SeparatorResult};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/temporal_graphs.md")]
    mod temporal_graphs {}
    #[doc = include_str!("../../../book/src/paths.md")]
    mod paths {}
    #[doc = include_str!("../../../book/src/tau4.md")]
    mod tau4 {}
    #[doc = include_str!("../../../book/src/core_fpt.md")]
    mod core_fpt {}
    #[doc = include_str!("../../../book/src/generators.md")]
    mod generators {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
