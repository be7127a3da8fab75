//! Separation instances and solver results.

use crate::error::SolveError;
use crate::graph::{PathModel, Step, TemporalGraph, TemporalPath, Vertex};

/// The `(s, z, k)` part of an instance file.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Query {
    pub s: Vertex,
    pub z: Vertex,
    pub k: usize,
}

/// Does `graph` admit an `(s, z)`-separator of size at most `k` under `model`?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorInstance {
    pub graph: TemporalGraph,
    pub s: Vertex,
    pub z: Vertex,
    pub k: usize,
    pub model: PathModel,
}

impl SeparatorInstance {
    pub fn new(
        graph: TemporalGraph,
        s: Vertex,
        z: Vertex,
        k: usize,
        model: PathModel,
    ) -> Result<Self, SolveError> {
        if s == z || s >= graph.n() || z >= graph.n() {
            return Err(SolveError::BadTerminals { s, z, n: graph.n() });
        }
        Ok(SeparatorInstance { graph, s, z, k, model })
    }

    pub fn with_budget(&self, k: usize) -> Self {
        SeparatorInstance { k, ..self.clone() }
    }

    pub fn query(&self) -> Query {
        Query { s: self.s, z: self.z, k: self.k }
    }

    /// A time-edge joining `s` and `z` directly, if any. Such an instance has
    /// no separator at all.
    pub fn direct_edge(&self) -> Option<TemporalPath> {
        direct_edge(&self.graph, self.s, self.z)
    }
}

pub(crate) fn direct_edge(graph: &TemporalGraph, s: Vertex, z: Vertex) -> Option<TemporalPath> {
    graph
        .edges()
        .iter()
        .find(|e| e.touches(s) && e.touches(z))
        .map(|e| TemporalPath::new(vec![Step { from: s, to: z, t: e.t }]))
}

/// Outcome of a separation query at a fixed budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorResult {
    pub feasible: bool,
    /// Sorted separator; empty when infeasible.
    pub separator: Vec<Vertex>,
    /// A temporal path surviving the last attempted removal set, when the
    /// solver can produce one.
    pub witness: Option<TemporalPath>,
}

impl SeparatorResult {
    pub fn yes(mut separator: Vec<Vertex>) -> Self {
        separator.sort_unstable();
        separator.dedup();
        SeparatorResult { feasible: true, separator, witness: None }
    }

    pub fn no(witness: Option<TemporalPath>) -> Self {
        SeparatorResult { feasible: false, separator: Vec::new(), witness }
    }

    pub fn size(&self) -> Option<usize> {
        self.feasible.then_some(self.separator.len())
    }
}
