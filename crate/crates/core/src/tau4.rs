//! Strict separation for maximum label at most four.
//!
//! On a reduced graph the directed path cover graph has exactly the strict
//! temporal separators as its static `(s, z)`-vertex-separators, so a
//! minimum one falls out of a unit-capacity flow computation.

use crate::error::SolveError;
use crate::flow::{min_vertex_separator_static, Digraph};
use crate::graph::{PathModel, TemporalGraph, Vertex};
use crate::instance::{SeparatorInstance, SeparatorResult};
use crate::pathfinding::{is_separator, shortest_strict_path, ssstp, ssstp_to_sink};
use crate::preprocess::{check_reduced, normalize_instance, reduce_instance, ReduceOutcome};

/// Shortest strict distances `(s -> v, v -> z)` of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DistancePair {
    pub from_s: usize,
    pub to_z: usize,
}

impl std::fmt::Display for DistancePair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.from_s, self.to_z)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedPathCoverGraph {
    pub digraph: Digraph,
    /// `None` for vertices without a strict path from `s` or to `z`.
    pub classes: Vec<Option<DistancePair>>,
}

impl DirectedPathCoverGraph {
    pub fn class(&self, v: Vertex) -> Option<DistancePair> {
        self.classes[v]
    }
}

/// Builds the directed path cover graph of a reduced graph with `tau <= 4`.
/// Graphs with a smaller maximum label are treated as if `tau` were 4.
pub fn build_dpcg(graph: &TemporalGraph, s: Vertex, z: Vertex) -> Result<DirectedPathCoverGraph, SolveError> {
    if graph.tau() > 4 {
        return Err(SolveError::TauTooLarge { tau: graph.tau() });
    }
    check_reduced(graph, s, z)?;
    let from_s = ssstp(graph, s);
    let to_z = ssstp_to_sink(graph, z);
    let classes: Vec<Option<DistancePair>> = (0..graph.n())
        .map(|v| match (from_s.get(v), to_z.get(v)) {
            (Some(a), Some(b)) => Some(DistancePair { from_s: a, to_z: b }),
            _ => None,
        })
        .collect();
    for (v, c) in classes.iter().enumerate() {
        if v != s && v != z && *c == Some(DistancePair { from_s: 1, to_z: 1 }) {
            return Err(SolveError::Internal(format!("vertex {v} is in V_(1,1) of a reduced graph")));
        }
    }

    let mut digraph = Digraph::new(graph.n());
    let class = |v: Vertex| classes[v].expect("every edge of a reduced graph is on an (s, z)-walk");
    let arc = |v: Vertex, w: Vertex| -> bool {
        if w == s || v == z {
            return false;
        }
        if v == s || w == z {
            return true;
        }
        let (cv, cw) = (class(v), class(w));
        cv.from_s < cw.from_s
            || (cv == DistancePair { from_s: 2, to_z: 2 } && cw == DistancePair { from_s: 2, to_z: 1 })
    };
    for e in graph.edges() {
        for (v, w) in [(e.u, e.v), (e.v, e.u)] {
            if arc(v, w) {
                digraph.add_arc(v, w);
            }
        }
    }
    Ok(DirectedPathCoverGraph { digraph, classes })
}

/// Decides a strict instance with `tau <= 4` after label normalization.
/// Yes-answers carry a minimum separator; no-answers a surviving path.
pub fn solve_strict_tau4(inst: &SeparatorInstance) -> Result<SeparatorResult, SolveError> {
    if inst.model != PathModel::Strict {
        return Err(SolveError::WrongModel { expected: "strict" });
    }
    let norm = normalize_instance(inst);
    if norm.graph.tau() > 4 {
        return Err(SolveError::TauTooLarge { tau: norm.graph.tau() });
    }
    let result = match reduce_instance(&norm)? {
        ReduceOutcome::Decided(r) => r,
        ReduceOutcome::Reduced { instance, removed } => {
            let d = build_dpcg(&instance.graph, instance.s, instance.z)?;
            match min_vertex_separator_static(&d.digraph, instance.s, instance.z, Some(instance.k))? {
                Some(mut sep) => {
                    sep.extend(removed);
                    SeparatorResult::yes(sep)
                }
                None => SeparatorResult::no(shortest_strict_path(&instance.graph, instance.s, instance.z)),
            }
        }
    };
    if result.feasible && !is_separator(&inst.graph, inst.s, inst.z, &result.separator, PathModel::Strict) {
        return Err(SolveError::Internal(format!(
            "returned set {:?} does not separate",
            result.separator
        )));
    }
    Ok(result)
}

/// A minimum strict separator for `tau <= 4`, or `None` if `s` and `z` are
/// joined by a time-edge.
pub fn min_strict_separator_tau4(graph: &TemporalGraph, s: Vertex, z: Vertex) -> Result<Option<Vec<Vertex>>, SolveError> {
    let budget = graph.n().saturating_sub(2);
    let inst = SeparatorInstance::new(graph.clone(), s, z, budget, PathModel::Strict)?;
    let r = solve_strict_tau4(&inst)?;
    Ok(r.feasible.then_some(r.separator))
}
