//! Label normalization, reduced instances, and the strict to non-strict
//! reduction.

use crate::error::SolveError;
use crate::graph::{PathModel, Step, TemporalGraph, TemporalPath, TimeEdge, Vertex};
use crate::instance::{direct_edge, SeparatorInstance, SeparatorResult};
use crate::pathfinding::{shortest_strict_path, StrictStaticExpansion};

/// Removes empty layers by mapping each label to its rank among the labels
/// in use. The result has `tau' = number of distinct labels <= |E|`.
pub fn normalize_time_labels(graph: &TemporalGraph) -> TemporalGraph {
    let mut edges = Vec::with_capacity(graph.num_edges());
    let mut rank = 0;
    for (_, group) in graph.label_groups() {
        rank += 1;
        edges.extend(group.iter().map(|e| TimeEdge { t: rank, ..*e }));
    }
    TemporalGraph::from_sorted_unchecked(graph.n(), rank, edges)
}

/// [`normalize_time_labels`] applied to the instance graph.
pub fn normalize_instance(inst: &SeparatorInstance) -> SeparatorInstance {
    SeparatorInstance { graph: normalize_time_labels(&inst.graph), ..inst.clone() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReduceOutcome {
    /// Answered outright. A yes-answer carries a minimum separator.
    Decided(SeparatorResult),
    /// An equivalent reduced instance; `removed` vertices belong to every
    /// separator and were charged to the budget.
    Reduced { instance: SeparatorInstance, removed: Vec<Vertex> },
}

/// Time-edges of `graph` that occur on some strict `(s, z)`-walk, as found
/// by forward and backward reachability in the expansion.
pub fn useful_edges(graph: &TemporalGraph, s: Vertex, z: Vertex) -> TemporalGraph {
    let h = StrictStaticExpansion::build(graph, s, z);
    let fwd = h.forward_reachable();
    let bwd = h.backward_reachable();
    let mut keep: Vec<bool> = graph.edges().iter().map(|e| e.other(s) == Some(z)).collect();
    for a in h.arcs() {
        if let Some(origin) = a.origin {
            if fwd[a.from] && bwd[a.to] {
                keep[origin / 2] = true;
            }
        }
    }
    let edges = graph
        .edges()
        .iter()
        .zip(&keep)
        .filter(|&(_, &k)| k)
        .map(|(e, _)| *e)
        .collect();
    TemporalGraph::from_sorted_unchecked(graph.n(), graph.tau(), edges)
}

/// Decides a strict instance or reduces it: every surviving time-edge lies
/// on a strict `(s, z)`-walk and no strict `(s, z)`-path has length at most
/// two. Vertex ids are kept; dropped vertices become isolated.
pub fn reduce_instance(inst: &SeparatorInstance) -> Result<ReduceOutcome, SolveError> {
    if inst.model != PathModel::Strict {
        return Err(SolveError::WrongModel { expected: "strict" });
    }
    let (s, z) = (inst.s, inst.z);
    if let Some(p) = direct_edge(&inst.graph, s, z) {
        return Ok(ReduceOutcome::Decided(SeparatorResult::no(Some(p))));
    }
    let mut graph = inst.graph.clone();
    let mut removed: Vec<Vertex> = Vec::new();
    loop {
        graph = useful_edges(&graph, s, z);
        let Some(path) = shortest_strict_path(&graph, s, z) else {
            return Ok(ReduceOutcome::Decided(SeparatorResult::yes(removed)));
        };
        if path.len() >= 3 {
            break;
        }
        if removed.len() == inst.k {
            // k + 1 vertex-disjoint paths of length two.
            return Ok(ReduceOutcome::Decided(SeparatorResult::no(Some(path))));
        }
        let middle = path.steps[0].to;
        removed.push(middle);
        graph = graph.remove_vertices(&[middle]);
    }
    let k = inst.k - removed.len();
    let instance = SeparatorInstance { graph, s, z, k, model: PathModel::Strict };
    Ok(ReduceOutcome::Reduced { instance, removed })
}

/// Checks the reduced-graph properties that can be read off in linear time:
/// the non-isolated part is connected, every edge is on a strict walk, and
/// no strict path of length at most two exists.
pub fn check_reduced(graph: &TemporalGraph, s: Vertex, z: Vertex) -> Result<(), SolveError> {
    let fail = |reason: &str| Err(SolveError::NotReduced { reason: reason.to_string() });
    if direct_edge(graph, s, z).is_some() {
        return fail("direct (s, z) time-edge");
    }
    if useful_edges(graph, s, z).num_edges() != graph.num_edges() {
        return fail("some time-edge lies on no strict (s, z)-walk");
    }
    if let Some(p) = shortest_strict_path(graph, s, z) {
        if p.len() <= 2 {
            return fail("strict (s, z)-path of length two");
        }
    }
    let ug = graph.underlying();
    let active: Vec<Vertex> = (0..graph.n()).filter(|&v| ug.degree(v) > 0).collect();
    if let Some(&root) = active.first() {
        let mut seen = vec![false; graph.n()];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(v) = stack.pop() {
            for &w in ug.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        if active.iter().any(|&v| !seen[v]) {
            return fail("underlying graph is disconnected");
        }
    }
    Ok(())
}

/// Subdivides every time-edge `{v, w}` at `t` by two edge-vertices, giving
/// `v -[2t-1]- e_vw -[2t]- w` and `w -[2t-1]- e_wv -[2t]- v`. Edge `i` in
/// sorted order gets edge-vertices `n + 2i` and `n + 2i + 1`.
pub fn strict_to_nonstrict(inst: &SeparatorInstance) -> Result<SeparatorInstance, SolveError> {
    if inst.model != PathModel::Strict {
        return Err(SolveError::WrongModel { expected: "strict" });
    }
    let g = &inst.graph;
    let n = g.n();
    let mut edges = Vec::with_capacity(4 * g.num_edges());
    for (i, e) in g.edges().iter().enumerate() {
        let (vw, wv) = (n + 2 * i, n + 2 * i + 1);
        edges.push(TimeEdge::new(e.u, vw, 2 * e.t - 1));
        edges.push(TimeEdge::new(vw, e.v, 2 * e.t));
        edges.push(TimeEdge::new(e.v, wv, 2 * e.t - 1));
        edges.push(TimeEdge::new(wv, e.u, 2 * e.t));
    }
    let graph = TemporalGraph::new(n + 2 * g.num_edges(), 2 * g.tau(), edges)
        .map_err(|e| SolveError::Internal(e.to_string()))?;
    Ok(SeparatorInstance { graph, s: inst.s, z: inst.z, k: inst.k, model: PathModel::NonStrict })
}

/// Maps a path in the subdivided graph back to the original strict path.
pub fn lift_nonstrict_path(original: &TemporalGraph, path: &TemporalPath) -> TemporalPath {
    let n = original.n();
    let steps = path
        .steps
        .iter()
        .filter(|st| st.from < n && st.to >= n)
        .map(|st| {
            let e = original.edges()[(st.to - n) / 2];
            Step { from: st.from, to: e.other(st.from).expect("edge-vertex of this edge"), t: e.t }
        })
        .collect();
    TemporalPath::new(steps)
}
