//! Single-source shortest strict temporal paths.
//!
//! Distances are hop counts of strict temporal paths, computed as a
//! 0/1-weighted shortest path over the strict static expansion in its
//! topological order. Linear in the number of time-edges.

use super::expansion::{ArcKind, NodeId, StrictStaticExpansion};
use crate::graph::{Step, TemporalGraph, TemporalPath, TimeEdge, Vertex};

/// Shortest strict path lengths from one vertex. Unreachable vertices hold a
/// sentinel strictly larger than the number of time-edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    dist: Vec<usize>,
    infinity: usize,
}

impl DistanceTable {
    pub fn get(&self, v: Vertex) -> Option<usize> {
        let d = self.dist[v];
        (d < self.infinity).then_some(d)
    }

    pub fn is_reachable(&self, v: Vertex) -> bool {
        self.dist[v] < self.infinity
    }

    pub fn infinity(&self) -> usize {
        self.infinity
    }

    /// Raw entries, with unreachable vertices holding [`DistanceTable::infinity`].
    pub fn as_slice(&self) -> &[usize] {
        &self.dist
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }
}

/// Weighted DAG distances from the source node, with the arc used to reach
/// each node. First-found predecessors win ties.
pub(crate) fn node_distances(h: &StrictStaticExpansion) -> (Vec<u64>, Vec<usize>) {
    let count = h.nodes().len();
    let mut dist = vec![u64::MAX; count];
    let mut pred = vec![usize::MAX; count];
    dist[h.source_node()] = 0;
    for x in 0..count {
        let dx = dist[x];
        if dx == u64::MAX {
            continue;
        }
        for &a in h.out_arcs(x) {
            let arc = &h.arcs()[a];
            let cand = dx + arc.weight;
            if cand < dist[arc.to] {
                dist[arc.to] = cand;
                pred[arc.to] = a;
            }
        }
    }
    (dist, pred)
}

/// Shortest strict temporal path lengths from `s` to every vertex.
///
/// Relaxes the expansion built by [`StrictStaticExpansion::build_from_source`]
/// without materializing it: scanning labels in increasing order visits its
/// nodes in topological order, and the column arcs reduce to carrying each
/// vertex's best distance forward. Arcs of one label read the distances
/// from before that label, which keeps paths strict.
pub fn ssstp(graph: &TemporalGraph, s: Vertex) -> DistanceTable {
    let infinity = graph.num_edges() + 1;
    let mut dist = vec![infinity; graph.n()];
    dist[s] = 0;
    let mut pending: Vec<(Vertex, usize)> = Vec::new();
    for (_, group) in graph.label_groups() {
        pending.clear();
        for e in group {
            for (v, w) in [(e.u, e.v), (e.v, e.u)] {
                if w != s && dist[v] != infinity {
                    pending.push((w, dist[v] + 1));
                }
            }
        }
        for &(w, d) in &pending {
            if d < dist[w] {
                dist[w] = d;
            }
        }
    }
    DistanceTable { dist, infinity }
}

/// [`ssstp`] computed on the explicit expansion.
pub fn ssstp_explicit(graph: &TemporalGraph, s: Vertex) -> DistanceTable {
    let h = StrictStaticExpansion::build_from_source(graph, s);
    let (node_dist, _) = node_distances(&h);
    let infinity = graph.num_edges() + 1;
    let mut dist = vec![infinity; graph.n()];
    dist[s] = 0;
    for (v, slot) in dist.iter_mut().enumerate() {
        if v == s {
            continue;
        }
        if let Some(best) = h.column(v).iter().map(|&(_, id)| node_dist[id]).min() {
            if best != u64::MAX {
                *slot = best as usize;
            }
        }
    }
    DistanceTable { dist, infinity }
}

/// The graph with every label `t` replaced by `tau + 1 - t`.
pub fn time_reversed(graph: &TemporalGraph) -> TemporalGraph {
    let tau = graph.tau();
    let mut edges: Vec<TimeEdge> = graph
        .edges()
        .iter()
        .map(|e| TimeEdge::new(e.u, e.v, tau + 1 - e.t))
        .collect();
    edges.sort_unstable();
    TemporalGraph::from_sorted_unchecked(graph.n(), tau, edges)
}

/// Shortest strict temporal path lengths from every vertex to `z`.
pub fn ssstp_to_sink(graph: &TemporalGraph, z: Vertex) -> DistanceTable {
    ssstp(&time_reversed(graph), z)
}

/// A shortest strict temporal `(s, z)`-path, or `None` when `z` is not
/// strictly reachable. Paths through `z` are never needed, so `z` is the
/// expansion sink. Direct `s`-`z` time-edges are returned as one-step paths.
pub fn shortest_strict_path(graph: &TemporalGraph, s: Vertex, z: Vertex) -> Option<TemporalPath> {
    if let Some(direct) = crate::instance::direct_edge(graph, s, z) {
        return Some(direct);
    }
    let h = StrictStaticExpansion::build(graph, s, z);
    let (dist, pred) = node_distances(&h);
    let sink = h.sink_node().expect("built with sink");
    if dist[sink] == u64::MAX {
        return None;
    }
    Some(path_to_node(graph, &h, &pred, sink))
}

/// Walks predecessor arcs back from `target` and translates them to steps.
pub(crate) fn path_to_node(
    graph: &TemporalGraph,
    h: &StrictStaticExpansion,
    pred: &[usize],
    target: NodeId,
) -> TemporalPath {
    let mut steps = Vec::new();
    let mut x = target;
    while x != h.source_node() {
        let arc = &h.arcs()[pred[x]];
        if arc.kind != ArcKind::Column {
            let origin = arc.origin.expect("non-column arcs carry an origin");
            let e = graph.edges()[origin / 2];
            let (from, to) = if origin.is_multiple_of(2) { (e.u, e.v) } else { (e.v, e.u) };
            steps.push(Step { from, to, t: e.t });
        }
        x = arc.from;
    }
    steps.reverse();
    TemporalPath::new(steps)
}
