//! Strict static expansion: a DAG over `(vertex, time)` nodes whose
//! source-to-sink paths are exactly the strict temporal paths of the graph.
//!
//! Every vertex other than the source and the sink gets a column of nodes,
//! one per time in `{t, t+1 : v has an edge at t}`. A time-edge `{v, w}` at
//! `t` becomes the transit arcs `(v,t) -> (w,t+1)` and `(w,t) -> (v,t+1)`,
//! consecutive column nodes are joined by weight-0 column arcs, and edges at
//! the source or sink become source and sink arcs.
//!
//! Node ids are assigned in non-decreasing time order with the source first
//! and the sink last, so index order is a topological order.

use crate::graph::{TemporalGraph, Time, Vertex};

pub type NodeId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExpansionNode {
    Source,
    Sink,
    Grid { vertex: Vertex, time: Time },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArcKind {
    Transit,
    SourceArc,
    SinkArc,
    Column,
}

impl ArcKind {
    pub fn name(self) -> &'static str {
        match self {
            ArcKind::Transit => "transit",
            ArcKind::SourceArc => "source",
            ArcKind::SinkArc => "sink",
            ArcKind::Column => "column",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpansionArc {
    pub from: NodeId,
    pub to: NodeId,
    pub kind: ArcKind,
    pub weight: u64,
    /// Index of the originating input arc; `None` for column arcs.
    pub origin: Option<usize>,
}

/// Directed time-stamped arc fed to the builder.
#[derive(Clone, Copy, Debug)]
pub(crate) struct RawArc {
    pub from: Vertex,
    pub to: Vertex,
    pub t: Time,
    pub weight: u64,
}

#[derive(Clone, Debug)]
pub struct StrictStaticExpansion {
    source: Vertex,
    sink: Option<Vertex>,
    nodes: Vec<ExpansionNode>,
    arcs: Vec<ExpansionArc>,
    columns: Vec<Vec<(Time, NodeId)>>,
    out_start: Vec<usize>,
    out_arcs: Vec<usize>,
}

impl StrictStaticExpansion {
    /// Expansion of `(graph, s, z)`. Time-edges joining `s` and `z` directly
    /// produce no arc; callers detect them separately.
    pub fn build(graph: &TemporalGraph, s: Vertex, z: Vertex) -> Self {
        Self::build_undirected(graph, s, Some(z))
    }

    /// Expansion in which only `s` is special; every other vertex gets a column.
    pub fn build_from_source(graph: &TemporalGraph, s: Vertex) -> Self {
        Self::build_undirected(graph, s, None)
    }

    fn build_undirected(graph: &TemporalGraph, s: Vertex, z: Option<Vertex>) -> Self {
        // Each time-edge i yields raw arcs 2i (u -> v) and 2i+1 (v -> u).
        let mut raw = Vec::with_capacity(2 * graph.num_edges());
        for e in graph.edges() {
            raw.push(RawArc { from: e.u, to: e.v, t: e.t, weight: 1 });
            raw.push(RawArc { from: e.v, to: e.u, t: e.t, weight: 1 });
        }
        Self::from_raw(graph.n(), s, z, &raw)
    }

    /// Builds from directed arcs sorted by time. Linear in `raw.len() + n`.
    pub(crate) fn from_raw(n: usize, source: Vertex, sink: Option<Vertex>, raw: &[RawArc]) -> Self {
        debug_assert!(raw.windows(2).all(|w| w[0].t <= w[1].t));
        let is_grid = |x: Vertex| x != source && Some(x) != sink;
        let mut nodes = vec![ExpansionNode::Source];
        let mut columns: Vec<Vec<(Time, NodeId)>> = vec![Vec::new(); n];
        fn ensure(
            nodes: &mut Vec<ExpansionNode>,
            columns: &mut [Vec<(Time, NodeId)>],
            x: Vertex,
            t: Time,
        ) {
            let col = &mut columns[x];
            if col.last().map(|&(last, _)| last) != Some(t) {
                col.push((t, nodes.len()));
                nodes.push(ExpansionNode::Grid { vertex: x, time: t });
            }
        }

        let mut arcs = Vec::with_capacity(raw.len() + 2 * n);
        // Node ids of (from, t) and (to, t + 1) per raw arc, filled per group.
        let mut tail_ids = vec![usize::MAX; raw.len()];
        let mut head_ids = vec![usize::MAX; raw.len()];
        let mut start = 0;
        while start < raw.len() {
            let t = raw[start].t;
            let mut end = start;
            while end < raw.len() && raw[end].t == t {
                end += 1;
            }
            for i in start..end {
                for x in [raw[i].from, raw[i].to] {
                    if is_grid(x) {
                        ensure(&mut nodes, &mut columns, x, t);
                    }
                }
            }
            for i in start..end {
                for x in [raw[i].from, raw[i].to] {
                    if is_grid(x) {
                        ensure(&mut nodes, &mut columns, x, t + 1);
                    }
                }
            }
            for i in start..end {
                let a = raw[i];
                // After both passes a grid endpoint's column ends with (t, _), (t + 1, _).
                if is_grid(a.from) {
                    let col = &columns[a.from];
                    debug_assert_eq!(col[col.len() - 2].0, t);
                    tail_ids[i] = col[col.len() - 2].1;
                }
                if is_grid(a.to) {
                    let col = &columns[a.to];
                    debug_assert_eq!(col[col.len() - 1].0, t + 1);
                    head_ids[i] = col[col.len() - 1].1;
                }
            }
            start = end;
        }

        let sink_id = sink.map(|_| nodes.len());
        if sink.is_some() {
            nodes.push(ExpansionNode::Sink);
        }

        for (i, a) in raw.iter().enumerate() {
            let from_grid = is_grid(a.from);
            let to_grid = is_grid(a.to);
            let arc = if a.from == source && to_grid {
                Some((0, head_ids[i], ArcKind::SourceArc))
            } else if from_grid && to_grid {
                Some((tail_ids[i], head_ids[i], ArcKind::Transit))
            } else if from_grid && Some(a.to) == sink {
                Some((tail_ids[i], sink_id.expect("sink present"), ArcKind::SinkArc))
            } else {
                None
            };
            if let Some((from, to, kind)) = arc {
                arcs.push(ExpansionArc { from, to, kind, weight: a.weight, origin: Some(i) });
            }
        }
        for col in &columns {
            for w in col.windows(2) {
                arcs.push(ExpansionArc {
                    from: w[0].1,
                    to: w[1].1,
                    kind: ArcKind::Column,
                    weight: 0,
                    origin: None,
                });
            }
        }

        let (out_start, out_arcs) = csr(nodes.len(), arcs.iter().map(|a| a.from));
        StrictStaticExpansion { source, sink, nodes, arcs, columns, out_start, out_arcs }
    }

    pub fn source_vertex(&self) -> Vertex {
        self.source
    }

    pub fn sink_vertex(&self) -> Option<Vertex> {
        self.sink
    }

    pub fn nodes(&self) -> &[ExpansionNode] {
        &self.nodes
    }

    pub fn arcs(&self) -> &[ExpansionArc] {
        &self.arcs
    }

    pub fn source_node(&self) -> NodeId {
        0
    }

    pub fn sink_node(&self) -> Option<NodeId> {
        self.sink.map(|_| self.nodes.len() - 1)
    }

    /// Column of `v` as ascending `(time, node)` pairs.
    pub fn column(&self, v: Vertex) -> &[(Time, NodeId)] {
        &self.columns[v]
    }

    /// The grid node `(v, t)`, if it exists.
    pub fn node(&self, v: Vertex, t: Time) -> Option<NodeId> {
        lookup(&self.columns[v], t)
    }

    /// Arc ids leaving `node`.
    pub fn out_arcs(&self, node: NodeId) -> &[usize] {
        &self.out_arcs[self.out_start[node]..self.out_start[node + 1]]
    }

    /// Nodes reachable from the source.
    pub fn forward_reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.nodes.len()];
        seen[0] = true;
        // Index order is topological.
        for x in 0..self.nodes.len() {
            if !seen[x] {
                continue;
            }
            for &a in self.out_arcs(x) {
                seen[self.arcs[a].to] = true;
            }
        }
        seen
    }

    /// Nodes from which the sink is reachable (all false without a sink).
    pub fn backward_reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.nodes.len()];
        let Some(sink) = self.sink_node() else {
            return seen;
        };
        seen[sink] = true;
        for x in (0..self.nodes.len()).rev() {
            if self.out_arcs(x).iter().any(|&a| seen[self.arcs[a].to]) {
                seen[x] = true;
            }
        }
        seen[sink] = true;
        seen
    }

    /// Whether index order is a topological order (every arc points forward).
    pub fn is_topologically_ordered(&self) -> bool {
        self.arcs.iter().all(|a| a.from < a.to)
    }

    /// Kahn's algorithm on the arc relation, independent of node numbering.
    pub fn is_acyclic(&self) -> bool {
        let mut indeg = vec![0usize; self.nodes.len()];
        for a in &self.arcs {
            indeg[a.to] += 1;
        }
        let mut stack: Vec<NodeId> = (0..self.nodes.len()).filter(|&x| indeg[x] == 0).collect();
        let mut visited = 0;
        while let Some(x) = stack.pop() {
            visited += 1;
            for &a in self.out_arcs(x) {
                let y = self.arcs[a].to;
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    stack.push(y);
                }
            }
        }
        visited == self.nodes.len()
    }
}

fn lookup(col: &[(Time, NodeId)], t: Time) -> Option<NodeId> {
    col.binary_search_by_key(&t, |&(time, _)| time).ok().map(|i| col[i].1)
}

/// Compressed adjacency: `start[x]..start[x+1]` indexes `list` for key `x`.
pub(crate) fn csr<I>(n: usize, keys: I) -> (Vec<usize>, Vec<usize>)
where
    I: Iterator<Item = usize> + Clone,
{
    let mut start = vec![0usize; n + 1];
    for k in keys.clone() {
        start[k + 1] += 1;
    }
    for i in 0..n {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut list = vec![0usize; start[n]];
    for (idx, k) in keys.enumerate() {
        list[fill[k]] = idx;
        fill[k] += 1;
    }
    (start, list)
}
