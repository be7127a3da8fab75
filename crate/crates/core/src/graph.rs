//! Temporal and static graph representations.
//!
//! A [`TemporalGraph`] stores an undirected vertex set `0..n` together with a
//! set of time-edges `({u, v}, t)`, kept sorted by `(t, min(u,v), max(u,v))`.
//! Every constructor normalizes the edge list, so two graphs with the same
//! edge set compare equal regardless of input order or duplicates.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::GraphError;

/// Dense vertex index in `0..n`.
pub type Vertex = usize;

/// Time label. Labels of a graph with maximum label `tau` live in `1..=tau`.
pub type Time = u64;

/// An undirected edge `{u, v}` present at time `t`. Endpoints are stored with
/// `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TimeEdge {
    pub u: Vertex,
    pub v: Vertex,
    pub t: Time,
}

impl TimeEdge {
    /// Builds an edge with canonical endpoint order. Self-loops are not
    /// rejected here; [`TemporalGraph::new`] does that.
    pub fn new(a: Vertex, b: Vertex, t: Time) -> Self {
        let (u, v) = if a <= b { (a, b) } else { (b, a) };
        TimeEdge { u, v, t }
    }

    pub fn touches(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`, if `x` is an endpoint.
    pub fn other(&self, x: Vertex) -> Option<Vertex> {
        if self.u == x {
            Some(self.v)
        } else if self.v == x {
            Some(self.u)
        } else {
            None
        }
    }

    pub fn pair(&self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }
}

impl Ord for TimeEdge {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.t, self.u, self.v).cmp(&(other.t, other.u, other.v))
    }
}

impl PartialOrd for TimeEdge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Which temporal paths count as connections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PathModel {
    /// Labels strictly increase along the path.
    Strict,
    /// Labels are non-decreasing along the path.
    NonStrict,
}

impl PathModel {
    /// Whether a step at `next` may follow a step at `prev`.
    pub fn allows(self, prev: Time, next: Time) -> bool {
        match self {
            PathModel::Strict => prev < next,
            PathModel::NonStrict => prev <= next,
        }
    }
}

impl fmt::Display for PathModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathModel::Strict => f.write_str("strict"),
            PathModel::NonStrict => f.write_str("nonstrict"),
        }
    }
}

impl FromStr for PathModel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strict" => Ok(PathModel::Strict),
            "nonstrict" | "non-strict" => Ok(PathModel::NonStrict),
            other => Err(format!("unknown path model `{other}` (expected strict or nonstrict)")),
        }
    }
}

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct StaticGraph {
    adj: Vec<Vec<Vertex>>,
}

impl StaticGraph {
    pub fn new(n: usize) -> Self {
        StaticGraph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Self-loops are dropped and parallel
    /// edges merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                continue;
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        StaticGraph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Inserts `{u, v}`; returns false if it was already present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if u == v || self.has_edge(u, v) {
            return false;
        }
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        true
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Same vertex ids, every edge touching `removed` deleted.
    pub fn without(&self, removed: &[Vertex]) -> StaticGraph {
        let mut gone = vec![false; self.n()];
        for &x in removed {
            gone[x] = true;
        }
        StaticGraph::from_edges(
            self.n(),
            self.edges().filter(|&(u, v)| !gone[u] && !gone[v]),
        )
    }
}

/// One traversal `from -> to` of a time-edge at time `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub from: Vertex,
    pub to: Vertex,
    pub t: Time,
}

/// A sequence of oriented time-edge traversals.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash)]
pub struct TemporalPath {
    pub steps: Vec<Step>,
}

impl TemporalPath {
    pub fn new(steps: Vec<Step>) -> Self {
        TemporalPath { steps }
    }

    /// Convenience constructor from `(from, to, t)` triples.
    pub fn from_triples(triples: &[(Vertex, Vertex, Time)]) -> Self {
        TemporalPath {
            steps: triples.iter().map(|&(from, to, t)| Step { from, to, t }).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Visited vertices in order, starting at the first step's tail.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        if let Some(first) = self.steps.first() {
            out.push(first.from);
        }
        out.extend(self.steps.iter().map(|s| s.to));
        out
    }

    /// Visited vertices other than the two endpoints.
    pub fn interior(&self) -> Vec<Vertex> {
        let vs = self.vertices();
        if vs.len() <= 2 {
            return Vec::new();
        }
        vs[1..vs.len() - 1].to_vec()
    }
}

impl fmt::Display for TemporalPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}-{}@{}", s.from, s.to, s.t)?;
        }
        Ok(())
    }
}

/// First condition a candidate path violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathViolation {
    Empty,
    WrongStart { expected: Vertex, found: Vertex },
    WrongEnd { expected: Vertex, found: Vertex },
    Broken { step: usize },
    MissingEdge { step: usize },
    RepeatedVertex { vertex: Vertex },
    LabelOrder { step: usize },
}

impl fmt::Display for PathViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathViolation::Empty => write!(f, "path has no steps"),
            PathViolation::WrongStart { expected, found } => {
                write!(f, "path starts at {found}, expected {expected}")
            }
            PathViolation::WrongEnd { expected, found } => {
                write!(f, "path ends at {found}, expected {expected}")
            }
            PathViolation::Broken { step } => write!(f, "step {step} does not continue the path"),
            PathViolation::MissingEdge { step } => write!(f, "step {step} is not a time-edge"),
            PathViolation::RepeatedVertex { vertex } => write!(f, "vertex {vertex} visited twice"),
            PathViolation::LabelOrder { step } => write!(f, "label order violated at step {step}"),
        }
    }
}

/// Undirected temporal graph `(V, E, tau)` with `V = 0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemporalGraph {
    n: usize,
    tau: Time,
    edges: Vec<TimeEdge>,
}

impl TemporalGraph {
    /// Validates and normalizes. Duplicate time-edges collapse into one.
    pub fn new<I>(n: usize, tau: Time, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = TimeEdge>,
    {
        let mut list: Vec<TimeEdge> = Vec::new();
        for e in edges {
            let e = TimeEdge::new(e.u, e.v, e.t);
            if e.u == e.v {
                return Err(GraphError::SelfLoop { vertex: e.u });
            }
            if e.v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: e.v, n });
            }
            if e.t == 0 || e.t > tau {
                return Err(GraphError::LabelOutOfRange { label: e.t, tau });
            }
            list.push(e);
        }
        list.sort_unstable();
        list.dedup();
        Ok(TemporalGraph { n, tau, edges: list })
    }

    /// Like [`TemporalGraph::new`] with `tau` set to the largest label present.
    pub fn from_triples(n: usize, triples: &[(Vertex, Vertex, Time)]) -> Result<Self, GraphError> {
        let tau = triples.iter().map(|e| e.2).max().unwrap_or(0);
        Self::new(n, tau, triples.iter().map(|&(u, v, t)| TimeEdge::new(u, v, t)))
    }

    /// Wraps an edge list that is already sorted, deduplicated and valid.
    pub(crate) fn from_sorted_unchecked(n: usize, tau: Time, edges: Vec<TimeEdge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|e| e.u < e.v && e.v < n && e.t >= 1 && e.t <= tau));
        TemporalGraph { n, tau, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tau(&self) -> Time {
        self.tau
    }

    pub fn edges(&self) -> &[TimeEdge] {
        &self.edges
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Same graph with a larger maximum label; labels are untouched.
    pub fn with_tau(&self, tau: Time) -> Result<Self, GraphError> {
        if let Some(max) = self.edges.last().map(|e| e.t) {
            if max > tau {
                return Err(GraphError::LabelOutOfRange { label: max, tau });
            }
        }
        Ok(TemporalGraph { n: self.n, tau, edges: self.edges.clone() })
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex, t: Time) -> bool {
        self.edges.binary_search(&TimeEdge::new(a, b, t)).is_ok()
    }

    /// Whether `{a, b}` exists at any time.
    pub fn has_pair(&self, a: Vertex, b: Vertex) -> bool {
        let (u, v) = if a <= b { (a, b) } else { (b, a) };
        self.edges.iter().any(|e| e.u == u && e.v == v)
    }

    /// Maximal runs of edges sharing a label, in ascending label order.
    pub fn label_groups(&self) -> impl Iterator<Item = (Time, &[TimeEdge])> + '_ {
        self.edges.chunk_by(|a, b| a.t == b.t).map(|chunk| (chunk[0].t, chunk))
    }

    /// The static graph of edges labelled `t`.
    pub fn layer(&self, t: Time) -> Result<StaticGraph, GraphError> {
        if t == 0 || t > self.tau {
            return Err(GraphError::LabelOutOfRange { label: t, tau: self.tau });
        }
        let start = self.edges.partition_point(|e| e.t < t);
        let end = self.edges.partition_point(|e| e.t <= t);
        Ok(StaticGraph::from_edges(self.n, self.edges[start..end].iter().map(TimeEdge::pair)))
    }

    /// Union of all layers with labels erased.
    pub fn underlying(&self) -> StaticGraph {
        StaticGraph::from_edges(self.n, self.edges.iter().map(TimeEdge::pair))
    }

    /// Number of distinct labels at which each vertex pair appears.
    fn pair_multiplicities(&self) -> HashMap<(Vertex, Vertex), u64> {
        let mut counts: HashMap<(Vertex, Vertex), u64> = HashMap::new();
        for e in &self.edges {
            *counts.entry(e.pair()).or_default() += 1;
        }
        counts
    }

    /// Intersection of all layers `1..=tau`.
    pub fn maximal_static_subgraph(&self) -> StaticGraph {
        if self.tau == 0 {
            return StaticGraph::new(self.n);
        }
        let counts = self.pair_multiplicities();
        StaticGraph::from_edges(
            self.n,
            counts.into_iter().filter(|&(_, c)| c == self.tau).map(|(p, _)| p),
        )
    }

    /// Vertices incident to an edge that exists in some layer but not in all
    /// of them. Returned sorted.
    pub fn temporal_core(&self) -> Vec<Vertex> {
        let mut in_core = vec![false; self.n];
        for ((u, v), c) in self.pair_multiplicities() {
            if c < self.tau {
                in_core[u] = true;
                in_core[v] = true;
            }
        }
        (0..self.n).filter(|&v| in_core[v]).collect()
    }

    /// `G - S`: drops every time-edge touching `removed`, keeps all ids.
    pub fn remove_vertices(&self, removed: &[Vertex]) -> TemporalGraph {
        let mut gone = vec![false; self.n];
        for &x in removed {
            if x < self.n {
                gone[x] = true;
            }
        }
        let edges = self.edges.iter().copied().filter(|e| !gone[e.u] && !gone[e.v]).collect();
        TemporalGraph { n: self.n, tau: self.tau, edges }
    }

    /// Checks `path` against the graph, reporting the first violation.
    pub fn check_path(
        &self,
        path: &TemporalPath,
        model: PathModel,
        s: Vertex,
        z: Vertex,
    ) -> Result<(), PathViolation> {
        let steps = &path.steps;
        let (first, last) = match (steps.first(), steps.last()) {
            (Some(f), Some(l)) => (f, l),
            _ => return Err(PathViolation::Empty),
        };
        if first.from != s {
            return Err(PathViolation::WrongStart { expected: s, found: first.from });
        }
        let mut seen = vec![false; self.n];
        if s < self.n {
            seen[s] = true;
        }
        for (i, step) in steps.iter().enumerate() {
            if i > 0 {
                if step.from != steps[i - 1].to {
                    return Err(PathViolation::Broken { step: i });
                }
                if !model.allows(steps[i - 1].t, step.t) {
                    return Err(PathViolation::LabelOrder { step: i });
                }
            }
            if step.from >= self.n || step.to >= self.n || !self.has_edge(step.from, step.to, step.t) {
                return Err(PathViolation::MissingEdge { step: i });
            }
            if seen[step.to] {
                return Err(PathViolation::RepeatedVertex { vertex: step.to });
            }
            seen[step.to] = true;
        }
        if last.to != z {
            return Err(PathViolation::WrongEnd { expected: z, found: last.to });
        }
        Ok(())
    }

    /// Whether `path` is a temporal `(s, z)`-path of the given model in this graph.
    pub fn validate_path(&self, path: &TemporalPath, model: PathModel, s: Vertex, z: Vertex) -> bool {
        self.check_path(path, model, s, z).is_ok()
    }
}
