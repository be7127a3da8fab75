//! Text formats.
//!
//! Temporal instance:
//!
//! ```text
//! n m tau
//! q s z k        (optional query line)
//! u v t          (m lines)
//! ```
//!
//! Lines starting with `#` and blank lines are ignored everywhere. Static
//! graphs use an `n m` header followed by `u v` lines. Directed temporal
//! graphs with traversal times use `n m tau` followed by `u v t phi` lines.

use std::fmt::Write as _;

use crate::error::ParseError;
use crate::graph::{StaticGraph, TemporalGraph, Time, TimeEdge, Vertex};
use crate::instance::Query;
use crate::pathfinding::{DirectedTemporalGraph, TraversalArc};

/// Largest maximum label accepted on load.
pub const MAX_TAU: Time = 1 << 32;

/// A parsed temporal instance: the graph and an optional `(s, z, k)` query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFile {
    pub graph: TemporalGraph,
    pub query: Option<Query>,
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate(), last_line: 0 }
    }

    /// Next meaningful line as (1-based line number, tokens).
    fn next_tokens(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, raw) in self.inner.by_ref() {
            self.last_line = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            return Some((i + 1, line.split_whitespace().collect()));
        }
        None
    }

    fn peek_is_query(&self) -> bool {
        let mut probe = self.inner.clone();
        for (_, raw) in probe.by_ref() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            return line.split_whitespace().next() == Some("q");
        }
        false
    }
}

fn num<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T, ParseError> {
    tok.parse::<T>()
        .map_err(|_| ParseError::new(line, format!("expected {what}, found `{tok}`")))
}

fn expect_len(line: usize, toks: &[&str], n: usize, what: &str) -> Result<(), ParseError> {
    if toks.len() != n {
        return Err(ParseError::new(
            line,
            format!("{what} needs {n} fields, found {}", toks.len()),
        ));
    }
    Ok(())
}

/// Parses the temporal instance format.
pub fn parse_instance(text: &str) -> Result<InstanceFile, ParseError> {
    let mut lines = Lines::new(text);
    let (hl, header) = lines
        .next_tokens()
        .ok_or_else(|| ParseError::new(1, "missing header `n m tau`"))?;
    expect_len(hl, &header, 3, "header `n m tau`")?;
    let n: usize = num(hl, header[0], "vertex count")?;
    let m: usize = num(hl, header[1], "edge count")?;
    let tau: Time = num(hl, header[2], "maximum label")?;
    if tau > MAX_TAU {
        return Err(ParseError::new(hl, format!("maximum label {tau} exceeds {MAX_TAU}")));
    }

    let mut query = None;
    if lines.peek_is_query() {
        let (ql, toks) = lines.next_tokens().expect("peeked");
        expect_len(ql, &toks, 4, "query line `q s z k`")?;
        let s: Vertex = num(ql, toks[1], "source")?;
        let z: Vertex = num(ql, toks[2], "sink")?;
        let k: usize = num(ql, toks[3], "budget")?;
        if s >= n || z >= n {
            return Err(ParseError::new(ql, format!("query vertex out of range for n = {n}")));
        }
        if s == z {
            return Err(ParseError::new(ql, "source and sink must differ"));
        }
        query = Some(Query { s, z, k });
    }

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (el, toks) = lines.next_tokens().ok_or_else(|| {
            ParseError::new(lines.last_line.max(1), format!("expected {m} edges, found {}", edges.len()))
        })?;
        expect_len(el, &toks, 3, "edge `u v t`")?;
        let u: Vertex = num(el, toks[0], "vertex")?;
        let v: Vertex = num(el, toks[1], "vertex")?;
        let t: Time = num(el, toks[2], "time label")?;
        if u >= n || v >= n {
            return Err(ParseError::new(el, format!("vertex index out of range for n = {n}")));
        }
        if u == v {
            return Err(ParseError::new(el, format!("self-loop at vertex {u}")));
        }
        if t == 0 || t > tau {
            return Err(ParseError::new(el, format!("label {t} outside [1, {tau}]")));
        }
        edges.push(TimeEdge::new(u, v, t));
    }
    if let Some((xl, _)) = lines.next_tokens() {
        return Err(ParseError::new(xl, format!("unexpected content after {m} edges")));
    }
    let graph = TemporalGraph::new(n, tau, edges)
        .map_err(|e| ParseError::new(hl, e.to_string()))?;
    Ok(InstanceFile { graph, query })
}

/// Parses a graph without a query line requirement; convenience wrapper.
pub fn load_temporal_graph(text: &str) -> Result<TemporalGraph, ParseError> {
    parse_instance(text).map(|f| f.graph)
}

/// Canonical serialization: header, optional query, edges in sorted order.
pub fn write_instance(graph: &TemporalGraph, query: Option<&Query>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {}", graph.n(), graph.num_edges(), graph.tau());
    if let Some(q) = query {
        let _ = writeln!(out, "q {} {} {}", q.s, q.z, q.k);
    }
    for e in graph.edges() {
        let _ = writeln!(out, "{} {} {}", e.u, e.v, e.t);
    }
    out
}

pub fn parse_static_graph(text: &str) -> Result<StaticGraph, ParseError> {
    let mut lines = Lines::new(text);
    let (hl, header) = lines
        .next_tokens()
        .ok_or_else(|| ParseError::new(1, "missing header `n m`"))?;
    expect_len(hl, &header, 2, "header `n m`")?;
    let n: usize = num(hl, header[0], "vertex count")?;
    let m: usize = num(hl, header[1], "edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (el, toks) = lines
            .next_tokens()
            .ok_or_else(|| ParseError::new(lines.last_line.max(1), format!("expected {m} edges")))?;
        expect_len(el, &toks, 2, "edge `u v`")?;
        let u: Vertex = num(el, toks[0], "vertex")?;
        let v: Vertex = num(el, toks[1], "vertex")?;
        if u >= n || v >= n {
            return Err(ParseError::new(el, format!("vertex index out of range for n = {n}")));
        }
        if u == v {
            return Err(ParseError::new(el, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    if let Some((xl, _)) = lines.next_tokens() {
        return Err(ParseError::new(xl, format!("unexpected content after {m} edges")));
    }
    Ok(StaticGraph::from_edges(n, edges))
}

pub fn write_static_graph(graph: &StaticGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", graph.n(), graph.num_edges());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_traversal_graph(text: &str) -> Result<DirectedTemporalGraph, ParseError> {
    let mut lines = Lines::new(text);
    let (hl, header) = lines
        .next_tokens()
        .ok_or_else(|| ParseError::new(1, "missing header `n m tau`"))?;
    expect_len(hl, &header, 3, "header `n m tau`")?;
    let n: usize = num(hl, header[0], "vertex count")?;
    let m: usize = num(hl, header[1], "arc count")?;
    let tau: Time = num(hl, header[2], "maximum label")?;
    let mut arcs = Vec::with_capacity(m);
    for _ in 0..m {
        let (el, toks) = lines
            .next_tokens()
            .ok_or_else(|| ParseError::new(lines.last_line.max(1), format!("expected {m} arcs")))?;
        expect_len(el, &toks, 4, "arc `u v t phi`")?;
        let from: Vertex = num(el, toks[0], "vertex")?;
        let to: Vertex = num(el, toks[1], "vertex")?;
        let t: Time = num(el, toks[2], "time label")?;
        let traversal: Time = num(el, toks[3], "traversal time")?;
        if from >= n || to >= n {
            return Err(ParseError::new(el, format!("vertex index out of range for n = {n}")));
        }
        if from == to {
            return Err(ParseError::new(el, format!("self-loop at vertex {from}")));
        }
        if t == 0 || t > tau {
            return Err(ParseError::new(el, format!("label {t} outside [1, {tau}]")));
        }
        if traversal == 0 {
            return Err(ParseError::new(el, "traversal time must be positive"));
        }
        arcs.push(TraversalArc { from, to, t, traversal });
    }
    DirectedTemporalGraph::new(n, tau, arcs).map_err(|e| ParseError::new(hl, e.to_string()))
}
