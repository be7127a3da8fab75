//! Reachability under both path models, with witness paths.

use crate::graph::{PathModel, Step, TemporalGraph, TemporalPath, Time, Vertex};

/// Earliest arrival label per vertex along strict paths avoiding `avoid`.
/// `arrival[s] == Some(0)`; unreachable vertices are `None`.
pub fn strict_earliest_arrival(graph: &TemporalGraph, s: Vertex, avoid: &[Vertex]) -> Vec<Option<Time>> {
    strict_scan(graph, s, &mask(graph.n(), avoid)).0
}

/// Vertices reachable from `s` by non-strict paths avoiding `avoid`, sorted.
pub fn nonstrict_reachable(graph: &TemporalGraph, s: Vertex, avoid: &[Vertex]) -> Vec<Vertex> {
    let parent = nonstrict_scan(graph, s, &mask(graph.n(), avoid));
    (0..graph.n()).filter(|&v| v == s || parent[v].is_some()).collect()
}

/// Whether some `model`-path from `s` to `z` avoids `avoid`.
pub fn is_reachable(graph: &TemporalGraph, s: Vertex, z: Vertex, avoid: &[Vertex], model: PathModel) -> bool {
    reachable_masked(graph, s, z, &mask(graph.n(), avoid), model)
}

/// Whether removing `separator` leaves no `model`-path from `s` to `z`.
/// A separator may not contain `s` or `z`.
pub fn is_separator(graph: &TemporalGraph, s: Vertex, z: Vertex, separator: &[Vertex], model: PathModel) -> bool {
    !separator.contains(&s) && !separator.contains(&z) && !is_reachable(graph, s, z, separator, model)
}

/// A `model`-path from `s` to `z` avoiding `avoid`, if one exists. Strict
/// witnesses follow earliest-arrival predecessors; non-strict witnesses
/// follow first-discovery predecessors within each layer.
pub fn find_path(
    graph: &TemporalGraph,
    s: Vertex,
    z: Vertex,
    avoid: &[Vertex],
    model: PathModel,
) -> Option<TemporalPath> {
    find_path_masked(graph, s, z, &mask(graph.n(), avoid), model)
}

pub(crate) fn mask(n: usize, avoid: &[Vertex]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &v in avoid {
        m[v] = true;
    }
    m
}

pub(crate) fn reachable_masked(graph: &TemporalGraph, s: Vertex, z: Vertex, avoid: &[bool], model: PathModel) -> bool {
    match model {
        PathModel::Strict => strict_scan(graph, s, avoid).0[z].is_some(),
        PathModel::NonStrict => nonstrict_scan(graph, s, avoid)[z].is_some(),
    }
}

pub(crate) fn find_path_masked(
    graph: &TemporalGraph,
    s: Vertex,
    z: Vertex,
    avoid: &[bool],
    model: PathModel,
) -> Option<TemporalPath> {
    let parent = match model {
        PathModel::Strict => strict_scan(graph, s, avoid).1,
        PathModel::NonStrict => nonstrict_scan(graph, s, avoid),
    };
    parent[z]?;
    let mut steps = Vec::new();
    let mut v = z;
    while v != s {
        let (u, t) = parent[v].expect("parent chain reaches s");
        steps.push(Step { from: u, to: v, t });
        v = u;
    }
    steps.reverse();
    Some(TemporalPath::new(steps))
}

type Parents = Vec<Option<(Vertex, Time)>>;

/// Single forward scan. Updates within a label group read arrivals from
/// before the group, so equal labels never chain.
fn strict_scan(graph: &TemporalGraph, s: Vertex, avoid: &[bool]) -> (Vec<Option<Time>>, Parents) {
    let n = graph.n();
    let mut arrival: Vec<Option<Time>> = vec![None; n];
    let mut parent: Parents = vec![None; n];
    if avoid[s] {
        return (arrival, parent);
    }
    arrival[s] = Some(0);
    for e in graph.edges() {
        if avoid[e.u] || avoid[e.v] {
            continue;
        }
        for (a, b) in [(e.u, e.v), (e.v, e.u)] {
            // arrival < t excludes vertices first reached in this group
            if matches!(arrival[a], Some(x) if x < e.t) && arrival[b].is_none() {
                arrival[b] = Some(e.t);
                parent[b] = Some((a, e.t));
            }
        }
    }
    (arrival, parent)
}

/// Per-layer search from the already reached set. Returns first-discovery
/// predecessors; `s` itself has none.
fn nonstrict_scan(graph: &TemporalGraph, s: Vertex, avoid: &[bool]) -> Parents {
    let n = graph.n();
    let mut parent: Parents = vec![None; n];
    let mut reached = vec![false; n];
    if avoid[s] {
        return parent;
    }
    reached[s] = true;
    // Layer adjacency rebuilt per group over touched vertices only.
    let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut touched: Vec<Vertex> = Vec::new();
    let mut queue: Vec<Vertex> = Vec::new();
    for (t, group) in graph.label_groups() {
        for e in group {
            if avoid[e.u] || avoid[e.v] {
                continue;
            }
            if adj[e.u].is_empty() {
                touched.push(e.u);
            }
            if adj[e.v].is_empty() {
                touched.push(e.v);
            }
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        queue.clear();
        queue.extend(touched.iter().copied().filter(|&v| reached[v]));
        let mut head = 0;
        while head < queue.len() {
            let a = queue[head];
            head += 1;
            for i in 0..adj[a].len() {
                let b = adj[a][i];
                if !reached[b] {
                    reached[b] = true;
                    parent[b] = Some((a, t));
                    queue.push(b);
                }
            }
        }
        for &v in &touched {
            adj[v].clear();
        }
        touched.clear();
    }
    parent
}
