//! Static vertex separators by unit-capacity augmenting paths on the
//! vertex-split network.

use std::collections::VecDeque;

use crate::error::SolveError;
use crate::graph::{StaticGraph, Vertex};

/// A simple directed graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Vec<Vertex>>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph { out: vec![Vec::new(); n] }
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Self {
        let mut d = Digraph::new(n);
        for (u, v) in arcs {
            d.add_arc(u, v);
        }
        d
    }

    /// Both orientations of every edge.
    pub fn symmetric(g: &StaticGraph) -> Self {
        Digraph::from_arcs(g.n(), g.edges().flat_map(|(u, v)| [(u, v), (v, u)]))
    }

    pub fn n(&self) -> usize {
        self.out.len()
    }

    /// Adds `u -> v` unless present. Returns whether it was added.
    pub fn add_arc(&mut self, u: Vertex, v: Vertex) -> bool {
        if self.out[u].contains(&v) {
            return false;
        }
        self.out[u].push(v);
        true
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.out[u].contains(&v)
    }

    pub fn out_neighbors(&self, u: Vertex) -> &[Vertex] {
        &self.out[u]
    }

    /// Arcs in insertion order per tail, tails ascending.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out.iter().enumerate().flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    pub fn num_arcs(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// Whether `z` is reachable from `s` while avoiding `removed`.
    pub fn reaches(&self, s: Vertex, z: Vertex, removed: &[Vertex]) -> bool {
        let mut seen = vec![false; self.n()];
        for &x in removed {
            seen[x] = true;
        }
        if seen[s] {
            return false;
        }
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            if u == z {
                return true;
            }
            for &v in &self.out[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        false
    }
}

const INF: u32 = u32::MAX / 2;

/// Residual network with paired forward and backward arcs.
struct Network {
    head: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network { head: Vec::new(), cap: Vec::new(), adj: vec![Vec::new(); nodes] }
    }

    fn add(&mut self, u: usize, v: usize, c: u32) {
        self.adj[u].push(self.head.len());
        self.head.push(v);
        self.cap.push(c);
        self.adj[v].push(self.head.len());
        self.head.push(u);
        self.cap.push(0);
    }

    /// One breadth-first augmentation of a single unit. Returns false when
    /// the sink is unreachable.
    fn augment(&mut self, src: usize, dst: usize) -> bool {
        let mut pred = vec![usize::MAX; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[src] = true;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            if x == dst {
                break;
            }
            for &a in &self.adj[x] {
                let y = self.head[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    pred[y] = a;
                    queue.push_back(y);
                }
            }
        }
        if !seen[dst] {
            return false;
        }
        let mut y = dst;
        while y != src {
            let a = pred[y];
            self.cap[a] -= 1;
            self.cap[a ^ 1] += 1;
            y = self.head[a ^ 1];
        }
        true
    }

    fn residual_reachable(&self, src: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[src] = true;
        let mut stack = vec![src];
        while let Some(x) = stack.pop() {
            for &a in &self.adj[x] {
                let y = self.head[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen
    }
}

fn v_in(v: Vertex) -> usize {
    2 * v
}

fn v_out(v: Vertex) -> usize {
    2 * v + 1
}

/// Split network of `d`: `v_in -> v_out` with capacity `vertex_cap(v)`, and
/// `u_out -> v_in` with unbounded capacity per arc.
fn split_network(d: &Digraph, extra: usize, vertex_cap: impl Fn(Vertex) -> u32) -> Network {
    let mut net = Network::new(2 * d.n() + extra);
    for v in 0..d.n() {
        net.add(v_in(v), v_out(v), vertex_cap(v));
    }
    for (u, v) in d.arcs() {
        net.add(v_out(u), v_in(v), INF);
    }
    net
}

/// A minimum `(s, z)`-vertex-separator of `d` if one of size at most
/// `budget` exists (`None` budget means unbounded). At most `budget + 1`
/// augmentations are run. An arc `s -> z` makes separation impossible.
pub fn min_vertex_separator_static(
    d: &Digraph,
    s: Vertex,
    z: Vertex,
    budget: Option<usize>,
) -> Result<Option<Vec<Vertex>>, SolveError> {
    if s == z || s >= d.n() || z >= d.n() {
        return Err(SolveError::BadTerminals { s, z, n: d.n() });
    }
    if d.has_arc(s, z) {
        return Err(SolveError::Inseparable);
    }
    let mut net = split_network(d, 0, |v| if v == s || v == z { INF } else { 1 });
    let (src, dst) = (v_out(s), v_in(z));
    let mut flow = 0;
    while net.augment(src, dst) {
        flow += 1;
        if budget.is_some_and(|k| flow > k) {
            return Ok(None);
        }
    }
    let reach = net.residual_reachable(src);
    let sep: Vec<Vertex> = (0..d.n())
        .filter(|&v| v != s && v != z && reach[v_in(v)] && !reach[v_out(v)])
        .collect();
    debug_assert_eq!(sep.len(), flow);
    Ok(Some(sep))
}

/// Maximum number of pairwise vertex-disjoint paths from `sources` to
/// `sinks`, endpoints included, stopping early at `limit`.
pub fn max_disjoint_paths(d: &Digraph, sources: &[Vertex], sinks: &[Vertex], limit: Option<usize>) -> usize {
    let (src, dst) = (2 * d.n(), 2 * d.n() + 1);
    let mut net = split_network(d, 2, |_| 1);
    for &v in sources {
        net.add(src, v_in(v), 1);
    }
    for &v in sinks {
        net.add(v_out(v), dst, 1);
    }
    let mut flow = 0;
    while limit.is_none_or(|l| flow < l) && net.augment(src, dst) {
        flow += 1;
    }
    flow
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_has_single_cut_vertex() {
        // s = 0, a = 1, z = 2
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2)]);
        assert_eq!(min_vertex_separator_static(&d, 0, 2, Some(1)).unwrap(), Some(vec![1]));
    }

    #[test]
    fn two_disjoint_paths_exceed_budget_one() {
        let d = Digraph::from_arcs(4, [(0, 1), (1, 3), (0, 2), (2, 3)]);
        assert_eq!(min_vertex_separator_static(&d, 0, 3, Some(1)).unwrap(), None);
        assert_eq!(min_vertex_separator_static(&d, 0, 3, None).unwrap(), Some(vec![1, 2]));
    }

    #[test]
    fn direction_is_respected() {
        let d = Digraph::from_arcs(3, [(1, 0), (1, 2)]);
        assert_eq!(min_vertex_separator_static(&d, 0, 2, Some(0)).unwrap(), Some(vec![]));
    }

    #[test]
    fn direct_arc_is_inseparable() {
        let d = Digraph::from_arcs(2, [(0, 1)]);
        assert_eq!(min_vertex_separator_static(&d, 0, 1, None), Err(SolveError::Inseparable));
        // The reverse arc alone is fine.
        let d = Digraph::from_arcs(2, [(1, 0)]);
        assert_eq!(min_vertex_separator_static(&d, 0, 1, None).unwrap(), Some(vec![]));
    }

    #[test]
    fn disjoint_paths_between_sets() {
        // Two parallel chains 0-2-4 and 1-3-5 plus a bridge 2-3.
        let g = StaticGraph::from_edges(6, [(0, 2), (2, 4), (1, 3), (3, 5), (2, 3)]);
        let d = Digraph::symmetric(&g);
        assert_eq!(max_disjoint_paths(&d, &[0, 1], &[4, 5], None), 2);
        assert_eq!(max_disjoint_paths(&d, &[0, 1], &[4], None), 1);
        assert_eq!(max_disjoint_paths(&d, &[0, 1], &[4, 5], Some(1)), 1);
    }
}
