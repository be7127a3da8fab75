//! Exact Node Multiway Cut by bounded branching.

use std::collections::{HashMap, VecDeque};

use crate::flow::{min_vertex_separator_static, Digraph};
use crate::graph::{StaticGraph, Vertex};

/// Find at most `budget` non-terminal vertices whose removal leaves every
/// pair of terminals disconnected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NwcInstance {
    pub graph: StaticGraph,
    pub terminals: Vec<Vertex>,
    pub budget: usize,
}

/// A minimum-size multiway cut of size at most `budget`, or `None`.
///
/// Repeatedly takes a shortest path between two terminals and branches on
/// its interior vertices, iterating the budget upwards from a flow-based
/// lower bound so the first solution found is minimum. Removal sets already
/// known to fail at some budget are memoized.
pub fn solve_nwc(inst: &NwcInstance) -> Option<Vec<Vertex>> {
    let g = &inst.graph;
    let mut is_terminal = vec![false; g.n()];
    for &t in &inst.terminals {
        is_terminal[t] = true;
    }
    for &t in &inst.terminals {
        if g.neighbors(t).iter().any(|&w| is_terminal[w] && w != t) {
            return None;
        }
    }
    let lower = nwc_lower_bound(inst);
    if lower > inst.budget {
        return None;
    }
    let mut search = Search {
        g,
        is_terminal,
        terminals: &inst.terminals,
        removed: vec![false; g.n()],
        chosen: Vec::new(),
        failed: HashMap::new(),
    };
    (lower..=inst.budget).find_map(|b| search.run(b).then(|| {
        let mut s = search.chosen.clone();
        s.sort_unstable();
        s
    }))
}

/// Largest over terminals `x` of the minimum vertex cut between `x` and
/// the remaining terminals. Every multiway cut is at least this large.
pub fn nwc_lower_bound(inst: &NwcInstance) -> usize {
    let g = &inst.graph;
    if inst.terminals.len() < 2 {
        return 0;
    }
    // Extra vertex joined to all other terminals acts as the sink.
    let hub = g.n();
    let mut best = 0;
    for &x in &inst.terminals {
        let mut d = Digraph::from_arcs(g.n() + 1, g.edges().flat_map(|(u, v)| [(u, v), (v, u)]));
        for &t in &inst.terminals {
            if t != x {
                d.add_arc(t, hub);
            }
        }
        // Cuts through other terminals only make the bound weaker.
        if let Ok(Some(cut)) = min_vertex_separator_static(&d, x, hub, None) {
            best = best.max(cut.len());
        }
    }
    best
}

struct Search<'a> {
    g: &'a StaticGraph,
    is_terminal: Vec<bool>,
    terminals: &'a [Vertex],
    removed: Vec<bool>,
    chosen: Vec<Vertex>,
    /// Removal set (as a bitset) to the largest budget that failed.
    failed: HashMap<Vec<u64>, usize>,
}

impl Search<'_> {
    fn key(&self) -> Vec<u64> {
        let mut bits = vec![0u64; self.g.n().div_ceil(64)];
        for &v in &self.chosen {
            bits[v / 64] |= 1 << (v % 64);
        }
        bits
    }

    fn run(&mut self, budget: usize) -> bool {
        let Some(path) = self.terminal_path() else {
            return true;
        };
        if budget == 0 {
            return false;
        }
        let key = self.key();
        if self.failed.get(&key).is_some_and(|&b| b >= budget) {
            return false;
        }
        for v in path {
            self.removed[v] = true;
            self.chosen.push(v);
            if self.run(budget - 1) {
                return true;
            }
            self.chosen.pop();
            self.removed[v] = false;
        }
        self.failed.insert(key, budget);
        false
    }

    /// Interior of a shortest path joining two distinct terminals, found
    /// by a multi-source search labelled with the originating terminal.
    fn terminal_path(&self) -> Option<Vec<Vertex>> {
        let n = self.g.n();
        let mut origin = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for &t in self.terminals {
            origin[t] = t;
            queue.push_back(t);
        }
        while let Some(v) = queue.pop_front() {
            for &w in self.g.neighbors(v) {
                if self.removed[w] {
                    continue;
                }
                if origin[w] == usize::MAX {
                    origin[w] = origin[v];
                    parent[w] = v;
                    queue.push_back(w);
                } else if origin[w] != origin[v] {
                    let mut path = Vec::new();
                    for mut x in [v, w] {
                        while !self.is_terminal[x] {
                            path.push(x);
                            x = parent[x];
                        }
                    }
                    return Some(path);
                }
            }
        }
        None
    }
}

/// Whether removing `cut` disconnects every pair of terminals.
pub fn is_multiway_cut(inst: &NwcInstance, cut: &[Vertex]) -> bool {
    if cut.iter().any(|v| inst.terminals.contains(v)) {
        return false;
    }
    let g = inst.graph.without(cut);
    let mut comp = vec![usize::MAX; g.n()];
    for &t in &inst.terminals {
        if comp[t] != usize::MAX {
            return false;
        }
        comp[t] = t;
        let mut stack = vec![t];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if comp[w] == usize::MAX {
                    comp[w] = t;
                    stack.push(w);
                }
            }
        }
    }
    true
}
