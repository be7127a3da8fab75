//! Exhaustive oracles shared by the integration tests. Everything here
//! works from the raw edge lists, not from library search routines.
#![allow(dead_code)]

use itertools::Itertools;
use tempsep::generators::gen_random_temporal;
use tempsep::pathfinding::{DirectedTemporalGraph, TraversalArc};
use tempsep::{PathModel, StaticGraph, TemporalGraph, Time, TimeEdge, Vertex};

/// One point of the seeded random grid.
#[derive(Clone, Debug)]
pub struct Case {
    pub graph: TemporalGraph,
    pub s: Vertex,
    pub z: Vertex,
    pub k: usize,
    pub seed: u64,
}

/// `count` instances with n in `n_range`, tau in `1..=max_tau`, density
/// in {0.1, ..., 0.5}, k in 0..=4, s = 0, z = n - 1. Every other
/// instance has no `(s, z)` time-edge.
pub fn random_grid(count: usize, n_range: std::ops::RangeInclusive<usize>, max_tau: Time, base_seed: u64) -> Vec<Case> {
    let ns: Vec<usize> = n_range.collect();
    (0..count)
        .map(|i| {
            let n = ns[i % ns.len()];
            let tau = 1 + (i / ns.len()) as Time % max_tau;
            let p = 0.1 * (1 + (i / (ns.len() * max_tau as usize)) % 5) as f64;
            let seed = base_seed + i as u64;
            let forbid = (i % 2 == 0).then_some((0, n - 1));
            let graph = gen_random_temporal(n, tau, p, seed, forbid).unwrap();
            Case { graph, s: 0, z: n - 1, k: i % 5, seed }
        })
        .collect()
}

/// Instances with `tau = 4` where `s` only has labels 1 and 2 and `z` only
/// 3 and 4, so reduction usually leaves a nontrivial graph.
pub fn layered_grid(count: usize, base_seed: u64) -> Vec<Case> {
    use rand::{Rng, SeedableRng};
    (0..count)
        .map(|i| {
            let seed = base_seed + i as u64;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(5..=9);
            let (s, z) = (0, n - 1);
            let p = rng.gen_range(0.15..0.45);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if (u, v) == (s, z) {
                        continue;
                    }
                    let labels: &[Time] = if u == s {
                        &[1, 2]
                    } else if v == z {
                        &[3, 4]
                    } else {
                        &[1, 2, 3, 4]
                    };
                    for &t in labels {
                        if rng.gen_bool(p) {
                            edges.push(TimeEdge::new(u, v, t));
                        }
                    }
                }
            }
            let graph = TemporalGraph::new(n, 4, edges).unwrap();
            Case { graph, s, z, k: rng.gen_range(0..=4), seed }
        })
        .collect()
}

/// Calls `visit` on every temporal path from `s` (distinct vertices,
/// labels increasing or non-decreasing by model) avoiding `avoid`, with
/// the path's vertex list.
pub fn for_each_path(
    g: &TemporalGraph,
    s: Vertex,
    avoid: &[Vertex],
    model: PathModel,
    visit: &mut dyn FnMut(&[Vertex], &[Time]),
) {
    fn go(
        g: &TemporalGraph,
        model: PathModel,
        blocked: &mut Vec<bool>,
        verts: &mut Vec<Vertex>,
        times: &mut Vec<Time>,
        visit: &mut dyn FnMut(&[Vertex], &[Time]),
    ) {
        visit(verts, times);
        let v = *verts.last().unwrap();
        for e in g.edges() {
            let Some(w) = e.other(v) else { continue };
            if blocked[w] {
                continue;
            }
            let ok = match (times.last(), model) {
                (None, _) => true,
                (Some(&t), PathModel::Strict) => e.t > t,
                (Some(&t), PathModel::NonStrict) => e.t >= t,
            };
            if !ok {
                continue;
            }
            blocked[w] = true;
            verts.push(w);
            times.push(e.t);
            go(g, model, blocked, verts, times, visit);
            times.pop();
            verts.pop();
            blocked[w] = false;
        }
    }
    let mut blocked = vec![false; g.n()];
    for &a in avoid {
        blocked[a] = true;
    }
    if blocked[s] {
        return;
    }
    blocked[s] = true;
    go(g, model, &mut blocked, &mut vec![s], &mut Vec::new(), visit);
}

/// Fewest edges on a strict path from `s` to each vertex.
pub fn strict_distances(g: &TemporalGraph, s: Vertex) -> Vec<Option<usize>> {
    let mut best = vec![None::<usize>; g.n()];
    for_each_path(g, s, &[], PathModel::Strict, &mut |verts, _| {
        let v = *verts.last().unwrap();
        let d = verts.len() - 1;
        if best[v].is_none_or(|b| d < b) {
            best[v] = Some(d);
        }
    });
    best
}

/// Fewest edges on a strict path from each vertex to `z`.
pub fn strict_distances_to(g: &TemporalGraph, z: Vertex) -> Vec<Option<usize>> {
    (0..g.n())
        .map(|v| {
            let mut best = None::<usize>;
            for_each_path(g, v, &[], PathModel::Strict, &mut |verts, _| {
                if *verts.last().unwrap() == z {
                    let d = verts.len() - 1;
                    best = Some(best.map_or(d, |b| b.min(d)));
                }
            });
            best
        })
        .collect()
}

pub fn has_path(g: &TemporalGraph, s: Vertex, z: Vertex, avoid: &[Vertex], model: PathModel) -> bool {
    let mut found = false;
    for_each_path(g, s, avoid, model, &mut |verts, _| found |= *verts.last().unwrap() == z);
    found
}

pub fn reachable_set(g: &TemporalGraph, s: Vertex, avoid: &[Vertex], model: PathModel) -> Vec<Vertex> {
    let mut seen = vec![false; g.n()];
    for_each_path(g, s, avoid, model, &mut |verts, _| seen[*verts.last().unwrap()] = true);
    (0..g.n()).filter(|&v| seen[v]).collect()
}

/// Minimum separator size by subset enumeration over path enumeration;
/// `None` when `s` and `z` share a time-edge.
pub fn min_separator_size(g: &TemporalGraph, s: Vertex, z: Vertex, model: PathModel) -> Option<usize> {
    if g.has_pair(s, z) {
        return None;
    }
    let others: Vec<Vertex> = (0..g.n()).filter(|&v| v != s && v != z).collect();
    (0..=others.len()).find(|&size| {
        others
            .iter()
            .copied()
            .combinations(size)
            .any(|sub| !has_path(g, s, z, &sub, model))
    })
}

/// Least total traversal time over label-increasing arc sequences.
pub fn traversal_distances(d: &DirectedTemporalGraph, s: Vertex) -> Vec<Option<u64>> {
    fn go(arcs: &[TraversalArc], v: Vertex, last: Time, cost: u64, best: &mut Vec<Option<u64>>) {
        if best[v].is_none_or(|b| cost < b) {
            best[v] = Some(cost);
        }
        for a in arcs.iter().filter(|a| a.from == v && a.t > last) {
            go(arcs, a.to, a.t + a.traversal - 1, cost + a.traversal, best);
        }
    }
    let mut best = vec![None; d.n()];
    go(d.arcs(), s, 0, 0, &mut best);
    best
}

pub fn min_vertex_cover(g: &StaticGraph) -> usize {
    let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    (0..=g.n())
        .find(|&size| {
            (0..g.n())
                .combinations(size)
                .any(|c| edges.iter().all(|(u, v)| c.contains(u) || c.contains(v)))
        })
        .unwrap()
}

fn bfs_within(g: &StaticGraph, s: Vertex, z: Vertex, l: usize, removed: &[Vertex]) -> bool {
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut frontier = vec![s];
    for d in 1..=l {
        let mut next = Vec::new();
        for &v in &frontier {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX && !removed.contains(&w) {
                    dist[w] = d;
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    dist[z] != usize::MAX
}

/// Minimum length-bounded vertex separator; `None` if `s`, `z` adjacent.
pub fn min_lbs_size(g: &StaticGraph, s: Vertex, z: Vertex, l: usize) -> Option<usize> {
    if g.has_edge(s, z) {
        return None;
    }
    let others: Vec<Vertex> = (0..g.n()).filter(|&v| v != s && v != z).collect();
    (0..=others.len()).find(|&size| {
        others
            .iter()
            .copied()
            .combinations(size)
            .any(|sub| !bfs_within(g, s, z, l, &sub))
    })
}

/// Least cost of an edge set whose removal leaves no `(s, z)`-path with at
/// most `l` edges.
pub fn min_lbc_cost(n: usize, edges: &[(Vertex, Vertex)], costs: &[usize], s: Vertex, z: Vertex, l: usize) -> usize {
    let m = edges.len();
    (0u32..1 << m)
        .filter_map(|mask| {
            let kept = (0..m).filter(|i| mask >> i & 1 == 0).map(|i| edges[i]);
            let g = StaticGraph::from_edges(n, kept);
            (!bfs_within(&g, s, z, l, &[])).then(|| (0..m).filter(|i| mask >> i & 1 == 1).map(|i| costs[i]).sum())
        })
        .min()
        .unwrap()
}

struct Canon {
    pairs: Vec<(usize, usize)>,
    index: Vec<Vec<usize>>,
    perms: Vec<Vec<usize>>,
}

impl Canon {
    fn new(n: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        let mut index = vec![vec![0; n]; n];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            index[a][b] = i;
            index[b][a] = i;
        }
        Canon { pairs, index, perms: (0..n).permutations(n).collect() }
    }

    fn canonical(&self, adj: u64) -> u64 {
        let present: Vec<(usize, usize)> =
            self.pairs.iter().enumerate().filter(|(i, _)| adj >> i & 1 == 1).map(|(_, &p)| p).collect();
        self.perms
            .iter()
            .map(|perm| present.iter().fold(0u64, |code, &(a, b)| code | 1 << self.index[perm[a]][perm[b]]))
            .min()
            .unwrap()
    }
}

fn decode(n: usize, code: u64) -> StaticGraph {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    StaticGraph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, &p)| p))
}

fn encode(g: &StaticGraph) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..g.n()).tuple_combinations().collect();
    pairs
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| g.has_edge(a, b))
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

pub fn is_connected(g: &StaticGraph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&b| b)
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// grown vertex by vertex from the classes on `n - 1`.
pub fn all_graphs(n: usize) -> Vec<StaticGraph> {
    let mut classes: Vec<u64> = vec![0];
    for size in 2..=n {
        let canon = Canon::new(size);
        let mut next = std::collections::BTreeSet::new();
        for &code in &classes {
            let base = decode(size - 1, code);
            for nb in 0u32..1 << (size - 1) {
                let mut g = StaticGraph::from_edges(size, base.edges());
                for v in 0..size - 1 {
                    if nb >> v & 1 == 1 {
                        g.add_edge(v, size - 1);
                    }
                }
                next.insert(canon.canonical(encode(&g)));
            }
        }
        classes = next.into_iter().collect();
    }
    classes.into_iter().map(|c| decode(n, c)).collect()
}

pub fn connected_graphs(n: usize) -> Vec<StaticGraph> {
    all_graphs(n).into_iter().filter(is_connected).collect()
}
