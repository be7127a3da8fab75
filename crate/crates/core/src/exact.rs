//! Exact solvers: subset enumeration and bounded search trees.
//!
//! The brute-force solvers only use the reachability predicates, so they
//! serve as independent oracles for everything else.

use std::collections::VecDeque;

use itertools::Itertools;

use crate::error::SolveError;
use crate::graph::{PathModel, StaticGraph, TemporalGraph, TemporalPath, Vertex};
use crate::instance::{direct_edge, SeparatorInstance, SeparatorResult};
use crate::pathfinding::{find_path_masked, reachable_masked, shortest_strict_path};

/// Largest vertex count accepted by the subset-enumeration solvers.
pub const BRUTE_FORCE_LIMIT: usize = 26;

fn guard(n: usize) -> Result<(), SolveError> {
    if n > BRUTE_FORCE_LIMIT {
        return Err(SolveError::TooLarge { n, limit: BRUTE_FORCE_LIMIT });
    }
    Ok(())
}

fn check_terminals(n: usize, s: Vertex, z: Vertex) -> Result<(), SolveError> {
    if s == z || s >= n || z >= n {
        return Err(SolveError::BadTerminals { s, z, n });
    }
    Ok(())
}

/// First subset of `V \ {s, z}` of size at most `limit`, by size and then
/// lexicographically, for which `separates` holds.
fn first_separating_subset(
    n: usize,
    s: Vertex,
    z: Vertex,
    limit: usize,
    mut separates: impl FnMut(&[bool]) -> bool,
) -> Option<Vec<Vertex>> {
    let candidates: Vec<Vertex> = (0..n).filter(|&v| v != s && v != z).collect();
    let mut mask = vec![false; n];
    for size in 0..=limit.min(candidates.len()) {
        for subset in candidates.iter().copied().combinations(size) {
            for &v in &subset {
                mask[v] = true;
            }
            let ok = separates(&mask);
            for &v in &subset {
                mask[v] = false;
            }
            if ok {
                return Some(subset);
            }
        }
    }
    None
}

/// The lexicographically smallest minimum separator, or `None` when `s` and
/// `z` are joined by a time-edge.
pub fn brute_force_min_separator(
    graph: &TemporalGraph,
    s: Vertex,
    z: Vertex,
    model: PathModel,
) -> Result<Option<Vec<Vertex>>, SolveError> {
    brute_force_bounded(graph, s, z, model, graph.n())
}

/// Like [`brute_force_min_separator`], but gives up above size `k`.
pub fn brute_force_bounded(
    graph: &TemporalGraph,
    s: Vertex,
    z: Vertex,
    model: PathModel,
    k: usize,
) -> Result<Option<Vec<Vertex>>, SolveError> {
    check_terminals(graph.n(), s, z)?;
    guard(graph.n())?;
    if direct_edge(graph, s, z).is_some() {
        return Ok(None);
    }
    Ok(first_separating_subset(graph.n(), s, z, k, |mask| {
        !reachable_masked(graph, s, z, mask, model)
    }))
}

/// Budget-`k` decision by subset enumeration.
pub fn brute_force_decide(inst: &SeparatorInstance) -> Result<SeparatorResult, SolveError> {
    Ok(match brute_force_bounded(&inst.graph, inst.s, inst.z, inst.model, inst.k)? {
        Some(sep) => SeparatorResult::yes(sep),
        None => SeparatorResult::no(crate::pathfinding::find_path(&inst.graph, inst.s, inst.z, &[], inst.model)),
    })
}

/// Search-tree decision: pick a path avoiding the current set, branch on
/// its interior vertices. Strict paths are shortest paths, so the tree has
/// at most `(tau - 1)^k` leaves; non-strict paths carry no such bound.
pub fn branch_solve(inst: &SeparatorInstance) -> Result<SeparatorResult, SolveError> {
    let (g, s, z) = (&inst.graph, inst.s, inst.z);
    if let Some(p) = direct_edge(g, s, z) {
        return Ok(SeparatorResult::no(Some(p)));
    }
    let mut removed = vec![false; g.n()];
    let mut chosen = Vec::new();
    let mut witness = None;
    if branch(g, s, z, inst.model, inst.k, &mut removed, &mut chosen, &mut witness) {
        Ok(SeparatorResult::yes(chosen))
    } else {
        Ok(SeparatorResult::no(witness))
    }
}

/// [`branch_solve`] restricted to the strict model.
pub fn branch_solve_strict(inst: &SeparatorInstance) -> Result<SeparatorResult, SolveError> {
    if inst.model != PathModel::Strict {
        return Err(SolveError::WrongModel { expected: "strict" });
    }
    branch_solve(inst)
}

/// [`branch_solve`] restricted to the non-strict model.
pub fn branch_solve_nonstrict(inst: &SeparatorInstance) -> Result<SeparatorResult, SolveError> {
    if inst.model != PathModel::NonStrict {
        return Err(SolveError::WrongModel { expected: "non-strict" });
    }
    branch_solve(inst)
}

fn surviving_path(g: &TemporalGraph, s: Vertex, z: Vertex, model: PathModel, removed: &[bool]) -> Option<TemporalPath> {
    match model {
        PathModel::Strict => {
            let gone: Vec<Vertex> = (0..g.n()).filter(|&v| removed[v]).collect();
            shortest_strict_path(&g.remove_vertices(&gone), s, z)
        }
        PathModel::NonStrict => find_path_masked(g, s, z, removed, model),
    }
}

#[allow(clippy::too_many_arguments)]
fn branch(
    g: &TemporalGraph,
    s: Vertex,
    z: Vertex,
    model: PathModel,
    budget: usize,
    removed: &mut Vec<bool>,
    chosen: &mut Vec<Vertex>,
    witness: &mut Option<TemporalPath>,
) -> bool {
    let Some(path) = surviving_path(g, s, z, model, removed) else {
        return true;
    };
    if budget == 0 {
        *witness = Some(path);
        return false;
    }
    for v in path.interior() {
        removed[v] = true;
        chosen.push(v);
        if branch(g, s, z, model, budget - 1, removed, chosen, witness) {
            return true;
        }
        chosen.pop();
        removed[v] = false;
    }
    false
}

/// A minimum separator via binary search over the budget of
/// [`branch_solve`], or `None` when `s` and `z` are adjacent.
pub fn branch_min_separator(
    graph: &TemporalGraph,
    s: Vertex,
    z: Vertex,
    model: PathModel,
) -> Result<Option<Vec<Vertex>>, SolveError> {
    check_terminals(graph.n(), s, z)?;
    if direct_edge(graph, s, z).is_some() {
        return Ok(None);
    }
    let inst = SeparatorInstance::new(graph.clone(), s, z, 0, model)?;
    let (mut lo, mut hi) = (0usize, graph.n() - 2);
    let mut best = branch_solve(&inst.with_budget(hi))?;
    debug_assert!(best.feasible);
    while lo < hi {
        let mid = (lo + hi) / 2;
        let r = branch_solve(&inst.with_budget(mid))?;
        if r.feasible {
            hi = r.separator.len().min(mid);
            best = r;
        } else {
            lo = mid + 1;
        }
    }
    Ok(Some(best.separator))
}

/// Whether `G - removed` has an `(s, z)`-path of length at most `l`.
pub fn has_short_path(g: &StaticGraph, s: Vertex, z: Vertex, l: usize, removed: &[bool]) -> bool {
    if removed[s] || removed[z] {
        return false;
    }
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        if v == z {
            return true;
        }
        if dist[v] == l {
            continue;
        }
        for &w in g.neighbors(v) {
            if !removed[w] && dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    false
}

/// A minimum length-bounded separator of size at most `k`: no
/// `(s, z)`-path of length at most `l` survives. `None` if none exists,
/// in particular when `s` and `z` are adjacent.
pub fn brute_force_lbs(
    g: &StaticGraph,
    s: Vertex,
    z: Vertex,
    k: usize,
    l: usize,
) -> Result<Option<Vec<Vertex>>, SolveError> {
    check_terminals(g.n(), s, z)?;
    guard(g.n())?;
    if g.has_edge(s, z) {
        return Ok(None);
    }
    Ok(first_separating_subset(g.n(), s, z, k, |mask| !has_short_path(g, s, z, l, mask)))
}

/// Interior of a shortest `(s, z)`-path of length at most `l` in
/// `G - removed`.
fn short_path_interior(g: &StaticGraph, s: Vertex, z: Vertex, l: usize, removed: &[bool]) -> Option<Vec<Vertex>> {
    let mut parent = vec![usize::MAX; g.n()];
    let mut dist = vec![usize::MAX; g.n()];
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        if v == z {
            let mut interior = Vec::new();
            let mut x = parent[z];
            while x != s {
                interior.push(x);
                x = parent[x];
            }
            return Some(interior);
        }
        if dist[v] == l {
            continue;
        }
        for &w in g.neighbors(v) {
            if !removed[w] && dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Same answer as [`brute_force_lbs`] up to the choice among minimum
/// separators, by branching on the interior of a shortest short path.
/// Runs in `O(l^k (n + m))` without a vertex-count limit.
pub fn branch_lbs(
    g: &StaticGraph,
    s: Vertex,
    z: Vertex,
    k: usize,
    l: usize,
) -> Result<Option<Vec<Vertex>>, SolveError> {
    check_terminals(g.n(), s, z)?;
    if g.has_edge(s, z) {
        return Ok(None);
    }
    fn go(g: &StaticGraph, s: Vertex, z: Vertex, l: usize, budget: usize, removed: &mut [bool], chosen: &mut Vec<Vertex>) -> bool {
        let Some(path) = short_path_interior(g, s, z, l, removed) else {
            return true;
        };
        if budget == 0 {
            return false;
        }
        for v in path {
            removed[v] = true;
            chosen.push(v);
            if go(g, s, z, l, budget - 1, removed, chosen) {
                return true;
            }
            chosen.pop();
            removed[v] = false;
        }
        false
    }
    let mut removed = vec![false; g.n()];
    for budget in 0..=k {
        let mut chosen = Vec::new();
        if go(g, s, z, l, budget, &mut removed, &mut chosen) {
            chosen.sort_unstable();
            return Ok(Some(chosen));
        }
    }
    Ok(None)
}
