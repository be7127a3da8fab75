//! Non-strict separation parameterized by the size of the temporal core.
//!
//! Outside the core every edge is present in every layer, so a separator
//! only has to be guessed on the core: which core vertices it takes, and how
//! the remaining core vertices group into mutually separated blocks. Each
//! guess becomes a Node Multiway Cut instance on the maximal static
//! subgraph with every block contracted to a terminal.

use rayon::prelude::*;

use crate::error::SolveError;
use crate::flow::{min_vertex_separator_static, Digraph};
use crate::graph::{PathModel, StaticGraph, TemporalGraph, Vertex};
use crate::instance::{direct_edge, SeparatorInstance, SeparatorResult};
use crate::nwc::{solve_nwc, NwcInstance};
use crate::pathfinding::{find_path, is_separator};

/// Core size above which [`solve_core_fpt`] refuses to enumerate.
pub const DEFAULT_MAX_CORE: usize = 16;

/// A guessed separator part on the core and a partition of the rest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionState {
    pub removed: Vec<Vertex>,
    pub blocks: Vec<Vec<Vertex>>,
    pub s_block: usize,
    pub z_block: usize,
}

/// All states over `core` (which must contain `s` and `z`) with at most
/// `k` removed vertices and `s`, `z` in different blocks. Removed sets come
/// by size, then by bitmask over the sorted non-terminal core vertices;
/// partitions as restricted growth strings in lexicographic order.
pub fn enumerate_partition_states(
    core: &[Vertex],
    s: Vertex,
    z: Vertex,
    k: usize,
) -> impl Iterator<Item = PartitionState> {
    let mut sorted = core.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let others: Vec<Vertex> = sorted.iter().copied().filter(|&v| v != s && v != z).collect();
    assert!(others.len() < 64, "core too large to enumerate");
    let mut masks: Vec<u64> = (0..1u64 << others.len())
        .filter(|m| m.count_ones() as usize <= k)
        .collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    masks.into_iter().flat_map(move |mask| {
        let removed: Vec<Vertex> =
            others.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
        let rest: Vec<Vertex> = sorted.iter().copied().filter(|v| !removed.contains(v)).collect();
        let si = rest.iter().position(|&v| v == s).expect("s in core");
        let zi = rest.iter().position(|&v| v == z).expect("z in core");
        RestrictedGrowth::new(rest.len()).filter_map(move |rgs| {
            if rgs[si] == rgs[zi] {
                return None;
            }
            let count = rgs.iter().max().map_or(0, |&m| m + 1);
            let mut blocks = vec![Vec::new(); count];
            for (i, &b) in rgs.iter().enumerate() {
                blocks[b].push(rest[i]);
            }
            Some(PartitionState { removed: removed.clone(), blocks, s_block: rgs[si], z_block: rgs[zi] })
        })
    })
}

/// Restricted growth strings of a given length in lexicographic order.
struct RestrictedGrowth {
    current: Option<Vec<usize>>,
}

impl RestrictedGrowth {
    fn new(len: usize) -> Self {
        RestrictedGrowth { current: Some(vec![0; len]) }
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut a = out.clone();
        // prefix_max[i] = max(a[0..i])
        let mut prefix_max = vec![0usize; a.len()];
        for i in 1..a.len() {
            prefix_max[i] = prefix_max[i - 1].max(a[i - 1]);
        }
        for i in (1..a.len()).rev() {
            if a[i] <= prefix_max[i] {
                a[i] += 1;
                for x in &mut a[i + 1..] {
                    *x = 0;
                }
                self.current = Some(a);
                break;
            }
        }
        Some(out)
    }
}

/// The maximal static subgraph with the core removed and each block
/// contracted to a new terminal. Vertex ids below `n` are kept (core
/// vertices become isolated); block `i` is vertex `n + i`.
pub fn build_quotient_graph(
    static_part: &StaticGraph,
    state: &PartitionState,
    core: &[Vertex],
) -> (StaticGraph, Vec<Vertex>) {
    let n = static_part.n();
    let mut in_core = vec![false; n];
    for &v in core {
        in_core[v] = true;
    }
    let mut block_of = vec![usize::MAX; n];
    for (i, b) in state.blocks.iter().enumerate() {
        for &v in b {
            block_of[v] = i;
        }
    }
    let r = state.blocks.len();
    let mut q = StaticGraph::new(n + r);
    for (u, v) in static_part.edges() {
        match (in_core[u], in_core[v]) {
            (false, false) => {
                q.add_edge(u, v);
            }
            (true, false) | (false, true) => {
                let (c, x) = if in_core[u] { (u, v) } else { (v, u) };
                if block_of[c] != usize::MAX {
                    q.add_edge(n + block_of[c], x);
                }
            }
            (true, true) => {
                let (bu, bv) = (block_of[u], block_of[v]);
                if bu != usize::MAX && bv != usize::MAX && bu != bv {
                    q.add_edge(n + bu, n + bv);
                }
            }
        }
    }
    (q, (n..n + r).collect())
}

/// The temporal core with `s` and `z` added, sorted.
pub fn padded_core(graph: &TemporalGraph, s: Vertex, z: Vertex) -> Vec<Vertex> {
    let mut w = graph.temporal_core();
    w.extend([s, z]);
    w.sort_unstable();
    w.dedup();
    w
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoreFptOptions {
    pub max_core: usize,
    /// Evaluate partition states on the rayon thread pool.
    pub parallel: bool,
}

impl Default for CoreFptOptions {
    fn default() -> Self {
        CoreFptOptions { max_core: DEFAULT_MAX_CORE, parallel: false }
    }
}

/// Decides a non-strict instance by enumeration over the temporal core.
pub fn solve_core_fpt(inst: &SeparatorInstance, opts: CoreFptOptions) -> Result<SeparatorResult, SolveError> {
    if inst.model != PathModel::NonStrict {
        return Err(SolveError::WrongModel { expected: "non-strict" });
    }
    let (g, s, z, k) = (&inst.graph, inst.s, inst.z, inst.k);
    if let Some(p) = direct_edge(g, s, z) {
        return Ok(SeparatorResult::no(Some(p)));
    }
    let core = padded_core(g, s, z);
    if core.len() > opts.max_core {
        return Err(SolveError::CoreTooLarge { size: core.len(), limit: opts.max_core });
    }
    let static_part = g.maximal_static_subgraph();
    let verified = |sep: Vec<Vertex>| is_separator(g, s, z, &sep, PathModel::NonStrict).then_some(sep);

    // Taking the whole core leaves a static graph.
    let inner: Vec<Vertex> = core.iter().copied().filter(|&v| v != s && v != z).collect();
    if inner.len() <= k {
        let rest = static_part.without(&inner);
        if let Ok(Some(cut)) = min_vertex_separator_static(&Digraph::symmetric(&rest), s, z, Some(k - inner.len())) {
            let mut sep = inner.clone();
            sep.extend(cut);
            if let Some(sep) = verified(sep) {
                return Ok(SeparatorResult::yes(sep));
            }
        }
    }

    let try_state = |state: PartitionState| -> Option<Vec<Vertex>> {
        let (q, terminals) = build_quotient_graph(&static_part, &state, &core);
        let nwc = NwcInstance { graph: q, terminals, budget: k - state.removed.len() };
        let mut sep = solve_nwc(&nwc)?;
        sep.extend(state.removed);
        verified(sep)
    };
    let states = enumerate_partition_states(&core, s, z, k);
    let found = if opts.parallel {
        states.collect::<Vec<_>>().into_par_iter().find_map_first(try_state)
    } else {
        states.into_iter().find_map(try_state)
    };
    Ok(match found {
        Some(sep) => SeparatorResult::yes(sep),
        None => SeparatorResult::no(find_path(g, s, z, &[], PathModel::NonStrict)),
    })
}

/// Smallest budget at which [`solve_core_fpt`] answers yes, with its
/// separator; `None` when `s` and `z` are adjacent.
pub fn min_separator_core_fpt(
    graph: &TemporalGraph,
    s: Vertex,
    z: Vertex,
    opts: CoreFptOptions,
) -> Result<Option<Vec<Vertex>>, SolveError> {
    if direct_edge(graph, s, z).is_some() {
        return Ok(None);
    }
    let inst = SeparatorInstance::new(graph.clone(), s, z, 0, PathModel::NonStrict)?;
    for k in 0..graph.n() {
        let r = solve_core_fpt(&inst.with_budget(k), opts)?;
        if r.feasible {
            return Ok(Some(r.separator));
        }
    }
    Err(SolveError::Internal("no separator of any size".into()))
}
