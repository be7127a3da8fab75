//! Planar length-bounded separation from planar length-bounded cut with
//! two-valued edge costs.
//!
//! Every source vertex becomes a `(2k+2) x (2k+2)` grid whose boundary
//! carries six connector sets of `k + 1` vertices each. Listed clockwise
//! around the grid boundary (rows `i`, columns `j`, both 1-based,
//! `N = 2k + 2`, `h = k / 2`):
//!
//! | set  | side         | vertices, clockwise                  | attaches |
//! |------|--------------|--------------------------------------|----------|
//! | `C1` | top right    | `(1, k+2) .. (1, N)`                 | up       |
//! | `C2` | right        | `(h+1, N) .. (h+k+1, N)`             | right    |
//! | `C3` | bottom right | `(N, N) .. (N, k+2)`                 | down     |
//! | `C4` | bottom left  | `(N, k+1) .. (N, 1)`                 | down     |
//! | `C5` | left         | `(h+k+1, 1) .. (h+1, 1)`             | left     |
//! | `C6` | top left     | `(1, 1) .. (1, k+1)`                 | up       |
//!
//! The edge at position `i` of a vertex's rotation uses `C_i`. A cost-`k+1`
//! edge between `C_v^i` and `C_w^j` matches the `p`-th clockwise vertex of
//! `C_v^i` with the `(k - p)`-th clockwise vertex of `C_w^j`, which is the
//! only alignment that stays crossing-free for every position pair.

use crate::error::GeneratorError;
use crate::graph::{StaticGraph, Vertex};
use std::collections::HashMap;

/// Source instance: an embedded planar graph with edge costs in
/// `{1, k + 1}`, maximum degree 6 and terminals of degree 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarLbcInstance {
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
    /// Parallel to `edges`.
    pub costs: Vec<usize>,
    /// Clockwise neighbor order around each vertex; the edge to
    /// `rotation[v][i]` sits at position `i + 1`.
    pub rotation: Vec<Vec<Vertex>>,
    pub s: Vertex,
    pub z: Vertex,
    pub l: usize,
    pub k: usize,
}

impl PlanarLbcInstance {
    pub fn graph(&self) -> StaticGraph {
        StaticGraph::from_edges(self.n, self.edges.iter().copied())
    }
}

/// The emitted length-bounded separation instance: is there a set of at
/// most `k` vertices meeting every `(s, z)`-path of length at most `l`?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarLbsOutput {
    pub graph: StaticGraph,
    /// A planar rotation system of `graph`.
    pub rotation: Vec<Vec<Vertex>>,
    pub s: Vertex,
    pub z: Vertex,
    pub l: usize,
    pub k: usize,
    pub k_prime: usize,
    /// Per source vertex, its six connector sets in clockwise order.
    pub connectors: Vec<[Vec<Vertex>; 6]>,
}

/// One grid gadget on its own, vertices numbered row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridGadget {
    pub graph: StaticGraph,
    pub connectors: [Vec<Vertex>; 6],
}

/// `(k', l')` for budget `k` and source length bound `l`.
pub fn planar_parameters(k: usize, l: usize) -> (usize, usize) {
    let kp = (2 * k + 2) * (2 * k + 2) - 1;
    (kp, 2 + (l + 1) * kp + l * ((l + 1) * kp + 1))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    Up,
    Right,
    Down,
    Left,
}

/// Connector cells `(i, j)` in clockwise order, with the side they attach on.
fn connector_cells(k: usize) -> [(Side, Vec<(usize, usize)>); 6] {
    let n = 2 * k + 2;
    let h = k / 2;
    [
        (Side::Up, (k + 2..=n).map(|j| (1, j)).collect()),
        (Side::Right, (h + 1..=h + k + 1).map(|i| (i, n)).collect()),
        (Side::Down, (k + 2..=n).rev().map(|j| (n, j)).collect()),
        (Side::Down, (1..=k + 1).rev().map(|j| (n, j)).collect()),
        (Side::Left, (h + 1..=h + k + 1).rev().map(|i| (i, 1)).collect()),
        (Side::Up, (1..=k + 1).map(|j| (1, j)).collect()),
    ]
}

fn cell(base: usize, n: usize, (i, j): (usize, usize)) -> Vertex {
    base + (i - 1) * n + (j - 1)
}

fn grid_edges(base: usize, n: usize) -> impl Iterator<Item = (Vertex, Vertex)> {
    (1..=n).flat_map(move |i| {
        (1..=n).flat_map(move |j| {
            let right = (j < n).then(|| (cell(base, n, (i, j)), cell(base, n, (i, j + 1))));
            let down = (i < n).then(|| (cell(base, n, (i, j)), cell(base, n, (i + 1, j))));
            right.into_iter().chain(down)
        })
    })
}

pub fn grid_gadget(k: usize) -> GridGadget {
    let n = 2 * k + 2;
    let graph = StaticGraph::from_edges(n * n, grid_edges(0, n));
    let connectors = connector_cells(k).map(|(_, cells)| cells.into_iter().map(|c| cell(0, n, c)).collect());
    GridGadget { graph, connectors }
}

/// Number of faces of the rotation system, after checking that it lists
/// every neighbor exactly once and satisfies Euler's formula on each
/// component.
pub fn check_embedding(g: &StaticGraph, rotation: &[Vec<Vertex>]) -> Result<usize, GeneratorError> {
    if rotation.len() != g.n() {
        return Err(GeneratorError::BadRotation(format!(
            "{} rotation lists for {} vertices",
            rotation.len(),
            g.n()
        )));
    }
    let mut index: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    for (v, rot) in rotation.iter().enumerate() {
        let mut sorted = rot.clone();
        sorted.sort_unstable();
        let mut nb = g.neighbors(v).to_vec();
        nb.sort_unstable();
        if sorted != nb {
            return Err(GeneratorError::BadRotation(format!("rotation at {v} does not list its neighbors")));
        }
        for (i, &w) in rot.iter().enumerate() {
            index.insert((v, w), i);
        }
    }

    let offset: Vec<usize> = std::iter::once(0)
        .chain(rotation.iter().scan(0, |acc, r| {
            *acc += r.len();
            Some(*acc)
        }))
        .collect();
    let mut seen = vec![false; offset[g.n()]];
    let mut faces = 0;
    for v in 0..g.n() {
        for i in 0..rotation[v].len() {
            if seen[offset[v] + i] {
                continue;
            }
            faces += 1;
            let (mut u, mut p) = (v, i);
            while !seen[offset[u] + p] {
                seen[offset[u] + p] = true;
                let w = rotation[u][p];
                let back = index[&(w, u)];
                p = (back + 1) % rotation[w].len();
                u = w;
            }
        }
    }

    let mut comp = vec![false; g.n()];
    let (mut components, mut active) = (0, 0);
    for v in 0..g.n() {
        if comp[v] || g.degree(v) == 0 {
            continue;
        }
        components += 1;
        comp[v] = true;
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            active += 1;
            for &w in g.neighbors(x) {
                if !comp[w] {
                    comp[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    let edges = g.num_edges();
    let expected = (2 * components + edges).saturating_sub(active);
    if faces != expected || (active >= 3 && edges > 3 * active - 6) {
        return Err(GeneratorError::NotPlanar { faces, expected });
    }
    Ok(faces)
}

fn validate(inst: &PlanarLbcInstance) -> Result<StaticGraph, GeneratorError> {
    let k = inst.k;
    if k % 2 == 1 {
        return Err(GeneratorError::OddBudget(k));
    }
    if k == 0 {
        return Err(GeneratorError::Parameter("budget must be at least 2".into()));
    }
    if inst.l == 0 {
        return Err(GeneratorError::Parameter("length bound must be at least 1".into()));
    }
    if inst.s == inst.z || inst.s >= inst.n || inst.z >= inst.n {
        return Err(GeneratorError::Parameter(format!("terminals {}, {} invalid", inst.s, inst.z)));
    }
    if inst.costs.len() != inst.edges.len() {
        return Err(GeneratorError::Parameter("one cost per edge required".into()));
    }
    let mut g = StaticGraph::new(inst.n);
    for (idx, &(u, v)) in inst.edges.iter().enumerate() {
        if u == v || u >= inst.n || v >= inst.n || !g.add_edge(u, v) {
            return Err(GeneratorError::Parameter(format!("edge {idx} ({u}, {v}) is not a simple edge")));
        }
        let c = inst.costs[idx];
        if c != 1 && c != k + 1 {
            return Err(GeneratorError::BadCost { edge: idx, cost: c });
        }
    }
    for v in 0..inst.n {
        let d = g.degree(v);
        if d > 6 {
            return Err(GeneratorError::DegreeTooHigh { vertex: v, degree: d, limit: 6 });
        }
        if (v == inst.s || v == inst.z) && d != 3 {
            return Err(GeneratorError::TerminalDegree { vertex: v, degree: d });
        }
    }
    check_embedding(&g, &inst.rotation)?;
    Ok(g)
}

/// Builds the planar length-bounded separation instance.
pub fn gen_planar_lbs(inst: &PlanarLbcInstance) -> Result<PlanarLbsOutput, GeneratorError> {
    let g = validate(inst)?;
    let k = inst.k;
    let side = 2 * k + 2;
    let (k_prime, l_prime) = planar_parameters(k, inst.l);
    let cells = connector_cells(k);
    let connectors: Vec<[Vec<Vertex>; 6]> = (0..inst.n)
        .map(|v| cells.clone().map(|(_, cs)| cs.into_iter().map(|c| cell(v * side * side, side, c)).collect()))
        .collect();

    let grid_total = inst.n * side * side;
    let (s_out, z_out) = (grid_total, grid_total + 1);
    let mut total = grid_total + 2;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    // Rotations of non-grid vertices, filled as they are created.
    let mut extra: Vec<Vec<Vertex>> = vec![Vec::new(), Vec::new()];
    // The single edge leaving a connector vertex, if any.
    let mut external: HashMap<Vertex, Vertex> = HashMap::new();

    let position = |v: Vertex, w: Vertex| inst.rotation[v].iter().position(|&x| x == w).expect("validated");
    let reversed = |c: &[Vertex]| c.iter().rev().copied().collect::<Vec<_>>();

    for (idx, &(a, b)) in inst.edges.iter().enumerate() {
        let ca = &connectors[a][position(a, b)];
        let cb = &connectors[b][position(b, a)];
        if inst.costs[idx] == 1 {
            let len = (inst.l + 1) * k_prime - 1;
            let first = total;
            let last = first + len - 1;
            total += len;
            for p in first..last {
                edges.push((p, p + 1));
            }
            for p in first..=last {
                let mut rot = Vec::new();
                if p == first {
                    rot.extend(reversed(ca));
                } else {
                    rot.push(p - 1);
                }
                if p == last {
                    rot.extend(reversed(cb));
                } else {
                    rot.push(p + 1);
                }
                extra.push(rot);
            }
            for &c in ca {
                edges.push((c, first));
                external.insert(c, first);
            }
            for &c in cb {
                edges.push((c, last));
                external.insert(c, last);
            }
        } else {
            let len = (inst.l + 1) * k_prime;
            for p in 0..=k {
                let (from, to) = (ca[p], cb[k - p]);
                let first = total;
                let last = first + len - 1;
                total += len;
                edges.push((from, first));
                edges.push((last, to));
                external.insert(from, first);
                external.insert(to, last);
                for q in first..last {
                    edges.push((q, q + 1));
                }
                for q in first..=last {
                    let prev = if q == first { from } else { q - 1 };
                    let next = if q == last { to } else { q + 1 };
                    extra.push(vec![prev, next]);
                }
            }
        }
    }

    for (hub, t) in [(s_out, inst.s), (z_out, inst.z)] {
        let free = &connectors[t][g.degree(t)];
        for &c in free {
            edges.push((c, hub));
            external.insert(c, hub);
        }
        extra[hub - grid_total] = reversed(free);
    }

    let mut rotation: Vec<Vec<Vertex>> = Vec::with_capacity(total);
    let mut attach: HashMap<Vertex, Side> = HashMap::new();
    for set in &connectors {
        for (c, (dir, _)) in set.iter().zip(&cells) {
            for &x in c {
                attach.insert(x, *dir);
            }
        }
    }
    for v in 0..inst.n {
        let base = v * side * side;
        edges.extend(grid_edges(base, side));
        for i in 1..=side {
            for j in 1..=side {
                let me = cell(base, side, (i, j));
                let ext = |dir: Side| {
                    external.get(&me).copied().filter(|_| attach.get(&me) == Some(&dir))
                };
                let mut rot = Vec::with_capacity(4);
                let slots = [
                    (Side::Up, (i > 1).then(|| cell(base, side, (i - 1, j)))),
                    (Side::Right, (j < side).then(|| cell(base, side, (i, j + 1)))),
                    (Side::Down, (i < side).then(|| cell(base, side, (i + 1, j)))),
                    (Side::Left, (j > 1).then(|| cell(base, side, (i, j - 1)))),
                ];
                for (dir, nb) in slots {
                    if let Some(w) = nb.or_else(|| ext(dir)) {
                        rot.push(w);
                    }
                }
                rotation.push(rot);
            }
        }
    }
    rotation.extend(extra);

    let graph = StaticGraph::from_edges(total, edges);
    Ok(PlanarLbsOutput { graph, rotation, s: s_out, z: z_out, l: l_prime, k, k_prime, connectors })
}
