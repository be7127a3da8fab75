//! Instance generators: hardness-reduction families and seeded random
//! temporal graphs.

mod planar;

pub use planar::{
    check_embedding, gen_planar_lbs, grid_gadget, planar_parameters, GridGadget, PlanarLbcInstance, PlanarLbsOutput,
};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GeneratorError;
use crate::graph::{PathModel, StaticGraph, TemporalGraph, Time, TimeEdge, Vertex};
use crate::instance::SeparatorInstance;

/// Vertex ids used by [`gen_from_vertex_cover`] for a source graph on `n`
/// vertices: `v`, `s_v = n + v`, `z_v = 2n + v`, `s = 3n`, `z = 3n + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VcLayout {
    pub n: usize,
}

impl VcLayout {
    pub fn s_of(self, v: Vertex) -> Vertex {
        self.n + v
    }
    pub fn z_of(self, v: Vertex) -> Vertex {
        2 * self.n + v
    }
    pub fn s(self) -> Vertex {
        3 * self.n
    }
    pub fn z(self) -> Vertex {
        3 * self.n + 1
    }
}

/// The `tau = 2` non-strict instance whose minimum separator has size
/// `n + vc(G)`. Budget is `n + k`.
pub fn gen_from_vertex_cover(g: &StaticGraph, k: usize) -> SeparatorInstance {
    let n = g.n();
    let at = VcLayout { n };
    let (s, z) = (at.s(), at.z());
    let mut edges = Vec::with_capacity(6 * n + 2 * g.num_edges());
    for v in 0..n {
        let (sv, zv) = (at.s_of(v), at.z_of(v));
        edges.extend([
            TimeEdge::new(s, sv, 1),
            TimeEdge::new(sv, v, 1),
            TimeEdge::new(v, zv, 2),
            TimeEdge::new(zv, z, 2),
            TimeEdge::new(s, v, 2),
            TimeEdge::new(v, z, 1),
        ]);
    }
    for (v, w) in g.edges() {
        edges.push(TimeEdge::new(at.s_of(v), at.z_of(w), 1));
        edges.push(TimeEdge::new(at.s_of(w), at.z_of(v), 1));
    }
    let graph = TemporalGraph::new(3 * n + 2, 2, edges).expect("construction stays in range");
    SeparatorInstance { graph, s, z, k: n + k, model: PathModel::NonStrict }
}

/// Copies every edge of `g` into each of the layers `1..=l`.
pub fn gen_lbs_stack(g: &StaticGraph, s: Vertex, z: Vertex, k: usize, l: usize) -> Result<SeparatorInstance, GeneratorError> {
    if l == 0 {
        return Err(GeneratorError::Parameter("length bound must be at least 1".into()));
    }
    if s == z || s >= g.n() || z >= g.n() {
        return Err(GeneratorError::Parameter(format!("terminals {s}, {z} invalid for n = {}", g.n())));
    }
    let edges = (1..=l as Time).flat_map(|t| g.edges().map(move |(u, v)| TimeEdge::new(u, v, t)));
    let graph = TemporalGraph::new(g.n(), l as Time, edges.collect::<Vec<_>>())?;
    Ok(SeparatorInstance { graph, s, z, k, model: PathModel::Strict })
}

/// Each `(pair, t)` included independently with probability `p`. With
/// `forbid` set, that pair never gets an edge.
pub fn gen_random_temporal(
    n: usize,
    tau: Time,
    p: f64,
    seed: u64,
    forbid: Option<(Vertex, Vertex)>,
) -> Result<TemporalGraph, GeneratorError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GeneratorError::Parameter(format!("probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let forbidden = forbid.map(|(a, b)| (a.min(b), a.max(b)));
    let mut edges = Vec::new();
    for t in 1..=tau {
        for u in 0..n {
            for v in u + 1..n {
                if forbidden != Some((u, v)) && rng.gen_bool(p) {
                    edges.push(TimeEdge::new(u, v, t));
                }
            }
        }
    }
    Ok(TemporalGraph::new(n, tau, edges)?)
}

/// `m` time-edges drawn with uniform endpoints and labels in `1..=tau`;
/// duplicates collapse, so the result may hold slightly fewer. Meant for
/// timing runs where the dense per-pair generator is too slow.
pub fn gen_random_sparse(n: usize, m: usize, tau: Time, seed: u64) -> Result<TemporalGraph, GeneratorError> {
    if n < 2 || tau == 0 {
        return Err(GeneratorError::Parameter("need n >= 2 and tau >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<TimeEdge> = (0..m)
        .map(|_| {
            let u = rng.gen_range(0..n);
            let v = (u + rng.gen_range(1..n)) % n;
            TimeEdge::new(u, v, rng.gen_range(1..=tau))
        })
        .collect();
    Ok(TemporalGraph::new(n, tau, edges)?)
}

/// A static backbone with a few temporally varying vertices: pairs inside
/// `varying` get an independent edge per layer with probability
/// `p_dynamic`; every other pair is present in all layers with probability
/// `p_static` or absent throughout. The temporal core is a subset of
/// `varying`.
pub fn gen_planted_core(
    n: usize,
    tau: Time,
    varying: &[Vertex],
    p_static: f64,
    p_dynamic: f64,
    seed: u64,
    forbid: Option<(Vertex, Vertex)>,
) -> Result<TemporalGraph, GeneratorError> {
    for p in [p_static, p_dynamic] {
        if !(0.0..=1.0).contains(&p) {
            return Err(GeneratorError::Parameter(format!("probability {p} outside [0, 1]")));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut is_varying = vec![false; n];
    for &v in varying {
        if v >= n {
            return Err(GeneratorError::Parameter(format!("vertex {v} out of range")));
        }
        is_varying[v] = true;
    }
    let forbidden = forbid.map(|(a, b)| (a.min(b), a.max(b)));
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if forbidden == Some((u, v)) {
                continue;
            }
            if is_varying[u] && is_varying[v] {
                for t in 1..=tau {
                    if rng.gen_bool(p_dynamic) {
                        edges.push(TimeEdge::new(u, v, t));
                    }
                }
            } else if rng.gen_bool(p_static) {
                edges.extend((1..=tau).map(|t| TimeEdge::new(u, v, t)));
            }
        }
    }
    Ok(TemporalGraph::new(n, tau, edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::write_instance;

    #[test]
    fn vc_sizes() {
        let k3 = StaticGraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        let inst = gen_from_vertex_cover(&k3, 1);
        assert_eq!(inst.graph.n(), 11);
        assert_eq!(inst.graph.num_edges(), 6 * 3 + 2 * 3);
        assert_eq!(inst.graph.tau(), 2);
        assert_eq!(inst.k, 4);
        assert_eq!((inst.s, inst.z), (9, 10));
    }

    #[test]
    fn lbs_stack_copies_layers() {
        let p = StaticGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let inst = gen_lbs_stack(&p, 0, 3, 1, 3).unwrap();
        assert_eq!(inst.graph.num_edges(), 9);
        assert_eq!(inst.graph.tau(), 3);
        assert!(inst.graph.temporal_core().is_empty());
        assert!(gen_lbs_stack(&p, 0, 3, 1, 0).is_err());
    }

    #[test]
    fn random_extremes() {
        assert_eq!(gen_random_temporal(5, 3, 0.0, 1, None).unwrap().num_edges(), 0);
        let full = gen_random_temporal(5, 3, 1.0, 1, None).unwrap();
        assert_eq!(full.num_edges(), 3 * 10);
        let no_sz = gen_random_temporal(5, 3, 1.0, 1, Some((4, 0))).unwrap();
        assert!(!no_sz.has_pair(0, 4));
        assert!(gen_random_temporal(5, 3, 1.5, 1, None).is_err());
    }

    #[test]
    fn random_is_reproducible() {
        let a = gen_random_temporal(8, 4, 0.3, 42, None).unwrap();
        let b = gen_random_temporal(8, 4, 0.3, 42, None).unwrap();
        assert_eq!(write_instance(&a, None), write_instance(&b, None));
        let c = gen_random_temporal(8, 4, 0.3, 43, None).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn sparse_edge_count() {
        let g = gen_random_sparse(1000, 5000, 50, 7).unwrap();
        assert!(g.num_edges() > 4900 && g.num_edges() <= 5000);
    }

    #[test]
    fn planted_core_is_contained() {
        for seed in 0..20 {
            let g = gen_planted_core(9, 3, &[2, 4, 6], 0.4, 0.5, seed, None).unwrap();
            assert!(g.temporal_core().iter().all(|v| [2, 4, 6].contains(v)));
        }
    }
}
