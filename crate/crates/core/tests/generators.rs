mod common;

use std::collections::VecDeque;

use common::{all_graphs, min_lbs_size, min_separator_size, min_vertex_cover};
use tempsep::generators::{
    check_embedding, gen_from_vertex_cover, gen_lbs_stack, gen_planar_lbs, gen_planted_core, gen_random_sparse,
    gen_random_temporal, grid_gadget, planar_parameters, PlanarLbcInstance, VcLayout,
};
use tempsep::{GeneratorError, PathModel, StaticGraph, Vertex};

fn bfs(g: &StaticGraph, s: Vertex) -> Vec<Option<usize>> {
    let mut d = vec![None; g.n()];
    d[s] = Some(0);
    let mut q = VecDeque::from([s]);
    while let Some(u) = q.pop_front() {
        for &w in g.neighbors(u) {
            if d[w].is_none() {
                d[w] = Some(d[u].unwrap() + 1);
                q.push_back(w);
            }
        }
    }
    d
}

fn prism(l: usize) -> PlanarLbcInstance {
    let edges = vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)];
    let rotation = vec![vec![1, 3, 2], vec![0, 2, 4], vec![0, 5, 1], vec![0, 4, 5], vec![1, 5, 3], vec![2, 3, 4]];
    PlanarLbcInstance { n: 6, costs: vec![1; edges.len()], edges, rotation, s: 0, z: 4, l, k: 2 }
}

#[test]
fn vc_examples() {
    let path = StaticGraph::from_edges(3, [(0, 1), (1, 2)]);
    let inst = gen_from_vertex_cover(&path, 1);
    assert_eq!(inst.graph.n(), 11);
    assert_eq!(inst.graph.num_edges(), 6 * 3 + 2 * 2);
    assert_eq!((inst.s, inst.z, inst.k, inst.graph.tau()), (9, 10, 4, 2));
    assert_eq!(min_separator_size(&inst.graph, inst.s, inst.z, PathModel::NonStrict), Some(4));

    let empty = gen_from_vertex_cover(&StaticGraph::new(2), 0);
    assert_eq!(min_separator_size(&empty.graph, empty.s, empty.z, PathModel::NonStrict), Some(2));
    let at = VcLayout { n: 2 };
    assert_eq!((at.s_of(1), at.z_of(0), at.s(), at.z()), (3, 4, 6, 7));
}

#[test]
fn vc_minimum_tracks_cover() {
    for n in 1..=4 {
        for g in all_graphs(n) {
            let inst = gen_from_vertex_cover(&g, 0);
            let got = min_separator_size(&inst.graph, inst.s, inst.z, PathModel::NonStrict);
            assert_eq!(got, Some(n + min_vertex_cover(&g)), "{:?}", g.edges().collect::<Vec<_>>());
        }
    }
}

#[test]
fn lbs_stack_examples() {
    let g = StaticGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
    let inst = gen_lbs_stack(&g, 0, 3, 1, 3).unwrap();
    assert_eq!((inst.graph.tau(), inst.graph.num_edges()), (3, 9));
    assert_eq!(min_separator_size(&inst.graph, 0, 3, PathModel::Strict), Some(1));
    let short = gen_lbs_stack(&g, 0, 3, 1, 2).unwrap();
    assert_eq!(min_separator_size(&short.graph, 0, 3, PathModel::Strict), Some(0));
    assert!(gen_lbs_stack(&g, 0, 3, 1, 0).is_err());
    assert!(gen_lbs_stack(&g, 2, 2, 1, 1).is_err());
}

#[test]
fn lbs_stack_matches_static_oracle() {
    for n in 2..=5 {
        for g in all_graphs(n) {
            for l in 1..=4 {
                let inst = gen_lbs_stack(&g, 0, n - 1, 0, l).unwrap();
                assert_eq!(
                    min_separator_size(&inst.graph, 0, n - 1, PathModel::Strict),
                    min_lbs_size(&g, 0, n - 1, l),
                    "l = {l} {:?}",
                    g.edges().collect::<Vec<_>>()
                );
            }
        }
    }
}

#[test]
fn gadget_shape() {
    for k in [2, 4] {
        let gadget = grid_gadget(k);
        let side = 2 * k + 2;
        assert_eq!(gadget.graph.n(), side * side);
        assert_eq!(gadget.graph.num_edges(), 2 * side * (side - 1));
        for c in &gadget.connectors {
            assert_eq!(c.len(), k + 1);
        }
        assert_eq!(planar_parameters(k, 1).0, side * side - 1);
    }
}

/// Distances stay within the bound exactly when the source has a short
/// enough path: the prism puts its terminals two edges apart.
#[test]
fn planar_lbs_preserves_short_paths() {
    let src = prism(1);
    check_embedding(&src.graph(), &src.rotation).unwrap();
    for l in 1..=3 {
        let out = gen_planar_lbs(&prism(l)).unwrap();
        assert_eq!((out.k_prime, out.l), planar_parameters(2, l));
        check_embedding(&out.graph, &out.rotation).unwrap();
        let d = bfs(&out.graph, out.s)[out.z].unwrap();
        assert_eq!(d <= out.l, l >= 2, "l = {l}: distance {d}, bound {}", out.l);
        assert!((0..out.graph.n()).all(|v| out.graph.neighbors(v).len() <= 6));
    }
}

#[test]
fn planar_lbs_is_deterministic() {
    let a = gen_planar_lbs(&prism(2)).unwrap();
    let b = gen_planar_lbs(&prism(2)).unwrap();
    assert_eq!(a.graph, b.graph);
    assert_eq!(a.rotation, b.rotation);
}

#[test]
fn planar_lbs_rejects() {
    let odd = PlanarLbcInstance { k: 3, ..prism(1) };
    assert!(matches!(gen_planar_lbs(&odd), Err(GeneratorError::OddBudget { .. })));
    let cost = PlanarLbcInstance { costs: vec![2; 9], ..prism(1) };
    assert!(matches!(gen_planar_lbs(&cost), Err(GeneratorError::BadCost { .. })));
}

#[test]
fn random_generators_are_seeded() {
    let a = gen_random_temporal(8, 3, 0.3, 42, Some((0, 7))).unwrap();
    assert_eq!(a, gen_random_temporal(8, 3, 0.3, 42, Some((0, 7))).unwrap());
    assert!(a.edges().iter().all(|e| e.other(0) != Some(7)));
    assert!(gen_random_temporal(4, 2, 1.5, 0, None).is_err());

    let s = gen_random_sparse(100, 500, 16, 3).unwrap();
    assert_eq!(s, gen_random_sparse(100, 500, 16, 3).unwrap());
    assert!(s.num_edges() <= 500 && s.tau() == 16);
    assert!(gen_random_sparse(1, 5, 4, 0).is_err());

    let varying = [1, 3, 5];
    let p = gen_planted_core(9, 4, &varying, 0.4, 0.5, 11, None).unwrap();
    assert!(p.temporal_core().iter().all(|v| varying.contains(v)));
}
