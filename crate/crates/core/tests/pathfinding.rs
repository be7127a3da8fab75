mod common;

use common::{has_path, random_grid, reachable_set, strict_distances, strict_distances_to, traversal_distances};
use tempsep::pathfinding::{
    find_path, is_separator, nonstrict_reachable, shortest_strict_path, ssstp, ssstp_explicit, ssstp_to_sink,
    ssstp_traversal, strict_earliest_arrival, time_reversed, DirectedTemporalGraph, StrictStaticExpansion,
    TraversalArc,
};
use tempsep::{PathModel, TemporalGraph, Time, Vertex};

fn g(n: usize, e: &[(Vertex, Vertex, Time)]) -> TemporalGraph {
    TemporalGraph::from_triples(n, e).unwrap()
}

fn arc(from: Vertex, to: Vertex, t: Time, traversal: Time) -> TraversalArc {
    TraversalArc { from, to, t, traversal }
}

#[test]
fn expansion_examples() {
    let x = StrictStaticExpansion::build(&g(3, &[(0, 1, 1), (1, 2, 2)]), 0, 2);
    assert!(x.is_acyclic() && x.is_topologically_ordered());
    assert!(x.sink_node().is_some());
    let reach = x.forward_reachable();
    assert!(reach[x.sink_node().unwrap()]);

    let x = StrictStaticExpansion::build(&g(3, &[(0, 1, 2), (1, 2, 1)]), 0, 2);
    assert!(!x.forward_reachable()[x.sink_node().unwrap()]);
}

#[test]
fn ssstp_examples() {
    let tg = g(3, &[(0, 1, 1), (1, 2, 2)]);
    let d = ssstp(&tg, 0);
    assert_eq!((d.get(0), d.get(1), d.get(2)), (Some(0), Some(1), Some(2)));

    let tg = g(3, &[(0, 1, 2), (1, 2, 1)]);
    let d = ssstp(&tg, 0);
    assert_eq!(d.get(2), None);
    assert_eq!(d.as_slice()[2], d.infinity());
    assert_eq!(d.infinity(), tg.num_edges() + 1);
}

#[test]
fn ssstp_prefers_fewer_edges() {
    // 0-1-2-3 along labels 1,2,3 and a later shortcut 0-3 through 4.
    let tg = g(5, &[(0, 1, 1), (1, 2, 2), (2, 3, 3), (0, 4, 3), (4, 3, 4)]);
    assert_eq!(ssstp(&tg, 0).get(3), Some(2));
    let p = shortest_strict_path(&tg, 0, 3).unwrap();
    assert_eq!(p.len(), 2);
    assert!(tg.validate_path(&p, PathModel::Strict, 0, 3));
}

#[test]
fn ssstp_matches_oracle_on_grid() {
    for c in random_grid(300, 2..=8, 5, 500) {
        let want = strict_distances(&c.graph, c.s);
        assert_eq!(ssstp(&c.graph, c.s).as_slice().iter().map(|&d| (d <= c.graph.num_edges()).then_some(d)).collect::<Vec<_>>(), want, "seed {}", c.seed);
        let d = ssstp_explicit(&c.graph, c.s);
        assert_eq!((0..c.graph.n()).map(|v| d.get(v)).collect::<Vec<_>>(), want, "seed {}", c.seed);
        let back = ssstp_to_sink(&c.graph, c.z);
        assert_eq!((0..c.graph.n()).map(|v| back.get(v)).collect::<Vec<_>>(), strict_distances_to(&c.graph, c.z));
    }
}

#[test]
fn time_reversal_is_an_involution() {
    for c in random_grid(100, 2..=7, 4, 900) {
        assert_eq!(time_reversed(&time_reversed(&c.graph)), c.graph);
    }
}

#[test]
fn earliest_arrival_and_reachability() {
    for c in random_grid(200, 2..=7, 4, 1300) {
        let arr = strict_earliest_arrival(&c.graph, c.s, &[]);
        let dist = strict_distances(&c.graph, c.s);
        for v in 0..c.graph.n() {
            assert_eq!(arr[v].is_some(), dist[v].is_some(), "seed {} v {v}", c.seed);
        }
        let mut got = nonstrict_reachable(&c.graph, c.s, &[]);
        got.sort_unstable();
        assert_eq!(got, reachable_set(&c.graph, c.s, &[], PathModel::NonStrict));
        for model in [PathModel::Strict, PathModel::NonStrict] {
            let p = find_path(&c.graph, c.s, c.z, &[], model);
            assert_eq!(p.is_some(), has_path(&c.graph, c.s, c.z, &[], model));
            if let Some(p) = p {
                assert!(c.graph.validate_path(&p, model, c.s, c.z));
            }
        }
    }
}

#[test]
fn is_separator_examples() {
    let tg = g(4, &[(0, 1, 1), (1, 3, 2), (0, 2, 1), (2, 3, 1)]);
    assert!(!is_separator(&tg, 0, 3, &[1], PathModel::NonStrict));
    assert!(is_separator(&tg, 0, 3, &[1], PathModel::Strict));
    assert!(is_separator(&tg, 0, 3, &[1, 2], PathModel::NonStrict));
}

#[test]
fn traversal_examples() {
    let d = DirectedTemporalGraph::new(3, 4, [arc(0, 1, 1, 2), arc(1, 2, 2, 1), arc(1, 2, 3, 1)]).unwrap();
    // arrives at 1 at label 2, so only the label-3 arc continues
    assert_eq!(ssstp_traversal(&d, 0), vec![Some(0), Some(2), Some(3)]);
    assert!(DirectedTemporalGraph::new(2, 2, [arc(0, 1, 1, 0)]).is_err());
    let d = DirectedTemporalGraph::new(3, 2, [arc(0, 1, 1, 1), arc(2, 1, 2, 1)]).unwrap();
    assert_eq!(ssstp_traversal(&d, 0), vec![Some(0), Some(1), None]);
}

#[test]
fn traversal_matches_oracle() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
    for _ in 0..300 {
        let n = rng.gen_range(2..=6);
        let tau = rng.gen_range(1..=5);
        let arcs: Vec<TraversalArc> = (0..rng.gen_range(0..12))
            .filter_map(|_| {
                let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                (u != v).then(|| arc(u, v, rng.gen_range(1..=tau), rng.gen_range(1..=3)))
            })
            .collect();
        let d = DirectedTemporalGraph::new(n, tau, arcs).unwrap();
        assert_eq!(ssstp_traversal(&d, 0), traversal_distances(&d, 0));
    }
}
