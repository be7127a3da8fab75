use tempsep::io::{load_temporal_graph, parse_instance, parse_static_graph, write_instance, write_static_graph};
use tempsep::{PathModel, Query, StaticGraph, TemporalGraph, TemporalPath, TimeEdge};

fn g(n: usize, e: &[(usize, usize, u64)]) -> TemporalGraph {
    TemporalGraph::from_triples(n, e).unwrap()
}

#[test]
fn load_examples() {
    let a = load_temporal_graph("3 2 2\n0 1 1\n1 2 2").unwrap();
    assert_eq!((a.n(), a.tau()), (3, 2));
    assert_eq!(a.edges(), &[TimeEdge::new(0, 1, 1), TimeEdge::new(1, 2, 2)]);

    let b = load_temporal_graph("2 0 1").unwrap();
    assert_eq!((b.n(), b.tau(), b.num_edges()), (2, 1, 0));

    let err = load_temporal_graph("3 2 2\n0 0 1\n1 2 2").unwrap_err();
    assert_eq!(err.line, 2);
    assert!(err.to_string().contains("self-loop"), "{err}");
}

#[test]
fn query_line_round_trip() {
    let graph = g(4, &[(0, 1, 1), (1, 3, 2)]);
    let q = Query { s: 0, z: 3, k: 1 };
    let text = write_instance(&graph, Some(&q));
    let back = parse_instance(&text).unwrap();
    assert_eq!(back.graph, graph);
    assert_eq!(back.query, Some(q));
}

#[test]
fn static_round_trip() {
    let sg = StaticGraph::from_edges(4, [(0, 1), (2, 3), (1, 2)]);
    assert_eq!(parse_static_graph(&write_static_graph(&sg)).unwrap(), sg);
}

#[test]
fn layers() {
    let tg = g(3, &[(0, 1, 1), (1, 2, 2)]);
    assert_eq!(tg.layer(1).unwrap().edges().collect::<Vec<_>>(), vec![(0, 1)]);
    assert_eq!(tg.layer(2).unwrap().edges().collect::<Vec<_>>(), vec![(1, 2)]);
    let lone = TemporalGraph::new(2, 3, [TimeEdge::new(0, 1, 1)]).unwrap();
    assert_eq!(lone.layer(3).unwrap().num_edges(), 0);
    assert!(lone.layer(4).is_err());
}

#[test]
fn underlying_graph() {
    let tg = g(3, &[(0, 1, 1), (0, 1, 2), (1, 2, 2)]);
    assert_eq!(tg.underlying().edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    assert_eq!(TemporalGraph::new(3, 2, []).unwrap().underlying().num_edges(), 0);
    let two = g(4, &[(0, 1, 1), (2, 3, 4)]);
    assert_eq!(two.underlying().edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
}

#[test]
fn temporal_core_examples() {
    assert!(g(2, &[(0, 1, 1), (0, 1, 2), (0, 1, 3)]).temporal_core().is_empty());
    assert_eq!(g(4, &[(0, 1, 1), (0, 1, 2), (2, 3, 1)]).temporal_core(), vec![2, 3]);
    assert!(g(4, &[(0, 1, 1), (2, 3, 1)]).temporal_core().is_empty());
}

#[test]
fn maximal_static_subgraph() {
    let tg = g(3, &[(0, 1, 1), (0, 1, 2), (0, 1, 3), (1, 2, 1)]);
    assert_eq!(tg.maximal_static_subgraph().edges().collect::<Vec<_>>(), vec![(0, 1)]);
    let single = g(3, &[(0, 1, 1), (1, 2, 1)]);
    assert_eq!(single.maximal_static_subgraph(), single.underlying());
    assert_eq!(g(3, &[(0, 1, 1), (1, 2, 2)]).maximal_static_subgraph().num_edges(), 0);
}

#[test]
fn remove_vertices_examples() {
    assert_eq!(g(3, &[(0, 1, 1), (1, 2, 2)]).remove_vertices(&[1]).num_edges(), 0);
    let tg = g(4, &[(0, 1, 1), (2, 3, 1)]);
    assert_eq!(tg.remove_vertices(&[]), tg);
    assert_eq!(tg.remove_vertices(&[0]).edges(), &[TimeEdge::new(2, 3, 1)]);
}

#[test]
fn validate_path_examples() {
    // s = 0, a = 1, z = 2
    let tg = g(3, &[(0, 1, 1), (1, 2, 1), (1, 0, 2)]);
    let p = TemporalPath::from_triples(&[(0, 1, 1), (1, 2, 1)]);
    assert!(tg.validate_path(&p, PathModel::NonStrict, 0, 2));
    assert!(!tg.validate_path(&p, PathModel::Strict, 0, 2));
    let back = TemporalPath::from_triples(&[(0, 1, 1), (1, 0, 2)]);
    assert!(!tg.validate_path(&back, PathModel::NonStrict, 0, 0));
}
