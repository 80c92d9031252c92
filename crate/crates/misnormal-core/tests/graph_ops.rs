mod common;

use common::set;
use misnormal_core::families::{generate, FamilySpec};
use misnormal_core::{Error, Graph, Ratio};

fn graph(spec: &str) -> Graph {
    generate(&FamilySpec::parse(spec).unwrap()).unwrap()
}

#[test]
fn build_examples() {
    let k3 = Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    assert_eq!(k3.edge_count(), 3);

    let e2 = Graph::build(2, &[]).unwrap();
    assert_eq!(e2.edge_count(), 0);

    let dup = Graph::build(4, &[(0, 1), (1, 0), (2, 3)]).unwrap();
    assert_eq!(dup.edge_count(), 2);

    assert!(matches!(
        Graph::build(3, &[(1, 1)]),
        Err(Error::LoopRejected { vertex: 1 })
    ));
    assert!(matches!(
        Graph::build(3, &[(0, 3)]),
        Err(Error::IndexOutOfRange { index: 3, bound: 3 })
    ));
}

#[test]
fn neighborhood_examples() {
    let c5 = graph("cycle:5");
    assert_eq!(c5.closed_neighborhood(&set(5, &[0])), set(5, &[0, 1, 4]));
    assert_eq!(c5.closed_neighborhood(&set(5, &[])), set(5, &[]));
    assert_eq!(c5.open_neighborhood(&set(5, &[0])), set(5, &[1, 4]));

    let two_k3 = graph("copies:2xcomplete:3");
    assert_eq!(two_k3.closed_neighborhood(&set(6, &[0])), set(6, &[0, 1, 2]));
    assert_eq!(two_k3.complement_closed_neighborhood(&set(6, &[0])), set(6, &[3, 4, 5]));

    assert_eq!(c5.complement_closed_neighborhood(&set(5, &[0])), set(5, &[2, 3]));
    assert_eq!(c5.complement_closed_neighborhood(&c5.vertex_set()), set(5, &[]));
}

#[test]
fn induced_subgraph_examples() {
    let c5 = graph("cycle:5");
    let path = c5.induced_subgraph(&set(5, &[0, 1, 2])).unwrap();
    assert_eq!(path.graph.n(), 3);
    assert_eq!(path.graph.edge_count(), 2);
    assert_eq!(path.vertices, vec![0, 1, 2]);

    let k4 = graph("complete:4");
    let sub = k4.induced_subgraph(&set(4, &[0, 1])).unwrap();
    assert_eq!(sub.graph.edge_count(), 1);

    assert!(matches!(
        c5.induced_subgraph(&set(5, &[])),
        Err(Error::EmptySelection)
    ));
}

#[test]
fn petersen_contains_induced_five_cycle() {
    // In the colexicographic labeling of the 2-subsets of {0..4}, the
    // vertices {0,1},{2,3},{0,4},{1,2},{3,4} have indices 0,5,6,2,9 and form
    // a 5-cycle (consecutive pairs disjoint, all others overlapping).
    let petersen = graph("kneser:5,2");
    let sub = petersen.induced_subgraph(&set(10, &[0, 2, 5, 6, 9])).unwrap();
    assert_eq!(sub.graph.n(), 5);
    assert_eq!(sub.graph.edge_count(), 5);
    assert!((0..5).all(|v| sub.graph.degree(v) == 2));
    assert!(sub.graph.is_connected());
    assert!(!sub.graph.is_bipartite());
}

#[test]
fn induced_subgraph_respects_edges() {
    let petersen = graph("kneser:5,2");
    let b = set(10, &[1, 3, 4, 6, 8, 9]);
    let sub = petersen.induced_subgraph(&b).unwrap();
    for i in 0..sub.graph.n() {
        for j in 0..sub.graph.n() {
            assert_eq!(
                sub.graph.has_edge(i, j),
                petersen.has_edge(sub.vertices[i], sub.vertices[j])
            );
        }
    }
    // Round trip of local sets back to parent labels.
    let local = set(sub.graph.n(), &[0, 2]);
    let parent = sub.to_parent(&local);
    assert_eq!(parent, set(10, &[sub.vertices[0], sub.vertices[2]]));
}

#[test]
fn bipartite_and_connectivity_examples() {
    assert!(!graph("cycle:5").is_bipartite());
    assert!(graph("cycle:5").is_connected());
    assert!(graph("cycle:4").is_bipartite());
    assert!(!graph("copies:2xcomplete:3").is_connected());
    assert_eq!(graph("copies:2xcomplete:3").components().len(), 2);

    let empty = graph("empty:3");
    assert!(empty.is_bipartite());
    assert!(!empty.is_connected());
    let single = Graph::build(1, &[]).unwrap();
    assert!(single.is_connected());

    let coloring = graph("cycle:6").two_coloring().unwrap();
    let c6 = graph("cycle:6");
    for (u, v) in c6.edges() {
        assert_ne!(coloring[u], coloring[v]);
    }
}

#[test]
fn ratio_arithmetic() {
    assert_eq!(Ratio::new(2, 6), Ratio::new(1, 3));
    assert_eq!(Ratio::new(2, 6).to_string(), "1/3");
    assert!(Ratio::new(2, 5) < Ratio::new(1, 2));
    assert!(Ratio::new(1, 3) < Ratio::new(2, 5));
    assert_eq!(Ratio::new(0, 7), Ratio::new(0, 1));
    // Comparison is exact even where floating point would tie.
    assert!(Ratio::new(333333333, 1000000000) < Ratio::new(1, 3));
}
