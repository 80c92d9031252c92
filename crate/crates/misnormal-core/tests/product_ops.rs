mod common;

use common::set;
use misnormal_core::families::{corpus, generate, FamilySpec};
use misnormal_core::{direct_product, power, Error, Graph};

fn graph(spec: &str) -> Graph {
    generate(&FamilySpec::parse(spec).unwrap()).unwrap()
}

const CAP: usize = 4096;

#[test]
fn small_product_examples() {
    let k2 = graph("complete:2");
    let p = direct_product(&k2, &k2, CAP).unwrap();
    assert_eq!(p.graph.n(), 4);
    assert_eq!(p.graph.edge_count(), 2);
    // K_2 x K_2 is the perfect matching {(0,0),(1,1)}, {(0,1),(1,0)}.
    assert!(p.graph.has_edge(0, 3));
    assert!(p.graph.has_edge(1, 2));

    let k3 = graph("complete:3");
    let p = direct_product(&k3, &k3, CAP).unwrap();
    assert_eq!(p.graph.n(), 9);
    assert_eq!(p.graph.edge_count(), 18);

    let c4 = graph("cycle:4");
    let p = direct_product(&c4, &k2, CAP).unwrap();
    assert_eq!(p.graph.n(), 8);
    assert_eq!(p.graph.edge_count(), 8);
    // Bipartite double cover of C_4: two disjoint 4-cycles.
    let comps = p.graph.components();
    assert_eq!(comps.len(), 2);
    for comp in comps {
        let sub = p.graph.induced_subgraph(&comp).unwrap();
        assert_eq!(sub.graph.n(), 4);
        assert_eq!(sub.graph.edge_count(), 4);
        assert!((0..4).all(|v| sub.graph.degree(v) == 2));
    }
}

#[test]
fn edge_count_formula_on_corpus_pairs() {
    let graphs: Vec<Graph> = corpus(8).into_iter().map(|(_, g)| g).collect();
    for g in &graphs {
        for h in &graphs {
            if g.n() * h.n() > 200 {
                continue;
            }
            let p = direct_product(g, h, CAP).unwrap();
            assert_eq!(p.graph.edge_count(), 2 * g.edge_count() * h.edge_count());
        }
    }
}

#[test]
fn commutes_up_to_coordinate_swap() {
    let g = graph("cycle:5");
    let h = graph("complete:3");
    let gh = direct_product(&g, &h, CAP).unwrap();
    let hg = direct_product(&h, &g, CAP).unwrap();
    for i in 0..g.n() {
        for j in 0..h.n() {
            for k in 0..g.n() {
                for l in 0..h.n() {
                    assert_eq!(
                        gh.graph.has_edge(gh.index_of(&[i, j]), gh.index_of(&[k, l])),
                        hg.graph.has_edge(hg.index_of(&[j, i]), hg.index_of(&[l, k]))
                    );
                }
            }
        }
    }
}

#[test]
fn indexing_round_trip() {
    let g = graph("cycle:5");
    let h = graph("complete:3");
    let p = direct_product(&g, &h, CAP).unwrap();
    assert_eq!(p.factor_sizes(), vec![5, 3]);
    for v in 0..p.graph.n() {
        let coords = [p.coordinate(v, 0), p.coordinate(v, 1)];
        assert_eq!(p.index_of(&coords), v);
        assert_eq!(v, coords[0] * 3 + coords[1]);
    }
}

#[test]
fn power_examples() {
    let k3 = graph("complete:3");
    let sq = power(&k3, 2, CAP).unwrap();
    let prod = direct_product(&k3, &k3, CAP).unwrap();
    assert_eq!(sq.graph.edges(), prod.graph.edges());

    let c5 = graph("cycle:5");
    assert_eq!(power(&c5, 3, CAP).unwrap().graph.n(), 125);

    let identity = power(&c5, 1, CAP).unwrap();
    assert_eq!(identity.graph.edges(), c5.edges());

    assert!(matches!(
        power(&c5, 6, CAP),
        Err(Error::SizeOverflow { .. })
    ));
}

#[test]
fn projection_and_fiber_examples() {
    let k2 = graph("complete:2");
    let p = direct_product(&k2, &k2, CAP).unwrap();
    // S = {(0,0),(0,1)} = {0,1}; one row.
    let s = set(4, &[0, 1]);
    assert_eq!(p.project(&s, 0).unwrap(), set(2, &[0]));
    assert_eq!(p.project(&s, 1).unwrap(), set(2, &[0, 1]));
    // Full fiber over 0, empty fiber over 1.
    assert_eq!(p.fiber(0, &s).unwrap(), set(2, &[0, 1]));
    assert_eq!(p.fiber(1, &s).unwrap(), set(2, &[]));

    // Diagonal S = {(0,0),(1,1)} = {0,3}.
    let diag = set(4, &[0, 3]);
    assert_eq!(p.project(&diag, 1).unwrap(), set(2, &[0, 1]));
    assert_eq!(p.fiber(1, &diag).unwrap(), set(2, &[1]));

    let empty = set(4, &[]);
    assert_eq!(p.project(&empty, 0).unwrap(), set(2, &[]));

    assert!(matches!(p.project(&s, 2), Err(Error::BadAxis { .. })));

    // preimage is the inverse of project for product-form sets.
    let c5 = graph("cycle:5");
    let k3 = graph("complete:3");
    let q = direct_product(&c5, &k3, CAP).unwrap();
    let i = set(5, &[0, 2]);
    let pre = q.preimage(&i, 0).unwrap();
    assert_eq!(pre.len(), 6);
    assert_eq!(q.project(&pre, 0).unwrap(), i);
    for a in i.iter() {
        assert_eq!(q.fiber(a, &pre).unwrap(), k3.vertex_set());
    }
    assert_eq!(q.fiber(1, &pre).unwrap(), set(3, &[]));
}

#[test]
fn diagonal_examples() {
    let k3 = graph("complete:3");
    let p = power(&k3, 2, CAP).unwrap();
    let (verts, diag) = p.diagonal_subgraph().unwrap();
    assert_eq!(verts, set(9, &[0, 4, 8]));
    assert_eq!(diag.edge_count(), 3);

    let c5 = graph("cycle:5");
    let p = power(&c5, 2, CAP).unwrap();
    let (_, diag) = p.diagonal_subgraph().unwrap();
    // The diagonal induces a copy of the factor via u -> (u,u).
    assert_eq!(diag.edges(), c5.edges());

    let k2 = graph("complete:2");
    let p = power(&k2, 2, CAP).unwrap();
    let (_, diag) = p.diagonal_subgraph().unwrap();
    assert_eq!(diag.edge_count(), 1);

    let mixed = direct_product(&k2, &k3, CAP).unwrap();
    assert!(matches!(
        mixed.diagonal_subgraph(),
        Err(Error::NotASquareProduct)
    ));
}

#[test]
fn size_cap_enforced() {
    let g = graph("cycle:70");
    assert!(matches!(
        direct_product(&g, &g, CAP),
        Err(Error::SizeOverflow { .. })
    ));
    assert!(direct_product(&g, &g, 4900).is_ok());
}
