use misnormal_core::families::{corpus, generate, FamilySpec};
use misnormal_core::{Env, Error};

fn graph(spec: &str) -> misnormal_core::Graph {
    generate(&FamilySpec::parse(spec).unwrap()).unwrap()
}

#[test]
fn cycle_and_complete() {
    let c5 = graph("cycle:5");
    assert_eq!(c5.n(), 5);
    assert_eq!(c5.edge_count(), 5);
    assert!((0..5).all(|v| c5.degree(v) == 2));

    let k6 = graph("complete:6");
    assert_eq!(k6.edge_count(), 15);

    let e4 = graph("empty:4");
    assert_eq!(e4.edge_count(), 0);
}

#[test]
fn kneser_examples() {
    let petersen = graph("kneser:5,2");
    assert_eq!(petersen.n(), 10);
    assert_eq!(petersen.edge_count(), 15);
    assert!((0..10).all(|v| petersen.degree(v) == 3));

    // kneser(n,1) is the complete graph.
    for n in 2..=6 {
        let kn = graph(&format!("kneser:{n},1"));
        let complete = graph(&format!("complete:{n}"));
        assert_eq!(kn.edges(), complete.edges());
    }

    let big = graph("kneser:7,3");
    assert_eq!(big.n(), 35);
    assert!((0..35).all(|v| big.degree(v) == 4));
}

#[test]
fn circulant_examples() {
    // Full connection set gives the complete graph.
    let full = graph("circulant:7,1+2+3");
    assert_eq!(full.edges(), graph("complete:7").edges());

    // Connection residues are normalized: 8 ≡ -1 (mod 9).
    let a = graph("circulant:9,8+2");
    let b = graph("circulant:9,1+2");
    assert_eq!(a.edges(), b.edges());

    let c = graph("circulant:9,1+2");
    assert!((0..9).all(|v| c.degree(v) == 4));

    // cycle(n) = circulant(n, {1}).
    assert_eq!(graph("circulant:11,1").edges(), graph("cycle:11").edges());
}

#[test]
fn disjoint_copies() {
    let two_k3 = graph("copies:2xcomplete:3");
    assert_eq!(two_k3.n(), 6);
    assert_eq!(two_k3.edge_count(), 6);
    assert_eq!(two_k3.components().len(), 2);

    let three_c4 = graph("copies:3xcycle:4");
    assert_eq!(three_c4.n(), 12);
    assert_eq!(three_c4.components().len(), 3);
}

#[test]
fn parse_rejects_bad_parameters() {
    assert!(matches!(FamilySpec::parse("cycle:2").and_then(|s| generate(&s)), Err(Error::BadParameters(_))));
    assert!(matches!(FamilySpec::parse("kneser:3,2").and_then(|s| generate(&s)), Err(Error::BadParameters(_))));
    assert!(matches!(FamilySpec::parse("kneser:5,0").and_then(|s| generate(&s)), Err(Error::BadParameters(_))));
    assert!(matches!(FamilySpec::parse("circulant:6,0").and_then(|s| generate(&s)), Err(Error::BadParameters(_))));
    assert!(FamilySpec::parse("frobnicate:5").is_err());
    assert!(FamilySpec::parse("cycle:abc").is_err());
}

#[test]
fn display_parse_round_trip() {
    for (spec, _) in corpus(12) {
        let text = spec.to_string();
        let reparsed = FamilySpec::parse(&text).unwrap();
        assert_eq!(reparsed, spec, "round trip failed for {text}");
        // Determinism: identical spec yields bit-identical adjacency.
        assert_eq!(generate(&spec).unwrap().edges(), generate(&reparsed).unwrap().edges());
    }
    for text in ["cycle:5", "kneser:5,2", "circulant:9,1+2", "copies:2xcomplete:3"] {
        let spec = FamilySpec::parse(text).unwrap();
        assert_eq!(spec.to_string(), text);
    }
}

#[test]
fn corpus_contents() {
    let names: Vec<String> = corpus(5).iter().map(|(s, _)| s.to_string()).collect();
    for expected in ["cycle:3", "cycle:4", "cycle:5", "complete:2", "complete:3", "complete:4", "complete:5"] {
        assert!(names.contains(&expected.to_string()), "corpus(5) missing {expected}");
    }

    let names10: Vec<String> = corpus(10).iter().map(|(s, _)| s.to_string()).collect();
    assert!(names10.contains(&"kneser:5,2".to_string()));
    assert!(!names10.contains(&"kneser:7,3".to_string()));
    assert!(names10.contains(&"copies:2xcomplete:3".to_string()));

    let names35: Vec<String> = corpus(35).iter().map(|(s, _)| s.to_string()).collect();
    assert!(names35.contains(&"kneser:7,3".to_string()));

    // Deterministic ordering.
    let again: Vec<String> = corpus(10).iter().map(|(s, _)| s.to_string()).collect();
    assert_eq!(names10, again);

    // Every corpus member respects the vertex cap.
    for (spec, g) in corpus(12) {
        assert!(g.n() <= 12, "{spec} exceeds the cap");
    }
}

#[test]
fn corpus_is_vertex_transitive() {
    let env = Env::default();
    for (spec, g) in corpus(12) {
        assert!(
            misnormal_core::is_vertex_transitive(&g, &env).unwrap(),
            "{spec} is not vertex-transitive"
        );
    }
}
