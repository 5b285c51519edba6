use nonforesty::canon::canonical_code;
use nonforesty::oracle::VerifyOptions;
use nonforesty::properties::every_local_is_c3_plus_k1;
use nonforesty::{
    block_decomposition, build_extremal, enumerate_graphs, harary, is_locally_nonforesty, serialize_graph6,
    verify_minimality, vertex_connectivity, EnumerationSpec, SmallGraph,
};

#[test]
fn connected_family_block_counts() {
    for n in 8..=40 {
        let g = build_extremal(1, n).unwrap();
        let d = block_decomposition(&g).unwrap();
        let (t2, t4) = (d.count_of_order(2), d.count_of_order(4));
        let others = d.blocks.len() - t2 - t4;
        assert!(others <= 1, "n={n}");
        if n % 4 == 0 {
            assert_eq!((t2 + 1, 6 * t4 + t2), (t4, g.size()), "n={n}");
        }
        assert!(vertex_connectivity(&g).unwrap() == 1);
    }
}

#[test]
fn four_connected_family_regular_when_divisible() {
    for n in (8..=40).step_by(4) {
        let g = build_extremal(4, n).unwrap();
        assert!(g.degrees().iter().all(|&d| d == 4));
        assert!(every_local_is_c3_plus_k1(&g));
        assert_eq!(vertex_connectivity(&g), Ok(4));
    }
    for n in (9..=40).filter(|n| n % 4 != 0) {
        assert!(!every_local_is_c3_plus_k1(&build_extremal(4, n).unwrap()));
    }
}

#[test]
fn constructions_are_deterministic() {
    for k in [1, 2, 4] {
        for n in [8, 13, 22, 40] {
            let a = serialize_graph6(&build_extremal(k, n).unwrap());
            assert_eq!(a, serialize_graph6(&build_extremal(k, n).unwrap()));
        }
    }
    assert_eq!(harary(7, 15).unwrap(), harary(7, 15).unwrap());
}

#[test]
fn minimality_is_deterministic_across_thread_counts() {
    let budget = 13;
    let one = VerifyOptions { jobs: Some(1), ..Default::default() };
    let four = VerifyOptions { jobs: Some(4), ..Default::default() };
    let a = verify_minimality(1, 8, budget, &one).unwrap();
    let b = verify_minimality(1, 8, budget, &four).unwrap();
    assert_eq!(a.graphs_examined, b.graphs_examined);
    assert_eq!(a.qualifying_witness, b.qualifying_witness);
    let w = a.qualifying_witness.unwrap();
    assert_eq!(w.size(), 13);
    assert!(is_locally_nonforesty(&w) && w.is_connected());
}

#[test]
fn locally_nonforesty_needs_minimum_degree_three() {
    for n in 1..=8 {
        let mut spec = EnumerationSpec::new(n);
        spec.local_predicate = nonforesty::LocalPredicate::LocallyNonforesty;
        enumerate_graphs(&spec, |g: &SmallGraph| {
            assert!(g.min_degree() >= 3, "order {n}");
            assert_eq!(canonical_code(g), nonforesty::canon::identity_code(g));
        })
        .unwrap();
    }
}

#[test]
fn formula_budget_admits_a_witness() {
    for n in [8, 9] {
        for k in [1, 2, 4] {
            let value = nonforesty::f(k, n).unwrap().value;
            let below = verify_minimality(k, n, value - 1, &VerifyOptions::default()).unwrap();
            assert!(below.certified && below.qualifying_witness.is_none(), "k={k} n={n}");
            let at = verify_minimality(k, n, value, &VerifyOptions::default()).unwrap();
            let w = at.qualifying_witness.as_ref().expect("witness at the formula value");
            assert_eq!(w.size(), value, "k={k} n={n}");
            assert!(nonforesty::is_k_connected(w, k) && is_locally_nonforesty(w));
            assert!(!at.contradicts_formula());
        }
    }
}
