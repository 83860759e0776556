use hypersub::cospectral::{
    are_cospectral, are_isomorphic, cospectral_pair_t7, cospectral_pair_t8, IsoVerdict, NonIsomorphismBasis,
    Provenance, DEFAULT_BUDGET,
};
use hypersub::families;
use hypersub::predictors::predict_graph_power;
use hypersub::{subdivide, Flavor};

#[test]
fn srg_pair_is_cospectral() {
    let c = are_cospectral(&families::shrikhande(), &families::rook4x4(), 1e-9).unwrap();
    assert!(c.equal && c.max_deviation <= 1e-9, "{c:?}");
    let s = families::shrikhande();
    assert!(are_cospectral(&s, &s, 1e-12).unwrap().max_deviation <= 1e-12);
}

#[test]
fn cospectrality_survives_relabeling() {
    let rook = families::rook4x4();
    let s_rook = subdivide(&rook).hypergraph;
    for seed in 0..100 {
        let (g, _) = families::shrikhande().shuffled(seed);
        let c = are_cospectral(&g, &rook, 1e-9).unwrap();
        assert!(c.equal, "seed {seed}: {c:?}");
        let c = are_cospectral(&subdivide(&g).hypergraph, &s_rook, 1e-8).unwrap();
        assert!(c.equal, "seed {seed}: {c:?}");
    }
}

#[test]
fn isomorphism_is_sound_on_planted_pairs() {
    let bases = [
        families::shrikhande(),
        families::hyperflower(3, 2, 2).unwrap(),
        families::squid_like(3).unwrap(),
        families::fano_plane(),
    ];
    for h in &bases {
        for seed in 0..100 {
            let (g, _) = h.shuffled(seed);
            assert_eq!(are_isomorphic(h, &g, DEFAULT_BUDGET), IsoVerdict::Isomorphic, "seed {seed}");
        }
    }
}

#[test]
fn t8_on_the_srg_pair() {
    let c = cospectral_pair_t8(&families::shrikhande(), &families::rook4x4(), 1e-8, DEFAULT_BUDGET).unwrap();
    assert_eq!(c.provenance, Provenance::T8);
    assert!(c.max_deviation <= 1e-8);
    assert_eq!(c.spectrum.len(), 64);
    assert!(matches!(
        c.non_isomorphism,
        Some(NonIsomorphismBasis::Verified | NonIsomorphismBasis::ByLiftingTheorem)
    ));
}

#[test]
fn t7_on_the_srg_pair() {
    let (g1, g2) = (families::shrikhande(), families::rook4x4());
    let c3 = cospectral_pair_t7(&g1, &g2, 3, 1e-7, DEFAULT_BUDGET).unwrap();
    assert_eq!(c3.first.n, 112);
    assert_eq!(c3.second.n, 112);
    assert!(c3.max_deviation <= 1e-7);
    assert!(c3.prediction_gap.unwrap() <= 1e-12);
    assert!(c3.non_isomorphism.is_some());

    let p1 = predict_graph_power(&g1, 3, Flavor::ClosedForm).unwrap().flatten();
    let p2 = predict_graph_power(&g2, 3, Flavor::ClosedForm).unwrap().flatten();
    assert!(hypersub::multiset_equal(p1.values(), p2.values(), 1e-12).equal);

    let c4 = cospectral_pair_t7(&g1, &g2, 4, 1e-7, DEFAULT_BUDGET).unwrap();
    assert_ne!(c4.spectrum.len(), c3.spectrum.len());
}
