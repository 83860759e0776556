//! Frozen reference values, checked against both the predictors and the
//! eigensolver.

use hypersub::families;
use hypersub::predictors::{closed, predict_graph_power, predict_hyperflower, predict_regular, predict_squid_like};
use hypersub::{eigenvalues, multiset_equal, subdivide, Flavor, Hypergraph};

fn oracle(h: &Hypergraph) -> Vec<f64> {
    eigenvalues(&subdivide(h).hypergraph.adjacency_matrix().unwrap()).values().to_vec()
}

fn assert_close(got: &[f64], want: &[f64], tol: f64) {
    let c = multiset_equal(got, want, tol);
    assert!(c.equal, "deviation {:e}\n got  {got:?}\n want {want:?}", c.max_deviation);
}

fn single_triple() -> Hypergraph {
    Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap()
}

#[test]
fn single_triple_after_cancellation() {
    let s13 = 13f64.sqrt();
    let want = [(1.0 + s13) / 2.0, -0.5, -0.5, (1.0 - s13) / 2.0];
    let h = single_triple();
    for flavor in [Flavor::Structural, Flavor::ClosedForm] {
        assert_close(predict_regular(&h, flavor).unwrap().flatten().values(), &want, 1e-12);
    }
    assert_close(&oracle(&h), &want, 1e-12);
}

#[test]
fn normalized_eigenvalues_do_not_fit() {
    // Quadratics fed with the eigenvalues {1, -1/2, -1/2} of the normalized
    // matrix; the two values closest to zero stand in for the cancelled ones.
    let mut roots: Vec<f64> = [1.0, -0.5, -0.5]
        .iter()
        .flat_map(|&l| closed::t1_quadratic(3, 1, l).real_roots().unwrap())
        .collect();
    roots.sort_by(|a, b| a.abs().total_cmp(&b.abs()));
    let kept = &roots[2..];
    let dev = multiset_equal(kept, &oracle(&single_triple()), 1e-6).max_deviation;
    assert!((dev - 0.617).abs() < 1e-3, "{dev}");
}

#[test]
fn single_edge_is_a_path() {
    let h = Hypergraph::new(2, vec![vec![0, 1]]).unwrap();
    let want = [2f64.sqrt(), 0.0, -(2f64.sqrt())];
    assert_close(predict_regular(&h, Flavor::Structural).unwrap().flatten().values(), &want, 1e-12);
    assert_close(predict_hyperflower(1, 1, 1, Flavor::Structural).unwrap().flatten().values(), &want, 1e-12);
    assert_close(&oracle(&h), &want, 1e-12);
}

#[test]
fn fano_values() {
    let s5 = 5f64.sqrt();
    let s = 8.25f64.sqrt();
    let mut want = vec![(3.0 + 3.0 * s5) / 2.0, (3.0 - 3.0 * s5) / 2.0];
    for _ in 0..6 {
        want.push((-0.5 + s) / 2.0);
        want.push((-0.5 - s) / 2.0);
    }
    let h = families::fano_plane();
    assert_close(predict_regular(&h, Flavor::ClosedForm).unwrap().flatten().values(), &want, 1e-12);
    assert_close(&oracle(&h), &want, 1e-10);
}

#[test]
fn hyperflower_4_2_3() {
    let p = predict_hyperflower(4, 2, 3, Flavor::ClosedForm).unwrap().flatten();
    assert_eq!(p.len(), 18);
    assert_eq!(p.count_near(-0.75, 1e-9), 8);
    assert_eq!(p.count_near(-3.0, 1e-9), 1);
    let plus = (6.0 + 228f64.sqrt()) / 8.0;
    let minus = (6.0 - 228f64.sqrt()) / 8.0;
    assert_eq!(p.count_near(plus, 1e-9), 3);
    assert_eq!(p.count_near(minus, 1e-9), 3);
    assert_close(p.values(), &oracle(&families::hyperflower(4, 2, 3).unwrap()), 1e-9);
}

#[test]
fn graph_powers() {
    let c4 = families::cycle_graph(4).unwrap();
    let p = predict_graph_power(&c4, 3, Flavor::ClosedForm).unwrap();
    assert_eq!(p.len(), 12);
    // -1 is a double root of one cubic; companion roots lose half the digits there.
    assert_close(p.flatten().values(), &oracle(&families::power_of_graph(&c4, 3).unwrap()), 1e-6);

    let c3 = families::cycle_graph(3).unwrap();
    let p = predict_graph_power(&c3, 4, Flavor::ClosedForm).unwrap().flatten();
    assert_eq!(p.len(), 12);
    assert_eq!(p.count_near(-2.0 / 3.0, 1e-9), 3);

    let petersen = families::petersen();
    let p = predict_graph_power(&petersen, 5, Flavor::Structural).unwrap().flatten();
    assert_eq!(p.len(), 70);
    assert_close(p.values(), &oracle(&families::power_of_graph(&petersen, 5).unwrap()), 1e-6);
}

#[test]
fn squid_like_three() {
    let p = predict_squid_like(3, Flavor::Structural).unwrap().flatten();
    assert_eq!(p.len(), 13);
    assert_eq!(p.count_near(-0.5, 1e-9), 3);
    assert_close(p.values(), &oracle(&families::squid_like(3).unwrap()), 1e-9);
    let two = predict_squid_like(2, Flavor::Structural).unwrap().flatten();
    assert_eq!(two.len(), 7);
    assert_eq!(two.count_near(0.0, 1e-9), oracle(&families::squid_like(2).unwrap()).iter().filter(|x| x.abs() < 1e-9).count());
}

#[test]
fn petal_overlapped_4_2_2() {
    let p = hypersub::predictors::predict_petal_overlapped(4, 2, 2, Flavor::Structural).unwrap().flatten();
    assert_eq!(p.len(), 18);
    assert_close(p.values(), &oracle(&families::petal_overlapped_hyperflower(4, 2, 2).unwrap()), 1e-9);
}
