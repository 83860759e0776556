//! Every theorem on its full grid: structural flavor against the eigensolver,
//! cardinality, printed clause multiplicities, witnesses, proof partitions.

use hypersub::partitions::containment_check;
use hypersub::predictors::{
    audit, clause_counts, closed, full_grid, grid, proof_partition, witness_families, Instance, Theorem,
    DEFAULT_AUDIT_TOL, WITNESS_TOL,
};
use hypersub::{check_equitable, eigenvalues, multiset_equal, predict, subdivide, Flavor, Polynomial};

fn adjacency(inst: &Instance) -> hypersub::SymMatrix {
    subdivide(&inst.hypergraph().unwrap()).hypergraph.adjacency_matrix().unwrap()
}

#[test]
fn cardinality_on_every_grid_point() {
    for inst in full_grid() {
        let h = inst.hypergraph().unwrap();
        let s = subdivide(&h).hypergraph;
        let k = h.uniformity().unwrap();
        assert_eq!(s.n(), h.n() + h.m());
        assert_eq!(s.m(), h.m() * k);
        for flavor in [Flavor::Structural, Flavor::ClosedForm] {
            let Ok(p) = predict(&inst, flavor) else { continue };
            assert_eq!(p.len(), s.n(), "{} {} {flavor:?}", inst.theorem(), inst.params());
        }
        assert_eq!(predict(&inst, Flavor::Structural).unwrap().flatten().len(), s.n());
    }
}

#[test]
fn structural_matches_eigensolver() {
    for inst in full_grid() {
        let oracle = eigenvalues(&adjacency(&inst));
        let p = predict(&inst, Flavor::Structural).unwrap().flatten();
        let c = multiset_equal(p.values(), oracle.values(), DEFAULT_AUDIT_TOL);
        assert!(c.equal, "{} {}: {:e}", inst.theorem(), inst.params(), c.max_deviation);
    }
}

#[test]
fn audit_passes_except_squid_like_cubic() {
    for inst in full_grid() {
        let r = audit(&inst, DEFAULT_AUDIT_TOL).unwrap();
        assert!(r.structural_passed(), "{r:?}");
        if inst.theorem() == Theorem::T6 {
            assert_eq!(r.discrepancies.len(), 1, "{r:?}");
            assert_eq!(r.discrepancies[0].clause, "ii");
        } else {
            assert!(r.passed(), "{r:?}");
        }
    }
}

#[test]
fn printed_multiplicities_hold() {
    for inst in full_grid() {
        for c in clause_counts(&inst).unwrap() {
            assert!(c.holds(), "{} {}: {c:?}", inst.theorem(), inst.params());
        }
    }
}

#[test]
fn witness_residuals() {
    for inst in full_grid() {
        let a = adjacency(&inst);
        for f in witness_families(&inst).unwrap() {
            let r = f.max_residual(&a);
            assert!(r <= WITNESS_TOL, "{} {} {}: {r:e}", inst.theorem(), inst.params(), f.name);
        }
    }
}

#[test]
fn proof_partitions_are_equitable_and_contained() {
    for inst in full_grid() {
        let a = adjacency(&inst);
        let p = proof_partition(&inst).unwrap();
        let q = check_equitable(&a, &p.partition, 1e-10).unwrap();
        let c = containment_check(&q, &a, 1e-8);
        assert!(c.holds, "{} {}: {c:?}", inst.theorem(), inst.params());
    }
}

#[test]
fn hyperstar_is_the_one_center_hyperflower() {
    for l in 1..=8 {
        for k in 2..=9 {
            let c3 = closed::t3_cubic(l, 1, k - 1);
            let c4 = closed::t4_cubic(l, k);
            let scale = k as i64 - 1;
            assert_eq!(c3, c4.map(|x| x * scale), "l={l} k={k}");
            assert_eq!(closed::t3_pair(1, k - 1), closed::t4_pair(k));
        }
    }
    for inst in grid(Theorem::T4) {
        let Instance::Hyperstar { l, k } = inst else { unreachable!() };
        let star = predict(&inst, Flavor::ClosedForm).unwrap().flatten();
        let flower = predict(&Instance::Hyperflower { l, s: 1, t: k - 1 }, Flavor::ClosedForm).unwrap().flatten();
        assert!(multiset_equal(star.values(), flower.values(), 1e-12).equal);
    }
}

/// Real parts of the roots of `p`.
fn rotation_roots(p: &Polynomial) -> Vec<f64> {
    p.complex_roots().iter().map(|z| z.re).collect()
}

#[test]
fn stray_factor_variant_of_the_rotation_cubic_fails() {
    let mut worst = 0.0f64;
    for inst in grid(Theorem::T5) {
        let Instance::PetalOverlapped { l, s, t } = inst else { unreachable!() };
        let k = s + t + 2;
        if k == 4 {
            continue;
        }
        let structural = predict(&inst, Flavor::Structural).unwrap();
        let reference = structural.flatten();
        for j in 1..l {
            let c = 2.0 * (2.0 * std::f64::consts::PI * j as f64 / l as f64).cos();
            for root in rotation_roots(&closed::t5_cubic(k, t, c)) {
                assert!(reference.count_near(root, 1e-7) > 0, "l={l} s={s} t={t} j={j}");
            }
            let stray = closed::t5_cubic_with_stray_factor(k, t, c);
            let dev = rotation_roots(&stray)
                .iter()
                .map(|r| reference.values().iter().map(|w| (r - w).abs()).fold(f64::INFINITY, f64::min))
                .fold(0.0, f64::max);
            worst = worst.max(dev);
        }
    }
    assert!(worst > 1e-2, "{worst}");
}
