//! Numerical backbone: the symmetric eigensolver used as the oracle for
//! every prediction, polynomial roots, and spectrum multisets.

mod jacobi;
mod multiset;
mod poly;
pub mod small;

pub use multiset::{multiset_equal, Comparison, SpectrumMultiset, DEFAULT_GROUPING_TOL};
pub use poly::Polynomial;

pub(crate) use jacobi::symmetric_eigen;

use crate::matrix::SymMatrix;

/// All eigenvalues of a symmetric matrix, sorted descending.
pub fn eigenvalues(m: &SymMatrix) -> SpectrumMultiset {
    SpectrumMultiset::new(symmetric_eigen(m, false).values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::subdivision::subdivide;
    use proptest::prelude::*;

    fn check_invariants(m: &SymMatrix, s: &SpectrumMultiset) {
        let n = m.order() as f64;
        let sum: f64 = s.values().iter().sum();
        let sq: f64 = s.values().iter().map(|v| v * v).sum();
        assert!((sum - m.trace()).abs() <= 1e-9 * n.max(1.0));
        assert!((sq - m.frobenius_sq()).abs() <= 1e-8 * n.max(1.0));
    }

    #[test]
    fn subdivided_triple() {
        let h = families::complete_uniform(3, 3).unwrap();
        let a = subdivide(&h).hypergraph.adjacency_matrix().unwrap();
        let s = eigenvalues(&a);
        check_invariants(&a, &s);
        let r = 13f64.sqrt();
        let expect = [(1.0 + r) / 2.0, -0.5, -0.5, (1.0 - r) / 2.0];
        let c = multiset_equal(s.values(), &expect, 1e-12);
        assert!(c.equal, "{:?}", s.values());
    }

    #[test]
    fn shrikhande_spectrum() {
        let a = families::shrikhande().adjacency_matrix().unwrap();
        let s = eigenvalues(&a);
        check_invariants(&a, &s);
        let mut expect = vec![6.0];
        expect.extend([2.0; 6]);
        expect.extend([-2.0; 9]);
        assert!(multiset_equal(s.values(), &expect, 1e-10).equal);
        assert_eq!(s.grouped().len(), 3);
    }

    #[test]
    fn shrikhande_and_rook_agree() {
        let a = eigenvalues(&families::shrikhande().adjacency_matrix().unwrap());
        let b = eigenvalues(&families::rook4x4().adjacency_matrix().unwrap());
        let c = multiset_equal(a.values(), b.values(), 1e-8);
        assert!(c.equal && c.max_deviation <= 1e-9);
    }

    #[test]
    fn matches_nalgebra_on_a_large_instance() {
        let h = families::power_of_graph(&families::shrikhande(), 3).unwrap();
        let a = subdivide(&h).hypergraph.adjacency_matrix().unwrap();
        assert_eq!(a.order(), 112);
        let ours = eigenvalues(&a);
        check_invariants(&a, &ours);
        let m = nalgebra::DMatrix::from_row_slice(112, 112, a.as_slice());
        let theirs: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
        assert!(multiset_equal(ours.values(), &theirs, 1e-11).equal);
    }

    proptest! {
        #[test]
        fn trace_and_frobenius_are_preserved(
            order in 1usize..12,
            seed in proptest::collection::vec(-5.0f64..5.0, 144),
        ) {
            let m = SymMatrix::from_fn(order, |i, j| seed[i * 12 + j]);
            let s = eigenvalues(&m);
            prop_assert_eq!(s.len(), order);
            let sum: f64 = s.values().iter().sum();
            let sq: f64 = s.values().iter().map(|v| v * v).sum();
            prop_assert!((sum - m.trace()).abs() <= 1e-9 * order as f64);
            prop_assert!((sq - m.frobenius_sq()).abs() <= 1e-8 * order as f64 * (1.0 + m.frobenius_sq()));
            let e = symmetric_eigen(&m, true);
            for (lam, x) in e.values.iter().zip(&e.vectors) {
                let ax = m.mul_vec(x);
                let r = ax.iter().zip(x).map(|(a, b)| (a - lam * b).abs()).fold(0.0, f64::max);
                prop_assert!(r <= 1e-12 * (1.0 + m.frobenius_sq().sqrt()));
            }
        }

        #[test]
        fn real_roots_have_small_residuals(roots in proptest::collection::vec(-4.0f64..4.0, 1..5)) {
            // expand ∏ (x − r)
            let mut coeffs = vec![1.0];
            for r in &roots {
                let mut next = vec![0.0; coeffs.len() + 1];
                for (i, c) in coeffs.iter().enumerate() {
                    next[i] += c;
                    next[i + 1] -= c * r;
                }
                coeffs = next;
            }
            let p = Polynomial::new(coeffs).unwrap();
            let found = p.real_roots().unwrap();
            prop_assert_eq!(found.len(), roots.len());
            for x in found {
                prop_assert!(p.eval(x).abs() <= 1e-6 * (1.0 + p.coeff_norm()));
            }
        }
    }
}
