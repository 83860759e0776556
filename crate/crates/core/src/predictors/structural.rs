//! Spectra assembled from the eigenvector ansatz of each family: explicit
//! difference families, the quotient matrix of the natural equitable
//! partition, and small reduced blocks.
//!
//! Block rows act on coefficient tuples; an eigenpair `(λ, c)` of a block
//! lifts to an eigenvector of the subdivided adjacency matrix.

use nalgebra::{Complex, DMatrix};

use crate::error::{Error, Result};
use crate::spectra::{self, small};

use super::{coincidence_tol, push, require_regular_uniform, weight, Instance, Piece, Source};

/// `[[aλ, r+λ], [1, 0]]` on `(x, Bᵀx)` for a codegree eigenvector `x`.
pub fn regular_block(k: usize, r: usize, lambda: f64) -> Vec<Vec<f64>> {
    let a = weight(k);
    vec![vec![a * lambda, r as f64 + lambda], vec![1.0, 0.0]]
}

/// Block on `(x, Bᵀx on each padding vertex, Bᵀx on each new vertex)` for a
/// graph eigenvector `x`.
pub fn power_block(k: usize, r: usize, lambda: f64) -> Vec<Vec<f64>> {
    let a = weight(k);
    let kf = k as f64;
    let s = r as f64 + lambda;
    vec![
        vec![a * lambda, a * (kf - 2.0) * s, s],
        vec![a, a * (kf - 3.0), 1.0],
        vec![1.0, kf - 2.0, 0.0],
    ]
}

/// Block on `(padding, new vertex)` for an edge vector in the kernel of the
/// graph incidence matrix.
pub fn cycle_space_block(k: usize) -> Vec<Vec<f64>> {
    let kf = k as f64;
    vec![vec![weight(k) * (kf - 3.0), 1.0], vec![kf - 2.0, 0.0]]
}

/// Block on `(twins, new vertex)` for the difference of two petals.
pub fn petal_difference_block(t: usize, k: usize) -> Vec<Vec<f64>> {
    vec![vec![(t as f64 - 1.0) * weight(k), 1.0], vec![t as f64, 0.0]]
}

/// Block on `(overlap, twins, new vertex)` for the `α`-twisted vector.
pub fn rotation_block(k: usize, t: usize, alpha: Complex<f64>) -> DMatrix<Complex<f64>> {
    let a = weight(k);
    let one = Complex::new(1.0, 0.0);
    let inv = alpha.inv();
    let tf = t as f64;
    DMatrix::from_row_slice(
        3,
        3,
        &[
            (alpha + inv) * a,
            (one + inv) * (tf * a),
            one + inv,
            (one + alpha) * a,
            one * ((tf - 1.0) * a),
            one,
            one + alpha,
            one * tf,
            Complex::new(0.0, 0.0),
        ],
    )
}

/// Block on `(first column, rest of petal, petal new vertex)` for the
/// difference of two squid-like petals.
pub fn squid_difference_block(k: usize) -> Vec<Vec<f64>> {
    let a = weight(k);
    let kf = k as f64;
    vec![
        vec![-a, kf - 2.0, 1.0],
        vec![a, (kf - 2.0).powi(2) / (kf - 1.0), 1.0],
        vec![1.0, kf - 1.0, 0.0],
    ]
}

/// Quotient of `{W, U, P}` for the hyperflower.
pub fn hyperflower_quotient(l: usize, s: usize, t: usize) -> Vec<Vec<f64>> {
    let (l, s, t) = (l as f64, s as f64, t as f64);
    let k = s + t;
    let (k1, k2) = (k - 1.0, k - 2.0);
    scale(
        vec![
            vec![l * (s - 1.0) * k2, l * t * k2, l * k1],
            vec![s * k2, (t - 1.0) * k2, k1],
            vec![s * k1, t * k1, 0.0],
        ],
        k1,
    )
}

/// Quotient of `{W, V, U, P}` for the petal-overlapped hyperflower.
pub fn petal_overlapped_quotient(l: usize, s: usize, t: usize) -> Vec<Vec<f64>> {
    let (l, s, t) = (l as f64, s as f64, t as f64);
    let k = s + t + 2.0;
    let (k1, k2) = (k - 1.0, k - 2.0);
    scale(
        vec![
            vec![l * (s - 1.0) * k2, 2.0 * l * k2, l * t * k2, l * k1],
            vec![2.0 * s * k2, 2.0 * k2, 2.0 * t * k2, 2.0 * k1],
            vec![s * k2, 2.0 * k2, (t - 1.0) * k2, k1],
            vec![s * k1, 2.0 * k1, t * k1, 0.0],
        ],
        k1,
    )
}

/// Quotient of `{W, U, {p}, Q}` for the squid-like hypergraph.
pub fn squid_like_quotient(k: usize) -> Vec<Vec<f64>> {
    let k = k as f64;
    let (k1, k2) = (k - 1.0, k - 2.0);
    scale(
        vec![
            vec![k1 * k2, k1 * k2, k1, k1],
            vec![k2, k2 * k2, 0.0, k1],
            vec![k * k1, 0.0, 0.0, 0.0],
            vec![k1, k1 * k1, 0.0, 0.0],
        ],
        k1,
    )
}

fn scale(rows: Vec<Vec<f64>>, by: f64) -> Vec<Vec<f64>> {
    rows.into_iter()
        .map(|r| r.into_iter().map(|x| x / by).collect())
        .collect()
}

pub(crate) fn block_values(rows: &[Vec<f64>]) -> Result<Vec<f64>> {
    small::real_spectrum(&small::eigenvalues_real_block(&small::real_block(rows)))
}

pub(crate) fn root_of_unity(j: usize, l: usize) -> Complex<f64> {
    Complex::from_polar(1.0, std::f64::consts::TAU * j as f64 / l as f64)
}

pub(crate) fn pieces(instance: &Instance) -> Result<Vec<Piece>> {
    let mut out = Vec::new();
    match instance {
        Instance::Regular { hypergraph: h, .. } => {
            let (k, r) = require_regular_uniform(h)?;
            let tol = coincidence_tol(r as f64);
            let mut q = 0;
            for &lambda in spectra::eigenvalues(&h.codegree_matrix()).values() {
                let label = format!("λ={lambda:.6}");
                if (lambda + r as f64).abs() <= tol {
                    q += 1;
                    let v = -weight(k) * r as f64;
                    push(&mut out, Piece::new("ii", Source::EigenvectorFamily, label, vec![v], 1));
                } else {
                    let vals = block_values(&regular_block(k, r, lambda))?;
                    push(&mut out, Piece::new("ii", Source::ReducedBlock, label, vals, 1));
                }
            }
            let zeros = (h.m() + q).checked_sub(h.n()).ok_or(Error::CancellationImpossible {
                needed: h.n() - h.m(),
                available: q,
            })?;
            push(&mut out, Piece::new("i", Source::EigenvectorFamily, "incidence kernel", vec![0.0], zeros));
        }
        Instance::GraphPower { base, k, .. } => {
            if !base.is_graph() {
                return Err(Error::NotAGraph);
            }
            let r = base.regularity().ok_or(Error::NotRegular)?;
            if *k < 3 {
                return Err(Error::KTooSmall(*k));
            }
            let (k, n, m) = (*k, base.n(), base.m());
            let a = weight(k);
            push(&mut out, Piece::new("i", Source::EigenvectorFamily, "padding differences", vec![-a], m * (k - 3)));
            let tol = coincidence_tol(r as f64);
            let mut q = 0;
            for &lambda in spectra::eigenvalues(&base.adjacency_matrix()?).values() {
                let label = format!("λ={lambda:.6}");
                if (lambda + r as f64).abs() <= tol {
                    q += 1;
                    push(&mut out, Piece::new("iii", Source::EigenvectorFamily, label, vec![-a * r as f64], 1));
                } else {
                    let vals = block_values(&power_block(k, r, lambda))?;
                    push(&mut out, Piece::new("iii", Source::ReducedBlock, label, vals, 1));
                }
            }
            let vals = block_values(&cycle_space_block(k))?;
            push(&mut out, Piece::new("ii", Source::ReducedBlock, "cycle space", vals, m + q - n));
        }
        Instance::Hyperflower { l, s, t } => {
            super::check_flower(*l, *s, *t)?;
            flower_pieces(&mut out, *l, *s, *t)?;
        }
        Instance::Hyperstar { l, k } => {
            super::check_star(*l, *k)?;
            flower_pieces(&mut out, *l, 1, k - 1)?;
            // clause numbering of the one-center statement
            for p in &mut out {
                p.clause = match p.clause.as_str() {
                    "iii" => "ii".into(),
                    "iv" => "iii".into(),
                    other => other.into(),
                };
            }
        }
        Instance::PetalOverlapped { l, s, t } => {
            super::check_petal(*l, *s, *t)?;
            let (l, s, t) = (*l, *s, *t);
            let k = s + t + 2;
            let a = weight(k);
            push(&mut out, Piece::new("i", Source::EigenvectorFamily, "twin differences", vec![-a], l * (t - 1)));
            push(&mut out, Piece::new("ii", Source::EigenvectorFamily, "center differences", vec![-(l as f64) * a], s - 1));
            let vals = block_values(&petal_overlapped_quotient(l, s, t))?;
            push(&mut out, Piece::new("iii", Source::QuotientRoot, "{W,V,U,P}", vals, 1));
            for j in 1..l {
                let block = rotation_block(k, t, root_of_unity(j, l));
                let vals = small::real_spectrum(&small::eigenvalues_complex_block(&block))?;
                push(&mut out, Piece::new("iv", Source::ReducedBlock, format!("j'={j}"), vals, 1));
            }
        }
        Instance::SquidLike { k } => {
            super::check_squid(*k)?;
            let k = *k;
            push(&mut out, Piece::new("i", Source::EigenvectorFamily, "twin differences", vec![-weight(k)], k * (k - 2)));
            let vals = block_values(&squid_difference_block(k))?;
            push(&mut out, Piece::new("ii", Source::ReducedBlock, "petal differences", vals, k - 1));
            let vals = block_values(&squid_like_quotient(k))?;
            push(&mut out, Piece::new("iii", Source::QuotientRoot, "{W,U,p,Q}", vals, 1));
        }
    }
    Ok(out)
}

fn flower_pieces(out: &mut Vec<Piece>, l: usize, s: usize, t: usize) -> Result<()> {
    let k = s + t;
    let a = weight(k);
    push(out, Piece::new("i", Source::EigenvectorFamily, "twin differences", vec![-a], l * (t - 1)));
    push(out, Piece::new("ii", Source::EigenvectorFamily, "center differences", vec![-(l as f64) * a], s - 1));
    let vals = block_values(&petal_difference_block(t, k))?;
    push(out, Piece::new("iii", Source::ReducedBlock, "petal differences", vals, l - 1));
    let vals = block_values(&hyperflower_quotient(l, s, t))?;
    push(out, Piece::new("iv", Source::QuotientRoot, "{W,U,P}", vals, 1));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_block_at_minus_one() {
        // α = -1: the overlap row decouples with value -2a
        let k = 6;
        let b = rotation_block(k, 2, Complex::new(-1.0, 0.0));
        let vals = small::real_spectrum(&small::eigenvalues_complex_block(&b)).unwrap();
        assert!(vals.iter().any(|v| (v + 2.0 * weight(k)).abs() < 1e-12));
        assert!(b[(2, 0)].norm() < 1e-15 && b[(0, 1)].norm() < 1e-15);
    }

    #[test]
    fn single_twin_petal_block() {
        let vals = block_values(&petal_difference_block(1, 4)).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-14 && (vals[1] + 1.0).abs() < 1e-14);
    }
}
