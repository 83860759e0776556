//! The printed closed forms: values, multiplicities and polynomial
//! coefficients exactly as stated. Integer coefficient builders are exposed
//! so that specialisations can be compared symbolically.

use crate::error::{Error, Result};
use crate::spectra::{self, Polynomial};

use super::{cancel, coincidence_tol, push, require_regular_uniform, weight, Instance, Piece, Source};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum RootMode {
    /// Non-real roots are an error.
    Strict,
    /// Non-real roots contribute their real parts and flag the piece.
    Lenient,
}

/// `(k-1)x² - (k-2)λx - r(k-1) - (k-1)λ`, with `λ` a codegree eigenvalue.
pub fn t1_quadratic(k: usize, r: usize, lambda: f64) -> Polynomial {
    let (k, r) = (k as f64, r as f64);
    poly(vec![k - 1.0, -(k - 2.0) * lambda, -r * (k - 1.0) - (k - 1.0) * lambda])
}

/// `(k-1)x² - (k-2)(k-3)x - (k-1)(k-2)`.
pub fn t2_quadratic(k: usize) -> [i64; 3] {
    let k = k as i64;
    [k - 1, -(k - 2) * (k - 3), -(k - 1) * (k - 2)]
}

/// The cubic attached to each graph eigenvalue `λ` of an `r`-regular graph.
pub fn t2_cubic(k: usize, r: usize, lambda: f64) -> Polynomial {
    let (k, r, l) = (k as f64, r as f64, lambda);
    let (k1, k2, k3) = (k - 1.0, k - 2.0, k - 3.0);
    let s = r + l;
    poly(vec![
        k1 * k1,
        -k1 * k2 * (l + k3),
        -(k1 * k1 * s + k1 * k1 * k2 + k2.powi(3) * s - k2 * k2 * k3 * l),
        k1 * k2 * k3 * s + k1 * k2 * k2 * l - 2.0 * k1 * k2 * k2 * s,
    ])
}

/// A value `(b ± sqrt(disc)) / denom` kept in integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurdPair {
    pub b: i64,
    pub disc: i64,
    pub denom: i64,
}

impl SurdPair {
    pub fn values(&self) -> [f64; 2] {
        let root = (self.disc as f64).sqrt();
        let d = self.denom as f64;
        [(self.b as f64 + root) / d, (self.b as f64 - root) / d]
    }
}

/// `((t-1)(k-2) ± sqrt((t-1)²(k-2)² + 4t(k-1)²)) / (2(k-1))` with `k = s+t`.
pub fn t3_pair(s: usize, t: usize) -> SurdPair {
    let (s, t) = (s as i64, t as i64);
    let k = s + t;
    let b = (t - 1) * (k - 2);
    SurdPair {
        b,
        disc: b * b + 4 * t * (k - 1) * (k - 1),
        denom: 2 * (k - 1),
    }
}

/// `((k-2)² ± sqrt((k-2)⁴ + 4(k-1)³)) / (2(k-1))`.
pub fn t4_pair(k: usize) -> SurdPair {
    let k = k as i64;
    SurdPair {
        b: (k - 2).pow(2),
        disc: (k - 2).pow(4) + 4 * (k - 1).pow(3),
        denom: 2 * (k - 1),
    }
}

pub fn t3_cubic(l: usize, s: usize, t: usize) -> [i64; 4] {
    let (l, s, t) = (l as i64, s as i64, t as i64);
    let k = s + t;
    let (k1, k2) = (k - 1, k - 2);
    [
        k1 * k1,
        -k1 * k2 * (l * s + t - l - 1),
        -((l * s + t) * k1 * k1 + l * (s + t - 1) * k2 * k2),
        -l * (s + t) * k1 * k2,
    ]
}

pub fn t4_cubic(l: usize, k: usize) -> [i64; 4] {
    let (l, k) = (l as i64, k as i64);
    let (k1, k2) = (k - 1, k - 2);
    [k1, -k2 * k2, -(l * k1 + l * k2 * k2 + k1 * k1), -l * k * k2]
}

pub fn t5_quartic(l: usize, s: usize, t: usize) -> [i64; 5] {
    let (l, s, t) = (l as i64, s as i64, t as i64);
    let k = s + t + 2;
    let (k1, k2) = (k - 1, k - 2);
    [
        k1.pow(3),
        -k1 * k1 * k2 * (l * s + t + 1 - l),
        -k1 * ((l * s + t + 4) * k1 * k1 + (3 * l * s + l * t + l + 2 * t + 2) * k2 * k2),
        -(2 * l * (s + t + 1) * k2.pow(3) + (3 * l * s + l * t + 4 * l + 2 * t + 4) * k1 * k1 * k2),
        -2 * l * (s + t + 2) * k1 * k2 * k2,
    ]
}

/// The cubic attached to `c = α + α⁻¹ = 2cos(2πj'/l)`.
pub fn t5_cubic(k: usize, t: usize, c: f64) -> Polynomial {
    t5_cubic_impl(k, t, c, 1.0)
}

/// The same cubic with the extra factor `(k-4)` on the last term of the
/// linear coefficient, as it appears in one derivation of it.
pub fn t5_cubic_with_stray_factor(k: usize, t: usize, c: f64) -> Polynomial {
    t5_cubic_impl(k, t, c, k as f64 - 4.0)
}

fn t5_cubic_impl(k: usize, t: usize, c: f64, stray: f64) -> Polynomial {
    let (k, t) = (k as f64, t as f64);
    let (k1, k2) = (k - 1.0, k - 2.0);
    poly(vec![
        k1 * k1,
        -k1 * k2 * (c + t - 1.0),
        -(t * k1 * k1 + (c + 2.0) * k1 * k1 + (c + 2.0) * t * k2 * k2 - c * (t - 1.0) * k2 * k2 * stray),
        -(c + 2.0) * k1 * k2 - 2.0 * t * k1 * k2,
    ])
}

pub fn t6_cubic(k: usize) -> [i64; 4] {
    let k = k as i64;
    let (k1, k2) = (k - 1, k - 2);
    [
        k1 * k1,
        -k1.pow(3),
        -(k2 * k2 + k1 * k1 + 2 * k2.pow(3) + k1.pow(3)),
        k1 * k2 - 2 * k1 * k1 * k2,
    ]
}

pub fn t6_quartic(k: usize) -> [i64; 5] {
    let k = k as i64;
    let (k1, k2) = (k - 1, k - 2);
    [
        k1,
        -(k2 * k2 + k2 * k1),
        -(k1 * k1 + k1 * (k + 1) + k2 * k2 - k2.pow(3)),
        k1 * k1 * k2 + k2 * k2 * (k + 1) - 2 * k1 * k2,
        k * k1 * k1,
    ]
}

fn poly(coeffs: Vec<f64>) -> Polynomial {
    Polynomial::new(coeffs).expect("leading coefficient is a positive power of k-1")
}

fn int_poly(coeffs: &[i64]) -> Result<Polynomial> {
    Polynomial::from_integers(coeffs)
}

fn root_piece(clause: &str, label: String, p: Polynomial, multiplicity: usize, mode: RootMode) -> Result<Piece> {
    let (values, non_real) = match (p.real_roots(), mode) {
        (Ok(v), _) => (v, false),
        (Err(e @ Error::NonRealRoot { .. }), RootMode::Strict) => return Err(e),
        (Err(Error::NonRealRoot { .. }), RootMode::Lenient) => {
            let mut v: Vec<f64> = p.complex_roots().iter().map(|z| z.re).collect();
            v.sort_by(|a, b| b.total_cmp(a));
            (v, true)
        }
        (Err(e), _) => return Err(e),
    };
    let mut piece = Piece::new(clause, Source::PolynomialRoot, label, values, multiplicity);
    piece.polynomial = Some(p);
    piece.non_real = non_real;
    Ok(piece)
}

fn value_piece(clause: &str, label: &str, value: f64, multiplicity: usize) -> Piece {
    Piece::new(clause, Source::PrintedValue, label, vec![value], multiplicity)
}

pub(crate) fn pieces(instance: &Instance, mode: RootMode) -> Result<Vec<Piece>> {
    let mut out = Vec::new();
    match instance {
        Instance::Regular { hypergraph: h, .. } => {
            let (k, r) = require_regular_uniform(h)?;
            let (n, m) = (h.n(), h.m());
            if m > n {
                push(&mut out, Piece::new("i", Source::PrintedValue, "zero", vec![0.0], m - n));
            }
            for lambda in spectra::eigenvalues(&h.codegree_matrix()).values() {
                let p = t1_quadratic(k, r, *lambda);
                push(&mut out, root_piece("ii", format!("λ={lambda:.6}"), p, 1, mode)?);
            }
            if m < n {
                cancel(&mut out, 0.0, n - m, coincidence_tol(r as f64))?;
            }
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
            push(&mut out, value_piece("i", "-(k-2)/(k-1)", -weight(k), m * (k - 3)));
            let quad = int_poly(&t2_quadratic(k))?;
            let quad_roots = quad.real_roots()?;
            if m > n {
                push(&mut out, root_piece("ii", "pad quadratic".into(), quad, m - n, mode)?);
            }
            for lambda in spectra::eigenvalues(&base.adjacency_matrix()?).values() {
                let p = t2_cubic(k, r, *lambda);
                push(&mut out, root_piece("iii", format!("λ={lambda:.6}"), p, 1, mode)?);
            }
            if m < n {
                for root in quad_roots {
                    cancel(&mut out, root, n - m, coincidence_tol(r as f64))?;
                }
            }
        }
        Instance::Hyperflower { l, s, t } => {
            super::check_flower(*l, *s, *t)?;
            let (l, s, t) = (*l, *s, *t);
            let k = s + t;
            let a = weight(k);
            push(&mut out, value_piece("i", "-(k-2)/(k-1)", -a, l * (t - 1)));
            push(&mut out, value_piece("ii", "-l(k-2)/(k-1)", -(l as f64) * a, s - 1));
            let pair = t3_pair(s, t);
            push(&mut out, Piece::new("iii", Source::PrintedValue, "± pair", pair.values().to_vec(), l - 1));
            let p = int_poly(&t3_cubic(l, s, t))?;
            push(&mut out, root_piece("iv", "cubic".into(), p, 1, mode)?);
        }
        Instance::Hyperstar { l, k } => {
            super::check_star(*l, *k)?;
            let (l, k) = (*l, *k);
            push(&mut out, value_piece("i", "-(k-2)/(k-1)", -weight(k), l * (k - 2)));
            let pair = t4_pair(k);
            push(&mut out, Piece::new("ii", Source::PrintedValue, "± pair", pair.values().to_vec(), l - 1));
            let p = int_poly(&t4_cubic(l, k))?;
            push(&mut out, root_piece("iii", "cubic".into(), p, 1, mode)?);
        }
        Instance::PetalOverlapped { l, s, t } => {
            super::check_petal(*l, *s, *t)?;
            let (l, s, t) = (*l, *s, *t);
            let k = s + t + 2;
            let a = weight(k);
            push(&mut out, value_piece("i", "-(k-2)/(k-1)", -a, l * (t - 1)));
            push(&mut out, value_piece("ii", "-l(k-2)/(k-1)", -(l as f64) * a, s - 1));
            let p = int_poly(&t5_quartic(l, s, t))?;
            push(&mut out, root_piece("iii", "quartic".into(), p, 1, mode)?);
            for j in 1..l {
                let c = 2.0 * (std::f64::consts::TAU * j as f64 / l as f64).cos();
                let p = t5_cubic(k, t, c);
                push(&mut out, root_piece("iv", format!("j'={j}"), p, 1, mode)?);
            }
        }
        Instance::SquidLike { k } => {
            super::check_squid(*k)?;
            let k = *k;
            push(&mut out, value_piece("i", "-(k-2)/(k-1)", -weight(k), k * (k - 2)));
            let p = int_poly(&t6_cubic(k))?;
            push(&mut out, root_piece("ii", "cubic".into(), p, k - 1, mode)?);
            let p = int_poly(&t6_quartic(k))?;
            push(&mut out, root_piece("iii", "quartic".into(), p, 1, mode)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t1_single_triple_quadratic() {
        // codegree eigenvalue 2 of a single triple: x² - x - 3 after halving
        let roots = t1_quadratic(3, 1, 2.0).real_roots().unwrap();
        let s = 13f64.sqrt();
        assert!((roots[0] - (1.0 + s) / 2.0).abs() < 1e-14);
        assert!((roots[1] - (1.0 - s) / 2.0).abs() < 1e-14);
    }

    #[test]
    fn t4_is_t3_at_one_center() {
        for l in 1..=8 {
            for k in 2..=9 {
                let big = t3_cubic(l, 1, k - 1);
                let small = t4_cubic(l, k);
                let k1 = k as i64 - 1;
                assert_eq!(big, small.map(|c| c * k1), "l={l} k={k}");
                assert_eq!(t3_pair(1, k - 1), t4_pair(k));
            }
        }
    }

    #[test]
    fn t6_quartic_at_two() {
        assert_eq!(t6_quartic(2), [1, 0, -4, 0, 2]);
    }
}
