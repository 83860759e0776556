use std::fmt;

use nalgebra::{Complex, DMatrix};
use serde::{Deserialize, Serialize};

use super::small::{eigenvalues_real_block, IMAG_TOL};
use crate::error::{Error, Result};

/// Real polynomial, coefficients in descending degree order. The leading
/// coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        let first = coeffs.iter().position(|&c| c != 0.0).ok_or(Error::ZeroPolynomial)?;
        Ok(Self {
            coeffs: coeffs[first..].to_vec(),
        })
    }

    pub fn from_integers(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| c as f64).collect())
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
    }

    fn derivative_at(&self, x: f64) -> f64 {
        let d = self.degree();
        self.coeffs[..d]
            .iter()
            .enumerate()
            .fold(0.0, |acc, (i, &c)| acc * x + c * (d - i) as f64)
    }

    pub fn coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// All roots with multiplicity from the eigenvalues of the companion
    /// matrix. Trailing zero coefficients give exact zero roots.
    pub fn complex_roots(&self) -> Vec<Complex<f64>> {
        let (reduced, zeros) = self.split_zero_roots();
        let mut roots = vec![Complex::new(0.0, 0.0); zeros];
        roots.extend(reduced.companion_eigenvalues());
        roots
    }

    /// All real roots with multiplicity, sorted descending, from the
    /// eigenvalues of the companion matrix.
    ///
    /// A root whose imaginary part exceeds [`IMAG_TOL`] is an error unless its
    /// real part is itself a root to working accuracy, which is how a
    /// multiple real root shows up after rounding.
    pub fn real_roots(&self) -> Result<Vec<f64>> {
        let (reduced, zeros) = self.split_zero_roots();
        let mut roots = vec![0.0; zeros];
        let lead = reduced.coeffs[0];
        let scale = 1.0 + reduced.coeff_norm() / lead.abs();
        for z in reduced.companion_eigenvalues() {
            if z.im.abs() > IMAG_TOL {
                let near_root = (reduced.eval(z.re) / lead).abs() <= 1e-9 * scale;
                if !near_root {
                    return Err(Error::NonRealRoot { re: z.re, im: z.im });
                }
            }
            roots.push(reduced.polish(z.re));
        }
        roots.sort_by(|a, b| b.total_cmp(a));
        Ok(roots)
    }

    fn split_zero_roots(&self) -> (Polynomial, usize) {
        let mut coeffs = self.coeffs.clone();
        let mut zeros = 0;
        while coeffs.len() > 1 && *coeffs.last().expect("nonempty") == 0.0 {
            coeffs.pop();
            zeros += 1;
        }
        (Polynomial { coeffs }, zeros)
    }

    fn companion_eigenvalues(&self) -> Vec<Complex<f64>> {
        let d = self.degree();
        if d == 0 {
            return Vec::new();
        }
        let lead = self.coeffs[0];
        let companion = DMatrix::from_fn(d, d, |i, j| {
            if i == 0 {
                -self.coeffs[j + 1] / lead
            } else if i == j + 1 {
                1.0
            } else {
                0.0
            }
        });
        eigenvalues_real_block(&companion)
    }

    /// A few Newton steps, kept only while they reduce the residual.
    fn polish(&self, mut x: f64) -> f64 {
        let mut best = self.eval(x).abs();
        for _ in 0..4 {
            let d = self.derivative_at(x);
            if d == 0.0 || best == 0.0 {
                break;
            }
            let next = x - self.eval(x) / d;
            let r = self.eval(next).abs();
            if r < best {
                x = next;
                best = r;
            } else {
                break;
            }
        }
        x
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let p = d - i;
            let sign = if c < 0.0 { "-" } else { "+" };
            if first {
                if c < 0.0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (p, a == 1.0) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}x")?,
                (_, true) => write!(f, "x^{p}")?,
                (_, false) => write!(f, "{a}x^{p}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_residuals(p: &Polynomial, roots: &[f64]) {
        for &r in roots {
            assert!(p.eval(r).abs() <= 1e-6 * (1.0 + p.coeff_norm()), "root {r} of {p}");
        }
    }

    #[test]
    fn simple_quadratics() {
        let p = Polynomial::new(vec![1.0, 0.0, -1.0]).unwrap();
        let r = p.real_roots().unwrap();
        assert!((r[0] - 1.0).abs() < 1e-14 && (r[1] + 1.0).abs() < 1e-14);
        // x² − x − 3, the subdivided single triple
        let p = Polynomial::new(vec![1.0, -1.0, -3.0]).unwrap();
        let r = p.real_roots().unwrap();
        let s = 13f64.sqrt();
        assert!((r[0] - (1.0 + s) / 2.0).abs() < 1e-14);
        assert!((r[1] - (1.0 - s) / 2.0).abs() < 1e-14);
        check_residuals(&p, &r);
    }

    #[test]
    fn multiplicity_handling() {
        let p = Polynomial::new(vec![1.0, 0.0, 0.0, 0.0]).unwrap();
        assert_eq!(p.real_roots().unwrap(), vec![0.0; 3]);
        // (x − 1)²(x + 2)
        let p = Polynomial::new(vec![1.0, 0.0, -3.0, 2.0]).unwrap();
        let r = p.real_roots().unwrap();
        assert_eq!(r.len(), 3);
        assert!((r[0] - 1.0).abs() < 1e-7 && (r[1] - 1.0).abs() < 1e-7);
        assert!((r[2] + 2.0).abs() < 1e-12);
        check_residuals(&p, &r);
    }

    #[test]
    fn non_real_roots_are_rejected() {
        let p = Polynomial::new(vec![1.0, 0.0, 1.0]).unwrap();
        assert!(matches!(p.real_roots(), Err(Error::NonRealRoot { .. })));
        let z = p.complex_roots();
        assert_eq!(z.len(), 2);
        assert!(z.iter().all(|z| z.re.abs() < 1e-14 && (z.im.abs() - 1.0).abs() < 1e-14));
    }

    #[test]
    fn leading_zeros_are_stripped() {
        let p = Polynomial::new(vec![0.0, 0.0, 2.0, -4.0]).unwrap();
        assert_eq!(p.degree(), 1);
        assert_eq!(p.real_roots().unwrap(), vec![2.0]);
        assert_eq!(Polynomial::new(vec![0.0]), Err(Error::ZeroPolynomial));
        assert_eq!(p.to_string(), "2x - 4");
    }
}
