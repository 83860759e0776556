//! Eigenvalues and null vectors of small non-symmetric blocks (quotient
//! matrices, reduced eigenvector systems, companion matrices).

use nalgebra::{Complex, DMatrix, DVector};

use crate::error::{Error, Result};

/// Imaginary parts up to this size are treated as rounding noise.
pub const IMAG_TOL: f64 = 1e-7;

pub fn real_block(rows: &[Vec<f64>]) -> DMatrix<f64> {
    let n = rows.len();
    DMatrix::from_fn(n, n, |i, j| rows[i][j])
}

pub fn eigenvalues_real_block(m: &DMatrix<f64>) -> Vec<Complex<f64>> {
    m.complex_eigenvalues().iter().copied().collect()
}

pub fn eigenvalues_complex_block(m: &DMatrix<Complex<f64>>) -> Vec<Complex<f64>> {
    let (_, t) = nalgebra::Schur::new(m.clone()).unpack();
    t.diagonal().iter().copied().collect()
}

/// Real parts of eigenvalues that are real up to [`IMAG_TOL`], sorted
/// descending.
pub fn real_spectrum(values: &[Complex<f64>]) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(values.len());
    for z in values {
        if z.im.abs() > IMAG_TOL {
            return Err(Error::NonRealRoot { re: z.re, im: z.im });
        }
        out.push(z.re);
    }
    out.sort_by(|a, b| b.total_cmp(a));
    Ok(out)
}

/// Right singular vector for the smallest singular value of `m - λI`.
pub fn null_vector_real(m: &DMatrix<f64>, lambda: f64) -> DVector<f64> {
    let n = m.nrows();
    let shifted = m - DMatrix::identity(n, n) * lambda;
    let svd = shifted.svd(false, true);
    let vt = svd.v_t.expect("requested v_t");
    let idx = argmin(svd.singular_values.as_slice());
    vt.row(idx).transpose()
}

pub fn null_vector_complex(m: &DMatrix<Complex<f64>>, lambda: f64) -> DVector<Complex<f64>> {
    let n = m.nrows();
    let shifted = m - DMatrix::identity(n, n) * Complex::new(lambda, 0.0);
    let svd = shifted.svd(false, true);
    let vt = svd.v_t.expect("requested v_t");
    let idx = argmin(svd.singular_values.as_slice());
    vt.row(idx).adjoint()
}

fn argmin(v: &[f64]) -> usize {
    v.iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .unwrap_or(0)
}
