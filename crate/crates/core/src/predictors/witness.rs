//! Explicit eigenvectors of the subdivided adjacency matrix, built in the
//! generators' vertex layouts with new vertices appended in edge order.

use nalgebra::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::SymMatrix;
use crate::spectra::{small, symmetric_eigen};

use super::structural::{
    cycle_space_block, hyperflower_quotient, petal_difference_block, petal_overlapped_quotient, power_block,
    regular_block, root_of_unity, rotation_block, squid_difference_block, squid_like_quotient,
};
use super::{coincidence_tol, require_regular_uniform, weight, Instance};

/// Bound on `‖Ax - λx‖_∞ / ‖x‖_∞` for every witness.
pub const WITNESS_TOL: f64 = 1e-8;

/// A set of vectors claimed to be eigenvectors for one eigenvalue.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LocalEigenvectorFamily {
    pub name: String,
    pub clause: String,
    pub eigenvalue: f64,
    pub vectors: Vec<Vec<f64>>,
}

impl LocalEigenvectorFamily {
    fn new(name: impl Into<String>, clause: &str, eigenvalue: f64, vectors: Vec<Vec<f64>>) -> Self {
        Self {
            name: name.into(),
            clause: clause.to_string(),
            eigenvalue,
            vectors,
        }
    }

    pub fn multiplicity(&self) -> usize {
        self.vectors.len()
    }

    /// Largest relative residual over the family; 0 for an empty family.
    pub fn max_residual(&self, a: &SymMatrix) -> f64 {
        self.vectors
            .iter()
            .map(|x| {
                let ax = a.mul_vec(x);
                let r = ax
                    .iter()
                    .zip(x)
                    .map(|(p, q)| (p - self.eigenvalue * q).abs())
                    .fold(0.0, f64::max);
                r / x.iter().map(|v| v.abs()).fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    }
}

fn real_eigenpairs(rows: &[Vec<f64>]) -> Result<Vec<(f64, Vec<f64>)>> {
    let m = small::real_block(rows);
    let values = small::real_spectrum(&small::eigenvalues_real_block(&m))?;
    Ok(values
        .into_iter()
        .map(|v| (v, small::null_vector_real(&m, v).iter().copied().collect()))
        .collect())
}

/// `x[i] = 1, x[j] = -1` for each `j` in `rest`.
fn differences(order: usize, first: usize, rest: impl Iterator<Item = usize>) -> Vec<Vec<f64>> {
    rest.map(|j| {
        let mut x = vec![0.0; order];
        x[first] = 1.0;
        x[j] = -1.0;
        x
    })
    .collect()
}

fn quotient_lifts(name: &str, clause: &str, rows: &[Vec<f64>], cell_of: &[usize]) -> Result<Vec<LocalEigenvectorFamily>> {
    Ok(real_eigenpairs(rows)?
        .into_iter()
        .map(|(lambda, g)| {
            let x = cell_of.iter().map(|&c| g[c]).collect();
            LocalEigenvectorFamily::new(name, clause, lambda, vec![x])
        })
        .collect())
}

/// Null space of `BᵀB` for an incidence matrix `B`, as edge vectors.
fn edge_kernel(b: &crate::matrix::Matrix) -> Vec<Vec<f64>> {
    let (n, m) = (b.rows(), b.cols());
    let btb = SymMatrix::from_fn(m, |e, f| (0..n).map(|v| b.get(v, e) * b.get(v, f)).sum());
    let eig = symmetric_eigen(&btb, true);
    eig.values
        .iter()
        .zip(eig.vectors)
        .filter(|(v, _)| v.abs() <= 1e-9 * (1.0 + n as f64))
        .map(|(_, x)| x)
        .collect()
}

/// `Bᵀx`.
fn edge_sums(b: &crate::matrix::Matrix, x: &[f64]) -> Vec<f64> {
    (0..b.cols())
        .map(|e| (0..b.rows()).map(|v| b.get(v, e) * x[v]).sum())
        .collect()
}

/// Every eigenvector family for the instance, in the vertex order of
/// `subdivide(instance.hypergraph())`.
pub fn witness_families(instance: &Instance) -> Result<Vec<LocalEigenvectorFamily>> {
    let mut out = Vec::new();
    match instance {
        Instance::Regular { hypergraph: h, .. } => {
            let (k, r) = require_regular_uniform(h)?;
            let (n, m) = (h.n(), h.m());
            let order = n + m;
            let b = h.incidence_matrix();
            let eig = symmetric_eigen(&h.codegree_matrix(), true);
            for (lambda, x) in eig.values.iter().zip(&eig.vectors) {
                let y = edge_sums(&b, x);
                if (lambda + r as f64).abs() <= coincidence_tol(r as f64) {
                    let mut f = x.clone();
                    f.resize(order, 0.0);
                    out.push(LocalEigenvectorFamily::new("incidence-kernel lift", "ii", -weight(k) * r as f64, vec![f]));
                    continue;
                }
                for (mu, c) in real_eigenpairs(&regular_block(k, r, *lambda))? {
                    let f = x.iter().map(|v| c[0] * v).chain(y.iter().map(|v| c[1] * v)).collect();
                    out.push(LocalEigenvectorFamily::new("block lift", "ii", mu, vec![f]));
                }
            }
            let kernel: Vec<Vec<f64>> = edge_kernel(&b)
                .into_iter()
                .map(|z| std::iter::repeat_n(0.0, n).chain(z).collect())
                .collect();
            if !kernel.is_empty() {
                out.push(LocalEigenvectorFamily::new("edge kernel", "i", 0.0, kernel));
            }
        }
        Instance::GraphPower { base, k, .. } => {
            if !base.is_graph() {
                return Err(Error::NotAGraph);
            }
            let r = base.regularity().ok_or(Error::NotRegular)?;
            let (k, n, m) = (*k, base.n(), base.m());
            if k < 3 {
                return Err(Error::KTooSmall(k));
            }
            let pad = |layer: usize, e: usize| n + layer * m + e;
            let new = |e: usize| n + m * (k - 2) + e;
            let order = n + m * (k - 1);
            let mut diffs = Vec::new();
            for e in 0..m {
                diffs.extend(differences(order, pad(0, e), (1..k - 2).map(|layer| pad(layer, e))));
            }
            out.push(LocalEigenvectorFamily::new("padding differences", "i", -weight(k), diffs));
            let b = base.incidence_matrix();
            let eig = symmetric_eigen(&base.adjacency_matrix()?, true);
            let lift = |c: &[f64], x: &[f64], y: &[f64]| {
                let mut f = vec![0.0; order];
                for v in 0..n {
                    f[v] = c[0] * x[v];
                }
                for e in 0..m {
                    for layer in 0..k - 2 {
                        f[pad(layer, e)] = c[1] * y[e];
                    }
                    f[new(e)] = c[2] * y[e];
                }
                f
            };
            for (lambda, x) in eig.values.iter().zip(&eig.vectors) {
                let y = edge_sums(&b, x);
                if (lambda + r as f64).abs() <= coincidence_tol(r as f64) {
                    let f = lift(&[1.0, 0.0, 0.0], x, &y);
                    out.push(LocalEigenvectorFamily::new("bipartite lift", "iii", -weight(k) * r as f64, vec![f]));
                    continue;
                }
                for (mu, c) in real_eigenpairs(&power_block(k, r, *lambda))? {
                    out.push(LocalEigenvectorFamily::new("block lift", "iii", mu, vec![lift(&c, x, &y)]));
                }
            }
            let kernel = edge_kernel(&b);
            let zero = vec![0.0; n];
            for (mu, c) in real_eigenpairs(&cycle_space_block(k))? {
                let vectors: Vec<Vec<f64>> = kernel.iter().map(|z| lift(&[0.0, c[0], c[1]], &zero, z)).collect();
                if !vectors.is_empty() {
                    out.push(LocalEigenvectorFamily::new("cycle-space lift", "ii", mu, vectors));
                }
            }
        }
        Instance::Hyperflower { l, s, t } => {
            super::check_flower(*l, *s, *t)?;
            flower_families(&mut out, *l, *s, *t, ["i", "ii", "iii", "iv"])?;
        }
        Instance::Hyperstar { l, k } => {
            super::check_star(*l, *k)?;
            flower_families(&mut out, *l, 1, k - 1, ["i", "-", "ii", "iii"])?;
        }
        Instance::PetalOverlapped { l, s, t } => {
            super::check_petal(*l, *s, *t)?;
            let (l, s, t) = (*l, *s, *t);
            let k = s + t + 2;
            let order = s + 2 * l + l * t;
            let v = |j: usize| s + j % l;
            let u = |j: usize, i: usize| s + l + j * t + i;
            let p = |j: usize| s + l + l * t + j;
            let a = weight(k);
            let mut twins = Vec::new();
            for j in 0..l {
                twins.extend(differences(order, u(j, 0), (1..t).map(|i| u(j, i))));
            }
            out.push(LocalEigenvectorFamily::new("twin differences", "i", -a, twins));
            let centers = differences(order, 0, 1..s);
            out.push(LocalEigenvectorFamily::new("center differences", "ii", -(l as f64) * a, centers));
            let mut cell_of = vec![0; order];
            for j in 0..l {
                cell_of[v(j)] = 1;
                cell_of[p(j)] = 3;
                for i in 0..t {
                    cell_of[u(j, i)] = 2;
                }
            }
            out.extend(quotient_lifts("quotient lift", "iii", &petal_overlapped_quotient(l, s, t), &cell_of)?);
            for jp in 1..l {
                let alpha = root_of_unity(jp, l);
                let block = rotation_block(k, t, alpha);
                let values = small::real_spectrum(&small::eigenvalues_complex_block(&block))?;
                for lambda in values {
                    let c = small::null_vector_complex(&block, lambda);
                    let mut z = vec![Complex::new(0.0, 0.0); order];
                    for j in 0..l {
                        let phase = alpha.powu(j as u32);
                        z[v(j)] = c[0] * phase;
                        for i in 0..t {
                            z[u(j, i)] = c[1] * phase;
                        }
                        z[p(j)] = c[2] * phase;
                    }
                    let scale = z.iter().map(|w| w.norm()).fold(0.0, f64::max);
                    let vectors = [z.iter().map(|w| w.re).collect::<Vec<_>>(), z.iter().map(|w| w.im).collect()]
                        .into_iter()
                        .filter(|x| x.iter().map(|w| w.abs()).fold(0.0, f64::max) > 1e-6 * scale)
                        .collect();
                    out.push(LocalEigenvectorFamily::new(format!("rotation j'={jp}"), "iv", lambda, vectors));
                }
            }
        }
        Instance::SquidLike { k } => {
            super::check_squid(*k)?;
            let k = *k;
            let order = k * k + k + 1;
            let u = |j: usize, i: usize| k + j * (k - 1) + i;
            let p = k * k;
            let q = |j: usize| k * k + 1 + j;
            let mut twins = Vec::new();
            for j in 0..k {
                twins.extend(differences(order, u(j, 0), (1..k - 1).map(|i| u(j, i))));
            }
            out.push(LocalEigenvectorFamily::new("twin differences", "i", -weight(k), twins));
            for (lambda, c) in real_eigenpairs(&squid_difference_block(k))? {
                let vectors = (1..k)
                    .map(|j| {
                        let mut x = vec![0.0; order];
                        x[0] = c[0];
                        x[j] = -c[0];
                        for i in 0..k - 1 {
                            x[u(0, i)] = c[1];
                            x[u(j, i)] = -c[1];
                        }
                        x[q(0)] = c[2];
                        x[q(j)] = -c[2];
                        x
                    })
                    .collect();
                out.push(LocalEigenvectorFamily::new("petal differences", "ii", lambda, vectors));
            }
            let mut cell_of = vec![0; order];
            for j in 0..k {
                for i in 0..k - 1 {
                    cell_of[u(j, i)] = 1;
                }
                cell_of[q(j)] = 3;
            }
            cell_of[p] = 2;
            out.extend(quotient_lifts("quotient lift", "iii", &squid_like_quotient(k), &cell_of)?);
        }
    }
    out.retain(|f| !f.vectors.is_empty());
    Ok(out)
}

fn flower_families(out: &mut Vec<LocalEigenvectorFamily>, l: usize, s: usize, t: usize, clauses: [&str; 4]) -> Result<()> {
    let k = s + t;
    let order = s + l * t + l;
    let u = |j: usize, i: usize| s + j * t + i;
    let p = |j: usize| s + l * t + j;
    let a = weight(k);
    let mut twins = Vec::new();
    for j in 0..l {
        twins.extend(differences(order, u(j, 0), (1..t).map(|i| u(j, i))));
    }
    out.push(LocalEigenvectorFamily::new("twin differences", clauses[0], -a, twins));
    let centers = differences(order, 0, 1..s);
    out.push(LocalEigenvectorFamily::new("center differences", clauses[1], -(l as f64) * a, centers));
    for (lambda, c) in real_eigenpairs(&petal_difference_block(t, k))? {
        let vectors = (1..l)
            .map(|j| {
                let mut x = vec![0.0; order];
                for i in 0..t {
                    x[u(0, i)] = c[0];
                    x[u(j, i)] = -c[0];
                }
                x[p(0)] = c[1];
                x[p(j)] = -c[1];
                x
            })
            .collect();
        out.push(LocalEigenvectorFamily::new("petal differences", clauses[2], lambda, vectors));
    }
    let mut cell_of = vec![0; order];
    for j in 0..l {
        for i in 0..t {
            cell_of[u(j, i)] = 1;
        }
        cell_of[p(j)] = 2;
    }
    out.extend(quotient_lifts("quotient lift", clauses[3], &hyperflower_quotient(l, s, t), &cell_of)?);
    Ok(())
}

/// Adjacency matrix of the subdivided instance.
pub(crate) fn subdivided_adjacency(instance: &Instance) -> Result<SymMatrix> {
    crate::subdivision::subdivide(&instance.hypergraph()?).hypergraph.adjacency_matrix()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(instance: Instance, expected_vectors: usize) {
        let a = subdivided_adjacency(&instance).unwrap();
        let fams = witness_families(&instance).unwrap();
        let total: usize = fams.iter().map(|f| f.multiplicity()).sum();
        assert_eq!(total, expected_vectors, "{instance:?}");
        for f in &fams {
            assert!(f.max_residual(&a) <= WITNESS_TOL, "{} at {instance:?}: {}", f.name, f.max_residual(&a));
        }
    }

    #[test]
    fn flower_witnesses_span_everything() {
        check(Instance::Hyperflower { l: 4, s: 2, t: 3 }, 18);
        check(Instance::Hyperstar { l: 3, k: 4 }, 13);
    }

    #[test]
    fn petal_witnesses() {
        // twins 4, centers 1, quotient 4, rotations 3 per j' with re/im parts
        let fams = witness_families(&Instance::PetalOverlapped { l: 4, s: 2, t: 2 }).unwrap();
        let a = subdivided_adjacency(&Instance::PetalOverlapped { l: 4, s: 2, t: 2 }).unwrap();
        assert!(fams.iter().all(|f| f.max_residual(&a) <= WITNESS_TOL));
        assert!(fams.iter().any(|f| f.name.starts_with("rotation")));
    }

    #[test]
    fn squid_witnesses() {
        check(Instance::SquidLike { k: 3 }, 13);
        check(Instance::SquidLike { k: 2 }, 7);
    }

    #[test]
    fn regular_and_power_witnesses() {
        let fano = crate::families::fano_plane();
        check(Instance::Regular { name: "fano".into(), hypergraph: fano }, 14);
        let c4 = crate::families::cycle_graph(4).unwrap();
        check(Instance::GraphPower { name: "c4".into(), base: c4, k: 4 }, 4 + 4 * 3);
    }
}
