//! Equitable partitions: verification, quotient matrices, refinement, and the
//! check that a quotient's spectrum sits inside the full spectrum.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::SymMatrix;
use crate::spectra::{self, small};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    cells: Vec<Vec<usize>>,
}

impl Partition {
    /// Cells must be nonempty, disjoint and cover `0..n`.
    pub fn new(cells: Vec<Vec<usize>>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        for (c, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::InvalidPartition(format!("cell {c} is empty")));
            }
            for &v in cell {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} in two cells")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
        }
        Ok(Self { cells })
    }

    pub fn single_cell(n: usize) -> Self {
        Self {
            cells: vec![(0..n).collect()],
        }
    }

    pub fn discrete(n: usize) -> Self {
        Self {
            cells: (0..n).map(|v| vec![v]).collect(),
        }
    }

    /// Parses `0,1,2;3;4-6` (cells separated by `;`, ranges inclusive).
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut cells = Vec::new();
        for raw in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let mut cell = Vec::new();
            for item in raw.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let num = |s: &str| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::InvalidPartition(format!("bad vertex {s:?}")))
                };
                match item.split_once('-') {
                    Some((a, b)) => cell.extend(num(a)?..=num(b)?),
                    None => cell.push(num(item)?),
                }
            }
            cells.push(cell);
        }
        Self::new(cells, n)
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn order(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    fn cell_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.order()];
        for (c, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                idx[v] = c;
            }
        }
        idx
    }
}

/// Quotient matrix `b_pq` of an equitable partition.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuotientMatrix {
    order: usize,
    entries: Vec<f64>,
    partition: Option<Partition>,
}

impl QuotientMatrix {
    /// A bare square matrix with no source partition, e.g. for testing the
    /// containment check against a matrix that is not a quotient.
    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let order = rows.len();
        Self {
            order,
            entries: rows.iter().flatten().copied().collect(),
            partition: None,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, p: usize, q: usize) -> f64 {
        self.entries[p * self.order + q]
    }

    pub fn partition(&self) -> Option<&Partition> {
        self.partition.as_ref()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.order.max(1)).map(<[f64]>::to_vec).collect()
    }

    /// Copy with one entry shifted by `delta`; the result is no longer tied to
    /// a partition.
    pub fn perturbed(&self, p: usize, q: usize, delta: f64) -> Self {
        let mut out = self.clone();
        out.entries[p * self.order + q] += delta;
        out.partition = None;
        out
    }

    /// Eigenvalues, sorted descending. A quotient of a symmetric matrix is
    /// similar to the symmetric matrix `sqrt(b_pq b_qp)`, which is solved
    /// with the symmetric solver; bare matrices go through a general solver.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        match &self.partition {
            Some(p) => {
                let sizes: Vec<f64> = p.cells().iter().map(|c| c.len() as f64).collect();
                let sym = SymMatrix::from_fn(self.order, |i, j| {
                    self.get(i, j) * (sizes[i] / sizes[j]).sqrt()
                });
                Ok(spectra::eigenvalues(&sym).values().to_vec())
            }
            None => {
                let m = DMatrix::from_row_slice(self.order, self.order, &self.entries);
                small::real_spectrum(&small::eigenvalues_real_block(&m))
            }
        }
    }
}

/// Verifies that `partition` is equitable for `a` and returns its quotient.
pub fn check_equitable(a: &SymMatrix, partition: &Partition, tol: f64) -> Result<QuotientMatrix> {
    if partition.order() != a.order() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, matrix has order {}",
            partition.order(),
            a.order()
        )));
    }
    let k = partition.len();
    let mut entries = vec![0.0; k * k];
    for (p, cp) in partition.cells().iter().enumerate() {
        for (q, cq) in partition.cells().iter().enumerate() {
            let sums: Vec<f64> = cp
                .iter()
                .map(|&i| cq.iter().map(|&j| a.get(i, j)).sum())
                .collect();
            let mean = sums.iter().sum::<f64>() / sums.len() as f64;
            for (&i, &s) in cp.iter().zip(&sums) {
                let deviation = (s - mean).abs();
                if deviation > tol {
                    return Err(Error::NotEquitable {
                        p,
                        q,
                        vertex: i,
                        deviation,
                    });
                }
            }
            entries[p * k + q] = mean;
        }
    }
    Ok(QuotientMatrix {
        order: k,
        entries,
        partition: Some(partition.clone()),
    })
}

/// Coarsest equitable refinement of `seed`: cells are split by their row
/// sums into the current cells, rounded to multiples of `quantum`, until
/// stable. Cells that do not split keep their position and vertex order.
pub fn refine_to_equitable(a: &SymMatrix, seed: &Partition, quantum: f64) -> Partition {
    let mut cells = seed.cells().to_vec();
    loop {
        let index = Partition { cells: cells.clone() }.cell_index();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            let mut groups: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let mut sig = vec![0.0; cells.len()];
                for (u, &w) in a.row(v).iter().enumerate() {
                    sig[index[u]] += w;
                }
                let key = sig.iter().map(|s| (s / quantum).round() as i64).collect();
                groups.entry(key).or_default().push(v);
            }
            if groups.len() == 1 {
                next.push(cell.clone());
            } else {
                next.extend(groups.into_values());
            }
        }
        if next.len() == cells.len() {
            return Partition { cells: next };
        }
        cells = next;
    }
}

/// Result of matching a quotient spectrum into a full spectrum.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Containment {
    pub holds: bool,
    /// Largest distance between a quotient eigenvalue and its match.
    pub max_deviation: f64,
    /// `tol - max_deviation`; negative when containment fails.
    pub margin: f64,
}

/// Every quotient eigenvalue must claim a distinct eigenvalue of `a` within
/// `tol`. Matching is greedy over both lists sorted descending, each quotient
/// value taking the nearest unclaimed eigenvalue.
pub fn containment_check(q: &QuotientMatrix, a: &SymMatrix, tol: f64) -> Containment {
    let Ok(sub) = q.eigenvalues() else {
        return Containment {
            holds: false,
            max_deviation: f64::INFINITY,
            margin: f64::NEG_INFINITY,
        };
    };
    let full = spectra::eigenvalues(a);
    spectrum_contains(&sub, full.values(), tol)
}

pub fn spectrum_contains(sub: &[f64], full: &[f64], tol: f64) -> Containment {
    let mut claimed = vec![false; full.len()];
    let mut max_deviation: f64 = 0.0;
    let mut holds = sub.len() <= full.len();
    let mut sorted = sub.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    for x in sorted {
        let best = full
            .iter()
            .enumerate()
            .filter(|(i, _)| !claimed[*i])
            .min_by(|a, b| (a.1 - x).abs().total_cmp(&(b.1 - x).abs()));
        match best {
            Some((i, y)) => {
                claimed[i] = true;
                let d = (y - x).abs();
                max_deviation = max_deviation.max(d);
                holds &= d <= tol;
            }
            None => {
                holds = false;
                max_deviation = f64::INFINITY;
            }
        }
    }
    Containment {
        holds,
        max_deviation,
        margin: tol - max_deviation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::subdivision::subdivide;

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![vec![0, 1], vec![2]], 3).is_ok());
        assert!(Partition::new(vec![vec![0, 1], vec![1, 2]], 3).is_err());
        assert!(Partition::new(vec![vec![0, 1]], 3).is_err());
        assert!(Partition::new(vec![vec![0, 1, 2], vec![]], 3).is_err());
        let p = Partition::parse("0-2; 3 ;4,5", 6).unwrap();
        assert_eq!(p.cells(), &[vec![0, 1, 2], vec![3], vec![4, 5]]);
        assert!(Partition::parse("0-2;x", 3).is_err());
    }

    #[test]
    fn discrete_partition_gives_matrix_back() {
        let a = families::petersen().adjacency_matrix().unwrap();
        let q = check_equitable(&a, &Partition::discrete(10), 1e-10).unwrap();
        assert_eq!(q.to_rows(), a.to_rows());
        assert!(containment_check(&q, &a, 1e-8).holds);
    }

    #[test]
    fn non_equitable_reports_witness() {
        let h = families::complete_uniform(3, 3).unwrap();
        let a = subdivide(&h).hypergraph.adjacency_matrix().unwrap();
        let err = check_equitable(&a, &Partition::single_cell(4), 1e-10).unwrap_err();
        assert!(matches!(err, Error::NotEquitable { p: 0, q: 0, .. }));
    }

    #[test]
    fn refinement_of_subdivided_triple() {
        let h = families::complete_uniform(3, 3).unwrap();
        let a = subdivide(&h).hypergraph.adjacency_matrix().unwrap();
        let p = refine_to_equitable(&a, &Partition::single_cell(4), 1e-9);
        let mut cells = p.cells().to_vec();
        cells.sort();
        assert_eq!(cells, vec![vec![0, 1, 2], vec![3]]);
        assert!(check_equitable(&a, &p, 1e-10).is_ok());
    }

    #[test]
    fn complete_graph_is_already_equitable() {
        let a = families::complete_graph(5).unwrap().adjacency_matrix().unwrap();
        let seed = Partition::single_cell(5);
        assert_eq!(refine_to_equitable(&a, &seed, 1e-9), seed);
    }

    #[test]
    fn perturbed_quotient_is_not_contained() {
        let a = families::petersen().adjacency_matrix().unwrap();
        let q = check_equitable(&a, &Partition::single_cell(10), 1e-10).unwrap();
        assert!((q.get(0, 0) - 3.0).abs() < 1e-15);
        assert!(containment_check(&q, &a, 1e-8).holds);
        let bad = q.perturbed(0, 0, 0.1);
        let c = containment_check(&bad, &a, 1e-8);
        assert!(!c.holds && c.margin < 0.0);
    }
}
