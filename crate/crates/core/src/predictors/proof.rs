//! The equitable partition of `S(H)` behind each quotient piece, with the
//! quotient matrix it should produce.

use crate::error::Result;
use crate::partitions::Partition;

use super::structural::{hyperflower_quotient, petal_overlapped_quotient, squid_like_quotient};
use super::{require_regular_uniform, weight, Instance};

#[derive(Clone, Debug, PartialEq)]
pub struct ProofPartition {
    pub partition: Partition,
    /// Expected quotient, rows and columns in cell order.
    pub quotient: Vec<Vec<f64>>,
}

fn from_cell_map(cell_of: &[usize], cells: usize) -> Result<Partition> {
    let mut out = vec![Vec::new(); cells];
    for (v, &c) in cell_of.iter().enumerate() {
        out[c].push(v);
    }
    Partition::new(out, cell_of.len())
}

/// Cell of each vertex of `S(H)` in the generator layout.
fn cell_map(instance: &Instance) -> Result<(Vec<usize>, Vec<Vec<f64>>)> {
    let order = instance.subdivision_order()?;
    Ok(match instance {
        Instance::Regular { hypergraph, .. } => {
            let (k, r) = require_regular_uniform(hypergraph)?;
            let n = hypergraph.n();
            let cells = (0..order).map(|v| usize::from(v >= n)).collect();
            let (kf, rf) = (k as f64, r as f64);
            (cells, vec![vec![rf * weight(k) * (kf - 1.0), rf], vec![kf, 0.0]])
        }
        Instance::GraphPower { base, k, .. } => {
            let (n, m, k) = (base.n(), base.m(), *k);
            let r = base.regularity().unwrap_or(0) as f64;
            let a = weight(k);
            let kf = k as f64;
            let cells = (0..order)
                .map(|v| match v {
                    v if v < n => 0,
                    v if v < n + m * (k - 2) => 1,
                    _ => 2,
                })
                .collect();
            let rows = vec![
                vec![r * a, r * (kf - 2.0) * a, r],
                vec![2.0 * a, (kf - 3.0) * a, 1.0],
                vec![2.0, kf - 2.0, 0.0],
            ];
            (cells, rows)
        }
        Instance::Hyperflower { l, s, t } => flower(*l, *s, *t, order),
        Instance::Hyperstar { l, k } => flower(*l, 1, k - 1, order),
        Instance::PetalOverlapped { l, s, t } => {
            let (l, s, t) = (*l, *s, *t);
            let cells = (0..order)
                .map(|v| match v {
                    v if v < s => 0,
                    v if v < s + l => 1,
                    v if v < s + l + l * t => 2,
                    _ => 3,
                })
                .collect();
            (cells, petal_overlapped_quotient(l, s, t))
        }
        Instance::SquidLike { k } => {
            let k = *k;
            let cells = (0..order)
                .map(|v| match v {
                    v if v < k => 0,
                    v if v < k * k => 1,
                    v if v == k * k => 2,
                    _ => 3,
                })
                .collect();
            (cells, squid_like_quotient(k))
        }
    })
}

fn flower(l: usize, s: usize, t: usize, order: usize) -> (Vec<usize>, Vec<Vec<f64>>) {
    let cells = (0..order)
        .map(|v| match v {
            v if v < s => 0,
            v if v < s + l * t => 1,
            _ => 2,
        })
        .collect();
    (cells, hyperflower_quotient(l, s, t))
}

/// The partition used for the quotient piece of `instance`.
pub fn proof_partition(instance: &Instance) -> Result<ProofPartition> {
    let (cells, quotient) = cell_map(instance)?;
    Ok(ProofPartition {
        partition: from_cell_map(&cells, quotient.len())?,
        quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::check_equitable;
    use crate::predictors::witness::subdivided_adjacency;
    use crate::predictors::{full_grid, Theorem};

    #[test]
    fn every_grid_partition_matches_its_quotient() {
        for inst in full_grid() {
            let p = proof_partition(&inst).unwrap();
            let a = subdivided_adjacency(&inst).unwrap();
            let q = check_equitable(&a, &p.partition, 1e-10).unwrap_or_else(|e| panic!("{} {}: {e}", inst.theorem(), inst.params()));
            for (i, row) in p.quotient.iter().enumerate() {
                for (j, &x) in row.iter().enumerate() {
                    assert!((q.get(i, j) - x).abs() < 1e-12, "{:?} {} ({i},{j})", inst.theorem(), inst.params());
                }
            }
        }
        assert_eq!(Theorem::ALL.len(), 6);
    }
}
