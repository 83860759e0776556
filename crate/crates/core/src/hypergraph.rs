//! Hypergraph data model and its adjacency, codegree and incidence matrices.
//!
//! Vertices are dense ids `0..n`. Each hyperedge is stored as a sorted,
//! duplicate-free vertex list. Degrees and codegrees are exact integers; the
//! only floating-point step is the `1/(k-1)` normalization of the adjacency
//! matrix.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, SymMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
    multi_edges: bool,
}

/// Construction options for [`Hypergraph::with_options`].
#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    /// Accept repeated vertex sets instead of rejecting them.
    pub allow_multi_edges: bool,
}

impl Hypergraph {
    /// Validates and builds a hypergraph. Each edge is treated as a set: it is
    /// sorted and repeated ids inside one edge collapse.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        Self::with_options(n, edges, Options::default())
    }

    pub fn with_options(n: usize, edges: Vec<Vec<usize>>, opts: Options) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::NoEdges);
        }
        let mut normalized = Vec::with_capacity(edges.len());
        let mut seen = HashSet::new();
        let mut degree = vec![0usize; n];
        for (idx, mut e) in edges.into_iter().enumerate() {
            if e.is_empty() {
                return Err(Error::EmptyEdge(idx));
            }
            e.sort_unstable();
            e.dedup();
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if e.len() < 2 {
                return Err(Error::SingletonEdge(idx));
            }
            if !opts.allow_multi_edges && !seen.insert(e.clone()) {
                return Err(Error::DuplicateEdge(idx));
            }
            for &v in &e {
                degree[v] += 1;
            }
            normalized.push(e);
        }
        if let Some(v) = degree.iter().position(|&d| d == 0) {
            return Err(Error::DanglingVertex(v));
        }
        Ok(Self {
            n,
            edges: normalized,
            labels: None,
            multi_edges: opts.allow_multi_edges,
        })
    }

    /// Attaches per-vertex labels; the count must equal `n`.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::LabelCount {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of hyperedges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Label of `v`, falling back to `v<id>`.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => format!("v{v}"),
        }
    }

    pub fn allows_multi_edges(&self) -> bool {
        self.multi_edges
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Number of hyperedges containing `v`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    /// Number of hyperedges containing both `u` and `v`.
    pub fn codegree(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| e.binary_search(&u).is_ok() && e.binary_search(&v).is_ok())
            .count())
    }

    /// All pairwise codegrees as an `n × n` integer table with zero diagonal.
    pub fn codegree_table(&self) -> Vec<u32> {
        let n = self.n;
        let mut d = vec![0u32; n * n];
        for e in &self.edges {
            for (a, &u) in e.iter().enumerate() {
                for &v in &e[a + 1..] {
                    d[u * n + v] += 1;
                    d[v * n + u] += 1;
                }
            }
        }
        d
    }

    /// Common edge cardinality, if all edges share one.
    pub fn uniformity(&self) -> Option<usize> {
        let k = self.edges[0].len();
        self.edges.iter().all(|e| e.len() == k).then_some(k)
    }

    /// Common vertex degree, if all vertices share one.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degrees();
        let r = d[0];
        d.iter().all(|&x| x == r).then_some(r)
    }

    /// Any two hyperedges share at most one vertex.
    pub fn is_linear(&self) -> bool {
        for (i, a) in self.edges.iter().enumerate() {
            for b in &self.edges[i + 1..] {
                let shared = a.iter().filter(|v| b.binary_search(v).is_ok()).count();
                if shared > 1 {
                    return false;
                }
            }
        }
        true
    }

    /// True for a simple graph: 2-uniform without repeated edges.
    pub fn is_graph(&self) -> bool {
        self.uniformity() == Some(2) && {
            let set: HashSet<_> = self.edges.iter().collect();
            set.len() == self.edges.len()
        }
    }

    /// Unnormalized codegree matrix: `(i, j) = d_ij`, zero diagonal.
    pub fn codegree_matrix(&self) -> SymMatrix {
        let d = self.codegree_table();
        SymMatrix::from_fn(self.n, |i, j| if i == j { 0.0 } else { d[i * self.n + j] as f64 })
    }

    /// Adjacency matrix of a k-uniform hypergraph: `(i, j) = d_ij / (k - 1)`.
    pub fn adjacency_matrix(&self) -> Result<SymMatrix> {
        let k = self.uniformity().ok_or(Error::NotUniform)?;
        let denom = (k - 1) as f64;
        let d = self.codegree_table();
        Ok(SymMatrix::from_fn(self.n, |i, j| {
            if i == j {
                0.0
            } else {
                d[i * self.n + j] as f64 / denom
            }
        }))
    }

    /// Vertex-by-edge 0/1 incidence matrix.
    pub fn incidence_matrix(&self) -> Matrix {
        let mut b = Matrix::zeros(self.n, self.edges.len());
        for (j, e) in self.edges.iter().enumerate() {
            for &v in e {
                b.set(v, j, 1.0);
            }
        }
        b
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`. Edge order is kept.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::BadParameters(format!(
                "permutation has length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut hit[p], true) {
                return Err(Error::BadParameters("not a permutation".into()));
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| perm[v]).collect())
            .collect();
        let mut h = Self::with_options(
            self.n,
            edges,
            Options {
                allow_multi_edges: self.multi_edges,
            },
        )?;
        if let Some(labels) = &self.labels {
            let mut out = vec![String::new(); self.n];
            for (v, l) in labels.iter().enumerate() {
                out[perm[v]] = l.clone();
            }
            h.labels = Some(out);
        }
        Ok(h)
    }

    /// Relabels by a uniformly random permutation drawn from `seed`, and also
    /// shuffles the edge order. Returns the permutation used.
    pub fn shuffled(&self, seed: u64) -> (Self, Vec<usize>) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..self.n).collect();
        perm.shuffle(&mut rng);
        let mut h = self.relabeled(&perm).expect("valid permutation");
        h.edges.shuffle(&mut rng);
        (h, perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> Hypergraph {
        let edges = (0..7).map(|i| vec![i, (i + 1) % 7, (i + 3) % 7]).collect();
        Hypergraph::new(7, edges).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Hypergraph::new(3, vec![vec![0, 1]]), Err(Error::DanglingVertex(2)));
        assert_eq!(Hypergraph::new(3, vec![vec![]]), Err(Error::EmptyEdge(0)));
        assert_eq!(Hypergraph::new(2, vec![vec![0, 1], vec![1]]), Err(Error::SingletonEdge(1)));
        assert_eq!(Hypergraph::new(2, vec![vec![0, 0]]), Err(Error::SingletonEdge(0)));
        assert_eq!(
            Hypergraph::new(2, vec![vec![0, 2]]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(
            Hypergraph::new(2, vec![vec![0, 1], vec![1, 0]]),
            Err(Error::DuplicateEdge(1))
        );
        assert_eq!(Hypergraph::new(0, vec![]), Err(Error::NoEdges));
        let multi = Hypergraph::with_options(
            2,
            vec![vec![0, 1], vec![1, 0]],
            Options {
                allow_multi_edges: true,
            },
        )
        .unwrap();
        assert_eq!(multi.codegree(0, 1), Ok(2));
    }

    #[test]
    fn smallest_uniform_case() {
        let h = Hypergraph::new(3, vec![vec![2, 0, 1]]).unwrap();
        assert_eq!(h.m(), 1);
        assert_eq!(h.edges()[0], vec![0, 1, 2]);
        assert_eq!(h.uniformity(), Some(3));
        assert_eq!(h.regularity(), Some(1));
        assert!(h.is_linear());
        assert_eq!(h.degree(2), Ok(1));
        assert_eq!(h.codegree(0, 1), Ok(1));
        let a = h.adjacency_matrix().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a.get(i, j), if i == j { 0.0 } else { 0.5 });
            }
        }
        assert_eq!(h.incidence_matrix().to_rows(), vec![vec![1.0]; 3]);
    }

    #[test]
    fn two_triples_sharing_a_pair() {
        let h = Hypergraph::new(4, vec![vec![0, 1, 2], vec![0, 1, 3]]).unwrap();
        assert_eq!(h.degree(0), Ok(2));
        assert_eq!(h.codegree(0, 1), Ok(2));
        assert_eq!(h.codegree(2, 3), Ok(0));
        assert_eq!(h.codegree(1, 1), Err(Error::SameVertex(1)));
        assert_eq!(h.degree(4), Err(Error::VertexOutOfRange { vertex: 4, n: 4 }));
        let a = h.adjacency_matrix().unwrap();
        assert_eq!(a.get(0, 1), 1.0);
        assert_eq!(a.get(0, 2), 0.5);
        assert_eq!(h.codegree_matrix().get(0, 1), 2.0);
        assert!(!h.is_linear());
    }

    #[test]
    fn fano_plane_is_linear_and_regular() {
        let h = fano();
        assert_eq!(h.uniformity(), Some(3));
        assert_eq!(h.regularity(), Some(3));
        assert!(h.is_linear());
        for u in 0..7 {
            assert_eq!(h.degree(u), Ok(3));
            for v in 0..7 {
                if u != v {
                    assert_eq!(h.codegree(u, v), Ok(1));
                }
            }
        }
        // B·Bᵀ = 3I + (J − I)
        let bbt = h.incidence_matrix().gram();
        let expect = SymMatrix::from_fn(7, |i, j| if i == j { 3.0 } else { 1.0 });
        assert_eq!(bbt, expect);
    }

    #[test]
    fn cycle_gram_is_degree_plus_adjacency() {
        let c4 = Hypergraph::new(4, (0..4).map(|i| vec![i, (i + 1) % 4]).collect()).unwrap();
        let bbt = c4.incidence_matrix().gram();
        let a = c4.adjacency_matrix().unwrap();
        let expect = SymMatrix::from_fn(4, |i, j| if i == j { 2.0 } else { a.get(i, j) });
        assert_eq!(bbt, expect);
    }

    #[test]
    fn adjacency_requires_uniformity() {
        let h = Hypergraph::new(4, vec![vec![0, 1, 2], vec![2, 3]]).unwrap();
        assert_eq!(h.adjacency_matrix(), Err(Error::NotUniform));
        assert_eq!(h.uniformity(), None);
        // codegree matrix is defined regardless
        assert_eq!(h.codegree_matrix().get(2, 3), 1.0);
    }

    #[test]
    fn relabel_preserves_codegrees() {
        let h = fano();
        let (s, perm) = h.shuffled(7);
        for u in 0..7 {
            for v in 0..7 {
                if u != v {
                    assert_eq!(h.codegree(u, v), s.codegree(perm[u], perm[v]));
                }
            }
        }
    }
}
