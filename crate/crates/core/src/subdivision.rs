//! The subdivision operator: every hyperedge `e` of size `k` is replaced by a
//! fresh vertex `p_e` and the `k` hyperedges `(e \ {v}) ∪ {p_e}`, `v ∈ e`.
//!
//! New vertices are appended after the original ids in edge order. New edges
//! are grouped by origin edge and, inside a group, ordered by the position of
//! the omitted vertex in the sorted origin edge.

use crate::hypergraph::{Hypergraph, Options};

#[derive(Clone, Debug)]
pub struct SubdivisionResult {
    pub hypergraph: Hypergraph,
    /// `new_vertex_of_edge[e]` is the id of `p_e`.
    pub new_vertex_of_edge: Vec<usize>,
    /// `origin_edge_of_new_edge[f]` is the original edge that produced `f`.
    pub origin_edge_of_new_edge: Vec<usize>,
}

pub fn subdivide(h: &Hypergraph) -> SubdivisionResult {
    let n = h.n();
    let total: usize = h.edges().iter().map(Vec::len).sum();
    let mut edges = Vec::with_capacity(total);
    let mut origin = Vec::with_capacity(total);
    let mut new_vertex = Vec::with_capacity(h.m());
    for (idx, e) in h.edges().iter().enumerate() {
        let p = n + idx;
        new_vertex.push(p);
        for omit in 0..e.len() {
            let mut f: Vec<usize> = e
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != omit)
                .map(|(_, &v)| v)
                .collect();
            f.push(p);
            edges.push(f);
            origin.push(idx);
        }
    }
    let mut labels: Vec<String> = (0..n).map(|v| h.label(v)).collect();
    labels.extend((0..h.m()).map(|e| format!("p{e}")));
    let hypergraph = Hypergraph::with_options(
        n + h.m(),
        edges,
        Options {
            allow_multi_edges: h.allows_multi_edges(),
        },
    )
    .and_then(|s| s.with_labels(labels))
    .expect("subdivision of a valid hypergraph is valid");
    SubdivisionResult {
        hypergraph,
        new_vertex_of_edge: new_vertex,
        origin_edge_of_new_edge: origin,
    }
}
