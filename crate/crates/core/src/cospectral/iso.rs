//! Hypergraph isomorphism through the bipartite incidence graph: vertex
//! nodes and edge nodes in two colour classes. Both graphs are refined
//! jointly (1-dimensional Weisfeiler-Leman), so colour ids are comparable
//! across the pair; the search individualizes one node per side and
//! refines again until the colouring is discrete or unbalanced.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::hypergraph::Hypergraph;

pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum IsoVerdict {
    Isomorphic,
    NonIsomorphic,
    /// The search visited `budget` nodes without an answer.
    Undecided { budget: u64 },
}

struct Union {
    /// Nodes `0..half` belong to the first graph, `half..2*half` to the second.
    half: usize,
    adj: Vec<Vec<usize>>,
}

impl Union {
    fn new(h1: &Hypergraph, h2: &Hypergraph) -> Self {
        let half = h1.n() + h1.m();
        let mut adj = vec![Vec::new(); 2 * half];
        for (offset, h) in [(0, h1), (half, h2)] {
            for (e, edge) in h.edges().iter().enumerate() {
                let en = offset + h.n() + e;
                for &v in edge {
                    adj[offset + v].push(en);
                    adj[en].push(offset + v);
                }
            }
        }
        Self { half, adj }
    }

    /// Refines to the stable colouring. Returns false as soon as some colour
    /// has different counts on the two sides.
    fn refine(&self, colors: &mut [u32]) -> bool {
        let mut classes = count_classes(colors);
        loop {
            let mut table: BTreeMap<(u32, Vec<u32>), u32> = BTreeMap::new();
            let sigs: Vec<(u32, Vec<u32>)> = (0..colors.len())
                .map(|v| {
                    let mut nb: Vec<u32> = self.adj[v].iter().map(|&u| colors[u]).collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            for s in &sigs {
                table.entry(s.clone()).or_insert(0);
            }
            for (i, id) in table.values_mut().enumerate() {
                *id = i as u32;
            }
            for (c, s) in colors.iter_mut().zip(&sigs) {
                *c = table[s];
            }
            if !self.balanced(colors) {
                return false;
            }
            let next = table.len();
            if next == classes {
                return true;
            }
            classes = next;
        }
    }

    fn balanced(&self, colors: &[u32]) -> bool {
        let mut counts: BTreeMap<u32, i64> = BTreeMap::new();
        for (v, &c) in colors.iter().enumerate() {
            *counts.entry(c).or_default() += if v < self.half { 1 } else { -1 };
        }
        counts.values().all(|&x| x == 0)
    }

    /// Smallest colour class with more than one node per side.
    fn target_cell(&self, colors: &[u32]) -> Option<u32> {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for &c in &colors[..self.half] {
            *counts.entry(c).or_default() += 1;
        }
        counts
            .into_iter()
            .filter(|&(_, n)| n > 1)
            .min_by_key(|&(c, n)| (n, c))
            .map(|(c, _)| c)
    }

    fn is_isomorphism(&self, colors: &[u32]) -> bool {
        let image: BTreeMap<u32, usize> = (self.half..2 * self.half).map(|v| (colors[v], v)).collect();
        let map = |v: usize| image[&colors[v]];
        (0..self.half).all(|v| {
            let mut mapped: Vec<usize> = self.adj[v].iter().map(|&u| map(u)).collect();
            let mut target = self.adj[map(v)].clone();
            mapped.sort_unstable();
            target.sort_unstable();
            mapped == target
        })
    }

    /// `Some(found)` or `None` once the budget is spent.
    fn search(&self, mut colors: Vec<u32>, visited: &mut u64, budget: u64) -> Option<bool> {
        *visited += 1;
        if *visited > budget {
            return None;
        }
        if !self.refine(&mut colors) {
            return Some(false);
        }
        let Some(cell) = self.target_cell(&colors) else {
            return Some(self.is_isomorphism(&colors));
        };
        let x = (0..self.half).find(|&v| colors[v] == cell).expect("cell is nonempty");
        let fresh = colors.iter().max().copied().unwrap_or(0) + 1;
        for y in (self.half..2 * self.half).filter(|&v| colors[v] == cell) {
            let mut next = colors.clone();
            next[x] = fresh;
            next[y] = fresh;
            if self.search(next, visited, budget)? {
                return Some(true);
            }
        }
        Some(false)
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn sorted<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort();
    v
}

/// Decides isomorphism within `budget` search nodes.
pub fn are_isomorphic(h1: &Hypergraph, h2: &Hypergraph, budget: u64) -> IsoVerdict {
    if h1.n() != h2.n() || h1.m() != h2.m() {
        return IsoVerdict::NonIsomorphic;
    }
    let sizes = |h: &Hypergraph| sorted(&h.edges().iter().map(Vec::len).collect::<Vec<_>>());
    if sorted(&h1.degrees()) != sorted(&h2.degrees()) || sizes(h1) != sizes(h2) {
        return IsoVerdict::NonIsomorphic;
    }
    let union = Union::new(h1, h2);
    let colors = (0..2 * union.half)
        .map(|v| u32::from(v % union.half >= h1.n()))
        .collect();
    let mut visited = 0;
    match union.search(colors, &mut visited, budget) {
        Some(true) => IsoVerdict::Isomorphic,
        Some(false) => IsoVerdict::NonIsomorphic,
        None => IsoVerdict::Undecided { budget },
    }
}
