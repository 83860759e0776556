//! Deterministic generators for the hypergraph families and the regular base
//! graphs used with them.
//!
//! Vertex layouts (0-based):
//!
//! * hyperflower `(l, s, t)`: centers `w_1..w_s`, then twins petal-major
//!   `u_1^1..u_t^1, u_1^2, ..`; edge `e_j = W ∪ U_j`.
//! * petal-overlapped `(l, s, t)`: centers, overlap vertices `v_1..v_l`, then
//!   twins petal-major; `e_j = W ∪ U_j ∪ {v_j, v_{j+1}}` cyclically.
//! * squid-like `k`: first-column vertices `w_j = i_{j,1}`, then the rest of
//!   each petal row-major. The center edge comes first in the edge list so
//!   that its subdivision vertex precedes the petal ones.
//! * power of a graph: the graph vertices, then padding vertices layer-major
//!   (`n + layer * m + edge`).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParameters(msg.into())
}

fn labeled(n: usize, edges: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Hypergraph> {
    Hypergraph::new(n, edges)?.with_labels(labels)
}

/// The `k`-th power of a simple graph: every edge is padded with `k - 2`
/// fresh vertices.
pub fn power_of_graph(g: &Hypergraph, k: usize) -> Result<Hypergraph> {
    if !g.is_graph() {
        return Err(Error::NotAGraph);
    }
    if k < 3 {
        return Err(Error::KTooSmall(k));
    }
    let (n, m) = (g.n(), g.m());
    let pad = k - 2;
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .map(|(e, ends)| {
            let mut out = ends.clone();
            out.extend((0..pad).map(|layer| n + layer * m + e));
            out
        })
        .collect();
    let mut labels: Vec<String> = (0..n).map(|v| g.label(v)).collect();
    for layer in 0..pad {
        labels.extend((0..m).map(|e| format!("i{},{}", e + 1, layer + 1)));
    }
    labeled(n + m * pad, edges, labels)
}

/// The `l`-hyperflower with `s` centers and `t` twins per petal.
pub fn hyperflower(l: usize, s: usize, t: usize) -> Result<Hypergraph> {
    hyperflower_general(l, 1, s, t)
}

/// The `(l, r)`-hyperflower: `r` disjoint center sets of size `s`, every
/// center set combined with every petal. Only `r = 1` has a spectral
/// predictor.
pub fn hyperflower_general(l: usize, r: usize, s: usize, t: usize) -> Result<Hypergraph> {
    if l == 0 || r == 0 || s == 0 || t == 0 {
        return Err(bad("hyperflower needs l, r, s, t >= 1"));
    }
    if s + t < 2 {
        return Err(bad("hyperflower edges need s + t >= 2"));
    }
    let centers = r * s;
    let mut labels = Vec::with_capacity(centers + l * t);
    for h in 0..r {
        for i in 0..s {
            labels.push(if r == 1 {
                format!("w{}", i + 1)
            } else {
                format!("w{},{}", h + 1, i + 1)
            });
        }
    }
    for j in 0..l {
        for i in 0..t {
            labels.push(format!("u{}^{}", i + 1, j + 1));
        }
    }
    let mut edges = Vec::with_capacity(l * r);
    for j in 0..l {
        for h in 0..r {
            let mut e: Vec<usize> = (h * s..(h + 1) * s).collect();
            e.extend((0..t).map(|i| centers + j * t + i));
            edges.push(e);
        }
    }
    labeled(centers + l * t, edges, labels)
}

/// Hyperflower with a single center and `k - 1` twins.
pub fn hyperstar(l: usize, k: usize) -> Result<Hypergraph> {
    if k < 2 {
        return Err(bad("hyperstar needs k >= 2"));
    }
    hyperflower(l, 1, k - 1)
}

/// Petal-overlapped hyperflower: consecutive petals also share one vertex.
pub fn petal_overlapped_hyperflower(l: usize, s: usize, t: usize) -> Result<Hypergraph> {
    if l < 3 {
        return Err(bad("petal-overlapped hyperflower needs l >= 3"));
    }
    if s == 0 || t == 0 {
        return Err(bad("petal-overlapped hyperflower needs s, t >= 1"));
    }
    let mut labels: Vec<String> = (0..s).map(|i| format!("w{}", i + 1)).collect();
    labels.extend((0..l).map(|j| format!("v{}", j + 1)));
    for j in 0..l {
        labels.extend((0..t).map(|i| format!("u{}^{}", i + 1, j + 1)));
    }
    let edges = (0..l)
        .map(|j| {
            let mut e: Vec<usize> = (0..s).collect();
            e.extend((0..t).map(|i| s + l + j * t + i));
            e.push(s + j);
            e.push(s + (j + 1) % l);
            e
        })
        .collect();
    labeled(s + l + l * t, edges, labels)
}

/// Squid: `k - 1` petals of size `k` plus a center edge through the first
/// vertex of every petal and one extra vertex.
pub fn squid(k: usize) -> Result<Hypergraph> {
    if k < 2 {
        return Err(bad("squid needs k >= 2"));
    }
    let petals = k - 1;
    // first vertices of petals, the extra center vertex, then petal tails
    let tail = |j: usize, i: usize| petals + 1 + j * (k - 1) + i;
    let mut labels: Vec<String> = (0..petals).map(|j| format!("i{},1", j + 1)).collect();
    labels.push(format!("i{k}"));
    for j in 0..petals {
        labels.extend((0..k - 1).map(|i| format!("i{},{}", j + 1, i + 2)));
    }
    let mut edges = vec![(0..=petals).collect::<Vec<_>>()];
    for j in 0..petals {
        let mut e = vec![j];
        e.extend((0..k - 1).map(|i| tail(j, i)));
        edges.push(e);
    }
    labeled(k * (k - 1) + 1, edges, labels)
}

/// Squid-like hypergraph: `k` petals of size `k` plus a center edge through
/// their first vertices.
pub fn squid_like(k: usize) -> Result<Hypergraph> {
    if k < 2 {
        return Err(bad("squid-like needs k >= 2"));
    }
    let tail = |j: usize, i: usize| k + j * (k - 1) + i;
    let mut labels: Vec<String> = (0..k).map(|j| format!("w{}", j + 1)).collect();
    for j in 0..k {
        labels.extend((0..k - 1).map(|i| format!("u{}^{}", i + 1, j + 1)));
    }
    let mut edges = vec![(0..k).collect::<Vec<_>>()];
    for j in 0..k {
        let mut e = vec![j];
        e.extend((0..k - 1).map(|i| tail(j, i)));
        edges.push(e);
    }
    labeled(k * k, edges, labels)
}

pub fn cycle_graph(n: usize) -> Result<Hypergraph> {
    if n < 3 {
        return Err(bad("cycle needs n >= 3"));
    }
    Hypergraph::new(n, (0..n).map(|i| vec![i, (i + 1) % n]).collect())
}

pub fn complete_graph(n: usize) -> Result<Hypergraph> {
    complete_uniform(n, 2)
}

/// All `k`-subsets of `n` vertices, lexicographic.
pub fn complete_uniform(n: usize, k: usize) -> Result<Hypergraph> {
    if k < 2 || n < k {
        return Err(bad("complete uniform hypergraph needs 2 <= k <= n"));
    }
    let mut edges = Vec::new();
    let mut comb: Vec<usize> = (0..k).collect();
    loop {
        edges.push(comb.clone());
        let Some(i) = (0..k).rev().find(|&i| comb[i] != i + n - k) else {
            break;
        };
        comb[i] += 1;
        for j in i + 1..k {
            comb[j] = comb[j - 1] + 1;
        }
    }
    Hypergraph::new(n, edges)
}

/// Circulant graph on `Z_n`; `connection` must be closed under negation and
/// must not contain 0.
pub fn circulant(n: usize, connection: &[usize]) -> Result<Hypergraph> {
    if n < 3 {
        return Err(bad("circulant needs n >= 3"));
    }
    if connection.is_empty() {
        return Err(bad("empty connection set"));
    }
    for &c in connection {
        if c == 0 || c >= n {
            return Err(bad(format!("connection element {c} not in 1..{n}")));
        }
        if !connection.contains(&(n - c)) {
            return Err(bad(format!("connection set not symmetric: {c} without {}", n - c)));
        }
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for &c in connection {
            let j = (i + c) % n;
            if i < j {
                edges.push(vec![i, j]);
            }
        }
    }
    edges.sort();
    edges.dedup();
    Hypergraph::new(n, edges)
}

pub fn petersen() -> Hypergraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push(vec![i, (i + 1) % 5]);
        edges.push(vec![i, i + 5]);
        edges.push(vec![5 + i, 5 + (i + 2) % 5]);
    }
    Hypergraph::new(10, edges).expect("petersen graph")
}

/// Cayley graph of `Z_4 × Z_4` with connection set `{±(1,0), ±(0,1), ±(1,1)}`.
pub fn shrikhande() -> Hypergraph {
    let id = |a: usize, b: usize| 4 * (a % 4) + (b % 4);
    let mut edges = Vec::with_capacity(48);
    for a in 0..4 {
        for b in 0..4 {
            for (da, db) in [(1, 0), (0, 1), (1, 1)] {
                edges.push(vec![id(a, b), id(a + da, b + db)]);
            }
        }
    }
    Hypergraph::new(16, edges).expect("shrikhande graph")
}

/// The 4×4 rook's graph `K_4 □ K_4`.
pub fn rook4x4() -> Hypergraph {
    let mut edges = Vec::with_capacity(48);
    for u in 0..16usize {
        for v in u + 1..16 {
            let same_row = u / 4 == v / 4;
            let same_col = u % 4 == v % 4;
            if same_row != same_col {
                edges.push(vec![u, v]);
            }
        }
    }
    Hypergraph::new(16, edges).expect("rook graph")
}

/// The Fano plane: lines `{i, i+1, i+3} mod 7`.
pub fn fano_plane() -> Hypergraph {
    Hypergraph::new(7, (0..7).map(|i| vec![i, (i + 1) % 7, (i + 3) % 7]).collect())
        .expect("fano plane")
}

/// Parses a named regular graph: `petersen`, `shrikhande`, `rook4x4`,
/// `cycle:N`, `complete:N` or `circulant:N:s1:s2:..`.
pub fn named_graph(spec: &str) -> Result<Hypergraph> {
    let mut parts = spec.split(':');
    let name = parts.next().unwrap_or_default().trim().to_ascii_lowercase();
    let nums: Vec<usize> = parts
        .map(|p| p.trim().parse().map_err(|_| bad(format!("bad number in {spec:?}"))))
        .collect::<Result<_>>()?;
    let need = |count: usize| -> Result<()> {
        if nums.len() == count {
            Ok(())
        } else {
            Err(bad(format!("{spec:?}: expected {count} numeric arguments")))
        }
    };
    match name.as_str() {
        "petersen" => need(0).map(|_| petersen()),
        "shrikhande" => need(0).map(|_| shrikhande()),
        "rook4x4" | "rook" => need(0).map(|_| rook4x4()),
        "cycle" => need(1).and_then(|_| cycle_graph(nums[0])),
        "complete" => need(1).and_then(|_| complete_graph(nums[0])),
        "circulant" if !nums.is_empty() => circulant(nums[0], &nums[1..]),
        _ => Err(bad(format!("unknown graph {spec:?}"))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyName {
    Power,
    Hyperflower,
    Hyperstar,
    PetalOverlapped,
    Squid,
    SquidLike,
    Cycle,
    Complete,
    Circulant,
    Petersen,
    Shrikhande,
    Rook4x4,
    Fano,
    CompleteUniform,
}

impl FamilyName {
    pub const ALL: [FamilyName; 14] = [
        FamilyName::Power,
        FamilyName::Hyperflower,
        FamilyName::Hyperstar,
        FamilyName::PetalOverlapped,
        FamilyName::Squid,
        FamilyName::SquidLike,
        FamilyName::Cycle,
        FamilyName::Complete,
        FamilyName::Circulant,
        FamilyName::Petersen,
        FamilyName::Shrikhande,
        FamilyName::Rook4x4,
        FamilyName::Fano,
        FamilyName::CompleteUniform,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyName::Power => "power",
            FamilyName::Hyperflower => "hyperflower",
            FamilyName::Hyperstar => "hyperstar",
            FamilyName::PetalOverlapped => "petal_overlapped",
            FamilyName::Squid => "squid",
            FamilyName::SquidLike => "squid_like",
            FamilyName::Cycle => "cycle",
            FamilyName::Complete => "complete",
            FamilyName::Circulant => "circulant",
            FamilyName::Petersen => "petersen",
            FamilyName::Shrikhande => "shrikhande",
            FamilyName::Rook4x4 => "rook4x4",
            FamilyName::Fano => "fano",
            FamilyName::CompleteUniform => "complete_uniform",
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        FamilyName::ALL
            .into_iter()
            .find(|f| f.as_str() == key)
            .ok_or_else(|| bad(format!("unknown family {s:?}")))
    }
}

/// A family name plus its parameters, as given on the command line
/// (`k=3,l=4,base=petersen,S=1:7`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub name: FamilyName,
    pub params: BTreeMap<String, String>,
}

/// Splits `a=1,b=x` into an ordered map.
pub fn parse_params(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| bad(format!("parameter {item:?} is not key=value")))?;
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

/// Reads an unsigned integer parameter.
pub fn param_usize(params: &BTreeMap<String, String>, key: &str) -> Result<usize> {
    let raw = params
        .get(key)
        .ok_or_else(|| bad(format!("missing parameter {key}")))?;
    raw.parse()
        .map_err(|_| bad(format!("parameter {key}={raw} is not a non-negative integer")))
}

impl FamilySpec {
    pub fn parse(name: &str, params: &str) -> Result<Self> {
        Ok(Self {
            name: name.parse()?,
            params: parse_params(params)?,
        })
    }

    fn get(&self, key: &str) -> Result<usize> {
        param_usize(&self.params, key)
    }

    fn get_or(&self, key: &str, default: usize) -> Result<usize> {
        if self.params.contains_key(key) {
            self.get(key)
        } else {
            Ok(default)
        }
    }

    pub fn build(&self) -> Result<Hypergraph> {
        match self.name {
            FamilyName::Power => {
                let base = self
                    .params
                    .get("base")
                    .ok_or_else(|| bad("power needs base=<graph>"))?;
                power_of_graph(&named_graph(base)?, self.get("k")?)
            }
            FamilyName::Hyperflower => hyperflower_general(
                self.get("l")?,
                self.get_or("r", 1)?,
                self.get("s")?,
                self.get("t")?,
            ),
            FamilyName::Hyperstar => hyperstar(self.get("l")?, self.get("k")?),
            FamilyName::PetalOverlapped => {
                petal_overlapped_hyperflower(self.get("l")?, self.get("s")?, self.get("t")?)
            }
            FamilyName::Squid => squid(self.get("k")?),
            FamilyName::SquidLike => squid_like(self.get("k")?),
            FamilyName::Cycle => cycle_graph(self.get("n")?),
            FamilyName::Complete => complete_graph(self.get("n")?),
            FamilyName::CompleteUniform => complete_uniform(self.get("n")?, self.get("k")?),
            FamilyName::Circulant => {
                let raw = self
                    .params
                    .get("S")
                    .or_else(|| self.params.get("s"))
                    .ok_or_else(|| bad("circulant needs S=a:b:.."))?;
                let set: Vec<usize> = raw
                    .split(':')
                    .map(|x| x.trim().parse().map_err(|_| bad(format!("bad connection set {raw:?}"))))
                    .collect::<Result<_>>()?;
                circulant(self.get("n")?, &set)
            }
            FamilyName::Petersen => Ok(petersen()),
            FamilyName::Shrikhande => Ok(shrikhande()),
            FamilyName::Rook4x4 => Ok(rook4x4()),
            FamilyName::Fano => Ok(fano_plane()),
        }
    }
}
