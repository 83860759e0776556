//! Predicted spectra of subdivided families.
//!
//! Two flavors are produced for every theorem. The structural flavor is
//! assembled from eigenvector families, quotient matrices and reduced blocks;
//! it is the normative one. The closed-form flavor evaluates the printed
//! polynomials and values, and is audited against the structural flavor and
//! the eigensolver, never trusted.

mod audit;
mod grid;
mod proof;
pub mod closed;
pub mod structural;
mod witness;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{self, FamilySpec};
use crate::hypergraph::Hypergraph;
use crate::spectra::{Polynomial, SpectrumMultiset};

pub use audit::{
    audit, clause_counts, convention_check, AuditReport, ClauseCount, ConventionCheck, DiscrepancyReport, DEFAULT_AUDIT_TOL,
};
pub use grid::{full_grid, grid};
pub use proof::{proof_partition, ProofPartition};
pub use witness::{witness_families, LocalEigenvectorFamily, WITNESS_TOL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [Self::T1, Self::T2, Self::T3, Self::T4, Self::T5, Self::T6];

    pub fn id(self) -> &'static str {
        match self {
            Self::T1 => "t1",
            Self::T2 => "t2",
            Self::T3 => "t3",
            Self::T4 => "t4",
            Self::T5 => "t5",
            Self::T6 => "t6",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.id() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::BadParameters(format!("unknown theorem {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    Structural,
    ClosedForm,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Structural => "structural",
            Self::ClosedForm => "closed_form",
        })
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "structural" => Ok(Self::Structural),
            "closed" | "closed_form" | "closed-form" => Ok(Self::ClosedForm),
            _ => Err(Error::BadParameters(format!("unknown flavor {s:?}"))),
        }
    }
}

/// Where the values of a piece come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// An explicit eigenvector family with a known eigenvalue.
    EigenvectorFamily,
    /// Eigenvalues of the quotient matrix of an equitable partition.
    QuotientRoot,
    /// Eigenvalues of a small block obtained by an eigenvector ansatz.
    ReducedBlock,
    /// Roots of a printed polynomial.
    PolynomialRoot,
    /// A printed closed-form value.
    PrintedValue,
}

/// One clause contribution: `values` repeated `multiplicity` times.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Piece {
    pub clause: String,
    pub source: Source,
    pub label: String,
    pub values: Vec<f64>,
    pub multiplicity: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub polynomial: Option<Polynomial>,
    /// Values removed from this piece by zero/root cancellation.
    #[serde(skip_serializing_if = "is_zero", default)]
    pub cancelled: usize,
    /// Set when root extraction met non-real roots in lenient mode; the
    /// values are then real parts.
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub non_real: bool,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

impl Piece {
    pub(crate) fn new(clause: &str, source: Source, label: impl Into<String>, values: Vec<f64>, multiplicity: usize) -> Self {
        Self {
            clause: clause.to_string(),
            source,
            label: label.into(),
            values,
            multiplicity,
            polynomial: None,
            cancelled: 0,
            non_real: false,
        }
    }

    pub fn count(&self) -> usize {
        self.values.len() * self.multiplicity
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PredictedSpectrum {
    pub theorem: Theorem,
    pub flavor: Flavor,
    pub params: String,
    pub pieces: Vec<Piece>,
}

impl PredictedSpectrum {
    pub fn len(&self) -> usize {
        self.pieces.iter().map(Piece::count).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All values with multiplicity, sorted descending.
    pub fn flatten(&self) -> SpectrumMultiset {
        let mut out = Vec::with_capacity(self.len());
        for p in &self.pieces {
            for _ in 0..p.multiplicity {
                out.extend_from_slice(&p.values);
            }
        }
        SpectrumMultiset::new(out)
    }

    pub fn clause_values(&self, clause: &str) -> Vec<f64> {
        let mut out = Vec::new();
        for p in self.pieces.iter().filter(|p| p.clause == clause) {
            for _ in 0..p.multiplicity {
                out.extend_from_slice(&p.values);
            }
        }
        out
    }
}

/// A theorem together with the object it speaks about.
#[derive(Clone, Debug, PartialEq)]
pub enum Instance {
    Regular { name: String, hypergraph: Hypergraph },
    GraphPower { name: String, base: Hypergraph, k: usize },
    Hyperflower { l: usize, s: usize, t: usize },
    Hyperstar { l: usize, k: usize },
    PetalOverlapped { l: usize, s: usize, t: usize },
    SquidLike { k: usize },
}

impl Instance {
    /// Builds an instance from `key=value` parameters.
    ///
    /// * t1: `input` or `family=<name>` plus that family's parameters;
    /// * t2: `k`, and `input` or `base=<named graph>`;
    /// * t3, t5: `l,s,t`; t4: `l,k`; t6: `k`.
    pub fn parse(theorem: Theorem, params: &str, input: Option<Hypergraph>) -> Result<Self> {
        let mut map = families::parse_params(params)?;
        let get = |map: &BTreeMap<String, String>, key: &str| families::param_usize(map, key);
        Ok(match theorem {
            Theorem::T1 => match input {
                Some(h) => Self::Regular {
                    name: map.remove("name").unwrap_or_else(|| "input".into()),
                    hypergraph: h,
                },
                None => {
                    let family = map
                        .remove("family")
                        .ok_or_else(|| Error::BadParameters("t1 needs an input or family=<name>".into()))?;
                    let spec = FamilySpec {
                        name: family.parse()?,
                        params: map.clone(),
                    };
                    Self::Regular {
                        name: describe_family(&family, &map),
                        hypergraph: spec.build()?,
                    }
                }
            },
            Theorem::T2 => {
                let k = get(&map, "k")?;
                match input {
                    Some(base) => Self::GraphPower {
                        name: map.remove("name").unwrap_or_else(|| "input".into()),
                        base,
                        k,
                    },
                    None => {
                        let name = map
                            .get("base")
                            .cloned()
                            .ok_or_else(|| Error::BadParameters("t2 needs an input or base=<graph>".into()))?;
                        Self::GraphPower {
                            base: families::named_graph(&name)?,
                            name,
                            k,
                        }
                    }
                }
            }
            Theorem::T3 => Self::Hyperflower {
                l: get(&map, "l")?,
                s: get(&map, "s")?,
                t: get(&map, "t")?,
            },
            Theorem::T4 => Self::Hyperstar {
                l: get(&map, "l")?,
                k: get(&map, "k")?,
            },
            Theorem::T5 => Self::PetalOverlapped {
                l: get(&map, "l")?,
                s: get(&map, "s")?,
                t: get(&map, "t")?,
            },
            Theorem::T6 => Self::SquidLike { k: get(&map, "k")? },
        })
    }

    pub fn theorem(&self) -> Theorem {
        match self {
            Self::Regular { .. } => Theorem::T1,
            Self::GraphPower { .. } => Theorem::T2,
            Self::Hyperflower { .. } => Theorem::T3,
            Self::Hyperstar { .. } => Theorem::T4,
            Self::PetalOverlapped { .. } => Theorem::T5,
            Self::SquidLike { .. } => Theorem::T6,
        }
    }

    pub fn params(&self) -> String {
        match self {
            Self::Regular { name, .. } => name.clone(),
            Self::GraphPower { name, k, .. } => format!("base={name},k={k}"),
            Self::Hyperflower { l, s, t } | Self::PetalOverlapped { l, s, t } => format!("l={l},s={s},t={t}"),
            Self::Hyperstar { l, k } => format!("l={l},k={k}"),
            Self::SquidLike { k } => format!("k={k}"),
        }
    }

    /// The hypergraph before subdivision, in the generator's vertex layout.
    pub fn hypergraph(&self) -> Result<Hypergraph> {
        match self {
            Self::Regular { hypergraph, .. } => Ok(hypergraph.clone()),
            Self::GraphPower { base, k, .. } => families::power_of_graph(base, *k),
            Self::Hyperflower { l, s, t } => families::hyperflower(*l, *s, *t),
            Self::Hyperstar { l, k } => families::hyperstar(*l, *k),
            Self::PetalOverlapped { l, s, t } => families::petal_overlapped_hyperflower(*l, *s, *t),
            Self::SquidLike { k } => families::squid_like(*k),
        }
    }

    /// `|V(S(H))|`.
    pub fn subdivision_order(&self) -> Result<usize> {
        let h = self.hypergraph()?;
        Ok(h.n() + h.m())
    }
}

fn describe_family(family: &str, params: &BTreeMap<String, String>) -> String {
    if params.is_empty() {
        family.to_string()
    } else {
        let rest: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{family}:{}", rest.join(","))
    }
}

/// Predicted spectrum of `S(H)` for the instance.
pub fn predict(instance: &Instance, flavor: Flavor) -> Result<PredictedSpectrum> {
    let pieces = match flavor {
        Flavor::Structural => structural::pieces(instance)?,
        Flavor::ClosedForm => closed::pieces(instance, closed::RootMode::Strict)?,
    };
    Ok(PredictedSpectrum {
        theorem: instance.theorem(),
        flavor,
        params: instance.params(),
        pieces,
    })
}

pub fn predict_regular(h: &Hypergraph, flavor: Flavor) -> Result<PredictedSpectrum> {
    predict(
        &Instance::Regular {
            name: "input".into(),
            hypergraph: h.clone(),
        },
        flavor,
    )
}

pub fn predict_graph_power(g: &Hypergraph, k: usize, flavor: Flavor) -> Result<PredictedSpectrum> {
    predict(
        &Instance::GraphPower {
            name: "input".into(),
            base: g.clone(),
            k,
        },
        flavor,
    )
}

pub fn predict_hyperflower(l: usize, s: usize, t: usize, flavor: Flavor) -> Result<PredictedSpectrum> {
    predict(&Instance::Hyperflower { l, s, t }, flavor)
}

pub fn predict_hyperstar(l: usize, k: usize, flavor: Flavor) -> Result<PredictedSpectrum> {
    predict(&Instance::Hyperstar { l, k }, flavor)
}

pub fn predict_petal_overlapped(l: usize, s: usize, t: usize, flavor: Flavor) -> Result<PredictedSpectrum> {
    predict(&Instance::PetalOverlapped { l, s, t }, flavor)
}

pub fn predict_squid_like(k: usize, flavor: Flavor) -> Result<PredictedSpectrum> {
    predict(&Instance::SquidLike { k }, flavor)
}

/// `(k - 2) / (k - 1)`, the weight between two original vertices that shared
/// one edge before subdivision.
pub(crate) fn weight(k: usize) -> f64 {
    (k as f64 - 2.0) / (k as f64 - 1.0)
}

pub(crate) fn push(pieces: &mut Vec<Piece>, piece: Piece) {
    if piece.multiplicity > 0 && !piece.values.is_empty() {
        pieces.push(piece);
    }
}

/// Tolerance for recognising an eigenvalue equal to `-r`, and for matching
/// values removed by cancellation.
pub(crate) fn coincidence_tol(scale: f64) -> f64 {
    1e-8 * (1.0 + scale.abs())
}

/// Removes `count` values near `target` from multiplicity-one pieces.
pub(crate) fn cancel(pieces: &mut [Piece], target: f64, count: usize, tol: f64) -> Result<()> {
    let mut done = 0;
    for p in pieces.iter_mut().filter(|p| p.multiplicity == 1) {
        if done == count {
            break;
        }
        if let Some(i) = p.values.iter().position(|v| (v - target).abs() <= tol) {
            p.values.remove(i);
            p.cancelled += 1;
            done += 1;
        }
    }
    if done < count {
        return Err(Error::CancellationImpossible {
            needed: count,
            available: done,
        });
    }
    Ok(())
}

pub(crate) fn require_regular_uniform(h: &Hypergraph) -> Result<(usize, usize)> {
    let k = h.uniformity().ok_or(Error::NotUniform)?;
    let r = h.regularity().ok_or(Error::NotRegular)?;
    Ok((k, r))
}

pub(crate) fn check_flower(l: usize, s: usize, t: usize) -> Result<()> {
    if l == 0 || s == 0 || t == 0 {
        return Err(Error::BadParameters("l, s and t must be at least 1".into()));
    }
    Ok(())
}

pub(crate) fn check_petal(l: usize, s: usize, t: usize) -> Result<()> {
    check_flower(l, s, t)?;
    if l < 3 {
        return Err(Error::BadParameters("petal overlap needs l >= 3".into()));
    }
    Ok(())
}

pub(crate) fn check_star(l: usize, k: usize) -> Result<()> {
    if l == 0 || k < 2 {
        return Err(Error::BadParameters("hyperstar needs l >= 1 and k >= 2".into()));
    }
    Ok(())
}

pub(crate) fn check_squid(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::BadParameters("squid-like needs k >= 2".into()));
    }
    Ok(())
}
