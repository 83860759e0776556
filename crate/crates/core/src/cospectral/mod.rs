//! Cospectrality, isomorphism, and cospectral pairs of subdivisions built
//! from cospectral regular inputs.

mod iso;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families;
use crate::hypergraph::Hypergraph;
use crate::io::HypergraphDocument;
use crate::predictors::{predict_graph_power, Flavor};
use crate::spectra::{self, multiset_equal, Comparison};
use crate::subdivision::subdivide;

pub use iso::{are_isomorphic, IsoVerdict, DEFAULT_BUDGET};

/// Compares the adjacency spectra of two uniform hypergraphs.
pub fn are_cospectral(h1: &Hypergraph, h2: &Hypergraph, tol: f64) -> Result<Comparison> {
    let a = spectra::eigenvalues(&h1.adjacency_matrix()?);
    let b = spectra::eigenvalues(&h2.adjacency_matrix()?);
    Ok(multiset_equal(a.values(), b.values(), tol))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Subdivisions of regular uniform hypergraphs.
    T8,
    /// Subdivisions of powers of regular graphs.
    T7,
    /// A pair checked as given.
    Direct,
}

/// Why the certified pair is believed non-isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NonIsomorphismBasis {
    /// The search refuted every bijection.
    Verified,
    /// The search ran out of budget; the inputs were verified non-isomorphic
    /// and the lifting theorem carries that over to the subdivisions.
    ByLiftingTheorem,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CospectralCertificate {
    pub provenance: Provenance,
    pub first: HypergraphDocument,
    pub second: HypergraphDocument,
    /// Spectrum of `first`, descending.
    pub spectrum: Vec<f64>,
    pub max_deviation: f64,
    pub tolerance: f64,
    /// Verdict on the inputs before subdivision, when there are inputs.
    pub base_verdict: Option<IsoVerdict>,
    pub verdict: IsoVerdict,
    /// `None` when the pair was found isomorphic.
    pub non_isomorphism: Option<NonIsomorphismBasis>,
    /// Largest gap between the two closed-form predictions, for `T7`.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub prediction_gap: Option<f64>,
}

impl CospectralCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}

/// Certificate for a pair given as is.
pub fn certify_direct(h1: &Hypergraph, h2: &Hypergraph, tol: f64, budget: u64) -> Result<CospectralCertificate> {
    let cmp = are_cospectral(h1, h2, tol)?;
    if !cmp.equal {
        return Err(Error::NotCospectralInput(deviation_text(cmp)));
    }
    let verdict = are_isomorphic(h1, h2, budget);
    Ok(certificate(Provenance::Direct, h1, h2, cmp, tol, None, verdict, None))
}

/// Subdivides two cospectral, non-isomorphic, regular uniform hypergraphs
/// and certifies the subdivisions cospectral.
pub fn cospectral_pair_t8(h1: &Hypergraph, h2: &Hypergraph, tol: f64, budget: u64) -> Result<CospectralCertificate> {
    let mut shape = Vec::new();
    for h in [h1, h2] {
        let k = h.uniformity().ok_or(Error::NotUniform)?;
        let r = h.regularity().ok_or(Error::NotRegular)?;
        shape.push((k, r, h.n()));
    }
    if shape[0] != shape[1] {
        return Err(Error::NotCospectralInput(format!(
            "(k, r, n) differ: {:?} vs {:?}",
            shape[0], shape[1]
        )));
    }
    let base = check_base_pair(h1, h2, tol, budget)?;
    lift(Provenance::T8, &subdivide(h1).hypergraph, &subdivide(h2).hypergraph, tol, budget, base, None)
}

/// The same for `S(G1^k)` and `S(G2^k)` with cospectral regular graphs.
pub fn cospectral_pair_t7(g1: &Hypergraph, g2: &Hypergraph, k: usize, tol: f64, budget: u64) -> Result<CospectralCertificate> {
    for g in [g1, g2] {
        if !g.is_graph() {
            return Err(Error::NotAGraph);
        }
        g.regularity().ok_or(Error::NotRegular)?;
    }
    if (g1.regularity(), g1.n()) != (g2.regularity(), g2.n()) {
        return Err(Error::NotCospectralInput("regularity or order differ".into()));
    }
    let base = check_base_pair(g1, g2, tol, budget)?;
    let p1 = predict_graph_power(g1, k, Flavor::Structural)?.flatten();
    let p2 = predict_graph_power(g2, k, Flavor::Structural)?.flatten();
    let gap = multiset_equal(p1.values(), p2.values(), tol).max_deviation;
    let s1 = subdivide(&families::power_of_graph(g1, k)?).hypergraph;
    let s2 = subdivide(&families::power_of_graph(g2, k)?).hypergraph;
    lift(Provenance::T7, &s1, &s2, tol, budget, base, Some(gap))
}

fn check_base_pair(h1: &Hypergraph, h2: &Hypergraph, tol: f64, budget: u64) -> Result<IsoVerdict> {
    let cmp = are_cospectral(h1, h2, tol)?;
    if !cmp.equal {
        return Err(Error::NotCospectralInput(deviation_text(cmp)));
    }
    let verdict = are_isomorphic(h1, h2, budget);
    if verdict == IsoVerdict::Isomorphic {
        return Err(Error::InputsIsomorphic);
    }
    Ok(verdict)
}

fn lift(
    provenance: Provenance,
    s1: &Hypergraph,
    s2: &Hypergraph,
    tol: f64,
    budget: u64,
    base: IsoVerdict,
    prediction_gap: Option<f64>,
) -> Result<CospectralCertificate> {
    let cmp = are_cospectral(s1, s2, tol)?;
    if !cmp.equal {
        return Err(Error::NotCospectralInput(format!("subdivisions: {}", deviation_text(cmp))));
    }
    let verdict = are_isomorphic(s1, s2, budget);
    Ok(certificate(provenance, s1, s2, cmp, tol, Some(base), verdict, prediction_gap))
}

#[allow(clippy::too_many_arguments)]
fn certificate(
    provenance: Provenance,
    h1: &Hypergraph,
    h2: &Hypergraph,
    cmp: Comparison,
    tol: f64,
    base_verdict: Option<IsoVerdict>,
    verdict: IsoVerdict,
    prediction_gap: Option<f64>,
) -> CospectralCertificate {
    let non_isomorphism = match (verdict, base_verdict) {
        (IsoVerdict::NonIsomorphic, _) => Some(NonIsomorphismBasis::Verified),
        (IsoVerdict::Undecided { .. }, Some(IsoVerdict::NonIsomorphic)) => Some(NonIsomorphismBasis::ByLiftingTheorem),
        _ => None,
    };
    let spectrum = h1
        .adjacency_matrix()
        .map(|a| spectra::eigenvalues(&a).values().to_vec())
        .unwrap_or_default();
    CospectralCertificate {
        provenance,
        first: HypergraphDocument::from_hypergraph(h1),
        second: HypergraphDocument::from_hypergraph(h2),
        spectrum,
        max_deviation: cmp.max_deviation,
        tolerance: tol,
        base_verdict,
        verdict,
        non_isomorphism,
        prediction_gap,
    }
}

fn deviation_text(cmp: Comparison) -> String {
    if cmp.max_deviation.is_finite() {
        format!("spectra differ by {:.3e}", cmp.max_deviation)
    } else {
        "orders differ".into()
    }
}
