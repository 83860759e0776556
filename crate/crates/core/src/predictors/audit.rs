use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectra::{self, multiset_equal, SpectrumMultiset};

use super::closed::{self, RootMode};
use super::witness::subdivided_adjacency;
use super::{structural, Flavor, Instance, Piece, PredictedSpectrum, Source, Theorem};

pub const DEFAULT_AUDIT_TOL: f64 = 1e-6;

/// Window used when counting eigensolver values at a printed eigenvalue.
pub const CLAUSE_WINDOW: f64 = 1e-7;

/// A disagreement between two of: structural flavor, closed-form flavor,
/// eigensolver.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiscrepancyReport {
    pub theorem: Theorem,
    pub params: String,
    pub compared: String,
    /// `None` when the multisets differ in length.
    pub max_deviation: Option<f64>,
    pub clause: String,
    pub piece: String,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub theorem: Theorem,
    pub params: String,
    pub order: usize,
    pub tolerance: f64,
    pub structural_vs_oracle: Option<f64>,
    pub closed_vs_oracle: Option<f64>,
    pub closed_vs_structural: Option<f64>,
    pub discrepancies: Vec<DiscrepancyReport>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.discrepancies.is_empty()
    }

    /// True when the normative flavor agrees with the eigensolver, whatever
    /// the printed closed forms do.
    pub fn structural_passed(&self) -> bool {
        self.discrepancies.iter().all(|d| !d.compared.starts_with("structural"))
    }
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

fn is_mathematical(e: &Error) -> bool {
    matches!(e, Error::NonRealRoot { .. } | Error::CancellationImpossible { .. })
}

/// Runs both flavors against the eigensolver. Errors only for invalid
/// instances; every disagreement is reported, never raised.
pub fn audit(instance: &Instance, tol: f64) -> Result<AuditReport> {
    let a = subdivided_adjacency(instance)?;
    let oracle = spectra::eigenvalues(&a);
    let theorem = instance.theorem();
    let params = instance.params();
    let mut discrepancies = Vec::new();
    let report = |compared: &str, dev: f64, clause: &str, piece: &str, note: String| DiscrepancyReport {
        theorem,
        params: params.clone(),
        compared: compared.to_string(),
        max_deviation: finite(dev),
        clause: clause.to_string(),
        piece: piece.to_string(),
        note,
    };

    let structural = match structural::pieces(instance) {
        Ok(pieces) => Some(PredictedSpectrum {
            theorem,
            flavor: Flavor::Structural,
            params: params.clone(),
            pieces,
        }),
        Err(e) if is_mathematical(&e) => {
            discrepancies.push(report("structural vs oracle", f64::INFINITY, "-", "-", e.to_string()));
            None
        }
        Err(e) => return Err(e),
    };
    let closed = match closed::pieces(instance, RootMode::Lenient) {
        Ok(pieces) => Some(PredictedSpectrum {
            theorem,
            flavor: Flavor::ClosedForm,
            params: params.clone(),
            pieces,
        }),
        Err(e) if is_mathematical(&e) => {
            discrepancies.push(report("closed_form vs structural", f64::INFINITY, "-", "-", e.to_string()));
            None
        }
        Err(e) => return Err(e),
    };

    let s_flat = structural.as_ref().map(PredictedSpectrum::flatten);
    let c_flat = closed.as_ref().map(PredictedSpectrum::flatten);
    let dev = |x: Option<&SpectrumMultiset>, y: &SpectrumMultiset| {
        x.map(|x| multiset_equal(x.values(), y.values(), tol).max_deviation)
            .unwrap_or(f64::INFINITY)
    };
    let structural_vs_oracle = dev(s_flat.as_ref(), &oracle);
    let closed_vs_oracle = dev(c_flat.as_ref(), &oracle);
    let closed_vs_structural = match (&c_flat, &s_flat) {
        (Some(c), Some(s)) => dev(Some(c), s),
        _ => f64::INFINITY,
    };

    if let Some(s) = &structural {
        if structural_vs_oracle > tol {
            let (clause, piece, note) = blame(s, &oracle);
            discrepancies.push(report("structural vs oracle", structural_vs_oracle, &clause, &piece, note));
        }
    }
    if let (Some(c), Some(s)) = (&closed, &s_flat) {
        let worst = closed_vs_oracle.max(closed_vs_structural);
        if worst > tol {
            let (clause, piece, note) = blame(c, s);
            discrepancies.push(report("closed_form vs structural", worst, &clause, &piece, note));
        }
    }

    Ok(AuditReport {
        theorem,
        params,
        order: a.order(),
        tolerance: tol,
        structural_vs_oracle: finite(structural_vs_oracle),
        closed_vs_oracle: finite(closed_vs_oracle),
        closed_vs_structural: finite(closed_vs_structural),
        discrepancies,
    })
}

/// Distance from each value of the piece to the nearest reference value.
fn piece_deviation(p: &Piece, reference: &[f64]) -> f64 {
    p.values
        .iter()
        .map(|v| reference.iter().map(|w| (v - w).abs()).fold(f64::INFINITY, f64::min))
        .fold(0.0, f64::max)
}

/// Names the clause responsible for a mismatch: the piece whose values lie
/// farthest from the reference, or failing that the clause whose value
/// count is off.
fn blame(prediction: &PredictedSpectrum, reference: &SpectrumMultiset) -> (String, String, String) {
    let worst = prediction
        .pieces
        .iter()
        .map(|p| (p, piece_deviation(p, reference.values())))
        .max_by(|a, b| a.1.total_cmp(&b.1));
    if let Some((p, d)) = worst {
        if d > CLAUSE_WINDOW {
            let what = match &p.polynomial {
                Some(poly) => format!("roots of {poly}"),
                None => "value".to_string(),
            };
            let mut note = format!(
                "clause ({}) {}: {} lies {:.3e} from the nearest reference eigenvalue",
                p.clause, p.label, what, d
            );
            if p.non_real {
                note.push_str("; the polynomial has non-real roots");
            }
            return (p.clause.clone(), p.label.clone(), note);
        }
    }
    let note = format!(
        "every value is near a reference eigenvalue but the multisets differ ({} predicted, {} reference)",
        prediction.len(),
        reference.len()
    );
    let clause = prediction
        .pieces
        .iter()
        .find(|p| p.multiplicity > 1 || p.cancelled > 0)
        .map(|p| p.clause.clone())
        .unwrap_or_else(|| "-".into());
    (clause, "multiplicity".into(), note)
}

/// Printed eigenvalue checked by counting eigensolver output near it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClauseCount {
    pub clause: String,
    pub value: f64,
    pub printed_multiplicity: usize,
    /// Structural values inside the window, including other pieces that
    /// land on the same value.
    pub expected: usize,
    pub observed: usize,
}

impl ClauseCount {
    pub fn holds(&self) -> bool {
        self.observed == self.expected && self.expected >= self.printed_multiplicity
    }
}

/// Counts for every printed single-value clause of the instance.
pub fn clause_counts(instance: &Instance) -> Result<Vec<ClauseCount>> {
    let oracle = spectra::eigenvalues(&subdivided_adjacency(instance)?);
    let printed = closed::pieces(instance, RootMode::Lenient)?;
    let predicted = SpectrumMultiset::new(
        super::predict(instance, Flavor::Structural)?
            .flatten()
            .values()
            .to_vec(),
    );
    let mut out: Vec<ClauseCount> = Vec::new();
    for p in printed.iter().filter(|p| p.source == Source::PrintedValue && p.values.len() == 1) {
        let value = p.values[0];
        if let Some(c) = out.iter_mut().find(|c| c.clause == p.clause) {
            c.printed_multiplicity += p.multiplicity;
            continue;
        }
        out.push(ClauseCount {
            clause: p.clause.clone(),
            value,
            printed_multiplicity: p.multiplicity,
            expected: predicted.count_near(value, CLAUSE_WINDOW),
            observed: oracle.count_near(value, CLAUSE_WINDOW),
        });
    }
    Ok(out)
}

/// Deviation of the t1 quadratics from the eigensolver under both readings
/// of the eigenvalue input: codegree matrix or normalized adjacency.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConventionCheck {
    pub instance: String,
    pub codegree_deviation: f64,
    pub normalized_deviation: f64,
}

/// Runs the t1 quadratics on both eigenvalue inputs. Values of smallest
/// magnitude are dropped when `m < n`, in place of the cancelled zeros.
pub fn convention_check(name: &str, h: &crate::hypergraph::Hypergraph) -> Result<ConventionCheck> {
    let (k, r) = super::require_regular_uniform(h)?;
    let oracle = spectra::eigenvalues(&crate::subdivision::subdivide(h).hypergraph.adjacency_matrix()?);
    let assemble = |input: &SpectrumMultiset| -> Result<f64> {
        let mut values = Vec::new();
        for &lambda in input.values() {
            values.extend(closed::t1_quadratic(k, r, lambda).real_roots()?);
        }
        if h.m() >= h.n() {
            values.extend(std::iter::repeat_n(0.0, h.m() - h.n()));
        } else {
            values.sort_by(|a, b| a.abs().total_cmp(&b.abs()));
            values.drain(..h.n() - h.m());
        }
        Ok(multiset_equal(&values, oracle.values(), 0.0).max_deviation)
    };
    Ok(ConventionCheck {
        instance: name.to_string(),
        codegree_deviation: assemble(&spectra::eigenvalues(&h.codegree_matrix()))?,
        normalized_deviation: assemble(&spectra::eigenvalues(&h.adjacency_matrix()?))?,
    })
}
