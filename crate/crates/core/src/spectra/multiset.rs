use serde::{Deserialize, Serialize};

pub const DEFAULT_GROUPING_TOL: f64 = 1e-8;

/// Eigenvalue multiset, sorted descending. Comparisons use the sorted list;
/// the grouped view is for display.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumMultiset {
    values: Vec<f64>,
    tolerance: f64,
}

impl SpectrumMultiset {
    pub fn new(mut values: Vec<f64>) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        Self {
            values,
            tolerance: DEFAULT_GROUPING_TOL,
        }
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// `(representative, multiplicity)` pairs. A new group starts whenever the
    /// gap to the previous value exceeds the tolerance; the representative is
    /// the group mean.
    pub fn grouped(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        let mut sum = 0.0;
        let mut prev: Option<f64> = None;
        for &v in &self.values {
            match prev {
                Some(p) if p - v <= self.tolerance => {
                    sum += v;
                    out.last_mut().expect("open group").1 += 1;
                }
                _ => {
                    if let Some(last) = out.last_mut() {
                        last.0 = sum / last.1 as f64;
                    }
                    out.push((v, 1));
                    sum = v;
                }
            }
            prev = Some(v);
        }
        if let Some(last) = out.last_mut() {
            last.0 = sum / last.1 as f64;
        }
        out
    }

    /// Number of values within `window` of `target`.
    pub fn count_near(&self, target: f64, window: f64) -> usize {
        self.values.iter().filter(|v| (*v - target).abs() <= window).count()
    }
}

/// Outcome of a sorted-list comparison.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub equal: bool,
    /// `f64::INFINITY` when the lengths differ.
    pub max_deviation: f64,
}

/// Compares two multisets element-wise after sorting both descending.
pub fn multiset_equal(a: &[f64], b: &[f64], tol: f64) -> Comparison {
    if a.len() != b.len() {
        return Comparison {
            equal: false,
            max_deviation: f64::INFINITY,
        };
    }
    let sa = SpectrumMultiset::new(a.to_vec());
    let sb = SpectrumMultiset::new(b.to_vec());
    let max_deviation = sa
        .values
        .iter()
        .zip(&sb.values)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max);
    Comparison {
        equal: max_deviation <= tol,
        max_deviation,
    }
}
