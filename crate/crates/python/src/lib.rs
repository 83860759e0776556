//! Python bindings: hypergraphs, subdivision, spectra, predictions, audits
//! and cospectral pairs. Structured results cross as native dicts and lists.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use hypersub::cospectral::{self, DEFAULT_BUDGET};
use hypersub::families::FamilySpec;
use hypersub::{io, Flavor, Instance, Theorem};

fn err(e: hypersub::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A serializable value as the matching Python object.
fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(name = "Hypergraph", module = "hypersub_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyHypergraph {
    inner: hypersub::Hypergraph,
}

impl From<hypersub::Hypergraph> for PyHypergraph {
    fn from(inner: hypersub::Hypergraph) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyHypergraph {
    #[new]
    fn new(n: usize, edges: Vec<Vec<usize>>) -> PyResult<Self> {
        hypersub::Hypergraph::new(n, edges).map(Self::from).map_err(err)
    }

    /// Reads the JSON document written by `to_json` or the command line.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::read_hypergraph(text).map(Self::from).map_err(err)
    }

    fn to_json(&self) -> String {
        io::write_hypergraph(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn edges(&self) -> Vec<Vec<usize>> {
        self.inner.edges().to_vec()
    }

    fn uniformity(&self) -> Option<usize> {
        self.inner.uniformity()
    }

    fn regularity(&self) -> Option<usize> {
        self.inner.regularity()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    /// Dense adjacency matrix, rows of floats.
    fn adjacency(&self) -> PyResult<Vec<Vec<f64>>> {
        self.inner.adjacency_matrix().map(|a| a.to_rows()).map_err(err)
    }

    fn codegree(&self) -> Vec<Vec<f64>> {
        self.inner.codegree_matrix().to_rows()
    }

    fn subdivide(&self) -> Self {
        hypersub::subdivide(&self.inner).hypergraph.into()
    }

    /// Adjacency eigenvalues in non-increasing order.
    fn eigenvalues(&self) -> PyResult<Vec<f64>> {
        let a = self.inner.adjacency_matrix().map_err(err)?;
        Ok(hypersub::eigenvalues(&a).values().to_vec())
    }

    /// Eigenvalues grouped within `tol` as `(value, multiplicity)` pairs.
    #[pyo3(signature = (tol = 1e-9))]
    fn spectrum(&self, tol: f64) -> PyResult<Vec<(f64, usize)>> {
        let a = self.inner.adjacency_matrix().map_err(err)?;
        Ok(hypersub::eigenvalues(&a).with_tolerance(tol).grouped())
    }

    /// Relabeled copy under a seeded permutation, plus the permutation.
    fn shuffled(&self, seed: u64) -> (Self, Vec<usize>) {
        let (h, perm) = self.inner.shuffled(seed);
        (h.into(), perm)
    }

    fn __repr__(&self) -> String {
        format!("Hypergraph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// Builds a named family, e.g. `family("hyperflower", "l=4,s=2,t=3")`.
#[pyfunction]
#[pyo3(signature = (name, params = ""))]
fn family(name: &str, params: &str) -> PyResult<PyHypergraph> {
    FamilySpec::parse(name, params)
        .and_then(|f| f.build())
        .map(PyHypergraph::from)
        .map_err(err)
}

fn instance(theorem: &str, params: &str, input: Option<&PyHypergraph>) -> PyResult<Instance> {
    let theorem: Theorem = theorem.parse().map_err(err)?;
    Instance::parse(theorem, params, input.map(|h| h.inner.clone())).map_err(err)
}

/// Predicted spectrum of the subdivision, clause by clause.
#[pyfunction]
#[pyo3(signature = (theorem, params = "", input = None, flavor = "structural"))]
fn predict<'py>(
    py: Python<'py>,
    theorem: &str,
    params: &str,
    input: Option<PyRef<'py, PyHypergraph>>,
    flavor: &str,
) -> PyResult<Bound<'py, PyAny>> {
    let inst = instance(theorem, params, input.as_deref())?;
    let flavor: Flavor = flavor.parse().map_err(err)?;
    let p = hypersub::predict(&inst, flavor).map_err(err)?;
    to_py(py, &p)
}

/// Three-way audit of one grid point.
#[pyfunction]
#[pyo3(signature = (theorem, params = "", input = None, tol = 1e-6))]
fn audit<'py>(
    py: Python<'py>,
    theorem: &str,
    params: &str,
    input: Option<PyRef<'py, PyHypergraph>>,
    tol: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let inst = instance(theorem, params, input.as_deref())?;
    to_py(py, &hypersub::audit(&inst, tol).map_err(err)?)
}

/// `(equal, max_deviation)` for the two adjacency spectra.
#[pyfunction]
#[pyo3(signature = (first, second, tol = 1e-9))]
fn are_cospectral(first: &PyHypergraph, second: &PyHypergraph, tol: f64) -> PyResult<(bool, f64)> {
    let c = hypersub::are_cospectral(&first.inner, &second.inner, tol).map_err(err)?;
    Ok((c.equal, c.max_deviation))
}

/// `"isomorphic"`, `"non_isomorphic"` or `"undecided"`.
#[pyfunction]
#[pyo3(signature = (first, second, budget = DEFAULT_BUDGET))]
fn are_isomorphic(first: &PyHypergraph, second: &PyHypergraph, budget: u64) -> String {
    match hypersub::are_isomorphic(&first.inner, &second.inner, budget) {
        hypersub::IsoVerdict::Isomorphic => "isomorphic",
        hypersub::IsoVerdict::NonIsomorphic => "non_isomorphic",
        hypersub::IsoVerdict::Undecided { .. } => "undecided",
    }
    .into()
}

/// Subdivides a cospectral pair of regular uniform hypergraphs.
#[pyfunction]
#[pyo3(signature = (first, second, tol = 1e-8, budget = DEFAULT_BUDGET))]
fn forge_t8<'py>(
    py: Python<'py>,
    first: &PyHypergraph,
    second: &PyHypergraph,
    tol: f64,
    budget: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let cert = cospectral::cospectral_pair_t8(&first.inner, &second.inner, tol, budget).map_err(err)?;
    to_py(py, &cert)
}

/// Subdivides the k-th powers of a cospectral pair of regular graphs.
#[pyfunction]
#[pyo3(signature = (first, second, k, tol = 1e-7, budget = DEFAULT_BUDGET))]
fn forge_t7<'py>(
    py: Python<'py>,
    first: &PyHypergraph,
    second: &PyHypergraph,
    k: usize,
    tol: f64,
    budget: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let cert = cospectral::cospectral_pair_t7(&first.inner, &second.inner, k, tol, budget).map_err(err)?;
    to_py(py, &cert)
}

#[pymodule]
fn hypersub_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHypergraph>()?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(predict, m)?)?;
    m.add_function(wrap_pyfunction!(audit, m)?)?;
    m.add_function(wrap_pyfunction!(are_cospectral, m)?)?;
    m.add_function(wrap_pyfunction!(are_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(forge_t8, m)?)?;
    m.add_function(wrap_pyfunction!(forge_t7, m)?)?;
    Ok(())
}
