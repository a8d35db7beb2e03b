//! Python module `szeged`: graphs, the seven indices, named families,
//! rewrites with their predicted changes, and exhaustive searches.
//!
//! Index values come back as `fractions.Fraction`; structured reports come
//! back as plain dicts with the same layout as the command-line JSON.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use serde::Serialize;
use szeged_core::enumerate::{minimize_index_with, verify_theorem1, SearchOptions};
use szeged_core::{
    canonical_code, check, decompose_graph, from_edge_list, from_graph6, index_suite, to_graph6, FamilyParams, IndexKind,
    PairCheck, Rewrite, UnicyclicSpec, Q4,
};

create_exception!(szeged, SzegedError, PyValueError, "Raised for invalid graphs, parameters or descriptions.");

fn err(e: szeged_core::Error) -> PyErr {
    SzegedError::new_err(format!("{}: {e}", e.kind()))
}

fn fraction<'py>(py: Python<'py>, v: Q4) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((v.quarters(), 4))
}

fn to_dict<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| SzegedError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn index_kind(name: &str) -> PyResult<IndexKind> {
    name.parse().map_err(err)
}

/// A simple connected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "szeged", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyGraph {
    inner: szeged_core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph { inner: szeged_core::Graph::new(n, &edges).map_err(err)? })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: from_graph6(text).map_err(err)? })
    }

    /// Parses the `n m` header followed by `m` lines `u v`.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: from_edge_list(text).map_err(err)? })
    }

    /// Builds a family member from a description such as `"broom k1=2 k2=3 i=1"`.
    #[staticmethod]
    fn family(spec: &str) -> PyResult<Self> {
        let params: FamilyParams = spec.parse().map_err(err)?;
        Ok(PyGraph { inner: params.build().map_err(err)? })
    }

    fn graph6(&self) -> String {
        to_graph6(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn diameter(&self) -> usize {
        self.inner.diameter()
    }

    /// Length of the unique cycle, or `None` for a tree.
    fn girth(&self) -> PyResult<Option<usize>> {
        if self.inner.is_tree() {
            return Ok(None);
        }
        Ok(Some(self.inner.unique_cycle().map_err(err)?.g()))
    }

    /// Hex canonical code; equal exactly for isomorphic graphs.
    fn canonical_code(&self) -> PyResult<String> {
        Ok(canonical_code(&self.inner).map_err(err)?.to_hex())
    }

    /// All seven indices as a dict of `Fraction`s.
    fn indices<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let suite = index_suite(&self.inner);
        let out = PyDict::new(py);
        for kind in IndexKind::ALL {
            out.set_item(kind.name(), fraction(py, kind.of(&suite))?)?;
        }
        Ok(out)
    }

    #[pyo3(signature = (kind = "Sz_e_star"))]
    fn index<'py>(&self, py: Python<'py>, kind: &str) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, index_kind(kind)?.evaluate(&self.inner))
    }

    /// Every route to the edge Szeged quantities of a unicyclic graph.
    fn decompose<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        to_dict(py, &decompose_graph(&self.inner).map_err(err)?)
    }

    /// Applies a rewrite such as `"shift_pendants at=1 k=1"` and checks its
    /// predicted change of `index`.
    #[pyo3(signature = (rewrite, index = "Sz_e_star"))]
    fn transform<'py>(&self, py: Python<'py>, rewrite: &str, index: &str) -> PyResult<Bound<'py, PyAny>> {
        let r: Rewrite = rewrite.parse().map_err(err)?;
        let spec = UnicyclicSpec::from_graph(&self.inner).map_err(err)?;
        to_dict(py, &check(&spec, &r, index_kind(index)?).map_err(err)?)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", to_graph6(&self.inner))
    }
}

/// Compares a named pair such as `"second_diameter n=17"`.
#[pyfunction]
#[pyo3(signature = (description, index = "Sz_e_star"))]
fn pair<'py>(py: Python<'py>, description: &str, index: &str) -> PyResult<Bound<'py, PyAny>> {
    let p: PairCheck = description.parse().map_err(err)?;
    to_dict(py, &p.check(index_kind(index)?).map_err(err)?)
}

/// Exhaustive minimisation over unicyclic graphs of order `n` and diameter `d`.
#[pyfunction]
#[pyo3(signature = (n, d, index = "Sz_e_star", workers = None, girth = None))]
fn minimize<'py>(
    py: Python<'py>,
    n: usize,
    d: usize,
    index: &str,
    workers: Option<usize>,
    girth: Option<usize>,
) -> PyResult<Bound<'py, PyAny>> {
    let kind = index_kind(index)?;
    let opts = SearchOptions { workers, checkpoint: None, girth };
    let report = py.detach(|| minimize_index_with(n, d, kind, &opts)).map_err(err)?;
    to_dict(py, &report.deterministic())
}

/// Compares exhaustive minimisers with the predicted extremal graphs for
/// every diameter at order `n >= 16`.
#[pyfunction]
#[pyo3(signature = (n, workers = None))]
fn verify_extremal<'py>(py: Python<'py>, n: usize, workers: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let opts = SearchOptions { workers, ..Default::default() };
    let report = py.detach(|| verify_theorem1(n, &opts)).map_err(err)?;
    to_dict(py, &report)
}

#[pymodule]
pub fn szeged(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add("SzegedError", m.py().get_type::<SzegedError>())?;
    m.add("INDICES", IndexKind::ALL.iter().map(|k| k.name()).collect::<Vec<_>>())?;
    m.add_function(wrap_pyfunction!(pair, m)?)?;
    m.add_function(wrap_pyfunction!(minimize, m)?)?;
    m.add_function(wrap_pyfunction!(verify_extremal, m)?)?;
    Ok(())
}
