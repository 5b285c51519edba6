//! Python bindings for the `nonforesty` crate.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use nonforesty::constructions::{Context, GadgetName};
use nonforesty::oracle::VerifyOptions;

fn value_error(e: nonforesty::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Simple undirected graph on vertices `0..order`.
#[pyclass(name = "Graph", module = "nonforesty", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq, Eq)]
pub struct PyGraph {
    inner: nonforesty::Graph,
}

impl From<nonforesty::Graph> for PyGraph {
    fn from(inner: nonforesty::Graph) -> Self {
        PyGraph { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (order, edges = Vec::new()))]
    fn new(order: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        nonforesty::Graph::from_edges(order, &edges).map(Into::into).map_err(value_error)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        nonforesty::parse_graph6(text).map(Into::into).map_err(value_error)
    }

    #[staticmethod]
    fn complete(order: usize) -> PyResult<Self> {
        nonforesty::Graph::complete(order).map(Into::into).map_err(value_error)
    }

    #[staticmethod]
    fn cycle(order: usize) -> PyResult<Self> {
        nonforesty::Graph::cycle(order).map(Into::into).map_err(value_error)
    }

    #[staticmethod]
    fn petersen() -> Self {
        nonforesty::Graph::petersen().into()
    }

    fn to_graph6(&self) -> String {
        nonforesty::serialize_graph6(&self.inner)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.order() {
            return Err(value_error(nonforesty::Error::VertexOutOfRange { vertex: v, order: self.inner.order() }));
        }
        Ok(self.inner.neighbors(v).collect())
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.order() && v < self.inner.order() && self.inner.has_edge(u, v)
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_forest(&self) -> bool {
        nonforesty::is_forest(&self.inner)
    }

    fn is_locally_nonforesty(&self) -> bool {
        nonforesty::is_locally_nonforesty(&self.inner)
    }

    fn is_locally_foresty(&self) -> bool {
        nonforesty::is_locally_foresty(&self.inner)
    }

    fn wheel_hubs(&self) -> Vec<usize> {
        nonforesty::wheel_hubs(&self.inner)
    }

    fn local_subgraph(&self, v: usize) -> PyResult<PyGraph> {
        nonforesty::local_subgraph(&self.inner, v).map(Into::into).map_err(value_error)
    }

    fn vertex_connectivity(&self) -> PyResult<usize> {
        nonforesty::vertex_connectivity(&self.inner).map_err(value_error)
    }

    fn is_k_connected(&self, k: usize) -> bool {
        nonforesty::is_k_connected(&self.inner, k)
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph(order={}, size={})", self.inner.order(), self.inner.size())
    }
}

#[pyclass(name = "BlockDecomposition", module = "nonforesty", frozen, get_all)]
pub struct PyBlocks {
    blocks: Vec<Vec<usize>>,
    cut_vertices: Vec<usize>,
    /// Block order to number of blocks of that order.
    histogram: BTreeMap<usize, usize>,
}

#[pymethods]
impl PyBlocks {
    fn to_tsv(&self) -> String {
        let d = nonforesty::BlockDecomposition {
            blocks: self.blocks.clone(),
            cut_vertices: self.cut_vertices.clone(),
            histogram: self.histogram.clone(),
        };
        d.to_tsv()
    }

    fn __repr__(&self) -> String {
        format!("BlockDecomposition(blocks={}, cut_vertices={})", self.blocks.len(), self.cut_vertices.len())
    }
}

#[pyclass(name = "MinimalityReport", module = "nonforesty", frozen, get_all)]
pub struct PyReport {
    k: usize,
    n: usize,
    budget: usize,
    graphs_examined: u64,
    witness: Option<PyGraph>,
    certified: bool,
    elapsed_seconds: f64,
}

#[pymethods]
impl PyReport {
    fn __repr__(&self) -> String {
        format!(
            "MinimalityReport(k={}, n={}, budget={}, graphs_examined={}, witness={}, certified={})",
            self.k,
            self.n,
            self.budget,
            self.graphs_examined,
            self.witness.as_ref().map_or("None".into(), PyGraph::to_graph6),
            if self.certified { "True" } else { "False" },
        )
    }
}

#[pyclass(name = "Gadget", module = "nonforesty", frozen, get_all)]
pub struct PyGadget {
    name: String,
    context: String,
    graph: PyGraph,
    /// Ports `(x, y, z, w)`.
    ports: (usize, usize, usize, usize),
}

#[pymethods]
impl PyGadget {
    fn __repr__(&self) -> String {
        format!("Gadget(name={:?}, context={:?}, ports={:?})", self.name, self.context, self.ports)
    }
}

#[pyfunction]
fn h(n: usize) -> PyResult<usize> {
    nonforesty::h(n).map_err(value_error)
}

#[pyfunction]
fn g(n: usize) -> PyResult<usize> {
    nonforesty::g(n).map_err(value_error)
}

#[pyfunction]
fn p(n: usize) -> PyResult<usize> {
    nonforesty::p(n).map_err(value_error)
}

/// Returns `(value, regime)`.
#[pyfunction]
fn f(k: usize, n: usize) -> PyResult<(usize, &'static str)> {
    let r = nonforesty::f(k, n).map_err(value_error)?;
    Ok((r.value, r.regime.as_str()))
}

/// `7(n - 1)/3` as `(numerator, denominator)` in lowest terms.
#[pyfunction]
fn conjecture1_bound(n: usize) -> (u64, u64) {
    let r = nonforesty::conjecture1_bound(n);
    (*r.numer(), *r.denom())
}

#[pyfunction]
fn conjecture1_satisfied(graph: &PyGraph) -> bool {
    nonforesty::conjecture1_satisfied(&graph.inner)
}

#[pyfunction]
fn build_extremal(k: usize, n: usize) -> PyResult<PyGraph> {
    nonforesty::build_extremal(k, n).map(Into::into).map_err(value_error)
}

#[pyfunction]
fn harary(k: usize, n: usize) -> PyResult<PyGraph> {
    nonforesty::harary(k, n).map(Into::into).map_err(value_error)
}

#[pyfunction]
fn block_decomposition(graph: &PyGraph) -> PyResult<PyBlocks> {
    let d = nonforesty::block_decomposition(&graph.inner).map_err(value_error)?;
    Ok(PyBlocks { blocks: d.blocks, cut_vertices: d.cut_vertices, histogram: d.histogram })
}

/// Budget defaults to `f(k, n) - 1`. Runs without holding the GIL.
#[pyfunction]
#[pyo3(signature = (k, n, budget = None, jobs = None, uncertified = false))]
fn verify_minimality(
    py: Python<'_>,
    k: usize,
    n: usize,
    budget: Option<usize>,
    jobs: Option<usize>,
    uncertified: bool,
) -> PyResult<PyReport> {
    let budget = match budget {
        Some(b) => b,
        None => nonforesty::f(k, n).map_err(value_error)?.value - 1,
    };
    let opts = VerifyOptions { jobs, allow_uncertified_order: uncertified, cancel: None };
    let r = py.detach(|| nonforesty::verify_minimality(k, n, budget, &opts)).map_err(value_error)?;
    Ok(PyReport {
        k: r.k,
        n: r.n,
        budget: r.budget,
        graphs_examined: r.graphs_examined,
        witness: r.qualifying_witness.map(Into::into),
        certified: r.certified,
        elapsed_seconds: r.elapsed.as_secs_f64(),
    })
}

#[pyfunction]
fn lemma1_scan(py: Python<'_>, n: usize) -> PyResult<u64> {
    py.detach(|| nonforesty::lemma1_scan(n)).map_err(value_error)
}

#[pyfunction]
fn search_gadget(name: &str, context: &str) -> PyResult<PyGadget> {
    let name: GadgetName = name.parse().map_err(value_error)?;
    let context: Context = context.parse().map_err(value_error)?;
    let found = nonforesty::search_gadget(name, context).map_err(value_error)?;
    let [x, y, z, w] = found.ports;
    Ok(PyGadget {
        name: found.name.to_string(),
        context: found.context.to_string(),
        graph: found.graph.into(),
        ports: (x, y, z, w),
    })
}

#[pymodule]
#[pyo3(name = "nonforesty")]
pub fn nonforesty_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyBlocks>()?;
    m.add_class::<PyReport>()?;
    m.add_class::<PyGadget>()?;
    m.add_function(wrap_pyfunction!(h, m)?)?;
    m.add_function(wrap_pyfunction!(g, m)?)?;
    m.add_function(wrap_pyfunction!(p, m)?)?;
    m.add_function(wrap_pyfunction!(f, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture1_bound, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture1_satisfied, m)?)?;
    m.add_function(wrap_pyfunction!(build_extremal, m)?)?;
    m.add_function(wrap_pyfunction!(harary, m)?)?;
    m.add_function(wrap_pyfunction!(block_decomposition, m)?)?;
    m.add_function(wrap_pyfunction!(verify_minimality, m)?)?;
    m.add_function(wrap_pyfunction!(lemma1_scan, m)?)?;
    m.add_function(wrap_pyfunction!(search_gadget, m)?)?;
    Ok(())
}
