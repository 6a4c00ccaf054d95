//! Python bindings. Counts come back as Python ints and exact rationals as
//! `fractions.Fraction`; library errors raise `ValueError`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyTuple;

use shellcount::bigmath::{Nat, Rat};
use shellcount::commands::{self, CountOptions};
use shellcount::oracle::DEFAULT_MAX_DP_EDGES;
use shellcount::{bounds, closed_forms, graph, oracle, tree, verify};

fn err(e: shellcount::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, r: &Rat) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((r.numer().clone(), r.denom().clone()))
}

/// A simple undirected graph on vertices `0..n`.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Graph(graph::Graph);

#[pymethods]
impl Graph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        graph::Graph::from_edges(n, edges).map(Graph).map_err(err)
    }

    /// Parses the edge-list text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        graph::parse_edge_list(text).map(Graph).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }

    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    fn is_connected(&self) -> bool {
        self.0.is_connected()
    }

    fn is_tree(&self) -> bool {
        self.0.is_tree()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        self.0.check_vertex(v).map_err(err)?;
        Ok(self.0.degree(v))
    }

    /// Family name such as `"path"` or `"complete_bipartite(2,3)"`.
    fn classify(&self) -> String {
        graph::classify(&self.0).kind.to_string()
    }

    fn to_edge_list(&self) -> String {
        self.0.to_edge_list()
    }

    fn __len__(&self) -> usize {
        self.0.edge_count()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Graph({}, {:?})", self.0.n(), self.0.edges())
    }
}

#[pyfunction]
fn path_graph(n: usize) -> Graph {
    Graph(graph::path_graph(n))
}

#[pyfunction]
fn star_graph(n: usize) -> Graph {
    Graph(graph::star_graph(n))
}

#[pyfunction]
fn cycle_graph(n: usize) -> Graph {
    Graph(graph::cycle_graph(n))
}

#[pyfunction]
fn complete_graph(n: usize) -> Graph {
    Graph(graph::complete_graph(n))
}

#[pyfunction]
fn complete_bipartite_graph(m: usize, n: usize) -> Graph {
    Graph(graph::complete_bipartite_graph(m, n))
}

#[pyfunction]
#[pyo3(signature = (n, seed=0))]
fn random_tree(n: usize, seed: u64) -> Graph {
    Graph(graph::random_tree(n, seed))
}

/// Every labeled tree on `n` vertices, in Prüfer order.
#[pyfunction]
fn all_labeled_trees(n: usize) -> PyResult<Vec<Graph>> {
    Ok(graph::all_labeled_trees(n).map_err(err)?.map(Graph).collect())
}

#[pyfunction]
fn mid_spider(n: usize, l: usize) -> PyResult<Graph> {
    bounds::mid_spider(n, l).map(Graph).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, max_edges=DEFAULT_MAX_DP_EDGES))]
fn count_shellings_dp(g: &Graph, max_edges: usize) -> PyResult<Nat> {
    oracle::count_shellings_dp_with(&g.0, max_edges).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (g, v, max_edges=DEFAULT_MAX_DP_EDGES))]
fn count_rooted_shellings_dp(g: &Graph, v: usize, max_edges: usize) -> PyResult<Nat> {
    oracle::count_rooted_shellings_dp_with(&g.0, v, max_edges).map_err(err)
}

/// Returns `(shellings, total)`: up to `limit` shellings as lists of edge
/// indices, and the full count.
#[pyfunction]
#[pyo3(signature = (g, limit=0))]
fn enumerate_shellings(g: &Graph, limit: usize) -> PyResult<(Vec<Vec<usize>>, u64)> {
    let e = oracle::enumerate_shellings(&g.0, limit).map_err(err)?;
    Ok((e.shellings, e.total))
}

#[pyfunction]
fn complete_graph_count(n: u64) -> PyResult<Nat> {
    closed_forms::complete_graph_count(n).map_err(err)
}

#[pyfunction]
fn complete_bipartite_count(m: u64, n: u64) -> PyResult<Nat> {
    closed_forms::complete_bipartite_count(m, n).map_err(err)
}

/// Returns `(count, inner_sum, terms)` with the inner sum as a Fraction.
#[pyfunction]
#[pyo3(signature = (m, n, max_terms=closed_forms::DEFAULT_MAX_STANLEY_TERMS))]
fn stanley_sum_count<'py>(py: Python<'py>, m: u64, n: u64, max_terms: u64) -> PyResult<Bound<'py, PyTuple>> {
    let s = closed_forms::stanley_sum_count_with(m, n, max_terms).map_err(err)?;
    let inner = fraction(py, &s.inner_sum)?;
    PyTuple::new(py, [s.count.into_pyobject(py)?.into_any(), inner, s.terms.into_pyobject(py)?.into_any()])
}

#[pyfunction]
fn hook_count(g: &Graph, root: usize) -> PyResult<Nat> {
    Ok(tree::hook_count(&tree::root_tree(&g.0, root).map_err(err)?))
}

#[pyfunction]
fn all_root_counts(g: &Graph) -> PyResult<Vec<Nat>> {
    tree::all_root_counts(&g.0).map_err(err)
}

#[pyfunction]
fn tree_count(g: &Graph) -> PyResult<Nat> {
    tree::tree_count(&g.0).map_err(err)
}

/// Returns `(bound, equality_predicted)`.
#[pyfunction]
fn degree_lower_bound(g: &Graph) -> PyResult<(Nat, bool)> {
    bounds::degree_lower_bound(&g.0).map_err(err)
}

#[pyfunction]
fn weight_bound_coefficient(g: &Graph, v: usize) -> PyResult<Nat> {
    bounds::weight_bound_coefficient(&g.0, v).map_err(err)
}

#[pyfunction]
fn diameter_upper_bound_printed(py: Python<'_>, n: u64, l: u64) -> PyResult<Bound<'_, PyAny>> {
    fraction(py, &bounds::diameter_upper_bound_printed(n, l).map_err(err)?)
}

/// The JSON report of `shellcount count`.
#[pyfunction]
#[pyo3(signature = (g, brute=false, crosscheck=true, max_dp_edges=DEFAULT_MAX_DP_EDGES))]
fn count_report(g: &Graph, brute: bool, crosscheck: bool, max_dp_edges: usize) -> PyResult<String> {
    let opts = CountOptions { brute, crosscheck, max_dp_edges };
    Ok(commands::cmd_count(&g.0, opts).map_err(err)?.to_json())
}

/// The JSON report of `shellcount bounds`.
#[pyfunction]
fn bounds_report(g: &Graph) -> PyResult<String> {
    Ok(commands::cmd_bounds(&g.0).map_err(err)?.to_json())
}

/// Runs a verification suite and returns its JSON report.
#[pyfunction]
#[pyo3(signature = (suite, max_n=None))]
fn verify_suite(py: Python<'_>, suite: &str, max_n: Option<usize>) -> PyResult<String> {
    let suite: verify::Suite = suite.parse().map_err(err)?;
    let report = py.detach(|| commands::cmd_verify(suite, max_n)).map_err(err)?;
    Ok(report.to_json())
}

#[pymodule]
fn shellcount_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(path_graph, m)?)?;
    m.add_function(wrap_pyfunction!(star_graph, m)?)?;
    m.add_function(wrap_pyfunction!(cycle_graph, m)?)?;
    m.add_function(wrap_pyfunction!(complete_graph, m)?)?;
    m.add_function(wrap_pyfunction!(complete_bipartite_graph, m)?)?;
    m.add_function(wrap_pyfunction!(random_tree, m)?)?;
    m.add_function(wrap_pyfunction!(all_labeled_trees, m)?)?;
    m.add_function(wrap_pyfunction!(mid_spider, m)?)?;
    m.add_function(wrap_pyfunction!(count_shellings_dp, m)?)?;
    m.add_function(wrap_pyfunction!(count_rooted_shellings_dp, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_shellings, m)?)?;
    m.add_function(wrap_pyfunction!(complete_graph_count, m)?)?;
    m.add_function(wrap_pyfunction!(complete_bipartite_count, m)?)?;
    m.add_function(wrap_pyfunction!(stanley_sum_count, m)?)?;
    m.add_function(wrap_pyfunction!(hook_count, m)?)?;
    m.add_function(wrap_pyfunction!(all_root_counts, m)?)?;
    m.add_function(wrap_pyfunction!(tree_count, m)?)?;
    m.add_function(wrap_pyfunction!(degree_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(weight_bound_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(diameter_upper_bound_printed, m)?)?;
    m.add_function(wrap_pyfunction!(count_report, m)?)?;
    m.add_function(wrap_pyfunction!(bounds_report, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    Ok(())
}
