//! Python bindings. Rationals cross the boundary as `fractions.Fraction`;
//! inputs may be `int`, `Fraction` or `"p/q"` strings. Floats are refused.

use edgecover_core::cover::{self, CoverCertificate, ExactConfig};
use edgecover_core::game::{self, Allocation};
use edgecover_core::graph::{self, Coalition, VertexId, WeightedGraph};
use edgecover_core::oracle::{self, OracleBudget};
use edgecover_core::rational::{self, Rational};
use edgecover_core::Error;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyTypeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyFloat, PyList};

create_exception!(
    edgecover,
    CapExceeded,
    PyException,
    "Instance exceeds a solver or oracle size cap."
);

fn to_py_err(err: Error) -> PyErr {
    if err.is_cap() {
        CapExceeded::new_err(err.to_string())
    } else {
        PyValueError::new_err(err.to_string())
    }
}

fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if obj.is_instance_of::<PyFloat>() {
        return Err(PyTypeError::new_err(
            "floats are not accepted; use int, Fraction or a 'p/q' string",
        ));
    }
    let text = obj.str()?.to_string();
    rational::parse(&text).ok_or_else(|| PyValueError::new_err(format!("not a rational: {text:?}")))
}

fn fraction<'py>(py: Python<'py>, value: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((rational::format(value),))
}

fn fractions<'py>(py: Python<'py>, values: &[Rational]) -> PyResult<Bound<'py, PyList>> {
    let items = values
        .iter()
        .map(|v| fraction(py, v))
        .collect::<PyResult<Vec<_>>>()?;
    PyList::new(py, items)
}

fn allocation_from(graph: &WeightedGraph, values: &Bound<'_, PyAny>) -> PyResult<Allocation> {
    let values = values
        .try_iter()?
        .map(|v| to_rational(&v?))
        .collect::<PyResult<Vec<_>>>()?;
    Allocation::for_graph(graph, values).map_err(to_py_err)
}

fn exact(max_edges: usize) -> ExactConfig {
    ExactConfig {
        max_candidate_edges: max_edges,
    }
}

/// A simple undirected graph with nonnegative rational edge weights.
#[pyclass(name = "Graph", module = "edgecover", frozen)]
struct PyGraph {
    inner: WeightedGraph,
}

#[pymethods]
impl PyGraph {
    /// `Graph(n, [(u, v, w), ...])`
    #[new]
    fn new(vertex_count: usize, edges: &Bound<'_, PyAny>) -> PyResult<Self> {
        let mut triples = Vec::new();
        for item in edges.try_iter()? {
            let (u, v, w): (usize, usize, Bound<'_, PyAny>) = item?.extract()?;
            triples.push((u, v, to_rational(&w)?));
        }
        let inner = WeightedGraph::new(vertex_count, triples).map_err(|e| to_py_err(e.into()))?;
        Ok(PyGraph { inner })
    }

    /// Parses the `n m` / `u v w` text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        let inner = graph::parse_graph(text.as_bytes()).map_err(|e| to_py_err(e.into()))?;
        Ok(PyGraph { inner })
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges<'py>(&self, py: Python<'py>) -> PyResult<Vec<(usize, usize, Bound<'py, PyAny>)>> {
        self.inner
            .edges()
            .iter()
            .map(|e| Ok((e.u, e.v, fraction(py, &e.weight)?)))
            .collect()
    }

    fn is_bipartite(&self) -> bool {
        matches!(
            graph::is_bipartite(&self.inner),
            graph::Bipartiteness::Bipartite { .. }
        )
    }

    /// Shortest odd cycle as a closed vertex list, or `None` if bipartite.
    fn shortest_odd_cycle(&self) -> Option<Vec<VertexId>> {
        graph::shortest_odd_cycle(&self.inner).map(|c| c.vertices)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(vertices={}, edges={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

fn cover_dict<'py>(
    py: Python<'py>,
    g: &WeightedGraph,
    cert: &CoverCertificate,
) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("kind", cert.kind.as_str())?;
    d.set_item("weight", fraction(py, &cert.weight)?)?;
    d.set_item("x", fractions(py, cert.vector.values())?)?;
    let support: Vec<(usize, usize)> = cert
        .vector
        .support()
        .iter()
        .map(|&e| (g.edge(e).u, g.edge(e).v))
        .collect();
    d.set_item("support", support)?;
    match &cert.witness {
        Some(w) => d.set_item("witness", fractions(py, w.values())?)?,
        None => d.set_item("witness", py.None())?,
    }
    Ok(d)
}

/// Minimum-weight integral cover of `coalition` (default: all vertices).
#[pyfunction]
#[pyo3(signature = (graph, coalition=None, max_edges=24))]
fn min_edge_cover<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    coalition: Option<Vec<VertexId>>,
    max_edges: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let g = &graph.inner;
    let s = match coalition {
        Some(vs) => Coalition::new(g, vs).map_err(|e| to_py_err(e.into()))?,
        None => Coalition::all(g),
    };
    let cert = cover::min_edge_cover_exact(g, &s, &exact(max_edges)).map_err(to_py_err)?;
    cover_dict(py, g, &cert)
}

/// Optimal half-integral fractional cover with its dual packing witness.
/// With `canonical=True` the half edges are rounded into disjoint odd cycles,
/// listed under `odd_cycles`.
#[pyfunction]
#[pyo3(signature = (graph, canonical=false))]
fn fractional_cover<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    canonical: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let g = &graph.inner;
    let mut cert = cover::half_integral_cover(g).map_err(to_py_err)?;
    if canonical {
        cert.vector = cover::canonicalize_to_odd_cycles(g, &cert.vector).map_err(to_py_err)?;
    }
    let d = cover_dict(py, g, &cert)?;
    if canonical {
        d.set_item(
            "odd_cycles",
            cover::odd_cycle_decomposition(g, &cert.vector),
        )?;
    }
    Ok(d)
}

/// Cost `c(S)` of a coalition.
#[pyfunction]
#[pyo3(signature = (graph, coalition, max_edges=24))]
fn coalition_cost<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    coalition: Vec<VertexId>,
    max_edges: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let g = &graph.inner;
    let s = Coalition::new(g, coalition).map_err(|e| to_py_err(e.into()))?;
    let cost = game::coalition_cost(g, &s, &exact(max_edges)).map_err(to_py_err)?;
    fraction(py, &cost)
}

/// Shortest odd cycle length `ell`, gap bound `rho = 1 + 1/ell`, and the cycle.
#[pyfunction]
fn integrality_gap<'py>(py: Python<'py>, graph: &PyGraph) -> PyResult<Bound<'py, PyDict>> {
    let gap = game::integrality_gap(&graph.inner);
    let d = PyDict::new(py);
    d.set_item("ell", gap.ell)?;
    d.set_item("rho", fraction(py, &gap.rho)?)?;
    d.set_item("cycle", gap.cycle.map(|c| c.vertices))?;
    Ok(d)
}

/// Allocation from the optimal packing LP, guaranteed in the
/// `ell/(ell+1)`-core. `grand_cost` and `ratio` are `None` when the exact
/// solver's cap is exceeded.
#[pyfunction]
#[pyo3(signature = (graph, max_edges=24))]
fn allocate<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    max_edges: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let r = game::allocate_alpha_core(&graph.inner, &exact(max_edges)).map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("allocation", fractions(py, r.allocation.values())?)?;
    d.set_item("ell", r.ell)?;
    d.set_item("alpha", fraction(py, &r.alpha)?)?;
    d.set_item("total", fraction(py, &r.total)?)?;
    d.set_item(
        "grand_cost",
        r.grand_cost.as_ref().map(|c| fraction(py, c)).transpose()?,
    )?;
    d.set_item(
        "ratio",
        r.ratio.as_ref().map(|c| fraction(py, c)).transpose()?,
    )?;
    Ok(d)
}

/// Fractional optimum over `c(V)`.
#[pyfunction]
#[pyo3(signature = (graph, max_edges=24))]
fn exact_best_ratio<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    max_edges: usize,
) -> PyResult<Bound<'py, PyAny>> {
    let r = game::exact_best_ratio(&graph.inner, &exact(max_edges)).map_err(to_py_err)?;
    fraction(py, &r)
}

/// Core check by stars. Returns `None` if `a(S) <= c(S)` for every
/// coalition, otherwise the violating star `(center, leaves)`.
#[pyfunction]
fn check_core(
    graph: &PyGraph,
    allocation: &Bound<'_, PyAny>,
) -> PyResult<Option<(VertexId, Vec<VertexId>)>> {
    let a = allocation_from(&graph.inner, allocation)?;
    Ok(game::check_core_stars(&graph.inner, &a)
        .err()
        .map(|v| (v.center, v.leaves)))
}

/// Brute-force core check over every coalition. Returns `None` or the first
/// violating coalition.
#[pyfunction]
fn brute_core_check(
    graph: &PyGraph,
    allocation: &Bound<'_, PyAny>,
) -> PyResult<Option<Vec<VertexId>>> {
    let a = allocation_from(&graph.inner, allocation)?;
    let verdict =
        oracle::brute_core_check(&graph.inner, &a, &OracleBudget::default()).map_err(to_py_err)?;
    Ok(verdict.err().map(|v| v.members))
}

#[pymodule]
fn edgecover(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add("CapExceeded", m.py().get_type::<CapExceeded>())?;
    m.add_function(wrap_pyfunction!(min_edge_cover, m)?)?;
    m.add_function(wrap_pyfunction!(fractional_cover, m)?)?;
    m.add_function(wrap_pyfunction!(coalition_cost, m)?)?;
    m.add_function(wrap_pyfunction!(integrality_gap, m)?)?;
    m.add_function(wrap_pyfunction!(allocate, m)?)?;
    m.add_function(wrap_pyfunction!(exact_best_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(check_core, m)?)?;
    m.add_function(wrap_pyfunction!(brute_core_check, m)?)?;
    Ok(())
}
