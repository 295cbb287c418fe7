use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use prelie::cyclic_lie::cl_component;
use prelie::egf::verify_chapoton_identity;
use prelie::free_operad::{canonicalize, parse_tree, weight};
use prelie::pl::{self, PlVector};
use prelie::quotient::Presentation;
use prelie::verify::{self, VerifyConfig};
use prelie::LabelSet;

fn err(e: prelie::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A labelled rooted tree, written `1(2(4),3)`.
#[pyclass(frozen, skip_from_py_object, module = "prelie_py")]
#[derive(Clone)]
pub struct RootedTree(pl::RootedTree);

#[pymethods]
impl RootedTree {
    #[staticmethod]
    pub fn parse(text: &str) -> PyResult<Self> {
        pl::RootedTree::parse(text).map(RootedTree).map_err(err)
    }

    pub fn root(&self) -> u32 {
        self.0.root()
    }

    pub fn children(&self, vertex: u32) -> Vec<u32> {
        self.0.children(vertex)
    }

    pub fn labels(&self) -> Vec<u32> {
        self.0.labels().iter().collect()
    }

    pub fn __len__(&self) -> usize {
        self.0.len()
    }

    pub fn __str__(&self) -> String {
        self.0.to_string()
    }

    pub fn __repr__(&self) -> String {
        format!("RootedTree('{}')", self.0)
    }

    pub fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    pub fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }
}

/// An element of the pre-Lie operad: a rational combination of rooted trees
/// on one label set.
#[pyclass(frozen, skip_from_py_object, module = "prelie_py")]
#[derive(Clone)]
pub struct PlElement(PlVector);

#[pymethods]
impl PlElement {
    #[staticmethod]
    pub fn vertex(label: u32) -> Self {
        PlElement(pl::vertex(label))
    }

    #[staticmethod]
    pub fn tree(text: &str) -> PyResult<Self> {
        Ok(PlElement(pl::RootedTree::parse(text).map_err(err)?.to_vector()))
    }

    /// Evaluates a combination of tree tensors such as `"{[1,2],3} - (1<2)"`.
    #[staticmethod]
    pub fn evaluate(expression: &str) -> PyResult<Self> {
        let v = prelie::free_operad::parse_combination(expression, None).map_err(err)?;
        pl::eval(&v).map(PlElement).map_err(err)
    }

    /// `(tree, coefficient)` pairs with coefficients as exact fractions.
    pub fn terms(&self) -> Vec<(String, String)> {
        self.0.terms().map(|(t, c)| (t.to_string(), c.to_string())).collect()
    }

    pub fn labels(&self) -> Vec<u32> {
        self.0.component().iter().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn pre(&self, other: &Self) -> PyResult<Self> {
        pl::pre(&self.0, &other.0).map(PlElement).map_err(err)
    }

    pub fn bracket(&self, other: &Self) -> PyResult<Self> {
        pl::bracket(&self.0, &other.0).map(PlElement).map_err(err)
    }

    pub fn bullet(&self, other: &Self) -> PyResult<Self> {
        pl::bullet(&self.0, &other.0).map(PlElement).map_err(err)
    }

    /// Operadic composition: `other` substituted at vertex `label`.
    pub fn graft(&self, label: u32, other: &Self) -> PyResult<Self> {
        pl::graft_compose_vectors(&self.0, label, &other.0).map(PlElement).map_err(err)
    }

    pub fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.plus(&other.0).map(PlElement).map_err(err)
    }

    pub fn __sub__(&self, other: &Self) -> PyResult<Self> {
        self.0.minus(&other.0).map(PlElement).map_err(err)
    }

    pub fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    pub fn __str__(&self) -> String {
        self.0.to_string()
    }

    pub fn __repr__(&self) -> String {
        format!("PlElement('{}')", self.0)
    }
}

#[pyfunction]
pub fn rooted_trees(n: usize) -> PyResult<Vec<RootedTree>> {
    Ok(pl::enumerate_rooted_trees(&LabelSet::range(n)).map_err(err)?.into_iter().map(RootedTree).collect())
}

/// Dimension of a presented quotient: `pre-lie`, `bracket-bullet` or `lie`.
#[pyfunction]
pub fn quotient_dim(presentation: &str, n: usize) -> PyResult<usize> {
    let p = match presentation {
        "pre-lie" => Presentation::pre_lie(),
        "bracket-bullet" => Presentation::bracket_bullet(),
        "lie" => Presentation::lie(),
        other => return Err(PyValueError::new_err(format!("unknown presentation `{other}`"))),
    };
    p.quotient_dim(n).map_err(err)
}

#[pyfunction]
pub fn cl_dim(n: usize) -> PyResult<usize> {
    Ok(cl_component(n).map_err(err)?.dim())
}

#[pyfunction]
pub fn y_dim(n: usize) -> PyResult<usize> {
    Ok(pl::y_span(&LabelSet::range(n)).map_err(err)?.dim())
}

/// Weight of a single two-generator tree tensor such as `"{[1,2],3}"`.
#[pyfunction]
pub fn tensor_weight(expression: &str) -> PyResult<usize> {
    let (t, _) = canonicalize(&parse_tree(expression, None).map_err(err)?).map_err(err)?;
    weight(&t).map_err(err)
}

/// Rows `(n, n^(n-1), dim of Lie composed with T(CL), extrapolated)`.
#[pyfunction]
#[pyo3(signature = (order=8))]
pub fn series_identity(order: usize) -> PyResult<Vec<(usize, u64, String, bool)>> {
    let dims: Vec<u64> = std::iter::once(Ok(0))
        .chain(std::iter::once(Ok(0)))
        .chain((2..=order.min(6)).map(|n| cl_component(n).map(|c| c.dim() as u64)))
        .collect::<prelie::Result<_>>()
        .map_err(err)?;
    let report = verify_chapoton_identity(order, &dims).map_err(err)?;
    Ok(report.rows.into_iter().map(|r| (r.n, r.expected_pl_dim, r.lie_composite_dim.to_string(), r.extrapolated)).collect())
}

/// Runs verification checks and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (checks=None, max_arity=6, quotient_max_arity=5, egf_order=8))]
pub fn verify_json(
    py: Python<'_>,
    checks: Option<Vec<String>>,
    max_arity: usize,
    quotient_max_arity: usize,
    egf_order: usize,
) -> PyResult<String> {
    let config = VerifyConfig {
        checks: checks.unwrap_or_else(|| vec!["all".into()]),
        max_arity,
        quotient_max_arity,
        egf_order,
        ..VerifyConfig::default()
    };
    let report = py.detach(|| verify::run(config)).map_err(err)?;
    Ok(report.to_json())
}

#[pymodule]
fn prelie_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<RootedTree>()?;
    m.add_class::<PlElement>()?;
    m.add_function(wrap_pyfunction!(rooted_trees, m)?)?;
    m.add_function(wrap_pyfunction!(quotient_dim, m)?)?;
    m.add_function(wrap_pyfunction!(cl_dim, m)?)?;
    m.add_function(wrap_pyfunction!(y_dim, m)?)?;
    m.add_function(wrap_pyfunction!(tensor_weight, m)?)?;
    m.add_function(wrap_pyfunction!(series_identity, m)?)?;
    m.add_function(wrap_pyfunction!(verify_json, m)?)?;
    Ok(())
}
