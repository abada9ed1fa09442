//! Python bindings: frames, closed forms, code parameters, defining sets, generator
//! polynomials, oracle sweeps and parameter tables.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use ccbch_core::code_builder::{generator_polynomial_in, Tower};
use ccbch_core::finite_field::DEFAULT_FIELD_CAP;
use ccbch_core::formulas::{i_star, necessity_witness, thresholds};
use ccbch_core::table::{self, Format};
use ccbch_core::{cosets, oracle, Error};

create_exception!(ccbch, CcbchError, PyValueError);
create_exception!(ccbch, CapacityExceededError, CcbchError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::CapacityExceeded { .. } => CapacityExceededError::new_err(e.to_string()),
        Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => CcbchError::new_err(e.to_string()),
    }
}

fn json_to_py<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// `(q, m)` with `n = (q^(2m) - 1)/(q + 1)`.
#[pyclass(frozen, skip_from_py_object, name = "CodeFrame", module = "ccbch")]
#[derive(Clone, Copy)]
pub struct PyCodeFrame {
    inner: cosets::CodeFrame,
}

#[pymethods]
impl PyCodeFrame {
    #[new]
    fn new(q: u64, m: u32) -> PyResult<Self> {
        Ok(Self {
            inner: cosets::make_frame(q, m).map_err(to_py)?,
        })
    }

    #[getter]
    fn q(&self) -> u64 {
        self.inner.q()
    }

    #[getter]
    fn m(&self) -> u32 {
        self.inner.m()
    }

    #[getter]
    fn p(&self) -> u64 {
        self.inner.p()
    }

    #[getter]
    fn r(&self) -> u64 {
        self.inner.r()
    }

    #[getter]
    fn n(&self) -> u64 {
        self.inner.n()
    }

    #[getter]
    fn nr(&self) -> u64 {
        self.inner.nr()
    }

    fn root_index(&self, i: u64) -> u64 {
        self.inner.root_index(i)
    }

    fn delta_max(&self) -> PyResult<u64> {
        ccbch_core::delta_max(&self.inner).map_err(to_py)
    }

    fn i_star(&self) -> PyResult<u64> {
        i_star(&self.inner).map_err(to_py)
    }

    fn thresholds(&self) -> PyResult<(u64, u64)> {
        thresholds(&self.inner).map_err(to_py)
    }

    fn necessity_witness(&self) -> PyResult<u64> {
        necessity_witness(&self.inner).map_err(to_py)
    }

    fn coset(&self, s: u64) -> PyResult<Vec<u64>> {
        Ok(cosets::coset(&self.inner, s).map_err(to_py)?.elements().to_vec())
    }

    fn __repr__(&self) -> String {
        format!("CodeFrame(q={}, m={}, n={})", self.inner.q(), self.inner.m(), self.inner.n())
    }
}

/// `T = C_1 ∪ C_(1+r) ∪ ... ∪ C_(1+(δ-2)r)`.
#[pyclass(frozen, name = "DefiningSet", module = "ccbch")]
pub struct PyDefiningSet {
    inner: cosets::DefiningSet,
}

#[pymethods]
impl PyDefiningSet {
    #[new]
    fn new(frame: &PyCodeFrame, delta: u64) -> PyResult<Self> {
        Ok(Self {
            inner: cosets::DefiningSet::new(&frame.inner, delta).map_err(to_py)?,
        })
    }

    #[getter]
    fn delta(&self) -> u64 {
        self.inner.delta()
    }

    fn elements(&self) -> Vec<u64> {
        self.inner.elements().to_vec()
    }

    fn coset_leaders(&self) -> Vec<u64> {
        self.inner.cosets().iter().map(|c| c.leader()).collect()
    }

    fn is_dual_containing(&self) -> bool {
        cosets::is_dual_containing(&self.inner)
    }

    /// `T ∩ T^(-q)`.
    fn hermitian_overlap(&self) -> Vec<u64> {
        self.inner.hermitian_overlap()
    }

    fn bch_certificate(&self) -> u64 {
        ccbch_core::bch_bound_certificate(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __contains__(&self, x: u64) -> bool {
        self.inner.contains(x)
    }
}

/// Closed-form counts for one design distance, as a dict.
#[pyfunction]
fn formulas<'py>(py: Python<'py>, frame: &PyCodeFrame, delta: u64) -> PyResult<Bound<'py, PyAny>> {
    let report = ccbch_core::script_n(&frame.inner, delta).map_err(to_py)?;
    let d = json_to_py(py, &report)?;
    d.set_item("branch", report.branch_label())?;
    Ok(d)
}

#[pyfunction]
fn script_n(frame: &PyCodeFrame, delta: u64) -> PyResult<u64> {
    Ok(ccbch_core::script_n(&frame.inner, delta).map_err(to_py)?.script_n)
}

#[pyfunction]
fn corollary_n(frame: &PyCodeFrame, delta: u64) -> PyResult<u64> {
    ccbch_core::corollary_n(&frame.inner, delta).map_err(to_py)
}

/// `(n, k, δ)` of the classical code over `F_{q²}`.
#[pyfunction]
fn classical_params(frame: &PyCodeFrame, delta: u64) -> PyResult<(u64, u64, u64)> {
    let c = ccbch_core::classical_params(&frame.inner, delta).map_err(to_py)?;
    Ok((c.n, c.k, c.delta))
}

/// `(n, k, δ)` of the quantum code `[[n, k, >= δ]]_q`.
#[pyfunction]
fn quantum_params(frame: &PyCodeFrame, delta: u64) -> PyResult<(u64, u64, u64)> {
    let c = ccbch_core::quantum_params(&frame.inner, delta).map_err(to_py)?;
    Ok((c.n, c.k, c.delta))
}

/// Table rows for `δ` in `[lo, hi]` (default `[2, δ^max]`) as a list of dicts.
#[pyfunction]
#[pyo3(signature = (frame, lo = None, hi = None))]
fn table_rows<'py>(
    py: Python<'py>,
    frame: &PyCodeFrame,
    lo: Option<u64>,
    hi: Option<u64>,
) -> PyResult<Bound<'py, PyAny>> {
    let hi = match hi {
        Some(h) => h,
        None => ccbch_core::delta_max(&frame.inner).map_err(to_py)?,
    };
    let rows = table::rows(&frame.inner, lo.unwrap_or(2), hi).map_err(to_py)?;
    json_to_py(py, &rows)
}

/// Rendered table in `json`, `csv` or `markdown`.
#[pyfunction]
#[pyo3(signature = (frame, format = "json"))]
fn render_table(frame: &PyCodeFrame, format: &str) -> PyResult<String> {
    let format: Format = format.parse().map_err(CcbchError::new_err)?;
    let rows = table::full_table(&frame.inner).map_err(to_py)?;
    Ok(table::render_rows(&rows, format))
}

/// Generator polynomial coefficients over `F_{q²}`, lowest degree first, as discrete logs
/// to the subfield generator (`None` for zero).
#[pyfunction]
#[pyo3(signature = (frame, delta, field_cap = DEFAULT_FIELD_CAP))]
fn generator_polynomial<'py>(
    py: Python<'py>,
    frame: &PyCodeFrame,
    delta: u64,
    field_cap: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let tower = Tower::with_cap(&frame.inner, field_cap).map_err(to_py)?;
    let g = generator_polynomial_in(&tower, delta).map_err(to_py)?;
    let f = g.field();
    let logs: Vec<Option<u64>> = g.poly().coeffs().iter().map(|&c| f.log(c)).collect();
    let d = pyo3::types::PyDict::new(py);
    d.set_item("degree", g.degree())?;
    d.set_item("coefficients", logs)?;
    d.set_item("eta", f.log(g.eta()))?;
    d.set_item("tower_modulus", g.tower_modulus().to_vec())?;
    d.set_item("remainder_zero", g.remainder_of_modulus().map_err(to_py)?.is_zero())?;
    Ok(d.into_any())
}

/// Formula-versus-oracle audit of every `δ` up to `δ^max + 1`, as a dict.
#[pyfunction]
fn sweep<'py>(py: Python<'py>, frame: &PyCodeFrame) -> PyResult<Bound<'py, PyAny>> {
    let report = oracle::sweep(&frame.inner).map_err(to_py)?;
    let d = json_to_py(py, &report)?;
    d.set_item("passed", report.passed())?;
    Ok(d)
}

#[pymodule]
fn ccbch(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("CcbchError", m.py().get_type::<CcbchError>())?;
    m.add("CapacityExceededError", m.py().get_type::<CapacityExceededError>())?;
    m.add_class::<PyCodeFrame>()?;
    m.add_class::<PyDefiningSet>()?;
    m.add_function(wrap_pyfunction!(formulas, m)?)?;
    m.add_function(wrap_pyfunction!(script_n, m)?)?;
    m.add_function(wrap_pyfunction!(corollary_n, m)?)?;
    m.add_function(wrap_pyfunction!(classical_params, m)?)?;
    m.add_function(wrap_pyfunction!(quantum_params, m)?)?;
    m.add_function(wrap_pyfunction!(table_rows, m)?)?;
    m.add_function(wrap_pyfunction!(render_table, m)?)?;
    m.add_function(wrap_pyfunction!(generator_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    Ok(())
}
