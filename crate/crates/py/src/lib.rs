//! Python bindings: polynomials, symmetric functions, the combinatorial and
//! Macdonald sides, LLT data and the check harness.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use qtshuffle_core::llt;
use qtshuffle_core::macdonald;
use qtshuffle_core::ring::{QtRat, Q, T, U};
use qtshuffle_core::shapes::{Filling, Partition as CorePartition, SkewShape};
use qtshuffle_core::shuffle::{self, ParkingFunction};
use qtshuffle_core::symfun::{Basis, SymFunc as CoreSymFunc};
use qtshuffle_core::verify;

fn err(e: qtshuffle_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition(parts: Vec<usize>) -> CorePartition {
    CorePartition::from_unsorted(parts)
}

fn var_index(name: &str) -> PyResult<usize> {
    match name {
        "q" => Ok(Q),
        "t" => Ok(T),
        "u" => Ok(U),
        other => Err(PyValueError::new_err(format!("unknown variable {other:?}"))),
    }
}

#[pyclass(name = "Partition", frozen, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPartition(CorePartition);

#[pymethods]
impl PyPartition {
    #[new]
    fn new(parts: Vec<usize>) -> Self {
        PyPartition(partition(parts))
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn conjugate(&self) -> Self {
        PyPartition(self.0.conjugate())
    }

    fn contains(&self, other: &PyPartition) -> bool {
        self.0.contains(&other.0)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.0.parts())
    }
}

/// A rational function in `q`, `t`, `u`.
#[pyclass(name = "Poly", frozen, eq)]
#[derive(Clone, PartialEq)]
struct PyPoly(QtRat);

#[pymethods]
impl PyPoly {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyPoly).map_err(err)
    }

    fn is_polynomial(&self) -> bool {
        self.0.is_polynomial()
    }

    /// `{(a, b, c): coefficient}` for `q^a t^b u^c`.
    fn terms(&self) -> PyResult<Vec<((i32, i32, i32), BigInt)>> {
        let p = self.0.as_poly().ok_or_else(|| PyValueError::new_err("not a polynomial"))?;
        Ok(p.terms().map(|(e, c)| ((e[0], e[1], e[2]), c.clone())).collect())
    }

    /// Substitute `var := value`, where `value` is any ring expression.
    fn subs(&self, var: &str, value: &str) -> PyResult<Self> {
        let img: QtRat = value.parse().map_err(err)?;
        self.0.subs(var_index(var)?, &img).map(PyPoly).map_err(err)
    }

    /// Exact value at integer `q`, `t`, `u`, as a `fractions.Fraction`.
    #[pyo3(signature = (q, t, u = BigInt::from(1)))]
    fn evaluate<'py>(&self, py: Python<'py>, q: BigInt, t: BigInt, u: BigInt) -> PyResult<Bound<'py, PyAny>> {
        let v = self.0.eval([&q, &t, &u]).map_err(err)?;
        py.import("fractions")?.getattr("Fraction")?.call1((v.numer().clone(), v.denom().clone()))
    }

    fn __add__(&self, other: &PyPoly) -> Self {
        PyPoly(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &PyPoly) -> Self {
        PyPoly(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &PyPoly) -> Self {
        PyPoly(&self.0 * &other.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly({:?})", self.0.to_string())
    }
}

fn basis(name: &str) -> PyResult<Basis> {
    name.parse().map_err(err)
}

#[pyclass(name = "SymFunc", frozen, eq)]
#[derive(Clone, PartialEq)]
struct PySymFunc(CoreSymFunc);

#[pymethods]
impl PySymFunc {
    #[staticmethod]
    fn e(parts: Vec<usize>) -> Self {
        PySymFunc(CoreSymFunc::e(&parts))
    }

    #[staticmethod]
    fn h(parts: Vec<usize>) -> Self {
        PySymFunc(CoreSymFunc::h(&parts))
    }

    #[staticmethod]
    fn s(parts: Vec<usize>) -> Self {
        PySymFunc(CoreSymFunc::s(&parts))
    }

    #[staticmethod]
    fn m(parts: Vec<usize>) -> Self {
        PySymFunc(CoreSymFunc::m(&parts))
    }

    #[staticmethod]
    fn p(parts: Vec<usize>) -> Self {
        PySymFunc(CoreSymFunc::p(&parts))
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        CoreSymFunc::from_json(&v).map(PySymFunc).map_err(err)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    #[getter]
    fn basis(&self) -> String {
        self.0.basis().to_string()
    }

    fn convert(&self, target: &str) -> PyResult<Self> {
        Ok(PySymFunc(self.0.convert(basis(target)?)))
    }

    fn coeff(&self, parts: Vec<usize>) -> PyPoly {
        PyPoly(self.0.coeff(&partition(parts)))
    }

    /// `[(parts, coefficient)]` in the current basis.
    fn terms(&self) -> Vec<(Vec<usize>, PyPoly)> {
        self.0.terms().map(|(l, c)| (l.parts().to_vec(), PyPoly(c.clone()))).collect()
    }

    fn subs(&self, var: &str, value: &str) -> PyResult<Self> {
        let img: QtRat = value.parse().map_err(err)?;
        let v = var_index(var)?;
        self.0.try_map_coeffs(|c| c.subs(v, &img)).map(PySymFunc).map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    fn __add__(&self, other: &PySymFunc) -> PyResult<Self> {
        self.0.checked_add(&other.0).map(PySymFunc).map_err(err)
    }

    fn __sub__(&self, other: &PySymFunc) -> PyResult<Self> {
        self.0.checked_add(&-&other.0).map(PySymFunc).map_err(err)
    }

    fn __mul__(&self, other: &PySymFunc) -> Self {
        PySymFunc(&self.0 * &other.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SymFunc({:?})", self.0.to_string())
    }
}

#[pyfunction]
#[pyo3(signature = (f, m = 1))]
fn nabla(f: &PySymFunc, m: i32) -> PyResult<PySymFunc> {
    macdonald::nabla_power(&f.0, m).map(PySymFunc).map_err(err)
}

#[pyfunction]
fn modified_macdonald(mu: Vec<usize>) -> PyResult<PySymFunc> {
    macdonald::modified_macdonald(&partition(mu)).map(PySymFunc).map_err(err)
}

#[pyfunction]
fn e_nk(n: usize, k: usize) -> PyResult<PySymFunc> {
    macdonald::e_nk(n, k).map(PySymFunc).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, m = 1))]
fn compute_d(n: usize, m: usize) -> PyResult<PySymFunc> {
    shuffle::compute_d(n, m).map(PySymFunc).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (lam, n, m = 1))]
fn d_component(lam: Vec<usize>, n: usize, m: usize) -> PyResult<PySymFunc> {
    shuffle::d_component(&partition(lam), n, m).map(PySymFunc).map_err(err)
}

#[pyfunction]
fn super_d_coeff(n: usize, m: usize, mu: Vec<usize>, eta: Vec<usize>) -> PyResult<PyPoly> {
    shuffle::super_d_coeff(n, m, &mu, &eta).map(|p| PyPoly(QtRat::from_poly(p))).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, m = 1))]
fn qt_catalan(n: usize, m: usize) -> PyResult<PyPoly> {
    shuffle::qt_catalan(n, m).map(|p| PyPoly(QtRat::from_poly(p))).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (lam, n, m = 1))]
fn area(lam: Vec<usize>, n: usize, m: usize) -> PyResult<usize> {
    shuffle::area(&partition(lam), n, m).map_err(err)
}

/// `dinv_m` of a filling in the text format (rows top to bottom, `~` for negative letters).
#[pyfunction]
#[pyo3(signature = (filling, m = 1))]
fn dinv(filling: &str, m: usize) -> PyResult<usize> {
    let t: Filling = filling.parse().map_err(err)?;
    shuffle::dinv(&t, m).map_err(err)
}

/// `(area, dinv, reading word)` of a parking function given as a word `f(1)…f(n)`.
#[pyfunction]
fn parking_function(word: &str) -> PyResult<(usize, usize, Vec<usize>)> {
    let p: ParkingFunction = word.parse().map_err(err)?;
    Ok((p.area(), p.dinv(), shuffle::parking_word(&p)))
}

/// `(core parts, contents s_0…s_{n-1})`.
#[pyfunction]
fn n_core(mu: Vec<usize>, n: usize) -> PyResult<(Vec<usize>, Vec<i64>)> {
    let c = llt::n_core(&partition(mu), n).map_err(err)?;
    Ok((c.core.parts().to_vec(), c.contents))
}

/// `([(outer, inner)], offsets)` for the n-quotient of `μ/ν`.
#[pyfunction]
#[allow(clippy::type_complexity)]
fn n_quotient(mu: Vec<usize>, nu: Vec<usize>, n: usize) -> PyResult<(Vec<(Vec<usize>, Vec<usize>)>, Vec<i64>)> {
    let shape = SkewShape::new(partition(mu), partition(nu)).map_err(err)?;
    let t = llt::n_quotient(&shape, n).map_err(err)?;
    let shapes = t
        .shapes()
        .iter()
        .map(|s| (s.outer().parts().to_vec(), s.inner().parts().to_vec()))
        .collect();
    Ok((shapes, t.offsets().to_vec()))
}

/// `G_{μ/ν}(z; q)` from the n-quotient.
#[pyfunction]
fn llt_poly(mu: Vec<usize>, nu: Vec<usize>, n: usize) -> PyResult<PySymFunc> {
    let shape = SkewShape::new(partition(mu), partition(nu)).map_err(err)?;
    llt::llt_poly(&shape, n).map(PySymFunc).map_err(err)
}

fn result_dict<'py>(py: Python<'py>, r: &verify::CheckResult) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("name", &r.name)?;
    let params = PyDict::new(py);
    params.set_item("n", r.params.n)?;
    params.set_item("m", r.params.m)?;
    for (k, v) in &r.params.extra {
        params.set_item(k, v)?;
    }
    d.set_item("params", params)?;
    d.set_item("status", r.status.to_string())?;
    d.set_item("witness", r.witness.clone())?;
    d.set_item("elapsed", r.elapsed)?;
    Ok(d)
}

/// Run one named check. `size` bounds `|μ|` for the ribbon checks.
#[pyfunction]
#[pyo3(signature = (name, n, m = 1, size = 8))]
fn check<'py>(py: Python<'py>, name: &str, n: usize, m: usize, size: usize) -> PyResult<Bound<'py, PyDict>> {
    let c: verify::Check = name.parse().map_err(err)?;
    let job = if c.is_ribbon_check() { verify::Job::ribbon(c, n, size) } else { verify::Job::new(c, n, m) };
    let r = py.allow_threads(|| job.run());
    result_dict(py, &r)
}

#[pyfunction]
#[pyo3(signature = (profile = "quick"))]
fn run_suite<'py>(py: Python<'py>, profile: &str) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let p: verify::Profile = profile.parse().map_err(err)?;
    let results = py.allow_threads(|| verify::run_suite(p));
    results.iter().map(|r| result_dict(py, r)).collect()
}

#[pymodule]
pub fn qtshuffle(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyPoly>()?;
    m.add_class::<PySymFunc>()?;
    m.add_function(wrap_pyfunction!(nabla, m)?)?;
    m.add_function(wrap_pyfunction!(modified_macdonald, m)?)?;
    m.add_function(wrap_pyfunction!(e_nk, m)?)?;
    m.add_function(wrap_pyfunction!(compute_d, m)?)?;
    m.add_function(wrap_pyfunction!(d_component, m)?)?;
    m.add_function(wrap_pyfunction!(super_d_coeff, m)?)?;
    m.add_function(wrap_pyfunction!(qt_catalan, m)?)?;
    m.add_function(wrap_pyfunction!(area, m)?)?;
    m.add_function(wrap_pyfunction!(dinv, m)?)?;
    m.add_function(wrap_pyfunction!(parking_function, m)?)?;
    m.add_function(wrap_pyfunction!(n_core, m)?)?;
    m.add_function(wrap_pyfunction!(n_quotient, m)?)?;
    m.add_function(wrap_pyfunction!(llt_poly, m)?)?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
