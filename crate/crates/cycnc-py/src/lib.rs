//! Python bindings for the cycnc kernel.

use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use cycnc_core as core;
use core::algebras;
use core::modules::{self, Representation};
use core::{CycElem, Error, Presentation};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn lit(s: &str, order: u32) -> PyResult<CycElem> {
    CycElem::parse(s, order).map_err(to_py)
}

/// Element of ℚ(ζ_order).
#[pyclass(name = "Cyclotomic", module = "cycnc", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyCyclotomic {
    inner: CycElem,
}

#[pymethods]
impl PyCyclotomic {
    #[new]
    #[pyo3(signature = (literal, order))]
    fn new(literal: &str, order: u32) -> PyResult<Self> {
        Ok(PyCyclotomic { inner: lit(literal, order)? })
    }

    #[staticmethod]
    fn zeta(order: u32, k: i64) -> PyResult<Self> {
        Ok(PyCyclotomic { inner: CycElem::try_zeta(order, k).map_err(to_py)? })
    }

    #[getter]
    fn order(&self) -> u32 {
        self.inner.order()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn inv(&self) -> PyResult<Self> {
        Ok(PyCyclotomic { inner: self.inner.inv().map_err(to_py)? })
    }

    fn __add__(&self, other: &Self) -> Self {
        PyCyclotomic { inner: &self.inner + &other.inner }
    }

    fn __sub__(&self, other: &Self) -> Self {
        PyCyclotomic { inner: &self.inner - &other.inner }
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyCyclotomic { inner: &self.inner * &other.inner }
    }

    fn __truediv__(&self, other: &Self) -> PyResult<Self> {
        Ok(PyCyclotomic { inner: self.inner.checked_div(&other.inner).map_err(to_py)? })
    }

    fn __neg__(&self) -> Self {
        PyCyclotomic { inner: -self.inner.clone() }
    }

    fn __pow__(&self, e: i64, _modulo: Option<i64>) -> PyResult<Self> {
        Ok(PyCyclotomic { inner: self.inner.pow(e).map_err(to_py)? })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Cyclotomic('{}', {})", self.inner, self.inner.order())
    }
}

/// An algebra given by generators and rewrite rules.
#[pyclass(name = "Presentation", module = "cycnc", frozen)]
pub struct PyPresentation {
    inner: Presentation,
}

#[pymethods]
impl PyPresentation {
    #[staticmethod]
    #[pyo3(signature = (n, r, x = "0"))]
    fn jackson(n: usize, r: i64, x: &str) -> PyResult<Self> {
        let p = algebras::jackson(n, r, &lit(x, n as u32)?).map_err(to_py)?;
        Ok(PyPresentation { inner: p })
    }

    #[staticmethod]
    #[pyo3(signature = (n, r, x = "0"))]
    fn kummer_witt(n: usize, r: i64, x: &str) -> PyResult<Self> {
        let p = algebras::kummer_witt(n, r, &lit(x, n as u32)?).map_err(to_py)?;
        Ok(PyPresentation { inner: p })
    }

    #[staticmethod]
    fn quantum_weyl(q: &str, order: u32) -> PyResult<Self> {
        let p = algebras::quantum_weyl(&lit(q, order)?).map_err(to_py)?;
        Ok(PyPresentation { inner: p })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyPresentation { inner: Presentation::from_json(text).map_err(to_py)? })
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn family(&self) -> String {
        self.inner.family().to_string()
    }

    #[getter]
    fn names(&self) -> Vec<String> {
        self.inner.names().to_vec()
    }

    fn is_confluent(&self) -> bool {
        self.inner.is_confluent()
    }

    /// Unresolved overlaps as (word, difference) pairs.
    fn unresolved_overlaps(&self) -> Vec<(Vec<usize>, String)> {
        self.inner
            .diamond()
            .unresolved
            .iter()
            .map(|o| (o.word.clone(), o.difference.clone()))
            .collect()
    }

    fn hilbert_series(&self, max_degree: usize) -> Vec<usize> {
        self.inner.hilbert_series(max_degree)
    }

    /// Normal form of the word with the given generator indices.
    fn normal_form(&self, word: Vec<usize>) -> PyResult<String> {
        if let Some(&g) = word.iter().find(|&&g| g >= self.inner.ngens()) {
            return Err(to_py(Error::GeneratorOutOfRange(g)));
        }
        Ok(self.inner.nf(&self.inner.word(&word)).display(self.inner.names()))
    }

    fn __repr__(&self) -> String {
        format!("Presentation(family='{}', generators={:?})", self.inner.family(), self.inner.names())
    }
}

/// Matrices for the generators of a presentation.
#[pyclass(name = "Representation", module = "cycnc", frozen)]
pub struct PyRepresentation {
    inner: Representation,
}

#[pymethods]
impl PyRepresentation {
    #[staticmethod]
    #[pyo3(signature = (n, d, r, x, a = None))]
    fn torsion(n: usize, d: usize, r: i64, x: &str, a: Option<&str>) -> PyResult<Self> {
        let o = n as u32;
        let a = a.map(|s| lit(s, o)).transpose()?;
        let m = modules::torsion_module(n, r, d, &lit(x, o)?, a.as_ref()).map_err(to_py)?;
        Ok(PyRepresentation { inner: m })
    }

    #[staticmethod]
    fn torsion_free(n: usize, r: i64, x: &str, a: &str, b: &str, c: &str) -> PyResult<Self> {
        let o = n as u32;
        let m = modules::torsion_free_module(n, r, &lit(x, o)?, &lit(a, o)?, &lit(b, o)?, &lit(c, o)?).map_err(to_py)?;
        Ok(PyRepresentation { inner: m })
    }

    /// One-dimensional module e₀ ↦ a, e₁ ↦ b, e₂ ↦ c.
    #[staticmethod]
    fn point(n: usize, r: i64, x: &str, a: &str, b: &str, c: &str) -> PyResult<Self> {
        let o = n as u32;
        let m = modules::point_rep(n, r, &lit(x, o)?, [lit(a, o)?, lit(b, o)?, lit(c, o)?]).map_err(to_py)?;
        Ok(PyRepresentation { inner: m })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyRepresentation { inner: Representation::from_json(text).map_err(to_py)? })
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    /// Generator matrices as rows of literals.
    fn matrices(&self) -> Vec<Vec<Vec<String>>> {
        self.inner.mats.iter().map(|m| m.to_literals()).collect()
    }

    fn verify(&self) -> PyResult<bool> {
        Ok(modules::verify_rep(&self.inner).map_err(to_py)?.holds)
    }

    fn simplicity(&self) -> PyResult<String> {
        Ok(format!("{:?}", modules::simplicity(&self.inner).map_err(to_py)?))
    }

    /// Values of e₀ˡ, e₁ˡ, e₂ˡ.
    fn central_character(&self) -> PyResult<Vec<String>> {
        let ch = modules::central_character(&self.inner).map_err(to_py)?;
        Ok(ch.values.iter().map(|c| c.to_string()).collect())
    }
}

/// (dim Ext¹(M, N), dim of inner derivations, dim Hom(M, N)).
#[pyfunction]
fn ext1(m: &PyRepresentation, n: &PyRepresentation) -> PyResult<(usize, usize, usize)> {
    let r = core::ext::ext1(&m.inner, &n.inner).map_err(to_py)?;
    Ok((r.dim, r.inner_dim, r.hom_dim))
}

/// Runs one regression criterion; returns (passed, report JSON).
#[pyfunction]
fn criterion(id: u8) -> PyResult<(bool, String)> {
    let c = core::report::criterion(id).map_err(to_py)?;
    Ok((c.passed(), serde_json::to_string(&c).map_err(|e| PyValueError::new_err(e.to_string()))?))
}

/// Runs the command-line interface on `args` (without the program name).
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String) {
    core::cli::run(std::iter::once("cycnc".to_string()).chain(args))
}

#[pymodule]
pub fn cycnc(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCyclotomic>()?;
    m.add_class::<PyPresentation>()?;
    m.add_class::<PyRepresentation>()?;
    m.add_function(wrap_pyfunction!(ext1, m)?)?;
    m.add_function(wrap_pyfunction!(criterion, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
