//! Python bindings: `import tyoung`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ty_core::chain::{scd as core_scd, split_generic as core_split, transversal as core_transversal, Scd};
use ty_core::factorization::canonical_tableau;
use ty_core::level_sets::{enumerate_level, signature as core_signature};
use ty_core::poset::enumerate as core_enumerate;
use ty_core::tropical::f_vector as core_f_vector;
use ty_core::{Chain, ChainFamily, ColorMove, Config, Error, Side, Signature};

fn err(e: Error) -> PyErr {
    match e {
        Error::Verification(msg) => PyRuntimeError::new_err(msg),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn parse_side(side: &str) -> PyResult<Side> {
    match side {
        "left" => Ok(Side::Left),
        "right" => Ok(Side::Right),
        _ => Err(PyValueError::new_err(format!("side must be 'left' or 'right', got {side:?}"))),
    }
}

fn exps(c: &Chain) -> Vec<Vec<u32>> {
    c.elements().iter().map(|m| m.exponents().to_vec()).collect()
}

fn chain_dict<'py>(py: Python<'py>, c: &Chain) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("elements", exps(c))?;
    d.set_item("colors", c.colors().iter().map(|c| c.get()).collect::<Vec<_>>())?;
    d.set_item("monotonic", c.is_monotonic())?;
    Ok(d)
}

fn family_dict<'py>(py: Python<'py>, f: &ChainFamily) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("signature", f.signature().d().to_vec())?;
    d.set_item("kind", f.kind().as_str())?;
    let chains = f
        .chains()
        .iter()
        .map(|c| chain_dict(py, c))
        .collect::<PyResult<Vec<_>>>()?;
    d.set_item("chains", chains)?;
    Ok(d)
}

/// Degree-m monomial in z_0..z_n, given by its exponent vector.
#[pyclass(name = "Monomial", frozen, eq, hash, ord, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyMonomial(ty_core::Monomial);

#[pymethods]
impl PyMonomial {
    #[new]
    fn new(exponents: Vec<u32>) -> PyResult<Self> {
        ty_core::Monomial::new(exponents).map(PyMonomial).map_err(err)
    }

    #[getter]
    fn exponents(&self) -> Vec<u32> {
        self.0.exponents().to_vec()
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn degree(&self) -> u32 {
        self.0.degree()
    }

    #[getter]
    fn weight(&self) -> i64 {
        self.0.weight()
    }

    #[getter]
    fn rank(&self) -> i64 {
        self.0.rank()
    }

    fn leq(&self, other: &PyMonomial) -> PyResult<bool> {
        self.0.leq(&other.0).map_err(err)
    }

    fn apply_color(&self, color: usize) -> PyResult<Self> {
        let c = ColorMove::new(color).map_err(err)?;
        self.0.apply_color(c).map(PyMonomial).map_err(err)
    }

    fn unapply_color(&self, color: usize) -> PyResult<Self> {
        let c = ColorMove::new(color).map_err(err)?;
        self.0.unapply_color(c).map(PyMonomial).map_err(err)
    }

    fn tau(&self) -> Self {
        PyMonomial(self.0.tau())
    }

    fn partition(&self) -> Vec<u32> {
        self.0.to_partition().parts().to_vec()
    }

    fn signature(&self) -> Vec<u32> {
        core_signature(&self.0).d().to_vec()
    }

    fn f_vector(&self) -> Vec<u32> {
        core_f_vector(&self.0).to_vec()
    }

    fn tableau(&self) -> PyResult<Vec<Vec<usize>>> {
        canonical_tableau(&self.0).map(|t| t.into_rows()).map_err(err)
    }

    #[pyo3(signature = (side = "left"))]
    fn transversal<'py>(&self, py: Python<'py>, side: &str) -> PyResult<Bound<'py, PyDict>> {
        let c = core_transversal(&self.0, parse_side(side)?).map_err(err)?;
        chain_dict(py, &c)
    }

    fn __repr__(&self) -> String {
        format!("Monomial({})", self.0)
    }
}

fn mono(exponents: Vec<u32>) -> PyResult<ty_core::Monomial> {
    ty_core::Monomial::new(exponents).map_err(err)
}

fn sig(n: usize, d: Vec<u32>) -> PyResult<Signature> {
    Signature::new(n, d).map_err(err)
}

#[pyfunction]
fn enumerate(n: usize, m: u32) -> Vec<Vec<u32>> {
    core_enumerate(n, m).map(|x| x.into_exponents()).collect()
}

#[pyfunction]
fn signature(exponents: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(core_signature(&mono(exponents)?).d().to_vec())
}

#[pyfunction]
fn f_vector(exponents: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(core_f_vector(&mono(exponents)?).to_vec())
}

#[pyfunction]
fn tableau(exponents: Vec<u32>) -> PyResult<Vec<Vec<usize>>> {
    canonical_tableau(&mono(exponents)?).map(|t| t.into_rows()).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (exponents, side = "left"))]
fn transversal<'py>(py: Python<'py>, exponents: Vec<u32>, side: &str) -> PyResult<Bound<'py, PyDict>> {
    let c = core_transversal(&mono(exponents)?, parse_side(side)?).map_err(err)?;
    chain_dict(py, &c)
}

#[pyfunction]
fn level_set(n: usize, d: Vec<u32>) -> PyResult<Vec<Vec<u32>>> {
    let level = enumerate_level(&sig(n, d)?, &Config::default()).map_err(err)?;
    Ok(level.members().iter().map(|x| x.exponents().to_vec()).collect())
}

/// Symmetric chain decomposition of a level set, or `None` when unavailable.
#[pyfunction]
fn scd<'py>(py: Python<'py>, n: usize, d: Vec<u32>) -> PyResult<Option<Bound<'py, PyDict>>> {
    match core_scd(&sig(n, d)?, &Config::default()).map_err(err)? {
        Scd::Available { family, strategy } => {
            let out = family_dict(py, &family)?;
            out.set_item("strategy", strategy.as_str())?;
            Ok(Some(out))
        }
        Scd::Unavailable { .. } => Ok(None),
    }
}

#[pyfunction]
fn split_generic<'py>(py: Python<'py>, n: usize, m: u32) -> PyResult<Bound<'py, PyDict>> {
    let split = core_split(n, m, &Config::default()).map_err(err)?;
    let out = PyDict::new(py);
    let generic = split
        .generic
        .iter()
        .map(|(f, _)| family_dict(py, f))
        .collect::<PyResult<Vec<_>>>()?;
    let singular = split
        .singular
        .iter()
        .map(|(f, _)| family_dict(py, f))
        .collect::<PyResult<Vec<_>>>()?;
    out.set_item("generic", generic)?;
    out.set_item("singular", singular)?;
    out.set_item("generic_size", split.generic_size())?;
    Ok(out)
}

#[pymodule]
fn tyoung(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMonomial>()?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(signature, m)?)?;
    m.add_function(wrap_pyfunction!(f_vector, m)?)?;
    m.add_function(wrap_pyfunction!(tableau, m)?)?;
    m.add_function(wrap_pyfunction!(transversal, m)?)?;
    m.add_function(wrap_pyfunction!(level_set, m)?)?;
    m.add_function(wrap_pyfunction!(scd, m)?)?;
    m.add_function(wrap_pyfunction!(split_generic, m)?)?;
    Ok(())
}
