//! Python bindings: an `AffineSemigroup` class whose reports are returned as
//! dictionaries with the same shape as the CLI's JSON output.

use monoalg::{
    analyze, betti_ideal, decompose, depth_of, full_report, reg_of, report, Characteristic, Error, MonomialIdeal, Point,
};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use serde_json::{json, Value};

create_exception!(
    monoalg_py,
    MonoalgError,
    PyValueError,
    "Raised when a semigroup operation fails."
);

fn err(e: Error) -> PyErr {
    MonoalgError::new_err(format!("{}: {e}", e.kind()))
}

fn characteristic(p: u64) -> PyResult<Characteristic> {
    Characteristic::new(p).map_err(err)
}

fn to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => i.into_pyobject(py)?.into_any(),
            (None, Some(u)) => u.into_pyobject(py)?.into_any(),
            _ => n.as_f64().unwrap_or(f64::NAN).into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, item) in map {
                dict.set_item(k, to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

/// A positive affine semigroup given by its generators in N^m.
#[pyclass(name = "AffineSemigroup", module = "monoalg_py", frozen)]
struct PyAffineSemigroup {
    inner: monoalg::AffineSemigroup,
}

#[pymethods]
impl PyAffineSemigroup {
    #[new]
    fn new(generators: Vec<Point>) -> PyResult<Self> {
        Ok(PyAffineSemigroup {
            inner: monoalg::AffineSemigroup::new(generators).map_err(err)?,
        })
    }

    #[getter]
    fn generators(&self) -> Vec<Point> {
        self.inner.generators().to_vec()
    }

    #[getter]
    fn ambient_dim(&self) -> usize {
        self.inner.ambient_dim()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn is_simplicial(&self) -> bool {
        self.inner.is_simplicial()
    }

    fn member(&self, x: Point) -> PyResult<bool> {
        self.inner.member(&x).map_err(err)
    }

    fn frame(&self) -> PyResult<Vec<Point>> {
        Ok(self.inner.frame().map_err(err)?.elements().to_vec())
    }

    fn module_generators(&self) -> PyResult<Vec<Point>> {
        Ok(self.inner.module_generators().map_err(err)?.to_vec())
    }

    /// Coefficients of the degree functional as rational strings, or `None`
    /// when the semigroup is not homogeneous.
    fn degree_functional(&self) -> Option<Vec<String>> {
        self.inner
            .degree_functional()
            .map(|f| f.coefficients().0.iter().map(ToString::to_string).collect())
    }

    #[pyo3(signature = (verbose = false))]
    fn decompose<'py>(&self, py: Python<'py>, verbose: bool) -> PyResult<Bound<'py, PyAny>> {
        let dec = decompose(&self.inner).map_err(err)?;
        to_py(py, &report::decomposition_json(&dec, verbose))
    }

    fn properties<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let r = full_report(&self.inner).map_err(err)?;
        to_py(py, &report::properties_json(&r))
    }

    #[pyo3(signature = (characteristic = 0, verbose = false))]
    fn regularity<'py>(&self, py: Python<'py>, characteristic: u64, verbose: bool) -> PyResult<Bound<'py, PyAny>> {
        let c = self::characteristic(characteristic)?;
        let r = analyze(&self.inner, c).map_err(err)?;
        to_py(py, &report::regularity_json(&r, c.get(), verbose))
    }

    #[pyo3(signature = (characteristic = 0))]
    fn eg<'py>(&self, py: Python<'py>, characteristic: u64) -> PyResult<Bound<'py, PyAny>> {
        let r = analyze(&self.inner, self::characteristic(characteristic)?).map_err(err)?;
        to_py(py, &report::eg_json(&r))
    }

    /// Decomposition, properties and regularity in one dictionary; the
    /// regularity entry holds an error object when it cannot be computed.
    #[pyo3(signature = (characteristic = 0))]
    fn analyze<'py>(&self, py: Python<'py>, characteristic: u64) -> PyResult<Bound<'py, PyAny>> {
        let c = self::characteristic(characteristic)?;
        let dec = decompose(&self.inner).map_err(err)?;
        let props = monoalg::properties::report_for(&self.inner, &dec);
        let regularity = match analyze(&self.inner, c) {
            Ok(r) => report::regularity_json(&r, c.get(), false),
            Err(e) => json!({ "error": { "kind": e.kind(), "message": e.to_string() } }),
        };
        let doc = json!({
            "input": report::input_json(None, self.inner.generators()),
            "decomposition": report::decomposition_json(&dec, false),
            "properties": report::properties_json(&props),
            "regularity": regularity,
        });
        to_py(py, &doc)
    }

    fn __repr__(&self) -> String {
        format!("AffineSemigroup({:?})", self.inner.generators())
    }
}

/// Graded Betti numbers, regularity and depth of a monomial ideal given by
/// exponent vectors in `num_vars` variables.
#[pyfunction]
#[pyo3(signature = (generators, num_vars, characteristic = 0))]
fn betti<'py>(
    py: Python<'py>,
    generators: Vec<Vec<u32>>,
    num_vars: usize,
    characteristic: u64,
) -> PyResult<Bound<'py, PyAny>> {
    if generators.is_empty() {
        return Err(MonoalgError::new_err(
            "EmptyInput: the ideal needs at least one generator",
        ));
    }
    if let Some(g) = generators.iter().find(|g| g.len() != num_vars) {
        return Err(MonoalgError::new_err(format!(
            "DimensionMismatch: generator {g:?} does not have {num_vars} exponents"
        )));
    }
    let ideal = MonomialIdeal::new(num_vars, generators);
    let table = betti_ideal(&ideal, self::characteristic(characteristic)?);
    let doc = json!({
        "table": table.triples(),
        "reg": reg_of(&table),
        "depth": depth_of(&table, num_vars),
        "projectiveDimension": table.projective_dimension(),
    });
    to_py(py, &doc)
}

#[pymodule]
fn monoalg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAffineSemigroup>()?;
    m.add_function(wrap_pyfunction!(betti, m)?)?;
    m.add("MonoalgError", m.py().get_type::<MonoalgError>())?;
    Ok(())
}
