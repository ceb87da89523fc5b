//! Python bindings: rings, exact matrix invariants, symbols, witnesses and orbit reports.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use vaserstein_core::cli::{
    execute, ActionArgs, ClassicalArgs, Command, CrosscheckArgs, GeneralArgs, Lemma21Args, OrbitArgs, SectionArgs,
};
use vaserstein_core::linalg::{pfaffian as pf, Matrix};
use vaserstein_core::report::witness_from_json;
use vaserstein_core::witt::{verify_witness as replay, Mode};
use vaserstein_core::{Elem, Error};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Ring", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyRing(vaserstein_core::Ring);

impl PyRing {
    fn elem(&self, x: &str) -> PyResult<Elem> {
        self.0.parse_elem(x).map_err(err)
    }

    fn row(&self, xs: &[String]) -> PyResult<Vec<Elem>> {
        xs.iter().map(|x| self.elem(x)).collect()
    }

    fn fmt(&self, xs: &[Elem]) -> Vec<String> {
        xs.iter().map(|x| self.0.format(x)).collect()
    }

    fn matrix(&self, rows: &[Vec<String>]) -> PyResult<Matrix> {
        Matrix::from_strings(&self.0, rows).map_err(err)
    }
}

#[pymethods]
impl PyRing {
    /// Parse `Z`, `Q`, `Z/n`, `GF(p)` or `K[vars]/(relations)`.
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        vaserstein_core::Ring::parse(spec).map(PyRing).map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Ring('{}')", self.0)
    }

    fn __eq__(&self, other: &PyRing) -> bool {
        self.0 == other.0
    }

    fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    fn is_field(&self) -> bool {
        self.0.is_field()
    }

    /// Canonical form of an element.
    fn normalize(&self, x: &str) -> PyResult<String> {
        Ok(self.0.format(&self.elem(x)?))
    }

    fn add(&self, x: &str, y: &str) -> PyResult<String> {
        Ok(self.0.format(&self.0.add(&self.elem(x)?, &self.elem(y)?)))
    }

    fn mul(&self, x: &str, y: &str) -> PyResult<String> {
        Ok(self.0.format(&self.0.mul(&self.elem(x)?, &self.elem(y)?)))
    }

    fn inverse(&self, x: &str) -> PyResult<Option<String>> {
        Ok(self.0.inverse(&self.elem(x)?).map(|y| self.0.format(&y)))
    }

    /// All elements of a finite ring.
    fn elements(&self) -> PyResult<Vec<String>> {
        let el = self.0.elements().ok_or_else(|| err(Error::RingNotFinite(self.0.to_string())))?;
        Ok(self.fmt(&el))
    }

    /// `b` with `a·b = 1`, or `None` when `a` is not unimodular.
    fn bezout(&self, a: Vec<String>) -> PyResult<Option<Vec<String>>> {
        Ok(self.0.bezout(&self.row(&a)?).map(|b| self.fmt(&b)))
    }

    fn det(&self, m: Vec<Vec<String>>) -> PyResult<String> {
        Ok(self.0.format(&self.matrix(&m)?.det().map_err(err)?))
    }

    fn pfaffian(&self, m: Vec<Vec<String>>) -> PyResult<String> {
        Ok(self.0.format(&pf(&self.matrix(&m)?).map_err(err)?))
    }

    /// The 4x4 matrix V(a, b); `b` from Bezout when omitted.
    #[pyo3(signature = (a, b=None))]
    fn classical_symbol(&self, a: Vec<String>, b: Option<Vec<String>>) -> PyResult<Vec<Vec<String>>> {
        let a = self.row(&a)?;
        let b = match b {
            Some(b) => self.row(&b)?,
            None => self.0.bezout(&a).ok_or_else(|| err(Error::NotUnimodular))?,
        };
        let v = vaserstein_core::symbol::classical_vaserstein(&self.0, &a, &b).map_err(err)?;
        Ok(v.matrix().to_strings())
    }
}

fn join(xs: &[String]) -> String {
    xs.join(",")
}

/// Run a command and return `{"verdict", "result"}` as Python objects.
fn run(py: Python<'_>, cmd: Command) -> PyResult<Py<PyAny>> {
    let out = execute(&cmd).map_err(err)?;
    let doc = serde_json::json!({"verdict": out.verdict.as_str(), "result": out.result});
    let json = py.import("json")?;
    Ok(json.call_method1("loads", (doc.to_string(),))?.unbind())
}

#[pyfunction]
#[pyo3(signature = (ring, a, s=None, p0="free:2"))]
fn symbol(py: Python<'_>, ring: &PyRing, a: Vec<String>, s: Option<Vec<String>>, p0: &str) -> PyResult<Py<PyAny>> {
    run(
        py,
        Command::SymbolGeneral(GeneralArgs {
            ring: ring.0.to_string(),
            p0: p0.into(),
            a: join(&a),
            s: s.as_deref().map(join),
        }),
    )
}

#[pyfunction]
#[pyo3(signature = (ring, a, b=None))]
fn classical_report(py: Python<'_>, ring: &PyRing, a: Vec<String>, b: Option<Vec<String>>) -> PyResult<Py<PyAny>> {
    run(
        py,
        Command::SymbolClassical(ClassicalArgs {
            ring: ring.0.to_string(),
            a: join(&a),
            b: b.as_deref().map(join),
        }),
    )
}

#[pyfunction]
#[pyo3(signature = (ring, a, s, t, p0="free:2"))]
fn section_witness(py: Python<'_>, ring: &PyRing, a: Vec<String>, s: Vec<String>, t: Vec<String>, p0: &str) -> PyResult<Py<PyAny>> {
    run(
        py,
        Command::WitnessSection(SectionArgs {
            ring: ring.0.to_string(),
            p0: p0.into(),
            a: join(&a),
            s: join(&s),
            t: join(&t),
        }),
    )
}

/// `phi` and `word` are JSON text, as accepted by `vsym witness-action`.
#[pyfunction]
#[pyo3(signature = (ring, a, phi=None, word=None, s=None, p0="free:2"))]
fn action_witness(
    py: Python<'_>,
    ring: &PyRing,
    a: Vec<String>,
    phi: Option<String>,
    word: Option<String>,
    s: Option<Vec<String>>,
    p0: &str,
) -> PyResult<Py<PyAny>> {
    run(
        py,
        Command::WitnessAction(ActionArgs {
            ring: ring.0.to_string(),
            p0: p0.into(),
            a: join(&a),
            s: s.as_deref().map(join),
            phi,
            word,
        }),
    )
}

/// Witness for an elementary generator `id + r·e_ij` on `R^(2n)`, 1-based indices.
#[pyfunction]
#[pyo3(signature = (ring, n, i, j, r="1"))]
fn lemma21(py: Python<'_>, ring: &PyRing, n: usize, i: usize, j: usize, r: &str) -> PyResult<Py<PyAny>> {
    run(
        py,
        Command::Lemma21(Lemma21Args {
            ring: Some(ring.0.to_string()),
            n: Some(n),
            i: Some(i),
            j: Some(j),
            r: r.into(),
            input: None,
        }),
    )
}

#[pyfunction]
#[pyo3(signature = (ring, n, constancy=false, depth=None))]
fn orbit_report(py: Python<'_>, ring: &PyRing, n: usize, constancy: bool, depth: Option<usize>) -> PyResult<Py<PyAny>> {
    run(
        py,
        Command::OrbitEnum(OrbitArgs {
            ring: ring.0.to_string(),
            n,
            constancy,
            depth,
        }),
    )
}

#[pyfunction]
#[pyo3(signature = (ring, a, b=None, depth=None))]
fn crosscheck_free(py: Python<'_>, ring: &PyRing, a: Vec<String>, b: Option<Vec<String>>, depth: Option<usize>) -> PyResult<Py<PyAny>> {
    run(
        py,
        Command::CrosscheckFree(CrosscheckArgs {
            ring: ring.0.to_string(),
            a: join(&a),
            b: b.as_deref().map(join),
            depth,
        }),
    )
}

/// Replay a witness given as JSON text. Returns `None` when it verifies and
/// the rejection message otherwise; malformed input raises `ValueError`.
#[pyfunction]
#[pyo3(signature = (text, mode=None))]
fn verify_witness(text: &str, mode: Option<&str>) -> PyResult<Option<String>> {
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| err(e.into()))?;
    let doc = match witness_from_json(&v) {
        Ok(d) => d,
        Err(e @ Error::WitnessInvalid { .. }) => return Ok(Some(e.to_string())),
        Err(e) => return Err(err(e)),
    };
    let mode = match mode {
        Some(m) => Mode::parse(m).map_err(err)?,
        None => doc.mode,
    };
    match replay(&doc.witness, mode) {
        Ok(()) => Ok(None),
        Err(e @ (Error::WitnessInvalid { .. } | Error::ModeViolation { .. } | Error::VerificationFailed(_))) => {
            Ok(Some(e.to_string()))
        }
        Err(e) => Err(err(e)),
    }
}

#[pymodule]
fn vaserstein(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRing>()?;
    m.add_function(wrap_pyfunction!(symbol, m)?)?;
    m.add_function(wrap_pyfunction!(classical_report, m)?)?;
    m.add_function(wrap_pyfunction!(section_witness, m)?)?;
    m.add_function(wrap_pyfunction!(action_witness, m)?)?;
    m.add_function(wrap_pyfunction!(lemma21, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_report, m)?)?;
    m.add_function(wrap_pyfunction!(crosscheck_free, m)?)?;
    m.add_function(wrap_pyfunction!(verify_witness, m)?)?;
    Ok(())
}
