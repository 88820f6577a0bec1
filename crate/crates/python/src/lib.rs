//! Python bindings for `cominq`.
//!
//! Words are lists of simple-reflection indices, ring elements are strings in
//! the table grammar (`"O12 + 2 O12' - q O1"`), and verification suites come
//! back as lists of `(check, pass, detail)` tuples.

use pyo3::exceptions::{PyOSError, PyOverflowError, PyValueError};
use pyo3::prelude::*;

use cominq::cayley::{self, MultTable, QKElement};
use cominq::qconst::{self, GWTables};
use cominq::{CheckResult, CominSpace, Error};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Overflow(_) => PyOverflowError::new_err(e.to_string()),
        Error::Io(_) => PyOSError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn checks(v: Vec<CheckResult>) -> Vec<(String, bool, String)> {
    v.into_iter().map(|c| (c.check, c.pass, c.detail)).collect()
}

/// A cominuscule space: `Space("Gr(2,5)")`, `Space("E6")`, ...
#[pyclass(name = "Space", frozen)]
struct PySpace {
    inner: CominSpace,
}

impl PySpace {
    fn rep(&self, word: Vec<usize>) -> PyResult<cominq::WeylElement> {
        let x = &self.inner;
        x.wp.min_rep(&x.element(&word).map_err(to_py)?).map_err(to_py)
    }

    fn word(&self, u: &cominq::WeylElement) -> PyResult<Vec<usize>> {
        self.inner.word(u).map_err(to_py)
    }
}

#[pymethods]
impl PySpace {
    #[new]
    fn new(space: &str) -> PyResult<Self> {
        Ok(PySpace { inner: CominSpace::parse(space).map_err(to_py)? })
    }

    #[getter]
    fn node(&self) -> usize {
        self.inner.node
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    #[getter]
    fn diameter(&self) -> usize {
        self.inner.diameter()
    }

    /// `(d_X(2), d_X(3))`.
    fn dx_table(&self) -> (usize, usize) {
        let t = self.inner.dx_table();
        (t.d2, t.d3)
    }

    fn __len__(&self) -> usize {
        self.inner.wp.len()
    }

    fn __repr__(&self) -> String {
        format!("Space('{}')", self.inner.family)
    }

    /// Canonical words of all minimal coset representatives, by length.
    fn representatives(&self) -> PyResult<Vec<Vec<usize>>> {
        self.inner.wp.reps.iter().map(|u| self.word(u)).collect()
    }

    /// Degree distance of the coset of `word`.
    fn deg_dist(&self, word: Vec<usize>) -> PyResult<usize> {
        let u = self.rep(word)?;
        self.inner.deg_dist(&u).map_err(to_py)
    }

    fn gamma(&self, word: Vec<usize>, d: usize) -> PyResult<Vec<usize>> {
        let u = self.rep(word)?;
        let g = self.inner.gamma(&u, d).map_err(to_py)?;
        self.word(&g)
    }

    fn line_chain(&self, word: Vec<usize>) -> PyResult<Vec<Vec<usize>>> {
        let u = self.rep(word)?;
        let chain = self.inner.line_chain(&u).map_err(to_py)?;
        chain.iter().map(|c| self.word(c)).collect()
    }

    fn x_small(&self, d: usize) -> PyResult<Vec<usize>> {
        let x = self.inner.x_small(d).map_err(to_py)?;
        self.word(&x)
    }

    fn bruhat_leq(&self, a: Vec<usize>, b: Vec<usize>) -> PyResult<bool> {
        let (a, b) = (self.rep(a)?, self.rep(b)?);
        self.inner.root_system().bruhat_leq(&a, &b).map_err(to_py)
    }

    fn verify_dx3(&self) -> PyResult<bool> {
        Ok(self.inner.verify_dx3().map_err(to_py)?.pass)
    }

    fn verify_all(&self) -> PyResult<Vec<(String, bool, String)>> {
        Ok(checks(self.inner.verify_all().map_err(to_py)?))
    }
}

/// The QK(E6/P6) multiplication table; `QKTable()` loads the built-in copy.
#[pyclass(name = "QKTable", frozen)]
struct PyQKTable {
    inner: MultTable,
}

#[pymethods]
impl PyQKTable {
    #[new]
    #[pyo3(signature = (text = None))]
    fn new(text: Option<&str>) -> PyResult<Self> {
        let inner = match text {
            Some(t) => cayley::parse_table(t).map_err(to_py)?,
            None => MultTable::shipped(),
        };
        Ok(PyQKTable { inner })
    }

    #[staticmethod]
    fn from_file(path: std::path::PathBuf) -> PyResult<Self> {
        let text = std::fs::read_to_string(&path)?;
        Self::new(Some(&text))
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn multiply(&self, a: &str, b: &str) -> PyResult<String> {
        let a: QKElement = a.parse().map_err(to_py)?;
        let b: QKElement = b.parse().map_err(to_py)?;
        Ok(self.inner.multiply(&a, &b).map_err(to_py)?.to_string())
    }

    #[getter]
    fn max_q_degree(&self) -> u32 {
        self.inner.max_q_degree()
    }

    fn index(&self) -> PyResult<i64> {
        cayley::infer_index(&self.inner).map_err(to_py)
    }

    fn serialize(&self) -> String {
        cayley::serialize(&self.inner)
    }

    /// Census, associativity, degree bound, codim/sign rule and label links.
    fn verify(&self) -> PyResult<Vec<(String, bool, String)>> {
        let e6 = CominSpace::parse("E6").map_err(to_py)?;
        Ok(checks(cayley::verify_table(&self.inner, &e6).map_err(to_py)?))
    }
}

#[pyfunction]
fn enumerate_sequences(d: usize) -> Vec<Vec<usize>> {
    qconst::enumerate_sequences(d).into_iter().map(|s| s.entries().to_vec()).collect()
}

#[pyfunction]
fn count_sequences(d: usize, d0: usize, length: usize) -> PyResult<i64> {
    qconst::count_sequences(d, d0, length).map_err(to_py)
}

#[pyfunction]
fn alt_binomial_sum(k: usize) -> PyResult<i64> {
    qconst::alt_binomial_sum(k).map_err(to_py)
}

/// `values[k]` plays `c(k)` for `k` in `0..=dmax`.
#[pyfunction]
fn cancellation_sum(d: usize, values: Vec<i64>) -> PyResult<i64> {
    let Some(dmax) = values.len().checked_sub(1) else {
        return Err(PyValueError::new_err("values must be non-empty"));
    };
    qconst::cancellation_sum(d, dmax, |k| values[k]).map_err(to_py)
}

/// Compares the assembly routes on one random table; returns
/// `(constants compared, mismatches)`.
#[pyfunction]
#[pyo3(signature = (basis, dmax, seed, lo = -5, hi = 5))]
fn check_oracles(basis: usize, dmax: usize, seed: u64, lo: i64, hi: i64) -> PyResult<(usize, usize)> {
    let t = GWTables::random(basis, dmax, seed, lo, hi).map_err(to_py)?;
    let c = qconst::check_oracles(&t).map_err(to_py)?;
    Ok((c.compared, c.mismatches))
}

/// Runs the command line in-process; returns `(exit_code, payload)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String) {
    let out = cominq::cli::run(std::iter::once("cominq".to_string()).chain(args));
    (out.exit_code, out.payload)
}

#[pymodule]
fn cominq_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySpace>()?;
    m.add_class::<PyQKTable>()?;
    m.add_function(wrap_pyfunction!(enumerate_sequences, m)?)?;
    m.add_function(wrap_pyfunction!(count_sequences, m)?)?;
    m.add_function(wrap_pyfunction!(alt_binomial_sum, m)?)?;
    m.add_function(wrap_pyfunction!(cancellation_sum, m)?)?;
    m.add_function(wrap_pyfunction!(check_oracles, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
