//! Python bindings for `frac-bernoulli`.

use frac_bernoulli as fb;
use pyo3::exceptions::{PyArithmeticError, PyIOError, PyIndexError, PyOverflowError, PyValueError};
use pyo3::prelude::*;

fn to_py(err: fb::Error) -> PyErr {
    let msg = err.to_string();
    match err {
        fb::Error::Index(_) => PyIndexError::new_err(msg),
        fb::Error::Overflow { .. } => PyOverflowError::new_err(msg),
        fb::Error::DomainExit { .. } | fb::Error::Divergence { .. } => PyArithmeticError::new_err(msg),
        fb::Error::Io(_) => PyIOError::new_err(msg),
        _ => PyValueError::new_err(msg),
    }
}

/// Parameters of `D^β u + a0 u = a1 u^(p+1)`, `u(0) = u0`.
#[pyclass(name = "ProblemSpec", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySpec(fb::ProblemSpec);

#[pymethods]
impl PySpec {
    #[new]
    fn new(beta: f64, a0: f64, a1: f64, p: usize, u0: f64) -> PyResult<Self> {
        fb::ProblemSpec::new(beta, a0, a1, p, u0).map(PySpec).map_err(to_py)
    }

    /// `a0 = a1 = -1`.
    #[staticmethod]
    fn logistic(beta: f64, p: usize, u0: f64) -> PyResult<Self> {
        fb::ProblemSpec::logistic(beta, p, u0).map(PySpec).map_err(to_py)
    }

    #[getter]
    fn beta(&self) -> f64 {
        self.0.beta
    }

    #[getter]
    fn a0(&self) -> f64 {
        self.0.a0
    }

    #[getter]
    fn a1(&self) -> f64 {
        self.0.a1
    }

    #[getter]
    fn p(&self) -> usize {
        self.0.p
    }

    #[getter]
    fn u0(&self) -> f64 {
        self.0.u0
    }

    fn sign_flipped(&self) -> Self {
        PySpec(self.0.sign_flipped())
    }

    fn is_equilibrium(&self) -> bool {
        self.0.is_equilibrium()
    }

    fn __repr__(&self) -> String {
        let s = &self.0;
        format!("ProblemSpec(beta={}, a0={}, a1={}, p={}, u0={})", s.beta, s.a0, s.a1, s.p, s.u0)
    }
}

/// Normalized coefficients `d_n^(h)` for `h = 1..p+1`.
#[pyclass(name = "CoeffTable", frozen)]
struct PyCoeffTable(fb::CoeffTable);

#[pymethods]
impl PyCoeffTable {
    #[getter]
    fn spec(&self) -> PySpec {
        PySpec(*self.0.spec())
    }

    #[getter]
    fn n_max(&self) -> usize {
        self.0.n_max()
    }

    #[getter]
    fn overflow_at(&self) -> Option<usize> {
        self.0.overflow_at()
    }

    #[getter]
    fn valid_len(&self) -> usize {
        self.0.valid_len()
    }

    fn d(&self, h: usize, n: usize) -> PyResult<f64> {
        self.0.d(h, n).map_err(to_py)
    }

    fn d1(&self) -> Vec<f64> {
        self.0.d1().to_vec()
    }

    fn power(&self, h: usize) -> PyResult<Vec<f64>> {
        self.0.power(h).map(<[f64]>::to_vec).map_err(to_py)
    }

    /// Raw coefficient `c_n^(h)` as `(sign, ln|c|)`.
    fn raw_coefficient(&self, h: usize, n: usize) -> PyResult<(i8, f64)> {
        let m = fb::raw_coefficient(&self.0, h, n).map_err(to_py)?;
        Ok((m.sign(), m.log_abs()))
    }

    fn __len__(&self) -> usize {
        self.0.n_max() + 1
    }
}

/// Truncated series `u(t) = Σ d_n t^(βn)`.
#[pyclass(name = "SeriesSolution", frozen)]
struct PySeries(fb::SeriesSolution);

#[pymethods]
impl PySeries {
    #[new]
    fn new(table: &PyCoeffTable) -> Self {
        PySeries(fb::SeriesSolution::from_table(&table.0))
    }

    #[getter]
    fn spec(&self) -> PySpec {
        PySpec(*self.0.spec())
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    fn coefficients(&self) -> Vec<f64> {
        self.0.coefficients().to_vec()
    }

    fn evaluate(&self, t: f64) -> PyResult<f64> {
        self.0.evaluate(t).map_err(to_py)
    }

    fn evaluate_grid(&self, t_grid: Vec<f64>) -> PyResult<Vec<f64>> {
        self.0.evaluate_grid(&t_grid).map_err(to_py)
    }

    fn caputo_derivative(&self) -> PyResult<Self> {
        self.0.caputo_derivative().map(PySeries).map_err(to_py)
    }

    fn residual(&self, t: f64) -> PyResult<f64> {
        self.0.residual(t).map_err(to_py)
    }

    #[pyo3(signature = (tol = fb::series::DEFAULT_TAIL_TOL))]
    fn safe_t_max(&self, tol: f64) -> f64 {
        self.0.safe_t_max(tol)
    }
}

/// Root-test sequence `r_n = |d_n|^(-1/(βn))`.
#[pyclass(name = "RadiusSequence", frozen)]
struct PyRadius(fb::RadiusSequence);

#[pymethods]
impl PyRadius {
    #[getter]
    fn entries(&self) -> Vec<(usize, f64)> {
        self.0.entries.clone()
    }

    #[getter]
    fn tail_summary(&self) -> f64 {
        self.0.tail_summary
    }

    /// Orders with `d_n = 0`, left out of `entries`.
    #[getter]
    fn skipped(&self) -> Vec<usize> {
        self.0.skipped.clone()
    }
}

#[pyfunction]
fn compute_coefficients(spec: &PySpec, n_max: usize) -> PyResult<PyCoeffTable> {
    fb::compute_coefficients(&spec.0, n_max).map(PyCoeffTable).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (table, n_limit = None))]
fn radius_sequence(table: &PyCoeffTable, n_limit: Option<usize>) -> PyResult<PyRadius> {
    let n = n_limit.unwrap_or_else(|| table.0.n_max());
    fb::radius_sequence(&table.0, n).map(PyRadius).map_err(to_py)
}

/// Shorthand for `SeriesSolution(compute_coefficients(spec, n_terms))`.
#[pyfunction]
#[pyo3(signature = (spec, n_terms = 200))]
fn solve(spec: &PySpec, n_terms: usize) -> PyResult<PySeries> {
    let table = fb::compute_coefficients(&spec.0, n_terms).map_err(to_py)?;
    Ok(PySeries(fb::SeriesSolution::from_table(&table)))
}

#[pyfunction]
fn ln_gamma(x: f64) -> PyResult<f64> {
    fb::ln_gamma(x).map_err(to_py)
}

#[pyfunction]
fn gen_binom(n: usize, k: usize, beta: f64) -> PyResult<f64> {
    fb::gen_binom(n, k, beta).map_err(to_py)
}

#[pyfunction]
fn gamma_step_ratio(n: usize, beta: f64) -> PyResult<f64> {
    fb::gamma_step_ratio(n, beta).map_err(to_py)
}

/// Closed formulas `(c1, c2, c3)`.
#[pyfunction]
fn closed_coefficients(spec: &PySpec) -> (f64, f64, f64) {
    (fb::closed_c1(&spec.0), fb::closed_c2(&spec.0), fb::closed_c3(&spec.0))
}

#[pyfunction]
fn solve_c3_zero(beta: f64, a0: f64, a1: f64, p: usize) -> Vec<f64> {
    fb::solve_c3_zero(beta, a0, a1, p)
}

#[pyfunction]
fn exact_beta1(spec: &PySpec, t: f64) -> PyResult<f64> {
    fb::oracles::exact_beta1_bernoulli(&spec.0, t).map_err(to_py)
}

/// Fractional Adams–Bashforth–Moulton path as `[(t, u), ...]`.
#[pyfunction]
#[pyo3(signature = (spec, t_end, steps = 8192))]
fn abm_solve(py: Python<'_>, spec: &PySpec, t_end: f64, steps: usize) -> PyResult<Vec<(f64, f64)>> {
    let spec = spec.0;
    py.detach(|| fb::oracles::abm_solve(&spec, t_end, steps)).map_err(to_py)
}

/// `d_n^(1)` from the extended-precision recursion, rounded to float.
#[pyfunction]
#[pyo3(signature = (spec, n_max, digits = 30))]
fn highprec_coefficients(py: Python<'_>, spec: &PySpec, n_max: usize, digits: u32) -> PyResult<Vec<f64>> {
    let spec = spec.0;
    py.detach(|| fb::oracles::highprec_coefficients(&spec, n_max, digits))
        .map(|t| t.d1())
        .map_err(to_py)
}

#[pymodule]
fn frac_bernoulli_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySpec>()?;
    m.add_class::<PyCoeffTable>()?;
    m.add_class::<PySeries>()?;
    m.add_class::<PyRadius>()?;
    m.add_function(wrap_pyfunction!(compute_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(radius_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(ln_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(gen_binom, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_step_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(closed_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(solve_c3_zero, m)?)?;
    m.add_function(wrap_pyfunction!(exact_beta1, m)?)?;
    m.add_function(wrap_pyfunction!(abm_solve, m)?)?;
    m.add_function(wrap_pyfunction!(highprec_coefficients, m)?)?;
    Ok(())
}
