//! Python bindings: a `Polynomial` class over the exact engines plus
//! module-level helpers for term counts, the census and raw determinants.
//!
//! Exact rationals cross the boundary as `(numerator, denominator)` tuples
//! of Python ints, ready for `fractions.Fraction`.

use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use expansive_core::bounds;
use expansive_core::dpoly;
use expansive_core::enumerate;
use expansive_core::expansivity::{self, DMatrixSpec, DSign, Strategy};
use expansive_core::linalg;
use expansive_core::oracle;
use expansive_core::poly::{Rational, SignNormalization};
use expansive_core::{Error, IntPolynomial};

fn to_py_err(e: Error) -> PyErr {
    if e.is_input_error() {
        PyValueError::new_err(e.to_string())
    } else {
        PyRuntimeError::new_err(e.to_string())
    }
}

fn parse_sign(sign: &str) -> PyResult<DSign> {
    match sign {
        "+" | "plus" => Ok(DSign::Plus),
        "-" | "minus" => Ok(DSign::Minus),
        other => Err(PyValueError::new_err(format!(
            "sign must be '+' or '-', got {other:?}"
        ))),
    }
}

fn parse_strategy(strategy: &str) -> PyResult<Strategy> {
    match strategy {
        "full" => Ok(Strategy::Full),
        "reduced" => Ok(Strategy::Reduced),
        other => Err(PyValueError::new_err(format!(
            "strategy must be 'full' or 'reduced', got {other:?}"
        ))),
    }
}

fn rational_parts(r: &Rational) -> (BigInt, BigInt) {
    (r.numer().clone(), r.denom().clone())
}

fn build_rational(numer: BigInt, denom: BigInt) -> PyResult<Rational> {
    if denom == BigInt::from(0) {
        return Err(PyValueError::new_err("denominator must be nonzero"));
    }
    Ok(Rational::new(numer, denom))
}

fn verdict_dict<'py>(
    py: Python<'py>,
    v: &expansivity::ExpansivityVerdict,
) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("expansive", v.expansive)?;
    d.set_item("method", v.method.as_str())?;
    d.set_item("witness", &v.witness)?;
    d.set_item("conditions_checked", v.conditions_checked)?;
    Ok(d)
}

fn bound_pair_dict<'py>(py: Python<'py>, pair: &bounds::BoundPair) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("real", rational_parts(&pair.real))?;
    d.set_item("complex", pair.complex.clone())?;
    Ok(d)
}

/// An integer polynomial, coefficients ascending (index i holds the
/// coefficient of x^i).
#[pyclass(frozen)]
struct Polynomial {
    inner: IntPolynomial,
}

impl Polynomial {
    fn wrap(inner: IntPolynomial) -> Self {
        Polynomial { inner }
    }
}

#[pymethods]
impl Polynomial {
    #[new]
    fn new(coeffs: Vec<BigInt>) -> PyResult<Self> {
        IntPolynomial::new(coeffs)
            .map(Self::wrap)
            .map_err(to_py_err)
    }

    /// Parse a comma- or whitespace-separated ascending coefficient list.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        IntPolynomial::parse(text)
            .map(Self::wrap)
            .map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Polynomial({:?})",
            self.inner
                .coeffs()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
        )
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn coeffs(&self) -> Vec<BigInt> {
        self.inner.coeffs().to_vec()
    }

    /// Exact evaluation at numer/denom; returns (numerator, denominator).
    #[pyo3(signature = (numer, denom = None))]
    fn evaluate(&self, numer: BigInt, denom: Option<BigInt>) -> PyResult<(BigInt, BigInt)> {
        let x = build_rational(numer, denom.unwrap_or_else(|| BigInt::from(1)))?;
        Ok(rational_parts(&self.inner.evaluate(&x)))
    }

    /// Dict with height, length and the |a_0| Mahler-measure stand-in.
    fn measures<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let m = self.inner.measures().map_err(to_py_err)?;
        let d = PyDict::new(py);
        d.set_item("height", m.height)?;
        d.set_item("length", m.length)?;
        d.set_item("mahler_if_expansive", m.mahler_if_expansive)?;
        Ok(d)
    }

    /// Returns (normalized polynomial, what-happened) where the second item
    /// is one of "unchanged", "negated", "zero-constant".
    fn normalized(&self) -> PyResult<(Polynomial, &'static str)> {
        let (g, how) = self.inner.normalize_sign().map_err(to_py_err)?;
        let tag = match how {
            SignNormalization::Unchanged => "unchanged",
            SignNormalization::Negated => "negated",
            SignNormalization::ZeroConstant => "zero-constant",
        };
        Ok((Self::wrap(g), tag))
    }

    fn reversed(&self) -> Polynomial {
        Self::wrap(self.inner.reversed())
    }

    fn schur_transform(&self) -> PyResult<Polynomial> {
        if self.inner.degree() < 1 {
            return Err(PyValueError::new_err("Schur transform needs degree >= 1"));
        }
        Ok(Self::wrap(self.inner.schur_transform()))
    }

    /// q^n f((p/q) x): integer polynomial whose roots are the originals
    /// divided by p/q.
    #[pyo3(signature = (numer, denom = None))]
    fn scale_argument(&self, numer: BigInt, denom: Option<BigInt>) -> PyResult<Polynomial> {
        let s = build_rational(numer, denom.unwrap_or_else(|| BigInt::from(1)))?;
        self.inner
            .scale_argument(&s)
            .map(Self::wrap)
            .map_err(to_py_err)
    }

    #[pyo3(signature = (strategy = "full"))]
    fn is_expansive(&self, strategy: &str) -> PyResult<bool> {
        let verdict = expansivity::check_d_conditions(&self.inner, parse_strategy(strategy)?)
            .map_err(to_py_err)?;
        Ok(verdict.expansive)
    }

    /// Full verdict from the determinant conditions.
    #[pyo3(signature = (strategy = "full"))]
    fn check<'py>(&self, py: Python<'py>, strategy: &str) -> PyResult<Bound<'py, PyDict>> {
        let verdict = expansivity::check_d_conditions(&self.inner, parse_strategy(strategy)?)
            .map_err(to_py_err)?;
        verdict_dict(py, &verdict)
    }

    /// Verdict from the Schur-Cohn chain.
    fn check_schur_cohn<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let verdict = expansivity::check_schur_cohn(&self.inner).map_err(to_py_err)?;
        verdict_dict(py, &verdict)
    }

    fn count_roots_inside<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = expansivity::count_roots_inside_unit(&self.inner).map_err(to_py_err)?;
        let d = PyDict::new(py);
        d.set_item("inside", r.inside)?;
        d.set_item("outside", r.outside)?;
        d.set_item("on_circle_detected", r.on_circle_detected)?;
        Ok(d)
    }

    /// Necessary coefficient-box conditions.
    fn coefficient_bounds_ok(&self) -> bool {
        expansivity::coefficient_bound_filter(&self.inner)
    }

    /// True iff every root has |root| > numer/denom.
    #[pyo3(signature = (numer, denom = None))]
    fn roots_outside_radius(&self, numer: BigInt, denom: Option<BigInt>) -> PyResult<bool> {
        let s = build_rational(numer, denom.unwrap_or_else(|| BigInt::from(1)))?;
        expansivity::roots_outside_radius(&self.inner, &s)
            .map(|v| v.expansive)
            .map_err(to_py_err)
    }

    /// Certified radius (numerator, denominator): all roots lie beyond it,
    /// some root within tolerance above it.
    fn certified_gap(&self, tol_numer: BigInt, tol_denom: BigInt) -> PyResult<(BigInt, BigInt)> {
        let tol = build_rational(tol_numer, tol_denom)?;
        expansivity::certified_gap(&self.inner, &tol)
            .map(|s| rational_parts(&s))
            .map_err(to_py_err)
    }

    /// The k x k determinant-condition matrix as nested lists.
    fn d_matrix(&self, k: usize, sign: &str) -> PyResult<Vec<Vec<BigInt>>> {
        let (g, _) = self.inner.normalize_sign().map_err(to_py_err)?;
        let n = g.degree();
        let spec = DMatrixSpec::new(k, parse_sign(sign)?, n).map_err(to_py_err)?;
        let m = expansivity::build_d_matrix(&g, &spec).map_err(to_py_err)?;
        Ok((0..m.dim())
            .map(|i| (0..m.dim()).map(|j| m.get(i, j).clone()).collect())
            .collect())
    }

    fn d_determinant(&self, k: usize, sign: &str) -> PyResult<BigInt> {
        let (g, _) = self.inner.normalize_sign().map_err(to_py_err)?;
        let n = g.degree();
        expansivity::d_determinant(&g, k, parse_sign(sign)?, n).map_err(to_py_err)
    }

    /// Coefficients of the determinant polynomial for (k, sign).
    fn d_polynomial(&self, k: usize, sign: &str) -> PyResult<Vec<BigInt>> {
        let n = self.inner.degree();
        let spec = DMatrixSpec::new(k, parse_sign(sign)?, n).map_err(to_py_err)?;
        dpoly::d_polynomial(&self.inner, &spec)
            .map(|p| p.coeffs().to_vec())
            .map_err(to_py_err)
    }

    /// Polynomial with roots root_i * root_j over pairs i < j.
    fn pair_product(&self) -> PyResult<Vec<BigInt>> {
        dpoly::pair_product_polynomial(&self.inner)
            .map(|p| p.coeffs().to_vec())
            .map_err(to_py_err)
    }

    /// Resultant-style polynomial with roots root_i * root_j, all pairs.
    fn resultant_pair_product(&self) -> PyResult<Vec<BigInt>> {
        dpoly::resultant_pair_product(&self.inner)
            .map(|p| p.coeffs().to_vec())
            .map_err(to_py_err)
    }

    /// All four gap-bound families plus the best choice per root class.
    fn gap_bounds<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = bounds::best_bound_report(&self.inner).map_err(to_py_err)?;
        let d = PyDict::new(py);
        d.set_item("degree", r.n)?;
        let families = PyDict::new(py);
        families.set_item("A", bound_pair_dict(py, &r.a)?)?;
        families.set_item("AZ", bound_pair_dict(py, &r.az)?)?;
        families.set_item("H", bound_pair_dict(py, &r.height)?)?;
        families.set_item("L", bound_pair_dict(py, &r.length)?)?;
        d.set_item("families", families)?;
        d.set_item("best_real", r.best_real.as_str())?;
        d.set_item("best_complex", r.best_complex.map(|b| b.as_str()))?;
        d.set_item("implied_gap_real", rational_parts(&r.implied_gap_real))?;
        d.set_item(
            "implied_gap_complex",
            r.implied_gap_complex.as_ref().map(rational_parts),
        )?;
        d.set_item("implied_gap_any", rational_parts(&r.implied_gap_any))?;
        Ok(d)
    }

    /// Liouville right-hand side L(g)^(n-1) |a_0|^(deg g) for this
    /// (expansive) polynomial and a test polynomial g.
    fn liouville_rhs(&self, g: &Polynomial) -> PyResult<BigInt> {
        bounds::liouville_rhs(&bounds::LiouvilleQuery {
            f: self.inner.clone(),
            g: g.inner.clone(),
        })
        .map_err(to_py_err)
    }

    /// Numeric roots as (re, im) pairs.
    fn numeric_roots(&self) -> PyResult<Vec<(f64, f64)>> {
        let found = oracle::find_roots_numeric(&self.inner).map_err(to_py_err)?;
        Ok(found.roots.iter().map(|z| (z.re, z.im)).collect())
    }

    /// "expansive", "not-expansive" or "inconclusive" at the given margin.
    #[pyo3(signature = (margin = 1e-9))]
    fn numeric_expansive(&self, margin: f64) -> PyResult<&'static str> {
        Ok(
            match oracle::numeric_expansive(&self.inner, margin).map_err(to_py_err)? {
                oracle::NumericVerdict::Expansive => "expansive",
                oracle::NumericVerdict::NotExpansive => "not-expansive",
                oracle::NumericVerdict::Inconclusive => "inconclusive",
            },
        )
    }

    fn numeric_gap(&self) -> PyResult<f64> {
        oracle::numeric_gap(&self.inner).map_err(to_py_err)
    }
}

/// Expansion term counts for the (n-1) x (n-1) determinant over formal
/// coefficients.
#[pyfunction]
fn term_count(py: Python<'_>, n: usize) -> PyResult<Bound<'_, PyDict>> {
    let r = dpoly::term_count(n).map_err(to_py_err)?;
    let d = PyDict::new(py);
    d.set_item("n", r.n)?;
    d.set_item("raw_terms", r.raw_terms)?;
    d.set_item("collected_terms", r.collected_terms)?;
    d.set_item("reference_match", r.reference_match())?;
    Ok(d)
}

/// Census of expansive polynomials with the given degree and constant term;
/// returns (total_checked, [coefficient lists]).
#[pyfunction]
#[pyo3(signature = (degree, constant_term, height_cap = None, candidate_cap = None))]
fn enumerate_expansive(
    degree: usize,
    constant_term: BigInt,
    height_cap: Option<BigInt>,
    candidate_cap: Option<u64>,
) -> PyResult<(u64, Vec<Vec<BigInt>>)> {
    let mut spec = enumerate::EnumerationSpec::new(degree, constant_term).map_err(to_py_err)?;
    if let Some(h) = height_cap {
        spec = spec.with_height_cap(h);
    }
    if let Some(c) = candidate_cap {
        spec = spec.with_candidate_cap(c);
    }
    let census = enumerate::enumerate_expansive(&spec).map_err(to_py_err)?;
    Ok((
        census.total_checked,
        census
            .polynomials
            .iter()
            .map(|f| f.coeffs().to_vec())
            .collect(),
    ))
}

/// Exact determinant by fraction-free elimination; returns
/// (value, per-step max entry bits, pivot swaps).
#[pyfunction]
fn bareiss_determinant(rows: Vec<Vec<BigInt>>) -> PyResult<(BigInt, Vec<u64>, usize)> {
    let m = linalg::ExactMatrix::from_rows(rows).map_err(to_py_err)?;
    let (det, trace) = linalg::bareiss_determinant(&m);
    Ok((det, trace.max_entry_bits, trace.pivot_swaps))
}

/// Ceiling of the product of row Euclidean norms.
#[pyfunction]
fn hadamard_bound(rows: Vec<Vec<BigInt>>) -> PyResult<BigInt> {
    let m = linalg::ExactMatrix::from_rows(rows).map_err(to_py_err)?;
    Ok(linalg::hadamard_bound(&m))
}

#[pymodule]
fn expansive(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Polynomial>()?;
    m.add_function(wrap_pyfunction!(term_count, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_expansive, m)?)?;
    m.add_function(wrap_pyfunction!(bareiss_determinant, m)?)?;
    m.add_function(wrap_pyfunction!(hadamard_bound, m)?)?;
    Ok(())
}
