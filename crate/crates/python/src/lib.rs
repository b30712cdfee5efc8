//! Python module `hopfjoin`: monoids, bialgebras, split extensions and the reports.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use hopfjoin::bialg;
use hopfjoin::catlim::{self, BialgSplitExtension};
use hopfjoin::exactla::Field;
use hopfjoin::finmon;
use hopfjoin::harness::{self, format, Catalog, Loader, OutputFormat};
use hopfjoin::hopfadj;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_field(field: &str) -> PyResult<Field> {
    field.parse().map_err(err)
}

fn parse_format(name: &str) -> PyResult<OutputFormat> {
    match name {
        "text" => Ok(OutputFormat::Text),
        "machine" => Ok(OutputFormat::Machine),
        other => Err(PyValueError::new_err(format!("unknown format {other:?}"))),
    }
}

fn catalog_loader(field: Field) -> Loader {
    Loader::new(Catalog::embedded(), field)
}

#[pyclass(name = "Monoid", frozen)]
struct PyMonoid {
    inner: Arc<finmon::FiniteMonoid>,
}

#[pymethods]
impl PyMonoid {
    /// Parses a monoid document.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyMonoid { inner: Arc::new(format::parse_monoid(text).map_err(err)?) })
    }

    /// A bundled catalog monoid such as `"s3"` or `"m2"`.
    #[staticmethod]
    fn catalog(name: &str) -> PyResult<Self> {
        let m = catalog_loader(Field::Rational).monoid(&format!("@{name}"), None).map_err(err)?;
        Ok(PyMonoid { inner: m })
    }

    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn is_group(&self) -> bool {
        self.inner.is_group()
    }

    fn multiply(&self, a: &str, b: &str) -> PyResult<String> {
        let index =
            |l: &str| self.inner.index_of(l).ok_or_else(|| PyValueError::new_err(format!("unknown element {l:?}")));
        Ok(self.inner.label(self.inner.mul(index(a)?, index(b)?)).to_string())
    }

    fn to_toml(&self) -> String {
        format::serialize_monoid(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Monoid({})", self.inner)
    }
}

#[pyclass(name = "Bialgebra", frozen)]
struct PyBialgebra {
    inner: Arc<bialg::Bialgebra>,
}

#[pymethods]
impl PyBialgebra {
    /// Parses and validates a bialgebra document.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyBialgebra { inner: Arc::new(format::parse_bialgebra(text).map_err(err)?) })
    }

    #[staticmethod]
    fn catalog(name: &str) -> PyResult<Self> {
        let b = catalog_loader(Field::Rational).bialgebra(&format!("@{name}"), None).map_err(err)?;
        Ok(PyBialgebra { inner: b })
    }

    #[staticmethod]
    #[pyo3(signature = (monoid, field = "Q"))]
    fn monoid_algebra(monoid: &PyMonoid, field: &str) -> PyResult<Self> {
        Ok(PyBialgebra { inner: Arc::new(hopfadj::monoid_algebra(&monoid.inner, parse_field(field)?)) })
    }

    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    fn field(&self) -> String {
        self.inner.field().to_string()
    }

    fn is_cocommutative(&self) -> bool {
        self.inner.is_cocommutative()
    }

    /// Base-field-rational grouplikes, as descriptions in the basis.
    fn grouplikes(&self) -> PyResult<Vec<String>> {
        let gl = hopfadj::grouplikes(&self.inner).map_err(err)?;
        Ok(gl.elements().iter().map(|g| self.inner.describe(g)).collect())
    }

    fn grouplike_monoid(&self) -> PyResult<PyMonoid> {
        Ok(PyMonoid { inner: hopfadj::grouplikes(&self.inner).map_err(err)?.monoid().clone() })
    }

    /// `S(b_i)` for each basis element, or `None` when there is no antipode.
    fn antipode(&self) -> PyResult<Option<Vec<String>>> {
        let s = hopfadj::antipode(&self.inner).map_err(err)?;
        Ok(s.antipode.map(|m| (0..self.inner.dim()).map(|c| self.inner.describe(&m.column(c))).collect()))
    }

    fn is_hopf(&self) -> PyResult<bool> {
        hopfadj::is_hopf(&self.inner).map_err(err)
    }

    fn tensor(&self, other: &PyBialgebra) -> PyResult<PyBialgebra> {
        let tp = bialg::tensor_bialgebra(&self.inner, &other.inner).map_err(err)?;
        Ok(PyBialgebra { inner: tp.tensor })
    }

    fn to_toml(&self) -> String {
        format::serialize_bialgebra(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Bialgebra(dim={}, field={})", self.inner.dim(), self.inner.field())
    }
}

#[pyclass(name = "SplitExtension", frozen)]
struct PySplitExtension {
    inner: BialgSplitExtension,
}

#[pymethods]
impl PySplitExtension {
    /// `(π₁, Δ)` on `Y ⊗ Y`.
    #[staticmethod]
    fn diagonal(base: &PyBialgebra) -> PyResult<Self> {
        Ok(PySplitExtension { inner: catlim::diagonal_point(&base.inner).map_err(err)? })
    }

    /// `(π_Y, ι_Y)` on `X ⊗ Y`.
    #[staticmethod]
    fn product(left: &PyBialgebra, right: &PyBialgebra) -> PyResult<Self> {
        Ok(PySplitExtension { inner: catlim::product_point(&left.inner, &right.inner).map_err(err)? })
    }

    fn kernel_dim(&self) -> usize {
        self.inner.kernel().source().dim()
    }

    fn middle(&self) -> PyBialgebra {
        PyBialgebra { inner: self.inner.middle().clone() }
    }

    /// `(strong, closure_dim, dim, witness_label)`.
    fn strongness(&self) -> PyResult<(bool, usize, usize, Option<String>)> {
        let r = catlim::is_strong_split_extension(&self.inner).map_err(err)?;
        Ok((r.strong, r.closure_dim, r.dim, r.witness.map(|(l, _)| l)))
    }

    /// Strongness of the pullback along every map of the default family, by map name.
    fn stable_strongness(&self) -> PyResult<Vec<(String, bool)>> {
        let catalog = catalog_loader(self.inner.base().field()).load_catalog().map_err(err)?;
        let family = catlim::default_stable_family(self.inner.base(), &catalog.monoids).map_err(err)?;
        let maps: Vec<_> = family.iter().map(|(_, h)| h.clone()).collect();
        let verdicts = catlim::is_stably_strong(&self.inner, &maps).map_err(err)?;
        Ok(family.into_iter().zip(verdicts).map(|((n, _), v)| (n, v.strong)).collect())
    }
}

/// Theorem report for a cocommutative bialgebra, rendered as `"text"` or `"machine"`.
#[pyfunction]
#[pyo3(signature = (bialgebra, name = "input", format = "text"))]
fn theorem2_report(bialgebra: &PyBialgebra, name: &str, format: &str) -> PyResult<String> {
    let catalog = catalog_loader(bialgebra.inner.field()).load_catalog().map_err(err)?;
    let report = harness::theorem2_report(name, &bialgebra.inner, None, &catalog.monoids).map_err(err)?;
    Ok(report.render(parse_format(format)?))
}

/// Runs the acceptance suite on the bundled catalog; returns `(all_passed, report)`.
#[pyfunction]
#[pyo3(signature = (format = "machine"))]
fn selftest(format: &str) -> PyResult<(bool, String)> {
    let catalog = catalog_loader(Field::Rational).load_catalog().map_err(err)?;
    let report = harness::selftest(&catalog);
    Ok((!report.failed(), report.render(parse_format(format)?)))
}

#[pymodule]
#[pyo3(name = "hopfjoin")]
fn hopfjoin_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyMonoid>()?;
    m.add_class::<PyBialgebra>()?;
    m.add_class::<PySplitExtension>()?;
    m.add_function(wrap_pyfunction!(theorem2_report, m)?)?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    m.add("FIELD_CAVEAT", hopfadj::FIELD_CAVEAT)?;
    Ok(())
}
