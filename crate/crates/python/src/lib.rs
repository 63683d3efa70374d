//! Python bindings. Exact rationals come back as `fractions.Fraction`,
//! counts as Python ints.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use polyflag::cone::cone_classify;
use polyflag::constructions::{self, generate, ConstructionSpec, Generated};
use polyflag::flag::{self, Delta0};
use polyflag::geometry::{self, PointSet};
use polyflag::lattice::{self as lat, LatticeInput};
use polyflag::report::Report;
use polyflag::tilings::{self, Preset, TilingDensity};
use polyflag::{Error, FVector, FaceLattice, Rational};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((r.numer().clone(), r.denom().clone()))
}

fn fractions<'py>(py: Python<'py>, rs: &[Rational]) -> PyResult<Vec<Bound<'py, PyAny>>> {
    rs.iter().map(|r| fraction(py, r)).collect()
}

#[pyclass(name = "Lattice", module = "polyflag_py", frozen)]
struct PyLattice {
    inner: FaceLattice,
}

fn wrap(l: FaceLattice) -> PyLattice {
    PyLattice { inner: l }
}

#[pymethods]
impl PyLattice {
    /// Closure under intersection of the given facets.
    #[staticmethod]
    fn from_facets(facets: Vec<Vec<usize>>, atom_count: usize) -> PyResult<Self> {
        lat::lattice_from_facets(&facets, atom_count).map(wrap).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        LatticeInput::parse(text)
            .and_then(LatticeInput::into_lattice)
            .map(wrap)
            .map_err(err)
    }

    /// Named construction, e.g. `Lattice.generate("cube", [4])`.
    #[staticmethod]
    #[pyo3(signature = (name, params=Vec::new(), limit=None))]
    fn generate(name: &str, params: Vec<i64>, limit: Option<usize>) -> PyResult<Self> {
        let params: Vec<String> = params.iter().map(i64::to_string).collect();
        let spec = ConstructionSpec::parse(name, &params).map_err(err)?;
        match generate(&spec, limit).map_err(err)? {
            Generated::Lattice(l) => Ok(wrap(l)),
            _ => Err(PyValueError::new_err(format!("{name} does not produce a lattice"))),
        }
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn length(&self) -> usize {
        self.inner.length()
    }

    #[getter]
    fn atom_count(&self) -> usize {
        self.inner.atom_count()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        let f: Vec<String> = self.inner.f_vector().iter().map(usize::to_string).collect();
        format!("Lattice(length={}, f=({}))", self.inner.length(), f.join(","))
    }

    fn f_vector(&self) -> Vec<usize> {
        self.inner.f_vector()
    }

    fn coatoms(&self) -> Vec<Vec<usize>> {
        self.inner.coatom_sets()
    }

    fn faces_by_rank(&self) -> Vec<Vec<Vec<usize>>> {
        self.inner.faces_by_rank()
    }

    fn is_graded(&self) -> bool {
        self.inner.is_graded()
    }

    fn is_lattice(&self) -> bool {
        lat::is_lattice(&self.inner)
    }

    fn is_eulerian(&self) -> bool {
        lat::is_eulerian(&self.inner)
    }

    fn is_connected(&self) -> bool {
        lat::is_connected(&self.inner)
    }

    #[pyo3(signature = (strict_intervals=false))]
    fn hierarchy<'py>(&self, py: Python<'py>, strict_intervals: bool) -> PyResult<Bound<'py, PyDict>> {
        let h = lat::hierarchy_report(&self.inner, strict_intervals);
        let d = PyDict::new(py);
        d.set_item("is_graded", h.is_graded)?;
        d.set_item("is_lattice", h.is_lattice)?;
        d.set_item("is_eulerian", h.is_eulerian)?;
        d.set_item("is_connected", h.is_connected)?;
        d.set_item("intervals_connected", h.intervals_connected)?;
        d.set_item("classification", h.classification.to_string())?;
        Ok(d)
    }

    fn face_types<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let t = lat::face_type_flags(&self.inner).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("simplicial", t.simplicial)?;
        d.set_item("simple", t.simple)?;
        d.set_item("two_simplicial", t.two_simplicial)?;
        d.set_item("two_simple", t.two_simple)?;
        d.set_item("all_facets_simple", t.all_facets_simple)?;
        Ok(d)
    }

    /// Flag numbers keyed by subset strings such as `"03"`.
    fn flag_vector<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        flag_dict(py, &flag::flag_vector(&self.inner).map_err(err)?)
    }

    fn four_flag(&self) -> PyResult<PyFourFlag> {
        flag::four_flag_of(&self.inner)
            .map(|q| PyFourFlag { inner: q })
            .map_err(err)
    }

    fn dual(&self) -> PyResult<Self> {
        lat::dual(&self.inner).map(wrap).map_err(err)
    }

    fn pyramid(&self) -> PyResult<Self> {
        constructions::pyramid(&self.inner).map(wrap).map_err(err)
    }

    fn product(&self, other: &PyLattice) -> PyResult<Self> {
        constructions::product(&self.inner, &other.inner).map(wrap).map_err(err)
    }

    fn e_construct(&self) -> PyResult<Self> {
        constructions::e_construct(&self.inner).map(wrap).map_err(err)
    }

    /// Interval between the faces with the given atom sets.
    fn interval(&self, lower: Vec<usize>, upper: Vec<usize>) -> PyResult<Self> {
        let find = |atoms: &[usize]| {
            let s = lat::atom_set(self.inner.atom_count(), atoms.iter().copied());
            self.inner
                .element(&s)
                .ok_or_else(|| PyValueError::new_err(format!("{atoms:?} is not a face")))
        };
        lat::interval(&self.inner, find(&lower)?, find(&upper)?)
            .map(wrap)
            .map_err(err)
    }

    fn is_isomorphic(&self, other: &PyLattice) -> bool {
        lat::are_isomorphic(&self.inner, &other.inner)
    }

    /// Full analysis report as JSON text.
    #[pyo3(signature = (strict_intervals=false))]
    fn report(&self, strict_intervals: bool) -> PyResult<String> {
        Report::for_lattice("python", &self.inner, strict_intervals)
            .map(|r| r.to_json())
            .map_err(err)
    }
}

fn flag_dict<'py>(py: Python<'py>, fv: &flag::FlagVector) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for m in 0..1usize << fv.dim() {
        d.set_item(flag::subset_key(m), fv.by_mask(m).clone())?;
    }
    Ok(d)
}

#[pyclass(name = "FourFlag", module = "polyflag_py", frozen, eq)]
#[derive(PartialEq)]
struct PyFourFlag {
    inner: flag::FourFlag,
}

#[pymethods]
impl PyFourFlag {
    #[new]
    fn new(f0: BigInt, f1: BigInt, f2: BigInt, f3: BigInt, f03: BigInt) -> Self {
        PyFourFlag {
            inner: flag::FourFlag::new(f0, f1, f2, f3, f03),
        }
    }

    /// Parses `"f0,f1,f2,f3;f03"`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(|q| PyFourFlag { inner: q }).map_err(err)
    }

    #[getter]
    fn f_vector(&self) -> Vec<BigInt> {
        self.inner.f_vector().0
    }

    #[getter]
    fn f03(&self) -> BigInt {
        self.inner.f03.clone()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("FourFlag(\"{}\")", self.inner)
    }

    fn satisfies_euler(&self) -> bool {
        self.inner.satisfies_euler()
    }

    fn dual(&self) -> Self {
        PyFourFlag {
            inner: self.inner.dual(),
        }
    }

    fn expand<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        flag_dict(py, &flag::expand_four_flag(&self.inner).map_err(err)?)
    }

    fn fatness<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &flag::fatness(&self.inner).map_err(err)?)
    }

    fn complexity<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, &flag::complexity(&self.inner).map_err(err)?)
    }

    /// `variant` is `"vertex"` or `"facet"`.
    #[pyo3(signature = (variant="vertex"))]
    fn delta0<'py>(&self, py: Python<'py>, variant: &str) -> PyResult<Bound<'py, PyAny>> {
        let v = match variant {
            "vertex" => Delta0::VertexOnly,
            "facet" => Delta0::FacetAugmented,
            other => return Err(PyValueError::new_err(format!("unknown variant {other:?}"))),
        };
        fraction(py, &flag::delta0(&self.inner, v).map_err(err)?)
    }

    /// Verdicts keyed by inequality: `holds`, `holds-with-equality`, `FAILS`.
    fn inequalities<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = flag::inequality_report(&self.inner).map_err(err)?;
        let d = PyDict::new(py);
        d.set_item("complexity_le_2_fatness_minus_2", r.complexity_le_2_fatness_minus_2.to_string())?;
        d.set_item("fatness_le_2_complexity_minus_2", r.fatness_le_2_complexity_minus_2.to_string())?;
        d.set_item("complexity_ge_3", r.complexity_ge_3.to_string())?;
        d.set_item("fatness_ge_2_complexity_minus_5", r.fatness_ge_2_complexity_minus_5.to_string())?;
        d.set_item("fatness_le_5", r.fatness_le_5.to_string())?;
        Ok(d)
    }

    fn e_transform(&self) -> PyResult<Self> {
        constructions::e_transform_flag(&self.inner)
            .map(|q| PyFourFlag { inner: q })
            .map_err(err)
    }

    fn report(&self) -> String {
        Report::for_flag(&self.inner.to_string(), &self.inner).to_json()
    }
}

/// Pentagon-cone classification of an f-vector.
#[pyfunction]
fn cone<'py>(py: Python<'py>, f: Vec<BigInt>) -> PyResult<Bound<'py, PyDict>> {
    let c = cone_classify(&FVector(f)).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("phi0", c.phi0.as_ref().map(|r| fraction(py, r)).transpose()?)?;
    d.set_item("phi3", c.phi3.as_ref().map(|r| fraction(py, r)).transpose()?)?;
    d.set_item("inside", c.inside)?;
    let names = |s: &std::collections::BTreeSet<_>| -> Vec<String> {
        s.iter().map(|i: &polyflag::cone::ConeInequality| i.to_string()).collect()
    };
    d.set_item("satisfied", names(&c.satisfied))?;
    d.set_item("tight", names(&c.tight))?;
    d.set_item("degenerate", c.degenerate)?;
    Ok(d)
}

/// Exact convex hull of integer or `"p/q"` coordinates.
#[pyfunction]
fn convex_hull(points: Vec<Vec<String>>) -> PyResult<PyLattice> {
    let text: String = points.iter().map(|p| p.join(" ") + "\n").collect();
    let ps = PointSet::parse(&text).map_err(err)?;
    geometry::convex_hull(&ps)
        .and_then(|h| h.lattice())
        .map(wrap)
        .map_err(err)
}

#[pyfunction]
fn steinitz_realize(f0: i64, f2: i64) -> PyResult<PyLattice> {
    polyflag::steinitz::steinitz_realize(f0, f2).map(wrap).map_err(err)
}

#[pyfunction]
fn neighborly_cubical_flag(n: u32) -> PyResult<PyFourFlag> {
    constructions::neighborly_cubical_flag(n)
        .map(|q| PyFourFlag { inner: q })
        .map_err(err)
}

/// `(f_vector, fatness)`; fatness is `None` when undefined.
#[pyfunction]
fn mg_product_fvector<'py>(
    py: Python<'py>,
    g: u64,
    k: u64,
    m: u64,
) -> PyResult<(Vec<BigInt>, Option<Bound<'py, PyAny>>)> {
    let mg = constructions::mg_product_fvector(g, k, m).map_err(err)?;
    let fat = mg.fatness.as_ref().map(|r| fraction(py, r)).transpose()?;
    Ok((mg.f.0, fat))
}

fn tiling_counts(t: &TilingDensity) -> Vec<Rational> {
    t.counts.to_vec()
}

/// Densities and fatness of orbit counts `(c0, c1, c2, c3)`.
#[pyfunction]
fn tiling_analyze<'py>(py: Python<'py>, counts: &str) -> PyResult<Bound<'py, PyDict>> {
    let t = TilingDensity::parse_counts(counts).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("counts", fractions(py, &tiling_counts(&t))?)?;
    d.set_item("densities", fractions(py, &tilings::densities(&t))?)?;
    d.set_item("fatness", fraction(py, &tilings::tiling_fatness(&t))?)?;
    Ok(d)
}

#[pyfunction]
fn schlegel_tiling<'py>(py: Python<'py>, host: &str, flag: &PyFourFlag) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let host = TilingDensity::preset(host.parse::<Preset>().map_err(err)?);
    let t = tilings::schlegel_tiling(&host, &flag.inner).map_err(err)?;
    fractions(py, &tiling_counts(&t))
}

#[pyfunction]
fn fat_tiling_fatness<'py>(py: Python<'py>, n: u32) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &tilings::fat_tiling_fatness(n).map_err(err)?)
}

#[pymodule]
fn polyflag_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLattice>()?;
    m.add_class::<PyFourFlag>()?;
    m.add_function(wrap_pyfunction!(cone, m)?)?;
    m.add_function(wrap_pyfunction!(convex_hull, m)?)?;
    m.add_function(wrap_pyfunction!(steinitz_realize, m)?)?;
    m.add_function(wrap_pyfunction!(neighborly_cubical_flag, m)?)?;
    m.add_function(wrap_pyfunction!(mg_product_fvector, m)?)?;
    m.add_function(wrap_pyfunction!(tiling_analyze, m)?)?;
    m.add_function(wrap_pyfunction!(schlegel_tiling, m)?)?;
    m.add_function(wrap_pyfunction!(fat_tiling_fatness, m)?)?;
    Ok(())
}
