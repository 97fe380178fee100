//! Python bindings: rings, polynomials, Groebner bases and the two
//! homogenization procedures.

use homoggb_core::gb::commutative::{buchberger, complete, is_groebner as comm_is_groebner};
use homoggb_core::gb::free::{is_nc_groebner, nc_complete, nc_reduce_basis, NcOptions};
use homoggb_core::normal::normal_monomials as normal_set;
use homoggb_core::parse::parse_poly;
use homoggb_core::pipeline::{gb_via_central_homogenization, gb_via_nc_homogenization};
use homoggb_core::{
    ring_ref, CentralHomogenizer, CommPoly, Error, Exponents, Field, FreePoly, GroebnerBasis, Homogenizer,
    Monomial, NoncentralHomogenizer, Ring, RingKind, RingRef, Word,
};
use pyo3::exceptions::{PyTypeError, PyValueError};
use pyo3::prelude::*;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[derive(Clone)]
enum Poly {
    Comm(CommPoly),
    Free(FreePoly),
}

#[derive(Clone)]
enum Basis {
    Comm(GroebnerBasis<Exponents>),
    Free(GroebnerBasis<Word>),
}

/// A polynomial ring `K[x..]` (kind "comm") or free algebra `K<X..>`
/// (kind "free").
#[pyclass(name = "PolyRing", frozen)]
struct PyRing {
    ring: RingRef,
}

#[pymethods]
impl PyRing {
    #[new]
    #[pyo3(signature = (vars, kind = "comm", field = "q", var_order = None, weights = None))]
    fn new(
        vars: Vec<String>,
        kind: &str,
        field: &str,
        var_order: Option<Vec<String>>,
        weights: Option<Vec<u32>>,
    ) -> PyResult<Self> {
        let kind = match kind {
            "comm" => RingKind::Commutative,
            "free" => RingKind::Free,
            other => return Err(PyValueError::new_err(format!("unknown ring kind {other}; use comm or free"))),
        };
        let field: Field = field.parse().map_err(err)?;
        let mut ring = Ring::new(kind, &vars, field).map_err(err)?;
        if let Some(w) = weights {
            ring = ring.with_weights(&w).map_err(err)?;
        }
        if let Some(order) = var_order {
            ring = ring.with_precedence(&order).map_err(err)?;
        }
        Ok(PyRing { ring: ring_ref(ring) })
    }

    fn parse(&self, text: &str) -> PyResult<Polynomial> {
        parse_in(&self.ring, text)
    }

    #[getter]
    fn vars(&self) -> Vec<String> {
        self.ring.vars().to_vec()
    }

    #[getter]
    fn kind(&self) -> &'static str {
        match self.ring.kind() {
            RingKind::Commutative => "comm",
            RingKind::Free => "free",
        }
    }

    #[getter]
    fn homog_var(&self) -> Option<String> {
        self.ring.homog_var().map(str::to_string)
    }

    fn __repr__(&self) -> String {
        format!("PolyRing({:?}, kind={:?})", self.ring.vars(), self.kind())
    }
}

fn parse_in(ring: &RingRef, text: &str) -> PyResult<Polynomial> {
    let p = match ring.kind() {
        RingKind::Commutative => Poly::Comm(parse_poly(ring, text).map_err(err)?),
        RingKind::Free => Poly::Free(parse_poly(ring, text).map_err(err)?),
    };
    Ok(Polynomial { p })
}

#[pyclass(frozen)]
struct Polynomial {
    p: Poly,
}

fn binop(
    a: &Polynomial,
    b: &Polynomial,
    comm: fn(&CommPoly, &CommPoly) -> homoggb_core::Result<CommPoly>,
    free: fn(&FreePoly, &FreePoly) -> homoggb_core::Result<FreePoly>,
) -> PyResult<Polynomial> {
    let p = match (&a.p, &b.p) {
        (Poly::Comm(x), Poly::Comm(y)) => Poly::Comm(comm(x, y).map_err(err)?),
        (Poly::Free(x), Poly::Free(y)) => Poly::Free(free(x, y).map_err(err)?),
        _ => return Err(PyTypeError::new_err("operands live in different ring kinds")),
    };
    Ok(Polynomial { p })
}

#[pymethods]
impl Polynomial {
    fn __add__(&self, other: &Polynomial) -> PyResult<Polynomial> {
        binop(self, other, CommPoly::checked_add, FreePoly::checked_add)
    }

    fn __sub__(&self, other: &Polynomial) -> PyResult<Polynomial> {
        binop(self, other, CommPoly::checked_sub, FreePoly::checked_sub)
    }

    fn __mul__(&self, other: &Polynomial) -> PyResult<Polynomial> {
        binop(self, other, CommPoly::checked_mul, FreePoly::checked_mul)
    }

    fn __neg__(&self) -> Polynomial {
        let p = match &self.p {
            Poly::Comm(a) => Poly::Comm(-a),
            Poly::Free(a) => Poly::Free(-a),
        };
        Polynomial { p }
    }

    fn __pow__(&self, k: u32, _modulo: Option<u32>) -> Polynomial {
        let p = match &self.p {
            Poly::Comm(a) => Poly::Comm(a.pow(k)),
            Poly::Free(a) => Poly::Free(a.pow(k)),
        };
        Polynomial { p }
    }

    fn __eq__(&self, other: &Polynomial) -> bool {
        match (&self.p, &other.p) {
            (Poly::Comm(a), Poly::Comm(b)) => a == b,
            (Poly::Free(a), Poly::Free(b)) => a == b,
            _ => false,
        }
    }

    fn __str__(&self) -> String {
        match &self.p {
            Poly::Comm(a) => a.to_string(),
            Poly::Free(a) => a.to_string(),
        }
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({:?})", self.__str__())
    }

    /// Weighted degree; None for zero.
    fn degree(&self) -> Option<u32> {
        match &self.p {
            Poly::Comm(a) => a.degree(),
            Poly::Free(a) => a.degree(),
        }
    }

    fn is_zero(&self) -> bool {
        match &self.p {
            Poly::Comm(a) => a.is_zero(),
            Poly::Free(a) => a.is_zero(),
        }
    }

    fn is_homogeneous(&self) -> bool {
        match &self.p {
            Poly::Comm(a) => a.is_homogeneous(),
            Poly::Free(a) => a.is_homogeneous(),
        }
    }

    fn leading_monomial(&self) -> Option<String> {
        match &self.p {
            Poly::Comm(a) => a.lm().map(|m| m.render(a.ring())),
            Poly::Free(a) => a.lm().map(|m| m.render(a.ring())),
        }
    }

    #[getter]
    fn ring(&self) -> PyRing {
        let ring = match &self.p {
            Poly::Comm(a) => a.ring().clone(),
            Poly::Free(a) => a.ring().clone(),
        };
        PyRing { ring }
    }
}

/// Output of a completion: elements sorted by descending leading monomial.
#[pyclass(name = "GroebnerBasis", frozen)]
struct PyBasis {
    g: Basis,
}

#[pymethods]
impl PyBasis {
    fn polynomials(&self) -> Vec<Polynomial> {
        match &self.g {
            Basis::Comm(g) => g.elements().iter().map(|p| Polynomial { p: Poly::Comm(p.clone()) }).collect(),
            Basis::Free(g) => g.elements().iter().map(|p| Polynomial { p: Poly::Free(p.clone()) }).collect(),
        }
    }

    fn strings(&self) -> Vec<String> {
        match &self.g {
            Basis::Comm(g) => g.to_strings(),
            Basis::Free(g) => g.to_strings(),
        }
    }

    fn __len__(&self) -> usize {
        match &self.g {
            Basis::Comm(g) => g.len(),
            Basis::Free(g) => g.len(),
        }
    }

    fn __repr__(&self) -> String {
        format!("GroebnerBasis({:?})", self.strings())
    }

    #[getter]
    fn is_reduced(&self) -> bool {
        match &self.g {
            Basis::Comm(g) => g.is_reduced(),
            Basis::Free(g) => g.is_reduced(),
        }
    }

    /// False when a truncated completion left work above its bound.
    #[getter]
    fn is_complete(&self) -> bool {
        match &self.g {
            Basis::Comm(g) => g.is_complete(),
            Basis::Free(g) => g.is_complete(),
        }
    }

    #[getter]
    fn truncated_at(&self) -> Option<u32> {
        match &self.g {
            Basis::Comm(g) => g.truncation_degree(),
            Basis::Free(g) => g.truncation_degree(),
        }
    }

    fn is_unit_ideal(&self) -> bool {
        match &self.g {
            Basis::Comm(g) => g.is_unit_ideal(),
            Basis::Free(g) => g.is_unit_ideal(),
        }
    }

    fn normal_form(&self, f: &Polynomial) -> PyResult<Polynomial> {
        let p = match (&self.g, &f.p) {
            (Basis::Comm(g), Poly::Comm(f)) => Poly::Comm(homoggb_core::gb::normal_form(f, g.elements())),
            (Basis::Free(g), Poly::Free(f)) => Poly::Free(homoggb_core::gb::normal_form(f, g.elements())),
            _ => return Err(PyTypeError::new_err("polynomial and basis live in different ring kinds")),
        };
        Ok(Polynomial { p })
    }

    /// Normal monomials of degrees `0..=up_to`, one list per degree.
    fn normal_monomials(&self, up_to: u32) -> PyResult<Vec<Vec<String>>> {
        match &self.g {
            Basis::Comm(g) => listing(g, up_to),
            Basis::Free(g) => listing(g, up_to),
        }
    }
}

fn listing<M: Monomial>(g: &GroebnerBasis<M>, up_to: u32) -> PyResult<Vec<Vec<String>>> {
    let n = normal_set(g, up_to).map_err(err)?;
    Ok((0..=up_to).map(|d| n.render_degree(d)).collect())
}

enum Split {
    Comm(Vec<CommPoly>),
    Free(Vec<FreePoly>),
}

fn split(polys: &[PyRef<'_, Polynomial>]) -> PyResult<Split> {
    let Some(first) = polys.first() else {
        return Err(PyValueError::new_err("no polynomials given"));
    };
    let mixed = || PyTypeError::new_err("polynomials live in different ring kinds");
    Ok(match &first.p {
        Poly::Comm(_) => Split::Comm(
            polys.iter().map(|p| if let Poly::Comm(a) = &p.p { Ok(a.clone()) } else { Err(mixed()) }).collect::<PyResult<_>>()?,
        ),
        Poly::Free(_) => Split::Free(
            polys.iter().map(|p| if let Poly::Free(a) = &p.p { Ok(a.clone()) } else { Err(mixed()) }).collect::<PyResult<_>>()?,
        ),
    })
}

fn free_bound(max_degree: Option<u32>) -> PyResult<u32> {
    max_degree.ok_or_else(|| PyValueError::new_err("free algebras need max_degree"))
}

/// Groebner basis of the ideal generated by `polys`. Free algebras need a
/// degree bound.
#[pyfunction]
#[pyo3(signature = (polys, max_degree = None, reduced = true))]
fn groebner_basis(polys: Vec<PyRef<'_, Polynomial>>, max_degree: Option<u32>, reduced: bool) -> PyResult<PyBasis> {
    let g = match split(&polys)? {
        Split::Comm(ps) => Basis::Comm(if reduced { buchberger(&ps) } else { complete(&ps) }.map_err(err)?),
        Split::Free(ps) => {
            let g = nc_complete(&ps, free_bound(max_degree)?, NcOptions { interreduce: reduced }).map_err(err)?;
            Basis::Free(if reduced { nc_reduce_basis(&g) } else { g })
        }
    };
    Ok(PyBasis { g })
}

/// `(True, None)` for a Groebner basis, otherwise `(False, r)` with the
/// nonzero remainder `r` of the first failing pair or overlap.
#[pyfunction]
#[pyo3(signature = (polys, max_degree = None))]
fn is_groebner(polys: Vec<PyRef<'_, Polynomial>>, max_degree: Option<u32>) -> PyResult<(bool, Option<Polynomial>)> {
    Ok(match split(&polys)? {
        Split::Comm(ps) => {
            let c = comm_is_groebner(&ps).map_err(err)?;
            (c.is_groebner, c.witness.map(|w| Polynomial { p: Poly::Comm(w.remainder) }))
        }
        Split::Free(ps) => {
            let c = is_nc_groebner(&ps, free_bound(max_degree)?).map_err(err)?;
            (c.is_groebner, c.witness.map(|w| Polynomial { p: Poly::Free(w.remainder) }))
        }
    })
}

fn default_homog(kind: RingKind) -> &'static str {
    match kind {
        RingKind::Commutative => "t",
        RingKind::Free => "T",
    }
}

/// Homogenizes each polynomial with a new variable (t or T by default).
/// In a free algebra `commutators=True` appends `X*T - T*X` for each letter.
#[pyfunction]
#[pyo3(signature = (polys, homog_var = None, commutators = false))]
fn homogenize(polys: Vec<PyRef<'_, Polynomial>>, homog_var: Option<&str>, commutators: bool) -> PyResult<Vec<Polynomial>> {
    Ok(match split(&polys)? {
        Split::Comm(ps) => {
            let h = CentralHomogenizer::new(ps[0].ring(), homog_var.unwrap_or("t")).map_err(err)?;
            let out: Vec<CommPoly> = ps.iter().map(|f| h.central_homogenize(f)).collect::<Result<_, _>>().map_err(err)?;
            out.into_iter().map(|p| Polynomial { p: Poly::Comm(p) }).collect()
        }
        Split::Free(ps) => {
            let h = NoncentralHomogenizer::new(ps[0].ring(), homog_var.unwrap_or("T")).map_err(err)?;
            let out: Vec<FreePoly> = if commutators {
                h.nc_homogenize_set(&ps).map_err(err)?
            } else {
                ps.iter().map(|f| h.nc_homogenize(f)).collect::<Result<_, _>>().map_err(err)?
            };
            out.into_iter().map(|p| Polynomial { p: Poly::Free(p) }).collect()
        }
    })
}

/// Sets the homogenizing variable to 1 (deletes the letter in a free
/// algebra). The inputs must live in a ring that has one.
#[pyfunction]
fn dehomogenize(polys: Vec<PyRef<'_, Polynomial>>) -> PyResult<Vec<Polynomial>> {
    Ok(match split(&polys)? {
        Split::Comm(ps) => {
            let h = Homogenizer::<Exponents>::from_extended(ps[0].ring()).map_err(err)?;
            ps.iter().map(|f| h.dehomogenize(f).map(|p| Polynomial { p: Poly::Comm(p) })).collect::<Result<_, _>>().map_err(err)?
        }
        Split::Free(ps) => {
            let h = Homogenizer::<Word>::from_extended(ps[0].ring()).map_err(err)?;
            ps.iter().map(|f| h.dehomogenize(f).map(|p| Polynomial { p: Poly::Free(p) })).collect::<Result<_, _>>().map_err(err)?
        }
    })
}

/// The three bases of the homogenization procedure and their checks.
#[pyclass(frozen)]
struct Pipeline {
    #[pyo3(get)]
    step1: Py<PyBasis>,
    #[pyo3(get)]
    step2: Py<PyBasis>,
    #[pyo3(get)]
    step3: Py<PyBasis>,
    #[pyo3(get)]
    unit: bool,
    #[pyo3(get)]
    step1_verified: bool,
    #[pyo3(get)]
    step2_verified: bool,
    #[pyo3(get)]
    step3_verified: bool,
}

fn pipeline(py: Python<'_>, steps: [Basis; 3], unit: bool, verified: [bool; 3]) -> PyResult<Pipeline> {
    let [a, b, c] = steps;
    Ok(Pipeline {
        step1: Py::new(py, PyBasis { g: a })?,
        step2: Py::new(py, PyBasis { g: b })?,
        step3: Py::new(py, PyBasis { g: c })?,
        unit,
        step1_verified: verified[0],
        step2_verified: verified[1],
        step3_verified: verified[2],
    })
}

/// Basis of `<S>` in a polynomial ring through the basis of `<S*>`.
#[pyfunction]
#[pyo3(signature = (polys, homog_var = None))]
fn pipeline_central(py: Python<'_>, polys: Vec<PyRef<'_, Polynomial>>, homog_var: Option<&str>) -> PyResult<Pipeline> {
    let Split::Comm(ps) = split(&polys)? else {
        return Err(PyTypeError::new_err("pipeline_central needs a commutative ring"));
    };
    let h = CentralHomogenizer::new(ps[0].ring(), homog_var.unwrap_or(default_homog(RingKind::Commutative))).map_err(err)?;
    let p = gb_via_central_homogenization(&ps, &h).map_err(err)?;
    pipeline(
        py,
        [Basis::Comm(p.step1), Basis::Comm(p.step2), Basis::Comm(p.step3)],
        p.unit,
        [true, p.step2_verified, p.step3_verified],
    )
}

/// The same procedure in a free algebra, truncated at `max_degree`.
#[pyfunction]
#[pyo3(signature = (polys, max_degree, homog_var = None))]
fn pipeline_free(
    py: Python<'_>,
    polys: Vec<PyRef<'_, Polynomial>>,
    max_degree: u32,
    homog_var: Option<&str>,
) -> PyResult<Pipeline> {
    let Split::Free(ps) = split(&polys)? else {
        return Err(PyTypeError::new_err("pipeline_free needs a free algebra"));
    };
    let h = NoncentralHomogenizer::new(ps[0].ring(), homog_var.unwrap_or(default_homog(RingKind::Free))).map_err(err)?;
    let p = gb_via_nc_homogenization(&ps, &h, max_degree).map_err(err)?;
    pipeline(
        py,
        [Basis::Free(p.step1), Basis::Free(p.step2), Basis::Free(p.step3)],
        p.unit,
        [p.step1_verified, p.step2_verified, p.step3_verified],
    )
}

#[pymodule]
fn homoggb(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRing>()?;
    m.add_class::<Polynomial>()?;
    m.add_class::<PyBasis>()?;
    m.add_class::<Pipeline>()?;
    m.add_function(wrap_pyfunction!(groebner_basis, m)?)?;
    m.add_function(wrap_pyfunction!(is_groebner, m)?)?;
    m.add_function(wrap_pyfunction!(homogenize, m)?)?;
    m.add_function(wrap_pyfunction!(dehomogenize, m)?)?;
    m.add_function(wrap_pyfunction!(pipeline_central, m)?)?;
    m.add_function(wrap_pyfunction!(pipeline_free, m)?)?;
    Ok(())
}
