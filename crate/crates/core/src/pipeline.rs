//! Transfers of whole Groebner bases through (de)homogenization and the two
//! three-step procedures built on them.

use crate::central::CentralHomogenizer;
use crate::error::{Error, Result};
use crate::gb::commutative::{buchberger, is_groebner, reduce_basis};
use crate::gb::free::{is_nc_groebner, nc_complete, nc_reduce_basis, NcOptions};
use crate::gb::{normal_form, sort_by_lm_desc, GroebnerBasis};
use crate::monomial::{Exponents, Monomial, Word};
use crate::noncentral::NoncentralHomogenizer;
use crate::poly::{same_ring, CommPoly, FreePoly, Polynomial};

fn unit_basis<M: Monomial>(ring: &crate::RingRef, truncation: Option<u32>) -> GroebnerBasis<M> {
    GroebnerBasis::new(ring, vec![Polynomial::one(ring)], true, true, truncation)
}

fn check_ring<M: Monomial>(g: &GroebnerBasis<M>, ring: &crate::RingRef) -> Result<()> {
    if same_ring(g.ring(), ring) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

fn require_homogeneous<M: Monomial>(g: &GroebnerBasis<M>) -> Result<()> {
    match g.elements().iter().find(|p| !p.is_homogeneous()) {
        Some(p) => Err(Error::NotHomogeneous(p.to_string())),
        None => Ok(()),
    }
}

/// `G* = { g* : g in G }` for a Groebner basis `G`.
pub fn homogenize_gb_central(g: &GroebnerBasis<Exponents>, h: &CentralHomogenizer) -> Result<GroebnerBasis<Exponents>> {
    check_ring(g, h.base())?;
    let check = is_groebner(g.elements())?;
    if let Some(w) = check.witness {
        return Err(Error::NotGroebner(format!(
            "pair ({}, {}) leaves remainder {}",
            w.pair.0, w.pair.1, w.remainder
        )));
    }
    let mut out = h.homogenize_each(g.elements())?;
    sort_by_lm_desc(h.ext(), &mut out);
    Ok(GroebnerBasis::new(h.ext(), out, g.is_reduced(), true, None))
}

/// `G_* = { g_* : g in G }` for a homogeneous Groebner basis `G`; zeros are
/// dropped and a constant collapses the result to `{1}`.
pub fn dehomogenize_gb_central(g: &GroebnerBasis<Exponents>, h: &CentralHomogenizer) -> Result<GroebnerBasis<Exponents>> {
    check_ring(g, h.ext())?;
    require_homogeneous(g)?;
    if let Some(w) = is_groebner(g.elements())?.witness {
        return Err(Error::NotGroebner(format!("pair ({}, {}) leaves remainder {}", w.pair.0, w.pair.1, w.remainder)));
    }
    let out = h.dehomogenize_each(g.elements())?;
    if out.iter().any(|p| p.is_constant()) {
        return Ok(unit_basis(h.base(), None));
    }
    Ok(GroebnerBasis::new(h.base(), out, false, true, None))
}

/// Results of the central procedure.
#[derive(Debug, Clone)]
pub struct CentralPipeline {
    /// Reduced homogeneous Groebner basis of the ideal generated by `S*`.
    pub step1: GroebnerBasis<Exponents>,
    /// Reduced Groebner basis of `I = <S>`.
    pub step2: GroebnerBasis<Exponents>,
    /// Homogeneous Groebner basis of `<I*>`.
    pub step3: GroebnerBasis<Exponents>,
    pub unit: bool,
    pub step2_verified: bool,
    pub step3_verified: bool,
}

/// Computes a basis of `<S*>`, dehomogenizes it to a basis of `I`, then
/// homogenizes that to a basis of `<I*>`.
pub fn gb_via_central_homogenization(set: &[CommPoly], h: &CentralHomogenizer) -> Result<CentralPipeline> {
    if set.iter().any(|f| f.is_zero()) {
        return Err(Error::ZeroPolynomial);
    }
    if set.iter().any(|f| !same_ring(f.ring(), h.base())) {
        return Err(Error::RingMismatch);
    }
    let star = h.homogenize_set(set)?;
    if star.is_empty() {
        return Err(Error::InvalidRing("empty generating set".into()));
    }
    let step1 = buchberger(&star)?;
    if step1.is_unit_ideal() {
        return Ok(CentralPipeline {
            step1,
            step2: unit_basis(h.base(), None),
            step3: unit_basis(h.ext(), None),
            unit: true,
            step2_verified: true,
            step3_verified: true,
        });
    }
    let step2 = reduce_basis(&dehomogenize_gb_central(&step1, h)?)?;
    let step3 = homogenize_gb_central(&step2, h)?;
    let step2_verified = is_groebner(step2.elements())?.is_groebner;
    let step3_verified = is_groebner(step3.elements())?.is_groebner;
    let unit = step2.is_unit_ideal();
    Ok(CentralPipeline { step1, step2, step3, unit, step2_verified, step3_verified })
}

/// `G~ = { g~ : g in G }` together with the commutators, for a basis that
/// passes the overlap check up to `max_degree`.
pub fn homogenize_gb_noncentral(
    g: &GroebnerBasis<Word>,
    h: &NoncentralHomogenizer,
    max_degree: u32,
) -> Result<GroebnerBasis<Word>> {
    check_ring(g, h.base())?;
    if let Some(w) = is_nc_groebner(g.elements(), max_degree)?.witness {
        return Err(Error::NotGroebner(format!(
            "overlap {} leaves remainder {}",
            w.obstruction.word.render(h.base()),
            w.remainder
        )));
    }
    let mut out = h.nc_homogenize_set(g.elements())?;
    sort_by_lm_desc(h.ext(), &mut out);
    Ok(GroebnerBasis::new(h.ext(), out, g.is_reduced(), g.is_complete(), Some(max_degree)))
}

/// `G~ = { g~ : g in G }` with every `T` deleted, zeros dropped. Requires
/// every commutator to reduce to zero modulo `G`.
pub fn dehomogenize_gb_noncentral(
    g: &GroebnerBasis<Word>,
    h: &NoncentralHomogenizer,
    max_degree: u32,
) -> Result<GroebnerBasis<Word>> {
    check_ring(g, h.ext())?;
    require_homogeneous(g)?;
    for c in h.commutators() {
        if !normal_form(&c, g.elements()).is_zero() {
            return Err(Error::MissingCommutator(c.to_string()));
        }
    }
    if let Some(w) = is_nc_groebner(g.elements(), max_degree)?.witness {
        return Err(Error::NotGroebner(format!(
            "overlap {} leaves remainder {}",
            w.obstruction.word.render(h.ext()),
            w.remainder
        )));
    }
    let out = h.dehomogenize_each(g.elements())?;
    if out.iter().any(|p| p.is_constant()) {
        return Ok(unit_basis(h.base(), Some(max_degree)));
    }
    Ok(GroebnerBasis::new(h.base(), out, false, g.is_complete(), Some(max_degree)))
}

/// Results of the non-central procedure, all truncated at one degree.
#[derive(Debug, Clone)]
pub struct FreePipeline {
    /// Homogeneous truncated basis of the ideal generated by `S~`.
    pub step1: GroebnerBasis<Word>,
    /// Interreduced truncated basis of `I = <S>`.
    pub step2: GroebnerBasis<Word>,
    /// Homogeneous truncated basis of `<I~>`.
    pub step3: GroebnerBasis<Word>,
    pub unit: bool,
    pub max_degree: u32,
    pub step1_verified: bool,
    pub step2_verified: bool,
    pub step3_verified: bool,
}

impl FreePipeline {
    /// True when no obstruction was left pending above the bound.
    pub fn is_complete(&self) -> bool {
        self.step1.is_complete()
    }
}

/// Completes `S~` up to `max_degree`, dehomogenizes, interreduces, and
/// homogenizes again. Each output is checked up to `max_degree`.
pub fn gb_via_nc_homogenization(
    set: &[FreePoly],
    h: &NoncentralHomogenizer,
    max_degree: u32,
) -> Result<FreePipeline> {
    if set.iter().any(|f| f.is_zero()) {
        return Err(Error::ZeroPolynomial);
    }
    if set.iter().any(|f| !same_ring(f.ring(), h.base())) {
        return Err(Error::RingMismatch);
    }
    let tilde = h.nc_homogenize_set(set)?;
    let step1 = nc_complete(&tilde, max_degree, NcOptions::default())?;
    if step1.is_unit_ideal() {
        return Ok(FreePipeline {
            step1,
            step2: unit_basis(h.base(), Some(max_degree)),
            step3: unit_basis(h.ext(), Some(max_degree)),
            unit: true,
            max_degree,
            step1_verified: true,
            step2_verified: true,
            step3_verified: true,
        });
    }
    let step1_verified = is_nc_groebner(step1.elements(), max_degree)?.is_groebner;
    let down = h.dehomogenize_each(step1.elements())?;
    let unit = down.iter().any(|p| p.is_constant());
    let down = if unit { vec![Polynomial::one(h.base())] } else { down };
    let step2 = nc_reduce_basis(&GroebnerBasis::new(h.base(), down, false, step1.is_complete(), Some(max_degree)));
    let step2_verified = is_nc_groebner(step2.elements(), max_degree)?.is_groebner;
    let mut up = h.nc_homogenize_set(step2.elements())?;
    sort_by_lm_desc(h.ext(), &mut up);
    let step3 = GroebnerBasis::new(h.ext(), up, true, step2.is_complete(), Some(max_degree));
    let step3_verified = is_nc_groebner(step3.elements(), max_degree)?.is_groebner;
    Ok(FreePipeline { step1, step2, step3, unit, max_degree, step1_verified, step2_verified, step3_verified })
}

/// The first element of `candidates`, by ascending degree, whose normal form
/// modulo the Groebner basis `smaller` is nonzero: a witness that the ideal
/// generated by `candidates` is not contained in that of `smaller`.
pub fn inclusion_witness<M: Monomial>(smaller: &GroebnerBasis<M>, candidates: &[Polynomial<M>]) -> Option<Polynomial<M>> {
    let mut sorted: Vec<&Polynomial<M>> = candidates.iter().collect();
    sorted.sort_by_key(|p| p.degree());
    sorted.into_iter().find(|p| !normal_form(p, smaller.elements()).is_zero()).cloned()
}
