//! The homogenization machinery shared by both ring families: a base ring
//! paired with its extension by a weight-1 homogenizing variable.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{same_ring, Polynomial};
use crate::ring::{RingKind, RingRef};

/// A base ring and its extension by one homogenizing variable. Homogenizing
/// places powers of the new variable on the left of each component; in the
/// commutative case the side is immaterial.
#[derive(Debug, Clone)]
pub struct Homogenizer<M: Monomial> {
    base: RingRef,
    ext: RingRef,
    _kind: std::marker::PhantomData<M>,
}

impl<M: Monomial> Homogenizer<M> {
    pub fn new(base: &RingRef, homog_var: &str) -> Result<Self> {
        if base.kind() != M::KIND {
            return Err(Error::KindMismatch { expected: M::KIND.name() });
        }
        if base.homog_var().is_some() {
            return Err(Error::InvalidRing("base ring already has a homogenizing variable".into()));
        }
        let ext = base.with_homog_var(homog_var)?.into_ref();
        Ok(Homogenizer { base: base.clone(), ext, _kind: Default::default() })
    }

    /// Recovers the pair from an extended ring.
    pub fn from_extended(ext: &RingRef) -> Result<Self> {
        if ext.kind() != M::KIND {
            return Err(Error::KindMismatch { expected: M::KIND.name() });
        }
        if ext.homog_var().is_none() {
            return Err(Error::NoHomogVar);
        }
        Ok(Homogenizer { base: ext.base().into_ref(), ext: ext.clone(), _kind: Default::default() })
    }

    pub fn base(&self) -> &RingRef {
        &self.base
    }

    pub fn ext(&self) -> &RingRef {
        &self.ext
    }

    pub fn kind(&self) -> RingKind {
        M::KIND
    }

    fn check_base(&self, f: &Polynomial<M>) -> Result<()> {
        if same_ring(f.ring(), &self.base) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn check_ext(&self, f: &Polynomial<M>) -> Result<()> {
        if same_ring(f.ring(), &self.ext) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `f = f_p + ... + f_{p-s}` maps to `f_p + t f_{p-1} + ... + t^s f_{p-s}`.
    pub fn homogenize(&self, f: &Polynomial<M>) -> Result<Polynomial<M>> {
        self.check_base(f)?;
        let p = f.degree().ok_or(Error::ZeroPolynomial)?;
        let base = &self.base;
        Ok(f.map_monomials(&self.ext, |m| m.lift(p - m.degree(base), &self.ext)))
    }

    /// Sets the homogenizing variable to 1.
    pub fn dehomogenize(&self, f: &Polynomial<M>) -> Result<Polynomial<M>> {
        self.check_ext(f)?;
        Ok(f.map_monomials(&self.base, |m| m.strip_homog(&self.ext)))
    }

    /// Embeds a base polynomial unchanged (no homogenizing variable).
    pub fn embed(&self, f: &Polynomial<M>) -> Result<Polynomial<M>> {
        self.check_base(f)?;
        Ok(f.map_monomials(&self.ext, |m| m.lift(0, &self.ext)))
    }

    /// Multiplies by the `r`-th power of the homogenizing variable (on the
    /// left).
    pub fn shift(&self, f: &Polynomial<M>, r: u32) -> Result<Polynomial<M>> {
        self.check_ext(f)?;
        let t = M::var_power(&self.ext, self.ext.homog_slot().expect("extended"), r);
        Ok(f.mul_monomials(&self.ext.field().one(), &t, &M::one(&self.ext)))
    }

    /// Elementwise homogenization with duplicates removed, first occurrence
    /// kept.
    pub(crate) fn homogenize_each(&self, set: &[Polynomial<M>]) -> Result<Vec<Polynomial<M>>> {
        let mut out: Vec<Polynomial<M>> = Vec::with_capacity(set.len());
        for f in set {
            let h = self.homogenize(f)?;
            if !out.contains(&h) {
                out.push(h);
            }
        }
        Ok(out)
    }

    pub(crate) fn dehomogenize_each(&self, set: &[Polynomial<M>]) -> Result<Vec<Polynomial<M>>> {
        let mut out: Vec<Polynomial<M>> = Vec::with_capacity(set.len());
        for f in set {
            let h = self.dehomogenize(f)?;
            if !h.is_zero() && !out.contains(&h) {
                out.push(h);
            }
        }
        Ok(out)
    }
}
