//! Sparse polynomials in canonical form: terms strictly descending under the
//! ring's ordering, no zero coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::{Exponents, Monomial, Word};
use crate::ring::{Ring, RingRef};
use crate::scalar::Scalar;

#[derive(Clone)]
pub struct Polynomial<M: Monomial> {
    ring: RingRef,
    terms: Vec<(M, Scalar)>,
}

pub type CommPoly = Polynomial<Exponents>;
pub type FreePoly = Polynomial<Word>;

pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<M: Monomial> PartialEq for Polynomial<M> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<M: Monomial> Eq for Polynomial<M> {}

impl<M: Monomial> std::hash::Hash for Polynomial<M> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<M: Monomial> Polynomial<M> {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &RingRef, c: Scalar) -> Self {
        Self::term(ring, M::one(ring), c)
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn term(ring: &RingRef, m: M, c: Scalar) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// The variable with the given name, or an error for unknown names.
    pub fn var(ring: &RingRef, name: &str) -> Result<Self> {
        let slot = ring.slot_of(name).ok_or_else(|| Error::UnknownVariable {
            name: name.to_string(),
            line: 0,
            col: 0,
        })?;
        Ok(Self::term(ring, M::var_power(ring, slot, 1), ring.field().one()))
    }

    /// Canonicalizes an arbitrary term list, validating every monomial and
    /// coefficient against the ring.
    pub fn try_from_terms<I>(ring: &RingRef, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (M, Scalar)>,
    {
        let terms: Vec<(M, Scalar)> = terms.into_iter().collect();
        if M::KIND != ring.kind() {
            return Err(Error::KindMismatch { expected: ring.kind().name() });
        }
        for (m, c) in &terms {
            if !m.is_valid(ring) || !ring.field().contains(c) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Self::from_terms(ring, terms))
    }

    pub(crate) fn from_terms<I>(ring: &RingRef, terms: I) -> Self
    where
        I: IntoIterator<Item = (M, Scalar)>,
    {
        let mut terms: Vec<(M, Scalar)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp_in(&a.0, ring));
        let mut out: Vec<(M, Scalar)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
                _ => out.push((m, c)),
            }
            if out.last().is_some_and(|(_, c)| c.is_zero()) {
                out.pop();
            }
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Builds from terms already strictly descending with nonzero coefficients.
    pub(crate) fn from_sorted(ring: &RingRef, terms: Vec<(M, Scalar)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0.cmp_in(&w[1].0, ring).is_gt()));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(M, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn lm(&self) -> Option<&M> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn lc(&self) -> Option<&Scalar> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn leading_term(&self) -> Result<(&M, &Scalar)> {
        self.terms.first().map(|(m, c)| (m, c)).ok_or(Error::ZeroPolynomial)
    }

    /// Maximal weighted degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree(&self.ring)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree(&self.ring));
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.lc() {
            Some(c) if !c.is_one() => self.scale(&c.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    /// `c * left * self * right`; order is preserved because the ordering is
    /// multiplicative.
    pub fn mul_monomials(&self, c: &Scalar, left: &M, right: &M) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (left.mul(m).mul(right), a * c))
            .collect();
        Self::from_sorted(&self.ring, terms)
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        debug_assert!(same_ring(&self.ring, &other.ring));
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |c: &Scalar| if negate_other { -c } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp_in(&b[j].0, ring) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate_other { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Polynomial { ring: ring.clone(), terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        let ring = &self.ring;
        let mut acc: BTreeMap<M, Scalar> = BTreeMap::new();
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                let p = a * b;
                acc.entry(m.mul(n))
                    .and_modify(|c| *c = &*c + &p)
                    .or_insert(p);
            }
        }
        Self::from_terms(ring, acc)
    }

    fn require_same(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.require_same(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.require_same(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.require_same(other)?;
        Ok(self.product(other))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(&self.ring), |acc, _| &acc * self)
    }

    /// The sum of the terms of maximal weighted degree.
    pub fn lh(&self) -> Result<Self> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree(&self.ring) == d)
            .cloned()
            .collect();
        Ok(Self::from_sorted(&self.ring, terms))
    }

    /// `(degree, component)` pairs, degrees strictly descending.
    pub fn homogeneous_components(&self) -> Vec<(u32, Self)> {
        let mut buckets: BTreeMap<u32, Vec<(M, Scalar)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            buckets.entry(m.degree(&self.ring)).or_default().push((m.clone(), c.clone()));
        }
        buckets
            .into_iter()
            .rev()
            .map(|(d, terms)| (d, Self::from_sorted(&self.ring, terms)))
            .collect()
    }

    /// Reinterprets the polynomial over another ring, mapping each monomial.
    pub(crate) fn map_monomials<N, F>(&self, ring: &RingRef, f: F) -> Polynomial<N>
    where
        N: Monomial,
        F: Fn(&M) -> N,
    {
        Polynomial::from_terms(ring, self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    pub fn coefficient(&self, m: &M) -> Option<&Scalar> {
        self.terms.iter().find(|(n, _)| n == m).map(|(_, c)| c)
    }
}

impl<M: Monomial> fmt::Display for Polynomial<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", m.render(&self.ring))?;
            } else {
                write!(f, "{a}*{}", m.render(&self.ring))?;
            }
        }
        Ok(())
    }
}

impl<M: Monomial> fmt::Debug for Polynomial<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

// Operator forms assume operands share a ring and panic otherwise; the
// `checked_*` methods report the mismatch instead.
impl<M: Monomial> Add for &Polynomial<M> {
    type Output = Polynomial<M>;
    fn add(self, rhs: Self) -> Polynomial<M> {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl<M: Monomial> Sub for &Polynomial<M> {
    type Output = Polynomial<M>;
    fn sub(self, rhs: Self) -> Polynomial<M> {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl<M: Monomial> Mul for &Polynomial<M> {
    type Output = Polynomial<M>;
    fn mul(self, rhs: Self) -> Polynomial<M> {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl<M: Monomial> Neg for &Polynomial<M> {
    type Output = Polynomial<M>;
    fn neg(self) -> Polynomial<M> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

/// Convenience for tests and callers building rings inline.
pub fn ring_ref(ring: Ring) -> RingRef {
    Arc::new(ring)
}
