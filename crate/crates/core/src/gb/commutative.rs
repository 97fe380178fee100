//! Division, S-polynomials and Buchberger completion in `K[x]` and `K[x, t]`.

use crate::error::{Error, Result};
use crate::gb::{reduce, sort_by_lm_desc, GroebnerBasis};
use crate::monomial::{Exponents, Monomial};
use crate::poly::{same_ring, CommPoly, Polynomial};
use crate::ring::{RingKind, RingRef};


fn check_divisors(f: &CommPoly, divisors: &[CommPoly]) -> Result<()> {
    if f.ring().kind() != RingKind::Commutative {
        return Err(Error::KindMismatch { expected: "commutative" });
    }
    for g in divisors {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !same_ring(g.ring(), f.ring()) {
            return Err(Error::RingMismatch);
        }
    }
    Ok(())
}

/// `f = sum(quotients[i] * divisors[i]) + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<CommPoly>,
    pub remainder: CommPoly,
}

/// Multivariate division: always reduces the current leading term by the
/// first divisor (in list order) whose leading monomial divides it.
pub fn divide(f: &CommPoly, divisors: &[CommPoly]) -> Result<Division> {
    check_divisors(f, divisors)?;
    let refs: Vec<&CommPoly> = divisors.iter().collect();
    let (remainder, steps) = reduce(f, &refs, true);
    let ring = f.ring();
    let mut parts: Vec<Vec<(Exponents, crate::Scalar)>> = vec![Vec::new(); divisors.len()];
    for s in steps {
        parts[s.index].push((s.left, s.coeff));
    }
    let quotients = parts.into_iter().map(|t| Polynomial::from_terms(ring, t)).collect();
    Ok(Division { quotients, remainder })
}

/// Remainder of `f` modulo `divisors`.
pub fn normal_form(f: &CommPoly, divisors: &[CommPoly]) -> Result<CommPoly> {
    check_divisors(f, divisors)?;
    let refs: Vec<&CommPoly> = divisors.iter().collect();
    Ok(reduce(f, &refs, false).0)
}

fn nf_refs(f: &CommPoly, divisors: &[&CommPoly]) -> CommPoly {
    reduce(f, divisors, false).0
}

/// `(L / LT(f)) f - (L / LT(g)) g` with `L = lcm(LM f, LM g)`.
pub fn spoly(f: &CommPoly, g: &CommPoly) -> Result<CommPoly> {
    if !same_ring(f.ring(), g.ring()) {
        return Err(Error::RingMismatch);
    }
    let (mf, cf) = f.leading_term()?;
    let (mg, cg) = g.leading_term()?;
    let l = mf.lcm(mg);
    let one = Exponents::one(f.ring());
    let a = f.mul_monomials(&cf.inv().expect("nonzero"), &mf.quotient_of(&l).expect("lcm"), &one);
    let b = g.mul_monomials(&cg.inv().expect("nonzero"), &mg.quotient_of(&l).expect("lcm"), &one);
    Ok(&a - &b)
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Exponents,
    degree: u32,
    seq: u64,
}

struct Completion {
    ring: RingRef,
    basis: Vec<CommPoly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    seq: u64,
}

impl Completion {
    fn lm(&self, i: usize) -> &Exponents {
        self.basis[i].lm().expect("nonzero")
    }

    fn active_refs(&self) -> Vec<&CommPoly> {
        self.basis.iter().zip(&self.active).filter(|(_, a)| **a).map(|(g, _)| g).collect()
    }

    /// Gebauer-Moeller update: product and chain criteria.
    fn insert(&mut self, h: CommPoly) {
        let k = self.basis.len();
        let lm_h = h.lm().expect("nonzero").clone();
        let cands: Vec<(usize, Exponents)> = (0..k)
            .filter(|&i| self.active[i])
            .map(|i| (i, self.lm(i).lcm(&lm_h)))
            .collect();
        let mut kept: Vec<(usize, Exponents)> = Vec::new();
        for (idx, (i, l)) in cands.iter().enumerate() {
            let coprime = self.lm(*i).coprime(&lm_h);
            let dominated = cands[idx + 1..].iter().any(|(_, l2)| l2.divides(l))
                || kept.iter().any(|(_, l2)| l2.divides(l));
            if coprime || !dominated {
                kept.push((*i, l.clone()));
            }
        }
        let ring = self.ring.clone();
        let old = std::mem::take(&mut self.pairs);
        self.pairs = old
            .into_iter()
            .filter(|p| {
                !(lm_h.divides(&p.lcm)
                    && self.lm(p.i).lcm(&lm_h) != p.lcm
                    && self.lm(p.j).lcm(&lm_h) != p.lcm)
            })
            .collect();
        for (i, l) in kept {
            if self.lm(i).coprime(&lm_h) {
                continue;
            }
            self.seq += 1;
            let degree = l.degree(&ring);
            self.pairs.push(Pair { i, j: k, lcm: l, degree, seq: self.seq });
        }
        for i in 0..k {
            if self.active[i] && lm_h.divides(self.lm(i)) {
                self.active[i] = false;
            }
        }
        self.basis.push(h);
        self.active.push(true);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| (p.degree, p.seq))
            .map(|(idx, _)| idx)?;
        Some(self.pairs.swap_remove(best))
    }
}

fn prepare(set: &[CommPoly]) -> Result<(RingRef, Vec<CommPoly>)> {
    let ring = match set.first() {
        Some(f) => f.ring().clone(),
        None => return Err(Error::InvalidRing("empty generating set has no ring".into())),
    };
    if ring.kind() != RingKind::Commutative {
        return Err(Error::KindMismatch { expected: "commutative" });
    }
    let mut inputs: Vec<CommPoly> = Vec::new();
    for f in set {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !same_ring(f.ring(), &ring) {
            return Err(Error::RingMismatch);
        }
        let m = f.monic();
        if !inputs.contains(&m) {
            inputs.push(m);
        }
    }
    Ok((ring, inputs))
}

/// Buchberger completion without final interreduction. Every input (made
/// monic) is kept unless its leading monomial became redundant.
pub fn complete(set: &[CommPoly]) -> Result<GroebnerBasis<Exponents>> {
    let (ring, inputs) = prepare(set)?;
    if let Some(c) = inputs.iter().find(|f| f.is_constant()) {
        return Ok(GroebnerBasis::new(&ring, vec![c.clone()], true, true, None));
    }
    let mut st = Completion { ring: ring.clone(), basis: Vec::new(), active: Vec::new(), pairs: Vec::new(), seq: 0 };
    for f in inputs {
        st.insert(f);
    }
    while let Some(p) = st.next_pair() {
        let s = spoly(&st.basis[p.i], &st.basis[p.j])?;
        let h = nf_refs(&s, &st.active_refs());
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        if h.is_constant() {
            return Ok(GroebnerBasis::new(&ring, vec![h], true, true, None));
        }
        st.insert(h);
    }
    let mut out: Vec<CommPoly> = st
        .basis
        .into_iter()
        .zip(st.active)
        .filter(|(_, a)| *a)
        .map(|(g, _)| g)
        .collect();
    sort_by_lm_desc(&ring, &mut out);
    Ok(GroebnerBasis::new(&ring, out, false, true, None))
}

/// The reduced Groebner basis of the ideal generated by `set`.
pub fn buchberger(set: &[CommPoly]) -> Result<GroebnerBasis<Exponents>> {
    reduce_basis(&complete(set)?)
}

/// Minimalizes and interreduces a complete basis into the unique reduced
/// Groebner basis: monic, no term of any element divisible by another
/// element's leading monomial, sorted by leading monomial (greatest first).
pub fn reduce_basis(g: &GroebnerBasis<Exponents>) -> Result<GroebnerBasis<Exponents>> {
    if !g.is_complete() {
        return Err(Error::NotGroebner("basis is not complete".into()));
    }
    let ring = g.ring().clone();
    let mut elems: Vec<CommPoly> = g.elements().iter().map(|p| p.monic()).collect();
    sort_by_lm_desc(&ring, &mut elems);
    elems.reverse();
    // keep elements whose LM is not divisible by the LM of a kept one
    let mut minimal: Vec<CommPoly> = Vec::new();
    for p in elems {
        let lm = p.lm().expect("nonzero");
        if !minimal.iter().any(|q| q.lm().expect("nonzero").divides(lm)) {
            minimal.push(p);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, p) in minimal.iter().enumerate() {
        let others: Vec<&CommPoly> =
            minimal.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q).collect();
        let (lm, lc) = p.leading_term()?;
        let head = Polynomial::term(&ring, lm.clone(), lc.clone());
        let tail = p - &head;
        reduced.push(&head + &nf_refs(&tail, &others));
    }
    sort_by_lm_desc(&ring, &mut reduced);
    Ok(GroebnerBasis::new(&ring, reduced, true, true, None))
}

/// A pair whose S-polynomial does not reduce to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairWitness {
    pub pair: (usize, usize),
    pub remainder: CommPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerCheck {
    pub is_groebner: bool,
    pub witness: Option<PairWitness>,
}

/// Buchberger's criterion over every pair; reports the first failing pair.
pub fn is_groebner(g: &[CommPoly]) -> Result<GroebnerCheck> {
    let Some(first) = g.first() else {
        return Ok(GroebnerCheck { is_groebner: true, witness: None });
    };
    check_divisors(first, g)?;
    let refs: Vec<&CommPoly> = g.iter().collect();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            let (a, b) = (g[i].lm().expect("nonzero"), g[j].lm().expect("nonzero"));
            if a.coprime(b) {
                continue;
            }
            let r = nf_refs(&spoly(&g[i], &g[j])?, &refs);
            if !r.is_zero() {
                return Ok(GroebnerCheck {
                    is_groebner: false,
                    witness: Some(PairWitness { pair: (i, j), remainder: r }),
                });
            }
        }
    }
    Ok(GroebnerCheck { is_groebner: true, witness: None })
}

/// Ideal membership, valid when `g` is a Groebner basis.
pub fn reduces_to_zero(f: &CommPoly, g: &[CommPoly]) -> Result<bool> {
    Ok(normal_form(f, g)?.is_zero())
}
