//! Two-sided reduction, overlap obstructions and degree-truncated completion
//! in free algebras.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::gb::{reduce, sort_by_lm_desc, GroebnerBasis, Step};
use crate::monomial::{Monomial, Word};
use crate::poly::{same_ring, FreePoly, Polynomial};
use crate::ring::{RingKind, RingRef};


fn check_divisors(f: &FreePoly, divisors: &[FreePoly]) -> Result<()> {
    if f.ring().kind() != RingKind::Free {
        return Err(Error::KindMismatch { expected: "free" });
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

fn nf_refs(f: &FreePoly, divisors: &[&FreePoly]) -> FreePoly {
    reduce(f, divisors, false).0
}

/// Result of two-sided division: `f = sum(coeff * left * G[index] * right) + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcDivision {
    pub remainder: FreePoly,
    pub trace: Vec<Step<Word>>,
}

impl NcDivision {
    /// Rebuilds `f` from the trace and the remainder.
    pub fn recombine(&self, divisors: &[FreePoly]) -> FreePoly {
        let mut acc = self.remainder.clone();
        for s in &self.trace {
            acc = &acc + &divisors[s.index].mul_monomials(&s.coeff, &s.left, &s.right);
        }
        acc
    }
}

/// Rewrites the greatest reducible word first, using the first divisor (in
/// list order) whose leading word occurs in it, at its leftmost occurrence.
pub fn nc_divide(f: &FreePoly, divisors: &[FreePoly]) -> Result<NcDivision> {
    check_divisors(f, divisors)?;
    let refs: Vec<&FreePoly> = divisors.iter().collect();
    let (remainder, trace) = reduce(f, &refs, true);
    Ok(NcDivision { remainder, trace })
}

pub fn nc_normal_form(f: &FreePoly, divisors: &[FreePoly]) -> Result<FreePoly> {
    check_divisors(f, divisors)?;
    let refs: Vec<&FreePoly> = divisors.iter().collect();
    Ok(nf_refs(f, &refs))
}

/// `left.0 * LM(g_i) * left.1 == right.0 * LM(g_j) * right.1 == word`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Obstruction {
    pub i: usize,
    pub j: usize,
    pub word: Word,
    pub left: (Word, Word),
    pub right: (Word, Word),
}

/// Overlaps (a suffix of `a` equal to a prefix of `b`, and the reverse when
/// `same` is false) and containments of `b` in `a` (and the reverse).
fn overlaps(a: &Word, b: &Word, i: usize, j: usize, same: bool) -> Vec<Obstruction> {
    let e = Word(Vec::new());
    let mut out: Vec<Obstruction> = Vec::new();
    let mut push = |o: Obstruction| {
        if !out.contains(&o) {
            out.push(o);
        }
    };
    let suffix_prefix = |x: &Word, y: &Word, xi: usize, yi: usize, push: &mut dyn FnMut(Obstruction)| {
        let m = x.len().min(y.len());
        for k in 1..m {
            if x.letters()[x.len() - k..] == y.letters()[..k] {
                let tail = y.slice(k, y.len());
                let head = x.slice(0, x.len() - k);
                let word = x.mul(&tail);
                let (l, r) = ((e.clone(), tail), (head, e.clone()));
                let o = if xi == i && yi == j {
                    Obstruction { i, j, word, left: l, right: r }
                } else {
                    Obstruction { i, j, word, left: r, right: l }
                };
                push(o);
            }
        }
    };
    suffix_prefix(a, b, i, j, &mut push);
    if !same {
        suffix_prefix(b, a, j, i, &mut push);
        for p in a.occurrences(b) {
            push(Obstruction {
                i,
                j,
                word: a.clone(),
                left: (e.clone(), e.clone()),
                right: (a.slice(0, p), a.slice(p + b.len(), a.len())),
            });
        }
        for p in b.occurrences(a) {
            push(Obstruction {
                i,
                j,
                word: b.clone(),
                left: (b.slice(0, p), b.slice(p + a.len(), b.len())),
                right: (e.clone(), e.clone()),
            });
        }
    }
    out
}

/// All overlaps and containments between the leading words of `g1` and
/// `g2`. Equal inputs are treated as a self-pair: only proper self-overlaps.
pub fn find_obstructions(g1: &FreePoly, g2: &FreePoly) -> Result<Vec<Obstruction>> {
    if !same_ring(g1.ring(), g2.ring()) {
        return Err(Error::RingMismatch);
    }
    let a = g1.lm().ok_or(Error::ZeroPolynomial)?;
    let b = g2.lm().ok_or(Error::ZeroPolynomial)?;
    let same = g1 == g2;
    Ok(overlaps(a, b, 0, if same { 0 } else { 1 }, same))
}

/// `(1/lc g1) u g1 v - (1/lc g2) u' g2 v'` for an obstruction between `g1`
/// and `g2`.
pub fn s_element(g1: &FreePoly, g2: &FreePoly, ob: &Obstruction) -> Result<FreePoly> {
    let c1 = g1.lc().ok_or(Error::ZeroPolynomial)?.inv().expect("nonzero");
    let c2 = g2.lc().ok_or(Error::ZeroPolynomial)?.inv().expect("nonzero");
    let a = g1.mul_monomials(&c1, &ob.left.0, &ob.left.1);
    let b = g2.mul_monomials(&c2, &ob.right.0, &ob.right.1);
    a.checked_sub(&b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NcOptions {
    /// Tail-reduce the final basis.
    pub interreduce: bool,
}

impl Default for NcOptions {
    fn default() -> Self {
        NcOptions { interreduce: true }
    }
}

struct Completion {
    ring: RingRef,
    max_degree: u32,
    basis: Vec<FreePoly>,
    active: Vec<bool>,
    queue: BinaryHeap<Reverse<(u32, usize, usize, u64)>>,
    obstructions: Vec<Obstruction>,
    above: Vec<(usize, usize)>,
    requeue: Vec<FreePoly>,
}

impl Completion {
    fn active_refs(&self) -> Vec<&FreePoly> {
        self.basis.iter().zip(&self.active).filter(|(_, a)| **a).map(|(g, _)| g).collect()
    }

    /// Adds a reduced monic element, schedules its obstructions and retires
    /// elements whose leading word contains the new one.
    fn insert(&mut self, h: FreePoly) {
        let k = self.basis.len();
        let lm = h.lm().expect("nonzero").clone();
        self.basis.push(h);
        self.active.push(true);
        for i in 0..k {
            if self.active[i] && self.basis[i].lm().expect("nonzero").find(&lm).is_some() {
                self.active[i] = false;
                self.requeue.push(self.basis[i].clone());
            }
        }
        self.tail_reduce_by_new(k);
        for i in 0..=k {
            if !self.active[i] {
                continue;
            }
            let other = self.basis[i].lm().expect("nonzero");
            for ob in overlaps(other, &lm, i, k, i == k) {
                let d = ob.word.degree(&self.ring);
                if d > self.max_degree {
                    self.above.push((ob.i, ob.j));
                } else {
                    let n = self.obstructions.len() as u64;
                    self.queue.push(Reverse((d, ob.i, ob.j, n)));
                    self.obstructions.push(ob);
                }
            }
        }
    }

    /// Keeps tails of the other active elements reduced; leading words do not
    /// change, so scheduled obstructions stay valid.
    fn tail_reduce_by_new(&mut self, k: usize) {
        let lm = self.basis[k].lm().expect("nonzero").clone();
        for i in 0..k {
            if !self.active[i] || !self.basis[i].terms()[1..].iter().any(|(m, _)| m.find(&lm).is_some()) {
                continue;
            }
            let p = &self.basis[i];
            let (m, c) = p.leading_term().expect("nonzero");
            let head = Polynomial::term(&self.ring, m.clone(), c.clone());
            let tail = p - &head;
            let others: Vec<&FreePoly> = (0..=k).filter(|&j| j != i && self.active[j]).map(|j| &self.basis[j]).collect();
            self.basis[i] = &head + &nf_refs(&tail, &others);
        }
    }

    /// Reduces and inserts `f` and anything it displaces. Returns true when a
    /// nonzero constant appeared.
    fn absorb(&mut self, f: FreePoly) -> bool {
        self.requeue.push(f);
        while let Some(g) = self.requeue.pop() {
            let h = nf_refs(&g, &self.active_refs());
            if h.is_zero() {
                continue;
            }
            let h = h.monic();
            if h.is_constant() {
                self.basis = vec![h];
                self.active = vec![true];
                return true;
            }
            self.insert(h);
        }
        false
    }
}

fn prepare(set: &[FreePoly], max_degree: u32) -> Result<(RingRef, Vec<FreePoly>)> {
    let ring = match set.first() {
        Some(f) => f.ring().clone(),
        None => return Err(Error::InvalidRing("empty generating set has no ring".into())),
    };
    if ring.kind() != RingKind::Free {
        return Err(Error::KindMismatch { expected: "free" });
    }
    let mut inputs: Vec<FreePoly> = Vec::new();
    let mut needed = 0;
    for f in set {
        if !same_ring(f.ring(), &ring) {
            return Err(Error::RingMismatch);
        }
        needed = needed.max(f.degree().ok_or(Error::ZeroPolynomial)?);
        let m = f.monic();
        if !inputs.contains(&m) {
            inputs.push(m);
        }
    }
    if max_degree < needed {
        return Err(Error::DegreeBoundTooSmall { bound: max_degree, needed });
    }
    sort_by_lm_desc(&ring, &mut inputs);
    inputs.reverse();
    Ok((ring, inputs))
}

/// Completion truncated at `max_degree`: every obstruction whose overlap word
/// has degree at most `max_degree` is resolved, smallest degree first. The
/// result is marked complete only when no obstruction above the bound
/// between surviving elements was ever found.
pub fn nc_complete(set: &[FreePoly], max_degree: u32, opts: NcOptions) -> Result<GroebnerBasis<Word>> {
    let (ring, inputs) = prepare(set, max_degree)?;
    let mut st = Completion {
        ring: ring.clone(),
        max_degree,
        basis: Vec::new(),
        active: Vec::new(),
        queue: BinaryHeap::new(),
        obstructions: Vec::new(),
        above: Vec::new(),
        requeue: Vec::new(),
    };
    let unit = |g: Vec<FreePoly>| GroebnerBasis::new(&ring, g, true, true, Some(max_degree));
    for f in inputs {
        if st.absorb(f) {
            return Ok(unit(st.basis));
        }
    }
    while let Some(Reverse((_, i, j, n))) = st.queue.pop() {
        if !st.active[i] || !st.active[j] {
            continue;
        }
        let ob = &st.obstructions[n as usize];
        let s = s_element(&st.basis[i], &st.basis[j], ob)?;
        if st.absorb(s) {
            return Ok(unit(st.basis));
        }
    }
    let complete = !st.above.iter().any(|&(i, j)| st.active[i] && st.active[j]);
    let mut out: Vec<FreePoly> =
        st.basis.into_iter().zip(st.active).filter(|(_, a)| *a).map(|(g, _)| g).collect();
    if opts.interreduce {
        out = tail_reduce(&out);
    }
    sort_by_lm_desc(&ring, &mut out);
    Ok(GroebnerBasis::new(&ring, out, opts.interreduce, complete, Some(max_degree)))
}

/// Tail-reduces each element by the others; leading words must already be
/// pairwise non-containing.
fn tail_reduce(elems: &[FreePoly]) -> Vec<FreePoly> {
    let mut out = Vec::with_capacity(elems.len());
    for (i, p) in elems.iter().enumerate() {
        let others: Vec<&FreePoly> = elems.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, q)| q).collect();
        let (lm, lc) = p.leading_term().expect("nonzero");
        let head = Polynomial::term(p.ring(), lm.clone(), lc.clone());
        let tail = p - &head;
        out.push((&head + &nf_refs(&tail, &others)).monic());
    }
    out
}

/// Drops elements whose leading word contains another leading word, then
/// tail-reduces and sorts. Flags and truncation degree carry over.
pub fn nc_reduce_basis(g: &GroebnerBasis<Word>) -> GroebnerBasis<Word> {
    let ring = g.ring().clone();
    let mut elems: Vec<FreePoly> = g.elements().iter().map(|p| p.monic()).collect();
    sort_by_lm_desc(&ring, &mut elems);
    elems.reverse();
    let mut minimal: Vec<FreePoly> = Vec::new();
    for p in elems {
        let lm = p.lm().expect("nonzero");
        if !minimal.iter().any(|q| lm.find(q.lm().expect("nonzero")).is_some()) {
            minimal.push(p);
        }
    }
    let mut out = tail_reduce(&minimal);
    sort_by_lm_desc(&ring, &mut out);
    GroebnerBasis::new(&ring, out, true, g.is_complete(), g.truncation_degree())
}

/// An obstruction whose S-element does not reduce to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionWitness {
    pub obstruction: Obstruction,
    pub remainder: FreePoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcGroebnerCheck {
    pub is_groebner: bool,
    pub witness: Option<ObstructionWitness>,
}

/// Checks every obstruction with overlap degree at most `max_degree`,
/// smallest degree first.
pub fn is_nc_groebner(g: &[FreePoly], max_degree: u32) -> Result<NcGroebnerCheck> {
    let Some(first) = g.first() else {
        return Ok(NcGroebnerCheck { is_groebner: true, witness: None });
    };
    check_divisors(first, g)?;
    let ring = first.ring();
    let mut obs = Vec::new();
    for i in 0..g.len() {
        for j in i..g.len() {
            let (a, b) = (g[i].lm().expect("nonzero"), g[j].lm().expect("nonzero"));
            obs.extend(overlaps(a, b, i, j, i == j).into_iter().filter(|o| o.word.degree(ring) <= max_degree));
        }
    }
    obs.sort_by(|x, y| (x.word.degree(ring), x.i, x.j).cmp(&(y.word.degree(ring), y.i, y.j)));
    let refs: Vec<&FreePoly> = g.iter().collect();
    for ob in obs {
        let r = nf_refs(&s_element(&g[ob.i], &g[ob.j], &ob)?, &refs);
        if !r.is_zero() {
            return Ok(NcGroebnerCheck {
                is_groebner: false,
                witness: Some(ObstructionWitness { obstruction: ob, remainder: r }),
            });
        }
    }
    Ok(NcGroebnerCheck { is_groebner: true, witness: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::ring_ref;
    use crate::ring::Ring;

    fn ring() -> RingRef {
        ring_ref(Ring::free(&["X", "Y"]).unwrap().with_homog_var("T").unwrap())
    }

    fn xy() -> RingRef {
        ring_ref(Ring::free(&["X", "Y"]).unwrap().with_precedence(&["Y", "X"]).unwrap())
    }

    fn ps(r: &RingRef, items: &[&str]) -> Vec<FreePoly> {
        items.iter().map(|s| parse_poly(r, s).unwrap()).collect()
    }

    #[test]
    fn divide_examples() {
        let r = ring();
        let g = ps(&r, &["X*T - T*X"]);
        let f = parse_poly(&r, "X*T*Y").unwrap();
        let d = nc_divide(&f, &g).unwrap();
        assert_eq!(d.remainder.to_string(), "T*X*Y");
        assert_eq!(d.trace.len(), 1);
        assert_eq!(d.recombine(&g), f);
        assert!(nc_divide(&g[0], &g).unwrap().remainder.is_zero());

        let r2 = xy();
        let yx = parse_poly(&r2, "Y*X").unwrap();
        let d = nc_divide(&yx, &ps(&r2, &["X*Y - 1"])).unwrap();
        assert_eq!(d.remainder, yx);
        assert!(d.trace.is_empty());
        assert_eq!(nc_divide(&yx, &[FreePoly::zero(&r2)]), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn obstruction_examples() {
        let r = ring();
        let g = ps(&r, &["X*T - T*X", "Y*T - T*Y"]);
        assert!(find_obstructions(&g[0], &g[1]).unwrap().is_empty());

        let r2 = xy();
        let h = parse_poly(&r2, "Y^2 - X").unwrap();
        let obs = find_obstructions(&h, &h).unwrap();
        assert_eq!(obs.len(), 1);
        assert_eq!(obs[0].word.len(), 3);
        assert_eq!(obs[0].left.0.mul(h.lm().unwrap()).mul(&obs[0].left.1), obs[0].word);
        assert_eq!(obs[0].right.0.mul(h.lm().unwrap()).mul(&obs[0].right.1), obs[0].word);

        let x = parse_poly(&r2, "X").unwrap();
        assert!(find_obstructions(&x, &x).unwrap().is_empty());

        let a = parse_poly(&r2, "X*Y*X").unwrap();
        let b = parse_poly(&r2, "Y").unwrap();
        let obs = find_obstructions(&a, &b).unwrap();
        assert_eq!(obs.len(), 1);
        assert_eq!(obs[0].right, (Word(vec![0]), Word(vec![0])));
    }

    #[test]
    fn checker_examples() {
        let r = ring();
        assert!(is_nc_groebner(&ps(&r, &["X*T - T*X", "Y*T - T*Y"]), 10).unwrap().is_groebner);

        let r2 = xy();
        let c = is_nc_groebner(&ps(&r2, &["Y^2 - X"]), 5).unwrap();
        assert!(!c.is_groebner);
        let w = c.witness.unwrap().remainder.monic();
        assert_eq!(w.to_string(), "Y*X - X*Y");
        assert!(is_nc_groebner(&ps(&r2, &["X"]), 5).unwrap().is_groebner);
    }

    #[test]
    fn completion_examples() {
        let r = ring();
        let g = nc_complete(&ps(&r, &["X*T - T*X", "Y*T - T*Y"]), 6, NcOptions::default()).unwrap();
        assert_eq!(g.to_strings(), vec!["X*T - T*X", "Y*T - T*Y"]);
        assert!(g.is_complete());
        assert_eq!(g.truncation_degree(), Some(6));

        let r2 = xy();
        let g = nc_complete(&ps(&r2, &["Y^2"]), 4, NcOptions::default()).unwrap();
        assert_eq!(g.to_strings(), vec!["Y^2"]);
        assert!(g.is_complete());

        let g = nc_complete(&ps(&r2, &["Y^2 - X"]), 6, NcOptions::default()).unwrap();
        assert_eq!(g.to_strings(), vec!["Y^2 - X", "Y*X - X*Y"]);
        assert!(is_nc_groebner(g.elements(), 6).unwrap().is_groebner);

        assert_eq!(
            nc_complete(&ps(&r2, &["Y^3"]), 2, NcOptions::default()).unwrap_err(),
            Error::DegreeBoundTooSmall { bound: 2, needed: 3 }
        );
    }

    #[test]
    fn unit_ideal() {
        let r2 = xy();
        let g = nc_complete(&ps(&r2, &["X*Y - 1", "X"]), 4, NcOptions::default()).unwrap();
        assert!(g.is_unit_ideal());
    }
}
