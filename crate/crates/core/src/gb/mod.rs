//! Groebner bases: Buchberger completion in commutative rings and
//! degree-truncated overlap completion in free algebras.

pub mod commutative;
pub mod free;

use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::RingRef;
use crate::scalar::Scalar;

/// A generating set together with what is known about it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis<M: Monomial> {
    ring: RingRef,
    elements: Vec<Polynomial<M>>,
    reduced: bool,
    complete: bool,
    truncation: Option<u32>,
}

impl<M: Monomial> GroebnerBasis<M> {
    pub fn new(
        ring: &RingRef,
        elements: Vec<Polynomial<M>>,
        reduced: bool,
        complete: bool,
        truncation: Option<u32>,
    ) -> Self {
        debug_assert!(elements.iter().all(|g| !g.is_zero()));
        GroebnerBasis { ring: ring.clone(), elements, reduced, complete, truncation }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial<M>] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial<M>> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Commutative: all S-pairs resolved. Free: no obstruction was left
    /// pending above the truncation degree.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn truncation_degree(&self) -> Option<u32> {
        self.truncation
    }

    /// True when the basis contains a nonzero constant.
    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant())
    }

    pub fn leading_monomials(&self) -> Vec<M> {
        self.elements.iter().filter_map(|g| g.lm().cloned()).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.elements.iter().all(|g| g.is_homogeneous())
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.elements.iter().map(|g| g.to_string()).collect()
    }
}

/// Remainder of `f` modulo `divisors` in either ring family.
pub fn normal_form<M: Monomial>(f: &Polynomial<M>, divisors: &[Polynomial<M>]) -> Polynomial<M> {
    let refs: Vec<&Polynomial<M>> = divisors.iter().filter(|g| !g.is_zero()).collect();
    reduce(f, &refs, false).0
}

/// Sorts by leading monomial, greatest first; ties by printed form.
pub(crate) fn sort_by_lm_desc<M: Monomial>(ring: &RingRef, elems: &mut [Polynomial<M>]) {
    elems.sort_by(|a, b| {
        let (la, lb) = (a.lm().expect("nonzero"), b.lm().expect("nonzero"));
        lb.cmp_in(la, ring).then_with(|| a.to_string().cmp(&b.to_string()))
    });
}

/// One reduction step: `coeff * left * divisors[index] * right` was
/// subtracted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step<M: Monomial> {
    pub index: usize,
    pub coeff: Scalar,
    pub left: M,
    pub right: M,
}

/// `rest - c * left * tail(g) * right`; both inputs descending, result
/// descending. The leading term of `g` is assumed to have cancelled.
fn sub_multiple<M: Monomial>(
    ring: &RingRef,
    rest: &[(M, Scalar)],
    g: &Polynomial<M>,
    c: &Scalar,
    left: &M,
    right: &M,
) -> Vec<(M, Scalar)> {
    use std::cmp::Ordering::*;
    let tail = &g.terms()[1..];
    let mut out = Vec::with_capacity(rest.len() + tail.len());
    let mut prod = tail.iter().map(|(m, a)| (left.mul(m).mul(right), a * c)).peekable();
    let mut i = 0;
    while i < rest.len() {
        let Some((pm, _)) = prod.peek() else { break };
        match rest[i].0.cmp_in(pm, ring) {
            Greater => {
                out.push(rest[i].clone());
                i += 1;
            }
            Less => {
                let (pm, pc) = prod.next().expect("peeked");
                out.push((pm, -&pc));
            }
            Equal => {
                let (_, pc) = prod.next().expect("peeked");
                let v = &rest[i].1 - &pc;
                if !v.is_zero() {
                    out.push((rest[i].0.clone(), v));
                }
                i += 1;
            }
        }
    }
    out.extend(rest[i..].iter().cloned());
    out.extend(prod.map(|(m, c)| (m, -&c)));
    out
}

/// Full reduction of `f` by `divisors`, always using the first divisor in
/// list order whose leading monomial divides the current term.
pub(crate) fn reduce<M: Monomial>(
    f: &Polynomial<M>,
    divisors: &[&Polynomial<M>],
    record: bool,
) -> (Polynomial<M>, Vec<Step<M>>) {
    let ring = f.ring().clone();
    let mut cur: Vec<(M, Scalar)> = f.terms().to_vec();
    let mut start = 0;
    let mut rem = Vec::new();
    let mut steps = Vec::new();
    while start < cur.len() {
        let (m, c) = &cur[start];
        let hit = divisors.iter().enumerate().find_map(|(i, g)| {
            let lm = g.lm().expect("nonzero divisor");
            lm.cofactors(m).map(|lr| (i, lr))
        });
        match hit {
            Some((i, (left, right))) => {
                let g = divisors[i];
                let q = c.div(g.lc().expect("nonzero"));
                cur = sub_multiple(&ring, &cur[start + 1..], g, &q, &left, &right);
                start = 0;
                if record {
                    steps.push(Step { index: i, coeff: q, left, right });
                }
            }
            None => {
                rem.push(cur[start].clone());
                start += 1;
            }
        }
    }
    (Polynomial::from_sorted(&ring, rem), steps)
}
