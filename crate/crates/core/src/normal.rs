//! Normal monomials of a Groebner basis, listed degree by degree, and the
//! correspondence between the normal monomials of a basis and of its
//! homogenization.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::gb::GroebnerBasis;
use crate::homog::Homogenizer;
use crate::monomial::Monomial;
use crate::poly::same_ring;
use crate::ring::RingRef;

/// Monomials divisible by no leading monomial of a basis, for degrees
/// `0..=bound`, each degree sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalSet<M: Monomial> {
    ring: RingRef,
    bound: u32,
    by_degree: Vec<Vec<M>>,
}

impl<M: Monomial> NormalSet<M> {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn degree(&self, d: u32) -> &[M] {
        self.by_degree.get(d as usize).map_or(&[], |v| v.as_slice())
    }

    pub fn counts(&self) -> Vec<usize> {
        self.by_degree.iter().map(|v| v.len()).collect()
    }

    pub fn render_degree(&self, d: u32) -> Vec<String> {
        self.degree(d).iter().map(|m| m.render(&self.ring)).collect()
    }
}

/// Normal monomials up to degree `bound` for the leading monomials `lms`.
pub fn normal_monomials_of<M: Monomial>(ring: &RingRef, lms: &[M], bound: u32) -> NormalSet<M> {
    // A normal monomial stays normal after removing one variable, so growing
    // only normal monomials reaches all of them.
    let mut by_degree: Vec<BTreeSet<M>> = vec![BTreeSet::new(); bound as usize + 1];
    by_degree[0].insert(M::one(ring));
    if lms.iter().any(|m| m.is_one()) {
        by_degree[0].clear();
    }
    for d in 1..=bound {
        let mut found = BTreeSet::new();
        for slot in 0..ring.num_slots() {
            let w = ring.weight(slot);
            if w > d {
                continue;
            }
            let x = M::var_power(ring, slot, 1);
            for m in &by_degree[(d - w) as usize] {
                let c = m.mul(&x);
                if !lms.iter().any(|l| l.divides(&c)) {
                    found.insert(c);
                }
            }
        }
        by_degree[d as usize] = found;
    }
    let by_degree = by_degree
        .into_iter()
        .map(|s| {
            let mut v: Vec<M> = s.into_iter().collect();
            v.sort_by(|a, b| a.cmp_in(b, ring));
            v
        })
        .collect();
    NormalSet { ring: ring.clone(), bound, by_degree }
}

/// Normal monomials of a basis. The basis must be complete or, for a
/// truncated basis, `bound` must not exceed its truncation degree.
pub fn normal_monomials<M: Monomial>(g: &GroebnerBasis<M>, bound: u32) -> Result<NormalSet<M>> {
    match g.truncation_degree() {
        Some(t) if bound > t => return Err(Error::TruncationExceeded { requested: bound, truncation: t }),
        None if !g.is_complete() => return Err(Error::NotGroebner("basis is not complete".into())),
        _ => {}
    }
    Ok(normal_monomials_of(g.ring(), &g.leading_monomials(), bound))
}

/// Outcome of comparing normal monomials of a base basis with those of its
/// homogenization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub holds: bool,
    pub base_counts: Vec<usize>,
    pub ext_counts: Vec<usize>,
    /// First degree where the sets differ, with a monomial present on one
    /// side only.
    pub first_mismatch: Option<(u32, String)>,
}

/// Checks that the extended normal monomials of degree `d` are exactly
/// `t^(d-e) w` for base normal monomials `w` of degree `e <= d`.
pub fn check_normal_correspondence<M: Monomial>(
    base: &NormalSet<M>,
    ext: &NormalSet<M>,
) -> Result<CorrespondenceReport> {
    if base.bound != ext.bound {
        return Err(Error::MismatchedNormalSets(format!("bounds {} and {}", base.bound, ext.bound)));
    }
    let h = Homogenizer::<M>::from_extended(&ext.ring)
        .map_err(|_| Error::MismatchedNormalSets("second set is not over an extended ring".into()))?;
    if !same_ring(h.base(), &base.ring) {
        return Err(Error::MismatchedNormalSets("rings do not correspond".into()));
    }
    let mut first_mismatch = None;
    for d in 0..=base.bound {
        let expected: BTreeSet<M> =
            (0..=d).flat_map(|e| base.degree(e).iter().map(move |w| w.lift(d - e, &ext.ring))).collect();
        let actual: BTreeSet<M> = ext.degree(d).iter().cloned().collect();
        if expected != actual {
            let odd = expected.symmetric_difference(&actual).next().expect("sets differ");
            first_mismatch = Some((d, odd.render(&ext.ring)));
            break;
        }
    }
    let base_counts = base.counts();
    let ext_counts = ext.counts();
    let mut cumulative = 0;
    let counts_ok = base_counts.iter().zip(&ext_counts).all(|(b, e)| {
        cumulative += b;
        cumulative == *e
    });
    Ok(CorrespondenceReport { holds: first_mismatch.is_none() && counts_ok, base_counts, ext_counts, first_mismatch })
}

/// The smallest degree `<= bound` at which the leading-monomial ideals of
/// two bases differ, or `None` when they agree in every degree up to
/// `bound`.
pub fn lm_ideal_difference<M: Monomial>(a: &GroebnerBasis<M>, b: &GroebnerBasis<M>, bound: u32) -> Result<Option<u32>> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    let na = normal_monomials_of(a.ring(), &a.leading_monomials(), bound);
    let nb = normal_monomials_of(b.ring(), &b.leading_monomials(), bound);
    Ok((0..=bound).find(|&d| na.degree(d) != nb.degree(d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gb::commutative::buchberger;
    use crate::monomial::{Exponents, Word};
    use crate::parse::parse_poly;
    use crate::poly::{ring_ref, CommPoly, FreePoly};
    use crate::ring::Ring;
    use crate::CentralHomogenizer;

    #[test]
    fn commutative_examples() {
        let base = ring_ref(Ring::commutative(&["x", "y"]).unwrap());
        let h = CentralHomogenizer::new(&base, "t").unwrap();
        let s: Vec<CommPoly> = ["y^2 + 1", "x + 2*y"].iter().map(|p| parse_poly(&base, p).unwrap()).collect();
        let g = buchberger(&s).unwrap();
        let n = normal_monomials(&g, 4).unwrap();
        assert_eq!(n.render_degree(0), vec!["1"]);
        assert_eq!(n.render_degree(1), vec!["y"]);
        assert!(n.degree(2).is_empty() && n.degree(4).is_empty());

        let gs = buchberger(&h.homogenize_set(g.elements()).unwrap()).unwrap();
        assert_eq!(gs.to_strings(), vec!["y^2 + t^2", "x + 2*y"]);
        let ns = normal_monomials(&gs, 3).unwrap();
        assert_eq!(ns.render_degree(1), vec!["t", "y"]);
        assert_eq!(ns.render_degree(2), vec!["t^2", "t*y"]);
        assert_eq!(ns.render_degree(3), vec!["t^3", "t^2*y"]);
        assert_eq!(ns.counts(), vec![1, 2, 2, 2]);

        let n3 = normal_monomials(&g, 3).unwrap();
        let rep = check_normal_correspondence(&n3, &ns).unwrap();
        assert!(rep.holds, "{rep:?}");
        assert_eq!(rep.base_counts, vec![1, 1, 0, 0]);
    }

    #[test]
    fn empty_basis_gives_everything() {
        let base = ring_ref(Ring::commutative(&["x", "y"]).unwrap());
        let n = normal_monomials_of::<Exponents>(&base, &[], 3);
        assert_eq!(n.counts(), vec![1, 2, 3, 4]);
        let f = ring_ref(Ring::free(&["X", "Y"]).unwrap());
        assert_eq!(normal_monomials_of::<Word>(&f, &[], 3).counts(), vec![1, 2, 4, 8]);
    }

    #[test]
    fn corrupted_extension_is_reported() {
        let base = ring_ref(Ring::free(&["X", "Y"]).unwrap());
        let h = crate::NoncentralHomogenizer::new(&base, "T").unwrap();
        let y2: FreePoly = parse_poly(&base, "Y^2 - X + 3").unwrap();
        let nb = normal_monomials_of(&base, &[y2.lm().unwrap().clone()], 4);
        let ext_lms: Vec<Word> = h.nc_homogenize_set(&[y2]).unwrap().iter().map(|g| g.lm().unwrap().clone()).collect();
        let ne = normal_monomials_of(h.ext(), &ext_lms, 4);
        assert!(check_normal_correspondence(&nb, &ne).unwrap().holds);

        let mut bad = ne.clone();
        bad.by_degree[2].pop();
        let rep = check_normal_correspondence(&nb, &bad).unwrap();
        assert!(!rep.holds);
        assert_eq!(rep.first_mismatch.unwrap().0, 2);

        let short = normal_monomials_of(h.ext(), &ext_lms, 3);
        assert!(check_normal_correspondence(&nb, &short).is_err());
    }

    #[test]
    fn truncation_is_enforced() {
        let base = ring_ref(Ring::free(&["X"]).unwrap());
        let g = GroebnerBasis::<Word>::new(&base, vec![parse_poly(&base, "X^2").unwrap()], true, true, Some(3));
        assert_eq!(normal_monomials(&g, 4), Err(Error::TruncationExceeded { requested: 4, truncation: 3 }));
    }
}
