//! Graded lexicographic orderings and their homogenizing extensions.
//!
//! * graded order: weighted degree first, ties broken lexicographically by
//!   variable precedence (commutative: exponent of the greatest variable
//!   first; free: leftmost differing letter).
//! * central extension: `t^a u < t^b v` iff `u < v` in the graded order, or
//!   `u = v` and `a < b`. Not graded.
//! * non-central extension: graded lex on words over the extended alphabet,
//!   `T` of weight 1 and below every base letter.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::{Exponents, Monomial, Word};
use crate::ring::{Ring, RingKind};

fn base_degree(e: &[u32], ring: &Ring) -> u32 {
    (0..ring.num_base_vars()).map(|i| e[i] * ring.weight(i)).sum()
}

/// Graded lex on the base slots of an exponent vector; the homogenizing
/// slot, if any, is ignored.
pub(crate) fn graded_exponents_cmp(a: &[u32], b: &[u32], ring: &Ring) -> Ordering {
    base_degree(a, ring).cmp(&base_degree(b, ring)).then_with(|| {
        for &s in ring.slots_by_precedence() {
            match a[s].cmp(&b[s]) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    })
}

pub(crate) fn central_ext_cmp(a: &[u32], b: &[u32], ring: &Ring) -> Ordering {
    let t = ring.num_base_vars();
    graded_exponents_cmp(a, b, ring).then_with(|| a[t].cmp(&b[t]))
}

pub(crate) fn graded_word_cmp(a: &[u32], b: &[u32], ring: &Ring) -> Ordering {
    let deg = |w: &[u32]| -> u32 { w.iter().map(|&l| ring.weight(l as usize)).sum() };
    deg(a).cmp(&deg(b)).then_with(|| {
        for (x, y) in a.iter().zip(b) {
            if x != y {
                return ring.letter_rank(*x as usize).cmp(&ring.letter_rank(*y as usize));
            }
        }
        a.len().cmp(&b.len())
    })
}

fn check<M: Monomial>(u: &M, v: &M, ring: &Ring) -> Result<()> {
    if u.is_valid(ring) && v.is_valid(ring) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// The graded lexicographic order on monomials of a ring without a
/// homogenizing variable.
pub fn compare_graded<M: Monomial>(u: &M, v: &M, ring: &Ring) -> Result<Ordering> {
    if ring.homog_var().is_some() {
        return Err(Error::RingMismatch);
    }
    check(u, v, ring)?;
    Ok(u.cmp_in(v, ring))
}

/// The central extension `t^a u` vs `t^b v` on `K[x, t]`.
pub fn compare_central_ext(u: &Exponents, v: &Exponents, ring: &Ring) -> Result<Ordering> {
    if ring.kind() != RingKind::Commutative {
        return Err(Error::KindMismatch { expected: "commutative" });
    }
    if ring.homog_var().is_none() {
        return Err(Error::NoHomogVar);
    }
    check(u, v, ring)?;
    Ok(central_ext_cmp(&u.0, &v.0, ring))
}

/// The non-central extension on words of `K<X, T>`.
pub fn compare_noncentral_ext(u: &Word, v: &Word, ring: &Ring) -> Result<Ordering> {
    if ring.kind() != RingKind::Free {
        return Err(Error::KindMismatch { expected: "free" });
    }
    if ring.homog_var().is_none() {
        return Err(Error::NoHomogVar);
    }
    check(u, v, ring)?;
    Ok(graded_word_cmp(&u.0, &v.0, ring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Ordering::*;

    // x is the lowest variable: precedence listed greatest first
    fn xy_ascending() -> Ring {
        Ring::commutative(&["x", "y"]).unwrap().with_precedence(&["y", "x"]).unwrap()
    }

    #[test]
    fn graded_commutative() {
        let r = xy_ascending();
        let x = Exponents(vec![1, 0]);
        let y = Exponents(vec![0, 1]);
        let xy = Exponents(vec![1, 1]);
        assert_eq!(compare_graded(&x, &y, &r).unwrap(), Less);
        assert_eq!(compare_graded(&xy, &y, &r).unwrap(), Greater);
        assert_eq!(compare_graded(&x, &x, &r).unwrap(), Equal);
        assert!(compare_graded(&Exponents(vec![1]), &x, &r).is_err());
    }

    #[test]
    fn graded_free_length_two_words_total() {
        let r = Ring::free(&["X", "Y"]).unwrap().with_precedence(&["Y", "X"]).unwrap();
        let xy = Word(vec![0, 1]);
        let yx = Word(vec![1, 0]);
        assert_eq!(compare_graded(&xy, &yx, &r).unwrap(), Less);
        // brute force: all length-2 words form a chain XX < XY < YX < YY
        let mut words: Vec<Word> = (0..4).map(|i| Word(vec![i / 2, i % 2])).collect();
        words.sort_by(|a, b| a.cmp_in(b, &r));
        assert_eq!(words, vec![Word(vec![0, 0]), xy, yx, Word(vec![1, 1])]);
    }

    #[test]
    fn central_extension_rule() {
        let ext = xy_ascending().with_homog_var("t").unwrap();
        let m = |x, y, t| Exponents(vec![x, y, t]);
        assert_eq!(compare_central_ext(&m(1, 0, 1), &m(1, 0, 2), &ext).unwrap(), Less);
        assert_eq!(compare_central_ext(&m(0, 0, 5), &m(1, 0, 0), &ext).unwrap(), Less);
        // not graded: t^2 x (degree 3) below t y (degree 2)
        assert_eq!(compare_central_ext(&m(1, 0, 2), &m(0, 1, 1), &ext).unwrap(), Less);
        assert_eq!(
            compare_central_ext(&m(1, 0, 0), &m(1, 0, 0), &Ring::commutative(&["x", "y"]).unwrap()),
            Err(Error::NoHomogVar)
        );
    }

    #[test]
    fn noncentral_extension_rule() {
        let ext = Ring::free(&["X", "Y"])
            .unwrap()
            .with_precedence(&["Y", "X"])
            .unwrap()
            .with_homog_var("T")
            .unwrap();
        let (x, y, t) = (0u32, 1u32, 2u32);
        let w = |l: &[u32]| Word(l.to_vec());
        assert_eq!(compare_noncentral_ext(&w(&[t]), &w(&[x]), &ext).unwrap(), Less);
        assert_eq!(compare_noncentral_ext(&w(&[t, x]), &w(&[x, t]), &ext).unwrap(), Less);
        assert_eq!(compare_noncentral_ext(&w(&[t, t, t]), &w(&[x, y]), &ext).unwrap(), Greater);
        assert!(compare_noncentral_ext(&w(&[x]), &w(&[x]), &Ring::free(&["X"]).unwrap()).is_err());
    }
}
