//! Non-central (de)homogenization between `K<X1..Xn>` and `K<X1..Xn, T>`.

use crate::error::{Error, Result};
use crate::gb::free::nc_divide;
use crate::gb::Step;
use crate::homog::Homogenizer;
use crate::monomial::{Monomial, Word};
use crate::poly::{FreePoly, Polynomial};

pub type NoncentralHomogenizer = Homogenizer<Word>;

/// `F = l + h` with `l` in the commutator ideal (`trace` expresses it) and
/// `h = T^r * (F~)^` free of any `Xi*T` subword.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub l: FreePoly,
    pub h: FreePoly,
    pub r: u32,
    pub trace: Vec<Step<Word>>,
}

impl NoncentralHomogenizer {
    /// `f~ = f_p + T f_{p-1} + ... + T^s f_{p-s}`, powers of `T` on the left.
    pub fn nc_homogenize(&self, f: &FreePoly) -> Result<FreePoly> {
        self.homogenize(f)
    }

    /// Deletes every `T`.
    pub fn nc_dehomogenize(&self, f: &FreePoly) -> Result<FreePoly> {
        self.dehomogenize(f)
    }

    /// `Xi*T - T*Xi` for every base variable, in declaration order.
    pub fn commutators(&self) -> Vec<FreePoly> {
        let ext = self.ext();
        let t = Word(vec![ext.homog_slot().expect("extended") as u32]);
        let one = ext.field().one();
        (0..ext.num_base_vars())
            .map(|i| {
                let x = Word(vec![i as u32]);
                Polynomial::from_terms(ext, [(x.mul(&t), one.clone()), (t.mul(&x), -&one)])
            })
            .collect()
    }

    /// `{ f~ : f in S }` followed by the commutators, duplicates removed.
    pub fn nc_homogenize_set(&self, set: &[FreePoly]) -> Result<Vec<FreePoly>> {
        if set.iter().any(|f| f.is_zero()) {
            return Err(Error::ZeroPolynomial);
        }
        let mut out = self.homogenize_each(set)?;
        for c in self.commutators() {
            if !out.contains(&c) {
                out.push(c);
            }
        }
        Ok(out)
    }

    /// Divides a homogeneous `F` by the commutators, moving every `T` to the
    /// front of its word.
    pub fn decompose_mod_commutators(&self, f: &FreePoly) -> Result<Decomposition> {
        if !f.is_homogeneous() {
            return Err(Error::NotHomogeneous(f.to_string()));
        }
        let d = nc_divide(f, &self.commutators())?;
        let h = d.remainder;
        let r = match (h.degree(), self.dehomogenize(&h)?.degree()) {
            (Some(a), Some(b)) => a - b,
            _ => 0,
        };
        Ok(Decomposition { l: f - &h, h, r, trace: d.trace })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::ring_ref;
    use crate::ring::Ring;

    fn setup() -> NoncentralHomogenizer {
        NoncentralHomogenizer::new(&ring_ref(Ring::free(&["X", "Y"]).unwrap()), "T").unwrap()
    }

    fn strs(v: &[FreePoly]) -> Vec<String> {
        v.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn homogenize_examples() {
        let h = setup();
        let b = |s: &str| parse_poly::<Word>(h.base(), s).unwrap();
        let f = h.nc_homogenize(&b("Y*Y*Y - X*Y - X - Y")).unwrap();
        assert_eq!(f.to_string(), "Y^3 - T*X*Y - T^2*X - T^2*Y");
        assert!(f.is_homogeneous());
        assert_eq!(h.nc_dehomogenize(&f).unwrap(), b("Y^3 - X*Y - X - Y"));
        assert_eq!(h.nc_homogenize(&b("Y^2 - X + 3")).unwrap().to_string(), "Y^2 - T*X + 3*T^2");
        assert_eq!(h.nc_homogenize(&b("X*Y - Y*X")).unwrap(), h.embed(&b("X*Y - Y*X")).unwrap());
    }

    #[test]
    fn dehomogenize_examples() {
        let h = setup();
        let e = |s: &str| h.nc_dehomogenize(&parse_poly(h.ext(), s).unwrap()).unwrap().to_string();
        assert_eq!(e("X*T - T*X"), "0");
        assert_eq!(e("T*X*T*Y"), "X*Y");
    }

    #[test]
    fn homogenize_set_examples() {
        let h = setup();
        let b = |s: &str| parse_poly::<Word>(h.base(), s).unwrap();
        let s = h.nc_homogenize_set(&[b("Y^3 - X*Y - X - Y"), b("Y^2 - X + 3")]).unwrap();
        assert_eq!(
            strs(&s),
            vec!["Y^3 - T*X*Y - T^2*X - T^2*Y", "Y^2 - T*X + 3*T^2", "X*T - T*X", "Y*T - T*Y"]
        );
        assert_eq!(strs(&h.nc_homogenize_set(&[b("X")]).unwrap()), vec!["X", "X*T - T*X", "Y*T - T*Y"]);

        let one = NoncentralHomogenizer::new(&ring_ref(Ring::free(&["X"]).unwrap()), "T").unwrap();
        assert_eq!(strs(&one.nc_homogenize_set(&[]).unwrap()), vec!["X*T - T*X"]);
    }

    #[test]
    fn decomposition_examples() {
        let h = setup();
        let e = |s: &str| parse_poly::<Word>(h.ext(), s).unwrap();
        let d = h.decompose_mod_commutators(&e("X*T")).unwrap();
        assert_eq!((d.l.to_string(), d.h.to_string(), d.r), ("X*T - T*X".into(), "T*X".into(), 1));

        let d = h.decompose_mod_commutators(&e("T*X")).unwrap();
        assert!(d.l.is_zero());
        assert_eq!((d.h.to_string(), d.r), ("T*X".into(), 1));

        let d = h.decompose_mod_commutators(&e("X*T*Y - T*X*Y")).unwrap();
        assert!(d.h.is_zero());
        assert_eq!(d.l, e("X*T*Y - T*X*Y"));
        assert_eq!(d.trace.len(), 1);
        assert_eq!(d.trace[0].right, Word(vec![1]));

        assert!(matches!(h.decompose_mod_commutators(&e("X*T - X")), Err(Error::NotHomogeneous(_))));
    }

    #[test]
    fn commutators_have_expected_leading_words() {
        let h = setup();
        for (i, c) in h.commutators().iter().enumerate() {
            assert_eq!(c.lm().unwrap(), &Word(vec![i as u32, 2]));
            assert_eq!(c.degree(), Some(2));
        }
    }
}
