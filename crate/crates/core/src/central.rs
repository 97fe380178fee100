//! Central (de)homogenization between `K[x1..xn]` and `K[x1..xn, t]`.

use crate::error::{Error, Result};
use crate::homog::Homogenizer;
use crate::monomial::Exponents;
use crate::poly::CommPoly;

pub type CentralHomogenizer = Homogenizer<Exponents>;

impl CentralHomogenizer {
    /// `f*`: homogeneous of degree `deg f`, not divisible by `t`.
    pub fn central_homogenize(&self, f: &CommPoly) -> Result<CommPoly> {
        self.homogenize(f)
    }

    /// `F_*`: substitutes `t = 1`.
    pub fn central_dehomogenize(&self, f: &CommPoly) -> Result<CommPoly> {
        self.dehomogenize(f)
    }

    /// `S* = { f* : f in S }`. Nothing else is adjoined.
    pub fn homogenize_set(&self, set: &[CommPoly]) -> Result<Vec<CommPoly>> {
        if set.iter().any(|f| f.is_zero()) {
            return Err(Error::ZeroPolynomial);
        }
        self.homogenize_each(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::poly::ring_ref;
    use crate::ring::Ring;

    fn setup() -> CentralHomogenizer {
        CentralHomogenizer::new(&ring_ref(Ring::commutative(&["x", "y"]).unwrap()), "t").unwrap()
    }

    fn base(h: &CentralHomogenizer, s: &str) -> CommPoly {
        parse_poly(h.base(), s).unwrap()
    }

    fn ext(h: &CentralHomogenizer, s: &str) -> CommPoly {
        parse_poly(h.ext(), s).unwrap()
    }

    #[test]
    fn homogenize_examples() {
        let h = setup();
        let f = h.central_homogenize(&base(&h, "y^3 - x - y")).unwrap();
        assert_eq!(f.to_string(), "y^3 - t^2*x - t^2*y");
        assert!(f.is_homogeneous());
        assert_eq!(f.degree(), Some(3));
        assert_eq!(h.central_dehomogenize(&f).unwrap(), base(&h, "y^3 - x - y"));

        let g = h.central_homogenize(&base(&h, "x + 2*y")).unwrap();
        assert_eq!(g.to_string(), "x + 2*y");
        assert_eq!(h.central_homogenize(&base(&h, "y^2 + 1")).unwrap().to_string(), "y^2 + t^2");
        assert_eq!(h.central_homogenize(&CommPoly::zero(h.base())), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn dehomogenize_examples() {
        let h = setup();
        let d = |s: &str| h.central_dehomogenize(&ext(&h, s)).unwrap().to_string();
        assert_eq!(d("y^3 - t^2*x - t^2*y"), "y^3 - x - y");
        assert_eq!(d("t^2*x + 2*t^2*y"), "x + 2*y");
        assert_eq!(d("t^3 - t"), "0");
    }

    #[test]
    fn homogenize_set_examples() {
        let h = setup();
        let s = [base(&h, "y^3 - x - y"), base(&h, "y^2 + 1")];
        let shown: Vec<String> = h.homogenize_set(&s).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["y^3 - t^2*x - t^2*y", "y^2 + t^2"]);
        assert!(h.homogenize_set(&[]).unwrap().is_empty());
        assert_eq!(h.homogenize_set(&[base(&h, "x")]).unwrap(), vec![ext(&h, "x")]);
        assert_eq!(h.homogenize_set(&[base(&h, "x"), base(&h, "x")]).unwrap().len(), 1);
        assert_eq!(h.homogenize_set(&[CommPoly::zero(h.base())]), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn rejects_wrong_ring() {
        let h = setup();
        let f = ext(&h, "t*x");
        assert_eq!(h.central_homogenize(&f), Err(Error::RingMismatch));
        assert_eq!(h.central_dehomogenize(&base(&h, "x")), Err(Error::RingMismatch));
    }
}
