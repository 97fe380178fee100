use std::cmp::Ordering;

use homoggb_core::gb::commutative::{buchberger, divide};
use homoggb_core::gb::free::{nc_complete, nc_divide, NcOptions};
use homoggb_core::normal::lm_ideal_difference;
use homoggb_core::parse::parse_poly;
use homoggb_core::random::Sampler;
use homoggb_core::*;
use proptest::prelude::*;

fn comm_ring() -> RingRef {
    ring_ref(Ring::commutative(&["x", "y", "z"]).unwrap())
}

fn free_ring() -> RingRef {
    ring_ref(Ring::free(&["X", "Y", "Z"]).unwrap())
}

fn exps(n: usize) -> impl Strategy<Value = Exponents> {
    prop::collection::vec(0u32..4, n).prop_map(Exponents)
}

fn word(letters: u32) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..letters, 0..6).prop_map(Word)
}

fn check_total<M: Monomial>(a: &M, b: &M, c: &M, ring: &Ring, graded: bool) -> std::result::Result<(), TestCaseError> {
    prop_assert_eq!(a.cmp_in(b, ring), b.cmp_in(a, ring).reverse());
    prop_assert_eq!(a.cmp_in(b, ring) == Ordering::Equal, a == b);
    if a.cmp_in(b, ring) == Ordering::Less && b.cmp_in(c, ring) == Ordering::Less {
        prop_assert_eq!(a.cmp_in(c, ring), Ordering::Less);
    }
    if graded && a.degree(ring) < b.degree(ring) {
        prop_assert_eq!(a.cmp_in(b, ring), Ordering::Less);
    }
    if a.cmp_in(b, ring) == Ordering::Less {
        prop_assert_eq!(a.mul(c).cmp_in(&b.mul(c), ring), Ordering::Less);
        prop_assert_eq!(c.mul(a).cmp_in(&c.mul(b), ring), Ordering::Less);
    }
    prop_assert!(M::one(ring).cmp_in(a, ring) != Ordering::Greater);
    Ok(())
}

fn strings<M: Monomial>(v: &[Polynomial<M>]) -> Vec<String> {
    v.iter().map(|p| p.to_string()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graded_order_is_a_monomial_order(a in exps(3), b in exps(3), c in exps(3)) {
        check_total(&a, &b, &c, &comm_ring(), true)?;
    }

    #[test]
    fn order_with_weights_and_precedence_is_a_monomial_order(a in exps(3), b in exps(3), c in exps(3)) {
        let r = Ring::commutative(&["x", "y", "z"]).unwrap().with_weights(&[2, 1, 3]).unwrap().with_precedence(&["z", "x", "y"]).unwrap();
        check_total(&a, &b, &c, &r, true)?;
    }

    #[test]
    fn central_extension_order_is_a_monomial_order(a in exps(4), b in exps(4), c in exps(4)) {
        let h = CentralHomogenizer::new(&comm_ring(), "t").unwrap();
        check_total(&a, &b, &c, h.ext(), false)?;
        let base = |e: &Exponents| e.strip_homog(h.ext()).degree(h.base());
        if base(&a) < base(&b) {
            prop_assert_eq!(a.cmp_in(&b, h.ext()), Ordering::Less);
        }
    }

    #[test]
    fn word_order_is_a_monomial_order(a in word(3), b in word(3), c in word(3)) {
        check_total(&a, &b, &c, &free_ring(), true)?;
    }

    #[test]
    fn extension_word_order_is_a_monomial_order(a in word(4), b in word(4), c in word(4)) {
        let h = NoncentralHomogenizer::new(&free_ring(), "T").unwrap();
        check_total(&a, &b, &c, h.ext(), true)?;
    }

    #[test]
    fn printed_polynomials_parse_back(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (rc, fc) = s.comm_system(3);
        for f in fc {
            prop_assert_eq!(parse_poly::<Exponents>(&rc, &f.to_string()).unwrap(), f);
        }
        let (rf, ff) = s.free_system(3);
        for f in ff {
            prop_assert_eq!(parse_poly::<Word>(&rf, &f.to_string()).unwrap(), f);
        }
    }

    #[test]
    fn division_recombines_and_leaves_irreducible_remainder(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (r, gens) = s.comm_system(3);
        let f: CommPoly = s.poly(&r);
        let d = divide(&f, &gens).unwrap();
        let mut acc = d.remainder.clone();
        for (q, g) in d.quotients.iter().zip(&gens) {
            acc = &acc + &(q * g);
        }
        prop_assert_eq!(acc, f);
        for (m, _) in d.remainder.terms() {
            prop_assert!(gens.iter().all(|g| !g.lm().unwrap().divides(m)));
        }

        let (r, gens) = s.free_system(3);
        let f: FreePoly = s.poly(&r);
        let d = nc_divide(&f, &gens).unwrap();
        prop_assert_eq!(d.recombine(&gens), f);
        for (m, _) in d.remainder.terms() {
            prop_assert!(gens.iter().all(|g| !g.lm().unwrap().divides(m)));
        }
    }

    #[test]
    fn reduced_basis_ignores_input_order(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (_, gens) = s.comm_system(3);
        let mut rev = gens.clone();
        rev.reverse();
        prop_assert_eq!(buchberger(&gens).unwrap().to_strings(), buchberger(&rev).unwrap().to_strings());
    }

    #[test]
    fn homogeneous_inputs_give_homogeneous_bases(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let r = s.comm_ring();
        let k = 1 + (seed % 3) as u32;
        let gens: Vec<CommPoly> = (0..k).map(|i| s.homogeneous(&r, 1 + i % 3)).collect();
        let g = buchberger(&gens).unwrap();
        prop_assert!(g.is_homogeneous(), "{:?}", g.to_strings());

        let r = s.free_ring();
        let gens: Vec<FreePoly> = (0..k).map(|i| s.homogeneous(&r, 1 + i % 3)).collect();
        let g = nc_complete(&gens, 5, NcOptions::default()).unwrap();
        prop_assert!(g.is_homogeneous(), "{:?} -> {:?}", strings(&gens), g.to_strings());
    }

    #[test]
    fn raising_the_bound_keeps_lower_degrees_of_homogeneous_ideals(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let r = s.free_ring();
        let k = 1 + (seed % 3) as u32;
        let gens: Vec<FreePoly> = (0..k).map(|i| s.homogeneous(&r, 2 + i % 2)).collect();
        let low = nc_complete(&gens, 4, NcOptions::default()).unwrap();
        let high = nc_complete(&gens, 6, NcOptions::default()).unwrap();
        prop_assert_eq!(lm_ideal_difference(&low, &high, 4).unwrap(), None);
    }

    #[test]
    fn dehomogenizing_inverts_homogenizing(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let (r, gens) = s.comm_system(3);
        let h = CentralHomogenizer::new(&r, "t").unwrap();
        for f in &gens {
            let up = h.central_homogenize(f).unwrap();
            prop_assert!(up.is_homogeneous());
            prop_assert_eq!(&h.central_dehomogenize(&up).unwrap(), f);
        }
        let (r, gens) = s.free_system(3);
        let h = NoncentralHomogenizer::new(&r, "T").unwrap();
        for f in &gens {
            let up = h.nc_homogenize(f).unwrap();
            prop_assert!(up.is_homogeneous());
            prop_assert_eq!(&h.nc_dehomogenize(&up).unwrap(), f);
        }
    }
}
