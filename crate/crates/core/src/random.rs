//! Seeded generator of small sparse polynomials for property testing.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::monomial::{Exponents, Monomial, Word};
use crate::poly::{ring_ref, CommPoly, FreePoly, Polynomial};
use crate::ring::{Ring, RingKind, RingRef};
use crate::scalar::Field;

/// Seed used when `HOMOGGB_SEED` is unset.
pub const DEFAULT_SEED: u64 = 20_240_917;

/// `HOMOGGB_SEED` if set and numeric, otherwise [`DEFAULT_SEED`].
pub fn seed_from_env() -> u64 {
    std::env::var("HOMOGGB_SEED").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEED)
}

const COMM_NAMES: [&str; 3] = ["x", "y", "z"];
const FREE_NAMES: [&str; 3] = ["X", "Y", "Z"];

/// Sparse polynomials with at most `max_terms` terms, coefficients in
/// `{-3..3} \ {0}` and degree at most `max_degree`.
pub struct Sampler {
    rng: ChaCha8Rng,
    pub max_terms: usize,
    pub max_degree: u32,
    /// Coefficient field of the rings this sampler creates.
    pub field: Field,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), max_terms: 4, max_degree: 3, field: Field::Rationals }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn coeff(&mut self) -> i64 {
        *[-3, -2, -1, 1, 2, 3].choose(&mut self.rng).expect("nonempty")
    }

    /// `K[x, y]` or `K[x, y, z]`.
    pub fn comm_ring(&mut self) -> RingRef {
        let n = self.rng.gen_range(2..=3);
        ring_ref(Ring::new(RingKind::Commutative, &COMM_NAMES[..n], self.field).expect("valid names"))
    }

    /// `K<X, Y>` or `K<X, Y, Z>`.
    pub fn free_ring(&mut self) -> RingRef {
        let n = self.rng.gen_range(2..=3);
        ring_ref(Ring::new(RingKind::Free, &FREE_NAMES[..n], self.field).expect("valid names"))
    }

    /// A uniformly random monomial of degree exactly `d` over unit-weight
    /// slots.
    fn monomial_of_degree<M: Monomial>(&mut self, ring: &RingRef, d: u32) -> M {
        let mut m = M::one(ring);
        for _ in 0..d {
            let s = self.rng.gen_range(0..ring.num_slots());
            m = m.mul(&M::var_power(ring, s, 1));
        }
        m
    }

    fn poly_with<M: Monomial>(&mut self, ring: &RingRef, degree: impl Fn(&mut ChaCha8Rng) -> u32) -> Polynomial<M> {
        loop {
            let n = self.rng.gen_range(1..=self.max_terms);
            let terms: Vec<(M, crate::Scalar)> = (0..n)
                .map(|_| {
                    let d = degree(&mut self.rng);
                    let m = self.monomial_of_degree(ring, d);
                    let c = self.coeff();
                    (m, ring.field().from_i64(c))
                })
                .collect();
            let p = Polynomial::try_from_terms(ring, terms).expect("valid terms");
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// Nonzero polynomial of degree at most `max_degree`.
    pub fn poly<M: Monomial>(&mut self, ring: &RingRef) -> Polynomial<M> {
        let top = self.max_degree;
        self.poly_with(ring, |r| r.gen_range(0..=top))
    }

    /// Nonzero polynomial of degree at most `max_degree` with no constant
    /// term.
    pub fn nonconstant_poly<M: Monomial>(&mut self, ring: &RingRef) -> Polynomial<M> {
        let top = self.max_degree.max(1);
        self.poly_with(ring, |r| r.gen_range(1..=top))
    }

    /// Nonzero homogeneous polynomial of degree `d`.
    pub fn homogeneous<M: Monomial>(&mut self, ring: &RingRef, d: u32) -> Polynomial<M> {
        self.poly_with(ring, |_| d)
    }

    /// One to `max_gens` generators without constant terms.
    pub fn generators<M: Monomial>(&mut self, ring: &RingRef, max_gens: usize) -> Vec<Polynomial<M>> {
        let k = self.rng.gen_range(1..=max_gens);
        (0..k).map(|_| self.nonconstant_poly(ring)).collect()
    }

    pub fn comm_system(&mut self, max_gens: usize) -> (RingRef, Vec<CommPoly>) {
        let r = self.comm_ring();
        let g = self.generators::<Exponents>(&r, max_gens);
        (r, g)
    }

    pub fn free_system(&mut self, max_gens: usize) -> (RingRef, Vec<FreePoly>) {
        let r = self.free_ring();
        let g = self.generators::<Word>(&r, max_gens);
        (r, g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        for _ in 0..20 {
            let (ra, sa) = a.comm_system(3);
            let (rb, sb) = b.comm_system(3);
            assert_eq!(ra.vars(), rb.vars());
            let pa: Vec<String> = sa.iter().map(|p| p.to_string()).collect();
            let pb: Vec<String> = sb.iter().map(|p| p.to_string()).collect();
            assert_eq!(pa, pb);
        }
    }

    #[test]
    fn respects_bounds() {
        let mut s = Sampler::new(1);
        for _ in 0..200 {
            let (_, sys) = s.free_system(3);
            for p in sys {
                assert!(p.len() <= 4 && p.degree().unwrap() <= 3 && p.degree().unwrap() >= 1);
            }
        }
    }
}
