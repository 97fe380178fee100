//! Randomized, seeded checks of the structural facts relating an ideal, its
//! homogenization and their Groebner bases. Each check samples inputs from a
//! [`Sampler`] and reports how many samples failed.

use std::fmt::Write as _;

use crate::central::CentralHomogenizer;
use crate::gb::commutative::{buchberger, complete, is_groebner, reduce_basis};
use crate::gb::free::{is_nc_groebner, nc_complete, NcOptions};
use crate::gb::{normal_form, GroebnerBasis};
use crate::homog::Homogenizer;
use crate::monomial::{Exponents, Monomial, Word};
use crate::noncentral::NoncentralHomogenizer;
use crate::normal::{check_normal_correspondence, normal_monomials};
use crate::pipeline::{dehomogenize_gb_central, gb_via_central_homogenization, gb_via_nc_homogenization};
use crate::poly::{CommPoly, FreePoly, Polynomial};
use crate::random::Sampler;
use crate::ring::RingRef;

/// Result of running one property over a number of samples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub name: &'static str,
    pub samples: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.samples > 0
    }

    /// One log line: status, name, counts, first counterexample.
    pub fn line(&self) -> String {
        let mut s = format!(
            "{} {} ({} samples, {} failures)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.name,
            self.samples,
            self.failures
        );
        if let Some(f) = &self.first_failure {
            let _ = write!(s, ": {f}");
        }
        s
    }
}

type Check = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(name: &'static str, seed: u64, samples: usize, mut f: impl FnMut(&mut Sampler) -> Check) -> Outcome {
    let mut s = Sampler::new(seed);
    let mut failures = 0;
    let mut first_failure = None;
    for _ in 0..samples {
        if let Err(e) = f(&mut s) {
            failures += 1;
            first_failure.get_or_insert(e);
        }
    }
    Outcome { name, samples, failures, first_failure }
}

fn central_setup(s: &mut Sampler) -> CentralHomogenizer {
    let r = s.comm_ring();
    CentralHomogenizer::new(&r, "t").expect("fresh ring")
}

fn free_setup(s: &mut Sampler) -> NoncentralHomogenizer {
    let r = s.free_ring();
    NoncentralHomogenizer::new(&r, "T").expect("fresh ring")
}

/// Prime field for random free-algebra completions.
pub const COMPLETION_PRIME: u64 = 32_003;

fn completion_setup(s: &mut Sampler) -> NoncentralHomogenizer {
    s.field = crate::Field::prime(COMPLETION_PRIME).expect("prime");
    free_setup(s)
}

/// A small random polynomial (degree at most 1) used as a multiplier.
fn multiplier<M: Monomial>(s: &mut Sampler, ring: &RingRef) -> Polynomial<M> {
    let (d, t) = (s.max_degree, s.max_terms);
    s.max_degree = 1;
    s.max_terms = 2;
    let p = s.poly(ring);
    s.max_degree = d;
    s.max_terms = t;
    p
}

/// `sum a_i * g_i * b_i` with random small multipliers (`b_i = 1` when
/// `two_sided` is false).
fn combination<M: Monomial>(s: &mut Sampler, ring: &RingRef, gens: &[Polynomial<M>], two_sided: bool) -> Polynomial<M> {
    let mut acc = Polynomial::zero(ring);
    for g in gens {
        let a = multiplier(s, ring);
        let mut term = &a * g;
        if two_sided {
            term = &term * &multiplier(s, ring);
        }
        acc = &acc + &term;
    }
    acc
}

/// A homogeneous element built from the components of `p`:
/// `sum_d T^(D-d) p_d` (powers of the homogenizing variable on the left).
fn homogenize_components<M: Monomial>(h: &Homogenizer<M>, p: &Polynomial<M>) -> Polynomial<M> {
    let comps = p.homogeneous_components();
    let top = comps.first().map_or(0, |(d, _)| *d);
    comps.iter().fold(Polynomial::zero(h.ext()), |acc, (d, c)| &acc + &h.shift(c, top - d).expect("extended ring"))
}

fn random_component<M: Monomial>(s: &mut Sampler, p: &Polynomial<M>) -> Option<Polynomial<M>> {
    use rand::Rng;
    let comps = p.homogeneous_components();
    if comps.is_empty() {
        return None;
    }
    let i = s.rng().gen_range(0..comps.len());
    Some(comps[i].1.clone())
}

fn homog_degree_sample<M: Monomial>(s: &mut Sampler, ring: &RingRef) -> Polynomial<M> {
    use rand::Rng;
    let d = s.rng().gen_range(0..=4);
    s.homogeneous(ring, d)
}

/// Words of `f` have every homogenizing letter before every other letter.
fn t_letters_leftmost(f: &FreePoly) -> bool {
    let t = f.ring().homog_slot().expect("extended") as u32;
    f.terms().iter().all(|(w, _)| {
        let first_other = w.letters().iter().position(|&l| l != t).unwrap_or(w.len());
        w.letters()[first_other..].iter().all(|&l| l != t)
    })
}

/// The algebraic identities of dehomogenization, homogenization, leading
/// homogeneous parts and leading monomials, each over `samples` draws.
pub fn lemma_suite(seed: u64, samples: usize) -> Vec<Outcome> {
    let mut out = Vec::new();
    let mut k = 0u64;
    let mut next = || {
        k += 1;
        seed.wrapping_mul(1_000_003).wrapping_add(k)
    };

    out.push(run("central: dehomogenization is additive and multiplicative", next(), samples, |s| {
        let h = central_setup(s);
        let (f, g): (CommPoly, CommPoly) = (s.poly(h.ext()), s.poly(h.ext()));
        let d = |p: &CommPoly| h.dehomogenize(p).expect("ext");
        ensure(d(&(&f + &g)) == &d(&f) + &d(&g), || format!("sum fails for {f} and {g}"))?;
        ensure(d(&(&f * &g)) == &d(&f) * &d(&g), || format!("product fails for {f} and {g}"))
    }));

    out.push(run("central: dehomogenizing a homogenization gives back f", next(), samples, |s| {
        let h = central_setup(s);
        let f: CommPoly = s.poly(h.base());
        let back = h.dehomogenize(&h.homogenize(&f).expect("nonzero")).expect("ext");
        ensure(back == f, || format!("{f} came back as {back}"))
    }));

    out.push(run("central: homogeneous F equals t^(p-q) times its rehomogenized image", next(), samples, |s| {
        let h = central_setup(s);
        let f: CommPoly = homog_degree_sample(s, h.ext());
        let p = f.degree().expect("nonzero");
        let re = h.homogenize(&h.dehomogenize(&f).expect("ext")).map_err(|e| format!("{f}: {e}"))?;
        let q = re.degree().expect("nonzero");
        ensure(p >= q, || format!("{f}: degree {p} < {q}"))?;
        ensure(h.shift(&re, p - q).expect("ext") == f, || format!("{f} != t^{} * {re}", p - q))
    }));

    out.push(run("central: f* g* = t^k (fg)* with k the degree gap", next(), samples, |s| {
        let h = central_setup(s);
        let (f, g): (CommPoly, CommPoly) = (s.poly(h.base()), s.poly(h.base()));
        let lhs = &h.homogenize(&f).expect("nonzero") * &h.homogenize(&g).expect("nonzero");
        let fg = &f * &g;
        let (q, m) = (lhs.lh().expect("nonzero").degree().expect("nonzero"), fg.lh().expect("nonzero").degree().expect("nonzero"));
        let rhs = h.shift(&h.homogenize(&fg).expect("nonzero"), q - m).expect("ext");
        ensure(lhs == rhs, || format!("f = {f}, g = {g}"))
    }));

    out.push(run("central: (f+g)* = f* + t^(p-q) g* when the leading parts do not cancel", next(), samples, |s| {
        let h = central_setup(s);
        let (f, g): (CommPoly, CommPoly) = (s.poly(h.base()), s.poly(h.base()));
        let (f, g) = if f.degree() >= g.degree() { (f, g) } else { (g, f) };
        let (p, q) = (f.degree().expect("nonzero"), g.degree().expect("nonzero"));
        let sum = &f + &g;
        let combined = &h.homogenize(&f).expect("nonzero") + &h.shift(&h.homogenize(&g).expect("nonzero"), p - q).expect("ext");
        match sum.degree() {
            Some(e) if e == p => ensure(h.homogenize(&sum).expect("nonzero") == combined, || format!("f = {f}, g = {g}")),
            // the top parts cancelled: the identity holds up to the lost degree
            Some(e) => ensure(h.shift(&h.homogenize(&sum).expect("nonzero"), p - e).expect("ext") == combined, || {
                format!("cancelling f = {f}, g = {g}")
            }),
            None => ensure(combined.is_zero(), || format!("f = -g = {f} but {combined} != 0")),
        }
    }));

    out.push(run("central: homogeneous elements of <I*> are t^r f* with f in I", next(), samples, |s| {
        let h = central_setup(s);
        let gens: Vec<CommPoly> = s.generators(h.base(), 3);
        let g = buchberger(&gens).map_err(|e| e.to_string())?;
        let mut big = Polynomial::zero(h.ext());
        for _ in 0..2 {
            let f = combination(s, h.base(), &gens, false);
            if f.is_zero() {
                continue;
            }
            let a: CommPoly = multiplier(s, h.ext());
            big = &big + &(&a * &h.homogenize(&f).expect("nonzero"));
        }
        let Some(comp) = random_component(s, &big) else { return Ok(()) };
        let f = h.dehomogenize(&comp).expect("ext");
        ensure(normal_form(&f, g.elements()).is_zero(), || format!("{f} is not in the ideal"))?;
        let fs = h.homogenize(&f).map_err(|e| e.to_string())?;
        let r = comp.degree().expect("nonzero") - fs.degree().expect("nonzero");
        ensure(h.shift(&fs, r).expect("ext") == comp, || format!("{comp} is not t^{r} * {fs}"))
    }));

    out.push(run("central: every h in J_* has a homogeneous preimage in J", next(), samples, |s| {
        let h = central_setup(s);
        let gens: Vec<CommPoly> = (0..2).map(|_| homog_degree_sample(s, h.ext())).collect();
        let gb = buchberger(&gens).map_err(|e| e.to_string())?;
        let p = combination(s, h.ext(), &gens, false);
        let target = h.dehomogenize(&p).expect("ext");
        if target.is_zero() {
            return Ok(());
        }
        let pre = homogenize_components(&h, &p);
        ensure(pre.is_homogeneous(), || format!("{pre} is not homogeneous"))?;
        ensure(normal_form(&pre, gb.elements()).is_zero(), || format!("{pre} is not in J"))?;
        ensure(h.dehomogenize(&pre).expect("ext") == target, || format!("{pre} does not map to {target}"))
    }));

    out.push(run("central: LM(f) = LM(LH(f))", next(), samples, |s| {
        let h = central_setup(s);
        let f: CommPoly = s.poly(h.base());
        let lh = f.lh().expect("nonzero");
        ensure(f.lm() == lh.lm(), || format!("f = {f}"))
    }));

    out.push(run("central: LM(f*) = LM(f)", next(), samples, |s| {
        let h = central_setup(s);
        let f: CommPoly = s.poly(h.base());
        let fs = h.homogenize(&f).expect("nonzero");
        ensure(fs.lm() == Some(&f.lm().expect("nonzero").lift(0, h.ext())), || format!("f = {f}"))
    }));

    out.push(run("central: LM(F_*) = LM(F)_* for homogeneous F", next(), samples, |s| {
        let h = central_setup(s);
        let f: CommPoly = homog_degree_sample(s, h.ext());
        let d = h.dehomogenize(&f).expect("ext");
        ensure(d.lm() == Some(&f.lm().expect("nonzero").strip_homog(h.ext())), || format!("F = {f}"))
    }));

    out.push(run("free: deleting T is additive and multiplicative", next(), samples, |s| {
        let h = free_setup(s);
        let (f, g): (FreePoly, FreePoly) = (s.poly(h.ext()), s.poly(h.ext()));
        let d = |p: &FreePoly| h.dehomogenize(p).expect("ext");
        ensure(d(&(&f + &g)) == &d(&f) + &d(&g), || format!("sum fails for {f} and {g}"))?;
        ensure(d(&(&f * &g)) == &d(&f) * &d(&g), || format!("product fails for {f} and {g}"))
    }));

    out.push(run("free: deleting T from f~ gives back f", next(), samples, |s| {
        let h = free_setup(s);
        let f: FreePoly = s.poly(h.base());
        let back = h.dehomogenize(&h.homogenize(&f).expect("nonzero")).expect("ext");
        ensure(back == f, || format!("{f} came back as {back}"))
    }));

    out.push(run("free: F = L + H with L in the commutator ideal and H = T^r (F~)^", next(), samples, |s| {
        let h = free_setup(s);
        let f: FreePoly = homog_degree_sample(s, h.ext());
        let d = h.decompose_mod_commutators(&f).map_err(|e| e.to_string())?;
        let comms = h.commutators();
        let l = d.trace.iter().fold(Polynomial::zero(h.ext()), |acc, st| {
            &acc + &comms[st.index].mul_monomials(&st.coeff, &st.left, &st.right)
        });
        ensure(l == d.l, || format!("{f}: trace does not rebuild L"))?;
        ensure(&d.l + &d.h == f, || format!("{f} != L + H"))?;
        ensure(t_letters_leftmost(&d.h), || format!("{f}: H = {} has an inner T", d.h))?;
        let mut rev = comms.clone();
        rev.reverse();
        let other = crate::gb::free::nc_divide(&f, &rev).expect("nonzero divisors").remainder;
        ensure(other == d.h, || format!("{f}: H depends on division order"))?;
        if d.h.is_zero() {
            return ensure(h.dehomogenize(&f).expect("ext").is_zero(), || format!("{f}: H = 0 but F~ != 0"));
        }
        let hd = h.dehomogenize(&d.h).expect("ext");
        ensure(h.shift(&h.homogenize(&hd).expect("nonzero"), d.r).expect("ext") == d.h, || {
            format!("{f}: T^{} (H~)^ != H", d.r)
        })?;
        let fd = h.dehomogenize(&f).expect("ext");
        ensure(&d.l + &h.shift(&h.homogenize(&fd).expect("nonzero"), d.r).expect("ext") == f, || {
            format!("{f} != L + T^{} (F~)^", d.r)
        })
    }));

    out.push(run("free: homogeneous elements of <I~> are L + T^r f~ with f in I", next(), samples, |s| {
        let h = free_setup(s);
        let gens: Vec<FreePoly> = s.generators(h.base(), 2);
        let mut big = Polynomial::zero(h.ext());
        let mut down = Polynomial::zero(h.base());
        for _ in 0..2 {
            let f = combination(s, h.base(), &gens, true);
            if f.is_zero() {
                continue;
            }
            let (a, b): (FreePoly, FreePoly) = (multiplier(s, h.ext()), multiplier(s, h.ext()));
            let term = &(&a * &h.homogenize(&f).expect("nonzero")) * &b;
            big = &big + &term;
            down = &down + &(&(&h.dehomogenize(&a).expect("ext") * &f) * &h.dehomogenize(&b).expect("ext"));
        }
        if big.is_zero() {
            return Ok(());
        }
        // components shifted to a common degree stay in the graded ideal
        let top = homogenize_components(&h, &big);
        let f = h.dehomogenize(&top).expect("ext");
        ensure(f == down, || format!("{top} does not dehomogenize to the explicit combination"))?;
        let d = h.decompose_mod_commutators(&top).map_err(|e| e.to_string())?;
        if f.is_zero() {
            return ensure(d.h.is_zero(), || format!("{top}: F~ = 0 but H != 0"));
        }
        ensure(&d.l + &h.shift(&h.homogenize(&f).expect("nonzero"), d.r).expect("ext") == top, || {
            format!("{top} != L + T^{} f~", d.r)
        })
    }));

    out.push(run("free: every h in J~ has a homogeneous preimage T^r (h)^ + L in J", next(), samples, |s| {
        let h = free_setup(s);
        let mut gens: Vec<FreePoly> = (0..2).map(|_| homog_degree_sample(s, h.ext())).collect();
        gens.extend(h.commutators());
        let p = combination(s, h.ext(), &gens, true);
        let target = h.dehomogenize(&p).expect("ext");
        if target.is_zero() {
            return Ok(());
        }
        let f = homogenize_components(&h, &p);
        let d = h.decompose_mod_commutators(&f).map_err(|e| e.to_string())?;
        ensure(d.h.is_homogeneous() && t_letters_leftmost(&d.h), || format!("H = {} has the wrong shape", d.h))?;
        ensure(h.dehomogenize(&d.h).expect("ext") == target, || format!("H = {} does not map to {target}", d.h))?;
        ensure(h.shift(&h.homogenize(&target).expect("nonzero"), d.r).expect("ext") == d.h, || {
            format!("H = {} is not T^{} times {target}~", d.h, d.r)
        })
    }));

    out.push(run("free: LM(f) = LM(LH(f)) in both algebras", next(), samples, |s| {
        let h = free_setup(s);
        let f: FreePoly = s.poly(h.base());
        let g: FreePoly = s.poly(h.ext());
        ensure(f.lm() == f.lh().expect("nonzero").lm(), || format!("f = {f}"))?;
        ensure(g.lm() == g.lh().expect("nonzero").lm(), || format!("F = {g}"))
    }));

    out.push(run("free: LM(f~) = LM(f)", next(), samples, |s| {
        let h = free_setup(s);
        let f: FreePoly = s.poly(h.base());
        let ft = h.homogenize(&f).expect("nonzero");
        ensure(ft.lm() == Some(&f.lm().expect("nonzero").lift(0, h.ext())), || format!("f = {f}"))
    }));

    out.push(run("free: LM(F) = T^r w and LM(F~) = w when no Xi*T divides LM(F)", next(), samples, |s| {
        let h = free_setup(s);
        let raw: FreePoly = homog_degree_sample(s, h.ext());
        let t = h.ext().homog_slot().expect("extended") as u32;
        let has_xt = |w: &Word| w.letters().windows(2).any(|p| p[0] != t && p[1] == t);
        let f = if has_xt(raw.lm().expect("nonzero")) {
            h.decompose_mod_commutators(&raw).map_err(|e| e.to_string())?.h
        } else {
            raw
        };
        let Some(lm) = f.lm() else { return Ok(()) };
        ensure(!has_xt(lm), || format!("{f} still has an Xi*T leading word"))?;
        let r = lm.letters().iter().take_while(|&&l| l == t).count();
        let w = lm.slice(r, lm.len());
        ensure(w.letters().iter().all(|&l| l != t), || format!("LM({f}) is not T^r w"))?;
        let d = h.dehomogenize(&f).expect("ext");
        let base_w = w.strip_homog(h.ext());
        ensure(d.lm() == Some(&base_w), || format!("LM({f}~) != {}", base_w.render(h.base())))?;
        ensure(lm.strip_homog(h.ext()) == base_w, || format!("LM({f})~ mismatch"))
    }));

    out
}

/// Sizes for [`theorem_suite`].
#[derive(Debug, Clone, Copy)]
pub struct TheoremSizes {
    pub commutative_ideals: usize,
    pub non_bases: usize,
    pub free_ideals: usize,
    pub free_degree: u32,
    pub correspondence_ideals: usize,
    pub correspondence_degree: u32,
}

impl Default for TheoremSizes {
    fn default() -> Self {
        TheoremSizes {
            commutative_ideals: 100,
            non_bases: 20,
            free_ideals: 50,
            free_degree: 6,
            correspondence_ideals: 20,
            correspondence_degree: 6,
        }
    }
}

fn is_gb_comm(g: &[CommPoly]) -> std::result::Result<bool, String> {
    is_groebner(g).map(|c| c.is_groebner).map_err(|e| e.to_string())
}

/// Draws a system whose reduced basis is not the unit ideal.
fn proper_system(s: &mut Sampler) -> (CentralHomogenizer, Vec<CommPoly>, GroebnerBasis<Exponents>) {
    loop {
        let h = central_setup(s);
        let gens: Vec<CommPoly> = s.generators(h.base(), 3);
        let g = buchberger(&gens).expect("nonzero generators");
        if !g.is_unit_ideal() {
            return (h, gens, g);
        }
    }
}

/// Theorem-level transfers between an ideal and its homogenization, over
/// random ideals.
pub fn theorem_suite(seed: u64, sizes: TheoremSizes) -> Vec<Outcome> {
    let mut out = Vec::new();
    let mut k = 0u64;
    let mut next = || {
        k += 1;
        seed.wrapping_mul(2_000_003).wrapping_add(k)
    };

    // The reduced-equivalence property below reruns this seed so that both
    // see the same ideals.
    let shared = next();
    out.push(run("central: G is a basis iff G* is a basis (bases)", shared, sizes.commutative_ideals, |s| {
        let (h, _, g) = proper_system(s);
        ensure(is_gb_comm(g.elements())?, || "reduced basis fails its own check".into())?;
        let up = h.homogenize_set(g.elements()).map_err(|e| e.to_string())?;
        ensure(is_gb_comm(&up)?, || {
            let shown: Vec<String> = up.iter().map(|p| p.to_string()).collect();
            format!("homogenized basis {shown:?} fails")
        })
    }));

    out.push(run("central: G is a basis iff G* is a basis (non-bases)", next(), sizes.non_bases, |s| loop {
        let h = central_setup(s);
        let gens: Vec<CommPoly> = s.generators(h.base(), 3);
        if is_gb_comm(&gens)? {
            continue;
        }
        let up = h.homogenize_set(&gens).map_err(|e| e.to_string())?;
        return ensure(!is_gb_comm(&up)?, || {
            let shown: Vec<String> = gens.iter().map(|p| p.to_string()).collect();
            format!("{shown:?} fails but its homogenization passes")
        });
    }));

    out.push(run("central: reduced dehomogenized basis of <S*> equals reduced basis of <S>", shared, sizes.commutative_ideals, |s| {
        let (h, gens, direct) = proper_system(s);
        let step1 = buchberger(&h.homogenize_set(&gens).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let down = dehomogenize_gb_central(&step1, &h).map_err(|e| e.to_string())?;
        ensure(is_gb_comm(down.elements())?, || "dehomogenized basis fails its check".into())?;
        let via = reduce_basis(&down).map_err(|e| e.to_string())?;
        ensure(via.to_strings() == direct.to_strings(), || format!("{:?} != {:?}", via.to_strings(), direct.to_strings()))
    }));

    out.push(run("central: generators kept by an unreduced completion of S* survive dehomogenization", next(), sizes.commutative_ideals, |s| {
        let h = central_setup(s);
        let gens: Vec<CommPoly> = s.generators(h.base(), 3);
        let star = h.homogenize_set(&gens).map_err(|e| e.to_string())?;
        let raw = complete(&star).map_err(|e| e.to_string())?;
        if raw.is_unit_ideal() {
            return Ok(());
        }
        let down: Vec<CommPoly> = raw.elements().iter().map(|g| h.dehomogenize(g).expect("ext").monic()).collect();
        for (f, fs) in gens.iter().zip(&star) {
            if raw.elements().contains(&fs.monic()) {
                ensure(down.contains(&f.monic()), || format!("{f} kept upstairs but lost downstairs"))?;
            } else {
                let lm = f.lm().expect("nonzero");
                ensure(down.iter().any(|g| g.lm().expect("nonzero").divides(lm)), || format!("LM of {f} not covered"))?;
            }
        }
        Ok(())
    }));

    let d = sizes.free_degree;
    out.push(run("free: G passes the overlap check iff G~ does, at the degree bound (bases)", next(), sizes.free_ideals, |s| {
        let h = completion_setup(s);
        let gens: Vec<FreePoly> = s.generators(h.base(), 3);
        let g = nc_complete(&gens, d, NcOptions::default()).map_err(|e| e.to_string())?;
        let base_ok = is_nc_groebner(g.elements(), d).map_err(|e| e.to_string())?.is_groebner;
        let up = h.nc_homogenize_set(g.elements()).map_err(|e| e.to_string())?;
        let ext_ok = is_nc_groebner(&up, d).map_err(|e| e.to_string())?.is_groebner;
        ensure(base_ok && ext_ok, || format!("base {base_ok}, homogenized {ext_ok} for {:?}", g.to_strings()))
    }));

    out.push(run("free: G passes the overlap check iff G~ does, at the degree bound (non-bases)", next(), sizes.non_bases, |s| loop {
        let h = completion_setup(s);
        let gens: Vec<FreePoly> = s.generators(h.base(), 3);
        if is_nc_groebner(&gens, d).map_err(|e| e.to_string())?.is_groebner {
            continue;
        }
        let up = h.nc_homogenize_set(&gens).map_err(|e| e.to_string())?;
        let ext_ok = is_nc_groebner(&up, d).map_err(|e| e.to_string())?.is_groebner;
        return ensure(!ext_ok, || {
            let shown: Vec<String> = gens.iter().map(|p| p.to_string()).collect();
            format!("{shown:?} fails but its homogenization passes")
        });
    }));

    out.push(run("free: three-step procedure outputs pass their checks when step 1 finishes below the bound", next(), sizes.free_ideals, |s| {
        let h = completion_setup(s);
        let gens: Vec<FreePoly> = s.generators(h.base(), 3);
        let p = gb_via_nc_homogenization(&gens, &h, d).map_err(|e| e.to_string())?;
        ensure(p.step1_verified, || "step 1 fails".into())?;
        ensure(p.step1.is_homogeneous() && p.step3.is_homogeneous(), || "inhomogeneous output".into())?;
        // A truncated step 1 misses elements of I whose lift lies above the bound.
        if !p.step1.is_complete() {
            return Ok(());
        }
        ensure(p.step2_verified && p.step3_verified, || {
            let shown: Vec<String> = gens.iter().map(|p| p.to_string()).collect();
            format!("{shown:?}: step 2 {} step 3 {}", p.step2_verified, p.step3_verified)
        })
    }));

    let cd = sizes.correspondence_degree;
    out.push(run("central: normal monomials of <I*> are t^r times those of I", next(), sizes.correspondence_ideals, |s| {
        let h = central_setup(s);
        let gens: Vec<CommPoly> = s.generators(h.base(), 3);
        let p = gb_via_central_homogenization(&gens, &h).map_err(|e| e.to_string())?;
        let nb = normal_monomials(&p.step2, cd).map_err(|e| e.to_string())?;
        let ne = normal_monomials(&p.step3, cd).map_err(|e| e.to_string())?;
        let rep = check_normal_correspondence(&nb, &ne).map_err(|e| e.to_string())?;
        ensure(rep.holds, || format!("{rep:?}"))
    }));

    out.push(run("free: normal words of <I~> are T^r times those of I", next(), sizes.correspondence_ideals, |s| {
        let h = completion_setup(s);
        let gens: Vec<FreePoly> = s.generators(h.base(), 3);
        let p = gb_via_nc_homogenization(&gens, &h, cd).map_err(|e| e.to_string())?;
        let nb = normal_monomials(&p.step2, cd).map_err(|e| e.to_string())?;
        let ne = normal_monomials(&p.step3, cd).map_err(|e| e.to_string())?;
        let rep = check_normal_correspondence(&nb, &ne).map_err(|e| e.to_string())?;
        ensure(rep.holds, || format!("{rep:?}"))
    }));

    out
}
