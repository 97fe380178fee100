//! The two monomial kinds: commutative exponent vectors and free-algebra words.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::hash::Hash;

use crate::order;
use crate::ring::{Ring, RingKind};

/// Operations shared by both monomial kinds. Every method that needs
/// variable data takes the ring descriptor explicitly; monomials themselves
/// are plain index data.
pub trait Monomial: Clone + Eq + Hash + Ord + Debug + Send + Sync + 'static {
    const KIND: RingKind;

    fn one(ring: &Ring) -> Self;
    fn is_one(&self) -> bool;
    /// The monomial consisting of `slot` raised to `k`.
    fn var_power(ring: &Ring, slot: usize, k: u32) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn degree(&self, ring: &Ring) -> u32;
    fn is_valid(&self, ring: &Ring) -> bool;

    /// The ring's monomial ordering.
    fn cmp_in(&self, other: &Self, ring: &Ring) -> Ordering;

    /// Multiplicity of the homogenizing variable.
    fn homog_power(&self, ring: &Ring) -> u32;
    /// Maps a base-ring monomial `w` to `t^r w` (resp. `T^r w`) in `ext`.
    fn lift(&self, r: u32, ext: &Ring) -> Self;
    /// Deletes the homogenizing variable, giving a base-ring monomial.
    fn strip_homog(&self, ext: &Ring) -> Self;

    /// Divisibility in the ring: componentwise for exponent vectors, subword
    /// occurrence for words.
    fn divides(&self, other: &Self) -> bool;
    /// `(u, v)` with `u * self * v == other`, taking the leftmost occurrence
    /// for words; `v` is the identity for exponent vectors.
    fn cofactors(&self, other: &Self) -> Option<(Self, Self)>;

    fn render(&self, ring: &Ring) -> String;
}

/// Exponent vector of a commutative monomial; one entry per ring slot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponents(pub Vec<u32>);

/// Word over the ring's letters; entries are variable slots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u32>);

impl Exponents {
    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Exponents) -> Exponents {
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Exponents) -> Option<Exponents> {
        if !self.divides(other) {
            return None;
        }
        Some(Exponents(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn coprime(&self, other: &Exponents) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl Monomial for Exponents {
    const KIND: RingKind = RingKind::Commutative;

    fn one(ring: &Ring) -> Self {
        Exponents(vec![0; ring.num_slots()])
    }

    fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn var_power(ring: &Ring, slot: usize, k: u32) -> Self {
        let mut e = vec![0; ring.num_slots()];
        e[slot] = k;
        Exponents(e)
    }

    fn mul(&self, other: &Self) -> Self {
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn degree(&self, ring: &Ring) -> u32 {
        self.0.iter().enumerate().map(|(i, e)| e * ring.weight(i)).sum()
    }

    fn is_valid(&self, ring: &Ring) -> bool {
        ring.kind() == RingKind::Commutative && self.0.len() == ring.num_slots()
    }

    fn cmp_in(&self, other: &Self, ring: &Ring) -> Ordering {
        if ring.homog_var().is_some() {
            order::central_ext_cmp(&self.0, &other.0, ring)
        } else {
            order::graded_exponents_cmp(&self.0, &other.0, ring)
        }
    }

    fn homog_power(&self, ring: &Ring) -> u32 {
        ring.homog_slot().map_or(0, |s| self.0[s])
    }

    fn lift(&self, r: u32, ext: &Ring) -> Self {
        debug_assert_eq!(self.0.len() + 1, ext.num_slots());
        let mut e = self.0.clone();
        e.push(r);
        Exponents(e)
    }

    fn strip_homog(&self, ext: &Ring) -> Self {
        debug_assert_eq!(self.0.len(), ext.num_slots());
        let n = ext.num_base_vars();
        Exponents(self.0[..n].to_vec())
    }

    fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn cofactors(&self, other: &Self) -> Option<(Self, Self)> {
        self.quotient_of(other).map(|q| {
            let one = Exponents(vec![0; q.0.len()]);
            (q, one)
        })
    }

    /// Homogenizing variable first, then base variables in declaration order.
    fn render(&self, ring: &Ring) -> String {
        let mut slots: Vec<usize> = Vec::with_capacity(self.0.len());
        slots.extend(ring.homog_slot());
        slots.extend(0..ring.num_base_vars());
        let factors: Vec<String> = slots
            .into_iter()
            .filter(|&s| self.0[s] > 0)
            .map(|s| power(ring.var_name(s), self.0[s]))
            .collect();
        if factors.is_empty() {
            "1".into()
        } else {
            factors.join("*")
        }
    }
}

fn power(name: &str, k: u32) -> String {
    if k == 1 {
        name.to_string()
    } else {
        format!("{name}^{k}")
    }
}

impl Word {
    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Positions `i` with `self[i..i+sub.len()] == sub`.
    pub fn occurrences<'a>(&'a self, sub: &'a Word) -> impl Iterator<Item = usize> + 'a {
        let n = sub.0.len();
        let hi = if n <= self.0.len() { self.0.len() - n + 1 } else { 0 };
        (0..hi).filter(move |&i| self.0[i..i + n] == sub.0[..])
    }

    /// First occurrence of `sub`, if any.
    pub fn find(&self, sub: &Word) -> Option<usize> {
        self.occurrences(sub).next()
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }
}

impl Monomial for Word {
    const KIND: RingKind = RingKind::Free;

    fn one(_ring: &Ring) -> Self {
        Word(Vec::new())
    }

    fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    fn var_power(_ring: &Ring, slot: usize, k: u32) -> Self {
        Word(vec![slot as u32; k as usize])
    }

    fn mul(&self, other: &Self) -> Self {
        let mut w = Vec::with_capacity(self.0.len() + other.0.len());
        w.extend_from_slice(&self.0);
        w.extend_from_slice(&other.0);
        Word(w)
    }

    fn degree(&self, ring: &Ring) -> u32 {
        self.0.iter().map(|&l| ring.weight(l as usize)).sum()
    }

    fn is_valid(&self, ring: &Ring) -> bool {
        ring.kind() == RingKind::Free && self.0.iter().all(|&l| (l as usize) < ring.num_slots())
    }

    fn cmp_in(&self, other: &Self, ring: &Ring) -> Ordering {
        order::graded_word_cmp(&self.0, &other.0, ring)
    }

    fn homog_power(&self, ring: &Ring) -> u32 {
        match ring.homog_slot() {
            Some(s) => self.0.iter().filter(|&&l| l as usize == s).count() as u32,
            None => 0,
        }
    }

    fn lift(&self, r: u32, ext: &Ring) -> Self {
        let t = ext.homog_slot().expect("extended ring") as u32;
        let mut w = vec![t; r as usize];
        w.extend_from_slice(&self.0);
        Word(w)
    }

    fn strip_homog(&self, ext: &Ring) -> Self {
        match ext.homog_slot() {
            Some(t) => Word(self.0.iter().copied().filter(|&l| l as usize != t).collect()),
            None => self.clone(),
        }
    }

    fn divides(&self, other: &Self) -> bool {
        other.find(self).is_some()
    }

    fn cofactors(&self, other: &Self) -> Option<(Self, Self)> {
        other.find(self).map(|p| (other.slice(0, p), other.slice(p + self.len(), other.len())))
    }

    /// Letters in order, runs written as powers.
    fn render(&self, ring: &Ring) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            parts.push(power(ring.var_name(self.0[i] as usize), (j - i) as u32));
            i = j;
        }
        parts.join("*")
    }
}
