//! Ring descriptors: variables, weights, precedence and the optional
//! homogenizing variable.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingKind {
    /// `K[x1..xn]`, possibly extended by a central `t`.
    Commutative,
    /// `K<X1..Xn>`, possibly extended by a non-central `T`.
    Free,
}

impl RingKind {
    pub fn name(&self) -> &'static str {
        match self {
            RingKind::Commutative => "commutative",
            RingKind::Free => "free",
        }
    }
}

/// Describes a polynomial ring. Variable slots `0..vars.len()` are the base
/// variables; when a homogenizing variable is present it occupies the last
/// slot and has weight 1.
///
/// Precedence is stored as a rank per base variable, larger rank meaning
/// larger in the graded lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    kind: RingKind,
    vars: Vec<String>,
    weights: Vec<u32>,
    rank: Vec<u32>,
    // base slots sorted by decreasing rank
    desc: Vec<usize>,
    homog_var: Option<String>,
    field: Field,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    /// Unit weights; the first variable listed is the greatest.
    pub fn new<S: AsRef<str>>(kind: RingKind, vars: &[S], field: Field) -> Result<Ring> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        let mut seen = HashSet::new();
        for v in &vars {
            if !valid_name(v) {
                return Err(Error::InvalidRing(format!("bad variable name {v:?}")));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable {v}")));
            }
        }
        let n = vars.len() as u32;
        Ok(Ring {
            kind,
            weights: vec![1; vars.len()],
            rank: (0..n).rev().collect(),
            desc: (0..vars.len()).collect(),
            vars,
            homog_var: None,
            field,
        })
    }

    pub fn commutative<S: AsRef<str>>(vars: &[S]) -> Result<Ring> {
        Ring::new(RingKind::Commutative, vars, Field::Rationals)
    }

    pub fn free<S: AsRef<str>>(vars: &[S]) -> Result<Ring> {
        Ring::new(RingKind::Free, vars, Field::Rationals)
    }

    pub fn with_weights(mut self, weights: &[u32]) -> Result<Ring> {
        if weights.len() != self.vars.len() {
            return Err(Error::InvalidRing(format!(
                "{} weights given for {} variables",
                weights.len(),
                self.vars.len()
            )));
        }
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::InvalidRing("weights must be positive".into()));
        }
        self.weights = weights.to_vec();
        Ok(self)
    }

    /// Sets the variable precedence, listed from greatest to least.
    pub fn with_precedence<S: AsRef<str>>(mut self, greatest_first: &[S]) -> Result<Ring> {
        if greatest_first.len() != self.vars.len() {
            return Err(Error::InvalidRing("variable order must list every variable once".into()));
        }
        let mut rank = vec![u32::MAX; self.vars.len()];
        let n = self.vars.len() as u32;
        for (pos, name) in greatest_first.iter().enumerate() {
            let idx = self
                .base_index(name.as_ref())
                .ok_or_else(|| Error::InvalidRing(format!("unknown variable {}", name.as_ref())))?;
            if rank[idx] != u32::MAX {
                return Err(Error::InvalidRing(format!("variable {} listed twice", name.as_ref())));
            }
            rank[idx] = n - 1 - pos as u32;
        }
        let mut desc: Vec<usize> = (0..self.vars.len()).collect();
        desc.sort_by_key(|&i| std::cmp::Reverse(rank[i]));
        self.rank = rank;
        self.desc = desc;
        Ok(self)
    }

    pub fn with_field(mut self, field: Field) -> Ring {
        self.field = field;
        self
    }

    /// Adjoins the homogenizing variable (weight 1).
    pub fn with_homog_var(&self, name: &str) -> Result<Ring> {
        if self.homog_var.is_some() {
            return Err(Error::InvalidRing("ring already has a homogenizing variable".into()));
        }
        if !valid_name(name) || self.vars.iter().any(|v| v == name) {
            return Err(Error::InvalidRing(format!(
                "homogenizing variable {name:?} must be a fresh name"
            )));
        }
        let mut ext = self.clone();
        ext.homog_var = Some(name.to_string());
        Ok(ext)
    }

    /// The ring without its homogenizing variable.
    pub fn base(&self) -> Ring {
        let mut b = self.clone();
        b.homog_var = None;
        b
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn homog_var(&self) -> Option<&str> {
        self.homog_var.as_deref()
    }

    pub fn num_base_vars(&self) -> usize {
        self.vars.len()
    }

    /// Number of variable slots including the homogenizing variable.
    pub fn num_slots(&self) -> usize {
        self.vars.len() + usize::from(self.homog_var.is_some())
    }

    pub fn homog_slot(&self) -> Option<usize> {
        self.homog_var.as_ref().map(|_| self.vars.len())
    }

    pub fn is_homog_slot(&self, slot: usize) -> bool {
        self.homog_var.is_some() && slot == self.vars.len()
    }

    pub fn weight(&self, slot: usize) -> u32 {
        if slot < self.vars.len() {
            self.weights[slot]
        } else {
            1
        }
    }

    /// Precedence of a base variable; larger is greater.
    pub fn rank(&self, slot: usize) -> u32 {
        self.rank[slot]
    }

    /// Letter precedence on the full alphabet with the homogenizing variable
    /// below every base variable.
    pub fn letter_rank(&self, slot: usize) -> u32 {
        if slot < self.vars.len() {
            self.rank[slot] + 1
        } else {
            0
        }
    }

    /// Base variables from greatest to least.
    pub fn precedence(&self) -> Vec<&str> {
        self.desc.iter().map(|&i| self.vars[i].as_str()).collect()
    }

    /// Base slots from greatest to least.
    pub fn slots_by_precedence(&self) -> &[usize] {
        &self.desc
    }

    pub fn var_name(&self, slot: usize) -> &str {
        if slot < self.vars.len() {
            &self.vars[slot]
        } else {
            self.homog_var.as_deref().expect("slot out of range")
        }
    }

    fn base_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Slot of a variable name, including the homogenizing variable.
    pub fn slot_of(&self, name: &str) -> Option<usize> {
        self.base_index(name)
            .or_else(|| (self.homog_var.as_deref() == Some(name)).then_some(self.vars.len()))
    }

    pub fn into_ref(self) -> RingRef {
        Arc::new(self)
    }
}

pub type RingRef = Arc<Ring>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptor_invariants() {
        assert!(Ring::commutative(&["x", "x"]).is_err());
        assert!(Ring::commutative(&["x", "1y"]).is_err());
        let r = Ring::commutative(&["x", "y"]).unwrap();
        assert!(r.clone().with_weights(&[1, 0]).is_err());
        assert!(r.clone().with_weights(&[1]).is_err());
        assert!(r.with_homog_var("x").is_err());
        let ext = r.with_homog_var("t").unwrap();
        assert_eq!(ext.num_slots(), 3);
        assert_eq!(ext.weight(2), 1);
        assert_eq!(ext.slot_of("t"), Some(2));
        assert!(ext.with_homog_var("s").is_err());
        assert_eq!(ext.base(), r);
    }

    #[test]
    fn precedence_round_trip() {
        let r = Ring::commutative(&["x", "y", "z"]).unwrap();
        assert_eq!(r.precedence(), vec!["x", "y", "z"]);
        let r = r.with_precedence(&["z", "x", "y"]).unwrap();
        assert_eq!(r.precedence(), vec!["z", "x", "y"]);
        assert!(r.clone().with_precedence(&["z", "z", "y"]).is_err());
        assert!(r.with_precedence(&["z", "x"]).is_err());
    }
}
