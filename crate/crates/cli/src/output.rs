use homoggb_core::{Error, GroebnerBasis, Monomial, Polynomial, RingRef};
use serde_json::{json, Value};

use crate::config::Format;

/// Why a command did not produce output.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotGroebner(_)
            | Error::MissingCommutator(_)
            | Error::NotHomogeneous(_)
            | Error::TruncationExceeded { .. }
            | Error::MismatchedNormalSets(_) => Failure::Math(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// A command result: text lines and a JSON twin carrying the same data.
pub struct Output {
    pub text: Vec<String>,
    pub json: Value,
    /// Set when a check reported false; the process exits with 1.
    pub failed: bool,
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut s = self.text.join("\n");
                s.push('\n');
                s
            }
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
        }
    }
}

pub fn strings<M: Monomial>(polys: &[Polynomial<M>]) -> Vec<String> {
    polys.iter().map(|p| p.to_string()).collect()
}

pub fn ring_json(ring: &RingRef) -> Value {
    json!({
        "kind": ring.kind().name(),
        "vars": ring.vars(),
        "var_order": ring.precedence(),
        "weights": ring.weights(),
        "field": ring.field().to_string(),
        "homog_var": ring.homog_var(),
    })
}

pub fn basis_json<M: Monomial>(g: &GroebnerBasis<M>) -> Value {
    json!({
        "basis": g.to_strings(),
        "reduced": g.is_reduced(),
        "complete": g.is_complete(),
        "truncated_at": g.truncation_degree(),
    })
}

/// `#complete:` and `#truncated-at:` lines for a degree-bounded basis.
pub fn truncation_lines<M: Monomial>(g: &GroebnerBasis<M>) -> Vec<String> {
    match g.truncation_degree() {
        Some(d) => vec![format!("#complete: {}", g.is_complete()), format!("#truncated-at: {d}")],
        None => Vec::new(),
    }
}
