//! Polynomial text syntax.
//!
//! ```text
//! poly   := [sign] term (sign term)*
//! term   := factor ('*' factor)*
//! factor := integer ['/' integer] | name ['^' integer]
//! ```
//!
//! Factor order matters in free rings; juxtaposition is not multiplication.
//! A system is one polynomial per line, `#` starting a comment.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::RingRef;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
    line: usize,
}

impl Lexer {
    fn new(src: &str, line: usize) -> Self {
        Lexer { chars: src.chars().collect(), pos: 0, line }
    }

    fn err(&self, col: usize, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col, msg: msg.into() }
    }

    /// Tokens with their 1-based columns.
    fn tokens(mut self) -> Result<Vec<(Tok, usize)>> {
        let mut out = Vec::new();
        while self.pos < self.chars.len() {
            let c = self.chars[self.pos];
            let col = self.pos + 1;
            if c.is_whitespace() {
                self.pos += 1;
                continue;
            }
            if c == '#' {
                break;
            }
            let tok = match c {
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '/' => Tok::Slash,
                d if d.is_ascii_digit() => {
                    let start = self.pos;
                    while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                        self.pos += 1;
                    }
                    let s: String = self.chars[start..self.pos].iter().collect();
                    out.push((Tok::Num(s.parse().expect("digits")), col));
                    continue;
                }
                a if a.is_ascii_alphabetic() || a == '_' => {
                    let start = self.pos;
                    while self.pos < self.chars.len()
                        && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
                    {
                        self.pos += 1;
                    }
                    let s: String = self.chars[start..self.pos].iter().collect();
                    out.push((Tok::Name(s), col));
                    continue;
                }
                other => return Err(self.err(col, format!("unexpected character {other:?}"))),
            };
            out.push((tok, col));
            self.pos += 1;
        }
        Ok(out)
    }
}

struct Parser<'r> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
    ring: &'r RingRef,
}

impl<'r> Parser<'r> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { line: self.line, col: self.col(), msg: msg.into() }
    }

    fn integer(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(Tok::Num(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.err("expected an integer")),
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        let col = self.col();
        let n = self.integer()?;
        u32::try_from(n).map_err(|_| Error::Parse { line: self.line, col, msg: "exponent too large".into() })
    }

    fn term<M: Monomial>(&mut self, sign: bool) -> Result<(M, Scalar)> {
        let field = self.ring.field();
        let mut coeff = if sign { -&field.one() } else { field.one() };
        let mut mono = M::one(self.ring);
        loop {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    let col = self.col();
                    self.pos += 1;
                    let den = if self.peek() == Some(&Tok::Slash) {
                        self.pos += 1;
                        self.integer()?
                    } else {
                        BigInt::one()
                    };
                    let c = field.from_ratio(&n, &den).ok_or(Error::Parse {
                        line: self.line,
                        col,
                        msg: "zero denominator".into(),
                    })?;
                    coeff = &coeff * &c;
                }
                Some(Tok::Name(name)) => {
                    let col = self.col();
                    self.pos += 1;
                    let slot = self.ring.slot_of(&name).ok_or(Error::UnknownVariable {
                        name: name.clone(),
                        line: self.line,
                        col,
                    })?;
                    let k = if self.peek() == Some(&Tok::Caret) {
                        self.pos += 1;
                        self.exponent()?
                    } else {
                        1
                    };
                    mono = mono.mul(&M::var_power(self.ring, slot, k));
                }
                _ => return Err(self.err("expected a coefficient or variable")),
            }
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else {
                return Ok((mono, coeff));
            }
        }
    }

    fn poly<M: Monomial>(&mut self) -> Result<Polynomial<M>> {
        if self.toks.is_empty() {
            return Err(self.err("empty expression"));
        }
        let mut terms = Vec::new();
        let mut first = true;
        while self.pos < self.toks.len() {
            let neg = match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    false
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return Err(self.err("expected '+' or '-'")),
            };
            terms.push(self.term::<M>(neg)?);
            first = false;
        }
        Ok(Polynomial::from_terms(self.ring, terms))
    }
}

fn parse_line<M: Monomial>(ring: &RingRef, text: &str, line: usize) -> Result<Polynomial<M>> {
    if M::KIND != ring.kind() {
        return Err(Error::KindMismatch { expected: ring.kind().name() });
    }
    let toks = Lexer::new(text, line).tokens()?;
    let end_col = text.chars().count() + 1;
    Parser { toks, pos: 0, line, end_col, ring }.poly()
}

/// Parses a single polynomial.
pub fn parse_poly<M: Monomial>(ring: &RingRef, text: &str) -> Result<Polynomial<M>> {
    parse_line(ring, text, 1)
}

/// A parsed system together with the 1-based line numbers of lines that
/// evaluated to zero and were skipped.
#[derive(Debug, Clone)]
pub struct ParsedSystem<M: Monomial> {
    pub polys: Vec<Polynomial<M>>,
    pub zero_lines: Vec<usize>,
}

/// Parses one polynomial per nonblank line; `#` begins a comment.
pub fn parse_system<M: Monomial>(ring: &RingRef, text: &str) -> Result<ParsedSystem<M>> {
    let mut polys = Vec::new();
    let mut zero_lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let p = parse_line::<M>(ring, content, i + 1)?;
        if p.is_zero() {
            zero_lines.push(i + 1);
        } else {
            polys.push(p);
        }
    }
    Ok(ParsedSystem { polys, zero_lines })
}

/// Variable names occurring in a system, sorted, excluding `exclude`.
pub fn collect_variables(text: &str, exclude: Option<&str>) -> Vec<String> {
    let mut names = std::collections::BTreeSet::new();
    for raw in text.lines() {
        let content = raw.split('#').next().unwrap_or("");
        if let Ok(toks) = Lexer::new(content, 0).tokens() {
            for (t, _) in toks {
                if let Tok::Name(n) = t {
                    if Some(n.as_str()) != exclude {
                        names.insert(n);
                    }
                }
            }
        }
    }
    names.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{ring_ref, CommPoly, FreePoly};
    use crate::ring::Ring;
    use crate::scalar::Field;

    #[test]
    fn example_systems() {
        let r = ring_ref(Ring::commutative(&["x", "y"]).unwrap());
        let sys = parse_system::<crate::monomial::Exponents>(&r, "y^3 - x - y\ny^2 + 1\n").unwrap();
        let shown: Vec<String> = sys.polys.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, vec!["y^3 - x - y", "y^2 + 1"]);

        let f = ring_ref(Ring::free(&["X", "Y"]).unwrap().with_precedence(&["Y", "X"]).unwrap());
        let p: FreePoly = parse_poly(&f, "Y*Y*Y - X*Y - X - Y").unwrap();
        assert_eq!(p.to_string(), "Y^3 - X*Y - Y - X");
    }

    #[test]
    fn unknown_variable_position() {
        let r = ring_ref(Ring::commutative(&["x", "y"]).unwrap());
        let err = parse_poly::<crate::monomial::Exponents>(&r, "x + q").unwrap_err();
        assert_eq!(err.to_string(), "unknown variable q at 1:5");
        let err = parse_system::<crate::monomial::Exponents>(&r, "x\n\n  y + z").unwrap_err();
        assert_eq!(err.to_string(), "unknown variable z at 3:7");
    }

    #[test]
    fn syntax_errors_and_zero_lines() {
        let r = ring_ref(Ring::commutative(&["x", "y"]).unwrap());
        assert!(matches!(parse_poly::<crate::monomial::Exponents>(&r, "x +"), Err(Error::Parse { col: 4, .. })));
        assert!(matches!(parse_poly::<crate::monomial::Exponents>(&r, "x y"), Err(Error::Parse { col: 3, .. })));
        assert!(parse_poly::<crate::monomial::Exponents>(&r, "1/0*x").is_err());
        let sys = parse_system::<crate::monomial::Exponents>(&r, "# header\nx - x\nx # trailing\n").unwrap();
        assert_eq!(sys.zero_lines, vec![2]);
        assert_eq!(sys.polys.len(), 1);
    }

    #[test]
    fn coefficients() {
        let r = ring_ref(Ring::commutative(&["x", "y"]).unwrap());
        let p: CommPoly = parse_poly(&r, "2/4*x^2*y - 3 + x*2").unwrap();
        assert_eq!(p.to_string(), "1/2*x^2*y + 2*x - 3");
        let f7 = ring_ref(Ring::commutative(&["x"]).unwrap().with_field(Field::prime(7).unwrap()));
        let q: CommPoly = parse_poly(&f7, "-x + 1/2").unwrap();
        assert_eq!(q.to_string(), "6*x + 4");
    }

    #[test]
    fn collects_names() {
        assert_eq!(collect_variables("y^3 - x*t\n# z\n", Some("t")), vec!["x", "y"]);
    }
}
