//! Exact coefficients: arbitrary-precision rationals or residues modulo a prime.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The coefficient field of a ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// Builds `F_p`, rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Field> {
        if p < 2 || p >= (1 << 32) || !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not a prime below 2^32")));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Residue { value: n.rem_euclid(p as i64) as u64, p },
        }
    }

    /// `num / den` in this field; `None` when the denominator vanishes.
    pub fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Scalar> {
        match *self {
            Field::Rationals => {
                if den.is_zero() {
                    None
                } else {
                    Some(Scalar::Rational(BigRational::new(num.clone(), den.clone())))
                }
            }
            Field::Prime(p) => {
                let m = BigInt::from(p);
                let reduce = |x: &BigInt| {
                    let r = ((x % &m) + &m) % &m;
                    u64::try_from(r).expect("residue fits u64")
                };
                let d = Scalar::Residue { value: reduce(den), p };
                let n = Scalar::Residue { value: reduce(num), p };
                d.inv().map(|di| &n * &di)
            }
        }
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        matches!(
            (self, s),
            (Field::Rationals, Scalar::Rational(_)) | (Field::Prime(_), Scalar::Residue { .. })
        ) && match (self, s) {
            (Field::Prime(p), Scalar::Residue { p: q, value }) => p == q && value < p,
            _ => true,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

/// Accepts `q` and `fp:<prime>`.
impl std::str::FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        match s.trim() {
            "q" | "Q" => Ok(Field::Rationals),
            other => match other.strip_prefix("fp:").map(|p| p.parse::<u64>()) {
                Some(Ok(p)) => Field::prime(p),
                _ => Err(Error::InvalidRing(format!("unknown field {other:?}; expected q or fp:<prime>"))),
            },
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A field element. Rationals are kept in lowest terms with a positive
/// denominator, residues in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u64, p: u64 },
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Residue { p, .. } => Field::Prime(*p),
        }
    }

    /// True when the printed form starts with a minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_negative(),
            Scalar::Residue { .. } => false,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(r.abs()),
            s => s.clone(),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(r) => Scalar::Rational(r.recip()),
            Scalar::Residue { value, p } => {
                Scalar::Residue { value: pow_mod(*value, p - 2, *p), p: *p }
            }
        })
    }

    /// Division by a nonzero scalar.
    pub fn div(&self, other: &Scalar) -> Scalar {
        self * &other.inv().expect("division by zero scalar")
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

macro_rules! binop {
    ($tr:ident, $method:ident, $rat:expr, $res:expr) => {
        impl $tr for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational($rat(a, b)),
                    (Scalar::Residue { value: a, p }, Scalar::Residue { value: b, p: q }) => {
                        assert_eq!(p, q, "scalars from different prime fields");
                        Scalar::Residue { value: $res(*a, *b, *p), p: *p }
                    }
                    _ => panic!("scalars from different fields"),
                }
            }
        }
    };
}

binop!(Add, add, |a: &BigRational, b: &BigRational| a + b, |a: u64, b: u64, p: u64| (a + b) % p);
binop!(Sub, sub, |a: &BigRational, b: &BigRational| a - b, |a: u64, b: u64, p: u64| (a + p - b) % p);
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, |a: u64, b: u64, p: u64| a * b % p);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Residue { value, p } => Scalar::Residue { value: (p - value) % p, p: *p },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Residue { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_names_round_trip() {
        for f in [Field::Rationals, Field::prime(7).unwrap()] {
            assert_eq!(f.to_string().parse::<Field>().unwrap(), f);
        }
        assert!("fp:8".parse::<Field>().is_err());
        assert!("r".parse::<Field>().is_err());
    }

    #[test]
    fn rationals_in_lowest_terms() {
        let q = Field::Rationals;
        let s = q.from_ratio(&BigInt::from(4), &BigInt::from(-6)).unwrap();
        match &s {
            Scalar::Rational(r) => {
                assert_eq!(*r.numer(), BigInt::from(-2));
                assert_eq!(*r.denom(), BigInt::from(3));
            }
            _ => unreachable!(),
        }
        assert_eq!(s.to_string(), "-2/3");
        assert!(q.from_ratio(&BigInt::from(1), &BigInt::from(0)).is_none());
    }

    #[test]
    fn residues_and_inverses() {
        let f = Field::prime(7).unwrap();
        assert_eq!(f.from_i64(-1), Scalar::Residue { value: 6, p: 7 });
        for n in 1..7 {
            let s = f.from_i64(n);
            assert!((&s * &s.inv().unwrap()).is_one());
        }
        assert!(f.zero().inv().is_none());
        let half = f.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(half, Scalar::Residue { value: 4, p: 7 });
        assert!(Field::prime(9).is_err());
        assert!(Field::prime(1).is_err());
    }

    #[test]
    fn nonzero_rationals_invertible() {
        let q = Field::Rationals;
        for (a, b) in [(3, 5), (-7, 2), (1, 1), (-1, 9)] {
            let s = q.from_ratio(&BigInt::from(a), &BigInt::from(b)).unwrap();
            assert!((&s * &s.inv().unwrap()).is_one());
            assert!((&s + &(-&s)).is_zero());
        }
    }
}
