//! Exact Groebner bases over `Q` or `F_p` with central and non-central
//! (de)homogenization.
//!
//! Two ring families are supported: commutative polynomial rings `K[x1..xn]`
//! with a central homogenizing variable `t`, and free algebras `K<X1..Xn>`
//! with a non-commuting homogenizing letter `T` paired with the commutators
//! `Xi*T - T*Xi`.

pub mod central;
pub mod error;
pub mod gb;
pub mod homog;
pub mod monomial;
pub mod noncentral;
pub mod normal;
pub mod order;
pub mod parse;
pub mod pipeline;
pub mod poly;
pub mod properties;
pub mod random;
pub mod ring;
pub mod scalar;

pub use central::CentralHomogenizer;
pub use error::{Error, Result};
pub use gb::GroebnerBasis;
pub use homog::Homogenizer;
pub use monomial::{Exponents, Monomial, Word};
pub use noncentral::NoncentralHomogenizer;
pub use normal::NormalSet;
pub use poly::{ring_ref, CommPoly, FreePoly, Polynomial};
pub use ring::{Ring, RingKind, RingRef};
pub use scalar::{Field, Scalar};
