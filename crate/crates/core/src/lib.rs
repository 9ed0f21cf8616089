//! Exact computation with polynomial automorphisms of affine 3-space.
//!
//! * [`poly`]: sparse polynomials over `Q`, degrees, leading forms, Jacobian
//!   minors and the Poisson-bracket degree, plus a text format.
//! * [`automorphism`]: polynomial maps, composition, multidegrees, the Nagata
//!   map and its twisted iterates.
//! * [`semigroup`]: membership in `d1*N + d2*N` and Frobenius numbers.
//! * [`classifier`]: which multidegrees are known to be (un)attainable by
//!   tame automorphisms, with explicit tame witnesses.
//! * [`reduction`]: bounded search for elementary reductions and the degree
//!   lower bound for `G(f, g)`.

pub mod automorphism;
pub mod classifier;
mod error;
pub mod json;
pub mod linalg;
pub mod poly;
pub mod reduction;
pub mod semigroup;

pub use automorphism::{Multidegree, PolyMap};
pub use classifier::{classify, Rule, Status, Verdict};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use poly::{parse, render, ExtendedDegree, LeadingForm, Monomial, Polynomial, Rational};
pub use reduction::{find_elementary_reduction, BoundInputs, Reduction};
