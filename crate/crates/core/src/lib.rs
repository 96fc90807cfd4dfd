//! Slack matrices, slack ideals and realizability certificates for matroids.

pub mod error;
pub mod groebner;
pub mod io;
pub mod linalg;
pub mod matroid;
pub mod minors;
pub mod certify;
pub mod field;
pub mod grassmann;
pub mod monomial;
pub mod poly;
pub mod rational;
pub mod slack;
pub mod univariate;

pub use error::{AlgebraError, Error, GbError, MatroidError, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::{MultiPoly, PolyRing, Ring};
pub use rational::Rational;
