//! Exact multivariate polynomial algebra: fields, Gröbner bases and ideal-theoretic
//! decision procedures (dimension, flatness over a DVR, generic emptiness, radical
//! membership, point counts).

pub mod error;
pub mod field;
pub mod groebner;
pub mod ideal;
pub mod json;
pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod points;
pub mod poly;
pub mod presolve;

pub use error::{AlgError, Result};
pub use field::{Field, FieldDesc, PrimeField, Rationals};
pub use groebner::{Budget, GbStats};
pub use ideal::{Flatness, Ideal};
pub use json::{AnyIdeal, IdealJson};
pub use matrix::PolyMatrix;
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_poly;
pub use poly::{Polynomial, Ring};
