//! The monoid ring ℤ[ℳ] over the free monoid generated by `a_{j+1}` and
//! `b_j` (j ≥ 0).
//!
//! Multiplication is word concatenation and nothing commutes, so `a1 b0`
//! and `b0 a1` are distinct monomials. Coefficients are arbitrary-precision
//! integers; evaluation goes through exact rationals.
//!
//! ```
//! use threelimit::{Generator, Polynomial};
//!
//! let a1 = Polynomial::from(Generator::a(1));
//! let b0 = Polynomial::from(Generator::b(0));
//! assert_ne!(&a1 * &b0, &b0 * &a1);
//!
//! let r1: Polynomial = "-1 + a1 + b1 b0".parse().unwrap();
//! assert_eq!(r1.to_string(), "-1 + a1 + b1 b0");
//! assert_eq!(r1.constant_of(), (-1).into());
//! ```

mod generator;
mod json;
mod monomial;
mod polynomial;
pub mod substitution;
mod text;

pub use generator::{Generator, Letter};
pub use monomial::{IndexVectors, Monomial};
pub use polynomial::Polynomial;
