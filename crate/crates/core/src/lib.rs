//! Exact computation with the continuants of continued fractions in
//! noncommuting indeterminates, with emphasis on
//!
//! ```text
//! K = b0 + (-1+a1)/(1+b1) + (-1+a2)/(1+b2) + (-1+a3)/(1+b3) + ...
//! ```
//!
//! whose convergents split into three limits along residue classes mod 3.
//!
//! The crate is organised in four layers:
//!
//! - [`monoid_ring`]: sparse integer polynomials over words in the generators
//!   `a_{j+1}` and `b_j`, with substitution and exact rational evaluation.
//! - [`continuants`]: the recurrence-built sequences `A_k`, `B_k`, `P_k`,
//!   `Q_k`, `R_k` and the periodic scalar sequences ρ, σ, τ, χ₁, υ.
//! - [`combinatorics`]: direct enumeration of the monomial families
//!   𝒜, ℛ, 𝒰, 𝒱 and the sequence families C, D, the adjacent-triple sign
//!   function, and the closed forms built from them.
//! - [`identities`]: counting sequences, generating functions, and the
//!   verifier that checks every identity between the two routes.
//!
//! ```
//! use threelimit::continuants;
//! use threelimit::combinatorics;
//!
//! let by_recurrence = continuants::r_poly(4).unwrap();
//! let by_enumeration = combinatorics::combinatorial_r(4);
//! assert_eq!(*by_recurrence, by_enumeration);
//! assert_eq!(by_recurrence.len(), 29);
//! ```

pub mod cli;
pub mod combinatorics;
pub mod continuants;
mod error;
pub mod identities;
pub mod monoid_ring;
pub mod periodic;

pub use error::{Error, Result};
pub use monoid_ring::{Generator, IndexVectors, Letter, Monomial, Polynomial};
pub use periodic::Periodic;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
