//! Named substitution homomorphisms, for use with
//! [`Polynomial::substitute`](super::Polynomial::substitute).
//!
//! Each preset is a function from a generator to `Some(image)`, or `None`
//! when the generator is left fixed.

use super::{Generator, Letter, Polynomial};

/// φ: `a_1, b_0, b_1 ↦ 0` and `a_j ↦ a_{j-1}`, `b_j ↦ b_{j-1}` for j ≥ 2.
///
/// Takes `-P_{k+1}` to `Q_k`.
pub fn phi(g: Generator) -> Option<Polynomial> {
    match (g.letter(), g.subscript()) {
        (Letter::A, 1) | (Letter::B, 0) | (Letter::B, 1) => Some(Polynomial::zero()),
        _ => Some(Polynomial::from(g.shifted(-1).expect("subscript ≥ 2"))),
    }
}

/// δ: `a_i ↦ -1 + a_i` for i ≥ 1, `b_i ↦ 1 + b_i` for i ≥ 1, `b_0` fixed.
///
/// Carries the general continued fraction onto `K`.
pub fn delta(g: Generator) -> Option<Polynomial> {
    match (g.letter(), g.subscript()) {
        (Letter::B, 0) => None,
        (Letter::A, _) => Some(Polynomial::from(g) - Polynomial::one()),
        (Letter::B, _) => Some(Polynomial::from(g) + Polynomial::one()),
    }
}

/// Raises every subscript by `n`.
pub fn shift(n: u32) -> impl Fn(Generator) -> Option<Polynomial> {
    move |g| Some(Polynomial::from(g.shifted(i64::from(n)).expect("upward shift stays valid")))
}

/// Every `b_j ↦ 0` (including `b_0`); `a_j` fixed.
pub fn kill_b(g: Generator) -> Option<Polynomial> {
    g.is_b().then(Polynomial::zero)
}

/// Every `a_j ↦ 0` and `b_0 ↦ 0`; `b_j` (j ≥ 1) fixed.
pub fn kill_a_and_b0(g: Generator) -> Option<Polynomial> {
    (g.is_a() || g.subscript() == 0).then(Polynomial::zero)
}

/// Every `a_j ↦ 0`; `b_j` fixed.
pub fn kill_a(g: Generator) -> Option<Polynomial> {
    g.is_a().then(Polynomial::zero)
}

pub fn identity(_: Generator) -> Option<Polynomial> {
    None
}
