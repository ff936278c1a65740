use std::fmt;
use std::str::FromStr;

use super::Generator;
use crate::error::{Error, Result};

/// A word in the generators; the empty word is the identity ε.
///
/// Equality is literal word equality. The derived order is lexicographic on
/// [`Generator`]'s order, so a word sorts before its extensions and ε sorts
/// first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<Generator>);

/// Index, a-index and b-index of a monomial.
///
/// `lambda[j]` is the subscript of the j-th letter; `alpha` keeps the
/// subscripts of `a` letters and zeroes the rest, `beta` likewise for `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IndexVectors {
    pub lambda: Vec<u32>,
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
}

impl Monomial {
    /// ε
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(word: Vec<Generator>) -> Self {
        Monomial(word)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0
    }

    pub fn into_generators(self) -> Vec<Generator> {
        self.0
    }

    /// Degree ℓ.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Generator> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Generator> {
        self.0.last().copied()
    }

    /// `g · self`
    pub fn prepend(&self, g: Generator) -> Self {
        let mut word = Vec::with_capacity(self.0.len() + 1);
        word.push(g);
        word.extend_from_slice(&self.0);
        Monomial(word)
    }

    /// `self · other`
    pub fn concat(&self, other: &Monomial) -> Self {
        let mut word = Vec::with_capacity(self.0.len() + other.0.len());
        word.extend_from_slice(&self.0);
        word.extend_from_slice(&other.0);
        Monomial(word)
    }

    /// The index vector λ.
    pub fn index(&self) -> Vec<u32> {
        self.0.iter().map(|g| g.subscript()).collect()
    }

    pub fn indices(&self) -> IndexVectors {
        let lambda = self.index();
        let alpha = self.0.iter().map(|g| if g.is_a() { g.subscript() } else { 0 }).collect();
        let beta = self.0.iter().map(|g| if g.is_b() { g.subscript() } else { 0 }).collect();
        IndexVectors { lambda, alpha, beta }
    }

    /// True when the index vector is strictly decreasing from left to right.
    pub fn is_strictly_descending(&self) -> bool {
        self.0.windows(2).all(|w| w[0].subscript() > w[1].subscript())
    }

    pub fn contains_a(&self) -> bool {
        self.0.iter().any(|g| g.is_a())
    }

    pub fn contains_b(&self) -> bool {
        self.0.iter().any(|g| g.is_b())
    }
}

impl From<Generator> for Monomial {
    fn from(g: Generator) -> Self {
        Monomial(vec![g])
    }
}

impl FromIterator<Generator> for Monomial {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        Monomial(iter.into_iter().collect())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Accepts whitespace-separated generators (`"b2 a1"`), and `"1"` for ε.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Monomial::one());
        }
        s.split_whitespace().map(str::parse).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    #[test]
    fn indices_of_listed_examples() {
        let v = m("a6 b4 b3 b2 a1").indices();
        assert_eq!(v.lambda, vec![6, 4, 3, 2, 1]);
        assert_eq!(v.alpha, vec![6, 0, 0, 0, 1]);
        assert_eq!(v.beta, vec![0, 4, 3, 2, 0]);

        let v = m("b5 a4 b2 b0").indices();
        assert_eq!(v.alpha, vec![0, 4, 0, 0]);
        assert_eq!(v.beta, vec![5, 0, 2, 0]);
        assert_eq!(v.lambda, vec![5, 4, 2, 0]);

        assert_eq!(Monomial::one().indices(), IndexVectors::default());
    }

    #[test]
    fn word_order_is_literal() {
        assert_ne!(m("a1 b0"), m("b0 a1"));
        assert_eq!(m("a1").concat(&m("b0")), m("a1 b0"));
        assert_eq!(m("a1 b0").prepend(Generator::b(2)), m("b2 a1 b0"));
    }

    #[test]
    fn display_order_matches_listing_of_r2() {
        let mut words = vec![m("a2 b0"), m("b2"), m("b2 a1"), m("b2 b1 b0"), m("b2 b0"), Monomial::one()];
        let listed = words.clone();
        words.reverse();
        words.sort();
        assert_eq!(words[0], Monomial::one());
        assert_eq!(&words[1..], &listed[..5]);
    }
}
