use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::monoid_ring::{Generator, Letter, Monomial};

/// Monomial families, each described by conditions on the index λ, the
/// a-index α and the b-index β.
///
/// - `A` (𝒜_k): λ_1 = k; after `a_j` comes index j−2, after `b_j` index
///   j−1; the word ends in `b_0` or `a_1`. These are the terms of `A_k`.
/// - `R` (ℛ_k): k ≥ λ_1 > … > λ_ℓ ≥ 0, λ_1 ≡ k (mod 3); after `a_j` the next
///   index is not ≡ j−1, after `b_j` not ≡ j (mod 3); a final `a_j` has
///   j ≢ 2 and a final `b_j` has j ≢ 1 (mod 3). These are the non-constant
///   monomials of `R_k`.
/// - `U` (𝒰_k): the members of ℛ_k with no `b` letter.
/// - `V` (𝒱_k): the members of ℛ_k with no `a` letter and no `b_0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    R,
    U,
    V,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::A, Family::R, Family::U, Family::V];

    fn letter_allowed(self, g: Generator) -> bool {
        match self {
            Family::A | Family::R => true,
            Family::U => g.is_a(),
            Family::V => g.is_b() && g.subscript() >= 2,
        }
    }

    fn start(self, k: u32, g: Generator) -> bool {
        let s = g.subscript();
        match self {
            Family::A => s == k,
            Family::R | Family::U | Family::V => s % 3 == k % 3,
        }
    }

    fn step(self, from: Generator, to: Generator) -> bool {
        let (j, n) = (from.subscript(), to.subscript());
        match (self, from.letter()) {
            (Family::A, Letter::A) => n + 2 == j,
            (Family::A, Letter::B) => n + 1 == j,
            (_, Letter::A) => j % 3 != (n + 1) % 3,
            (_, Letter::B) => j % 3 != n % 3,
        }
    }

    fn end(self, g: Generator) -> bool {
        let s = g.subscript();
        match (self, g.letter()) {
            (Family::A, Letter::A) => s == 1,
            (Family::A, Letter::B) => s == 0,
            (_, Letter::A) => s % 3 != 2,
            (_, Letter::B) => s % 3 != 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::R => "R",
            Family::U => "U",
            Family::V => "V",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Family::ALL
            .into_iter()
            .find(|fam| fam.name() == s)
            .ok_or_else(|| Error::UnknownName { kind: "monomial family", name: s.to_string() })
    }
}

/// Generators with subscript `s`, in canonical order (`a_s` before `b_s`).
fn generators_at(s: u32) -> impl Iterator<Item = Generator> {
    let a = (s >= 1).then(|| Generator::a(s));
    a.into_iter().chain(std::iter::once(Generator::b(s)))
}

/// Number of disjoint adjacent triples in a gap of `width` omitted integers.
fn triples(width: i64) -> u32 {
    width.div_euclid(3) as u32
}

fn extend<F>(family: Family, word: &mut Vec<Generator>, g: u32, visit: &mut F)
where
    F: FnMut(&[Generator], u32),
{
    let last = *word.last().expect("non-empty word");
    let top = last.subscript();
    if family.end(last) {
        visit(word, g + triples(i64::from(top) + 1));
    }
    for s in (0..top).rev() {
        for next in generators_at(s) {
            if family.letter_allowed(next) && family.step(last, next) {
                word.push(next);
                extend(family, word, g + triples(i64::from(top - s) - 1), visit);
                word.pop();
            }
        }
    }
}

/// Calls `visit(word, g_k(word))` on every member of the family at `k`, in
/// canonical order. The sign exponent is accumulated gap by gap along the
/// search. Negative `k` gives the empty family.
pub fn for_each_in_family_with_g<F>(family: Family, k: i64, mut visit: F)
where
    F: FnMut(&[Generator], u32),
{
    let Ok(k) = u32::try_from(k) else { return };
    let mut word = Vec::with_capacity(k as usize + 1);
    for s in (0..=k).rev() {
        for first in generators_at(s) {
            if family.letter_allowed(first) && family.start(k, first) {
                word.push(first);
                extend(family, &mut word, triples(i64::from(k - s)), &mut visit);
                word.pop();
            }
        }
    }
}

/// Calls `visit` on every member of the family at `k`, as a word, in
/// canonical order. Negative `k` gives the empty family.
pub fn for_each_in_family<F: FnMut(&[Generator])>(family: Family, k: i64, mut visit: F) {
    for_each_in_family_with_g(family, k, |w, _| visit(w));
}

/// All members of the family at `k`.
pub fn enumerate_family(family: Family, k: i64) -> BTreeSet<Monomial> {
    let mut out = BTreeSet::new();
    for_each_in_family(family, k, |w| {
        out.insert(Monomial::new(w.to_vec()));
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(words: &[&str]) -> BTreeSet<Monomial> {
        words.iter().map(|w| w.parse().unwrap()).collect()
    }

    /// Literal check of a family's property list on an arbitrary word.
    fn satisfies(family: Family, k: u32, m: &Monomial) -> bool {
        let w = m.generators();
        let lam: Vec<u32> = m.index();
        if w.is_empty() || !m.is_strictly_descending() || lam[0] > k {
            return false;
        }
        let l = w.len();
        match family {
            Family::A => {
                lam[0] == k
                    && (0..l - 1).all(|j| {
                        if w[j].is_a() {
                            lam[j + 1] + 2 == lam[j]
                        } else {
                            lam[j + 1] + 1 == lam[j]
                        }
                    })
                    && (w[l - 1] == Generator::b(0) || w[l - 1] == Generator::a(1))
            }
            Family::R | Family::U | Family::V => {
                let pure = match family {
                    Family::U => w.iter().all(|g| g.is_a()),
                    Family::V => w.iter().all(|g| g.is_b() && g.subscript() >= 2),
                    _ => true,
                };
                pure && lam[0] % 3 == k % 3
                    && (0..l - 1).all(|j| {
                        if w[j].is_a() {
                            lam[j] % 3 != (lam[j + 1] + 1) % 3
                        } else {
                            lam[j] % 3 != lam[j + 1] % 3
                        }
                    })
                    && if w[l - 1].is_a() { lam[l - 1] % 3 != 2 } else { lam[l - 1] % 3 != 1 }
            }
        }
    }

    /// Every strictly descending word with subscripts in [0, k].
    fn all_descending_words(k: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for mask in 1u32..(1 << (k + 1)) {
            let idx: Vec<u32> = (0..=k).rev().filter(|i| mask & (1 << i) != 0).collect();
            for letters in 0u32..(1 << idx.len()) {
                let word: Option<Vec<Generator>> = idx
                    .iter()
                    .enumerate()
                    .map(|(p, &s)| {
                        if letters & (1 << p) != 0 {
                            (s >= 1).then(|| Generator::a(s))
                        } else {
                            Some(Generator::b(s))
                        }
                    })
                    .collect();
                if let Some(w) = word {
                    out.push(Monomial::new(w));
                }
            }
        }
        out
    }

    #[test]
    fn listed_small_families() {
        assert_eq!(enumerate_family(Family::A, 0), set(&["b0"]));
        assert_eq!(enumerate_family(Family::A, 1), set(&["b1 b0", "a1"]));
        assert_eq!(enumerate_family(Family::R, 0), set(&["b0"]));
        assert_eq!(enumerate_family(Family::R, 1), set(&["b1 b0", "a1"]));
        assert_eq!(
            enumerate_family(Family::R, 2),
            set(&["b2 b1 b0", "b2 a1", "a2 b0", "b2 b0", "b2"])
        );
        assert_eq!(enumerate_family(Family::U, 5), set(&["a5 a3 a1", "a5 a3"]));
        assert_eq!(enumerate_family(Family::U, 4), set(&["a4 a1", "a4", "a1"]));
        assert_eq!(enumerate_family(Family::V, 2), set(&["b2"]));
    }

    #[test]
    fn empty_edges() {
        for fam in Family::ALL {
            assert!(enumerate_family(fam, -1).is_empty());
        }
        assert!(enumerate_family(Family::U, 0).is_empty());
        assert!(enumerate_family(Family::V, 0).is_empty());
        assert!(enumerate_family(Family::V, 1).is_empty());
    }

    #[test]
    fn dfs_matches_exhaustive_filter() {
        for k in 0..=7u32 {
            let words = all_descending_words(k);
            for fam in Family::ALL {
                let brute: BTreeSet<Monomial> =
                    words.iter().filter(|m| satisfies(fam, k, m)).cloned().collect();
                assert_eq!(enumerate_family(fam, k as i64), brute, "{fam} k = {k}");
            }
        }
    }

    #[test]
    fn u_and_v_are_subsets_of_r() {
        for k in 0..=10 {
            let r = enumerate_family(Family::R, k);
            let u = enumerate_family(Family::U, k);
            let v = enumerate_family(Family::V, k);
            assert!(u.is_subset(&r));
            assert!(v.is_subset(&r));
            let pure_a: BTreeSet<_> = r.iter().filter(|m| !m.contains_b()).cloned().collect();
            assert_eq!(u, pure_a);
            let pure_b: BTreeSet<_> = r
                .iter()
                .filter(|m| !m.contains_a() && m.last() != Some(Generator::b(0)))
                .cloned()
                .collect();
            assert_eq!(v, pure_b);
        }
    }

    #[test]
    fn single_letter_members() {
        for k in 1..=20u32 {
            let r = enumerate_family(Family::R, k as i64);
            let has_a = r.contains(&Monomial::from(Generator::a(k)));
            let has_b = r.contains(&Monomial::from(Generator::b(k)));
            assert_eq!(has_a, k % 3 == 0 || k % 3 == 1, "a{k}");
            assert_eq!(has_b, k % 3 == 0 || k % 3 == 2, "b{k}");
        }
    }

    #[test]
    fn a_family_words_end_in_b0_or_a1() {
        for k in 0..=20i64 {
            let a = enumerate_family(Family::A, k);
            assert!(a.iter().all(|m| m.first().map(|g| g.subscript() as i64) == Some(k)));
            assert!(a
                .iter()
                .all(|m| matches!(m.last(), Some(g) if g == Generator::b(0) || g == Generator::a(1))));
        }
    }

    #[test]
    fn accumulated_g_matches_gap_formula() {
        for k in 0..=12 {
            for fam in Family::ALL {
                for_each_in_family_with_g(fam, k, |w, g| {
                    let idx: Vec<u32> = w.iter().map(|x| x.subscript()).collect();
                    assert_eq!(g, crate::combinatorics::g_of_index(k, &idx), "{fam} {k} {idx:?}");
                });
            }
        }
    }

    #[test]
    fn names() {
        assert_eq!("U".parse::<Family>().unwrap(), Family::U);
        assert!("W".parse::<Family>().is_err());
    }
}
