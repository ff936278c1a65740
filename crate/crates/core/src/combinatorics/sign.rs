//! The exponent `g_k(m)` of the sign of a monomial in `R_k`.
//!
//! Write `{-1, 0, …, k}` minus the index entries of `m` for the omitted
//! subscripts. `g_k(m)` is the largest number of pairwise disjoint triples of
//! consecutive integers that fit inside the omitted subscripts.

use crate::error::{Error, Result};
use crate::monoid_ring::Monomial;

fn check(k: i64, index: &[u32]) -> Result<()> {
    let descending = index.windows(2).all(|w| w[0] > w[1]);
    let in_range = index.first().map_or(true, |&top| i64::from(top) <= k);
    if k < 0 || !descending || !in_range {
        return Err(Error::BadIndex { index: index.to_vec(), k });
    }
    Ok(())
}

/// Gap formula: the sum of `floor((λ_{j-1} - λ_j - 1) / 3)` over
/// j = 1..ℓ+1, with λ_0 = k+1 and λ_{ℓ+1} = -2.
///
/// The index is not validated.
pub fn g_of_index(k: i64, index: &[u32]) -> u32 {
    let mut prev = k + 1;
    let mut total = 0;
    for l in index.iter().map(|&l| i64::from(l)).chain(std::iter::once(-2)) {
        total += (prev - l - 1).div_euclid(3);
        prev = l;
    }
    total as u32
}

/// Counts triples run by run over the omitted subscripts.
///
/// The index is not validated.
pub fn g_of_index_direct(k: i64, index: &[u32]) -> u32 {
    let mut total = 0;
    let mut run = 0;
    for s in -1..=k {
        if index.iter().any(|&l| i64::from(l) == s) {
            total += run / 3;
            run = 0;
        } else {
            run += 1;
        }
    }
    total + run / 3
}

/// `g_k(m)` by the gap formula.
///
/// ```
/// use threelimit::combinatorics::g;
/// let m = "b6 b4 a3".parse().unwrap();
/// assert_eq!(g(6, &m).unwrap(), 1);
/// ```
pub fn g(k: i64, m: &Monomial) -> Result<u32> {
    let index = m.index();
    check(k, &index)?;
    Ok(g_of_index(k, &index))
}

/// `g_k(m)` by counting triples among the omitted subscripts.
pub fn g_direct(k: i64, m: &Monomial) -> Result<u32> {
    let index = m.index();
    check(k, &index)?;
    Ok(g_of_index_direct(k, &index))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> Monomial {
        s.parse().unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(g(5, &m("b2")).unwrap(), 2);
        assert_eq!(g(6, &m("b6 b4 a3")).unwrap(), 1);
        assert_eq!(g(6, &m("a6 b4 b2 b1 b0")).unwrap(), 0);
        assert_eq!(g_direct(5, &m("b2")).unwrap(), 2);
        assert_eq!(g_direct(6, &m("b6 b4 a3")).unwrap(), 1);
        assert_eq!(g_direct(6, &m("a6 b4 b2 b1 b0")).unwrap(), 0);
    }

    #[test]
    fn full_word_has_no_triples() {
        for k in 0..10u32 {
            let word = Monomial::new((0..=k).rev().map(crate::monoid_ring::Generator::b).collect());
            assert_eq!(g_direct(i64::from(k), &word).unwrap(), 0);
            assert_eq!(g(i64::from(k), &word).unwrap(), 0);
        }
    }

    #[test]
    fn empty_word_counts_the_whole_range() {
        // {-1, …, k} has k+2 elements
        for k in 0..20 {
            assert_eq!(g(k, &Monomial::one()).unwrap() as i64, (k + 2) / 3);
            assert_eq!(g_direct(k, &Monomial::one()).unwrap() as i64, (k + 2) / 3);
        }
    }

    #[test]
    fn formulas_agree_on_all_descending_subsets() {
        for k in 0..=12i64 {
            for mask in 0u32..(1 << (k + 1)) {
                let index: Vec<u32> = (0..=k as u32).rev().filter(|i| mask & (1 << i) != 0).collect();
                assert_eq!(g_of_index(k, &index), g_of_index_direct(k, &index), "{k} {index:?}");
            }
        }
    }

    #[test]
    fn rejects_bad_indices() {
        assert!(matches!(g(3, &m("b4")), Err(Error::BadIndex { .. })));
        assert!(matches!(g(5, &m("b1 b2")), Err(Error::BadIndex { .. })));
        assert!(matches!(g_direct(5, &m("b2 a2")), Err(Error::BadIndex { .. })));
        assert!(g(-1, &Monomial::one()).is_err());
    }
}
