//! Integer specializations of the closed forms, evaluated without building
//! polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::Pow;

use crate::combinatorics::{for_each_in_family_with_g, for_each_in_seq_family, Family, SeqFamily};
use crate::monoid_ring::Generator;
use crate::periodic::{chi1, sigma};

fn parity_sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Σ (-1)^{g_k(m)} w(m) over the family at `k`, where `w` sees the index.
///
/// Accumulates in `i128`; panics on overflow, which cannot happen for the
/// weights used here below k = 40.
pub fn weighted_sign_sum<W>(family: Family, k: i64, mut weight: W) -> i128
where
    W: FnMut(&[u32]) -> Option<i128>,
{
    let mut total: i128 = 0;
    let mut index = Vec::new();
    for_each_in_family_with_g(family, k, |w: &[Generator], g| {
        index.clear();
        index.extend(w.iter().map(|x| x.subscript()));
        if let Some(v) = weight(&index) {
            let v = if g % 2 == 0 { v } else { -v };
            total = total.checked_add(v).expect("weighted sum overflow");
        }
    });
    total
}

/// The weights used by the scalar identities, named so their sums can be
/// memoised.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Weight {
    One,
    LengthSign,
    TwoPowLength,
    TwoPowLengthEndingAtOne,
    OddOnlyMinusTwo,
    MinusThreeOdd,
    Pell(i64),
}

impl Weight {
    fn at(self, idx: &[u32]) -> Option<i128> {
        let l = idx.len() as u32;
        match self {
            Weight::One => Some(1),
            Weight::LengthSign => Some(if l % 2 == 0 { 1 } else { -1 }),
            Weight::TwoPowLength => (*idx.last()? > 0).then(|| 1 << l),
            Weight::TwoPowLengthEndingAtOne => (*idx.last()? == 1).then(|| 1 << (l - 1)),
            Weight::OddOnlyMinusTwo => idx.iter().all(|s| s % 2 == 1).then(|| (-2i128).pow(l)),
            Weight::MinusThreeOdd => Some((-3i128).pow(idx.iter().filter(|s| *s % 2 == 1).count() as u32)),
            Weight::Pell(k) => Some(5i128.pow(l) << (k as u32 + 1 - 2 * l)),
        }
    }
}

type SumKey = (Weight, Family, i64);

fn sum_cache() -> &'static Mutex<HashMap<SumKey, i128>> {
    static CACHE: OnceLock<Mutex<HashMap<SumKey, i128>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached_sum(weight: Weight, family: Family, k: i64) -> i128 {
    let key = (weight, family, k);
    if let Some(&v) = sum_cache().lock().expect("sum cache").get(&key) {
        return v;
    }
    let v = weighted_sign_sum(family, k, |idx| weight.at(idx));
    sum_cache().lock().expect("sum cache").insert(key, v);
    v
}

/// The weighted sums at k-1 and k.
fn two_sums(weight: Weight, family: Family, k: i64) -> i128 {
    cached_sum(weight, family, k - 1) + cached_sum(weight, family, k)
}

/// -σ(k) + (the weighted sum at k-1) + (the weighted sum at k).
fn numerator_shape(weight: Weight, family: Family, k: i64) -> i128 {
    i128::from(-sigma(k)) + two_sums(weight, family, k)
}

/// Σ over C_k of (-1)^ℓ.
pub fn c_signed_count(k: i64) -> i64 {
    let mut total = 0;
    for_each_in_seq_family(SeqFamily::C, k, |s| total += parity_sign(s.len() as i64));
    total
}

/// -χ_1(k) + Σ over D_k of (-1)^{(k-ℓ+1)/2}.
pub fn d_signed_count(k: i64) -> i64 {
    let mut total = -chi1(k);
    for_each_in_seq_family(SeqFamily::D, k, |s| total += parity_sign((k - s.len() as i64 + 1) / 2));
    total
}

/// -σ(k) + Σ_{𝒰_{k-1}} (-1)^g + Σ_{𝒰_k} (-1)^g.
pub fn u_signed_count(k: i64) -> i128 {
    numerator_shape(Weight::One, Family::U, k)
}

/// Σ_{𝒱_{k-1}} (-1)^{g+ℓ} + Σ_{𝒱_k} (-1)^{g+ℓ}.
pub fn v_signed_length_count(k: i64) -> i128 {
    two_sums(Weight::LengthSign, Family::V, k)
}

/// -σ(k) + Σ_{ℛ_{k-1}} (-1)^g + Σ_{ℛ_k} (-1)^g.
pub fn r_signed_count(k: i64) -> i128 {
    numerator_shape(Weight::One, Family::R, k)
}

/// Numbers of members of ℛ_k with sign +1 and -1.
pub fn r_sign_split(k: i64) -> (u64, u64) {
    let (mut pos, mut neg) = (0, 0);
    for_each_in_family_with_g(Family::R, k, |_, g| {
        if g % 2 == 0 {
            pos += 1;
        } else {
            neg += 1;
        }
    });
    (pos, neg)
}

/// The two Fibonacci formulas through 𝒰: the first weighs members with
/// λ_ℓ > 0 by 2^ℓ, the second members with λ_ℓ = 1 by 2^{ℓ-1}.
///
/// ```
/// use threelimit::identities::fibonacci_via_formulas;
/// assert_eq!(fibonacci_via_formulas(12), (144, 144));
/// ```
pub fn fibonacci_via_formulas(k: i64) -> (i128, i128) {
    let first = numerator_shape(Weight::TwoPowLength, Family::U, k);
    let second = two_sums(Weight::TwoPowLengthEndingAtOne, Family::U, k);
    (first, second)
}

/// -σ(k) + Σ over 𝒱^odd_{k-1} and 𝒱^odd_k of (-1)^g (-2)^ℓ; equals τ(k) F_k.
pub fn tau_fibonacci_via_v(k: i64) -> i128 {
    numerator_shape(Weight::OddOnlyMinusTwo, Family::V, k)
}

/// -σ(k) + Σ over 𝒱_{k-1} and 𝒱_k of (-1)^g (-3)^{ℓ_odd}; equals τ(k) Pell(k).
pub fn tau_pell_via_v(k: i64) -> i128 {
    numerator_shape(Weight::MinusThreeOdd, Family::V, k)
}

/// Pell(k) as -2^{k+1} σ(k) + Σ over 𝒰_{k-1} and 𝒰_k of (-1)^g 5^ℓ 2^{k+1-2ℓ}.
///
/// The exponent `k+1-2ℓ` is nonnegative since 𝒰 indices have gaps ≥ 2.
pub fn pell_via_formulas(k: i64) -> i128 {
    // the weight depends on k, so the two sums are not shared between k
    let w = Weight::Pell(k);
    let sums = weighted_sign_sum(Family::U, k - 1, |idx| w.at(idx)) + weighted_sign_sum(Family::U, k, |idx| w.at(idx));
    -(1i128 << (k + 1)) * i128::from(sigma(k)) + sums
}

/// Pell(k) as 2^{k+1} times the 𝒰 form of `C_k` at every `a_j = 5/4`.
pub fn pell_via_rational(k: i64) -> BigRational {
    let c = crate::combinatorics::combinatorial_c(k);
    let five_quarters = BigRational::new(5.into(), 4.into());
    let value = c.evaluate(|_| Some(five_quarters.clone())).expect("every generator assigned");
    value * BigRational::from_integer(BigInt::from(2).pow((k + 1) as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::{sequence, SequenceName};
    use crate::combinatorics::for_each_in_family;

    #[test]
    fn fibonacci_examples() {
        assert_eq!(fibonacci_via_formulas(0), (0, 0));
        assert_eq!(fibonacci_via_formulas(5), (5, 5));
        let fib = sequence(SequenceName::Fibonacci, 20);
        for k in 0..=20 {
            let (x, y) = fibonacci_via_formulas(k as i64);
            assert_eq!((BigInt::from(x), BigInt::from(y)), (fib[k].clone(), fib[k].clone()), "k = {k}");
        }
    }

    #[test]
    fn pell_examples() {
        assert_eq!(pell_via_formulas(1), 1);
        assert_eq!(pell_via_formulas(5), 29);
        let pell = sequence(SequenceName::Pell, 10);
        for k in 0..=10 {
            assert_eq!(BigInt::from(pell_via_formulas(k as i64)), pell[k]);
            assert_eq!(pell_via_rational(k as i64), BigRational::from_integer(pell[k].clone()));
        }
    }

    #[test]
    fn c_signed_count_at_5() {
        // (-1)^3 + 3(-1)^2 + (-1)^1
        assert_eq!(c_signed_count(5), 1);
        assert_eq!(d_signed_count(5), 1);
    }

    #[test]
    fn v_odd_nonempty_for_some_even_k() {
        let mut odd6 = Vec::new();
        for_each_in_family(Family::V, 6, |w| {
            if w.iter().all(|g| g.subscript() % 2 == 1) {
                odd6.push(w.to_vec());
            }
        });
        assert_eq!(odd6, vec![vec![Generator::b(3)]]);
    }

    #[test]
    fn sign_split_small() {
        // R_2 = a2 b0 - b2 + b2 a1 + b2 b1 b0 + b2 b0
        assert_eq!(r_sign_split(2), (4, 1));
    }
}
