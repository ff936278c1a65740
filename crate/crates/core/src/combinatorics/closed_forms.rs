use num_bigint::BigInt;

use super::family::{for_each_in_family, Family};
use super::seq_family::{for_each_in_seq_family, SeqFamily};
use super::sign::g_of_index;
use crate::monoid_ring::{Generator, Monomial, Polynomial};
use crate::periodic::{chi1, rho, sigma};

fn sign(exponent: u32) -> BigInt {
    if exponent % 2 == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

fn index_of(word: &[Generator]) -> Vec<u32> {
    word.iter().map(|g| g.subscript()).collect()
}

/// Σ m over the family at `k`, every coefficient 1.
pub fn family_sum(family: Family, k: i64) -> Polynomial {
    let mut out = Polynomial::zero();
    for_each_in_family(family, k, |w| out.add_term(Monomial::new(w.to_vec()), BigInt::from(1)));
    out
}

/// Σ (-1)^{g_k(m)} m over the family at `k`.
pub fn signed_family_sum(family: Family, k: i64) -> Polynomial {
    let mut out = Polynomial::zero();
    for_each_in_family(family, k, |w| {
        out.add_term(Monomial::new(w.to_vec()), sign(g_of_index(k, &index_of(w))));
    });
    out
}

/// Σ (-1)^{g_k(m)} φ(m) over members of the family at `k` with λ_ℓ > 1.
///
/// On such words φ lowers every subscript by one.
pub fn signed_phi_family_sum(family: Family, k: i64) -> Polynomial {
    let mut out = Polynomial::zero();
    for_each_in_family(family, k, |w| {
        if w.last().map_or(true, |g| g.subscript() <= 1) {
            return;
        }
        let lowered = w.iter().map(|g| g.shifted(-1).expect("subscript ≥ 2")).collect();
        out.add_term(Monomial::new(lowered), sign(g_of_index(k, &index_of(w))));
    });
    out
}

fn numerator_form(family: Family, k: i64) -> Polynomial {
    Polynomial::constant(-sigma(k)) + signed_family_sum(family, k - 1) + signed_family_sum(family, k)
}

fn denominator_form(family: Family, k: i64) -> Polynomial {
    Polynomial::constant(sigma(k + 1))
        - signed_phi_family_sum(family, k)
        - signed_phi_family_sum(family, k + 1)
}

/// ρ(k) + Σ_{m ∈ ℛ_k} (-1)^{g_k(m)} m.
///
/// ```
/// use threelimit::combinatorics::combinatorial_r;
/// assert_eq!(combinatorial_r(1).to_string(), "-1 + a1 + b1 b0");
/// ```
pub fn combinatorial_r(k: i64) -> Polynomial {
    Polynomial::constant(rho(k)) + signed_family_sum(Family::R, k)
}

/// The numerator `P_k` assembled from ℛ_{k-1} and ℛ_k.
pub fn combinatorial_p(k: i64) -> Polynomial {
    numerator_form(Family::R, k)
}

/// The denominator `Q_k` assembled from ℛ_k and ℛ_{k+1}.
pub fn combinatorial_q(k: i64) -> Polynomial {
    denominator_form(Family::R, k)
}

/// `C_k`, the numerator when every `b_j` is 0.
pub fn combinatorial_c(k: i64) -> Polynomial {
    numerator_form(Family::U, k)
}

/// `D_k`, the denominator when every `b_j` is 0.
pub fn combinatorial_d(k: i64) -> Polynomial {
    denominator_form(Family::U, k)
}

/// `G_k`, the numerator when `b_0` and every `a_j` are 0.
pub fn combinatorial_g(k: i64) -> Polynomial {
    numerator_form(Family::V, k)
}

/// `H_k`, the denominator when `b_0` and every `a_j` are 0.
pub fn combinatorial_h(k: i64) -> Polynomial {
    denominator_form(Family::V, k)
}

fn expand_product(seq: &[u32], factor: impl Fn(u32) -> Polynomial) -> Polynomial {
    seq.iter().fold(Polynomial::one(), |acc, &l| acc * factor(l))
}

/// Σ over C_k of (-1 + a_{λ_1}) ⋯ (-1 + a_{λ_ℓ}).
pub fn em_c(k: i64) -> Polynomial {
    let mut out = Polynomial::zero();
    for_each_in_seq_family(SeqFamily::C, k, |seq| {
        out += expand_product(seq, |l| Polynomial::from(Generator::a(l)) - Polynomial::one());
    });
    out
}

/// -χ_1(k) + Σ over D_k of (-1)^{(k-ℓ+1)/2} (1 + b_{λ_1}) ⋯ (1 + b_{λ_ℓ}).
pub fn em_g(k: i64) -> Polynomial {
    let mut out = Polynomial::constant(-chi1(k));
    for_each_in_seq_family(SeqFamily::D, k, |seq| {
        let half = (k - seq.len() as i64 + 1) / 2;
        let term = expand_product(seq, |l| Polynomial::from(Generator::b(l)) + Polynomial::one());
        out += term.scale(&sign(half.rem_euclid(2) as u32));
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::continuants::{k_denominator, k_numerator, r_poly};
    use crate::monoid_ring::substitution::{kill_a_and_b0, kill_b};

    fn poly(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn small_r() {
        assert_eq!(combinatorial_r(0), poly("b0"));
        assert_eq!(combinatorial_r(1), poly("-1 + a1 + b1 b0"));
        assert_eq!(combinatorial_r(-1), Polynomial::zero());
    }

    #[test]
    fn r_matches_recurrence() {
        for k in 0..=9 {
            assert_eq!(combinatorial_r(k), *r_poly(k).unwrap(), "k = {k}");
        }
    }

    #[test]
    fn p_and_q_match_recurrence() {
        assert_eq!(combinatorial_p(0), poly("b0"));
        assert_eq!(combinatorial_q(0), Polynomial::one());
        for k in 0..=8 {
            assert_eq!(combinatorial_p(k), *k_numerator(k).unwrap(), "P k = {k}");
            assert_eq!(combinatorial_q(k), *k_denominator(k).unwrap(), "Q k = {k}");
        }
    }

    #[test]
    fn c5_listing() {
        assert_eq!(combinatorial_c(5), poly("1 + a4 a1 - a4 - a1 + a5 a3 a1 - a5 a3"));
        assert_eq!(em_c(5), combinatorial_c(5));
        assert_eq!(em_c(1), poly("-1 + a1"));
        assert!(combinatorial_c(0).is_zero());
    }

    #[test]
    fn specializations_match_recurrence() {
        for k in 0..=12 {
            let p = k_numerator(k).unwrap();
            let q = k_denominator(k).unwrap();
            assert_eq!(combinatorial_c(k), p.substitute(kill_b), "C k = {k}");
            assert_eq!(combinatorial_d(k), q.substitute(kill_b), "D k = {k}");
            assert_eq!(combinatorial_g(k), p.substitute(kill_a_and_b0), "G k = {k}");
            assert_eq!(combinatorial_h(k), q.substitute(kill_a_and_b0), "H k = {k}");
        }
    }

    #[test]
    fn euler_minding_sides_match() {
        for k in 0..=12 {
            assert_eq!(em_c(k), combinatorial_c(k), "C k = {k}");
            assert_eq!(em_g(k), combinatorial_g(k), "G k = {k}");
        }
        assert_eq!(em_g(1), Polynomial::constant(-1));
    }

    #[test]
    fn family_sum_is_unsigned() {
        let s = family_sum(Family::A, 1);
        assert_eq!(s, poly("b1 b0 + a1"));
    }
}
