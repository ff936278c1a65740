//! Counting sequences given by linear recurrences, with their generating
//! functions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};

/// The named sequences. The list is closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceName {
    /// Number of terms of `R_n`.
    R,
    /// Number of monomials in ℛ_n.
    S,
    /// Number of terms of `R_n` with every `b_j ↦ 0`.
    U,
    /// Number of monomials in 𝒰_n.
    UFamily,
    /// Number of terms of `R_n` with `b_0` and every `a_j ↦ 0`.
    Tribonacci,
    /// Number of monomials in 𝒱_n.
    VFamily,
    /// Number of terms of `P_n`.
    PSupport,
    /// |ℛ_n| + |ℛ_{n-1}|.
    PFamily,
    /// Number of terms of `C_n`.
    CSupport,
    /// |𝒰_n| + |𝒰_{n-1}|.
    CFamily,
    /// Number of terms of `G_n`.
    GSupport,
    /// |𝒱_n| + |𝒱_{n-1}|.
    GFamily,
    Jacobsthal,
    Fibonacci,
    Pell,
}

impl SequenceName {
    pub const ALL: [SequenceName; 15] = [
        SequenceName::R,
        SequenceName::S,
        SequenceName::U,
        SequenceName::UFamily,
        SequenceName::Tribonacci,
        SequenceName::VFamily,
        SequenceName::PSupport,
        SequenceName::PFamily,
        SequenceName::CSupport,
        SequenceName::CFamily,
        SequenceName::GSupport,
        SequenceName::GFamily,
        SequenceName::Jacobsthal,
        SequenceName::Fibonacci,
        SequenceName::Pell,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceName::R => "r",
            SequenceName::S => "s",
            SequenceName::U => "u",
            SequenceName::UFamily => "u_family",
            SequenceName::Tribonacci => "tribonacci",
            SequenceName::VFamily => "v_family",
            SequenceName::PSupport => "p_support",
            SequenceName::PFamily => "p_family",
            SequenceName::CSupport => "c_support",
            SequenceName::CFamily => "c_family",
            SequenceName::GSupport => "g_support",
            SequenceName::GFamily => "g_family",
            SequenceName::Jacobsthal => "jacobsthal",
            SequenceName::Fibonacci => "fibonacci",
            SequenceName::Pell => "pell",
        }
    }

    pub fn table(self) -> SequenceTable {
        let r_den = vec![1, -1, -2, -2];
        let s_den = vec![1, -1, -2, -3, 1, 2, 2];
        let u_den = vec![1, 0, -1, -2];
        let uf_den = vec![1, 0, -1, -3, 0, 1, 2];
        let t_den = vec![1, -1, -1, -1];
        let vf_den = vec![1, -1, -1, -2, 1, 1, 1];
        let (initial, num, den): (Vec<i64>, Vec<i64>, Vec<i64>) = match self {
            SequenceName::R => (vec![1, 3, 5], vec![1, 2], r_den),
            SequenceName::S => (vec![1, 2, 5, 13, 28, 65], vec![1, 1, 1, 1], s_den),
            SequenceName::U => (vec![0, 2, 0], vec![0, 2], u_den),
            SequenceName::UFamily => (vec![0, 1, 0, 2, 3, 2], vec![0, 1, 0, 1], uf_den),
            SequenceName::Tribonacci => (vec![0, 1, 1], vec![0, 1], t_den),
            SequenceName::VFamily => (vec![0, 0, 1, 2, 3, 7], vec![0, 0, 1, 1], vf_den),
            SequenceName::PSupport => (vec![1, 4, 8], vec![1, 3, 2], r_den),
            SequenceName::PFamily => (vec![1, 3, 7, 18, 41, 93], vec![1, 2, 2, 2, 1], s_den),
            SequenceName::CSupport => (vec![0, 2, 2], vec![0, 2, 2], u_den),
            SequenceName::CFamily => (vec![0, 1, 1, 2, 5, 5], vec![0, 1, 1, 1, 1], uf_den),
            SequenceName::GSupport => (vec![0, 1, 2], vec![0, 1, 1], t_den),
            SequenceName::GFamily => (vec![0, 0, 1, 3, 5, 10], vec![0, 0, 1, 2, 1], vf_den),
            SequenceName::Jacobsthal => (vec![0, 1], vec![0, 1], vec![1, -1, -2]),
            SequenceName::Fibonacci => (vec![0, 1], vec![0, 1], vec![1, -1, -1]),
            SequenceName::Pell => (vec![0, 1], vec![0, 1], vec![1, -2, -1]),
        };
        let recurrence = den[1..].iter().map(|c| -c).collect();
        SequenceTable { name: self, initial, recurrence, gf_numerator: num, gf_denominator: den }
    }
}

impl fmt::Display for SequenceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SequenceName::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| Error::UnknownName { kind: "sequence", name: s.to_string() })
    }
}

/// A constant-coefficient linear recurrence with its generating function.
///
/// `recurrence[i]` is the coefficient of `x_{n-1-i}`, so
/// `x_n = Σ recurrence[i] x_{n-1-i}` once the initial values run out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceTable {
    pub name: SequenceName,
    pub initial: Vec<i64>,
    pub recurrence: Vec<i64>,
    pub gf_numerator: Vec<i64>,
    pub gf_denominator: Vec<i64>,
}

impl SequenceTable {
    /// Values `x_0, …, x_{n_max}` from the recurrence.
    pub fn values(&self, n_max: usize) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let next = match self.initial.get(n) {
                Some(&v) => BigInt::from(v),
                None => self
                    .recurrence
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| &out[n - 1 - i] * c)
                    .sum(),
            };
            out.push(next);
        }
        out
    }

    /// Maclaurin coefficients of the generating function.
    pub fn gf_values(&self, n_max: usize) -> Result<Vec<BigInt>> {
        gf_coefficients(&self.gf_numerator, &self.gf_denominator, n_max)
    }
}

/// First `n_max + 1` values of the named sequence.
///
/// ```
/// use threelimit::identities::{sequence, SequenceName};
/// let r: Vec<i64> = sequence(SequenceName::R, 5).iter().map(|v| v.try_into().unwrap()).collect();
/// assert_eq!(r, [1, 3, 5, 13, 29, 65]);
/// ```
pub fn sequence(name: SequenceName, n_max: usize) -> Vec<BigInt> {
    name.table().values(n_max)
}

/// Maclaurin coefficients `0..=n_max` of `num / den` by long division over ℤ.
///
/// Fails when `den[0] = 0`, or when some coefficient is not an integer
/// (possible only if `den[0] ≠ ±1`).
pub fn gf_coefficients(num: &[i64], den: &[i64], n_max: usize) -> Result<Vec<BigInt>> {
    let d0 = BigInt::from(*den.first().unwrap_or(&0));
    if d0.is_zero() {
        return Err(Error::SingularDenominator);
    }
    let mut out: Vec<BigInt> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let mut rest = BigInt::from(*num.get(n).unwrap_or(&0));
        for (i, &d) in den.iter().enumerate().skip(1).take(n) {
            rest -= &out[n - i] * d;
        }
        let (q, r) = rest.div_rem(&d0);
        if !r.is_zero() {
            return Err(Error::NonIntegralSeries(n));
        }
        out.push(q);
    }
    Ok(out)
}

/// Product of two integer polynomials given by coefficient vectors.
pub fn poly_mul(x: &[i64], y: &[i64]) -> Vec<i64> {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// The pairs whose generating functions differ by a factor `1 + x`.
pub const ONE_PLUS_X_PAIRS: [(SequenceName, SequenceName); 6] = [
    (SequenceName::R, SequenceName::PSupport),
    (SequenceName::S, SequenceName::PFamily),
    (SequenceName::U, SequenceName::CSupport),
    (SequenceName::UFamily, SequenceName::CFamily),
    (SequenceName::Tribonacci, SequenceName::GSupport),
    (SequenceName::VFamily, SequenceName::GFamily),
];

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| x.try_into().unwrap()).collect()
    }

    #[test]
    fn stated_initial_values() {
        assert_eq!(ints(&sequence(SequenceName::R, 5)), [1, 3, 5, 13, 29, 65]);
        assert_eq!(ints(&sequence(SequenceName::S, 5)), [1, 2, 5, 13, 28, 65]);
        assert_eq!(ints(&sequence(SequenceName::PSupport, 2)), [1, 4, 8]);
        assert_eq!(ints(&sequence(SequenceName::Jacobsthal, 6)), [0, 1, 1, 3, 5, 11, 21]);
        assert_eq!(ints(&sequence(SequenceName::Fibonacci, 7)), [0, 1, 1, 2, 3, 5, 8, 13]);
        assert_eq!(ints(&sequence(SequenceName::Pell, 5)), [0, 1, 2, 5, 12, 29]);
        assert_eq!(ints(&sequence(SequenceName::Tribonacci, 6)), [0, 1, 1, 2, 4, 7, 13]);
    }

    #[test]
    fn r_continues_to_k14() {
        let r = ints(&sequence(SequenceName::R, 14));
        assert_eq!(
            r,
            [1, 3, 5, 13, 29, 65, 149, 337, 765, 1737, 3941, 8945, 20301, 46073, 104565]
        );
    }

    #[test]
    fn division_examples() {
        assert_eq!(ints(&gf_coefficients(&[1, 2], &[1, -1, -2, -2], 3).unwrap()), [1, 3, 5, 13]);
        assert_eq!(ints(&gf_coefficients(&[0, 1], &[1, -1, -1, -1], 5).unwrap()), [0, 1, 1, 2, 4, 7]);
        assert_eq!(ints(&gf_coefficients(&[1], &[1, -1], 4).unwrap()), [1; 5]);
        assert_eq!(gf_coefficients(&[1], &[0, 1], 3), Err(Error::SingularDenominator));
        assert_eq!(gf_coefficients(&[1], &[2, 1], 3), Err(Error::NonIntegralSeries(0)));
    }

    #[test]
    fn every_gf_reproduces_its_recurrence() {
        for name in SequenceName::ALL {
            let t = name.table();
            assert_eq!(t.gf_values(40).unwrap(), t.values(40), "{name}");
        }
    }

    #[test]
    fn printed_numerators_do_not_match() {
        // the misprinted forms 1-x+x^2+x^3 and x+x^2+x^3
        let s = SequenceName::S.table();
        assert_ne!(gf_coefficients(&[1, -1, 1, 1], &s.gf_denominator, 5).unwrap(), s.values(5));
        let c = SequenceName::CFamily.table();
        assert_ne!(gf_coefficients(&[0, 1, 1, 1], &c.gf_denominator, 5).unwrap(), c.values(5));
    }

    #[test]
    fn one_plus_x_relation() {
        for (base, lifted) in ONE_PLUS_X_PAIRS {
            let (b, l) = (base.table(), lifted.table());
            assert_eq!(b.gf_denominator, l.gf_denominator);
            assert_eq!(poly_mul(&[1, 1], &b.gf_numerator), l.gf_numerator, "{base} -> {lifted}");
        }
    }

    #[test]
    fn names_round_trip() {
        for name in SequenceName::ALL {
            assert_eq!(name.name().parse::<SequenceName>().unwrap(), name);
        }
        assert!("lucas".parse::<SequenceName>().is_err());
    }
}
