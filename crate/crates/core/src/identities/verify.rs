//! Mechanical verification of the identities between the recurrence side and
//! the combinatorial side.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;
use rayon::prelude::*;
use serde::Serialize;

use super::integer::{
    c_signed_count, d_signed_count, fibonacci_via_formulas, pell_via_formulas, pell_via_rational,
    r_sign_split, r_signed_count, tau_fibonacci_via_v, tau_pell_via_v, u_signed_count,
    v_signed_length_count,
};
use super::sequences::{sequence, SequenceName, ONE_PLUS_X_PAIRS};
use crate::combinatorics::{
    combinatorial_c, combinatorial_d, combinatorial_g, combinatorial_h, combinatorial_p,
    combinatorial_q, combinatorial_r, em_c, em_g, enumerate_family, family_sum, Family,
};
use crate::continuants::{em_numerator, k_denominator, k_numerator, r_poly};
use crate::error::{Error, Result};
use crate::monoid_ring::substitution::{delta, kill_a_and_b0, kill_b, phi};
use crate::monoid_ring::Polynomial;
use crate::periodic::{chi1, rho, sigma, tau, upsilon};

/// Every identity the verifier knows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// `R_k` = ρ(k) + Σ_{ℛ_k} (-1)^{g_k(m)} m.
    PropR,
    /// `P_k` and `Q_k` from ℛ_{k-1}, ℛ_k, ℛ_{k+1}.
    EmAnalogue,
    /// `A_k` = Σ_{𝒜_k} m.
    NoncomEm,
    /// Σ_{𝒜_k} δ(m) = the ℛ form of `P_k` = `P_k`.
    DeltaBridge,
    /// Σ_{C_k} Π(-1 + a_λ) = the 𝒰 form of `C_k`.
    CGeneral,
    /// Σ_{C_k} (-1)^ℓ = -σ(k).
    CSpec1,
    /// -σ(k) + Σ_{𝒰_{k-1}} (-1)^g + Σ_{𝒰_k} (-1)^g = 0.
    CSpec2,
    /// -χ_1(k) + Σ_{D_k} ± Π(1 + b_λ) = the 𝒱 form of `G_k`.
    DGeneral,
    /// -χ_1(k) + Σ_{D_k} (-1)^{(k-ℓ+1)/2} = -σ(k).
    DSpec1,
    /// -χ_1(k) + σ(k) = Σ_{𝒱_{k-1}} (-1)^{g+ℓ} + Σ_{𝒱_k} (-1)^{g+ℓ}.
    DSpec2,
    /// Both Fibonacci formulas through 𝒰.
    FibU,
    /// τ(k) F_k through 𝒱^odd.
    FibV,
    /// Pell(k) through 𝒰, integer and rational forms.
    PellU,
    /// Pell(k) ≡ υ(k) (mod 5).
    PellMod5,
    /// τ(k) Pell(k) through 𝒱.
    PellV,
    /// Signed term counts of `R_k` against the Jacobsthal numbers and 2^k.
    Jacobsthal,
    /// Term counts of `R_k` and sizes of ℛ_k.
    CountsR,
    /// Term counts of `R_k` at `b ↦ 0` and sizes of 𝒰_k.
    CountsU,
    /// Term counts of `R_k` at `a ↦ 0, b_0 ↦ 0` and sizes of 𝒱_k.
    CountsV,
    /// Term counts of `P_k`, `C_k`, `G_k`, family unions, and the `1 + x`
    /// relation between generating functions.
    CountsP,
    /// `Q_k = -φ(P_{k+1})`.
    Num2Den,
    /// `P_k = R_k + R_{k-1}`.
    RFromP,
    /// `C, D, G, H` are `P, Q` under the two specializations.
    Specializations,
    /// -σ(k) = Σ_{C_k} (-1)^ℓ = -χ_1(k) + Σ_{D_k} (-1)^{(k-ℓ+1)/2}, and the
    /// trigonometric form of -σ.
    ResExample,
}

impl Identity {
    pub const ALL: [Identity; 24] = [
        Identity::PropR,
        Identity::EmAnalogue,
        Identity::NoncomEm,
        Identity::DeltaBridge,
        Identity::CGeneral,
        Identity::CSpec1,
        Identity::CSpec2,
        Identity::DGeneral,
        Identity::DSpec1,
        Identity::DSpec2,
        Identity::FibU,
        Identity::FibV,
        Identity::PellU,
        Identity::PellMod5,
        Identity::PellV,
        Identity::Jacobsthal,
        Identity::CountsR,
        Identity::CountsU,
        Identity::CountsV,
        Identity::CountsP,
        Identity::Num2Den,
        Identity::RFromP,
        Identity::Specializations,
        Identity::ResExample,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::PropR => "prop_R",
            Identity::EmAnalogue => "em_analogue",
            Identity::NoncomEm => "noncom_em",
            Identity::DeltaBridge => "delta_bridge",
            Identity::CGeneral => "c_general",
            Identity::CSpec1 => "c_spec1",
            Identity::CSpec2 => "c_spec2",
            Identity::DGeneral => "d_general",
            Identity::DSpec1 => "d_spec1",
            Identity::DSpec2 => "d_spec2",
            Identity::FibU => "fib_U",
            Identity::FibV => "fib_V",
            Identity::PellU => "pell_U",
            Identity::PellMod5 => "pell_mod5",
            Identity::PellV => "pell_V",
            Identity::Jacobsthal => "jacobsthal",
            Identity::CountsR => "counts_R",
            Identity::CountsU => "counts_U",
            Identity::CountsV => "counts_V",
            Identity::CountsP => "counts_P",
            Identity::Num2Den => "num2den",
            Identity::RFromP => "r_from_p",
            Identity::Specializations => "specializations",
            Identity::ResExample => "res_example",
        }
    }

    /// The largest `k` checked when none is given.
    pub fn default_kmax(self) -> i64 {
        match self {
            Identity::DeltaBridge => 11,
            Identity::Specializations => 12,
            Identity::PropR
            | Identity::EmAnalogue
            | Identity::NoncomEm
            | Identity::CGeneral
            | Identity::DGeneral
            | Identity::Num2Den
            | Identity::RFromP => 13,
            Identity::CountsR | Identity::CountsU | Identity::CountsV | Identity::CountsP => 14,
            Identity::Jacobsthal => 20,
            Identity::PellMod5 => 60,
            Identity::CSpec1
            | Identity::CSpec2
            | Identity::DSpec1
            | Identity::DSpec2
            | Identity::FibU
            | Identity::FibV
            | Identity::PellU
            | Identity::PellV
            | Identity::ResExample => 30,
        }
    }

    /// Largest `k` accepted: polynomial identities are bounded by the
    /// construction cap of the shared continuant table.
    pub fn max_kmax(self) -> i64 {
        let cap = crate::continuants::DEFAULT_CAP;
        match self {
            Identity::PropR
            | Identity::NoncomEm
            | Identity::DeltaBridge
            | Identity::CGeneral
            | Identity::DGeneral
            | Identity::RFromP
            | Identity::CountsR
            | Identity::CountsU
            | Identity::CountsV
            | Identity::CountsP => cap,
            Identity::EmAnalogue | Identity::Num2Den | Identity::Specializations => cap - 1,
            Identity::Jacobsthal => 24,
            Identity::PellMod5 => 500,
            _ => 36,
        }
    }

    /// Checks the identity at one `k`; `Some((lhs, rhs))` on failure.
    pub fn check(self, k: i64) -> Result<Option<(String, String)>> {
        let out = match self {
            Identity::PropR => poly_eq(&*r_poly(k)?, &combinatorial_r(k)).or_else(|| support_and_signs(k)),
            Identity::EmAnalogue => {
                let (p, q) = (k_numerator(k)?, k_denominator(k)?);
                poly_eq(&p, &combinatorial_p(k)).or_else(|| poly_eq(&q, &combinatorial_q(k)))
            }
            Identity::NoncomEm => poly_eq(&*em_numerator(k)?, &family_sum(Family::A, k)),
            Identity::DeltaBridge => {
                let p = k_numerator(k)?;
                let bridged = family_sum(Family::A, k).substitute(delta);
                poly_eq(&bridged, &combinatorial_p(k)).or_else(|| poly_eq(&bridged, &p))
            }
            Identity::CGeneral => {
                let specialized = k_numerator(k)?.substitute(kill_b);
                let lhs = em_c(k);
                poly_eq(&lhs, &combinatorial_c(k)).or_else(|| poly_eq(&lhs, &specialized))
            }
            Identity::CSpec1 => int_eq(c_signed_count(k), -sigma(k)),
            Identity::CSpec2 => int_eq(u_signed_count(k), 0),
            Identity::DGeneral => {
                let specialized = k_numerator(k)?.substitute(kill_a_and_b0);
                let lhs = em_g(k);
                poly_eq(&lhs, &combinatorial_g(k)).or_else(|| poly_eq(&lhs, &specialized))
            }
            Identity::DSpec1 => int_eq(d_signed_count(k), -sigma(k)),
            Identity::DSpec2 => int_eq(-chi1(k) + sigma(k), v_signed_length_count(k)),
            Identity::FibU => {
                let f = fib(k);
                let (x, y) = fibonacci_via_formulas(k);
                int_eq(x, f.clone()).or_else(|| int_eq(y, f))
            }
            Identity::FibV => int_eq(tau(k) * fib(k), tau_fibonacci_via_v(k)),
            Identity::PellU => {
                let p = pell(k);
                // the rational form expands C_k in full; its cost grows like |𝒰_k|²
                int_eq(pell_via_formulas(k), p.clone()).or_else(|| {
                    (k <= RATIONAL_PELL_KMAX)
                        .then(|| rational_eq(pell_via_rational(k), BigRational::from_integer(p)))
                        .flatten()
                })
            }
            Identity::PellMod5 => {
                let p = pell(k);
                let via_sigma = -BigInt::from(2).pow((k + 1) as u32) * sigma(k);
                int_eq(mod5(&p), upsilon(k)).or_else(|| int_eq(mod5(&via_sigma), upsilon(k)))
            }
            Identity::PellV => int_eq(tau(k) * pell(k), tau_pell_via_v(k)),
            Identity::Jacobsthal => check_jacobsthal(k),
            Identity::CountsR => {
                let r = seq_at(SequenceName::R, k);
                let s = seq_at(SequenceName::S, k);
                int_eq(r_poly(k)?.len(), r.clone())
                    .or_else(|| int_eq(family_size(Family::R, k), s.clone()))
                    .or_else(|| int_eq(s, r - rho(k).abs()))
            }
            Identity::CountsU => int_eq(r_poly(k)?.substitute(kill_b).len(), seq_at(SequenceName::U, k))
                .or_else(|| int_eq(family_size(Family::U, k), seq_at(SequenceName::UFamily, k))),
            Identity::CountsV => {
                int_eq(r_poly(k)?.substitute(kill_a_and_b0).len(), seq_at(SequenceName::Tribonacci, k))
                    .or_else(|| int_eq(family_size(Family::V, k), seq_at(SequenceName::VFamily, k)))
            }
            Identity::CountsP => check_counts_p(k)?,
            Identity::Num2Den => poly_eq(&*k_denominator(k)?, &-k_numerator(k + 1)?.substitute(phi)),
            Identity::RFromP => {
                let sum = &*r_poly(k)? + &*r_poly(k - 1)?;
                poly_eq(&*k_numerator(k)?, &sum)
            }
            Identity::Specializations => {
                let p = k_numerator(k)?;
                let q = k_denominator(k)?;
                poly_eq(&p.substitute(kill_b), &combinatorial_c(k))
                    .or_else(|| poly_eq(&q.substitute(kill_b), &combinatorial_d(k)))
                    .or_else(|| poly_eq(&p.substitute(kill_a_and_b0), &combinatorial_g(k)))
                    .or_else(|| poly_eq(&q.substitute(kill_a_and_b0), &combinatorial_h(k)))
            }
            Identity::ResExample => {
                let trig = -2.0 * 3f64.sqrt() / 3.0 * (k as f64 * std::f64::consts::PI / 3.0).sin();
                let c = c_signed_count(k);
                if (trig - c as f64).abs() > TRIG_TOLERANCE {
                    Some((format!("{trig}"), c.to_string()))
                } else {
                    int_eq(c, -sigma(k)).or_else(|| int_eq(d_signed_count(k), c))
                }
            }
        };
        Ok(out)
    }
}

/// Largest `k` at which `pell_U` also checks the (5/4)-rational form.
pub const RATIONAL_PELL_KMAX: i64 = 20;

/// Absolute tolerance for the floating-point form -2√3/3 · sin(kπ/3).
pub const TRIG_TOLERANCE: f64 = 1e-9;

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::UnknownName { kind: "identity", name: s.to_string() })
    }
}

fn poly_eq(lhs: &Polynomial, rhs: &Polynomial) -> Option<(String, String)> {
    (lhs != rhs).then(|| (lhs.to_string(), rhs.to_string()))
}

fn int_eq(lhs: impl Into<BigInt>, rhs: impl Into<BigInt>) -> Option<(String, String)> {
    let (l, r) = (lhs.into(), rhs.into());
    (l != r).then(|| (l.to_string(), r.to_string()))
}

fn rational_eq(lhs: BigRational, rhs: BigRational) -> Option<(String, String)> {
    (lhs != rhs).then(|| (lhs.to_string(), rhs.to_string()))
}

fn mod5(x: &BigInt) -> BigInt {
    ((x % 5) + 5) % 5
}

fn seq_at(name: SequenceName, k: i64) -> BigInt {
    sequence(name, k as usize).pop().expect("non-empty")
}

fn fib(k: i64) -> BigInt {
    seq_at(SequenceName::Fibonacci, k)
}

fn pell(k: i64) -> BigInt {
    seq_at(SequenceName::Pell, k)
}

fn family_size(family: Family, k: i64) -> usize {
    let mut n = 0;
    crate::combinatorics::for_each_in_family(family, k, |_| n += 1);
    n
}

/// Support of `R_k - ρ(k)` is ℛ_k, with the coefficient of `m` equal to
/// (-1)^{g_k(m)}.
fn support_and_signs(k: i64) -> Option<(String, String)> {
    let r = r_poly(k).ok()?;
    let without_constant = r.retain(|m| !m.is_one());
    let family = enumerate_family(Family::R, k);
    let support: std::collections::BTreeSet<_> = without_constant.support().cloned().collect();
    if support != family {
        return Some((format!("{} terms", support.len()), format!("{} members", family.len())));
    }
    for (m, c) in without_constant.terms() {
        let g = crate::combinatorics::g(k, m).ok()?;
        let expected = if g % 2 == 0 { 1 } else { -1 };
        if *c != BigInt::from(expected) {
            return Some((format!("{c} {m}"), format!("{expected} {m}")));
        }
    }
    None
}

fn sign_split_cache() -> &'static Mutex<HashMap<i64, (u64, u64)>> {
    static CACHE: std::sync::OnceLock<Mutex<HashMap<i64, (u64, u64)>>> = std::sync::OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Positive and negative term counts of `R_k`, constant included, from the
/// enumeration of ℛ_k.
fn term_split(k: i64) -> (u64, u64) {
    if let Some(&hit) = sign_split_cache().lock().expect("cache").get(&k) {
        return hit;
    }
    let (mut p, mut n) = r_sign_split(k);
    match rho(k) {
        1 => p += 1,
        -1 => n += 1,
        _ => {}
    }
    sign_split_cache().lock().expect("cache").insert(k, (p, n));
    (p, n)
}

fn check_jacobsthal(k: i64) -> Option<(String, String)> {
    let (p, n) = term_split(k);
    let j = seq_at(SequenceName::Jacobsthal, k + 1);
    let fails = int_eq(i128::from(p) - i128::from(n), j)
        .or_else(|| int_eq(p + n, seq_at(SequenceName::R, k)))
        .or_else(|| int_eq(r_signed_count(k), BigInt::from(2).pow(k as u32)));
    if fails.is_some() {
        return fails;
    }
    if k <= crate::continuants::DEFAULT_CAP {
        if let Ok(r) = r_poly(k) {
            let (pp, nn) = r.sign_counts();
            if (pp as u64, nn as u64) != (p, n) {
                return Some((format!("({pp}, {nn})"), format!("({p}, {n})")));
            }
        }
    }
    if k >= 3 {
        let (p1, n1) = term_split(k - 1);
        let (p2, n2) = term_split(k - 2);
        let (p3, n3) = term_split(k - 3);
        return int_eq(n, p3 + n3 + 2 * n2 + n1).or_else(|| int_eq(p, n3 + p3 + 2 * p2 + p1));
    }
    None
}

fn check_counts_p(k: i64) -> Result<Option<(String, String)>> {
    let p = k_numerator(k)?;
    let union = |f: Family| family_size(f, k) + family_size(f, k - 1);
    let out = int_eq(p.len(), seq_at(SequenceName::PSupport, k))
        .or_else(|| int_eq(union(Family::R), seq_at(SequenceName::PFamily, k)))
        .or_else(|| int_eq(p.substitute(kill_b).len(), seq_at(SequenceName::CSupport, k)))
        .or_else(|| int_eq(union(Family::U), seq_at(SequenceName::CFamily, k)))
        .or_else(|| int_eq(p.substitute(kill_a_and_b0).len(), seq_at(SequenceName::GSupport, k)))
        .or_else(|| int_eq(union(Family::V), seq_at(SequenceName::GFamily, k)))
        .or_else(|| {
            ONE_PLUS_X_PAIRS.iter().find_map(|(base, lifted)| {
                let (b, l) = (base.table(), lifted.table());
                let lifted_num = super::sequences::poly_mul(&[1, 1], &b.gf_numerator);
                (lifted_num != l.gf_numerator || b.gf_denominator != l.gf_denominator)
                    .then(|| (format!("(1+x)·{base}"), lifted.to_string()))
            })
        });
    Ok(out)
}

/// A failed check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub k: i64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
}

/// The outcome of checking one identity over `0..=k_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub k_checked: [i64; 2],
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<Failure>,
}

impl VerificationReport {
    pub fn is_verified(&self) -> bool {
        self.status == Status::Verified
    }
}

/// Checks `identity` for every k in `0..=k_max`.
///
/// ```
/// use threelimit::identities::{verify, Identity};
/// let report = verify(Identity::CSpec1, 30).unwrap();
/// assert!(report.is_verified());
/// assert_eq!(
///     serde_json::to_string(&report).unwrap(),
///     r#"{"identity":"c_spec1","k_checked":[0,30],"status":"verified"}"#
/// );
/// ```
pub fn verify(identity: Identity, k_max: i64) -> Result<VerificationReport> {
    if k_max < 0 {
        return Err(Error::IndexBelowStart { k: k_max, first: 0 });
    }
    if k_max > identity.max_kmax() {
        return Err(Error::AboveCap { k: k_max, cap: identity.max_kmax() });
    }
    let results: Vec<(i64, Option<(String, String)>)> = (0..=k_max)
        .into_par_iter()
        .map(|k| identity.check(k).map(|r| (k, r)))
        .collect::<Result<_>>()?;
    let first_failure = results
        .into_iter()
        .find_map(|(k, r)| r.map(|(lhs, rhs)| Failure { k, lhs, rhs }));
    Ok(VerificationReport {
        identity: identity.name().to_string(),
        k_checked: [0, k_max],
        status: if first_failure.is_some() { Status::Failed } else { Status::Verified },
        first_failure,
    })
}

/// Every identity at its default range, in [`Identity::ALL`] order.
pub fn verify_all() -> Result<Vec<VerificationReport>> {
    Identity::ALL
        .par_iter()
        .map(|&i| verify(i, i.default_kmax()))
        .collect()
}
