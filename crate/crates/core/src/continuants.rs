//! Recurrence-built continuants.
//!
//! - `A_k = a_k A_{k-2} + b_k A_{k-1}` with `A_{-1} = 1`, `A_0 = b_0`;
//!   `B_k` by the same rule from `B_{-1} = 0`, `B_0 = 1`.
//! - `X_k = (-1 + a_k) X_{k-2} + (1 + b_k) X_{k-1}` for the numerators
//!   `P_k` (from `P_0 = b_0`, `P_1 = -1 + b_0 + a_1 + b_1 b_0`) and the
//!   denominators `Q_k` (from `Q_0 = 1`, `Q_1 = 1 + b_1`) of `K`.
//! - `R_k = -R_{k-3} + a_k (R_{k-2} + R_{k-3}) + b_k (R_{k-1} + R_{k-2})`
//!   from `R_{-3} = 0`, `R_{-2} = 1`, `R_{-1} = 0`, with `a_0 = 0`, so that
//!   `P_k = R_k + R_{k-1}`.
//!
//! New generators always enter on the left, so every monomial has a
//! strictly descending index.
//!
//! Each sequence is memoised in a [`Continuants`] table; values are computed
//! iteratively up to the largest index requested and handed out as
//! `Arc<Polynomial>`.

use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::monoid_ring::{Generator, Polynomial};

pub use crate::periodic::Periodic;

/// Default largest `k` for which polynomials are built.
pub const DEFAULT_CAP: i64 = 16;

type Step = fn(i64, &dyn Fn(i64) -> Arc<Polynomial>) -> Polynomial;

struct Memo {
    first: i64,
    values: RwLock<Vec<Arc<Polynomial>>>,
    step: Step,
}

impl Memo {
    fn new(first: i64, initial: Vec<Polynomial>, step: Step) -> Self {
        Memo { first, values: RwLock::new(initial.into_iter().map(Arc::new).collect()), step }
    }

    fn get(&self, k: i64) -> Result<Arc<Polynomial>> {
        if k < self.first {
            return Err(Error::IndexBelowStart { k, first: self.first });
        }
        let idx = (k - self.first) as usize;
        if let Some(p) = self.values.read().expect("memo lock").get(idx) {
            return Ok(Arc::clone(p));
        }
        let mut values = self.values.write().expect("memo lock");
        while values.len() <= idx {
            let next_k = self.first + values.len() as i64;
            let first = self.first;
            let snapshot = &*values;
            let prev = |j: i64| Arc::clone(&snapshot[(j - first) as usize]);
            let next = (self.step)(next_k, &prev);
            values.push(Arc::new(next));
        }
        Ok(Arc::clone(&values[idx]))
    }
}

fn a(k: i64) -> Generator {
    Generator::a(k as u32)
}

fn b(k: i64) -> Generator {
    Generator::b(k as u32)
}

fn p(s: &str) -> Polynomial {
    s.parse().expect("literal polynomial")
}

/// `c·X + g·X`, the product of the binomial `(c + g)` with `X`.
fn binomial_times(c: i64, g: Generator, x: &Polynomial) -> Polynomial {
    let mut out = x.left_mul_gen(g);
    match c {
        1 => out += x,
        -1 => out -= x,
        _ => out += x.scale(&c.into()),
    }
    out
}

fn euler_minding_step(k: i64, prev: &dyn Fn(i64) -> Arc<Polynomial>) -> Polynomial {
    prev(k - 2).left_mul_gen(a(k)) + prev(k - 1).left_mul_gen(b(k))
}

fn k_step(k: i64, prev: &dyn Fn(i64) -> Arc<Polynomial>) -> Polynomial {
    binomial_times(-1, a(k), &prev(k - 2)) + binomial_times(1, b(k), &prev(k - 1))
}

fn r_step(k: i64, prev: &dyn Fn(i64) -> Arc<Polynomial>) -> Polynomial {
    let (r1, r2, r3) = (prev(k - 1), prev(k - 2), prev(k - 3));
    let mut out = -&*r3;
    if k > 0 {
        out += (&*r2 + &*r3).left_mul_gen(a(k));
    }
    out += (&*r1 + &*r2).left_mul_gen(b(k));
    out
}

/// Memoised continuant sequences, safe to share across threads.
pub struct Continuants {
    cap: i64,
    em_numerator: Memo,
    em_denominator: Memo,
    k_numerator: Memo,
    k_denominator: Memo,
    r: Memo,
}

impl Default for Continuants {
    fn default() -> Self {
        Continuants::new(DEFAULT_CAP)
    }
}

impl Continuants {
    pub fn new(cap: i64) -> Self {
        Continuants {
            cap,
            em_numerator: Memo::new(-1, vec![Polynomial::one(), p("b0")], euler_minding_step),
            em_denominator: Memo::new(-1, vec![Polynomial::zero(), Polynomial::one()], euler_minding_step),
            k_numerator: Memo::new(0, vec![p("b0"), p("-1 + b0 + a1 + b1 b0")], k_step),
            k_denominator: Memo::new(0, vec![Polynomial::one(), p("1 + b1")], k_step),
            r: Memo::new(-3, vec![Polynomial::zero(), Polynomial::one(), Polynomial::zero()], r_step),
        }
    }

    /// The process-wide table used by the free functions of this module.
    pub fn shared() -> &'static Continuants {
        static SHARED: OnceLock<Continuants> = OnceLock::new();
        SHARED.get_or_init(Continuants::default)
    }

    pub fn cap(&self) -> i64 {
        self.cap
    }

    fn checked(&self, k: i64, first: i64) -> Result<()> {
        if k < first {
            Err(Error::IndexBelowStart { k, first })
        } else if k > self.cap {
            Err(Error::AboveCap { k, cap: self.cap })
        } else {
            Ok(())
        }
    }

    /// `A_k` of `b0 + a1/b1 + a2/b2 + ...`.
    pub fn em_numerator(&self, k: i64) -> Result<Arc<Polynomial>> {
        self.checked(k, 0)?;
        self.em_numerator.get(k)
    }

    /// `B_k` of `b0 + a1/b1 + a2/b2 + ...`.
    pub fn em_denominator(&self, k: i64) -> Result<Arc<Polynomial>> {
        self.checked(k, 0)?;
        self.em_denominator.get(k)
    }

    /// `P_k` of `K`.
    pub fn k_numerator(&self, k: i64) -> Result<Arc<Polynomial>> {
        self.checked(k, 0)?;
        self.k_numerator.get(k)
    }

    /// `Q_k` of `K`.
    pub fn k_denominator(&self, k: i64) -> Result<Arc<Polynomial>> {
        self.checked(k, 0)?;
        self.k_denominator.get(k)
    }

    /// `R_k`, defined for k ≥ −3.
    pub fn r_poly(&self, k: i64) -> Result<Arc<Polynomial>> {
        self.checked(k, -3)?;
        self.r.get(k)
    }
}

pub fn em_numerator(k: i64) -> Result<Arc<Polynomial>> {
    Continuants::shared().em_numerator(k)
}

pub fn em_denominator(k: i64) -> Result<Arc<Polynomial>> {
    Continuants::shared().em_denominator(k)
}

pub fn k_numerator(k: i64) -> Result<Arc<Polynomial>> {
    Continuants::shared().k_numerator(k)
}

pub fn k_denominator(k: i64) -> Result<Arc<Polynomial>> {
    Continuants::shared().k_denominator(k)
}

pub fn r_poly(k: i64) -> Result<Arc<Polynomial>> {
    Continuants::shared().r_poly(k)
}

/// Value of a named periodic sequence; unknown names are an error.
pub fn periodic(name: &str, k: u64) -> Result<i64> {
    Ok(name.parse::<Periodic>()?.at(k))
}
