use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Generator, IndexVectors, Monomial};
use crate::error::{Error, Result};

/// A finite ℤ-linear combination of monomials.
///
/// No stored coefficient is zero, so the key set is exactly the support.
/// Terms iterate in the canonical monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn monomial(m: Monomial) -> Self {
        Polynomial::term(1, m)
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Collects terms, summing coefficients of repeated monomials.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
        C: Into<BigInt>,
    {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms, i.e. |supp(P)|.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Coefficient of ε (zero when ε is absent).
    pub fn constant_of(&self) -> BigInt {
        self.coefficient(&Monomial::one())
    }

    /// Index vectors of every monomial in the support, in term order.
    pub fn indices(&self) -> Vec<IndexVectors> {
        self.terms.keys().map(Monomial::indices).collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let terms = self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect();
        Polynomial { terms }
    }

    /// `g · P`: every word gains `g` on the left.
    pub fn left_mul_gen(&self, g: Generator) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.prepend(g), c.clone())).collect();
        Polynomial { terms }
    }

    /// `P · g`
    pub fn right_mul_gen(&self, g: Generator) -> Polynomial {
        let gm = Monomial::from(g);
        let terms = self.terms.iter().map(|(m, c)| (m.concat(&gm), c.clone())).collect();
        Polynomial { terms }
    }

    /// Applies the ring homomorphism determined by `image` on generators.
    ///
    /// `image(g) == None` leaves `g` fixed. Each word is replaced by the
    /// ordered product of its letters' images and the result is collected.
    pub fn substitute<F>(&self, image: F) -> Polynomial
    where
        F: Fn(Generator) -> Option<Polynomial>,
    {
        let mut cache: HashMap<Generator, Polynomial> = HashMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(c.clone());
            for &g in m.generators() {
                let img = cache
                    .entry(g)
                    .or_insert_with(|| image(g).unwrap_or_else(|| Polynomial::from(g)));
                acc = &acc * &*img;
                if acc.is_zero() {
                    break;
                }
            }
            out += acc;
        }
        out
    }

    /// [`substitute`](Self::substitute) driven by an explicit map.
    pub fn substitute_map(&self, images: &HashMap<Generator, Polynomial>) -> Polynomial {
        self.substitute(|g| images.get(&g).cloned())
    }

    /// Exact value under a scalar assignment. Scalars commute, so word
    /// order plays no role here.
    pub fn evaluate<F>(&self, value: F) -> Result<BigRational>
    where
        F: Fn(Generator) -> Option<BigRational>,
    {
        let mut cache: HashMap<Generator, BigRational> = HashMap::new();
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut prod = BigRational::from_integer(c.clone());
            for &g in m.generators() {
                let v = match cache.get(&g) {
                    Some(v) => v.clone(),
                    None => {
                        let v = value(g).ok_or(Error::Unassigned(g))?;
                        cache.insert(g, v.clone());
                        v
                    }
                };
                prod *= v;
            }
            total += prod;
        }
        Ok(total)
    }

    pub fn evaluate_map(&self, values: &HashMap<Generator, BigRational>) -> Result<BigRational> {
        self.evaluate(|g| values.get(&g).cloned())
    }

    /// Specialises to a univariate polynomial in q, each generator going to
    /// `c·q^e` as given by `image`. Returns coefficients by ascending power.
    pub fn evaluate_q<F>(&self, image: F) -> Result<Vec<BigInt>>
    where
        F: Fn(Generator) -> Option<(BigInt, usize)>,
    {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut exp = 0usize;
            for &g in m.generators() {
                let (gc, ge) = image(g).ok_or(Error::Unassigned(g))?;
                coef *= gc;
                exp += ge;
            }
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, BigInt::zero());
            }
            coeffs[exp] += coef;
        }
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Ok(coeffs)
    }

    /// Number of terms with positive and negative coefficient.
    pub fn sign_counts(&self) -> (usize, usize) {
        let pos = self.terms.values().filter(|c| c.is_positive()).count();
        (pos, self.terms.len() - pos)
    }

    /// Drops every term whose monomial fails `keep`.
    pub fn retain<F: FnMut(&Monomial) -> bool>(&self, mut keep: F) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| keep(m))
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Polynomial { terms }
    }
}

impl From<Generator> for Polynomial {
    fn from(g: Generator) -> Self {
        Polynomial::monomial(Monomial::from(g))
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::monomial(m)
    }
}

impl AddAssign<Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = std::mem::replace(self, rhs);
            for (m, c) in lhs.terms {
                self.add_term(m, c);
            }
        } else {
            for (m, c) in rhs.terms {
                self.add_term(m, c);
            }
        }
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl SubAssign<Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: Polynomial) {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += rhs;
        self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= rhs;
        self
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { terms }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(mut self) -> Polynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

/// Bilinear extension of concatenation; words of `self` stay on the left.
impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.concat(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::one(), |acc, p| &acc * &p)
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial::one()
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn additive_inverse_is_empty() {
        let s = p("b0") + p("-b0");
        assert!(s.is_zero());
        assert_eq!(s.len(), 0);
    }

    #[test]
    fn add_builds_r1() {
        assert_eq!(p("-1 + a1") + p("b1 b0"), p("-1 + a1 + b1 b0"));
    }

    #[test]
    fn mul_is_noncommutative() {
        let a1 = Polynomial::from(Generator::a(1));
        let b0 = Polynomial::from(Generator::b(0));
        assert_eq!(&a1 * &b0, p("a1 b0"));
        assert_eq!(&b0 * &a1, p("b0 a1"));
        assert_ne!(&a1 * &b0, &b0 * &a1);
        assert_eq!(p("1 + b1") * p("b0"), p("b0 + b1 b0"));
    }

    #[test]
    fn product_of_three_binomials() {
        let prod = p("-1 + a5") * p("-1 + a3") * p("-1 + a1");
        assert_eq!(prod, p("a5 a3 a1 - a5 a3 - a5 a1 - a3 a1 + a5 + a3 + a1 - 1"));
    }

    #[test]
    fn left_multiplication() {
        assert_eq!(p("-1 + a1 + b1 b0").left_mul_gen(Generator::b(2)), p("-b2 + b2 a1 + b2 b1 b0"));
        assert!(Polynomial::zero().left_mul_gen(Generator::a(1)).is_zero());
        assert_eq!(Polynomial::one().left_mul_gen(Generator::a(4)), p("a4"));
    }

    #[test]
    fn constant_of() {
        assert_eq!(p("1 - a1 - b1 b0").constant_of(), BigInt::from(1));
        assert_eq!(p("b0").constant_of(), BigInt::zero());
        assert_eq!(Polynomial::zero().constant_of(), BigInt::zero());
    }

    #[test]
    fn evaluation() {
        let r1 = p("-1 + a1 + b1 b0");
        let v = r1
            .evaluate(|g| match g.to_string().as_str() {
                "a1" => Some(q(2, 1)),
                "b0" | "b1" => Some(q(1, 1)),
                _ => None,
            })
            .unwrap();
        assert_eq!(v, q(2, 1));
        assert_eq!(Polynomial::one().evaluate(|_| None).unwrap(), q(1, 1));
        assert_eq!(r1.evaluate(|_| None), Err(Error::Unassigned(Generator::a(1))));
    }

    #[test]
    fn q_specialisation() {
        // a_i -> q^i on 1 + a1 + a2 a1 gives 1 + q + q^3
        let poly = p("1 + a1 + a2 a1");
        let c = poly.evaluate_q(|g| Some((BigInt::one(), g.subscript() as usize))).unwrap();
        let ints: Vec<i64> = c.iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(ints, vec![1, 1, 0, 1]);
    }

    #[test]
    fn sign_counts() {
        assert_eq!(p("-1 + a1 + b1 b0").sign_counts(), (2, 1));
    }
}
