//! Sparse polynomials with arbitrary-precision integer coefficients.
//!
//! Both types keep a canonical form with no zero coefficients stored, so
//! derived equality is term-wise equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A polynomial in one variable `t`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct UnivariatePolynomial {
    terms: BTreeMap<u32, BigInt>,
}

impl UnivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exponent: u32, coefficient: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coefficient.into());
        p
    }

    /// `coefficients[k]` is the coefficient of `t^k`.
    pub fn from_coefficients<C: Into<BigInt> + Clone>(coefficients: &[C]) -> Self {
        let mut p = Self::zero();
        for (k, c) in coefficients.iter().enumerate() {
            p.add_term(k as u32, c.clone().into());
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (u32, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exponent: u32, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(BigInt::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponent: u32) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn lowest_degree(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Multiplies by `t^shift`; `None` if a negative exponent would survive.
    pub fn shift(&self, shift: i64) -> Option<Self> {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            let e = u32::try_from(i64::from(e) + shift).ok()?;
            out.terms.insert(e, c.clone());
        }
        Some(out)
    }

    /// `p(t) -> p(t^2)`
    pub fn substitute_t_squared(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (2 * e, c.clone())).collect(),
        }
    }

    pub fn evaluate(&self, t: &BigInt) -> BigInt {
        self.terms.iter().map(|(&e, c)| c * Pow::pow(t, e)).sum()
    }
}

impl Add for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn add(self, rhs: Self) -> UnivariatePolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn sub(self, rhs: Self) -> UnivariatePolynomial {
        self + &(-rhs)
    }
}

impl Neg for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn neg(self) -> UnivariatePolynomial {
        UnivariatePolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn mul(self, rhs: Self) -> UnivariatePolynomial {
        let mut out = UnivariatePolynomial::zero();
        for (&a, c) in &self.terms {
            for (&b, d) in &rhs.terms {
                out.add_term(a + b, c * d);
            }
        }
        out
    }
}

impl Mul<&BigInt> for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn mul(self, rhs: &BigInt) -> UnivariatePolynomial {
        UnivariatePolynomial::from_terms(self.terms.iter().map(|(&e, c)| (e, c * rhs)))
    }
}

impl std::iter::Sum for UnivariatePolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}

/// A polynomial in `x` and `y`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, 1)
    }

    pub fn monomial(x_exp: u32, y_exp: u32, coefficient: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(x_exp, y_exp, coefficient.into());
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), BigInt)>) -> Self {
        let mut p = Self::zero();
        for ((a, b), c) in terms {
            p.add_term(a, b, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, x_exp: u32, y_exp: u32, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        let key = (x_exp, y_exp);
        let entry = self.terms.entry(key).or_insert_with(BigInt::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, x_exp: u32, y_exp: u32) -> BigInt {
        self.terms.get(&(x_exp, y_exp)).cloned().unwrap_or_default()
    }

    /// Nonzero terms ordered by `(x exponent, y exponent)`.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Substitutes `x := x0`, leaving a polynomial in `y`.
    pub fn substitute_x(&self, x0: &BigInt) -> UnivariatePolynomial {
        UnivariatePolynomial::from_terms(self.terms.iter().map(|(&(a, b), c)| (b, c * Pow::pow(x0, a))))
    }

    /// Substitutes `y := y0`, leaving a polynomial in `x`.
    pub fn substitute_y(&self, y0: &BigInt) -> UnivariatePolynomial {
        UnivariatePolynomial::from_terms(self.terms.iter().map(|(&(a, b), c)| (a, c * Pow::pow(y0, b))))
    }

    pub fn evaluate(&self, x0: &BigInt, y0: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * Pow::pow(x0, a) * Pow::pow(y0, b))
            .sum()
    }

    /// `(x - 1)^a (y - 1)^b`
    pub(crate) fn shifted_monomial(a: u32, b: u32) -> Self {
        let mut p = Self::zero();
        for i in 0..=a {
            for j in 0..=b {
                let sign = if (a - i + b - j).is_multiple_of(2) { 1 } else { -1 };
                p.add_term(i, j, BigInt::from(sign) * binomial(a, i) * binomial(b, j));
            }
        }
        p
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: Self) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn sub(self, rhs: Self) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, -c);
        }
        out
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: Self) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(a, b), c) in &self.terms {
            for (&(p, q), d) in &rhs.terms {
                out.add_term(a + p, b + q, c * d);
            }
        }
        out
    }
}

impl Mul<&BigInt> for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: &BigInt) -> BivariatePolynomial {
        BivariatePolynomial::from_terms(self.terms.iter().map(|(&k, c)| (k, c * rhs)))
    }
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (monomial, c) in terms {
        let magnitude = c.abs();
        let sign = if c.is_negative() { "-" } else { "+" };
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        match (monomial.is_empty(), magnitude.is_one()) {
            (true, _) => write!(f, "{magnitude}")?,
            (false, true) => f.write_str(&monomial)?,
            (false, false) => write!(f, "{magnitude}{monomial}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

fn power(var: &str, e: u32) -> String {
    match e {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{e}"),
    }
}

/// Highest degree first, e.g. `t^4 + 2t^2 + 1`.
impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().rev().map(|(&e, c)| (power("t", e), c)))
    }
}

impl fmt::Debug for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Highest total degree first, e.g. `x^2 + x + y`.
impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(&(u32, u32), &BigInt)> = self.terms.iter().collect();
        terms.sort_by_key(|(k, _)| std::cmp::Reverse((k.0 + k.1, k.0)));
        write_terms(
            f,
            terms.into_iter().map(|(&(a, b), c)| (power("x", a) + &power("y", b), c)),
        )
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct UnivariateTerm {
    e: u32,
    #[serde(with = "crate::json::bigint_string")]
    c: BigInt,
}

#[derive(Serialize, Deserialize)]
struct BivariateTerm {
    x: u32,
    y: u32,
    #[serde(with = "crate::json::bigint_string")]
    c: BigInt,
}

#[derive(Serialize, Deserialize)]
struct Terms<T> {
    terms: Vec<T>,
}

/// `{"terms": [{"e": int, "c": "int"}, ...]}`, ascending exponents.
impl Serialize for UnivariatePolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        Terms {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| UnivariateTerm { e, c: c.clone() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for UnivariatePolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let t = Terms::<UnivariateTerm>::deserialize(deserializer)?;
        Ok(Self::from_terms(t.terms.into_iter().map(|t| (t.e, t.c))))
    }
}

/// `{"terms": [{"x": int, "y": int, "c": "int"}, ...]}`
impl Serialize for BivariatePolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        Terms {
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), c)| BivariateTerm { x, y, c: c.clone() })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BivariatePolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let t = Terms::<BivariateTerm>::deserialize(deserializer)?;
        Ok(Self::from_terms(t.terms.into_iter().map(|t| ((t.x, t.y), t.c))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn u23() -> BivariatePolynomial {
        &(&BivariatePolynomial::monomial(2, 0, 1) + &BivariatePolynomial::x()) + &BivariatePolynomial::y()
    }

    #[test]
    fn substitutions() {
        let p = &BivariatePolynomial::x() + &BivariatePolynomial::y();
        let q = p.substitute_x(&big(0));
        assert_eq!(q, UnivariatePolynomial::monomial(1, 1));
        assert_eq!(q.substitute_t_squared(), UnivariatePolynomial::monomial(2, 1));

        assert_eq!(u23().substitute_x(&big(1)), UnivariatePolynomial::from_coefficients(&[2, 1]));
        assert!(BivariatePolynomial::monomial(2, 0, 1).substitute_x(&big(0)).is_zero());
        assert_eq!(u23().evaluate(&big(1), &big(0)), big(2));
    }

    #[test]
    fn display() {
        assert_eq!(u23().to_string(), "x^2 + x + y");
        assert_eq!(UnivariatePolynomial::from_coefficients(&[1, 0, -2, 0, 1]).to_string(), "t^4 - 2t^2 + 1");
        assert_eq!(UnivariatePolynomial::zero().to_string(), "0");
        assert_eq!((-&UnivariatePolynomial::one()).to_string(), "-1");
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let p = UnivariatePolynomial::from_coefficients(&[1, 2]);
        let d = &p - &p;
        assert!(d.is_zero());
        assert_eq!(d, UnivariatePolynomial::zero());
        assert_eq!((&u23() - &u23()), BivariatePolynomial::zero());
    }

    #[test]
    fn shift_rejects_negative_exponents() {
        let p = UnivariatePolynomial::from_coefficients(&[0, 0, 1]);
        assert_eq!(p.shift(-2), Some(UnivariatePolynomial::one()));
        assert_eq!(p.shift(-3), None);
        assert_eq!(UnivariatePolynomial::zero().shift(-5), Some(UnivariatePolynomial::zero()));
    }

    #[test]
    fn shifted_monomial_expansion() {
        // (x-1)^2 (y-1) = x^2 y - x^2 - 2xy + 2x + y - 1
        let p = BivariatePolynomial::shifted_monomial(2, 1);
        assert_eq!(p.coefficient(2, 1), big(1));
        assert_eq!(p.coefficient(2, 0), big(-1));
        assert_eq!(p.coefficient(1, 1), big(-2));
        assert_eq!(p.coefficient(1, 0), big(2));
        assert_eq!(p.coefficient(0, 1), big(1));
        assert_eq!(p.coefficient(0, 0), big(-1));
    }

    #[test]
    fn json_encoding() {
        let json = serde_json::to_string(&u23()).unwrap();
        assert_eq!(
            json,
            r#"{"terms":[{"x":0,"y":1,"c":"1"},{"x":1,"y":0,"c":"1"},{"x":2,"y":0,"c":"1"}]}"#
        );
        let t = UnivariatePolynomial::monomial(2, 1);
        assert_eq!(serde_json::to_string(&t).unwrap(), r#"{"terms":[{"e":2,"c":"1"}]}"#);
    }

    fn univariate() -> impl Strategy<Value = UnivariatePolynomial> {
        proptest::collection::vec((0u32..8, -50i64..50), 0..6)
            .prop_map(|ts| UnivariatePolynomial::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
    }

    fn bivariate() -> impl Strategy<Value = BivariatePolynomial> {
        proptest::collection::vec((0u32..5, 0u32..5, -1_000_000_000_000i64..1_000_000_000_000), 0..6).prop_map(|ts| {
            BivariatePolynomial::from_terms(ts.into_iter().map(|(a, b, c)| ((a, b), BigInt::from(c) * BigInt::from(c))))
        })
    }

    proptest! {
        #[test]
        fn json_round_trip(p in bivariate(), q in univariate()) {
            let back: BivariatePolynomial = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
            prop_assert_eq!(back, p);
            let back: UnivariatePolynomial = serde_json::from_str(&serde_json::to_string(&q).unwrap()).unwrap();
            prop_assert_eq!(back, q);
        }

        #[test]
        fn ring_laws(p in univariate(), q in univariate(), r in univariate(), t in -4i64..4) {
            prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            let t = BigInt::from(t);
            prop_assert_eq!((&p * &q).evaluate(&t), p.evaluate(&t) * q.evaluate(&t));
            prop_assert_eq!(p.substitute_t_squared().evaluate(&t), p.evaluate(&(&t * &t)));
        }

        #[test]
        fn evaluation_is_a_homomorphism(p in bivariate(), q in bivariate(), x in -3i64..3, y in -3i64..3) {
            let (x, y) = (BigInt::from(x), BigInt::from(y));
            prop_assert_eq!((&p * &q).evaluate(&x, &y), p.evaluate(&x, &y) * q.evaluate(&x, &y));
            prop_assert_eq!(p.substitute_x(&x).evaluate(&y), p.evaluate(&x, &y));
            prop_assert_eq!(p.substitute_y(&y).evaluate(&x), p.evaluate(&x, &y));
        }
    }
}
