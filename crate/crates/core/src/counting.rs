//! Exact counts of necklaces and Lyndon words with fixed content.
//!
//! Both counts are averages over the divisors `j` of `gcd(n_0, ..., n_{k-1})`
//! of the multinomial coefficient of the content scaled by `1/j`, weighted by
//! Euler's totient (necklaces) or the Möbius function (Lyndon words). The
//! division by `n` is done last and must be exact.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::word::Content;

/// An exact non-negative count. Serializes as a decimal string.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(BigUint);

impl BigCount {
    pub fn zero() -> Self {
        BigCount(BigUint::zero())
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    /// `self - other` as a signed integer.
    pub fn signed_diff(&self, other: &BigCount) -> BigInt {
        BigInt::from(self.0.clone()) - BigInt::from(other.0.clone())
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
}

impl From<BigUint> for BigCount {
    fn from(value: BigUint) -> Self {
        BigCount(value)
    }
}

impl From<u64> for BigCount {
    fn from(value: u64) -> Self {
        BigCount(BigUint::from(value))
    }
}

impl From<usize> for BigCount {
    fn from(value: usize) -> Self {
        BigCount(BigUint::from(value))
    }
}

impl PartialEq<u64> for BigCount {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl Add for BigCount {
    type Output = BigCount;

    fn add(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a BigCount> for BigCount {
    type Output = BigCount;

    fn add(self, rhs: &'a BigCount) -> BigCount {
        BigCount(self.0 + &rhs.0)
    }
}

impl Sum for BigCount {
    fn sum<I: Iterator<Item = BigCount>>(iter: I) -> Self {
        iter.fold(BigCount::zero(), Add::add)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for BigCount {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<BigUint>()
            .map(BigCount)
            .map_err(|e| Error::Parse {
                input: s.to_string(),
                reason: e.to_string(),
            })
    }
}

impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        factors.push((m, 1));
    }
    factors
}

pub fn euler_phi(m: u64) -> Result<BigCount> {
    if m == 0 {
        return Err(Error::NonPositive);
    }
    let phi = factorize(m)
        .into_iter()
        .fold(m, |acc, (p, _)| acc / p * (p - 1));
    Ok(BigCount::from(phi))
}

pub fn mobius(m: u64) -> Result<i8> {
    if m == 0 {
        return Err(Error::NonPositive);
    }
    let factors = factorize(m);
    if factors.iter().any(|&(_, e)| e > 1) {
        Ok(0)
    } else if factors.len().is_multiple_of(2) {
        Ok(1)
    } else {
        Ok(-1)
    }
}

/// Ascending divisors of `gcd(values)`, with `gcd(0, x) = x`.
pub fn divisors_of_gcd(values: &[usize]) -> Result<Vec<usize>> {
    let g = values.iter().fold(0usize, |g, &v| g.gcd(&v));
    if g == 0 {
        return Err(Error::AllZero);
    }
    Ok((1..=g).filter(|j| g % j == 0).collect())
}

/// `n! / (n_0! ... n_{k-1}!)`, built as a product of binomial coefficients so
/// that every intermediate value is an integer.
pub fn multinomial(content: &Content) -> BigCount {
    multinomial_of(content.counts())
}

fn multinomial_of(counts: &[usize]) -> BigCount {
    let mut acc = BigUint::one();
    let mut placed = 0usize;
    for &c in counts {
        // acc *= C(placed + c, c), one factor at a time
        for t in 1..=c {
            acc *= placed + t;
            acc /= t;
        }
        placed += c;
    }
    BigCount(acc)
}

/// `sum_{j | gcd} weight(j) * multinomial(content / j)`, divided by `n`.
fn divisor_average(content: &Content, weight: impl Fn(u64) -> BigInt) -> Result<BigCount> {
    let n = content.total();
    if n == 0 {
        return Err(Error::EmptyContent);
    }
    let mut sum = BigInt::zero();
    for j in divisors_of_gcd(content.counts())? {
        let scaled: Vec<usize> = content.counts().iter().map(|&c| c / j).collect();
        sum += weight(j as u64) * BigInt::from(multinomial_of(&scaled).0);
    }
    let (quotient, remainder) = sum.div_rem(&BigInt::from(n));
    assert!(
        remainder.is_zero(),
        "divisor sum for {content} is not divisible by {n}"
    );
    match quotient.sign() {
        Sign::Minus => panic!("divisor sum for {content} is negative"),
        _ => Ok(BigCount(quotient.magnitude().clone())),
    }
}

/// Number of necklaces with the given content.
pub fn count_necklaces(content: &Content) -> Result<BigCount> {
    divisor_average(content, |j| BigInt::from(euler_phi(j).expect("j >= 1").0))
}

/// Number of Lyndon words with the given content.
pub fn count_lyndon(content: &Content) -> Result<BigCount> {
    divisor_average(content, |j| BigInt::from(mobius(j).expect("j >= 1")))
}

/// `sum_i L_k(n_0, ..., n_i - 1, ..., n_{k-1})`: the Lyndon words obtained by
/// removing one occurrence of each symbol in turn. Defined only when every
/// count is positive.
pub fn bound_rhs(content: &Content) -> Result<BigCount> {
    content.require_positive()?;
    (0..content.alphabet_size())
        .map(|i| count_lyndon(&content.decrement(i).expect("count is positive")))
        .sum()
}

/// The terms of [`bound_rhs`], one per decremented symbol.
pub fn bound_terms(content: &Content) -> Result<Vec<BigCount>> {
    content.require_positive()?;
    (0..content.alphabet_size())
        .map(|i| count_lyndon(&content.decrement(i).expect("count is positive")))
        .collect()
}

/// Number of binary necklaces of length `n` with density `d`.
pub fn binary_necklaces(n: usize, d: usize) -> Result<BigCount> {
    count_necklaces(&Content::binary(n, d)?)
}

/// Number of binary Lyndon words of length `n` with density `d`.
pub fn binary_lyndon(n: usize, d: usize) -> Result<BigCount> {
    count_lyndon(&Content::binary(n, d)?)
}
