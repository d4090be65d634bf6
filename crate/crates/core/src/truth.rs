//! Exact truth degrees.
//!
//! Every semantic value in the workbench is a rational number in `[0, 1]`.
//! All three standard t-norms and their residua are closed over the rationals,
//! so evaluation never rounds.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TruthValueError {
    #[error("{0} is outside the unit interval")]
    OutOfRange(Rational),
    #[error("malformed rational `{0}`")]
    Malformed(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// A rational truth degree in `[0, 1]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TruthValue(Rational);

impl TruthValue {
    pub fn new(value: Rational) -> Result<Self, TruthValueError> {
        if value.is_negative() || value > Rational::one() {
            Err(TruthValueError::OutOfRange(value))
        } else {
            Ok(TruthValue(value))
        }
    }

    /// Builds `numer/denom`.
    ///
    /// Panics when the fraction is not a valid degree; meant for literals.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Self::new(Rational::new(BigInt::from(numer), BigInt::from(denom))).expect("literal truth value outside [0, 1]")
    }

    pub fn zero() -> Self {
        TruthValue(Rational::zero())
    }

    pub fn one() -> Self {
        TruthValue(Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_boolean(&self) -> bool {
        self.is_zero() || self.is_one()
    }

    pub fn as_rational(&self) -> &Rational {
        &self.0
    }

    pub fn into_rational(self) -> Rational {
        self.0
    }

    pub fn min(self, other: Self) -> Self {
        std::cmp::min(self, other)
    }

    pub fn max(self, other: Self) -> Self {
        std::cmp::max(self, other)
    }

    /// `1 - self`.
    pub fn complement(&self) -> Self {
        TruthValue(Rational::one() - &self.0)
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    /// Every rational in `[0, 1]` whose reduced denominator is at most
    /// `bound`, in increasing order.
    pub fn grid(bound: u64) -> Vec<TruthValue> {
        let bound = bound.max(1);
        let mut values: Vec<TruthValue> = (1..=bound)
            .flat_map(|d| (0..=d).map(move |n| (n, d)))
            .map(|(n, d)| TruthValue(Rational::new(BigInt::from(n), BigInt::from(d))))
            .collect();
        values.sort();
        values.dedup();
        values
    }

    /// Wraps an arithmetic result already known to lie in `[0, 1]`.
    pub(crate) fn from_unit(value: Rational) -> Self {
        debug_assert!(!value.is_negative() && value <= Rational::one());
        TruthValue(value)
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `INT` or `INT/INT`.
pub fn parse_rational(text: &str) -> Result<Rational, TruthValueError> {
    let text = text.trim();
    let malformed = || TruthValueError::Malformed(text.to_string());
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    match text.split_once('/') {
        None if digits(text) => Ok(Rational::from_integer(text.parse().map_err(|_| malformed())?)),
        Some((n, d)) if digits(n) && digits(d) => {
            let numer: BigInt = n.parse().map_err(|_| malformed())?;
            let denom: BigInt = d.parse().map_err(|_| malformed())?;
            if denom.is_zero() {
                return Err(TruthValueError::ZeroDenominator(text.to_string()));
            }
            Ok(Rational::new(numer, denom))
        }
        _ => Err(malformed()),
    }
}

impl FromStr for TruthValue {
    type Err = TruthValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TruthValue::new(parse_rational(s)?)
    }
}

impl Serialize for TruthValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TruthValue {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        let v: TruthValue = "6/8".parse().unwrap();
        assert_eq!(v, TruthValue::ratio(3, 4));
        assert_eq!(v.to_string(), "3/4");
        assert_eq!("1".parse::<TruthValue>().unwrap(), TruthValue::one());
        assert_eq!("0/5".parse::<TruthValue>().unwrap().to_string(), "0");
    }

    #[test]
    fn rejects_out_of_range_and_garbage() {
        assert!(matches!("5/4".parse::<TruthValue>(), Err(TruthValueError::OutOfRange(_))));
        assert!(matches!("1/0".parse::<TruthValue>(), Err(TruthValueError::ZeroDenominator(_))));
        assert!(matches!("-1/2".parse::<TruthValue>(), Err(TruthValueError::Malformed(_))));
        assert!("1/".parse::<TruthValue>().is_err());
    }

    #[test]
    fn grid_is_the_farey_sequence() {
        // |F_8| = 23
        let grid = TruthValue::grid(8);
        assert_eq!(grid.len(), 23);
        assert_eq!(grid.first(), Some(&TruthValue::zero()));
        assert_eq!(grid.last(), Some(&TruthValue::one()));
        assert!(grid.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn serde_uses_fraction_strings() {
        let v = TruthValue::ratio(2, 5);
        assert_eq!(serde_json::to_string(&v).unwrap(), "\"2/5\"");
        let back: TruthValue = serde_json::from_str("\"2/5\"").unwrap();
        assert_eq!(back, v);
    }
}
