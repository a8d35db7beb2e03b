//! Exact quarter-integer arithmetic.
//!
//! Every revised Szeged quantity is a sum of products `(x + h/2)(y + h/2)`,
//! so all values live on the lattice `Z/4`. [`Q4`] stores the numerator over
//! a fixed denominator of four; no floating point is involved anywhere.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A rational number `quarters / 4`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Q4 {
    quarters: i64,
}

impl Q4 {
    pub const ZERO: Q4 = Q4 { quarters: 0 };

    pub const fn from_quarters(quarters: i64) -> Self {
        Q4 { quarters }
    }

    pub const fn from_int(value: i64) -> Self {
        Q4 { quarters: 4 * value }
    }

    /// `halves / 2`.
    pub const fn from_halves(halves: i64) -> Self {
        Q4 { quarters: 2 * halves }
    }

    /// `(a / 2) * (b / 2)`, the product of two half-integers.
    pub const fn product_of_halves(a_halves: i64, b_halves: i64) -> Self {
        Q4 { quarters: a_halves * b_halves }
    }

    pub const fn quarters(self) -> i64 {
        self.quarters
    }

    pub const fn is_integer(self) -> bool {
        self.quarters % 4 == 0
    }

    /// The integer value, if there is one.
    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.quarters / 4)
    }

    /// Convenience decimal rendering; never used for comparisons.
    pub fn to_f64(self) -> f64 {
        self.quarters as f64 / 4.0
    }

    pub fn signum(self) -> i64 {
        self.quarters.signum()
    }
}

impl From<i64> for Q4 {
    fn from(value: i64) -> Self {
        Q4::from_int(value)
    }
}

impl Add for Q4 {
    type Output = Q4;
    fn add(self, rhs: Q4) -> Q4 {
        Q4::from_quarters(self.quarters + rhs.quarters)
    }
}

impl Sub for Q4 {
    type Output = Q4;
    fn sub(self, rhs: Q4) -> Q4 {
        Q4::from_quarters(self.quarters - rhs.quarters)
    }
}

impl Neg for Q4 {
    type Output = Q4;
    fn neg(self) -> Q4 {
        Q4::from_quarters(-self.quarters)
    }
}

impl AddAssign for Q4 {
    fn add_assign(&mut self, rhs: Q4) {
        self.quarters += rhs.quarters;
    }
}

impl SubAssign for Q4 {
    fn sub_assign(&mut self, rhs: Q4) {
        self.quarters -= rhs.quarters;
    }
}

impl Mul<i64> for Q4 {
    type Output = Q4;
    fn mul(self, rhs: i64) -> Q4 {
        Q4::from_quarters(self.quarters * rhs)
    }
}

impl Sum for Q4 {
    fn sum<I: Iterator<Item = Q4>>(iter: I) -> Q4 {
        iter.fold(Q4::ZERO, Add::add)
    }
}

/// Renders as `p/4`, the exact integer-quarters form used in every report.
impl fmt::Display for Q4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/4", self.quarters)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a quarter-integer literal: {0:?}")]
pub struct ParseQ4Error(String);

/// Accepts `p/4` and plain integers.
impl FromStr for Q4 {
    type Err = ParseQ4Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseQ4Error(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            Some((num, "4")) => num.trim().parse().map(Q4::from_quarters).map_err(|_| err()),
            Some(_) => Err(err()),
            None => s.parse().map(Q4::from_int).map_err(|_| err()),
        }
    }
}

impl Serialize for Q4 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Q4 {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Serde adapter writing a [`Q4`] as `{"exact": "p/4", "decimal": x}`.
/// Only `exact` is read back.
pub mod with_decimal {
    use super::Q4;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Rendered {
        exact: Q4,
        #[serde(default)]
        decimal: f64,
    }

    pub fn serialize<S: Serializer>(value: &Q4, serializer: S) -> Result<S::Ok, S::Error> {
        Rendered { exact: *value, decimal: value.to_f64() }.serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Q4, D::Error> {
        Ok(Rendered::deserialize(deserializer)?.exact)
    }

    /// The same rendering for optional values (`null` when absent).
    pub mod option {
        use super::{Q4, Rendered};
        use serde::{Deserialize, Deserializer, Serialize, Serializer};

        pub fn serialize<S: Serializer>(value: &Option<Q4>, serializer: S) -> Result<S::Ok, S::Error> {
            value.map(|v| Rendered { exact: v, decimal: v.to_f64() }).serialize(serializer)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Option<Q4>, D::Error> {
            Ok(Option::<Rendered>::deserialize(deserializer)?.map(|r| r.exact))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_products_land_on_quarters() {
        // (1 + 1/2)(1 + 1/2) = 9/4
        assert_eq!(Q4::product_of_halves(3, 3), Q4::from_quarters(9));
        assert_eq!(Q4::from_halves(3) + Q4::from_halves(1), Q4::from_int(2));
    }

    #[test]
    fn display_and_parse() {
        let v = Q4::from_quarters(27);
        assert_eq!(v.to_string(), "27/4");
        assert_eq!("27/4".parse::<Q4>().unwrap(), v);
        assert_eq!("-3".parse::<Q4>().unwrap(), Q4::from_int(-3));
        assert!("1/2".parse::<Q4>().is_err());
        assert!("x/4".parse::<Q4>().is_err());
    }

    #[test]
    fn ordering_is_exact() {
        assert!(Q4::from_quarters(-95) < Q4::ZERO);
        assert!(Q4::from_quarters(69) > Q4::from_int(17));
        assert_eq!(Q4::from_quarters(64).to_integer(), Some(16));
        assert_eq!(Q4::from_quarters(27).to_integer(), None);
    }

    #[test]
    fn serde_uses_exact_string() {
        let v = Q4::from_quarters(19);
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, "\"19/4\"");
        assert_eq!(serde_json::from_str::<Q4>(&json).unwrap(), v);
    }

    #[test]
    fn decimal_rendering() {
        #[derive(serde::Serialize, serde::Deserialize, PartialEq, Debug)]
        struct Row {
            #[serde(with = "with_decimal")]
            value: Q4,
        }
        let row = Row { value: Q4::from_quarters(-95) };
        let json = serde_json::to_string(&row).unwrap();
        assert_eq!(json, r#"{"value":{"exact":"-95/4","decimal":-23.75}}"#);
        assert_eq!(serde_json::from_str::<Row>(&json).unwrap(), row);
    }
}
