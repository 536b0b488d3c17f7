//! Exact rationals over `i128`.
//!
//! Arithmetic through the operator traits aborts with a diagnostic on
//! overflow; the `checked_*` methods report it as `None` instead.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A reduced fraction with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRational", into = "RawRational")]
pub struct Rational {
    num: i128,
    den: i128,
}

#[derive(Serialize, Deserialize)]
struct RawRational {
    num: i128,
    den: i128,
}

impl TryFrom<RawRational> for Rational {
    type Error = String;
    fn try_from(raw: RawRational) -> Result<Self, String> {
        Rational::checked_new(raw.num, raw.den).ok_or_else(|| "zero denominator".to_string())
    }
}

impl From<Rational> for RawRational {
    fn from(r: Rational) -> Self {
        RawRational { num: r.num, den: r.den }
    }
}

pub(crate) fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    /// Panics when `den == 0` or on overflow while normalizing.
    pub fn new(num: i128, den: i128) -> Self {
        Self::checked_new(num, den).expect("rational with zero denominator or overflow")
    }

    pub fn checked_new(num: i128, den: i128) -> Option<Self> {
        if den == 0 {
            return None;
        }
        let g = gcd(num, den);
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = n.checked_neg()?;
            d = d.checked_neg()?;
        }
        Some(Rational { num: n, den: d })
    }

    pub fn integer(n: i128) -> Self {
        Rational { num: n, den: 1 }
    }

    pub fn numer(&self) -> i128 {
        self.num
    }

    pub fn denom(&self) -> i128 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn recip(&self) -> Option<Self> {
        Self::checked_new(self.den, self.num)
    }

    pub fn checked_add(self, rhs: Self) -> Option<Self> {
        let g = gcd(self.den, rhs.den);
        let l = (self.den / g).checked_mul(rhs.den)?;
        let a = self.num.checked_mul(l / self.den)?;
        let b = rhs.num.checked_mul(l / rhs.den)?;
        Self::checked_new(a.checked_add(b)?, l)
    }

    pub fn checked_sub(self, rhs: Self) -> Option<Self> {
        self.checked_add(rhs.checked_neg()?)
    }

    pub fn checked_neg(self) -> Option<Self> {
        Some(Rational { num: self.num.checked_neg()?, den: self.den })
    }

    pub fn checked_mul(self, rhs: Self) -> Option<Self> {
        let g1 = gcd(self.num, rhs.den).max(1);
        let g2 = gcd(rhs.num, self.den).max(1);
        let n = (self.num / g1).checked_mul(rhs.num / g2)?;
        let d = (self.den / g2).checked_mul(rhs.den / g1)?;
        Self::checked_new(n, d)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n as i128)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).unwrap_or_else(|| panic!("rational overflow in {self} + {rhs}"))
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).unwrap_or_else(|| panic!("rational overflow in {self} - {rhs}"))
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).unwrap_or_else(|| panic!("rational overflow in {self} * {rhs}"))
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Self {
        self.checked_neg().expect("rational overflow in negation")
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::ZERO, |a, b| a + b)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        // denominators are positive, so cross-multiplication preserves order
        let l = self.num.checked_mul(other.den);
        let r = other.num.checked_mul(self.den);
        match (l, r) {
            (Some(l), Some(r)) => l.cmp(&r),
            _ => (self.num as f64 / self.den as f64)
                .partial_cmp(&(other.num as f64 / other.den as f64))
                .unwrap_or(Ordering::Equal),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reduces_and_normalizes_sign() {
        let r = Rational::new(6, -4);
        assert_eq!((r.numer(), r.denom()), (-3, 2));
        assert_eq!(Rational::new(0, -7), Rational::ZERO);
    }

    #[test]
    fn small_sums() {
        let half = Rational::new(1, 2);
        let quarter = Rational::new(1, 4);
        assert_eq!(quarter - Rational::new(3, 4) + half, Rational::ZERO);
        assert_eq!(half * Rational::integer(2), Rational::ONE);
    }

    #[test]
    fn overflow_is_detected() {
        let big = Rational::integer(i128::MAX);
        assert!(big.checked_add(Rational::ONE).is_none());
        assert!(big.checked_mul(Rational::integer(2)).is_none());
    }

    #[test]
    #[should_panic(expected = "rational overflow")]
    fn operator_overflow_aborts() {
        let _ = Rational::integer(i128::MAX) + Rational::ONE;
    }

    #[test]
    fn serde_shape() {
        let s = serde_json::to_string(&Rational::new(-1, 2)).unwrap();
        assert_eq!(s, r#"{"num":-1,"den":2}"#);
        let back: Rational = serde_json::from_str(&s).unwrap();
        assert_eq!(back, Rational::new(-1, 2));
        assert!(serde_json::from_str::<Rational>(r#"{"num":1,"den":0}"#).is_err());
    }

    proptest! {
        #[test]
        fn field_laws(a in -1000i128..1000, b in 1i128..1000, c in -1000i128..1000, d in 1i128..1000) {
            let x = Rational::new(a, b);
            let y = Rational::new(c, d);
            prop_assert_eq!(x + y, y + x);
            prop_assert_eq!((x + y) - y, x);
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!(gcd(x.numer(), x.denom()).max(1), 1);
            prop_assert!(x.denom() > 0);
        }
    }
}
