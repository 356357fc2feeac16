//! Exact rational arithmetic, standard-multiplicity predicates, and the
//! floor-shift operator `b ↦ ⌊(n+1)b⌋/n` together with its monotonicity laws.
//!
//! Everything here is exact: classification outcomes elsewhere in the crate
//! hinge on comparisons at thresholds like 6/7, so no floating point is
//! allowed anywhere in the arithmetic layer.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::SurfError;

/// Arbitrary-precision rational number, always reduced, denominator > 0.
///
/// Serializes as the string `"p/q"`, with `/q` omitted when the denominator
/// is 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn floor(&self) -> Self {
        Rational(self.0.floor())
    }

    /// Floor as a big integer.
    pub fn floor_int(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Denominator as u64 when it fits.
    pub fn denom_u64(&self) -> Option<u64> {
        self.0.denom().to_u64()
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    pub(crate) fn from_big(r: BigRational) -> Self {
        Rational(r)
    }

    pub(crate) fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = SurfError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt, SurfError> {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| SurfError::BadRational(s.to_owned()))
        };
        match s.split_once('/') {
            None => Ok(Rational(BigRational::from_integer(parse_int(s)?))),
            Some((p, q)) => {
                let num = parse_int(p)?;
                let den = parse_int(q)?;
                if den.is_zero() {
                    return Err(SurfError::BadRational(s.to_owned()));
                }
                Ok(Rational(BigRational::new(num, den)))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(|e| D::Error::custom(format!("{e}")))
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

impl_binop!(Add, add);
impl_binop!(Sub, sub);
impl_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

/// Boundary multiplicity: a rational confined to [0, 1].
///
/// Values outside the interval are rejected at construction rather than
/// clamped.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multiplicity(Rational);

impl Multiplicity {
    pub fn new(value: Rational) -> Result<Self, SurfError> {
        if value.is_negative() || value > Rational::one() {
            return Err(SurfError::MultiplicityRange(value.to_string()));
        }
        Ok(Multiplicity(value))
    }

    pub fn new_i64(num: i64, den: i64) -> Result<Self, SurfError> {
        Multiplicity::new(Rational::new(num, den))
    }

    pub fn zero() -> Self {
        Multiplicity(Rational::zero())
    }

    pub fn one() -> Self {
        Multiplicity(Rational::one())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_value(self) -> Rational {
        self.0
    }

    pub fn is_reduced(&self) -> bool {
        self.0 == Rational::one()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Multiplicity {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Multiplicity {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let r = Rational::deserialize(de)?;
        Multiplicity::new(r).map_err(|e| D::Error::custom(format!("{e}")))
    }
}

impl FromStr for Multiplicity {
    type Err = SurfError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Multiplicity::new(s.parse()?)
    }
}

/// Named families of complementary indices.
///
/// `RN1 = {1, 2}` and `RN2 = N1 = {1, 2, 3, 4, 6}`; the latter two coincide.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum IndexSet {
    RN1,
    RN2,
    N1,
}

impl IndexSet {
    pub fn members(self) -> &'static [u32] {
        match self {
            IndexSet::RN1 => &[1, 2],
            IndexSet::RN2 | IndexSet::N1 => &[1, 2, 3, 4, 6],
        }
    }

    pub fn contains(self, n: u32) -> bool {
        self.members().contains(&n)
    }
}

/// The set of regular indices {1, 2, 3, 4, 6}.
pub const REGULAR_INDICES: [u32; 5] = [1, 2, 3, 4, 6];

/// `⌊(n+1)·b⌋ / n`, computed exactly.
///
/// Note this can exceed 1 (at b = 1 the value is (n+1)/n); callers that fold
/// reduced multiplicities into the integral part must do so before calling.
pub fn floor_shift(b: &Multiplicity, n: u32) -> Rational {
    assert!(n >= 1, "floor_shift needs n >= 1");
    let shifted = b.value() * &Rational::from_integer(i64::from(n) + 1);
    Rational::from_big(BigRational::from_integer(shifted.floor_int()))
        / Rational::from_integer(i64::from(n))
}

/// True iff b = 1 or b = (m−1)/m for some integer m ≥ 1.
pub fn is_standard(b: &Multiplicity) -> bool {
    if b.is_reduced() || b.is_zero() {
        return true;
    }
    // (m-1)/m in lowest terms has numerator exactly one less than denominator.
    let v = b.value();
    v.denom() - v.numer() == BigInt::one()
}

/// True iff b is standard or b ≥ 6/7.
pub fn satisfies_m(b: &Multiplicity) -> bool {
    is_standard(b) || *b.value() >= Rational::new(6, 7)
}

/// True iff `⌊(n+1)(r−ε)⌋/n = ⌊(n+1)r⌋/n` for all small ε > 0, i.e. the
/// floor-shift is stable under dropping r slightly.  Exact test: r ∉ ℤ/(n+1).
pub fn monotonicity_drop_stable(r: &Multiplicity, n: u32) -> bool {
    let scaled = r.value() * &Rational::from_integer(i64::from(n) + 1);
    !scaled.is_integer()
}

/// Exact comparison helper for `a/b ? c/d` on machine integers, used by the
/// enumeration fast paths.  Panics on overflow in debug builds; all call
/// sites keep operands far below the i128 range.
pub fn cmp_frac(an: i64, ad: i64, bn: i64, bd: i64) -> Ordering {
    debug_assert!(ad > 0 && bd > 0);
    (i128::from(an) * i128::from(bd)).cmp(&(i128::from(bn) * i128::from(ad)))
}

/// `⌊(n+1)·p/q⌋` on machine integers.
pub fn floor_shift_num_i64(p: i64, q: i64, n: i64) -> i64 {
    debug_assert!(q > 0 && n >= 1 && p >= 0);
    ((n + 1) * p).div_euclid(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: i64, q: i64) -> Multiplicity {
        Multiplicity::new_i64(p, q).unwrap()
    }

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn floor_shift_examples() {
        assert_eq!(floor_shift(&m(1, 2), 1), r(1, 1));
        assert_eq!(floor_shift(&m(2, 3), 6), r(2, 3));
        assert_eq!(floor_shift(&m(0, 1), 5), Rational::zero());
        // At b = 1 the raw operator exceeds 1.
        assert_eq!(floor_shift(&m(1, 1), 3), r(4, 3));
    }

    #[test]
    fn standard_predicate() {
        assert!(is_standard(&m(1, 2)));
        assert!(!is_standard(&m(5, 7)));
        assert!(is_standard(&m(1, 1)));
        assert!(is_standard(&m(0, 1)));
        assert!(is_standard(&m(6, 7)));
        assert!(!is_standard(&m(3, 5)));
    }

    #[test]
    fn m_predicate() {
        assert!(satisfies_m(&m(6, 7)));
        assert!(satisfies_m(&m(13, 15)));
        assert!(!satisfies_m(&m(7, 10)));
        assert!(satisfies_m(&m(3, 4)));
    }

    #[test]
    fn drop_stability() {
        assert!(!monotonicity_drop_stable(&m(1, 2), 1));
        assert!(monotonicity_drop_stable(&m(1, 2), 2));
        assert!(!monotonicity_drop_stable(&m(2, 7), 6));
    }

    #[test]
    fn multiplicity_rejects_out_of_range() {
        assert!(Multiplicity::new(r(3, 2)).is_err());
        assert!(Multiplicity::new(r(-1, 2)).is_err());
        assert!(Multiplicity::new(r(1, 1)).is_ok());
        assert!(Multiplicity::new(r(0, 1)).is_ok());
    }

    #[test]
    fn rational_roundtrip() {
        for s in ["3/4", "-2/5", "7", "0", "-13"] {
            let v: Rational = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
        // Reduction happens on parse.
        let v: Rational = "4/6".parse().unwrap();
        assert_eq!(v.to_string(), "2/3");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
    }

    #[test]
    fn rational_serde_is_string() {
        let v = r(5, 6);
        assert_eq!(serde_json::to_string(&v).unwrap(), "\"5/6\"");
        let back: Rational = serde_json::from_str("\"5/6\"").unwrap();
        assert_eq!(back, v);
        let int: Rational = serde_json::from_str("\"4\"").unwrap();
        assert_eq!(int, r(4, 1));
    }

    #[test]
    fn index_sets() {
        assert_eq!(IndexSet::RN1.members(), &[1, 2]);
        assert_eq!(IndexSet::RN2.members(), IndexSet::N1.members());
        assert!(IndexSet::N1.contains(6));
        assert!(!IndexSet::N1.contains(5));
    }

    #[test]
    fn fast_path_agrees() {
        for p in 0..=12 {
            for q in 1..=12i64 {
                if p > q {
                    continue;
                }
                for n in 1..=10i64 {
                    let exact = floor_shift(&m(p, q), n as u32);
                    let fast = floor_shift_num_i64(p, q, n);
                    assert_eq!(exact * r(n, 1), r(fast, 1));
                }
            }
        }
    }
}
