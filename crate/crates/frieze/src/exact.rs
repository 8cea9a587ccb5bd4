//! Exact rational scalars and half-integer grid indexing.
//!
//! All computation in this crate happens over [`Rat`], an arbitrary-precision
//! rational kept in lowest terms. Frieze entries live on a strip of points
//! with integer or half-integer coordinates; [`NodeIdx`] stores the doubled
//! coordinates so that every key stays integral and hashing is exact.

use crate::Error;
use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Exact rational scalar, the coefficient field for all computation.
///
/// Stored in lowest terms with a positive denominator. Arithmetic is exact;
/// division by zero is an error, never a NaN-like value.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `num/den`, reducing to lowest terms.
    pub fn new(num: BigInt, den: BigInt) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(num, den)))
    }

    pub fn from_frac(num: i64, den: i64) -> Result<Self, Error> {
        Self::new(BigInt::from(num), BigInt::from(den))
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

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn sq(&self) -> Rat {
        Rat(&self.0 * &self.0)
    }

    pub fn checked_div(&self, other: &Rat) -> Result<Rat, Error> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(&self.0 / &other.0))
    }

    /// Integer power, negative exponents allowed (errors on 0^negative).
    pub fn pow(&self, e: i64) -> Result<Rat, Error> {
        if e < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(self.0.pow(
            e.to_i32().ok_or(Error::IndexRange)?,
        )))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }
}

pub(crate) fn two() -> Rat {
    Rat::from_int(2)
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(self.0 $op rhs.0)
            }
        }
        impl<'a> $trait<&'a Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat(&self.0 $op &rhs.0)
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat(self.0 $op &rhs.0)
            }
        }
        impl $trait<Rat> for &Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(&self.0 $op rhs.0)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

/// Panics on division by zero; use [`Rat::checked_div`] where the divisor
/// comes from input data.
impl Div for &Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        assert!(!rhs.is_zero(), "Rat division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = Error;

    /// Parses `"p"` or `"p/q"` with optional leading sign.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::MalformedInput(format!("bad rational: {s:?}"));
        let (num_s, den_s) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let num = BigInt::from_str(num_s.trim()).map_err(|_| bad())?;
        let den = match den_s {
            Some(d) => BigInt::from_str(d.trim()).map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rat(BigRational::new(num, den)))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Rat::from_str(&s).map_err(de::Error::custom)
    }
}

/// Exact square root of a nonnegative rational.
///
/// Returns the nonnegative root when `q` is a perfect square of a rational
/// and `None` otherwise; negative input is an error.
pub fn rat_sqrt(q: &Rat) -> Result<Option<Rat>, Error> {
    if q.is_negative() {
        return Err(Error::NegativeInput);
    }
    if q.is_zero() {
        return Ok(Some(Rat::zero()));
    }
    let num = q.numer().magnitude();
    let den = q.denom().magnitude();
    let ns = num.sqrt();
    let ds = den.sqrt();
    if &(&ns * &ns) == num && &(&ds * &ds) == den {
        Ok(Some(Rat(BigRational::new(
            BigInt::from_biguint(Sign::Plus, ns),
            BigInt::from_biguint(Sign::Plus, ds),
        ))))
    } else {
        Ok(None)
    }
}

/// A point of the frieze indexing strip, stored with doubled coordinates
/// `(i2, j2) = (2i, 2j)` so that half-integers stay integral.
///
/// At least one of the two coordinates must be even: the strip consists of
/// points with at least one integer coordinate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct NodeIdx {
    pub i2: i64,
    pub j2: i64,
}

impl NodeIdx {
    pub fn new(i2: i64, j2: i64) -> Result<Self, Error> {
        if i2.rem_euclid(2) == 1 && j2.rem_euclid(2) == 1 {
            return Err(Error::MalformedInput(format!(
                "node ({i2},{j2})/2 has two half-integer coordinates"
            )));
        }
        Ok(NodeIdx { i2, j2 })
    }

    /// Node at integer coordinates `(i, j)`.
    pub fn int(i: i64, j: i64) -> Self {
        NodeIdx { i2: 2 * i, j2: 2 * j }
    }

    pub fn is_integer(&self) -> bool {
        self.i2 % 2 == 0 && self.j2 % 2 == 0
    }

    /// Doubled row index `2(j - i)`.
    pub fn row2(&self) -> i64 {
        self.j2 - self.i2
    }

    pub fn in_strip(&self, n: u32) -> bool {
        let r = self.row2();
        0 <= r && r <= 2 * n as i64
    }

    /// Interior means `1 <= j - i <= n - 1`.
    pub fn is_interior(&self, n: u32) -> bool {
        let r = self.row2();
        2 <= r && r <= 2 * (n as i64 - 1)
    }
}

impl fmt::Display for NodeIdx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.i2, self.j2)
    }
}

impl FromStr for NodeIdx {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::MalformedInput(format!("bad node index: {s:?}"));
        let (a, b) = s.split_once(':').ok_or_else(bad)?;
        let i2 = a.trim().parse::<i64>().map_err(|_| bad())?;
        let j2 = b.trim().parse::<i64>().map_err(|_| bad())?;
        NodeIdx::new(i2, j2)
    }
}

/// Strip membership test on raw doubled coordinates, including the parity
/// requirement that at least one coordinate be an integer.
pub fn node_in_strip(i2: i64, j2: i64, n: u32) -> bool {
    NodeIdx::new(i2, j2).map(|x| x.in_strip(n)).unwrap_or(false)
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Orientation {
    /// The line through the points with first coordinate `k + 1/2`.
    Up,
    /// The line through the points with second coordinate `k + 1/2`.
    Down,
}

/// A dashed line of the frieze: `up:k` is the line at offset `k + 1/2`
/// parallel to the second axis of the strip, `down:k` the one at offset
/// `k + 1/2` parallel to the first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LineIdx {
    pub orientation: Orientation,
    pub k: i64,
}

impl LineIdx {
    pub fn up(k: i64) -> Self {
        LineIdx { orientation: Orientation::Up, k }
    }

    pub fn down(k: i64) -> Self {
        LineIdx { orientation: Orientation::Down, k }
    }
}

impl fmt::Display for LineIdx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.orientation {
            Orientation::Up => write!(f, "up:{}", self.k),
            Orientation::Down => write!(f, "down:{}", self.k),
        }
    }
}

impl FromStr for LineIdx {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::MalformedInput(format!("bad line index: {s:?}"));
        let (kind, k) = s.split_once(':').ok_or_else(bad)?;
        let k = k.trim().parse::<i64>().map_err(|_| bad())?;
        match kind.trim() {
            "up" => Ok(LineIdx::up(k)),
            "down" => Ok(LineIdx::down(k)),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    #[test]
    fn rational_parse_display_roundtrip() {
        assert_eq!(r("4/6").to_string(), "2/3");
        assert_eq!(r("-4/6").to_string(), "-2/3");
        assert_eq!(r("4/-6").to_string(), "-2/3");
        assert_eq!(r("7").to_string(), "7");
        assert_eq!(r("0/5"), Rat::zero());
        assert!(Rat::from_str("1/0").is_err());
        assert!(Rat::from_str("a/b").is_err());
        assert!(Rat::from_str("").is_err());
    }

    #[test]
    fn exact_arithmetic() {
        let a = r("22/7");
        let b = r("-3/11");
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!((&a * &b).checked_div(&b).unwrap(), a);
        assert!(a.checked_div(&Rat::zero()).is_err());
    }

    #[test]
    fn sqrt_examples() {
        // 4 -> 2
        assert_eq!(rat_sqrt(&r("4")).unwrap(), Some(r("2")));
        // 2 -> absent
        assert_eq!(rat_sqrt(&r("2")).unwrap(), None);
        // 9/25 -> 3/5, checked independently: (3/5)^2 = 9/25
        let root = rat_sqrt(&r("9/25")).unwrap().unwrap();
        assert_eq!(root, r("3/5"));
        assert_eq!(root.sq(), r("9/25"));
        assert_eq!(rat_sqrt(&r("0")).unwrap(), Some(Rat::zero()));
        assert!(rat_sqrt(&r("-1")).is_err());
    }

    #[test]
    fn sqrt_squares_back() {
        for k in 0..50i64 {
            let q = Rat::from_frac(k * k, (k + 3) * (k + 3)).unwrap();
            let s = rat_sqrt(&q).unwrap().unwrap();
            assert_eq!(s.sq(), q);
        }
    }

    #[test]
    fn strip_membership() {
        // (i2,j2)=(0,0), n=5: lower boundary
        assert!(node_in_strip(0, 0, 5));
        // (0,12): j-i = 6 > 5
        assert!(!node_in_strip(0, 12, 5));
        // both coordinates odd: not on the grid
        assert!(!node_in_strip(1, 1, 5));
        assert!(node_in_strip(1, 2, 5));
        assert!(node_in_strip(0, 10, 5));
        assert!(!node_in_strip(2, 0, 5));
    }

    #[test]
    fn node_keys_roundtrip() {
        for (i2, j2) in [(0, 2), (-3, 4), (7, 8), (2, 5)] {
            let n = NodeIdx::new(i2, j2).unwrap();
            let back: NodeIdx = n.to_string().parse().unwrap();
            assert_eq!(n, back);
        }
        assert!(NodeIdx::from_str("1:1").is_err());
        assert!(NodeIdx::from_str("2").is_err());
        let l: LineIdx = "up:-4".parse().unwrap();
        assert_eq!(l, LineIdx::up(-4));
        assert_eq!("down:3".parse::<LineIdx>().unwrap().to_string(), "down:3");
        assert!(LineIdx::from_str("left:2").is_err());
    }
}
