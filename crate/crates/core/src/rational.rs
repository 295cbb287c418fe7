//! Exact rational numbers.
//!
//! Values that fit into a pair of machine words stay there; anything larger
//! spills into an arbitrary-precision [`BigRational`]. The representation is
//! always normalized (lowest terms, positive denominator, small whenever it
//! fits), so structural equality is numerical equality.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone)]
enum Repr {
    Small { num: i64, den: i64 },
    Big(Box<BigRational>),
}

#[derive(Clone)]
pub struct Rational(Repr);

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn fits(x: i128) -> bool {
    x > i64::MIN as i128 && x <= i64::MAX as i128
}

impl Rational {
    pub fn zero() -> Self {
        Rational(Repr::Small { num: 0, den: 1 })
    }

    pub fn one() -> Self {
        Rational(Repr::Small { num: 1, den: 1 })
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_i128(n as i128, 1)
    }

    /// Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        if num == 0 {
            return Self::zero();
        }
        let g = gcd_u128(num.unsigned_abs(), den.unsigned_abs()) as i128;
        let (mut n, mut d) = (num / g, den / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        if fits(n) && fits(d) {
            Rational(Repr::Small { num: n as i64, den: d as i64 })
        } else {
            Self::from_big(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))
        }
    }

    fn from_big(r: BigRational) -> Self {
        // `r` must already be reduced.
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN && d != i64::MIN {
                return Rational(Repr::Small { num: n, den: d });
            }
        }
        Rational(Repr::Big(Box::new(r)))
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => BigRational::new_raw(BigInt::from(*num), BigInt::from(*den)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(*den),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small { num: 1, den: 1 })
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small { den, .. } => *den == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small { num, .. } => num.signum() as i32,
            Repr::Big(b) => {
                if b.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small { num, den } => Self::from_i128(*den as i128, *num as i128),
            Repr::Big(b) => Self::from_big(b.recip()),
        })
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn factorial(n: u32) -> Self {
        Self::from_big(BigRational::from_integer((1..=n).map(BigInt::from).product::<BigInt>().max(BigInt::one())))
    }

    /// Reduces the value modulo a prime; `None` if the denominator vanishes mod `p`.
    pub fn mod_prime(&self, p: u64) -> Option<u64> {
        let (n, d) = match &self.0 {
            Repr::Small { num, den } => {
                (num.rem_euclid(p as i64) as u64, (*den as u64) % p)
            }
            Repr::Big(b) => {
                let pb = BigInt::from(p);
                let n = b.numer().mod_floor(&pb).to_u64()?;
                let d = b.denom().mod_floor(&pb).to_u64()?;
                (n, d)
            }
        };
        if d == 0 {
            return None;
        }
        Some(crate::modular::mul_mod(n, crate::modular::inv_mod(d, p), p))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_integer(n as i64)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational::from_big(r)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_big(BigRational::from_integer(n))
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small { num, den } => {
                0u8.hash(state);
                num.hash(state);
                den.hash(state);
            }
            Repr::Big(b) => {
                1u8.hash(state);
                b.hash(state);
            }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                if b == d {
                    Rational::from_i128(a + c, b)
                } else {
                    Rational::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Rational::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                Rational::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rational::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    /// Panics on division by zero.
    fn div(self, rhs: &Rational) -> Rational {
        self * &rhs.recip().expect("division by zero")
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            Repr::Small { num, den } => Rational(Repr::Small { num: -num, den: *den }),
            Repr::Big(b) => Rational::from_big(-(**b).clone()),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: &Rational) -> Rational { (&self).$m(rhs) }
        }
        impl<'a> $tr<Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = &*self - rhs;
    }
}

impl std::iter::Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let big = match s.split_once('/') {
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| format!("bad numerator in `{s}`"))?;
                let d: BigInt = d.trim().parse().map_err(|_| format!("bad denominator in `{s}`"))?;
                if d.is_zero() {
                    return Err(format!("zero denominator in `{s}`"));
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(s.parse().map_err(|_| format!("bad integer `{s}`"))?),
        };
        Ok(Rational::from_big(big))
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
