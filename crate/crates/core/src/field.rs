//! Coefficient fields.
//!
//! Two exact fields are provided: [`Q`], the rationals with an inline
//! small-value representation that spills to arbitrary precision, and
//! [`Fp`], the prime field of order 32003.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// An exact field usable as a polynomial coefficient domain.
pub trait Field:
    Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Short name used in reports (`q` or `fp32003`).
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    /// Whether the canonical printed form carries a leading minus sign.
    fn is_negative(&self) -> bool;

    /// Parses an unsigned literal: `7` or `7/3`.
    fn parse_literal(s: &str) -> Option<Self>;
}

/// Rational number. Values whose numerator and denominator fit in an `i64`
/// are stored inline; everything else is a `BigRational`.
///
/// The representation is canonical (reduced, positive denominator, inline
/// whenever possible), so derived equality and hashing are value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Q {
    Small(i64, i64),
    Big(BigRational),
}

impl Q {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(mut num: i128, mut den: i128) -> Self {
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(n), Ok(d)) if n != i64::MIN => Q::Small(n, d),
            _ => Q::Big(BigRational::new_raw(BigInt::from(num), BigInt::from(den))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        // BigRational arithmetic keeps values reduced with positive denominator.
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN => Q::Small(n, d),
            _ => Q::Big(r),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Q::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Q::Big(r) => r.clone(),
        }
    }

    pub fn numer_i64(&self) -> Option<i64> {
        match self {
            Q::Small(n, _) => Some(*n),
            Q::Big(_) => None,
        }
    }
}

impl Field for Q {
    const NAME: &'static str = "q";

    fn zero() -> Self {
        Q::Small(0, 1)
    }
    fn one() -> Self {
        Q::Small(1, 1)
    }
    fn from_i64(v: i64) -> Self {
        Q::new(v, 1)
    }
    fn is_zero(&self) -> bool {
        matches!(self, Q::Small(0, _))
    }
    fn is_one(&self) -> bool {
        matches!(self, Q::Small(1, 1))
    }

    fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Q::Small(a, 1), Q::Small(c, 1)) => match a.checked_add(*c) {
                Some(s) if s != i64::MIN => Q::Small(s, 1),
                _ => Q::from_i128(*a as i128 + *c as i128, 1),
            },
            (Q::Small(a, b), Q::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Q::from_i128(a * d + c * b, b * d)
            }
            _ => Q::from_big(self.to_big() + other.to_big()),
        }
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Q::Small(a, 1), Q::Small(c, 1)) => match a.checked_mul(*c) {
                Some(p) if p != i64::MIN => Q::Small(p, 1),
                _ => Q::from_i128(*a as i128 * *c as i128, 1),
            },
            (Q::Small(a, b), Q::Small(c, d)) => {
                Q::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Q::from_big(self.to_big() * other.to_big()),
        }
    }

    fn neg(&self) -> Self {
        match self {
            Q::Small(a, b) => Q::Small(-a, *b),
            Q::Big(r) => Q::from_big(-r.clone()),
        }
    }

    fn inv(&self) -> Self {
        match self {
            Q::Small(0, _) => panic!("inverse of zero"),
            Q::Small(a, b) => {
                if *a < 0 {
                    Q::Small(-b, -a)
                } else {
                    Q::Small(*b, *a)
                }
            }
            Q::Big(r) => Q::from_big(r.recip()),
        }
    }

    fn is_negative(&self) -> bool {
        match self {
            Q::Small(a, _) => *a < 0,
            Q::Big(r) => r.is_negative(),
        }
    }

    fn parse_literal(s: &str) -> Option<Self> {
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        if num.is_empty() || !num.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        if den.is_empty() || !den.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let n: BigInt = num.parse().ok()?;
        let d: BigInt = den.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Q::from_big(BigRational::new(n, d)))
    }
}

impl fmt::Display for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Q::Small(a, 1) => write!(f, "{a}"),
            Q::Small(a, b) => write!(f, "{a}/{b}"),
            Q::Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Q::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Q {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The prime used by [`Fp`].
pub const PRIME: u32 = 32003;

/// Element of the prime field of order [`PRIME`], stored in `0..PRIME`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp(u32);

impl Fp {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(PRIME as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    /// Representative in `-(p-1)/2 ..= (p-1)/2`.
    pub fn symmetric(self) -> i64 {
        if self.0 > PRIME / 2 {
            self.0 as i64 - PRIME as i64
        } else {
            self.0 as i64
        }
    }
}

impl Field for Fp {
    const NAME: &'static str = "fp32003";

    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn is_one(&self) -> bool {
        self.0 == 1
    }
    fn add(&self, other: &Self) -> Self {
        let s = self.0 + other.0;
        Fp(if s >= PRIME { s - PRIME } else { s })
    }
    fn sub(&self, other: &Self) -> Self {
        Fp(if self.0 >= other.0 {
            self.0 - other.0
        } else {
            self.0 + PRIME - other.0
        })
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(((self.0 as u64 * other.0 as u64) % PRIME as u64) as u32)
    }
    fn neg(&self) -> Self {
        Fp(if self.0 == 0 { 0 } else { PRIME - self.0 })
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero");
        // Fermat: a^(p-2)
        let mut base = self.0 as u64;
        let mut exp = PRIME - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % PRIME as u64;
            }
            base = base * base % PRIME as u64;
            exp >>= 1;
        }
        Fp(acc as u32)
    }
    fn is_negative(&self) -> bool {
        self.0 > PRIME / 2
    }
    fn parse_literal(s: &str) -> Option<Self> {
        let q = Q::parse_literal(s)?;
        let big = q.to_big();
        let p = BigInt::from(PRIME);
        let num = big.numer().mod_floor(&p).to_i64()?;
        let den = big.denom().mod_floor(&p).to_i64()?;
        if den == 0 {
            return None;
        }
        Some(Fp::new(num).div(&Fp::new(den)))
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symmetric())
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symmetric())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_small_arithmetic_is_reduced() {
        let a = Q::new(2, 4);
        assert_eq!(a, Q::new(1, 2));
        assert_eq!(a.add(&Q::new(1, 2)), Q::one());
        assert_eq!(Q::new(3, -6), Q::new(-1, 2));
        assert_eq!(Q::new(-2, 3).inv(), Q::new(-3, 2));
        assert!(Q::new(1, 2).sub(&Q::new(1, 2)).is_zero());
    }

    #[test]
    fn q_overflow_spills_and_returns() {
        let big = Q::from_i64(i64::MAX);
        let sq = big.mul(&big);
        assert!(matches!(sq, Q::Big(_)));
        let back = sq.div(&big);
        assert_eq!(back, big);
        assert!(matches!(back, Q::Small(..)));
    }

    #[test]
    fn fp_inverse_and_symmetric_print() {
        let a = Fp::new(12345);
        assert!(a.mul(&a.inv()).is_one());
        assert_eq!(Fp::new(-1).to_string(), "-1");
        assert_eq!(
            Fp::parse_literal("1/2").unwrap().mul(&Fp::new(2)),
            Fp::one()
        );
    }

    #[test]
    fn literal_parsing() {
        assert_eq!(Q::parse_literal("7/21"), Some(Q::new(1, 3)));
        assert_eq!(Q::parse_literal("x"), None);
        assert_eq!(Q::parse_literal("1/0"), None);
    }
}
