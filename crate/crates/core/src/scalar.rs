//! Exact coefficient fields: rationals and prime fields `F_p`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Which field coefficients live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Field {
    #[default]
    Rational,
    /// `F_p` for a prime `p < 2^31`.
    Prime(u32),
}

impl Field {
    pub fn prime(p: u32) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p) {
            return Err(Error::InvalidField(format!(
                "{p} is not a prime below 2^31"
            )));
        }
        Ok(Field::Prime(p))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => small(Ratio::from_integer(n)),
            Field::Prime(p) => Scalar::Prime {
                value: n.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    /// `num / den` in this field.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        match self {
            Field::Rational => Ok(big(BigRational::new(num.clone(), den.clone()))),
            Field::Prime(p) => {
                let reduce = |n: &BigInt| {
                    let m = BigInt::from(p);
                    (((n % &m) + &m) % &m).to_u32().expect("fits")
                };
                let d = Scalar::Prime {
                    value: reduce(den),
                    modulus: p,
                };
                let n = Scalar::Prime {
                    value: reduce(num),
                    modulus: p,
                };
                let inv = d
                    .inverse()
                    .ok_or_else(|| Error::Parse(format!("denominator {den} vanishes mod {p}")))?;
                Ok(n.mul(&inv))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `q` or `fp:P`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" | "Q" => Ok(Field::Rational),
            _ => {
                let p = s
                    .strip_prefix("fp:")
                    .and_then(|p| p.parse::<u32>().ok())
                    .ok_or_else(|| {
                        Error::InvalidField(format!("expected `q` or `fp:P`, got `{s}`"))
                    })?;
                Field::prime(p)
            }
        }
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A field element.
///
/// A rational is stored as [`Scalar::Small`] whenever its reduced numerator
/// and denominator fit in `i64` (numerator `!= i64::MIN`), and as
/// [`Scalar::Big`] otherwise, so equal values have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Small(Ratio<i64>),
    Big(BigRational),
    Prime { value: u32, modulus: u32 },
}

fn small(r: Ratio<i64>) -> Scalar {
    if *r.numer() == i64::MIN {
        return Scalar::Big(widen(&r));
    }
    Scalar::Small(r)
}

fn big(r: BigRational) -> Scalar {
    match (r.numer().to_i64(), r.denom().to_i64()) {
        (Some(n), Some(d)) if n != i64::MIN => Scalar::Small(Ratio::new_raw(n, d)),
        _ => Scalar::Big(r),
    }
}

fn widen(r: &Ratio<i64>) -> BigRational {
    BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Small(_) | Scalar::Big(_) => Field::Rational,
            Scalar::Prime { modulus, .. } => Field::Prime(*modulus),
        }
    }

    fn as_big(&self) -> BigRational {
        match self {
            Scalar::Small(r) => widen(r),
            Scalar::Big(r) => r.clone(),
            Scalar::Prime { .. } => unreachable!("not a rational"),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Small(r) => r.is_zero(),
            Scalar::Big(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Small(r) => r.is_one(),
            Scalar::Big(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Small(a), Scalar::Small(b)) => match a.checked_add(b) {
                Some(r) => small(r),
                None => big(widen(a) + widen(b)),
            },
            (
                Scalar::Prime {
                    value: a,
                    modulus: p,
                },
                Scalar::Prime {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Scalar::Prime {
                value: ((*a as u64 + *b as u64) % *p as u64) as u32,
                modulus: *p,
            },
            (Scalar::Prime { .. }, _) | (_, Scalar::Prime { .. }) => {
                panic!("mixed-field scalar arithmetic")
            }
            _ => big(self.as_big() + other.as_big()),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Small(r) => small(Ratio::new_raw(-*r.numer(), *r.denom())),
            Scalar::Big(r) => big(-r),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Small(a), Scalar::Small(b)) => {
                if b.is_one() {
                    return self.clone();
                }
                if a.is_one() {
                    return other.clone();
                }
                match a.checked_mul(b) {
                    Some(r) => small(r),
                    None => big(widen(a) * widen(b)),
                }
            }
            (
                Scalar::Prime {
                    value: a,
                    modulus: p,
                },
                Scalar::Prime {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Scalar::Prime {
                value: ((*a as u64 * *b as u64) % *p as u64) as u32,
                modulus: *p,
            },
            (Scalar::Prime { .. }, _) | (_, Scalar::Prime { .. }) => {
                panic!("mixed-field scalar arithmetic")
            }
            _ => big(self.as_big() * other.as_big()),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Small(r) => Some(small(r.recip())),
            Scalar::Big(r) => Some(big(r.recip())),
            Scalar::Prime { value, modulus } => {
                // Fermat: a^(p-2)
                let p = *modulus as u64;
                let (mut base, mut exp, mut acc) = (*value as u64, p - 2, 1u64);
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    exp >>= 1;
                }
                Some(Scalar::Prime {
                    value: acc as u32,
                    modulus: *modulus,
                })
            }
        }
    }

    /// Whether printing needs a leading minus sign.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Small(r) => r.is_negative(),
            Scalar::Big(r) => r.is_negative(),
            Scalar::Prime { .. } => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Small(r) => write!(f, "{r}"),
            Scalar::Big(r) => write!(f, "{r}"),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses a scalar such as `3`, `-2`, `3/2` into `field`.
pub fn parse_scalar(field: Field, text: &str) -> Result<Scalar> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let parse = |s: &str| {
        s.parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad scalar `{text}`")))
    };
    field.from_ratio(&parse(num)?, &parse(den)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let q = Field::Rational;
        let a = parse_scalar(q, "3/2").unwrap();
        let b = parse_scalar(q, "-1/6").unwrap();
        assert_eq!(a.add(&b), parse_scalar(q, "4/3").unwrap());
        assert_eq!(a.mul(&b), parse_scalar(q, "-1/4").unwrap());
        assert_eq!(a.inverse().unwrap(), parse_scalar(q, "2/3").unwrap());
        assert_eq!(parse_scalar(q, "4/6").unwrap().to_string(), "2/3");
        assert_eq!(parse_scalar(q, "2/-4").unwrap().to_string(), "-1/2");
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let q = Field::Rational;
        let huge = q.from_i64(i64::MAX);
        let sum = huge.add(&huge);
        assert!(matches!(sum, Scalar::Big(_)));
        assert_eq!(sum.sub(&huge), huge);
        assert!(matches!(sum.sub(&huge), Scalar::Small(_)));
        let sq = huge.mul(&huge);
        assert_eq!(sq.mul(&huge.inverse().unwrap()), huge);
        assert_eq!(q.from_i64(i64::MIN).neg().neg(), q.from_i64(i64::MIN));
        assert!(matches!(q.from_i64(i64::MIN), Scalar::Big(_)));
        assert_eq!(
            parse_scalar(q, "123456789012345678901234567890/2")
                .unwrap()
                .to_string(),
            "61728394506172839450617283945"
        );
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = Field::prime(7).unwrap();
        let a = f.from_i64(3);
        assert_eq!(a.mul(&a.inverse().unwrap()), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(6));
        assert_eq!(parse_scalar(f, "1/2").unwrap(), f.from_i64(4));
        assert!(parse_scalar(f, "1/7").is_err());
        assert!(f.zero().inverse().is_none());
    }

    #[test]
    fn field_descriptors() {
        assert_eq!("q".parse::<Field>(), Ok(Field::Rational));
        assert_eq!("fp:101".parse::<Field>(), Ok(Field::Prime(101)));
        assert!("fp:100".parse::<Field>().is_err());
        assert!("fp:x".parse::<Field>().is_err());
        assert!(Field::prime(2147483659).is_err());
    }
}
