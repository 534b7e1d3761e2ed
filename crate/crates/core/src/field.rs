//! Coefficient fields: the rationals and prime fields `F_p`.
//!
//! Coefficients are always carried as [`BigRational`]. Over `F_p` a
//! coefficient is an integer in `[0, p)`; every operation goes through the
//! [`Field`] descriptor so values never leave their canonical range.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// Builds `F_p`, rejecting composite moduli.
    pub fn prime(p: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    /// Maps an arbitrary rational into the field. Fails when the denominator
    /// vanishes modulo `p`.
    pub fn element(&self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rationals => Ok(q.clone()),
            Field::Prime(p) => {
                let p_big = BigInt::from(*p);
                let num = q.numer().mod_floor(&p_big);
                let den = q.denom().mod_floor(&p_big);
                if den.is_zero() {
                    return Err(Error::CoefficientNotInField(format!(
                        "denominator of {q} vanishes modulo {p}"
                    )));
                }
                let den_inv = mod_inverse(den.to_u64().unwrap(), *p);
                let v = (num * BigInt::from(den_inv)).mod_floor(&p_big);
                Ok(BigRational::from_integer(v))
            }
        }
    }

    pub fn from_int(&self, v: i64) -> Scalar {
        self.element(&BigRational::from_integer(BigInt::from(v)))
            .expect("integers always lie in the field")
    }

    pub fn one(&self) -> Scalar {
        BigRational::one()
    }

    pub fn zero(&self) -> Scalar {
        BigRational::zero()
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.reduce(-a)
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!a.is_zero(), "inverse of zero");
        match self {
            Field::Rationals => a.recip(),
            Field::Prime(p) => {
                let v = a.numer().to_u64().expect("canonical F_p element");
                BigRational::from_integer(BigInt::from(mod_inverse(v, *p)))
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    fn reduce(&self, v: BigRational) -> Scalar {
        match self {
            Field::Rationals => v,
            Field::Prime(p) => {
                debug_assert!(v.is_integer());
                BigRational::from_integer(v.to_integer().mod_floor(&BigInt::from(*p)))
            }
        }
    }

    /// Signed representative used for printing: rationals as-is, `F_p`
    /// elements in `(-p/2, p/2]`.
    pub fn display_value(&self, a: &Scalar) -> BigRational {
        match self {
            Field::Rationals => a.clone(),
            Field::Prime(p) => {
                let v = a.to_integer();
                if v.clone() * 2 > BigInt::from(*p) {
                    BigRational::from_integer(v - BigInt::from(*p))
                } else {
                    a.clone()
                }
            }
        }
    }

    pub fn is_negative_display(&self, a: &Scalar) -> bool {
        self.display_value(a).is_negative()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "q"),
            Field::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") || s.eq_ignore_ascii_case("qq") {
            return Ok(Field::Rationals);
        }
        if let Some(rest) = s.strip_prefix("fp:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad characteristic {rest:?}")))?;
            return Field::prime(p);
        }
        Err(Error::InvalidField(format!(
            "unknown field {s:?} (expected q or fp:<p>)"
        )))
    }
}

pub(crate) fn mod_inverse(a: u64, p: u64) -> u64 {
    mod_pow(a % p, p - 2, p)
}

pub(crate) fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn prime_field_reduces_fractions() {
        let f = Field::prime(7).unwrap();
        // 1/2 = 4 mod 7
        assert_eq!(f.element(&q(1, 2)).unwrap(), q(4, 1));
        assert_eq!(f.element(&q(-1, 1)).unwrap(), q(6, 1));
        assert!(f.element(&q(1, 7)).is_err());
        assert_eq!(f.mul(&q(4, 1), &q(2, 1)), q(1, 1));
        assert_eq!(f.inv(&q(3, 1)), q(5, 1));
    }

    #[test]
    fn characteristic_two_collapses_signs() {
        let f = Field::prime(2).unwrap();
        assert_eq!(f.from_int(-1), f.from_int(1));
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(2_305_843_009_213_693_951));
        assert!(!is_prime(1));
        assert!(!is_prime(561));
        assert!(Field::prime(15).is_err());
    }

    #[test]
    fn parses_field_descriptors() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("fp:101".parse::<Field>().unwrap(), Field::Prime(101));
        assert!("fp:100".parse::<Field>().is_err());
        assert!("r".parse::<Field>().is_err());
    }
}
