//! Univariate integer polynomials in `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Dense integer polynomial, coefficient `k` multiplies `t^k`. No trailing
/// zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> IntPoly {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> IntPoly {
        IntPoly::constant(1)
    }

    pub fn constant(c: i64) -> IntPoly {
        IntPoly::from_i64(&[c])
    }

    /// `c * t^k`
    pub fn term(c: i64, k: usize) -> IntPoly {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::from(c);
        IntPoly::new(v)
    }

    pub fn t_pow(k: usize) -> IntPoly {
        IntPoly::term(1, k)
    }

    /// `(1 - t)^k`
    pub fn one_minus_t_pow(k: usize) -> IntPoly {
        IntPoly::from_i64(&[1, -1]).pow(k)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of the highest power of `t`.
    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs: v }
    }

    pub fn pow(&self, k: usize) -> IntPoly {
        (0..k).fold(IntPoly::one(), |acc, _| &acc * self)
    }

    /// Exact division by `1 - t`, or `None` if `p(1) != 0`.
    pub fn div_one_minus_t(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if !self.eval(&BigInt::one()).is_zero() {
            return None;
        }
        // p = (1 - t) q  =>  q_k = sum_{i <= k} p_i
        let mut acc = BigInt::zero();
        let mut q = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            acc += c;
            q.push(acc.clone());
        }
        Some(IntPoly::new(q))
    }

    /// Multiplicity of the root `t = 1`; `None` for the zero polynomial.
    pub fn multiplicity_at_one(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut p = self.clone();
        let mut k = 0;
        while let Some(q) = p.div_one_minus_t() {
            p = q;
            k += 1;
        }
        Some(k)
    }

    /// Nonzero `(power, coefficient)` pairs.
    pub fn nonzero_terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.nonzero_terms() {
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{abs}*t")?,
                (_, true) => write!(f, "t^{k}")?,
                (_, false) => write!(f, "{abs}*t^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_printing() {
        let p = IntPoly::from_i64(&[1, 0, -1]).pow(3);
        assert_eq!(p.to_string(), "1 - 3*t^2 + 3*t^4 - t^6");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::from_i64(&[0, -1, 2]).to_string(), "-t + 2*t^2");
        assert_eq!(
            &IntPoly::one_minus_t_pow(2) * &IntPoly::from_i64(&[1, 1]),
            IntPoly::from_i64(&[1, -1, -1, 1])
        );
    }

    #[test]
    fn root_multiplicity_at_one() {
        let p = &IntPoly::one_minus_t_pow(3) * &IntPoly::from_i64(&[2, 5]);
        assert_eq!(p.multiplicity_at_one(), Some(3));
        assert_eq!(IntPoly::one().multiplicity_at_one(), Some(0));
        assert_eq!(IntPoly::zero().multiplicity_at_one(), None);
        assert_eq!(
            p.div_one_minus_t()
                .unwrap()
                .div_one_minus_t()
                .unwrap()
                .div_one_minus_t()
                .unwrap(),
            IntPoly::from_i64(&[2, 5])
        );
    }
}
