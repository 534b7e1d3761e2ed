//! Closed-form predictions for the parity binomial edge ideal of `K_n`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::HilbertNumerator;
use crate::intpoly::IntPoly;

pub const DEFAULT_N_CAP: usize = 64;

/// Predicted invariants of `R/I_{K_n}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantPrediction {
    pub n: usize,
    pub dim: usize,
    pub depth: usize,
    pub reg: usize,
    pub pd: usize,
    pub extremal_betti: u64,
}

/// The numerators attached to the intermediate quotients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaNumerator {
    /// `R/(I_{k-1} : f_kn) = R/P_kn`: `(1 + t)(1 - t)^{2n-3}`.
    ColonByMinor,
    /// `R/(I_{n-2} : (x_n + y_n))`: `(1 - t)^n + 2t(1 - t)^{2n-3}`.
    ColonByLinearForm,
    /// `R/(x_n + y_n, I_{n-2})`: `t(1 - t)^n + (1 - t)^2 N_{n-1}`.
    HyperplaneSection,
}

impl std::str::FromStr for LemmaNumerator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "colon-minor" => Ok(LemmaNumerator::ColonByMinor),
            "colon-linear" => Ok(LemmaNumerator::ColonByLinearForm),
            "section" => Ok(LemmaNumerator::HyperplaneSection),
            other => Err(Error::Usage(format!("unknown lemma numerator {other:?}"))),
        }
    }
}

/// Range limits for the formulas; the cap only bounds output size.
#[derive(Clone, Copy, Debug)]
pub struct Formulas {
    pub n_cap: usize,
}

impl Default for Formulas {
    fn default() -> Self {
        Formulas {
            n_cap: DEFAULT_N_CAP,
        }
    }
}

fn one_plus_t() -> IntPoly {
    IntPoly::from_i64(&[1, 1])
}

/// Expansion of the closed form; also valid (and equal to `1 - t^2`) at
/// `n = 2`.
fn closed_form_raw(n: usize) -> IntPoly {
    let n_i = n as i64;
    let bracket = IntPoly::from_i64(&[
        -1,
        3,
        (n_i * n_i + n_i - 6) / 2,
        (n_i * n_i - 3 * n_i + 2) / 2,
    ]);
    &IntPoly::one_minus_t_pow(n).scale(&BigInt::from(2))
        + &(&bracket * &IntPoly::one_minus_t_pow(2 * n - 3))
}

impl Formulas {
    fn check(&self, n: usize) -> Result<()> {
        if n < 3 {
            return Err(Error::Hypothesis(format!(
                "n = {n}: the formulas need n >= 3"
            )));
        }
        if n > self.n_cap {
            return Err(Error::OutOfRange(format!(
                "n = {n} exceeds the cap {}",
                self.n_cap
            )));
        }
        Ok(())
    }

    /// `2(1-t)^n + [-1 + 3t + (n^2+n-6)/2 t^2 + (n^2-3n+2)/2 t^3](1-t)^{2n-3}`.
    pub fn closed_form_numerator(&self, n: usize) -> Result<HilbertNumerator> {
        self.check(n)?;
        Ok(HilbertNumerator::new(closed_form_raw(n), 2 * n))
    }

    pub fn lemma_numerator(&self, n: usize, which: LemmaNumerator) -> Result<HilbertNumerator> {
        self.check(n)?;
        let poly = match which {
            LemmaNumerator::ColonByMinor => &one_plus_t() * &IntPoly::one_minus_t_pow(2 * n - 3),
            LemmaNumerator::ColonByLinearForm => {
                &IntPoly::one_minus_t_pow(n)
                    + &IntPoly::one_minus_t_pow(2 * n - 3)
                        .shift(1)
                        .scale(&BigInt::from(2))
            }
            LemmaNumerator::HyperplaneSection => {
                &IntPoly::one_minus_t_pow(n).shift(1)
                    + &(&IntPoly::one_minus_t_pow(2) * &closed_form_raw(n - 1))
            }
        };
        Ok(HilbertNumerator::new(poly, 2 * n))
    }

    /// `beta_{2n-3, 2n} = (n^2 - 3n + 2) / 2 = C(n-1, 2)`.
    pub fn extremal_betti(&self, n: usize) -> Result<u64> {
        self.check(n)?;
        let n = n as u64;
        Ok((n * n - 3 * n + 2) / 2)
    }

    pub fn predicted_invariants(&self, n: usize) -> Result<InvariantPrediction> {
        self.check(n)?;
        Ok(InvariantPrediction {
            n,
            dim: n,
            depth: 3,
            reg: 3,
            pd: 2 * n - 3,
            extremal_betti: self.extremal_betti(n)?,
        })
    }

    /// The numerator reassembled from the exact sequences:
    /// `(n-2) t^2 (1+t)(1-t)^{2n-3} + 2t(1-t)^n + 2t^2(1-t)^{2n-3} + (1-t)^2 N_{n-1}`.
    pub fn recursive_numerator(&self, n: usize) -> Result<HilbertNumerator> {
        self.check(n)?;
        let w = IntPoly::one_minus_t_pow(2 * n - 3);
        let chain = (&one_plus_t() * &w)
            .shift(2)
            .scale(&BigInt::from(n as i64 - 2));
        let section = &IntPoly::one_minus_t_pow(n).shift(1).scale(&BigInt::from(2))
            + &w.shift(2).scale(&BigInt::from(2));
        let rest = &IntPoly::one_minus_t_pow(2) * &closed_form_raw(n - 1);
        Ok(HilbertNumerator::new(&(&chain + &section) + &rest, 2 * n))
    }
}

pub fn closed_form_numerator(n: usize) -> Result<HilbertNumerator> {
    Formulas::default().closed_form_numerator(n)
}

pub fn lemma_numerators(n: usize, which: LemmaNumerator) -> Result<HilbertNumerator> {
    Formulas::default().lemma_numerator(n, which)
}

pub fn extremal_betti(n: usize) -> Result<u64> {
    Formulas::default().extremal_betti(n)
}

pub fn predicted_invariants(n: usize) -> Result<InvariantPrediction> {
    Formulas::default().predicted_invariants(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::krull_dim;
    use num_integer::binomial;

    /// Independent oracle: expand the closed form with rational
    /// coefficients by repeated convolution, no shared helpers.
    fn oracle(n: i64) -> Vec<i64> {
        fn conv(a: &[i64], b: &[i64]) -> Vec<i64> {
            let mut out = vec![0; a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] += x * y;
                }
            }
            out
        }
        let pow = |k: i64| (0..k).fold(vec![1i64], |acc, _| conv(&acc, &[1, -1]));
        let mut left: Vec<i64> = pow(n).iter().map(|c| 2 * c).collect();
        let right = conv(
            &[-1, 3, (n * n + n - 6) / 2, (n * n - 3 * n + 2) / 2],
            &pow(2 * n - 3),
        );
        left.resize(right.len().max(left.len()), 0);
        for (k, c) in right.iter().enumerate() {
            left[k] += c;
        }
        while left.last() == Some(&0) {
            left.pop();
        }
        left
    }

    #[test]
    fn closed_form_small_cases() {
        assert_eq!(oracle(3), vec![1, 0, -3, 0, 3, 0, -1]);
        assert_eq!(oracle(4), vec![1, 0, -6, 0, 22, -24, 2, 8, -3]);
        assert_eq!(
            closed_form_numerator(3).unwrap().poly,
            IntPoly::from_i64(&oracle(3))
        );
        assert_eq!(
            closed_form_numerator(4).unwrap().poly,
            IntPoly::from_i64(&oracle(4))
        );
        for n in 5..=10 {
            assert_eq!(
                closed_form_numerator(n).unwrap().poly,
                IntPoly::from_i64(&oracle(n as i64))
            );
        }
        assert_eq!(closed_form_raw(2), IntPoly::from_i64(&[1, 0, -1]));
        assert!(closed_form_numerator(2).is_err());
        assert!(closed_form_numerator(65).is_err());
        assert!(Formulas { n_cap: 100 }.closed_form_numerator(65).is_ok());
    }

    #[test]
    fn closed_form_structure() {
        for n in 3..=10usize {
            let p = closed_form_numerator(n).unwrap();
            assert_eq!(krull_dim(&p), Some(n));
            assert_eq!(p.coeff(1), BigInt::from(0));
            assert_eq!(p.coeff(2), -binomial(BigInt::from(n), BigInt::from(2)));
            assert_eq!(p.poly.degree(), Some(2 * n));
            assert_eq!(
                p.poly.leading_coeff(),
                -BigInt::from(extremal_betti(n).unwrap())
            );
        }
    }

    #[test]
    fn recursion_matches_closed_form() {
        for n in 4..=10 {
            assert_eq!(recursive_numerator(n), closed_form_numerator(n).unwrap());
        }
    }

    fn recursive_numerator(n: usize) -> HilbertNumerator {
        Formulas::default().recursive_numerator(n).unwrap()
    }

    #[test]
    fn lemma_numerators_expand() {
        let p = lemma_numerators(4, LemmaNumerator::ColonByMinor).unwrap();
        assert_eq!(
            p.poly,
            &IntPoly::from_i64(&[1, 1]) * &IntPoly::one_minus_t_pow(5)
        );
        let p = lemma_numerators(3, LemmaNumerator::ColonByLinearForm).unwrap();
        assert_eq!(
            p.poly,
            &IntPoly::one_minus_t_pow(3) * &IntPoly::from_i64(&[1, 2])
        );
        let p = lemma_numerators(4, LemmaNumerator::HyperplaneSection).unwrap();
        let expect = &IntPoly::one_minus_t_pow(4).shift(1)
            + &(&IntPoly::one_minus_t_pow(2) * &closed_form_numerator(3).unwrap().poly);
        assert_eq!(p.poly, expect);
        assert!("nope".parse::<LemmaNumerator>().is_err());
    }

    #[test]
    fn invariants_and_extremal_numbers() {
        assert_eq!(extremal_betti(7).unwrap(), 15);
        assert_eq!(extremal_betti(3).unwrap(), 1);
        assert_eq!(extremal_betti(4).unwrap(), 3);
        let p5 = predicted_invariants(5).unwrap();
        assert_eq!((p5.dim, p5.depth, p5.reg, p5.pd), (5, 3, 3, 7));
        let p3 = predicted_invariants(3).unwrap();
        assert_eq!((p3.dim, p3.depth, p3.reg, p3.pd), (3, 3, 3, 3));
        for n in 3..=10 {
            let p = predicted_invariants(n).unwrap();
            assert_eq!(p.depth + p.pd, 2 * n);
            assert_eq!(p.pd + p.reg, 2 * n);
        }
        assert!(predicted_invariants(2).is_err());
    }
}
