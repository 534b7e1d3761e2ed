//! Hilbert-Poincare numerators of graded quotients `R/I`.
//!
//! For a homogeneous ideal the series is `N(t) / (1 - t)^arity`; `N` is
//! computed on an initial ideal with the pivot recursion
//! `N(M) = N(M + (x)) + t * N(M : x)`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{initial_ideal, Ideal};
use crate::intpoly::IntPoly;
use crate::poly::{Monomial, TermOrder};

/// Numerator of the Hilbert-Poincare series over `(1 - t)^arity`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HilbertNumerator {
    pub poly: IntPoly,
    pub arity: usize,
}

impl HilbertNumerator {
    pub fn new(poly: IntPoly, arity: usize) -> Self {
        HilbertNumerator { poly, arity }
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.poly.coeff(k)
    }
}

impl fmt::Display for HilbertNumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

impl fmt::Debug for HilbertNumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / (1 - t)^{}", self.poly, self.arity)
    }
}

fn check_graded_ring(ideal: &Ideal) -> Result<()> {
    if ideal.ring().has_aux() {
        return Err(Error::AuxiliaryVariables(format!(
            "Hilbert series are only defined over the graded ring, got {}",
            ideal.ring()
        )));
    }
    Ok(())
}

/// Numerator for a monomial ideal.
pub fn monomial_hilbert_numerator(m: &Ideal) -> Result<HilbertNumerator> {
    check_graded_ring(m)?;
    let mut gens = Vec::with_capacity(m.generators().len());
    for g in m.generators() {
        if !g.is_monomial() {
            return Err(Error::NotMonomial(g.to_string()));
        }
        gens.push(g.terms()[0].0.clone());
    }
    let arity = m.ring().nvars();
    let mut memo = HashMap::new();
    Ok(HilbertNumerator::new(
        numerator(minimalize(gens), &mut memo),
        arity,
    ))
}

/// Numerator of `R/I` for homogeneous `I`, via the initial ideal for `ord`.
pub fn hilbert_numerator(ideal: &Ideal, ord: &TermOrder) -> Result<HilbertNumerator> {
    check_graded_ring(ideal)?;
    if let Some(g) = ideal.generators().iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(g.to_string()));
    }
    monomial_hilbert_numerator(&initial_ideal(ideal, ord))
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), m.clone()));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort();
    out
}

fn numerator(gens: Vec<Monomial>, memo: &mut HashMap<Vec<Monomial>, IntPoly>) -> IntPoly {
    if gens.is_empty() {
        return IntPoly::one();
    }
    let nvars = gens[0].nvars();
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let (pivot, &best) = counts
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .unwrap();
    if best <= 1 {
        // pairwise coprime: a regular sequence
        return gens.iter().fold(IntPoly::one(), |acc, g| {
            &acc * &(&IntPoly::one() - &IntPoly::t_pow(g.degree() as usize))
        });
    }
    if let Some(hit) = memo.get(&gens) {
        return hit.clone();
    }
    let x = Monomial::var(nvars, pivot, 1);
    let mut with_x = gens.clone();
    with_x.push(x.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            if g.exponent(pivot) > 0 {
                g.div(&x).unwrap()
            } else {
                g.clone()
            }
        })
        .collect();
    let a = numerator(minimalize(with_x), memo);
    let b = numerator(minimalize(colon), memo);
    let result = &a + &b.shift(1);
    memo.insert(gens, result.clone());
    result
}

/// `H(0..=d_max)` from the expansion of `N / (1 - t)^arity`.
pub fn hilbert_function(n: &HilbertNumerator, d_max: usize) -> Vec<BigInt> {
    let a = n.arity;
    (0..=d_max)
        .map(|d| {
            n.poly
                .nonzero_terms()
                .filter(|(k, _)| *k <= d)
                .map(|(k, c)| {
                    let count = if a == 0 {
                        BigInt::from((d == k) as u8)
                    } else {
                        binomial(BigInt::from(d - k + a - 1), BigInt::from(a - 1))
                    };
                    c * count
                })
                .fold(BigInt::zero(), |acc, v| acc + v)
        })
        .collect()
}

/// Krull dimension of the quotient: arity minus the order of vanishing of
/// `N` at `t = 1`. `None` when `N = 0` (the unit ideal).
pub fn krull_dim(n: &HilbertNumerator) -> Option<usize> {
    n.poly.multiplicity_at_one().map(|m| n.arity - m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::graph_ideals::{component_primes, parity_ideal, Component, Graph};
    use crate::poly::Ring;

    fn nums(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn monomial_numerators() {
        let r1 = Ring::custom(vec!["x".into()], vec![false], Field::Rationals).unwrap();
        let m = Ideal::parse(&r1, &["x^2"]).unwrap();
        assert_eq!(
            monomial_hilbert_numerator(&m).unwrap().poly,
            IntPoly::from_i64(&[1, 0, -1])
        );

        let r2 = Ring::custom(
            vec!["x".into(), "y".into()],
            vec![false; 2],
            Field::Rationals,
        )
        .unwrap();
        let m = Ideal::parse(&r2, &["x", "y"]).unwrap();
        assert_eq!(
            monomial_hilbert_numerator(&m).unwrap().poly,
            IntPoly::from_i64(&[1, -2, 1])
        );

        let k3 = parity_ideal(&Graph::complete(3), Field::Rationals);
        let init = initial_ideal(&k3, &TermOrder::DegRevLex);
        assert_eq!(
            monomial_hilbert_numerator(&init).unwrap().poly,
            IntPoly::from_i64(&[1, 0, -3, 0, 3, 0, -1])
        );
        assert!(matches!(
            monomial_hilbert_numerator(&k3),
            Err(Error::NotMonomial(_))
        ));
    }

    #[test]
    fn numerators_of_named_ideals() {
        let q = Field::Rationals;
        for n in 3..=5 {
            for k in 1..n {
                let p = component_primes(n, &Component::Prime(k, n), q).unwrap();
                let expect = &IntPoly::from_i64(&[1, 1]) * &IntPoly::one_minus_t_pow(2 * n - 3);
                assert_eq!(
                    hilbert_numerator(&p, &TermOrder::DegRevLex).unwrap().poly,
                    expect
                );
            }
        }
        let r = Ring::graph(3, q);
        let zero = Ideal::zero(&r);
        let n0 = hilbert_numerator(&zero, &TermOrder::Lex).unwrap();
        assert_eq!(n0.poly, IntPoly::one());
        assert_eq!(krull_dim(&n0), Some(6));

        let bad = Ideal::parse(&r, &["x1^2 - y1"]).unwrap();
        assert!(matches!(
            hilbert_numerator(&bad, &TermOrder::Lex),
            Err(Error::NotHomogeneous(_))
        ));
        let rt = r.with_aux("t").unwrap();
        assert!(matches!(
            hilbert_numerator(&Ideal::zero(&rt), &TermOrder::Lex),
            Err(Error::AuxiliaryVariables(_))
        ));
    }

    #[test]
    fn hilbert_function_values() {
        let n = HilbertNumerator::new(IntPoly::one_minus_t_pow(6), 6);
        assert_eq!(hilbert_function(&n, 3), nums(&[1, 0, 0, 0]));
        assert_eq!(krull_dim(&n), Some(0));

        let k3 = HilbertNumerator::new(IntPoly::from_i64(&[1, 0, -1]).pow(3), 6);
        assert_eq!(
            hilbert_function(&k3, 6),
            nums(&[1, 6, 18, 38, 66, 102, 146])
        );
        assert_eq!(krull_dim(&k3), Some(3));

        // P_12 for n = 3: (1 + t)(1 - t)^3 over (1 - t)^6
        let p12 = HilbertNumerator::new(
            &IntPoly::from_i64(&[1, 1]) * &IntPoly::one_minus_t_pow(3),
            6,
        );
        assert_eq!(hilbert_function(&p12, 3), nums(&[1, 4, 9, 16]));

        let unit = HilbertNumerator::new(IntPoly::zero(), 4);
        assert_eq!(krull_dim(&unit), None);
    }
}
