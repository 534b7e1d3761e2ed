use std::fmt;

use smallvec::SmallVec;

pub type Exponents = SmallVec<[u16; 16]>;

/// Dense exponent vector, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Exponents,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn var(nvars: usize, idx: usize, exp: u16) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[idx] = exp;
        m
    }

    pub fn from_exponents<I: IntoIterator<Item = u16>>(exps: I) -> Monomial {
        Monomial {
            exps: exps.into_iter().collect(),
        }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, idx: usize) -> u16 {
        self.exps[idx]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices of variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Does `self` divide `other`?
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a.min(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a + b)
                .collect(),
        }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| a - b)
                .collect(),
        })
    }

    /// Bit `i mod 64` is set when variable `i` occurs. A divisor's mask is a
    /// subset of the dividend's mask.
    pub fn divmask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1u64 << (i % 64)))
    }

    pub(crate) fn exps_mut(&mut self) -> &mut Exponents {
        &mut self.exps
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// All monomials of total degree `d` in `nvars` variables, in lex-descending
/// order of exponent vectors.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = Monomial::one(nvars);
    fill(nvars, 0, d, &mut cur, &mut out);
    out
}

fn fill(nvars: usize, idx: usize, left: u32, cur: &mut Monomial, out: &mut Vec<Monomial>) {
    if nvars == 0 {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    if idx == nvars - 1 {
        cur.exps[idx] = left as u16;
        out.push(cur.clone());
        cur.exps[idx] = 0;
        return;
    }
    for e in (0..=left).rev() {
        cur.exps[idx] = e as u16;
        fill(nvars, idx + 1, left - e, cur, out);
    }
    cur.exps[idx] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents([1, 0, 2]);
        let b = Monomial::from_exponents([1, 1, 3]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(b.div(&a).unwrap(), Monomial::from_exponents([0, 1, 1]));
        assert_eq!(
            a.lcm(&Monomial::from_exponents([0, 2, 1])).exponents(),
            &[1, 2, 2]
        );
        assert!(Monomial::var(3, 0, 1).is_coprime(&Monomial::var(3, 1, 4)));
        assert_eq!(a.divmask() & !b.divmask(), 0);
    }

    #[test]
    fn counts_monomials_by_degree() {
        // C(d + n - 1, n - 1)
        assert_eq!(monomials_of_degree(6, 2).len(), 21);
        assert_eq!(monomials_of_degree(8, 3).len(), 120);
        assert_eq!(monomials_of_degree(4, 0).len(), 1);
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
        assert_eq!(monomials_of_degree(0, 2).len(), 0);
    }
}
