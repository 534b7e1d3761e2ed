use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::field::Scalar;

use super::{Monomial, RingRef, TermOrder};

/// Ordering in which [`Polynomial`] stores its terms.
pub const CANONICAL_ORDER: TermOrder = TermOrder::DegRevLex;

/// Exact polynomial. Terms are nonzero, distinct and sorted strictly
/// descending in degrevlex, so structural equality is ideal-theoretic
/// equality of elements.
#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, Scalar)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn monomial(ring: &RingRef, coeff: Scalar, mono: Monomial) -> Polynomial {
        Polynomial::from_terms(ring, [(mono, coeff)])
    }

    /// Normalizes an arbitrary bag of terms: coefficients are mapped into
    /// the field, like monomials merged, zeros dropped.
    pub fn from_terms<I>(ring: &RingRef, terms: I) -> Polynomial
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let field = ring.field();
        let mut raw: Vec<(Monomial, Scalar)> = terms
            .into_iter()
            .map(|(m, c)| {
                assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
                let c = field
                    .element(&c)
                    .expect("coefficient must be representable in the field");
                (m, c)
            })
            .collect();
        raw.sort_by(|a, b| CANONICAL_ORDER.cmp(&b.0, &a.0));
        let mut terms: Vec<(Monomial, Scalar)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds from terms already in canonical form.
    pub(crate) fn from_sorted_unchecked(
        ring: &RingRef,
        terms: Vec<(Monomial, Scalar)>,
    ) -> Polynomial {
        debug_assert!(terms
            .windows(2)
            .all(|w| CANONICAL_ORDER.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    /// Whether any term involves variable `idx`.
    pub fn involves(&self, idx: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(idx) > 0)
    }

    /// The `ord`-maximal term.
    pub fn leading_term(&self, ord: &TermOrder) -> Result<(Scalar, Monomial)> {
        if *ord == CANONICAL_ORDER {
            return self
                .terms
                .first()
                .map(|(m, c)| (c.clone(), m.clone()))
                .ok_or(Error::ZeroPolynomial("leading term"));
        }
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.0, &b.0))
            .map(|(m, c)| (c.clone(), m.clone()))
            .ok_or(Error::ZeroPolynomial("leading term"))
    }

    pub fn leading_monomial(&self, ord: &TermOrder) -> Result<Monomial> {
        self.leading_term(ord).map(|(_, m)| m)
    }

    /// Scales so the `ord`-leading coefficient is one. Zero stays zero.
    pub fn monic(&self, ord: &TermOrder) -> Polynomial {
        match self.leading_term(ord) {
            Err(_) => self.clone(),
            Ok((c, _)) => self.scale(&self.ring.field().inv(&c)),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let f = self.ring.field();
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), f.mul(a, c)))
            .collect();
        Polynomial::from_sorted_unchecked(&self.ring, terms)
    }

    /// Multiplies by `c * mono`.
    pub fn mul_term(&self, c: &Scalar, mono: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let f = self.ring.field();
        // multiplication by a monomial preserves degrevlex order
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.mul(mono), f.mul(a, c)))
            .collect();
        Polynomial::from_sorted_unchecked(&self.ring, terms)
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let f = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |c: &Scalar| if negate { f.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match CANONICAL_ORDER.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        f.sub(&a[i].1, &b[j].1)
                    } else {
                        f.add(&a[i].1, &b[j].1)
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Polynomial::from_sorted_unchecked(&self.ring, out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        let f = self.ring.field();
        let mut acc = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                acc.push((ma.mul(mb), f.mul(ca, cb)));
            }
        }
        Ok(Polynomial::from_terms(&self.ring, acc))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.constant(1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient `self / d`; fails unless `d` divides `self`.
    pub fn exact_div(&self, d: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&d.ring)?;
        if d.is_zero() {
            return Err(Error::ZeroPolynomial("divisor"));
        }
        let f = self.ring.field();
        let (dc, dm) = (&d.terms[0].1, &d.terms[0].0);
        let dinv = f.inv(dc);
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let Some(q) = m.div(dm) else {
                return Err(Error::InexactDivision(format!(
                    "{d} does not divide {self}"
                )));
            };
            let qc = f.mul(c, &dinv);
            rem = rem.merge(&d.mul_term(&qc, &q), true);
            quot.push((q, qc));
        }
        // quotient terms are produced in descending order
        Ok(Polynomial::from_sorted_unchecked(&self.ring, quot))
    }

    /// Moves into `target`, whose variable list must extend this ring's.
    pub fn embed(&self, target: &RingRef) -> Result<Polynomial> {
        let src = &self.ring;
        if target.nvars() < src.nvars()
            || target.field() != src.field()
            || target.names()[..src.nvars()] != *src.names()
        {
            return Err(Error::RingMismatch(format!(
                "cannot embed {src} into {target}"
            )));
        }
        let extra = target.nvars() - src.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            e.extend(std::iter::repeat_n(0, extra));
            (Monomial::from_exponents(e), c.clone())
        });
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Drops trailing variables absent from `target`; fails if any of them
    /// actually occurs.
    pub fn contract(&self, target: &RingRef) -> Result<Polynomial> {
        let src = &self.ring;
        let k = target.nvars();
        if k > src.nvars() || target.names() != &src.names()[..k] || target.field() != src.field() {
            return Err(Error::RingMismatch(format!(
                "cannot contract {src} to {target}"
            )));
        }
        if self
            .terms
            .iter()
            .any(|(m, _)| m.exponents()[k..].iter().any(|&e| e > 0))
        {
            return Err(Error::RingMismatch(format!(
                "{self} involves variables outside {target}"
            )));
        }
        let terms = self.terms.iter().map(|(m, c)| {
            (
                Monomial::from_exponents(m.exponents()[..k].iter().copied()),
                c.clone(),
            )
        });
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Keeps only the variables listed in `keep` (in order), which must be
    /// `target`'s variables; fails if a dropped variable occurs.
    pub fn restrict(&self, target: &RingRef, keep: &[usize]) -> Result<Polynomial> {
        if keep.len() != target.nvars() || target.field() != self.ring.field() {
            return Err(Error::RingMismatch(format!(
                "cannot restrict {} to {target}",
                self.ring
            )));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let kept: usize = keep.iter().map(|&i| m.exponent(i) as usize).sum();
            if kept != m.degree() as usize {
                return Err(Error::RingMismatch(format!(
                    "{self} involves variables outside {target}"
                )));
            }
            terms.push((
                Monomial::from_exponents(keep.iter().map(|&i| m.exponent(i))),
                c.clone(),
            ));
        }
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Evaluates with `images[i]` substituted for variable `i`.
    pub fn substitute(&self, images: &[Polynomial], target: &RingRef) -> Polynomial {
        let mut acc = Polynomial::zero(target);
        // cache powers per variable
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); images.len()];
        for (m, c) in &self.terms {
            let mut t = Polynomial::monomial(target, c.clone(), target.one_monomial());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                if cache.is_empty() {
                    cache.push(target.constant(1));
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap() * &images[i];
                    cache.push(next);
                }
                t = &t * &cache[e as usize];
            }
            acc = &acc + &t;
        }
        acc
    }
}

impl<'a> Add for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch in addition")
    }
}

impl<'a> Sub for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch in subtraction")
    }
}

impl<'a> Mul for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs)
            .expect("ring mismatch in multiplication")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&self.ring.field().from_int(-1))
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let v = field.display_value(c);
            let neg = v.is_negative();
            let abs = v.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let factors: Vec<String> = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.ring.name(i).to_string()
                    } else {
                        format!("{}^{}", self.ring.name(i), e)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
