//! Groebner bases, normal forms, initial ideals and ideal membership.

mod engine;
mod ideal;

pub use engine::Strategy;
pub use ideal::Ideal;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, RingRef, TermOrder};

use engine::{Reducers, Terms};

/// A Groebner basis of monic elements for a fixed order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: RingRef,
    order: TermOrder,
    elements: Vec<Polynomial>,
    sorted: Vec<Terms>,
    reduced: bool,
}

impl GroebnerBasis {
    fn from_terms(ring: &RingRef, order: &TermOrder, sorted: Vec<Terms>, reduced: bool) -> Self {
        let elements = sorted
            .iter()
            .map(|t| Polynomial::from_terms(ring, t.iter().cloned()))
            .collect();
        GroebnerBasis {
            ring: ring.clone(),
            order: order.clone(),
            elements,
            sorted,
            reduced,
        }
    }

    /// Wraps polynomials already known to form a reduced basis for `order`.
    pub(crate) fn from_reduced_unchecked(
        ring: &RingRef,
        order: &TermOrder,
        elements: Vec<Polynomial>,
    ) -> Self {
        let mut sorted: Vec<Terms> = elements
            .iter()
            .map(|p| engine::sort_terms(p.terms().to_vec(), order))
            .collect();
        sorted.sort_by(|a, b| order.cmp(&b[0].0, &a[0].0));
        let gb = GroebnerBasis::from_terms(ring, order, sorted, true);
        debug_assert!(gb.check_reduced());
        gb
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Whether the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.sorted.len() == 1 && self.sorted[0][0].0.is_one()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|t| t[0].0.clone()).collect()
    }

    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        let field = self.ring.field();
        let terms = engine::sort_terms(p.terms().to_vec(), &self.order);
        let reducers = Reducers::new(self.sorted.iter().map(|t| t.as_slice()).collect());
        let nf = engine::normal_form(terms, &reducers, field, &self.order);
        Polynomial::from_terms(&self.ring, nf)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }

    /// Full Buchberger certificate: every S-polynomial reduces to zero.
    pub fn verify_s_pairs(&self) -> bool {
        let field = self.ring.field();
        let reducers = Reducers::new(self.sorted.iter().map(|t| t.as_slice()).collect());
        for i in 0..self.sorted.len() {
            for j in i + 1..self.sorted.len() {
                let s = engine::s_poly(&self.sorted[i], &self.sorted[j], field, &self.order);
                if !engine::normal_form(s, &reducers, field, &self.order).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Checks the reducedness conditions directly.
    pub fn check_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.sorted.iter().enumerate().all(|(k, t)| {
            num_traits::One::is_one(&t[0].1)
                && t.iter()
                    .all(|(m, _)| lms.iter().enumerate().all(|(j, l)| j == k || !l.divides(m)))
        })
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring)
            && self.order == other.order
            && self.elements == other.elements
    }
}

/// The S-polynomial of two nonzero polynomials; leading terms cancel.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: &TermOrder) -> Result<Polynomial> {
    f.ring().check_same(g.ring())?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial("S-polynomial input"));
    }
    let field = f.ring().field();
    let tf = engine::sort_terms(f.terms().to_vec(), ord);
    let tg = engine::sort_terms(g.terms().to_vec(), ord);
    Ok(Polynomial::from_terms(
        f.ring(),
        engine::s_poly(&tf, &tg, field, ord),
    ))
}

/// Normal form of `p` modulo the list `gs` (full reduction, not
/// necessarily a Groebner basis).
pub fn normal_form(p: &Polynomial, gs: &[Polynomial], ord: &TermOrder) -> Result<Polynomial> {
    for g in gs {
        p.ring().check_same(g.ring())?;
    }
    let field = p.ring().field();
    let sorted: Vec<Terms> = gs
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| engine::sort_terms(g.terms().to_vec(), ord))
        .collect();
    let reducers = Reducers::new(sorted.iter().map(|t| t.as_slice()).collect());
    let terms = engine::sort_terms(p.terms().to_vec(), ord);
    Ok(Polynomial::from_terms(
        p.ring(),
        engine::normal_form(terms, &reducers, field, ord),
    ))
}

/// Runs Buchberger on arbitrary generators and returns the reduced basis.
pub fn groebner_basis(
    ring: &RingRef,
    gens: &[Polynomial],
    ord: &TermOrder,
    strategy: Strategy,
) -> GroebnerBasis {
    let field = ring.field();
    let terms: Vec<Terms> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| engine::sort_terms(g.terms().to_vec(), ord))
        .collect();
    let gb = engine::buchberger(terms, field, ord, strategy);
    let reduced = engine::reduce_basis(gb, field, ord);
    GroebnerBasis::from_terms(ring, ord, reduced, true)
}

pub fn reduced_groebner_basis(ideal: &Ideal, ord: &TermOrder) -> std::sync::Arc<GroebnerBasis> {
    ideal.groebner(ord)
}

/// Monomial ideal of leading monomials of the reduced basis.
pub fn initial_ideal(ideal: &Ideal, ord: &TermOrder) -> Ideal {
    let gb = ideal.groebner(ord);
    let ring = ideal.ring();
    let gens = gb
        .leading_monomials()
        .into_iter()
        .map(|m| Polynomial::monomial(ring, ring.field().one(), m))
        .collect();
    Ideal::new(ring, gens).expect("same ring")
}

/// `p ∈ I`, decided by reduction against the degrevlex basis.
pub fn ideal_membership(p: &Polynomial, ideal: &Ideal) -> Result<bool> {
    p.ring().check_same(ideal.ring())?;
    Ok(ideal.contains_poly(p))
}

#[cfg(test)]
mod tests;
