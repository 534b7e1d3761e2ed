//! Ideal arithmetic: sums, intersections, colons, saturations,
//! eliminations, images under ring maps, and equality/containment tests.
//!
//! Intersection, colon and saturation all go through elimination of an
//! auxiliary variable with a block order.

use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, Ideal};
use crate::poly::{BaseOrder, Polynomial, RingMap, RingRef, TermOrder, CANONICAL_ORDER};

pub fn sum(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.ring().check_same(j.ring())?;
    let mut gens = i.generators().to_vec();
    gens.extend(j.generators().iter().cloned());
    Ideal::new(i.ring(), gens)
}

/// `I + (polys)`.
pub fn extend(i: &Ideal, polys: &[Polynomial]) -> Result<Ideal> {
    let mut gens = i.generators().to_vec();
    gens.extend(polys.iter().cloned());
    Ideal::new(i.ring(), gens)
}

/// Eliminates the auxiliary variables `vars` and returns `I ∩ k[rest]` in
/// the ring without them. The result carries its degrevlex basis.
pub fn eliminate(i: &Ideal, vars: &[usize]) -> Result<Ideal> {
    let ring = i.ring();
    for &v in vars {
        if v >= ring.nvars() {
            return Err(Error::OutOfRange(format!("variable index {v}")));
        }
        if !ring.is_aux(v) {
            return Err(Error::NotAuxiliary(ring.name(v).to_string()));
        }
    }
    if vars.is_empty() {
        return Ok(i.clone());
    }
    let order = TermOrder::elimination(vars.to_vec(), BaseOrder::DegRevLex);
    let gb = i.groebner(&order);
    let target = ring.without(vars);
    let keep: Vec<usize> = (0..ring.nvars()).filter(|k| !vars.contains(k)).collect();
    let kept = gb
        .elements()
        .iter()
        .filter(|g| vars.iter().all(|&v| !g.involves(v)))
        .map(|g| g.restrict(&target, &keep))
        .collect::<Result<Vec<_>>>()?;
    // the surviving elements form the reduced basis for the restricted order
    let basis = GroebnerBasis::from_reduced_unchecked(&target, &CANONICAL_ORDER, kept.clone());
    Ok(Ideal::new(&target, kept)?.with_basis(basis))
}

fn adjoin_aux(ring: &RingRef, preferred: &str) -> Result<(RingRef, usize)> {
    let name = ring.fresh_aux_name(preferred);
    let ext = ring.with_aux(&name)?;
    let idx = ext.nvars() - 1;
    Ok((ext, idx))
}

fn back_to(ring: &RingRef, eliminated: Ideal) -> Result<Ideal> {
    // eliminate() drops the trailing aux variable, so the names line up again
    let gens = eliminated
        .generators()
        .iter()
        .map(|g| g.contract(ring))
        .collect::<Result<Vec<_>>>()?;
    let gb = eliminated.groebner(&CANONICAL_ORDER);
    let elems = gb
        .elements()
        .iter()
        .map(|g| g.contract(ring))
        .collect::<Result<Vec<_>>>()?;
    let basis = GroebnerBasis::from_reduced_unchecked(ring, &CANONICAL_ORDER, elems);
    Ok(Ideal::new(ring, gens)?.with_basis(basis))
}

/// `I ∩ J` as the elimination of `t` from `t*I + (1 - t)*J`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let ring = i.ring();
    ring.check_same(j.ring())?;
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let (ext, t_idx) = adjoin_aux(ring, "t")?;
    let t = ext.var(t_idx);
    let one_minus_t = &ext.constant(1) - &t;
    let mut gens = Vec::with_capacity(i.generators().len() + j.generators().len());
    for g in i.generators() {
        gens.push(&t * &g.embed(&ext)?);
    }
    for g in j.generators() {
        gens.push(&one_minus_t * &g.embed(&ext)?);
    }
    let lifted = Ideal::new(&ext, gens)?;
    back_to(ring, eliminate(&lifted, &[t_idx])?)
}

/// Intersection of a nonempty list, folded left to right.
pub fn intersect_all(ideals: &[Ideal]) -> Result<Ideal> {
    let (first, rest) = ideals
        .split_first()
        .ok_or_else(|| Error::Usage("empty intersection".into()))?;
    rest.iter()
        .try_fold(first.clone(), |acc, j| intersect(&acc, j))
}

/// `I : f = { g : g*f ∈ I }`, from `I ∩ (f)` divided exactly by `f`.
pub fn colon(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    i.ring().check_same(f.ring())?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("colon divisor"));
    }
    if f.is_constant() {
        return Ok(i.clone());
    }
    let principal = Ideal::new(i.ring(), vec![f.clone()])?;
    let meet = intersect(i, &principal)?;
    let gens = meet
        .groebner(&CANONICAL_ORDER)
        .elements()
        .iter()
        .map(|g| g.exact_div(f))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(i.ring(), gens)
}

/// `I : f^∞`. A monomial `f` is split into its variables, saturating by
/// one variable at a time; each step adjoins `s*h - 1` and eliminates `s`.
pub fn saturate(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    i.ring().check_same(f.ring())?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("saturation element"));
    }
    if f.is_constant() {
        return Ok(i.clone());
    }
    if f.is_monomial() {
        let ring = i.ring();
        let mono = &f.terms()[0].0;
        return mono
            .support()
            .map(|v| ring.var(v))
            .try_fold(i.clone(), |acc, x| saturate_once(&acc, &x));
    }
    saturate_once(i, f)
}

fn saturate_once(i: &Ideal, h: &Polynomial) -> Result<Ideal> {
    let ring = i.ring();
    let (ext, s_idx) = adjoin_aux(ring, "s")?;
    let mut gens = i
        .generators()
        .iter()
        .map(|g| g.embed(&ext))
        .collect::<Result<Vec<_>>>()?;
    gens.push(&(&ext.var(s_idx) * &h.embed(&ext)?) - &ext.constant(1));
    let lifted = Ideal::new(&ext, gens)?;
    back_to(ring, eliminate(&lifted, &[s_idx])?)
}

/// Same ideal, decided by comparing reduced degrevlex bases.
pub fn ideal_equal(i: &Ideal, j: &Ideal) -> Result<bool> {
    i.ring().check_same(j.ring())?;
    Ok(*i.groebner(&CANONICAL_ORDER) == *j.groebner(&CANONICAL_ORDER))
}

/// `J ⊆ I`. Note the orientation: the first argument is the container.
pub fn contains(i: &Ideal, j: &Ideal) -> Result<bool> {
    i.ring().check_same(j.ring())?;
    let gb = i.groebner(&CANONICAL_ORDER);
    Ok(j.generators().iter().all(|g| gb.contains(g)))
}

/// First generator of `J` not in `I`, if any.
pub fn containment_witness(i: &Ideal, j: &Ideal) -> Result<Option<Polynomial>> {
    i.ring().check_same(j.ring())?;
    let gb = i.groebner(&CANONICAL_ORDER);
    Ok(j.generators().iter().find(|g| !gb.contains(g)).cloned())
}

/// Image of `I` under an invertible linear change of coordinates.
pub fn image_ideal(m: &RingMap, i: &Ideal) -> Result<Ideal> {
    i.ring().check_same(m.source())?;
    if !m.is_invertible_linear() {
        if m.target().field().characteristic() == 2 && m.is_linear() {
            return Err(Error::DegenerateInCharacteristicTwo);
        }
        return Err(Error::NotInvertible(
            "images are not independent linear forms".into(),
        ));
    }
    let gens = i
        .generators()
        .iter()
        .map(|g| m.apply(g))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(m.target(), gens)
}

#[cfg(test)]
mod tests;
