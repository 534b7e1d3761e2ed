//! Buchberger's algorithm on order-sorted term vectors.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::field::{Field, Scalar};
use crate::poly::{Monomial, TermOrder};

/// Terms sorted strictly descending under the working order.
pub(crate) type Terms = Vec<(Monomial, Scalar)>;

/// S-pair selection strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Smallest lcm degree first.
    #[default]
    Normal,
    /// Smallest sugar degree first.
    Sugar,
}

pub(crate) fn sort_terms(mut t: Terms, ord: &TermOrder) -> Terms {
    t.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    t
}

/// `p - c * m * g`.
pub(crate) fn sub_mul(
    p: &[(Monomial, Scalar)],
    c: &Scalar,
    m: &Monomial,
    g: &[(Monomial, Scalar)],
    field: Field,
    ord: &TermOrder,
) -> Terms {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let mut gj: Option<(Monomial, Scalar)> = None;
    loop {
        if gj.is_none() && j < g.len() {
            gj = Some((g[j].0.mul(m), field.mul(&g[j].1, c)));
            j += 1;
        }
        match (p.get(i), gj.as_ref()) {
            (None, None) => break,
            (Some(pt), None) => {
                out.push(pt.clone());
                i += 1;
            }
            (None, Some(_)) => {
                let (gm, gc) = gj.take().unwrap();
                out.push((gm, field.neg(&gc)));
            }
            (Some(pt), Some((gm, gc))) => match ord.cmp(&pt.0, gm) {
                Ordering::Greater => {
                    out.push(pt.clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (gm, gc) = gj.take().unwrap();
                    out.push((gm, field.neg(&gc)));
                }
                Ordering::Equal => {
                    let v = field.sub(&pt.1, gc);
                    if !v.is_zero() {
                        out.push((pt.0.clone(), v));
                    }
                    i += 1;
                    gj = None;
                }
            },
        }
    }
    out
}

pub(crate) fn make_monic(t: &mut Terms, field: Field) {
    if let Some((_, lc)) = t.first() {
        if lc.is_one() {
            return;
        }
        let inv = field.inv(lc);
        for (_, c) in t.iter_mut() {
            *c = field.mul(c, &inv);
        }
    }
}

/// A reducer set with cached leading data.
pub(crate) struct Reducers<'a> {
    pub polys: Vec<&'a [(Monomial, Scalar)]>,
    masks: Vec<u64>,
}

impl<'a> Reducers<'a> {
    pub fn new(polys: Vec<&'a [(Monomial, Scalar)]>) -> Self {
        let masks = polys.iter().map(|p| p[0].0.divmask()).collect();
        Reducers { polys, masks }
    }

    fn find(&self, m: &Monomial) -> Option<usize> {
        let mask = m.divmask();
        let mut best: Option<usize> = None;
        for (k, p) in self.polys.iter().enumerate() {
            if self.masks[k] & !mask != 0 {
                continue;
            }
            if p[0].0.divides(m) && best.is_none_or(|b| self.polys[b].len() > p.len()) {
                best = Some(k);
            }
        }
        best
    }
}

/// Full normal form of `p` (sorted under `ord`) against `reducers`.
pub(crate) fn normal_form(
    p: Terms,
    reducers: &Reducers<'_>,
    field: Field,
    ord: &TermOrder,
) -> Terms {
    let mut result: Terms = Vec::new();
    let mut cur = p;
    let mut start = 0;
    while start < cur.len() {
        let (m, c) = &cur[start];
        match reducers.find(m) {
            Some(k) => {
                let g = reducers.polys[k];
                let q = m.div(&g[0].0).unwrap();
                let coeff = field.div(c, &g[0].1);
                cur = sub_mul(&cur[start + 1..], &coeff, &q, &g[1..], field, ord);
                start = 0;
            }
            None => {
                result.push(cur[start].clone());
                start += 1;
            }
        }
    }
    result
}

pub(crate) fn s_poly(
    f: &[(Monomial, Scalar)],
    g: &[(Monomial, Scalar)],
    field: Field,
    ord: &TermOrder,
) -> Terms {
    let lcm = f[0].0.lcm(&g[0].0);
    let mf = lcm.div(&f[0].0).unwrap();
    let mg = lcm.div(&g[0].0).unwrap();
    let cf = field.inv(&f[0].1);
    let cg = field.inv(&g[0].1);
    // cf*mf*f - cg*mg*g with leading terms cancelling
    let scaled_f: Terms = f[1..]
        .iter()
        .map(|(m, c)| (m.mul(&mf), field.mul(c, &cf)))
        .collect();
    sub_mul(&scaled_f, &cg, &mg, &g[1..], field, ord)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    key: u32,
}

struct Basis {
    polys: Vec<Terms>,
    sugar: Vec<u32>,
    active: Vec<bool>,
}

impl Basis {
    fn lm(&self, k: usize) -> &Monomial {
        &self.polys[k][0].0
    }
}

/// Buchberger with Gebauer-Moeller pair management. Returns a (not yet
/// reduced) Groebner basis of monic elements.
pub(crate) fn buchberger(
    gens: Vec<Terms>,
    field: Field,
    ord: &TermOrder,
    strategy: Strategy,
) -> Vec<Terms> {
    let mut basis = Basis {
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
    };
    let mut pairs: Vec<Pair> = Vec::new();

    let mut gens: Vec<Terms> = gens.into_iter().filter(|g| !g.is_empty()).collect();
    gens.sort_by(|a, b| ord.cmp(&a[0].0, &b[0].0));
    for mut g in gens {
        make_monic(&mut g, field);
        if g[0].0.is_one() {
            return vec![g];
        }
        let sugar = g.iter().map(|(m, _)| m.degree()).max().unwrap();
        insert(&mut basis, &mut pairs, g, sugar, strategy);
    }

    while let Some(pos) = select(&pairs, ord) {
        let pair = pairs.swap_remove(pos);
        let (fi, fj) = (&basis.polys[pair.i], &basis.polys[pair.j]);
        let sugar = pair_sugar(&basis, pair.i, pair.j, &pair.lcm);
        let s = s_poly(fi, fj, field, ord);
        if s.is_empty() {
            continue;
        }
        let reducers = Reducers::new(
            (0..basis.polys.len())
                .filter(|&k| basis.active[k])
                .map(|k| basis.polys[k].as_slice())
                .collect(),
        );
        let mut h = normal_form(s, &reducers, field, ord);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h, field);
        if h[0].0.is_one() {
            return vec![h];
        }
        insert(&mut basis, &mut pairs, h, sugar, strategy);
    }

    basis
        .polys
        .into_iter()
        .zip(basis.active)
        .filter_map(|(p, a)| a.then_some(p))
        .collect()
}

fn pair_sugar(basis: &Basis, i: usize, j: usize, lcm: &Monomial) -> u32 {
    let si = basis.sugar[i] + lcm.degree() - basis.lm(i).degree();
    let sj = basis.sugar[j] + lcm.degree() - basis.lm(j).degree();
    si.max(sj)
}

fn select(pairs: &[Pair], ord: &TermOrder) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (k, p) in pairs.iter().enumerate() {
        best = match best {
            None => Some(k),
            Some(b) => {
                let q = &pairs[b];
                let better = p
                    .key
                    .cmp(&q.key)
                    .then_with(|| ord.cmp(&p.lcm, &q.lcm))
                    .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)));
                if better == Ordering::Less {
                    Some(k)
                } else {
                    Some(b)
                }
            }
        };
    }
    best
}

fn insert(basis: &mut Basis, pairs: &mut Vec<Pair>, h: Terms, sugar: u32, strategy: Strategy) {
    let h_idx = basis.polys.len();
    basis.polys.push(h);
    basis.sugar.push(sugar);
    basis.active.push(false);
    let lm_h = basis.lm(h_idx).clone();

    let mut candidates: Vec<(usize, Monomial)> = (0..h_idx)
        .filter(|&g| basis.active[g])
        .map(|g| (g, lm_h.lcm(basis.lm(g))))
        .collect();
    let mut kept: Vec<(usize, Monomial)> = Vec::new();
    while let Some((g1, lcm1)) = candidates.pop() {
        let coprime = lm_h.is_coprime(basis.lm(g1));
        let dominated = candidates
            .iter()
            .chain(kept.iter())
            .any(|(_, l2)| l2.divides(&lcm1));
        if coprime || !dominated {
            kept.push((g1, lcm1));
        }
    }

    pairs.retain(|p| {
        !(lm_h.divides(&p.lcm)
            && lm_h.lcm(basis.lm(p.i)) != p.lcm
            && lm_h.lcm(basis.lm(p.j)) != p.lcm)
    });

    for (g, lcm) in kept {
        if lm_h.is_coprime(basis.lm(g)) {
            continue;
        }
        let key = match strategy {
            Strategy::Normal => lcm.degree(),
            Strategy::Sugar => pair_sugar(basis, g, h_idx, &lcm),
        };
        pairs.push(Pair {
            i: g,
            j: h_idx,
            lcm,
            key,
        });
    }

    for g in 0..h_idx {
        if basis.active[g] && lm_h.divides(basis.lm(g)) {
            basis.active[g] = false;
        }
    }
    basis.active[h_idx] = true;
}

/// Minimalizes and inter-reduces a Groebner basis; result is monic and
/// sorted by descending leading monomial.
pub(crate) fn reduce_basis(gb: Vec<Terms>, field: Field, ord: &TermOrder) -> Vec<Terms> {
    let mut gb: Vec<Terms> = gb.into_iter().filter(|g| !g.is_empty()).collect();
    for g in gb.iter_mut() {
        make_monic(g, field);
    }
    // ascending by leading monomial so divisors come first
    gb.sort_by(|a, b| ord.cmp(&a[0].0, &b[0].0));
    let mut minimal: Vec<Terms> = Vec::new();
    for g in gb {
        if !minimal.iter().any(|h| h[0].0.divides(&g[0].0)) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others = Reducers::new(
            minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, p)| p.as_slice())
                .collect(),
        );
        let lead = minimal[k][0].clone();
        let tail = normal_form(minimal[k][1..].to_vec(), &others, field, ord);
        let mut g = Vec::with_capacity(tail.len() + 1);
        g.push(lead);
        g.extend(tail);
        out.push(g);
    }
    out.sort_by(|a, b| ord.cmp(&b[0].0, &a[0].0));
    out
}
