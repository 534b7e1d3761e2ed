//! Exact ranks of sparse matrices given column by column.
//!
//! Columns are reduced against a table of pivots keyed by their first
//! (smallest) row index. Over `F_p` pivots are kept monic; over the
//! integers the update is fraction-free and vectors are kept primitive.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::field::{mod_inverse, mul_mod};

pub type SparseCol<T> = Vec<(usize, T)>;

/// Outcome of an elimination: rank and the number of columns that reduced
/// to zero. The two always sum to the column count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankInfo {
    pub rank: usize,
    pub nullity: usize,
}

fn by_length<T>(mut cols: Vec<SparseCol<T>>) -> Vec<SparseCol<T>> {
    cols.sort_by_key(|c| c.len());
    cols
}

pub fn rank_mod_p(cols: Vec<SparseCol<u64>>, p: u64) -> RankInfo {
    let ncols = cols.len();
    let mut pivots: HashMap<usize, SparseCol<u64>> = HashMap::new();
    let mut nullity = 0;
    for mut v in by_length(cols) {
        v.retain(|(_, c)| *c % p != 0);
        loop {
            let Some(&(lead, c)) = v.first() else {
                nullity += 1;
                break;
            };
            match pivots.get(&lead) {
                Some(piv) => v = axpy_mod(&v, p - c % p, piv, p),
                None => {
                    let inv = mod_inverse(c % p, p);
                    for e in v.iter_mut() {
                        e.1 = mul_mod(e.1 % p, inv, p);
                    }
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    let info = RankInfo {
        rank: pivots.len(),
        nullity,
    };
    assert_eq!(info.rank + info.nullity, ncols, "rank-nullity bookkeeping");
    info
}

/// `v + a * w` modulo `p`.
fn axpy_mod(v: &[(usize, u64)], a: u64, w: &[(usize, u64)], p: u64) -> SparseCol<u64> {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let take_v = j >= w.len() || (i < v.len() && v[i].0 < w[j].0);
        let take_w = i >= v.len() || (j < w.len() && w[j].0 < v[i].0);
        if take_v {
            out.push(v[i]);
            i += 1;
        } else if take_w {
            out.push((w[j].0, mul_mod(a, w[j].1, p)));
            j += 1;
        } else {
            let s = ((v[i].1 as u128 + mul_mod(a, w[j].1, p) as u128) % p as u128) as u64;
            if s != 0 {
                out.push((v[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn rank_integer(cols: Vec<SparseCol<BigInt>>) -> RankInfo {
    let ncols = cols.len();
    let mut pivots: HashMap<usize, SparseCol<BigInt>> = HashMap::new();
    let mut nullity = 0;
    for mut v in by_length(cols) {
        v.retain(|(_, c)| !c.is_zero());
        loop {
            let Some((lead, c)) = v.first().cloned() else {
                nullity += 1;
                break;
            };
            match pivots.get(&lead) {
                Some(piv) => {
                    let pc = &piv[0].1;
                    let g = c.gcd(pc);
                    v = combine(&v, &(pc / &g), piv, &(&c / &g));
                    make_primitive(&mut v);
                }
                None => {
                    make_primitive(&mut v);
                    pivots.insert(lead, v);
                    break;
                }
            }
        }
    }
    let info = RankInfo {
        rank: pivots.len(),
        nullity,
    };
    assert_eq!(info.rank + info.nullity, ncols, "rank-nullity bookkeeping");
    info
}

/// `a * v - b * w`
fn combine(
    v: &[(usize, BigInt)],
    a: &BigInt,
    w: &[(usize, BigInt)],
    b: &BigInt,
) -> SparseCol<BigInt> {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let take_v = j >= w.len() || (i < v.len() && v[i].0 < w[j].0);
        let take_w = i >= v.len() || (j < w.len() && w[j].0 < v[i].0);
        if take_v {
            out.push((v[i].0, a * &v[i].1));
            i += 1;
        } else if take_w {
            out.push((w[j].0, -(b * &w[j].1)));
            j += 1;
        } else {
            let s = a * &v[i].1 - b * &w[j].1;
            if !s.is_zero() {
                out.push((v[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn make_primitive(v: &mut [(usize, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, c) in v.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if v.first().is_some_and(|(_, c)| c.is_negative()) {
        g = -g;
    }
    if !g.is_zero() && !g.is_one() {
        for e in v.iter_mut() {
            e.1 = &e.1 / &g;
        }
    }
}
