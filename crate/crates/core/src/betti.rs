//! Graded Betti numbers of `R/I` as Koszul homology.
//!
//! `beta_{i,j} = dim H_i(K(x_1..x_N) (x) R/I)_j`. The degree-`j` strand in
//! homological degree `i` is `wedge^i V (x) (R/I)_{j-i}`, with `(R/I)_d`
//! written in the standard monomials of a degrevlex Groebner basis, so
//! `beta_{i,j} = dim K_{i,j} - rank d_{i,j} - rank d_{i+1,j}`.

mod rank;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use rank::{rank_integer, rank_mod_p, RankInfo, SparseCol};

use crate::error::{Error, Result};
use crate::field::{mod_inverse, Field, Scalar};
use crate::groebner::{GroebnerBasis, Ideal};
use crate::hilbert::HilbertNumerator;
use crate::intpoly::IntPoly;
use crate::poly::{monomials_of_degree, Monomial, Polynomial, TermOrder};

/// Default bound on the number of nonzero matrix entries in one strand.
pub const DEFAULT_CAP: usize = 2_000_000;

/// Prime used by the modular fast path.
pub const FAST_PRIME: u64 = (1 << 61) - 1;

/// Sparse table of graded Betti numbers of a quotient `R/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    arity: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub beta: u64,
}

impl BettiTable {
    pub fn new(arity: usize) -> Self {
        BettiTable {
            arity,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(
        arity: usize,
        entries: impl IntoIterator<Item = ((usize, usize), u64)>,
    ) -> Self {
        let mut t = BettiTable::new(arity);
        for ((i, j), b) in entries {
            t.set(i, j, b);
        }
        t
    }

    /// Zero values are not stored.
    pub fn set(&mut self, i: usize, j: usize, beta: u64) {
        if beta == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), beta);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn entries(&self) -> impl Iterator<Item = BettiEntry> + '_ {
        self.entries
            .iter()
            .map(|(&(i, j), &beta)| BettiEntry { i, j, beta })
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((a, _), _)| *a == i)
            .map(|(_, b)| b)
            .sum()
    }

    /// Projective dimension: the largest `i` with a nonzero entry.
    pub fn pd(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Regularity: the largest `j - i` with a nonzero entry.
    pub fn reg(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }

    /// Depth by Auslander-Buchsbaum.
    pub fn depth(&self) -> Option<usize> {
        self.pd().map(|p| self.arity - p)
    }

    /// `sum (-1)^i beta_{i,j} t^j` over `(1 - t)^arity`.
    pub fn alternating_sum(&self) -> HilbertNumerator {
        let top = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); top + 1];
        for (&(i, j), &b) in &self.entries {
            if i % 2 == 0 {
                coeffs[j] += b;
            } else {
                coeffs[j] -= b;
            }
        }
        HilbertNumerator::new(IntPoly::new(coeffs), self.arity)
    }

    /// Machine-readable form: `i,j,beta` per line.
    pub fn to_sparse_string(&self) -> String {
        self.entries()
            .map(|e| format!("{},{},{}\n", e.i, e.j, e.beta))
            .collect()
    }
}

impl fmt::Display for BettiTable {
    /// Rows are `j - i`, columns are `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (Some(pd), Some(reg)) = (self.pd(), self.reg()) else {
            return writeln!(f, "(zero table)");
        };
        let mut cells: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..=pd).map(|i| i.to_string()));
        cells.push(header);
        let mut totals = vec!["total:".to_string()];
        totals.extend((0..=pd).map(|i| self.total(i).to_string()));
        cells.push(totals);
        for r in 0..=reg {
            let mut row = vec![format!("{r}:")];
            row.extend((0..=pd).map(|i| match self.get(i, i + r) {
                0 => ".".to_string(),
                b => b.to_string(),
            }));
            cells.push(row);
        }
        let ncols = pd + 2;
        let widths: Vec<usize> = (0..ncols)
            .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(0))
            .collect();
        for row in &cells {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:>w$}"))
                .collect();
            writeln!(f, "{}", line.join(" ").trim_end())?;
        }
        Ok(())
    }
}

/// How strand ranks are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RankMethod {
    /// Fraction-free elimination over the integers (rationals) or exact
    /// arithmetic in `F_p`.
    Exact,
    /// Ranks modulo [`FAST_PRIME`], with one strand recomputed exactly. On
    /// disagreement everything is recomputed exactly.
    Modular,
    /// Modular above a size threshold, exact below it.
    #[default]
    Auto,
}

#[derive(Clone, Copy, Debug)]
pub struct BettiOptions {
    pub cap: usize,
    pub method: RankMethod,
}

impl Default for BettiOptions {
    fn default() -> Self {
        BettiOptions {
            cap: DEFAULT_CAP,
            method: RankMethod::Auto,
        }
    }
}

const AUTO_EXACT_LIMIT: usize = 20_000;

struct StdDegree {
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

/// `R/I` in standard-monomial coordinates, degree by degree.
struct Quotient {
    field: Field,
    nvars: usize,
    gb: Arc<GroebnerBasis>,
    lead: Vec<Monomial>,
    cap: usize,
    std: HashMap<u32, StdDegree>,
    // mult[d][m][v] = coordinates of x_v * m in degree d + 1
    mult: HashMap<u32, Vec<Vec<SparseCol<Scalar>>>>,
}

fn check_graded(ideal: &Ideal) -> Result<()> {
    if ideal.ring().has_aux() {
        return Err(Error::AuxiliaryVariables(ideal.ring().to_string()));
    }
    if let Some(g) = ideal.generators().iter().find(|g| !g.is_homogeneous()) {
        return Err(Error::NotHomogeneous(g.to_string()));
    }
    Ok(())
}

fn count_monomials(nvars: usize, d: u32) -> BigInt {
    if nvars == 0 {
        return BigInt::from((d == 0) as u8);
    }
    binomial(
        BigInt::from(d as usize + nvars - 1),
        BigInt::from(nvars - 1),
    )
}

fn exceeded(what: String) -> Error {
    Error::DeskScaleExceeded(what)
}

impl Quotient {
    fn new(ideal: &Ideal, cap: usize) -> Result<Quotient> {
        check_graded(ideal)?;
        let gb = ideal.groebner(&TermOrder::DegRevLex);
        Ok(Quotient {
            field: ideal.ring().field(),
            nvars: ideal.ring().nvars(),
            lead: gb.leading_monomials(),
            gb,
            cap,
            std: HashMap::new(),
            mult: HashMap::new(),
        })
    }

    fn prepare_std(&mut self, d: u32) -> Result<()> {
        if self.std.contains_key(&d) {
            return Ok(());
        }
        let count = count_monomials(self.nvars, d);
        if count > BigInt::from(self.cap) {
            return Err(exceeded(format!(
                "{count} monomials of degree {d} in {} variables",
                self.nvars
            )));
        }
        let monos: Vec<Monomial> = monomials_of_degree(self.nvars, d)
            .into_iter()
            .filter(|m| !self.lead.iter().any(|l| l.divides(m)))
            .collect();
        let index = monos
            .iter()
            .cloned()
            .enumerate()
            .map(|(k, m)| (m, k))
            .collect();
        self.std.insert(d, StdDegree { monos, index });
        Ok(())
    }

    fn prepare_mult(&mut self, d: u32) -> Result<()> {
        if self.mult.contains_key(&d) {
            return Ok(());
        }
        self.prepare_std(d)?;
        self.prepare_std(d + 1)?;
        let (src, dst) = (&self.std[&d], &self.std[&(d + 1)]);
        let ring = self.gb.ring().clone();
        let one = self.field.one();
        let gb = &self.gb;
        let table: Vec<Vec<SparseCol<Scalar>>> = src
            .monos
            .par_iter()
            .map(|m| {
                (0..self.nvars)
                    .map(|v| {
                        let prod = m.mul(&Monomial::var(self.nvars, v, 1));
                        if let Some(&k) = dst.index.get(&prod) {
                            return vec![(k, one.clone())];
                        }
                        let nf = gb.reduce(&Polynomial::monomial(&ring, one.clone(), prod));
                        let mut col: SparseCol<Scalar> = nf
                            .terms()
                            .iter()
                            .map(|(mono, c)| (dst.index[mono], c.clone()))
                            .collect();
                        col.sort_by_key(|e| e.0);
                        col
                    })
                    .collect()
            })
            .collect();
        self.mult.insert(d, table);
        Ok(())
    }

    fn std_dim(&self, d: u32) -> usize {
        self.std[&d].monos.len()
    }
}

/// Subsets of `0..n` of size `k` as bitmasks, in a fixed order.
fn subsets(n: usize, k: usize) -> Vec<u64> {
    fn go(start: usize, n: usize, k: usize, cur: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for v in start..n {
            if n - v < k {
                break;
            }
            go(v + 1, n, k - 1, cur | (1 << v), out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, 0, &mut out);
    }
    out
}

/// Strand `d_{i,j}: K_{i,j} -> K_{i-1,j}`, as sparse columns.
struct Strand {
    i: usize,
    j: usize,
    cols: Vec<SparseCol<Scalar>>,
}

fn strand_dim(q: &Quotient, i: usize, j: usize) -> usize {
    if i > q.nvars || j < i {
        return 0;
    }
    binomial(q.nvars, i) * q.std_dim((j - i) as u32)
}

fn build_strand(q: &Quotient, i: usize, j: usize) -> Result<Strand> {
    let d = (j - i) as u32;
    let rows_per = q.std_dim(d + 1);
    let targets: HashMap<u64, usize> = subsets(q.nvars, i - 1)
        .into_iter()
        .enumerate()
        .map(|(k, s)| (s, k))
        .collect();
    let mult = &q.mult[&d];
    let mut nnz = 0usize;
    let mut cols = Vec::new();
    for s in subsets(q.nvars, i) {
        let members: Vec<usize> = (0..q.nvars).filter(|v| s & (1 << v) != 0).collect();
        for by_var in mult {
            let mut col: SparseCol<Scalar> = Vec::new();
            for (k, &v) in members.iter().enumerate() {
                let base = targets[&(s & !(1 << v))] * rows_per;
                for (r, c) in &by_var[v] {
                    let c = if k % 2 == 0 {
                        c.clone()
                    } else {
                        q.field.neg(c)
                    };
                    col.push((base + r, c));
                }
            }
            col.sort_by_key(|e| e.0);
            nnz += col.len();
            if nnz > q.cap {
                return Err(exceeded(format!(
                    "strand (i={i}, j={j}) has more than {} nonzero entries",
                    q.cap
                )));
            }
            cols.push(col);
        }
    }
    Ok(Strand { i, j, cols })
}

fn to_mod_p(q: &BigRational, p: u64) -> Result<u64> {
    let pb = BigInt::from(p);
    let num = q.numer().mod_floor(&pb).to_u64().unwrap();
    let den = q.denom().mod_floor(&pb).to_u64().unwrap();
    if den == 0 {
        return Err(Error::CoefficientNotInField(format!("{q} modulo {p}")));
    }
    Ok(crate::field::mul_mod(num, mod_inverse(den, p), p))
}

/// Exact rank of rational or `F_p` columns.
fn exact_rank(cols: &[SparseCol<Scalar>], field: Field) -> Result<RankInfo> {
    match field {
        Field::Prime(p) => Ok(rank_mod_p(modular_cols(cols, p)?, p)),
        Field::Rationals => {
            let int_cols = cols
                .iter()
                .map(|col| {
                    let l = col
                        .iter()
                        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
                    col.iter()
                        .map(|(r, c)| (*r, c.numer() * (&l / c.denom())))
                        .collect()
                })
                .collect();
            Ok(rank_integer(int_cols))
        }
    }
}

fn modular_cols(cols: &[SparseCol<Scalar>], p: u64) -> Result<Vec<SparseCol<u64>>> {
    cols.iter()
        .map(|col| col.iter().map(|(r, c)| Ok((*r, to_mod_p(c, p)?))).collect())
        .collect()
}

fn strand_rank(s: &Strand, field: Field, method: RankMethod) -> Result<(usize, bool)> {
    let modular = field == Field::Rationals
        && match method {
            RankMethod::Exact => false,
            RankMethod::Modular => true,
            RankMethod::Auto => s.cols.iter().map(Vec::len).sum::<usize>() > AUTO_EXACT_LIMIT,
        };
    if modular {
        Ok((
            rank_mod_p(modular_cols(&s.cols, FAST_PRIME)?, FAST_PRIME).rank,
            true,
        ))
    } else {
        Ok((exact_rank(&s.cols, field)?.rank, false))
    }
}

/// Ranks of `d_{i,j}` for the requested strands, keyed by `(i, j)`.
fn ranks(
    q: &Quotient,
    wanted: &[(usize, usize)],
    method: RankMethod,
) -> Result<HashMap<(usize, usize), usize>> {
    let strands: Vec<Strand> = wanted
        .iter()
        .filter(|&&(i, j)| i >= 1 && i <= q.nvars && j >= i)
        .map(|&(i, j)| build_strand(q, i, j))
        .collect::<Result<_>>()?;
    let results: Vec<(usize, usize, usize, bool)> = strands
        .par_iter()
        .map(|s| strand_rank(s, q.field, method).map(|(r, m)| (s.i, s.j, r, m)))
        .collect::<Result<_>>()?;
    let mut out: HashMap<(usize, usize), usize> = HashMap::new();
    for &(i, j, r, _) in &results {
        out.insert((i, j), r);
    }
    // cross-check the smallest modular strand against the exact path
    let check = strands
        .iter()
        .zip(&results)
        .filter(|(s, r)| r.3 && !s.cols.is_empty())
        .min_by_key(|(s, _)| s.cols.iter().map(Vec::len).sum::<usize>());
    if let Some((s, r)) = check {
        let exact = exact_rank(&s.cols, q.field)?.rank;
        if exact != r.2 {
            return ranks(q, wanted, RankMethod::Exact);
        }
    }
    Ok(out)
}

/// Computes the requested Betti numbers.
pub fn betti_numbers(
    ideal: &Ideal,
    which: &[(usize, usize)],
    opts: &BettiOptions,
) -> Result<BettiTable> {
    let mut q = Quotient::new(ideal, opts.cap)?;
    let nvars = q.nvars;
    if q.gb.is_unit() {
        return Ok(BettiTable::new(nvars));
    }
    let which: Vec<(usize, usize)> = which
        .iter()
        .copied()
        .filter(|&(i, j)| i <= nvars && j >= i)
        .collect();
    let mut wanted: HashSet<(usize, usize)> = HashSet::new();
    for &(i, j) in &which {
        wanted.insert((i, j));
        wanted.insert((i + 1, j));
    }
    let mut wanted: Vec<(usize, usize)> = wanted
        .into_iter()
        .filter(|&(i, j)| i >= 1 && i <= nvars && j >= i)
        .collect();
    wanted.sort();
    for &(i, j) in &which {
        q.prepare_std((j - i) as u32)?;
    }
    for &(i, j) in &wanted {
        q.prepare_mult((j - i) as u32)?;
    }
    let r = ranks(&q, &wanted, opts.method)?;
    let mut table = BettiTable::new(nvars);
    for &(i, j) in &which {
        let dim = strand_dim(&q, i, j);
        let lower = r.get(&(i, j)).copied().unwrap_or(0);
        let upper = r.get(&(i + 1, j)).copied().unwrap_or(0);
        let beta = dim
            .checked_sub(lower + upper)
            .expect("homology dimension is nonnegative");
        table.set(i, j, beta as u64);
    }
    Ok(table)
}

/// `beta_{i,j}` for `i <= i_max`, `j <= j_max`.
pub fn graded_betti(ideal: &Ideal, i_max: usize, j_max: usize) -> Result<BettiTable> {
    graded_betti_with(ideal, i_max, j_max, &BettiOptions::default())
}

pub fn graded_betti_with(
    ideal: &Ideal,
    i_max: usize,
    j_max: usize,
    opts: &BettiOptions,
) -> Result<BettiTable> {
    if i_max > ideal.ring().nvars() {
        return Err(Error::OutOfRange(format!(
            "i_max = {i_max} exceeds the number of variables {}",
            ideal.ring().nvars()
        )));
    }
    let which: Vec<(usize, usize)> = (0..=i_max)
        .flat_map(|i| (i..=j_max).map(move |j| (i, j)))
        .collect();
    betti_numbers(ideal, &which, opts)
}

/// Degree of the lcm of the degrevlex leading monomials. Every shift of the
/// Taylor resolution of the initial ideal is at most this, and Betti numbers
/// only drop when passing from `in(I)` to `I`, so `beta_{i,j} = 0` for larger
/// `j`.
pub fn shift_bound(ideal: &Ideal) -> usize {
    let gb = ideal.groebner(&TermOrder::DegRevLex);
    let nvars = ideal.ring().nvars();
    gb.leading_monomials()
        .iter()
        .fold(Monomial::one(nvars), |acc, m| acc.lcm(m))
        .degree() as usize
}

/// The complete table: all `i`, all `j` up to [`shift_bound`].
pub fn full_betti_table(ideal: &Ideal, opts: &BettiOptions) -> Result<BettiTable> {
    let nvars = ideal.ring().nvars();
    graded_betti_with(ideal, nvars, shift_bound(ideal), opts)
}

/// `H(0..=d_max)` from ranks of Groebner-basis multiples, without any
/// Hilbert series machinery.
pub fn hilbert_rank_oracle(ideal: &Ideal, d_max: usize, cap: usize) -> Result<Vec<BigInt>> {
    check_graded(ideal)?;
    let ring = ideal.ring();
    let nvars = ring.nvars();
    let field = ring.field();
    let gb = ideal.groebner(&TermOrder::DegRevLex);
    let mut out = Vec::with_capacity(d_max + 1);
    for d in 0..=d_max as u32 {
        let count = count_monomials(nvars, d);
        if count > BigInt::from(cap) {
            return Err(exceeded(format!("{count} monomials of degree {d}")));
        }
        let monos = monomials_of_degree(nvars, d);
        let index: HashMap<&Monomial, usize> =
            monos.iter().enumerate().map(|(k, m)| (m, k)).collect();
        let mut cols: Vec<SparseCol<Scalar>> = Vec::new();
        let mut nnz = 0usize;
        for g in gb.elements() {
            let Some(gd) = g.degree() else { continue };
            if gd > d {
                continue;
            }
            for m in monomials_of_degree(nvars, d - gd) {
                let mut col: SparseCol<Scalar> = g
                    .terms()
                    .iter()
                    .map(|(t, c)| (index[&t.mul(&m)], c.clone()))
                    .collect();
                col.sort_by_key(|e| e.0);
                nnz += col.len();
                if nnz > cap {
                    return Err(exceeded(format!(
                        "degree-{d} span has more than {cap} nonzero entries"
                    )));
                }
                cols.push(col);
            }
        }
        let rank = exact_rank(&cols, field)?.rank;
        out.push(BigInt::from(monos.len() - rank));
    }
    Ok(out)
}
