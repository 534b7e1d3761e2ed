use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Monomial;

/// Orders usable inside an elimination block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseOrder {
    Lex,
    DegRevLex,
}

/// Monomial order over the ring's variable list `x1 > .. > xn > y1 > .. > yn > aux`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TermOrder {
    Lex,
    DegRevLex,
    /// The variables in `elim` form a block compared first (degrevlex within
    /// the block); ties are broken by `inner` on the remaining variables.
    /// Any such order eliminates `elim`.
    Block {
        elim: Vec<usize>,
        inner: BaseOrder,
    },
}

impl TermOrder {
    pub fn elimination(elim: Vec<usize>, inner: BaseOrder) -> TermOrder {
        let mut elim = elim;
        elim.sort_unstable();
        elim.dedup();
        TermOrder::Block { elim, inner }
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, TermOrder::DegRevLex)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match self {
            TermOrder::Lex => lex(a, b, |_| true),
            TermOrder::DegRevLex => degrevlex(a, b, |_| true),
            TermOrder::Block { elim, inner } => {
                let in_block = |i: usize| elim.binary_search(&i).is_ok();
                degrevlex(a, b, in_block).then_with(|| match inner {
                    BaseOrder::Lex => lex(a, b, |i| !in_block(i)),
                    BaseOrder::DegRevLex => degrevlex(a, b, |i| !in_block(i)),
                })
            }
        }
    }
}

fn lex(a: &[u16], b: &[u16], keep: impl Fn(usize) -> bool) -> Ordering {
    for i in 0..a.len() {
        if keep(i) && a[i] != b[i] {
            return a[i].cmp(&b[i]);
        }
    }
    Ordering::Equal
}

fn degrevlex(a: &[u16], b: &[u16], keep: impl Fn(usize) -> bool) -> Ordering {
    let mut da = 0u32;
    let mut db = 0u32;
    for i in 0..a.len() {
        if keep(i) {
            da += a[i] as u32;
            db += b[i] as u32;
        }
    }
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if keep(i) && a[i] != b[i] {
            // smaller exponent in the last differing variable wins
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Lex => write!(f, "lex"),
            TermOrder::DegRevLex => write!(f, "degrevlex"),
            TermOrder::Block { elim, inner } => write!(f, "block({elim:?}, {inner:?})"),
        }
    }
}

impl std::str::FromStr for TermOrder {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<TermOrder> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lex" => Ok(TermOrder::Lex),
            "degrevlex" | "grevlex" | "drl" => Ok(TermOrder::DegRevLex),
            other => Err(crate::Error::Usage(format!(
                "unknown term order {other:?} (expected lex or degrevlex)"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e.iter().copied())
    }

    #[test]
    fn lex_and_degrevlex_disagree_where_expected() {
        // x1*x3^2 vs x2^3 (3 vars): lex prefers x1, degrevlex compares last var
        let a = m(&[1, 0, 2]);
        let b = m(&[0, 3, 0]);
        assert_eq!(TermOrder::Lex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(TermOrder::DegRevLex.cmp(&a, &b), Ordering::Less);
        // degree dominates in degrevlex
        assert_eq!(
            TermOrder::DegRevLex.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])),
            Ordering::Greater
        );
        assert_eq!(
            TermOrder::Lex.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn block_order_eliminates() {
        let ord = TermOrder::elimination(vec![2], BaseOrder::DegRevLex);
        // anything with the block variable beats anything without it
        assert_eq!(ord.cmp(&m(&[0, 0, 1]), &m(&[5, 5, 0])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 0, 1]), &m(&[0, 1, 1])), Ordering::Greater);
    }
}
