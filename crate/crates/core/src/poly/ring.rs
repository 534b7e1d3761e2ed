use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Field;

use super::{Monomial, Polynomial};

pub type RingRef = Arc<Ring>;

/// Polynomial ring `k[x1..xn, y1..yn]`, optionally extended by auxiliary
/// (elimination) variables appended after the graded ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    n: usize,
    names: Vec<String>,
    aux: Vec<bool>,
    field: Field,
}

impl Ring {
    /// The graph ring on `n` vertices: variables `x1..xn, y1..yn`.
    pub fn graph(n: usize, field: Field) -> RingRef {
        let names = (1..=n)
            .map(|i| format!("x{i}"))
            .chain((1..=n).map(|i| format!("y{i}")))
            .collect::<Vec<_>>();
        let aux = vec![false; 2 * n];
        Arc::new(Ring {
            n,
            names,
            aux,
            field,
        })
    }

    /// A ring with arbitrary variable names. `n` is only meaningful for
    /// graph rings and may be zero.
    pub fn custom(names: Vec<String>, aux: Vec<bool>, field: Field) -> Result<RingRef> {
        if names.len() != aux.len() {
            return Err(Error::Usage("names and aux flags differ in length".into()));
        }
        let mut seen = HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::Usage(format!("duplicate variable name {name:?}")));
            }
        }
        Ok(Arc::new(Ring {
            n: 0,
            names,
            aux,
            field,
        }))
    }

    /// This ring with one more auxiliary variable appended.
    pub fn with_aux(&self, name: &str) -> Result<RingRef> {
        if self.var_index(name).is_some() {
            return Err(Error::Usage(format!("variable {name:?} already present")));
        }
        let mut r = self.clone();
        r.names.push(name.to_string());
        r.aux.push(true);
        Ok(Arc::new(r))
    }

    /// A fresh auxiliary variable name not yet used in this ring.
    pub fn fresh_aux_name(&self, preferred: &str) -> String {
        if self.var_index(preferred).is_none() {
            return preferred.to_string();
        }
        (2..)
            .map(|k| format!("{preferred}{k}"))
            .find(|c| self.var_index(c).is_none())
            .unwrap()
    }

    /// The ring with the listed variables removed.
    pub fn without(&self, drop: &[usize]) -> RingRef {
        let mut r = self.clone();
        let keep: Vec<usize> = (0..self.nvars()).filter(|i| !drop.contains(i)).collect();
        r.names = keep.iter().map(|&i| self.names[i].clone()).collect();
        r.aux = keep.iter().map(|&i| self.aux[i]).collect();
        Arc::new(r)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|v| v == name)
    }

    pub fn is_aux(&self, idx: usize) -> bool {
        self.aux[idx]
    }

    pub fn has_aux(&self) -> bool {
        self.aux.iter().any(|&a| a)
    }

    pub fn aux_indices(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|&i| self.aux[i]).collect()
    }

    /// Number of graded (non-auxiliary) variables.
    pub fn graded_arity(&self) -> usize {
        self.aux.iter().filter(|&&a| !a).count()
    }

    /// Index of `x_i` (1-based vertex label) in a graph ring.
    pub fn x(&self, i: usize) -> usize {
        assert!(
            i >= 1 && i <= self.n,
            "vertex {i} out of range 1..={}",
            self.n
        );
        i - 1
    }

    /// Index of `y_i` (1-based vertex label) in a graph ring.
    pub fn y(&self, i: usize) -> usize {
        assert!(
            i >= 1 && i <= self.n,
            "vertex {i} out of range 1..={}",
            self.n
        );
        self.n + i - 1
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn same_as(self: &RingRef, other: &RingRef) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }

    pub fn check_same(self: &RingRef, other: &RingRef) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{self} vs {other}")))
        }
    }

    /// The variable with index `idx` as a polynomial.
    pub fn var(self: &RingRef, idx: usize) -> Polynomial {
        Polynomial::monomial(self, self.field.one(), Monomial::var(self.nvars(), idx, 1))
    }

    pub fn xv(self: &RingRef, i: usize) -> Polynomial {
        self.var(self.x(i))
    }

    pub fn yv(self: &RingRef, i: usize) -> Polynomial {
        self.var(self.y(i))
    }

    pub fn constant(self: &RingRef, c: i64) -> Polynomial {
        Polynomial::monomial(self, self.field.from_int(c), self.one_monomial())
    }

    pub fn zero(self: &RingRef) -> Polynomial {
        Polynomial::zero(self)
    }

    pub fn parse(self: &RingRef, text: &str) -> Result<Polynomial> {
        super::parse::parse_polynomial(text, self)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.names.join(","))
    }
}
