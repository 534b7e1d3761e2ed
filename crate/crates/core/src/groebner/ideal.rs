use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, RingRef, TermOrder, CANONICAL_ORDER};

use super::{groebner_basis, GroebnerBasis, Strategy};

/// An ideal given by generators, with reduced Groebner bases cached per
/// term order. The cache is shared by clones and safe to use from several
/// threads.
pub struct Ideal {
    ring: RingRef,
    generators: Vec<Polynomial>,
    cache: Arc<Mutex<HashMap<TermOrder, Arc<GroebnerBasis>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: self.cache.clone(),
        }
    }
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &RingRef, generators: Vec<Polynomial>) -> Result<Ideal> {
        for g in &generators {
            if !g.ring().same_as(ring) {
                return Err(Error::RingMismatch(format!("generator {g} not in {ring}")));
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Arc::new(Mutex::new(HashMap::new())),
        })
    }

    pub fn zero(ring: &RingRef) -> Ideal {
        Ideal::new(ring, Vec::new()).unwrap()
    }

    pub fn unit(ring: &RingRef) -> Ideal {
        Ideal::new(ring, vec![ring.constant(1)]).unwrap()
    }

    /// Parses one polynomial per entry.
    pub fn parse(ring: &RingRef, gens: &[&str]) -> Result<Ideal> {
        let gens = gens
            .iter()
            .map(|s| ring.parse(s))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(Polynomial::is_monomial)
    }

    /// Reduced Groebner basis for `ord`, computed once and cached.
    pub fn groebner(&self, ord: &TermOrder) -> Arc<GroebnerBasis> {
        self.groebner_with(ord, Strategy::default())
    }

    pub fn groebner_with(&self, ord: &TermOrder, strategy: Strategy) -> Arc<GroebnerBasis> {
        if let Some(gb) = self.cache.lock().unwrap().get(ord) {
            return gb.clone();
        }
        let gb = Arc::new(groebner_basis(&self.ring, &self.generators, ord, strategy));
        self.cache
            .lock()
            .unwrap()
            .entry(ord.clone())
            .or_insert(gb)
            .clone()
    }

    /// Orders with a cached basis.
    pub fn cached_orders(&self) -> Vec<TermOrder> {
        self.cache.lock().unwrap().keys().cloned().collect()
    }

    /// Seeds the cache with a basis known to generate this ideal.
    pub(crate) fn with_basis(self, gb: GroebnerBasis) -> Ideal {
        self.cache
            .lock()
            .unwrap()
            .insert(gb.order().clone(), Arc::new(gb));
        self
    }

    pub fn contains_poly(&self, p: &Polynomial) -> bool {
        self.groebner(&CANONICAL_ORDER).contains(p)
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.groebner(&CANONICAL_ORDER).is_unit()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}
