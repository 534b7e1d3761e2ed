//! Python bindings: ideals of graphs, Groebner bases, Hilbert numerators,
//! Betti tables and the check registry.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use pbei_core::betti::{
    full_betti_table, graded_betti_with, BettiOptions, BettiTable as CoreTable,
};
use pbei_core::formulas;
use pbei_core::graph_ideals::{build_family, Graph, IdealFamily};
use pbei_core::hilbert::{hilbert_function, hilbert_numerator, krull_dim, HilbertNumerator};
use pbei_core::ideal_ops;
use pbei_core::verify::{parse_check_list, run_verify, Tier, VerifyConfig};
use pbei_core::{Field, Ideal as CoreIdeal, TermOrder};

fn err(e: pbei_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn order(s: &str) -> PyResult<TermOrder> {
    s.parse().map_err(err)
}

fn coeffs(n: &HilbertNumerator) -> Vec<BigInt> {
    n.poly.coeffs().to_vec()
}

/// An ideal in `k[x1..xn, y1..yn]`.
#[pyclass(module = "pbei", frozen)]
struct Ideal {
    inner: CoreIdeal,
}

#[pymethods]
impl Ideal {
    /// Ideal from generator strings in the ring of `n` vertices.
    #[new]
    #[pyo3(signature = (n, generators, field = "q"))]
    fn new(n: usize, generators: Vec<String>, field: &str) -> PyResult<Self> {
        let field: Field = field.parse().map_err(err)?;
        let ring = pbei_core::Ring::graph(n, field);
        let gens: Vec<&str> = generators.iter().map(String::as_str).collect();
        Ok(Ideal {
            inner: CoreIdeal::parse(&ring, &gens).map_err(err)?,
        })
    }

    fn generators(&self) -> Vec<String> {
        self.inner
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect()
    }

    /// Reduced Groebner basis as strings.
    #[pyo3(signature = (order = "degrevlex"))]
    fn groebner(&self, order: &str) -> PyResult<Vec<String>> {
        let ord = self::order(order)?;
        Ok(self
            .inner
            .groebner(&ord)
            .elements()
            .iter()
            .map(|g| g.to_string())
            .collect())
    }

    fn contains(&self, poly: &str) -> PyResult<bool> {
        let p = self.inner.ring().parse(poly).map_err(err)?;
        Ok(self.inner.contains_poly(&p))
    }

    /// Coefficients of the Hilbert-Poincare numerator, constant term first.
    #[pyo3(signature = (order = "degrevlex"))]
    fn hilbert_numerator(&self, order: &str) -> PyResult<Vec<BigInt>> {
        Ok(coeffs(
            &hilbert_numerator(&self.inner, &self::order(order)?).map_err(err)?,
        ))
    }

    fn hilbert_function(&self, d_max: usize) -> PyResult<Vec<BigInt>> {
        let n = hilbert_numerator(&self.inner, &TermOrder::DegRevLex).map_err(err)?;
        Ok(hilbert_function(&n, d_max))
    }

    fn krull_dim(&self) -> PyResult<Option<usize>> {
        Ok(krull_dim(
            &hilbert_numerator(&self.inner, &TermOrder::DegRevLex).map_err(err)?,
        ))
    }

    /// Graded Betti numbers; the whole table unless both bounds are given.
    #[pyo3(signature = (i_max = None, j_max = None))]
    fn betti(&self, i_max: Option<usize>, j_max: Option<usize>) -> PyResult<BettiTable> {
        let opts = BettiOptions::default();
        let t = match (i_max, j_max) {
            (Some(i), Some(j)) => graded_betti_with(&self.inner, i, j, &opts),
            _ => full_betti_table(&self.inner, &opts),
        };
        Ok(BettiTable {
            inner: t.map_err(err)?,
        })
    }

    fn intersect(&self, other: &Ideal) -> PyResult<Ideal> {
        Ok(Ideal {
            inner: ideal_ops::intersect(&self.inner, &other.inner).map_err(err)?,
        })
    }

    fn colon(&self, poly: &str) -> PyResult<Ideal> {
        let f = self.inner.ring().parse(poly).map_err(err)?;
        Ok(Ideal {
            inner: ideal_ops::colon(&self.inner, &f).map_err(err)?,
        })
    }

    fn saturate(&self, poly: &str) -> PyResult<Ideal> {
        let f = self.inner.ring().parse(poly).map_err(err)?;
        Ok(Ideal {
            inner: ideal_ops::saturate(&self.inner, &f).map_err(err)?,
        })
    }

    fn __eq__(&self, other: &Ideal) -> PyResult<bool> {
        ideal_ops::ideal_equal(&self.inner, &other.inner).map_err(err)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Ideal{}", self.inner)
    }
}

#[pyclass(module = "pbei", frozen)]
struct BettiTable {
    inner: CoreTable,
}

#[pymethods]
impl BettiTable {
    /// `{(i, j): beta}` for the nonzero entries.
    fn entries(&self) -> BTreeMap<(usize, usize), u64> {
        self.inner.entries().map(|e| ((e.i, e.j), e.beta)).collect()
    }

    fn get(&self, i: usize, j: usize) -> u64 {
        self.inner.get(i, j)
    }

    fn reg(&self) -> Option<usize> {
        self.inner.reg()
    }

    fn pd(&self) -> Option<usize> {
        self.inner.pd()
    }

    fn depth(&self) -> Option<usize> {
        self.inner.depth()
    }

    fn alternating_sum(&self) -> Vec<BigInt> {
        coeffs(&self.inner.alternating_sum())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

/// Ideal of a family on a graph given by its edge list.
#[pyfunction]
#[pyo3(signature = (n, edges, kind = "parity", field = "q"))]
fn graph_ideal(n: usize, edges: Vec<(usize, usize)>, kind: &str, field: &str) -> PyResult<Ideal> {
    let g = Graph::new(n, edges).map_err(err)?;
    let family: IdealFamily = kind.parse().map_err(err)?;
    let field: Field = field.parse().map_err(err)?;
    Ok(Ideal {
        inner: build_family(&g, &family, field).map_err(err)?,
    })
}

/// Family member on the complete graph `K_n`.
#[pyfunction]
#[pyo3(signature = (n, kind = "parity", field = "q"))]
fn complete_ideal(n: usize, kind: &str, field: &str) -> PyResult<Ideal> {
    let family: IdealFamily = kind.parse().map_err(err)?;
    let field: Field = field.parse().map_err(err)?;
    Ok(Ideal {
        inner: build_family(&Graph::complete(n), &family, field).map_err(err)?,
    })
}

#[pyfunction]
fn closed_form_numerator(n: usize) -> PyResult<Vec<BigInt>> {
    Ok(coeffs(&formulas::closed_form_numerator(n).map_err(err)?))
}

#[pyfunction]
fn extremal_betti(n: usize) -> PyResult<u64> {
    formulas::extremal_betti(n).map_err(err)
}

/// `{"dim", "depth", "reg", "pd", "extremal_betti"}`
#[pyfunction]
fn predicted_invariants(n: usize) -> PyResult<BTreeMap<&'static str, u64>> {
    let p = formulas::predicted_invariants(n).map_err(err)?;
    Ok(BTreeMap::from([
        ("dim", p.dim as u64),
        ("depth", p.depth as u64),
        ("reg", p.reg as u64),
        ("pd", p.pd as u64),
        ("extremal_betti", p.extremal_betti),
    ]))
}

/// Runs the check registry and returns the JSON report.
#[pyfunction]
#[pyo3(signature = (nmin = 3, nmax = 4, checks = "all", field = "q", poison = false))]
fn verify(
    py: Python<'_>,
    nmin: usize,
    nmax: usize,
    checks: &str,
    field: &str,
    poison: bool,
) -> PyResult<String> {
    let mut cfg = VerifyConfig::new(Tier::Quick);
    cfg.nmin = nmin;
    cfg.nmax = nmax;
    cfg.checks = parse_check_list(checks).map_err(err)?;
    cfg.field = field.parse().map_err(err)?;
    cfg.poison = poison;
    let report = py.detach(|| run_verify(&cfg)).map_err(err)?;
    Ok(report.to_json())
}

#[pymodule]
fn pbei(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Ideal>()?;
    m.add_class::<BettiTable>()?;
    m.add_function(wrap_pyfunction!(graph_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(complete_ideal, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_numerator, m)?)?;
    m.add_function(wrap_pyfunction!(extremal_betti, m)?)?;
    m.add_function(wrap_pyfunction!(predicted_invariants, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
