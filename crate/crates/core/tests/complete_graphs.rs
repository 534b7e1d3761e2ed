use num_bigint::BigInt;

use pbei_core::betti::{full_betti_table, BettiOptions};
use pbei_core::formulas::{closed_form_numerator, predicted_invariants};
use pbei_core::graph_ideals::{
    chain_ideal, component_primes, parity_ideal, saturation_generators, Component, Graph,
};
use pbei_core::hilbert::{hilbert_function, hilbert_numerator, krull_dim};
use pbei_core::ideal_ops::{ideal_equal, intersect_all};
use pbei_core::{Field, Ideal, TermOrder};

const Q: Field = Field::Rationals;

fn k(n: usize) -> Ideal {
    parity_ideal(&Graph::complete(n), Q)
}

#[test]
fn numerators_match_closed_form() {
    for n in 3..=5 {
        let got = hilbert_numerator(&k(n), &TermOrder::DegRevLex).unwrap();
        assert_eq!(got, closed_form_numerator(n).unwrap(), "n = {n}");
        assert_eq!(krull_dim(&got), Some(n));
    }
}

#[test]
fn hilbert_function_of_k4() {
    let num = hilbert_numerator(&k(4), &TermOrder::DegRevLex).unwrap();
    let h = hilbert_function(&num, 4);
    let want: Vec<BigInt> = [1, 8, 30, 72, 136]
        .iter()
        .map(|&v| BigInt::from(v))
        .collect();
    assert_eq!(h, want);
}

#[test]
fn decomposition_of_k4() {
    let mut parts = vec![saturation_generators(&Graph::complete(4), Q).unwrap()];
    for i in 1..=4 {
        for j in i + 1..=4 {
            parts.push(component_primes(4, &Component::Prime(i, j), Q).unwrap());
        }
    }
    assert!(ideal_equal(&k(4), &intersect_all(&parts).unwrap()).unwrap());
}

#[test]
fn k4_betti_table() {
    let t = full_betti_table(&k(4), &BettiOptions::default()).unwrap();
    let totals: Vec<u64> = (0..=5).map(|i| t.total(i)).collect();
    assert_eq!(totals, vec![1, 6, 22, 28, 14, 3]);
    let p = predicted_invariants(4).unwrap();
    assert_eq!(
        (t.reg(), t.pd(), t.depth()),
        (Some(p.reg), Some(p.pd), Some(p.depth))
    );
    assert_eq!(t.get(5, 8), p.extremal_betti);
    assert_eq!(t.alternating_sum(), closed_form_numerator(4).unwrap());
}

#[test]
fn full_chain_keeps_dimension() {
    let last = chain_ideal(4, 3, Q).unwrap();
    let num = hilbert_numerator(&last, &TermOrder::DegRevLex).unwrap();
    assert_eq!(krull_dim(&num), Some(4));
}
