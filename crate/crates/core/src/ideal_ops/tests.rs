use super::*;
use crate::field::Field;
use crate::graph_ideals::{
    chain_ideal, component_primes, f_ij, parity_ideal, permanental_ideal, saturation_generators,
    Component, Graph,
};
use crate::poly::Ring;

const Q: Field = Field::Rationals;

fn sorted_strings(i: &Ideal) -> Vec<String> {
    let mut v: Vec<String> = i.generators().iter().map(|g| g.to_string()).collect();
    v.sort();
    v
}

#[test]
fn intersection_examples() {
    let r = Ring::graph(1, Q);
    let a = Ideal::parse(&r, &["x1"]).unwrap();
    let b = Ideal::parse(&r, &["y1"]).unwrap();
    let ab = intersect(&a, &b).unwrap();
    assert!(ideal_equal(&ab, &Ideal::parse(&r, &["x1*y1"]).unwrap()).unwrap());

    let k3 = parity_ideal(&Graph::complete(3), Q);
    assert!(ideal_equal(&intersect(&k3, &k3).unwrap(), &k3).unwrap());
}

fn printed_intersection(n: usize) -> Ideal {
    let r = Ring::graph(n, Q);
    let (a, b) = (n - 1, n);
    let mut gens = vec![&(&r.xv(a) * &r.xv(b)) - &(&r.yv(a) * &r.yv(b))];
    for i in 1..=n - 2 {
        gens.push(&r.xv(i) - &r.yv(i));
        gens.push(&(&r.xv(a) - &r.yv(a)) * &r.yv(i));
        gens.push(&(&r.xv(b) - &r.yv(b)) * &r.yv(i));
    }
    Ideal::new(&r, gens).unwrap()
}

#[test]
fn minus_prime_meets_last_component() {
    for n in 3..=5 {
        let pm = component_primes(n, &Component::PMinus, Q).unwrap();
        let p = component_primes(n, &Component::Prime(n - 1, n), Q).unwrap();
        let meet = intersect(&pm, &p).unwrap();
        assert!(
            ideal_equal(&meet, &printed_intersection(n)).unwrap(),
            "n = {n}"
        );
    }
}

#[test]
fn printed_lex_basis_of_the_t_combination() {
    // t*p^- + (1 - t)*P_{23} for n = 3, lex with x1 > x2 > x3 > y1 > y2 > y3 > t
    let base = Ring::graph(3, Q);
    let r = base.with_aux("t").unwrap();
    let t = r.var(r.var_index("t").unwrap());
    let one_minus_t = &r.constant(1) - &t;
    let mut gens = Vec::new();
    for i in 1..=3 {
        gens.push(&t * &(&r.xv(i) - &r.yv(i)));
    }
    for g in ["x2*x3 - y2*y3", "x1", "y1"] {
        gens.push(&one_minus_t * &r.parse(g).unwrap());
    }
    let j = Ideal::new(&r, gens).unwrap();
    let gb = j.groebner(&TermOrder::Lex);
    let printed: Vec<Polynomial> = [
        "x2*t - y2*t",
        "x3*t - y3*t",
        "x2*x3 - y2*y3",
        "x1 - y1",
        "x2*y1 - y1*y2",
        "x3*y1 - y1*y3",
        "y1*t - y1",
    ]
    .iter()
    .map(|s| r.parse(s).unwrap())
    .collect();
    let mut got: Vec<String> = gb.elements().iter().map(|p| p.to_string()).collect();
    let mut want: Vec<String> = printed.iter().map(|p| p.to_string()).collect();
    got.sort();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn colon_examples() {
    let r = Ring::graph(1, Q);
    let i = Ideal::parse(&r, &["x1*y1"]).unwrap();
    let c = colon(&i, &r.xv(1)).unwrap();
    assert!(ideal_equal(&c, &Ideal::parse(&r, &["y1"]).unwrap()).unwrap());
    assert!(matches!(
        colon(&i, &r.zero()),
        Err(Error::ZeroPolynomial(_))
    ));

    let i0 = chain_ideal(3, 0, Q).unwrap();
    let f13 = f_ij(i0.ring(), 1, 3);
    let p13 = component_primes(3, &Component::Prime(1, 3), Q).unwrap();
    assert!(ideal_equal(&colon(&i0, &f13).unwrap(), &p13).unwrap());

    let i2 = chain_ideal(4, 2, Q).unwrap();
    let r4 = i2.ring().clone();
    let c = colon(&i2, &(&r4.xv(4) + &r4.yv(4))).unwrap();
    assert!(ideal_equal(&c, &printed_intersection(4)).unwrap());
}

#[test]
fn saturation_examples() {
    let r = Ring::graph(1, Q);
    let i = Ideal::parse(&r, &["x1^2*y1"]).unwrap();
    let s = saturate(&i, &r.xv(1)).unwrap();
    assert!(ideal_equal(&s, &Ideal::parse(&r, &["y1"]).unwrap()).unwrap());
    assert!(ideal_equal(&saturate(&i, &r.constant(1)).unwrap(), &i).unwrap());

    let k3 = parity_ideal(&Graph::complete(3), Q);
    let rr = k3.ring().clone();
    let g = rr.parse("x1*y1*x2*y2*x3*y3").unwrap();
    let sat = saturate(&k3, &g).unwrap();
    let expect = saturation_generators(&Graph::complete(3), Q).unwrap();
    assert!(ideal_equal(&sat, &expect).unwrap());

    // a non-monomial saturation goes through a single auxiliary variable
    let s2 = saturate(&k3, &(&rr.xv(3) + &rr.yv(3))).unwrap();
    assert!(ideal_equal(&colon(&s2, &(&rr.xv(3) + &rr.yv(3))).unwrap(), &s2).unwrap());
}

#[test]
fn elimination_examples() {
    let base = Ring::graph(1, Q);
    let r = base.with_aux("t").unwrap();
    let t_idx = r.var_index("t").unwrap();
    let i = Ideal::parse(&r, &["t*x1", "y1 - t*y1", "t^2 - t"]).unwrap();
    let e = eliminate(&i, &[t_idx]).unwrap();
    assert_eq!(e.ring().nvars(), 2);
    assert_eq!(sorted_strings(&e), vec!["x1*y1".to_string()]);

    assert!(ideal_equal(&eliminate(&i, &[]).unwrap(), &i).unwrap());
    assert!(matches!(eliminate(&i, &[0]), Err(Error::NotAuxiliary(v)) if v == "x1"));
}

#[test]
fn equality_and_containment() {
    let r = Ring::graph(1, Q);
    let a = Ideal::parse(&r, &["x1", "y1"]).unwrap();
    let b = Ideal::parse(&r, &["y1", "x1 + y1"]).unwrap();
    assert!(ideal_equal(&a, &b).unwrap());

    let k3 = parity_ideal(&Graph::complete(3), Q);
    let j3 = saturation_generators(&Graph::complete(3), Q).unwrap();
    let mut comps = vec![j3.clone()];
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        comps.push(component_primes(3, &Component::Prime(i, j), Q).unwrap());
    }
    assert!(ideal_equal(&k3, &intersect_all(&comps).unwrap()).unwrap());
    assert!(!ideal_equal(&k3, &j3).unwrap());

    assert!(contains(&j3, &k3).unwrap());
    assert!(!contains(&k3, &j3).unwrap());
    let w = containment_witness(&k3, &j3).unwrap().unwrap();
    assert!(!k3.contains_poly(&w));

    let other = Ring::graph(2, Q);
    assert!(ideal_equal(&a, &Ideal::zero(&other)).is_err());
}

#[test]
fn coordinate_change_images() {
    let k3 = parity_ideal(&Graph::complete(3), Q);
    let r = k3.ring().clone();
    let id = RingMap::identity(&r);
    assert!(ideal_equal(&image_ideal(&id, &k3).unwrap(), &k3).unwrap());

    let map = RingMap::parity_to_permanental(&r);
    let img = image_ideal(&map, &k3).unwrap();
    assert!(ideal_equal(&img, &permanental_ideal(&Graph::complete(3), Q)).unwrap());

    let lin = Ideal::parse(&r, &["x1 - y1"]).unwrap();
    let img = image_ideal(&map, &lin).unwrap();
    assert!(ideal_equal(&img, &Ideal::parse(&r, &["y1"]).unwrap()).unwrap());

    let f2 = Field::prime(2).unwrap();
    let k3_2 = parity_ideal(&Graph::complete(3), f2);
    let map2 = RingMap::parity_to_permanental(k3_2.ring());
    assert_eq!(
        image_ideal(&map2, &k3_2).unwrap_err(),
        Error::DegenerateInCharacteristicTwo
    );
}

#[test]
fn char_two_permanental_is_determinantal() {
    let f2 = Field::prime(2).unwrap();
    let g = Graph::complete(3);
    let perm = permanental_ideal(&g, f2);
    let det = crate::graph_ideals::determinantal_ideal(&g, f2);
    assert!(ideal_equal(&perm, &det).unwrap());
}
