//! Exact multivariate polynomials, term orders and ring maps.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;
mod ring_map;

pub use monomial::{monomials_of_degree, Exponents, Monomial};
pub use order::{BaseOrder, TermOrder};
pub use parse::parse_polynomial;
pub use polynomial::{Polynomial, CANONICAL_ORDER};
pub use ring::{Ring, RingRef};
pub use ring_map::RingMap;

use crate::error::Result;
use crate::field::Scalar;

/// `a * b`, failing on ring mismatch.
pub fn multiply(a: &Polynomial, b: &Polynomial) -> Result<Polynomial> {
    a.checked_mul(b)
}

pub fn leading_term(p: &Polynomial, ord: &TermOrder) -> Result<(Scalar, Monomial)> {
    p.leading_term(ord)
}

pub fn apply_ring_map(m: &RingMap, p: &Polynomial) -> Result<Polynomial> {
    m.apply(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use num_traits::One;

    fn k3() -> RingRef {
        Ring::graph(3, Field::Rationals)
    }

    #[test]
    fn multiplication_examples() {
        let r = k3();
        let p = multiply(&(&r.xv(1) + &r.yv(1)), &(&r.xv(1) - &r.yv(1))).unwrap();
        assert_eq!(p, r.parse("x1^2 - y1^2").unwrap());
        assert!(multiply(&r.zero(), &r.xv(2)).unwrap().is_zero());
        let other = Ring::graph(2, Field::Rationals);
        assert!(multiply(&r.xv(1), &other.xv(1)).is_err());
    }

    #[test]
    fn parity_generator_factorizations() {
        let r = Ring::graph(4, Field::Rationals);
        for i in 1..=4 {
            for j in i + 1..=4 {
                let g = r.parse(&format!("x{i}*x{j} - y{i}*y{j}")).unwrap();
                let (xi, yi, xj, yj) = (r.xv(i), r.yv(i), r.xv(j), r.yv(j));
                let rhs = &(&(&xi + &yi) * &xj) - &(&yi * &(&xj + &yj));
                assert_eq!(g, rhs);
                let rhs2 = &(&(&xi - &yi) * &xj) + &(&yi * &(&xj - &yj));
                assert_eq!(g, rhs2);
                let f = r.parse(&format!("x{i}*y{j} - x{j}*y{i}")).unwrap();
                assert_eq!(f, &(&(&xi + &yi) * &yj) - &(&yi * &(&xj + &yj)));
                assert_eq!(f, &(&(&xi - &yi) * &yj) - &(&yi * &(&xj - &yj)));
            }
        }
    }

    #[test]
    fn leading_terms() {
        let r = k3();
        let g12 = r.parse("x1*x2 - y1*y2").unwrap();
        let f12 = r.parse("x1*y2 - x2*y1").unwrap();
        let lt = |p: &Polynomial, o: &TermOrder| p.leading_term(o).unwrap();
        assert_eq!(
            lt(&g12, &TermOrder::Lex).1,
            Monomial::from_exponents([1, 1, 0, 0, 0, 0])
        );
        assert_eq!(
            lt(&f12, &TermOrder::Lex).1,
            Monomial::from_exponents([1, 0, 0, 0, 1, 0])
        );
        // degrevlex with x1 > .. > x3 > y1 > .. > y3: x1*y2 - x2*y1 has its
        // last nonzero entry (+1, at y2) positive, so x2*y1 is the larger one
        let (c, m) = lt(&f12, &TermOrder::DegRevLex);
        assert_eq!(m, Monomial::from_exponents([0, 1, 0, 1, 0, 0]));
        assert_eq!(c, -Scalar::one());
        assert!(r.zero().leading_term(&TermOrder::Lex).is_err());
    }

    #[test]
    fn coordinate_change_images() {
        let r = k3();
        let map = RingMap::parity_to_permanental(&r);
        let g12 = r.parse("x1*x2 - y1*y2").unwrap();
        assert_eq!(apply_ring_map(&RingMap::identity(&r), &g12).unwrap(), g12);
        assert_eq!(
            apply_ring_map(&map, &g12).unwrap(),
            r.parse("-2*x1*y2 - 2*x2*y1").unwrap()
        );
        assert_eq!(
            apply_ring_map(&map, &r.parse("x1 - y1").unwrap()).unwrap(),
            r.parse("-2*y1").unwrap()
        );
        assert!(map.is_invertible_linear());
        assert!(!map.is_degenerate());

        let r2 = Ring::graph(3, Field::prime(2).unwrap());
        let map2 = RingMap::parity_to_permanental(&r2);
        let g = r2.parse("x1*x2 - y1*y2").unwrap();
        assert!(apply_ring_map(&map2, &g).unwrap().is_zero());
        assert!(map2.is_degenerate());

        let other = Ring::graph(2, Field::Rationals);
        assert!(apply_ring_map(&map, &other.xv(1)).is_err());
        assert!(RingMap::new(&r, &r, vec![r.xv(1)]).is_err());
    }

    #[test]
    fn exact_division() {
        let r = k3();
        let f = r.parse("x1*y2 - x2*y1").unwrap();
        let g = r.parse("x1 + y3 - 2*x2").unwrap();
        assert_eq!((&f * &g).exact_div(&f).unwrap(), g);
        assert!(f.exact_div(&g).is_err());
    }
}
