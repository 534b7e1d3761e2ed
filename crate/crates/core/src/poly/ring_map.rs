use crate::error::{Error, Result};
use crate::field::Scalar;

use super::{Polynomial, RingRef};

/// Substitution homomorphism sending source variable `i` to `images[i]`.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: RingRef,
    target: RingRef,
    images: Vec<Polynomial>,
}

impl RingMap {
    pub fn new(source: &RingRef, target: &RingRef, images: Vec<Polynomial>) -> Result<RingMap> {
        if images.len() != source.nvars() {
            return Err(Error::ArityMismatch(format!(
                "{} images for {} source variables",
                images.len(),
                source.nvars()
            )));
        }
        if source.field() != target.field() {
            return Err(Error::RingMismatch(
                "source and target fields differ".into(),
            ));
        }
        for img in &images {
            if !img.ring().same_as(target) {
                return Err(Error::ArityMismatch(format!(
                    "image {img} is not in {target}"
                )));
            }
        }
        Ok(RingMap {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn identity(ring: &RingRef) -> RingMap {
        let images = (0..ring.nvars()).map(|i| ring.var(i)).collect();
        RingMap::new(ring, ring, images).unwrap()
    }

    /// `x_i -> x_i - y_i`, `y_i -> x_i + y_i` on a graph ring; auxiliary
    /// variables are fixed. Turns parity ideals into permanental ideals
    /// (up to the unit `-2`) outside characteristic 2.
    pub fn parity_to_permanental(ring: &RingRef) -> RingMap {
        let n = ring.n();
        let mut images: Vec<Polynomial> = (0..ring.nvars()).map(|i| ring.var(i)).collect();
        for i in 1..=n {
            images[ring.x(i)] = &ring.xv(i) - &ring.yv(i);
            images[ring.y(i)] = &ring.xv(i) + &ring.yv(i);
        }
        RingMap::new(ring, ring, images).unwrap()
    }

    pub fn source(&self) -> &RingRef {
        &self.source
    }

    pub fn target(&self) -> &RingRef {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if !p.ring().same_as(&self.source) {
            return Err(Error::ArityMismatch(format!(
                "{p} is not in the source ring {}",
                self.source
            )));
        }
        Ok(p.substitute(&self.images, &self.target))
    }

    /// All images are homogeneous of degree one.
    pub fn is_linear(&self) -> bool {
        self.images
            .iter()
            .all(|p| !p.is_zero() && p.is_homogeneous() && p.degree() == Some(1))
    }

    /// Linear and bijective on the space of linear forms.
    pub fn is_invertible_linear(&self) -> bool {
        if !self.is_linear() || self.source.nvars() != self.target.nvars() {
            return false;
        }
        let field = self.target.field();
        let k = self.target.nvars();
        let mut rows: Vec<Vec<Scalar>> = self
            .images
            .iter()
            .map(|p| {
                let mut row = vec![field.zero(); k];
                for (m, c) in p.terms() {
                    let idx = m.support().next().unwrap();
                    row[idx] = c.clone();
                }
                row
            })
            .collect();
        rank_dense(&mut rows, field) == k
    }

    /// Linear but not invertible, e.g. the parity/permanental change in
    /// characteristic 2.
    pub fn is_degenerate(&self) -> bool {
        self.is_linear() && !self.is_invertible_linear()
    }
}

fn rank_dense(rows: &mut [Vec<Scalar>], field: crate::field::Field) -> usize {
    use num_traits::Zero;
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = field.inv(&rows[rank][col]);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = field.mul(&row[col], &inv);
                for (entry, p) in row[col..ncols].iter_mut().zip(&pivot_row[col..ncols]) {
                    *entry = field.sub(entry, &field.mul(&factor, p));
                }
            }
        }
        rank += 1;
    }
    rank
}
