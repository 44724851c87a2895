//! Rational points of projective space.

use alloc::vec::Vec;

use crate::error::Error;
use crate::field::Field;

/// A point of `P^{n-1}` with coordinates scaled so that the first nonzero
/// coordinate is 1. Equal points have identical coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjPoint<E> {
    coords: Vec<E>,
}

impl<E: Clone + PartialEq> ProjPoint<E> {
    pub fn new<F: Field<Elem = E>>(field: &F, coords: Vec<E>) -> Result<Self, Error> {
        let Some(lead) = coords.iter().find(|c| !field.is_zero(c)) else {
            return Err(Error::ZeroPoint);
        };
        let inv = field.inv(lead).expect("nonzero");
        let coords = coords.iter().map(|c| field.mul(c, &inv)).collect();
        Ok(Self { coords })
    }

    pub fn from_ints<F: Field<Elem = E>>(field: &F, coords: &[i64]) -> Result<Self, Error> {
        Self::new(field, coords.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn coords(&self) -> &[E] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

impl<E> AsRef<[E]> for ProjPoint<E> {
    fn as_ref(&self) -> &[E] {
        &self.coords
    }
}

/// A nonempty list of distinct points of the same projective space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet<E> {
    points: Vec<ProjPoint<E>>,
}

impl<E: Clone + PartialEq> PointSet<E> {
    pub fn new(points: Vec<ProjPoint<E>>) -> Result<Self, Error> {
        let Some(first) = points.first() else {
            return Err(Error::TooFewPoints { required: 1, found: 0 });
        };
        let n = first.dim();
        for (i, p) in points.iter().enumerate() {
            if p.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: p.dim() });
            }
            if points[..i].contains(p) {
                return Err(Error::InvalidArgument(alloc::format!("point {i} is repeated")));
            }
        }
        Ok(Self { points })
    }

    pub fn from_ints<F: Field<Elem = E>>(field: &F, coords: &[&[i64]]) -> Result<Self, Error> {
        Self::new(coords.iter().map(|c| ProjPoint::from_ints(field, c)).collect::<Result<_, _>>()?)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Number of homogeneous coordinates.
    pub fn num_vars(&self) -> usize {
        self.points[0].dim()
    }

    pub fn points(&self) -> &[ProjPoint<E>] {
        &self.points
    }

    /// The set with point `i` removed; may be empty.
    pub fn without(&self, i: usize) -> Vec<ProjPoint<E>> {
        let mut pts = self.points.clone();
        pts.remove(i);
        pts
    }
}

/// Drops repeated points, keeping the first occurrence.
pub fn dedup_points<E: Clone + PartialEq>(points: Vec<ProjPoint<E>>) -> Vec<ProjPoint<E>> {
    let mut out: Vec<ProjPoint<E>> = Vec::with_capacity(points.len());
    for p in points {
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}
