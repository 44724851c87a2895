#![allow(dead_code)]

use graded_basic_core::poly::monomials;
use graded_basic_core::{Field, HomogPoly, ModulePresentation, PointSet, ProjPoint, Rationals, Section};
use num_rational::BigRational;
use rand::Rng;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Rationals.from_i64(n)
}

/// Random homogeneous polynomial with small integer coefficients.
pub fn random_poly<F: Field, R: Rng>(field: &F, rng: &mut R, n: usize, degree: i64, density: f64) -> HomogPoly<F::Elem> {
    if degree < 0 {
        return HomogPoly::zero(n, 0);
    }
    let d = degree as u32;
    let mut terms = Vec::new();
    for e in monomials(n, d) {
        if rng.gen_bool(density) {
            terms.push((e, field.from_i64(rng.gen_range(-3..=3))));
        }
    }
    HomogPoly::from_terms(field, n, d, terms).unwrap()
}

pub fn random_point<F: Field, R: Rng>(field: &F, rng: &mut R, n: usize, range: i64) -> Vec<F::Elem> {
    loop {
        let c: Vec<i64> = (0..n).map(|_| rng.gen_range(-range..=range)).collect();
        if c.iter().any(|&x| x != 0) {
            return c.into_iter().map(|x| field.from_i64(x)).collect();
        }
    }
}

/// Presentation on P^2 with `r` generators and at most `max_rel` relations.
pub fn random_presentation<F: Field, R: Rng>(field: &F, rng: &mut R, r: usize, max_rel: usize) -> ModulePresentation<F::Elem> {
    let n = 3;
    let a: Vec<i64> = (0..r).map(|_| rng.gen_range(0..=2)).collect();
    let top = *a.iter().max().unwrap();
    let s = rng.gen_range(0..=max_rel);
    let b: Vec<i64> = (0..s).map(|_| top + rng.gen_range(0..=1)).collect();
    let entries = a
        .iter()
        .map(|&ai| b.iter().map(|&bj| random_poly(field, rng, n, bj - ai, 0.5)).collect())
        .collect();
    ModulePresentation::new(n, a, b, entries).unwrap()
}

/// Random sections sorted by degree. Mixes generators, random combinations
/// and repeats so that fibers see dependencies.
pub fn random_sections<F: Field, R: Rng>(field: &F, rng: &mut R, m: &ModulePresentation<F::Elem>, u: usize) -> Vec<Section<F::Elem>> {
    let a = m.row_twists();
    let lo = *a.iter().min().unwrap();
    let hi = *a.iter().max().unwrap();
    let mut out: Vec<Section<F::Elem>> = Vec::with_capacity(u);
    for _ in 0..u {
        let choice = rng.gen_range(0..10);
        let s = if choice < 3 {
            Section::generator(field, m, rng.gen_range(0..a.len()))
        } else if choice == 3 && !out.is_empty() {
            out[rng.gen_range(0..out.len())].clone()
        } else if choice == 4 {
            Section::zero(m, rng.gen_range(lo..=hi + 1))
        } else {
            let d = rng.gen_range(lo..=hi + 1);
            let coords = a.iter().map(|&ai| random_poly(field, rng, 3, d - ai, 0.4)).collect();
            Section::new(d, coords)
        };
        out.push(s);
    }
    out.sort_by_key(|s| s.degree());
    out
}

/// Random reduced point set in P^2 with `size` points and coordinates in
/// `-range..=range`.
pub fn random_point_set<R: Rng>(rng: &mut R, size: usize, range: i64) -> PointSet<Q> {
    let mut pts: Vec<ProjPoint<Q>> = Vec::new();
    while pts.len() < size {
        let p = ProjPoint::new(&Rationals, random_point(&Rationals, rng, 3, range)).unwrap();
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    PointSet::new(pts).unwrap()
}

/// The `a × b` grid `{(1:i:j)}`, a complete intersection of type `(a, b)`.
pub fn grid(a: i64, b: i64) -> PointSet<Q> {
    let pts = (0..a)
        .flat_map(|i| (0..b).map(move |j| ProjPoint::from_ints(&Rationals, &[1, i, j]).unwrap()))
        .collect();
    PointSet::new(pts).unwrap()
}
