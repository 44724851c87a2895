//! Seeded random instances: presentations on `P^2`, twisted sections,
//! rational points and point sets. Shared by the acceptance suite and the
//! integration tests.

use graded_basic_core::poly::monomials;
use graded_basic_core::{Field, HomogPoly, ModulePresentation, PointSet, ProjPoint, Section};
use rand::Rng;

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
    HomogPoly::from_terms(field, n, d, terms).expect("monomials of degree d")
}

/// A nonzero integer vector with entries in `-range..=range`.
pub fn random_coords<F: Field, R: Rng>(field: &F, rng: &mut R, n: usize, range: i64) -> Vec<F::Elem> {
    loop {
        let c: Vec<i64> = (0..n).map(|_| rng.gen_range(-range..=range)).collect();
        if c.iter().any(|&x| x != 0) {
            return c.into_iter().map(|x| field.from_i64(x)).collect();
        }
    }
}

/// A point of `P^2` that is a coordinate point 40% of the time; sparse
/// entries tend to vanish there.
pub fn biased_coords<F: Field, R: Rng>(field: &F, rng: &mut R, range: i64) -> Vec<F::Elem> {
    if rng.gen_bool(0.4) {
        let k = rng.gen_range(0..3);
        (0..3).map(|i| if i == k { field.one() } else { field.zero() }).collect()
    } else {
        random_coords(field, rng, 3, range)
    }
}

/// `v` distinct points of `P^2` (up to scaling).
pub fn distinct_points<F: Field, R: Rng>(field: &F, rng: &mut R, v: usize, range: i64) -> PointSet<F::Elem> {
    let mut pts: Vec<ProjPoint<F::Elem>> = Vec::with_capacity(v);
    while pts.len() < v {
        let p = ProjPoint::new(field, random_coords(field, rng, 3, range)).expect("nonzero");
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    PointSet::new(pts).expect("distinct and nonempty")
}

/// A presentation on `P^2` with `r` generators of twist `0..=2` and at most
/// `max_rel` relations of twist `max a_i` or one more.
pub fn random_presentation<F: Field, R: Rng>(
    field: &F,
    rng: &mut R,
    r: usize,
    max_rel: usize,
) -> ModulePresentation<F::Elem> {
    let s = rng.gen_range(0..=max_rel);
    presentation_with_relations(field, rng, r, s)
}

pub fn presentation_with_relations<F: Field, R: Rng>(
    field: &F,
    rng: &mut R,
    r: usize,
    s: usize,
) -> ModulePresentation<F::Elem> {
    let n = 3;
    let a: Vec<i64> = (0..r).map(|_| rng.gen_range(0..=2)).collect();
    let top = *a.iter().max().expect("r >= 1");
    let b: Vec<i64> = (0..s).map(|_| top + rng.gen_range(0..=1)).collect();
    let entries = a
        .iter()
        .map(|&ai| b.iter().map(|&bj| random_poly(field, rng, n, bj - ai, 0.5)).collect())
        .collect();
    ModulePresentation::new(n, a, b, entries).expect("degrees match by construction")
}

/// `u` sections sorted by degree, mixing generators, zeros, repeats and
/// random combinations so that fibers see dependencies.
pub fn random_sections<F: Field, R: Rng>(
    field: &F,
    rng: &mut R,
    m: &ModulePresentation<F::Elem>,
    u: usize,
) -> Vec<Section<F::Elem>> {
    let a = m.row_twists();
    let lo = *a.iter().min().expect("r >= 1");
    let hi = *a.iter().max().expect("r >= 1");
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
    out.sort_by_key(Section::degree);
    out
}

/// All generators followed by a few random sections, sorted by degree.
/// The result generates every fiber.
pub fn generating_sections<F: Field, R: Rng>(
    field: &F,
    rng: &mut R,
    m: &ModulePresentation<F::Elem>,
    extra: usize,
) -> Vec<Section<F::Elem>> {
    let mut out: Vec<Section<F::Elem>> = (0..m.num_generators()).map(|i| Section::generator(field, m, i)).collect();
    out.extend(random_sections(field, rng, m, extra));
    out.sort_by_key(Section::degree);
    out
}

/// A reduced set of `size` points with coordinates in `-range..=range`.
pub fn random_point_set<F: Field, R: Rng>(field: &F, rng: &mut R, size: usize, range: i64) -> PointSet<F::Elem> {
    distinct_points(field, rng, size, range)
}
