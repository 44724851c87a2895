mod common;

use common::{grid, q, random_point_set, Q};
use graded_basic_core::betti::stabilization_degree;
use graded_basic_core::cayley_bacharach::cb_scan;
use graded_basic_core::matrix::{determinant, rank};
use graded_basic_core::poly::num_monomials;
use graded_basic_core::{
    betti_table, cb_index, hilbert_function, ideal_basis, satisfies_cb, verify_bounds, Error, Field, HomogPoly, Matrix,
    PointSet, ProjPoint, Rationals,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sample_sets(seed: u64, count: usize) -> Vec<PointSet<Q>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            let size = rng.gen_range(2..=10);
            // Narrow coordinate ranges give many collinearities.
            let range = if k % 3 == 0 { 1 } else { 3 };
            random_point_set(&mut rng, size.min(if range == 1 { 13 } else { 10 }), range)
        })
        .collect()
}

/// Number of minimal generators of `I_Z` in degree `d`:
/// `dim I_d - dim (S_1 · I_{d-1})`.
fn minimal_generators(z: &PointSet<Q>, d: u32) -> usize {
    let f = Rationals;
    let here = ideal_basis(&f, z, d).len();
    if d == 0 {
        return here;
    }
    let below = ideal_basis(&f, z, d - 1);
    let products: Vec<Vec<Q>> = below
        .iter()
        .flat_map(|g| (0..3).map(move |k| g.mul(&f, &HomogPoly::variable(&f, 3, k)).unwrap().coefficients(&f)))
        .collect();
    let span = if products.is_empty() {
        0
    } else {
        rank(&f, &Matrix::from_columns(num_monomials(3, d as i64), &products).unwrap())
    };
    here - span
}

#[test]
fn resolutions_have_hilbert_burch_shape() {
    let f = Rationals;
    for z in sample_sets(31, 40) {
        let b = betti_table(&f, &z).unwrap();
        assert_eq!(b.get(0, 0), 1);
        assert_eq!(b.total(0), 1);
        assert_eq!(b.total(1), b.total(2) + 1);
        assert_eq!(b.total(3), 0);
        for d in 0..=b.degree_cap + 2 {
            assert_eq!(b.hilbert_from_betti(d), hilbert_function(&f, &z, d) as i64, "d = {d}");
        }
        for j in 0..=b.degree_cap {
            assert_eq!(b.get(1, j), minimal_generators(&z, j as u32), "generators in degree {j}");
        }
        let sigma = stabilization_degree(&f, &z);
        assert_eq!(b.sigma, sigma);
        assert!(b.b_degrees.iter().all(|&j| j <= sigma + 1));
        assert!(b.a_degrees.iter().all(|&j| j <= sigma + 2));
        // Each syzygy has degree above some generator.
        assert!(b.a_degrees.iter().min() > b.b_degrees.iter().min());
    }
}

#[test]
fn hilbert_function_grows_to_the_number_of_points() {
    let f = Rationals;
    for z in sample_sets(32, 30) {
        let hf: Vec<usize> = (0..12).map(|d| hilbert_function(&f, &z, d)).collect();
        assert_eq!(hf[0], 1);
        assert!(hf.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(*hf.last().unwrap(), z.len());
        let sigma = stabilization_degree(&f, &z) as usize;
        assert_eq!(hf[sigma], z.len());
        assert!(sigma == 0 || hf[sigma - 1] < z.len());
        assert_eq!(hilbert_function(&f, &z, -1), 0);
    }
}

/// Direct test of the definition: a form through all points but `q` that
/// does not vanish at `q`.
fn cb_by_separating_forms(z: &PointSet<Q>, l: u32) -> bool {
    let f = Rationals;
    (0..z.len()).all(|k| {
        let rest = PointSet::new(z.without(k)).unwrap();
        let q = z.points()[k].coords();
        ideal_basis(&f, &rest, l).iter().all(|g| f.is_zero(&g.eval(&f, q).unwrap()))
    })
}

#[test]
fn cayley_bacharach_is_downward_closed_and_matches_definition() {
    let f = Rationals;
    for z in sample_sets(33, 40) {
        let idx = cb_index(&f, &z).unwrap();
        let sigma = stabilization_degree(&f, &z);
        for l in 0..=sigma + 1 {
            let expected = l <= idx;
            assert_eq!(satisfies_cb(&f, &z, l).unwrap(), expected, "l = {l}, index {idx}");
            assert_eq!(cb_by_separating_forms(&z, l as u32), expected);
        }
        // CB_sigma always fails: some form separates a point.
        assert!(idx < sigma);
        let scan = cb_scan(&f, &z).unwrap();
        assert_eq!(scan.len() as i64, idx + 2);
    }
}

#[test]
fn complete_intersections_of_grid_type() {
    let f = Rationals;
    for (a, b) in [(1, 2), (2, 2), (2, 3), (3, 3), (1, 4), (2, 4), (3, 4)] {
        let z = grid(a, b);
        assert_eq!(cb_index(&f, &z).unwrap(), a + b - 3, "grid {a}x{b}");
        let t = betti_table(&f, &z).unwrap();
        let mut gens = vec![a, b];
        gens.sort();
        assert_eq!(t.b_degrees, gens);
        assert_eq!(t.a_degrees, vec![a + b]);
    }
}

#[test]
fn classical_cayley_bacharach_for_nine_points() {
    let f = Rationals;
    let z = grid(3, 3);
    assert!(satisfies_cb(&f, &z, 3).unwrap());
    for k in 0..9 {
        let rest = PointSet::new(z.without(k)).unwrap();
        assert_eq!(hilbert_function(&f, &rest, 3), hilbert_function(&f, &z, 3));
        // Cubics through eight of the points pass through the ninth.
        for g in ideal_basis(&f, &rest, 3) {
            assert!(f.is_zero(&g.eval(&f, z.points()[k].coords()).unwrap()));
        }
    }
}

fn random_invertible<R: Rng>(rng: &mut R) -> Matrix<Q> {
    loop {
        let rows: Vec<Vec<Q>> = (0..3).map(|_| (0..3).map(|_| q(rng.gen_range(-2..=2))).collect()).collect();
        let g = Matrix::from_rows(3, rows).unwrap();
        if !Rationals.is_zero(&determinant(&Rationals, &g)) {
            return g;
        }
    }
}

#[test]
fn invariants_survive_coordinate_changes() {
    let f = Rationals;
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for z in sample_sets(35, 25) {
        let g = random_invertible(&mut rng);
        let moved = z
            .points()
            .iter()
            .map(|p| ProjPoint::new(&f, g.mul_vec(&f, p.coords()).unwrap()).unwrap())
            .collect();
        let moved = PointSet::new(moved).unwrap();
        let (a, b) = (betti_table(&f, &z).unwrap(), betti_table(&f, &moved).unwrap());
        assert_eq!(a.entries, b.entries);
        assert_eq!(cb_index(&f, &z).unwrap(), cb_index(&f, &moved).unwrap());
    }
}

#[test]
fn bounds_hold_on_random_sets() {
    let f = Rationals;
    for z in sample_sets(36, 40) {
        let r = verify_bounds(&f, &z).unwrap();
        assert!(r.bound_holds, "{} <= {} <= {} fails", r.a_min - 3, r.cb_index, r.a_max - 3);
        assert_eq!(r.cb_index, cb_index(&f, &z).unwrap());
    }
}

#[test]
fn collinear_points() {
    // d points on a line: I = (line, form of degree d), CB index d - 2.
    let f = Rationals;
    for d in 2..7 {
        let pts: Vec<Vec<i64>> = (0..d).map(|i| vec![1, i, 0]).collect();
        let refs: Vec<&[i64]> = pts.iter().map(|p| p.as_slice()).collect();
        let z = PointSet::from_ints(&f, &refs).unwrap();
        assert_eq!(cb_index(&f, &z).unwrap(), d - 2);
        let t = betti_table(&f, &z).unwrap();
        assert_eq!(t.a_degrees, vec![d + 1]);
    }
}

#[test]
fn point_sets_are_validated() {
    let f = Rationals;
    assert!(PointSet::<Q>::new(vec![]).is_err());
    let p = ProjPoint::from_ints(&f, &[1, 2, 3]).unwrap();
    let p2 = ProjPoint::from_ints(&f, &[2, 4, 6]).unwrap();
    assert!(PointSet::new(vec![p, p2]).is_err());
    assert_eq!(ProjPoint::from_ints(&f, &[0, 0, 0]).unwrap_err(), Error::ZeroPoint);
}
