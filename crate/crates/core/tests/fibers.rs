mod common;

use common::{q, random_point, random_presentation, random_sections, Q};
use graded_basic_core::module::{section_vector, width_at};
use graded_basic_core::matrix::rank;
use graded_basic_core::{
    fiber, find_nonvanishing_linear_form, fitting_vanishes_at, graded_piece_dim, is_w_basic, section_images_in_fiber,
    Field, HomogPoly, Matrix, ModulePresentation, Rationals, Section,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Coordinate points hit the zero loci of sparse entries far more often
/// than random ones.
fn interesting_point<R: Rng>(rng: &mut R) -> Vec<Q> {
    match rng.gen_range(0..5) {
        0 => vec![q(1), q(0), q(0)],
        1 => vec![q(0), q(1), q(0)],
        2 => vec![q(0), q(0), q(1)],
        _ => random_point(&Rationals, rng, 3, 2),
    }
}

fn linear(c: &[i64]) -> HomogPoly<Q> {
    HomogPoly::linear(&Rationals, &c.iter().map(|&x| q(x)).collect::<Vec<_>>())
}

/// A second linear form not vanishing at `p`, different from the default one.
fn other_linear_form<R: Rng>(rng: &mut R, p: &[Q]) -> HomogPoly<Q> {
    loop {
        let c: Vec<i64> = (0..3).map(|_| rng.gen_range(-3..=3)).collect();
        let l = linear(&c);
        if !l.is_zero() && !Rationals.is_zero(&l.eval(&Rationals, p).unwrap()) {
            return l;
        }
    }
}

#[test]
fn fiber_data_does_not_depend_on_dehomogenizer() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..150 {
        let r = rng.gen_range(1..=4);
        let m = random_presentation(&Rationals, &mut rng, r, 4);
        let u = rng.gen_range(1..=4);
        let secs = random_sections(&Rationals, &mut rng, &m, u);
        let p = interesting_point(&mut rng);
        let l1 = find_nonvanishing_linear_form(&Rationals, &[&p]).unwrap();
        let l2 = other_linear_form(&mut rng, &p);
        let a = section_images_in_fiber(&Rationals, &m, &secs, &p, &l1).unwrap();
        let b = section_images_in_fiber(&Rationals, &m, &secs, &p, &l2).unwrap();
        assert_eq!((a.mu, a.width), (b.mu, b.width));
        for i in 0..r + 1 {
            assert_eq!(
                fitting_vanishes_at(&Rationals, &m, i, &p, &l1).unwrap(),
                fitting_vanishes_at(&Rationals, &m, i, &p, &l2).unwrap()
            );
        }
    }
}

#[test]
fn fitting_locus_matches_fiber_dimension() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut jumps = 0;
    for _ in 0..200 {
        let r = rng.gen_range(1..=4);
        let m = random_presentation(&Rationals, &mut rng, r, 4);
        let p = interesting_point(&mut rng);
        let l = find_nonvanishing_linear_form(&Rationals, &[&p]).unwrap();
        let mu = fiber(&Rationals, &m, &p, &l).unwrap().mu;
        let generic = r - rank(&Rationals, &fiber(&Rationals, &m, &[q(1), q(2), q(5)], &linear(&[1, 0, 0])).unwrap().matrix);
        if mu > generic {
            jumps += 1;
        }
        for i in 0..=r {
            assert_eq!(fitting_vanishes_at(&Rationals, &m, i, &p, &l).unwrap(), mu > i, "i = {i}, mu = {mu}");
        }
    }
    assert!(jumps > 0, "sample never exercised a jump in fiber dimension");
}

#[test]
fn rescaling_the_point_changes_nothing() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let (r, u) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let m = random_presentation(&Rationals, &mut rng, r, 3);
        let secs = random_sections(&Rationals, &mut rng, &m, u);
        let p = interesting_point(&mut rng);
        let c = Rationals.from_fraction(&rng.gen_range(1i64..5).into(), &rng.gen_range(-4i64..-1).into()).unwrap();
        let scaled: Vec<Q> = p.iter().map(|x| x * &c).collect();
        let l = find_nonvanishing_linear_form(&Rationals, &[&p]).unwrap();
        let a = section_images_in_fiber(&Rationals, &m, &secs, &p, &l).unwrap();
        let b = section_images_in_fiber(&Rationals, &m, &secs, &scaled, &l).unwrap();
        assert_eq!((a.mu, a.width), (b.mu, b.width));
        // Section vectors transform by a single overall scalar.
        let va = section_vector(&Rationals, &m, &secs[0], &p, &l).unwrap();
        let vb = section_vector(&Rationals, &m, &secs[0], &scaled, &l).unwrap();
        assert_eq!(va, vb);
    }
}

#[test]
fn width_is_rank_jump_of_augmented_matrix() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..150 {
        let r = rng.gen_range(1..=4);
        let m = random_presentation(&Rationals, &mut rng, r, 4);
        let u = rng.gen_range(1..=5);
        let secs = random_sections(&Rationals, &mut rng, &m, u);
        let p = interesting_point(&mut rng);
        let l = find_nonvanishing_linear_form(&Rationals, &[&p]).unwrap();
        let fib = fiber(&Rationals, &m, &p, &l).unwrap();
        let cols: Vec<Vec<Q>> = secs.iter().map(|s| section_vector(&Rationals, &m, s, &p, &l).unwrap()).collect();
        let aug = fib.matrix.hstack(&Matrix::from_columns(r, &cols).unwrap()).unwrap();
        let expected = rank(&Rationals, &aug) - rank(&Rationals, &fib.matrix);
        let w = width_at(&Rationals, &m, &secs, &p, &l).unwrap();
        assert_eq!(w, expected);
        assert!(w <= u.min(fib.mu));
        // Adding sections never lowers the width; dropping one lowers it by at most one.
        for k in 0..u {
            let mut fewer = secs.clone();
            fewer.remove(k);
            let wf = width_at(&Rationals, &m, &fewer, &p, &l).unwrap();
            assert!(wf <= w && w <= wf + 1);
        }
        for k in 0..=w {
            assert!(is_w_basic(&Rationals, &m, &secs, &p, k).unwrap());
        }
        assert!(!is_w_basic(&Rationals, &m, &secs, &p, w + 1).unwrap());
    }
}

#[test]
fn graded_pieces_of_small_modules() {
    let f = &Rationals;
    let x = |i| HomogPoly::variable(f, 3, i);
    // Free module S on P^2.
    let free = ModulePresentation::free(3, vec![0]);
    for d in 0..5 {
        assert_eq!(graded_piece_dim(f, &free, d), ((d + 1) * (d + 2) / 2) as usize);
    }
    assert_eq!(graded_piece_dim(f, &free, -1), 0);
    // S/(x0) is a polynomial ring in two variables.
    let line = ModulePresentation::new(3, vec![0], vec![1], vec![vec![x(0)]]).unwrap();
    for d in 0..5 {
        assert_eq!(graded_piece_dim(f, &line, d), (d + 1) as usize);
    }
    // S/(x0, x1) is k[x2].
    let pt = ModulePresentation::new(3, vec![0], vec![1, 1], vec![vec![x(0), x(1)]]).unwrap();
    for d in 0..5 {
        assert_eq!(graded_piece_dim(f, &pt, d), 1);
    }
    // S(-1) ⊕ S(-2) modulo the relation (x0^... ) with mixed twists.
    let mixed = ModulePresentation::new(
        3,
        vec![1, 2],
        vec![2],
        vec![vec![x(1)], vec![HomogPoly::constant(f, 3, q(1))]],
    )
    .unwrap();
    // The relation identifies the degree-2 generator with x1 times the first,
    // so the module is S(-1).
    for d in 0..5 {
        assert_eq!(graded_piece_dim(f, &mixed, d), if d < 1 { 0 } else { (d * (d + 1) / 2) as usize });
    }
}

#[test]
fn fiber_of_ideal_sheaf_of_a_point() {
    // Coker of S(-2) -> S(-1)^2 via (x1, -x0): the ideal sheaf of (0:0:1),
    // twisted. Its fiber has dimension 2 at the point and 1 elsewhere.
    let f = &Rationals;
    let x = |i| HomogPoly::variable(f, 3, i);
    let m = ModulePresentation::new(3, vec![1, 1], vec![2], vec![vec![x(1)], vec![x(0).neg(f)]]).unwrap();
    let at = |c: &[i64]| {
        let p: Vec<Q> = c.iter().map(|&v| q(v)).collect();
        let l = find_nonvanishing_linear_form(f, &[&p]).unwrap();
        fiber(f, &m, &p, &l).unwrap().mu
    };
    assert_eq!(at(&[0, 0, 1]), 2);
    assert_eq!(at(&[1, 2, 3]), 1);
    assert_eq!(at(&[0, 1, 0]), 1);
    let gens = vec![Section::generator(f, &m, 0), Section::generator(f, &m, 1)];
    let p: Vec<Q> = vec![q(0), q(0), q(1)];
    assert!(is_w_basic(f, &m, &gens, &p, 2).unwrap());
    assert!(!is_w_basic(f, &m, &gens[..1], &p, 2).unwrap());
}
