//! Graded modules given by a presentation
//! `coker(φ: ⊕ S(-b_j) → ⊕ S(-a_i))` over `S = k[x0..x{n-1}]`, and their
//! fibers at rational points.
//!
//! Fibers are computed by dehomogenizing with a linear form `L` that does not
//! vanish at the point: the entry `φ_ij` becomes `φ_ij(p) / L(p)^(b_j - a_i)`
//! and a section `s` of degree `d` becomes the vector with components
//! `s_i(p) / L(p)^(d - a_i)`. Ranks computed this way do not depend on `L`
//! or on the representative chosen for `p`.

use alloc::vec::Vec;

use crate::error::Error;
use crate::field::Field;
use crate::matrix::{self, Matrix};
use crate::poly::{monomial_index, monomials, num_monomials, HomogPoly};
use crate::shrinking::find_nonvanishing_linear_form;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation<E> {
    num_vars: usize,
    row_twists: Vec<i64>,
    col_twists: Vec<i64>,
    entries: Vec<Vec<HomogPoly<E>>>,
}

fn required_degree(target: i64, twist: i64) -> i64 {
    target - twist
}

fn check_entry<E: Clone + PartialEq>(
    num_vars: usize,
    p: &HomogPoly<E>,
    degree: i64,
) -> Result<(), Error> {
    if p.num_vars() != num_vars {
        return Err(Error::DimensionMismatch { expected: num_vars, found: p.num_vars() });
    }
    if !p.is_zero() && i64::from(p.degree()) != degree {
        return Err(Error::DegreeMismatch { expected: degree, found: p.degree().into() });
    }
    Ok(())
}

impl<E: Clone + PartialEq> ModulePresentation<E> {
    /// `entries[i][j]` must be homogeneous of degree `col_twists[j] - row_twists[i]`
    /// or zero.
    pub fn new(
        num_vars: usize,
        row_twists: Vec<i64>,
        col_twists: Vec<i64>,
        entries: Vec<Vec<HomogPoly<E>>>,
    ) -> Result<Self, Error> {
        if entries.len() != row_twists.len() {
            return Err(Error::DimensionMismatch { expected: row_twists.len(), found: entries.len() });
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != col_twists.len() {
                return Err(Error::DimensionMismatch { expected: col_twists.len(), found: row.len() });
            }
            for (j, p) in row.iter().enumerate() {
                check_entry(num_vars, p, required_degree(col_twists[j], row_twists[i]))?;
            }
        }
        Ok(Self { num_vars, row_twists, col_twists, entries })
    }

    /// The free module `⊕ S(-a_i)`.
    pub fn free(num_vars: usize, row_twists: Vec<i64>) -> Self {
        let entries = row_twists.iter().map(|_| Vec::new()).collect();
        Self { num_vars, row_twists, col_twists: Vec::new(), entries }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Number of generators `r`.
    pub fn num_generators(&self) -> usize {
        self.row_twists.len()
    }

    pub fn num_relations(&self) -> usize {
        self.col_twists.len()
    }

    pub fn row_twists(&self) -> &[i64] {
        &self.row_twists
    }

    pub fn col_twists(&self) -> &[i64] {
        &self.col_twists
    }

    pub fn entry(&self, i: usize, j: usize) -> &HomogPoly<E> {
        &self.entries[i][j]
    }
}

/// A twisted section of degree `d`: component `i` is a form of degree
/// `d - a_i` (zero when that is negative).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section<E> {
    degree: i64,
    coords: Vec<HomogPoly<E>>,
}

impl<E: Clone + PartialEq> Section<E> {
    pub fn new(degree: i64, coords: Vec<HomogPoly<E>>) -> Self {
        Self { degree, coords }
    }

    pub fn zero(m: &ModulePresentation<E>, degree: i64) -> Self {
        let coords = m
            .row_twists
            .iter()
            .map(|&a| HomogPoly::zero(m.num_vars, (degree - a).max(0) as u32))
            .collect();
        Self { degree, coords }
    }

    /// The image of the `i`-th generator, a section of degree `a_i`.
    pub fn generator<F: Field<Elem = E>>(field: &F, m: &ModulePresentation<E>, i: usize) -> Self {
        let mut s = Self::zero(m, m.row_twists[i]);
        s.coords[i] = HomogPoly::one(field, m.num_vars);
        s
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn coords(&self) -> &[HomogPoly<E>] {
        &self.coords
    }

    /// Checks component count and degrees against the presentation.
    pub fn validate(&self, m: &ModulePresentation<E>) -> Result<(), Error> {
        if self.coords.len() != m.num_generators() {
            return Err(Error::DimensionMismatch {
                expected: m.num_generators(),
                found: self.coords.len(),
            });
        }
        for (c, &a) in self.coords.iter().zip(&m.row_twists) {
            let d = self.degree - a;
            check_entry(m.num_vars, c, d)?;
            if d < 0 && !c.is_zero() {
                return Err(Error::DegreeMismatch { expected: d, found: c.degree().into() });
            }
        }
        Ok(())
    }

    /// `self + r * other` where `r` has degree `self.degree - other.degree`.
    pub fn add_multiple<F: Field<Elem = E>>(
        &self,
        field: &F,
        r: &HomogPoly<E>,
        other: &Self,
    ) -> Result<Self, Error> {
        if !r.is_zero() && i64::from(r.degree()) != self.degree - other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree - other.degree,
                found: r.degree().into(),
            });
        }
        if self.coords.len() != other.coords.len() {
            return Err(Error::DimensionMismatch { expected: self.coords.len(), found: other.coords.len() });
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.add(field, &r.mul(field, b)?))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { degree: self.degree, coords })
    }
}

/// The fiber `F ⊗ k(p)` of a presented module at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber<E> {
    pub point: Vec<E>,
    pub dehomogenizer: HomogPoly<E>,
    /// The evaluated and scaled presentation matrix `φ(p)`.
    pub matrix: Matrix<E>,
    /// `μ(F_p) = r - rank φ(p)`.
    pub mu: usize,
}

/// Images of sections in the fiber, expressed in coordinates of the quotient
/// `k^r / im φ(p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberImages<E> {
    /// `μ × u`; column `j` is the image of section `j`.
    pub images: Matrix<E>,
    pub width: usize,
    pub mu: usize,
}

/// `dim_k M_d`: the degree-`d` piece of the cokernel.
pub fn graded_piece_dim<F: Field>(field: &F, m: &ModulePresentation<F::Elem>, d: i64) -> usize {
    let n = m.num_vars;
    let row_blocks: Vec<Vec<_>> = m
        .row_twists
        .iter()
        .map(|&a| if d >= a { monomials(n, (d - a) as u32) } else { Vec::new() })
        .collect();
    let mut offsets = Vec::with_capacity(row_blocks.len());
    let mut total = 0;
    for b in &row_blocks {
        offsets.push(total);
        total += b.len();
    }
    if total == 0 {
        return 0;
    }
    let indices: Vec<_> = row_blocks.iter().map(|b| monomial_index(b)).collect();

    let mut columns = Vec::new();
    for (j, &b) in m.col_twists.iter().enumerate() {
        if d < b {
            continue;
        }
        for mono in monomials(n, (d - b) as u32) {
            let mono_poly =
                HomogPoly::from_terms(field, n, (d - b) as u32, [(mono, field.one())]).expect("valid");
            let mut col = alloc::vec![field.zero(); total];
            for i in 0..m.num_generators() {
                let entry = &m.entries[i][j];
                if entry.is_zero() {
                    continue;
                }
                let prod = entry.mul(field, &mono_poly).expect("same ring");
                for (e, c) in prod.terms() {
                    col[offsets[i] + indices[i][e]] = c.clone();
                }
            }
            columns.push(col);
        }
    }
    let rank = if columns.is_empty() {
        0
    } else {
        field.rank(&Matrix::from_columns(total, &columns).expect("uniform"))
    };
    total - rank
}

fn dehomogenizer_value<F: Field>(
    field: &F,
    point: &[F::Elem],
    l: &HomogPoly<F::Elem>,
) -> Result<F::Elem, Error> {
    if l.degree() != 1 || l.is_zero() {
        return Err(Error::InvalidArgument("dehomogenizer must be a nonzero linear form".into()));
    }
    if point.iter().all(|c| field.is_zero(c)) {
        return Err(Error::ZeroPoint);
    }
    let v = l.eval(field, point)?;
    if field.is_zero(&v) {
        return Err(Error::DehomogenizerVanishes);
    }
    Ok(v)
}

/// `value / lv^k` for an integer `k`, possibly negative.
fn scale_by_power<F: Field>(field: &F, value: &F::Elem, lv: &F::Elem, k: i64) -> F::Elem {
    let p = field.pow(lv, k.unsigned_abs() as u32);
    if k >= 0 {
        field.div(value, &p).expect("nonzero")
    } else {
        field.mul(value, &p)
    }
}

/// The presentation matrix evaluated at `point` and scaled by powers of `L(p)`.
pub fn presentation_at_point<F: Field>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    point: &[F::Elem],
    l: &HomogPoly<F::Elem>,
) -> Result<Matrix<F::Elem>, Error> {
    if point.len() != m.num_vars {
        return Err(Error::DimensionMismatch { expected: m.num_vars, found: point.len() });
    }
    let lv = dehomogenizer_value(field, point, l)?;
    let mut out = Matrix::zeros(field, m.num_generators(), m.num_relations());
    for (i, &a) in m.row_twists.iter().enumerate() {
        for (j, &b) in m.col_twists.iter().enumerate() {
            let entry = &m.entries[i][j];
            if entry.is_zero() {
                continue;
            }
            let v = entry.eval(field, point)?;
            out[(i, j)] = scale_by_power(field, &v, &lv, b - a);
        }
    }
    Ok(out)
}

pub fn fiber<F: Field>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    point: &[F::Elem],
    l: &HomogPoly<F::Elem>,
) -> Result<Fiber<F::Elem>, Error> {
    let matrix = presentation_at_point(field, m, point, l)?;
    let mu = m.num_generators() - field.rank(&matrix);
    Ok(Fiber { point: point.to_vec(), dehomogenizer: l.clone(), matrix, mu })
}

/// The vector in `k^r` representing a section at `point`, before passing
/// to the quotient by `im φ(p)`.
pub fn section_vector<F: Field>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    section: &Section<F::Elem>,
    point: &[F::Elem],
    l: &HomogPoly<F::Elem>,
) -> Result<Vec<F::Elem>, Error> {
    section.validate(m)?;
    if point.len() != m.num_vars {
        return Err(Error::DimensionMismatch { expected: m.num_vars, found: point.len() });
    }
    let lv = dehomogenizer_value(field, point, l)?;
    section
        .coords
        .iter()
        .zip(&m.row_twists)
        .map(|(c, &a)| {
            if c.is_zero() {
                return Ok(field.zero());
            }
            let v = c.eval(field, point)?;
            Ok(scale_by_power(field, &v, &lv, section.degree - a))
        })
        .collect()
}

/// Projection `k^r → F_(p)` as a `μ × r` matrix whose rows span the left
/// kernel of `φ(p)`.
pub fn fiber_projection<F: Field>(field: &F, fib: &Fiber<F::Elem>) -> Matrix<F::Elem> {
    let r = fib.matrix.rows();
    let rows = matrix::left_kernel_basis(field, &fib.matrix);
    Matrix::from_rows(r, rows).expect("uniform")
}

pub fn section_images_in_fiber<F: Field>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    sections: &[Section<F::Elem>],
    point: &[F::Elem],
    l: &HomogPoly<F::Elem>,
) -> Result<FiberImages<F::Elem>, Error> {
    let fib = fiber(field, m, point, l)?;
    let proj = fiber_projection(field, &fib);
    let columns = sections
        .iter()
        .map(|s| proj.mul_vec(field, &section_vector(field, m, s, point, l)?))
        .collect::<Result<Vec<_>, _>>()?;
    let images = Matrix::from_columns(fib.mu, &columns)?;
    let width = field.rank(&images);
    Ok(FiberImages { images, width, mu: fib.mu })
}

/// `dim` of the span of the section images in the fiber at `point`, i.e.
/// `μ(F_p) - μ((F/(s_1..s_u))_p)`.
pub fn width_at<F: Field>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    sections: &[Section<F::Elem>],
    point: &[F::Elem],
    l: &HomogPoly<F::Elem>,
) -> Result<usize, Error> {
    Ok(section_images_in_fiber(field, m, sections, point, l)?.width)
}

/// Whether `(s_1..s_u)` is `w`-basic at `point`:
/// `μ((F/(s))_p) ≤ μ(F_p) - w`.
pub fn is_w_basic<F: Field>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    sections: &[Section<F::Elem>],
    point: &[F::Elem],
    w: usize,
) -> Result<bool, Error> {
    if w == 0 {
        for s in sections {
            s.validate(m)?;
        }
        return Ok(true);
    }
    let l = find_nonvanishing_linear_form(field, &[point])?;
    Ok(width_at(field, m, sections, point, &l)? >= w)
}

/// Whether `p` lies in the zero locus of the `i`-th Fitting ideal, decided by
/// testing every `(r-i)`-minor of `φ(p)` for vanishing.
pub fn fitting_vanishes_at<F: Field>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    i: usize,
    point: &[F::Elem],
    l: &HomogPoly<F::Elem>,
) -> Result<bool, Error> {
    let phi = presentation_at_point(field, m, point, l)?;
    let r = m.num_generators();
    if i >= r {
        // The empty minor generates the unit ideal.
        return Ok(false);
    }
    let k = r - i;
    if k > phi.cols() {
        return Ok(true);
    }
    let row_sets = subsets(r, k);
    let col_sets = subsets(phi.cols(), k);
    for rows in &row_sets {
        for cols in &col_sets {
            let minor = Matrix::from_rows(
                k,
                rows.iter()
                    .map(|&a| cols.iter().map(|&b| phi[(a, b)].clone()).collect())
                    .collect(),
            )?;
            if !field.is_zero(&matrix::determinant(field, &minor)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `dim S_d` summed over the generators, i.e. the graded piece of the free
/// module `⊕ S(-a_i)`.
pub fn free_piece_dim(num_vars: usize, row_twists: &[i64], d: i64) -> usize {
    row_twists.iter().map(|&a| num_monomials(num_vars, d - a)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;
    use crate::field::Rationals;
    use crate::point::ProjPoint;
    use num_rational::BigRational;

    type Q = BigRational;

    fn poly(s: &str) -> HomogPoly<Q> {
        HomogPoly::parse(&Rationals, 3, s).unwrap()
    }

    fn pt(c: &[i64]) -> Vec<Q> {
        ProjPoint::from_ints(&Rationals, c).unwrap().coords().to_vec()
    }

    /// coker(S(-1) → S^2) given by the column (x0, x1).
    fn two_line_module() -> ModulePresentation<Q> {
        ModulePresentation::new(3, vec![0, 0], vec![1], vec![vec![poly("x0")], vec![poly("x1")]])
            .unwrap()
    }

    fn l(s: &str) -> HomogPoly<Q> {
        poly(s)
    }

    #[test]
    fn graded_pieces() {
        let q = Rationals;
        let o = ModulePresentation::<Q>::free(3, vec![0]);
        assert_eq!(graded_piece_dim(&q, &o, 2), 6);
        let m = ModulePresentation::new(3, vec![0], vec![1], vec![vec![poly("x0")]]).unwrap();
        assert_eq!(graded_piece_dim(&q, &m, 3), 4);
        assert_eq!(graded_piece_dim(&q, &m, -1), 0);
        let shifted = ModulePresentation::<Q>::free(3, vec![2, 3]);
        assert_eq!(graded_piece_dim(&q, &shifted, 1), 0);
        assert_eq!(graded_piece_dim(&q, &shifted, 3), 3 + 1);
    }

    #[test]
    fn fiber_dimensions() {
        let q = Rationals;
        let free = ModulePresentation::<Q>::free(3, vec![0, 1, 1]);
        let p = pt(&[1, 2, 3]);
        assert_eq!(fiber(&q, &free, &p, &l("x0")).unwrap().mu, 3);

        let m = two_line_module();
        assert_eq!(fiber(&q, &m, &pt(&[0, 0, 1]), &l("x2")).unwrap().mu, 2);
        assert_eq!(fiber(&q, &m, &pt(&[1, 0, 0]), &l("x0")).unwrap().mu, 1);
    }

    #[test]
    fn vanishing_dehomogenizer_is_rejected() {
        let m = two_line_module();
        let err = fiber(&Rationals, &m, &pt(&[0, 0, 1]), &l("x0")).unwrap_err();
        assert_eq!(err, Error::DehomogenizerVanishes);
    }

    #[test]
    fn widths_of_free_sections() {
        let q = Rationals;
        let o2 = ModulePresentation::<Q>::free(3, vec![0, 0]);
        let e1 = Section::generator(&q, &o2, 0);
        let e2 = Section::generator(&q, &o2, 1);
        let p = pt(&[1, 5, 7]);
        let both = section_images_in_fiber(&q, &o2, &[e1.clone(), e2], &p, &l("x0")).unwrap();
        assert_eq!(both.width, 2);
        let rep = section_images_in_fiber(&q, &o2, &[e1.clone(), e1], &p, &l("x0")).unwrap();
        assert_eq!(rep.width, 1);
    }

    #[test]
    fn width_in_cokernel() {
        let q = Rationals;
        let m = two_line_module();
        let p = pt(&[1, 0, 0]);
        // At (1:0:0) the relation x0 e1 + x1 e2 = 0 kills e1 in the fiber.
        let e1 = Section::new(0, vec![poly("1"), HomogPoly::zero(3, 0)]);
        let imgs = section_images_in_fiber(&q, &m, &[e1.clone()], &p, &l("x0")).unwrap();
        assert_eq!((imgs.mu, imgs.width), (1, 0));
        let e2 = Section::new(0, vec![HomogPoly::zero(3, 0), poly("1")]);
        let imgs = section_images_in_fiber(&q, &m, &[e2.clone()], &p, &l("x0")).unwrap();
        assert_eq!((imgs.mu, imgs.width), (1, 1));
        assert!(is_w_basic(&q, &m, &[e2], &p, 1).unwrap());
        assert!(!is_w_basic(&q, &m, &[e1], &p, 1).unwrap());
    }

    #[test]
    fn basicness_edge_cases() {
        let q = Rationals;
        let o2 = ModulePresentation::<Q>::free(3, vec![0, 0]);
        let p = pt(&[1, 1, 1]);
        let zero = Section::zero(&o2, 0);
        assert!(is_w_basic(&q, &o2, &[zero.clone()], &p, 0).unwrap());
        assert!(!is_w_basic(&q, &o2, &[zero], &p, 1).unwrap());
        let gens = [Section::generator(&q, &o2, 0), Section::generator(&q, &o2, 1)];
        assert!(is_w_basic(&q, &o2, &gens, &p, 2).unwrap());
    }

    #[test]
    fn malformed_section_degrees() {
        let q = Rationals;
        let o2 = ModulePresentation::<Q>::free(3, vec![0, 0]);
        let bad = Section::new(1, vec![poly("x0^2"), HomogPoly::zero(3, 1)]);
        assert!(matches!(
            width_at(&q, &o2, &[bad], &pt(&[1, 0, 0]), &l("x0")),
            Err(Error::DegreeMismatch { .. })
        ));
        let short = Section::new(0, vec![poly("1")]);
        assert!(width_at(&q, &o2, &[short], &pt(&[1, 0, 0]), &l("x0")).is_err());
    }

    #[test]
    fn fitting_loci() {
        let q = Rationals;
        let free = ModulePresentation::<Q>::free(3, vec![0, 0, 0]);
        let p = pt(&[3, 1, 2]);
        assert!(fitting_vanishes_at(&q, &free, 2, &p, &l("x0")).unwrap());
        assert!(!fitting_vanishes_at(&q, &free, 3, &p, &l("x0")).unwrap());

        let m = two_line_module();
        assert!(fitting_vanishes_at(&q, &m, 1, &pt(&[0, 0, 1]), &l("x2")).unwrap());
        assert!(!fitting_vanishes_at(&q, &m, 1, &pt(&[1, 0, 0]), &l("x0")).unwrap());
    }

    #[test]
    fn presentation_rejects_wrong_degrees() {
        let err = ModulePresentation::new(3, vec![0], vec![1], vec![vec![poly("x0^2")]]);
        assert!(matches!(err, Err(Error::DegreeMismatch { .. })));
        let err = ModulePresentation::new(3, vec![0, 0], vec![1], vec![vec![poly("x0")]]);
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
        // zero entries are fine at impossible degrees
        assert!(ModulePresentation::new(3, vec![2], vec![1], vec![vec![HomogPoly::<Q>::zero(3, 0)]]).is_ok());
    }

    #[test]
    fn subsets_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }
}
