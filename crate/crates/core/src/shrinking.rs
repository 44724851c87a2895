//! Shrinking a family of twisted sections while keeping it basic at a finite
//! set of points.
//!
//! [`shrink_once`] removes the lowest-degree section `s_1` and replaces each
//! `s_j` (`j ≥ 2`) by `s_j + λ_j L^(a_j - a_1) s_1`, where `L` is a linear form
//! that does not vanish at any listed point. With that choice of multiplier,
//! the fiber vector of `s_j + λ L^(a_j - a_1) s_1` at a point is exactly
//! `v_j + λ v_1`, so every decision reduces to linear algebra on fiber
//! vectors. Points are processed in order; at each point that is not yet
//! good enough, one section absorbs a nonzero multiple of `s_1`, and `λ` is
//! the smallest positive integer avoiding the (at most one per point) value
//! that would break a point handled earlier.
//!
//! [`basic_elements`] iterates this `u - t` times and records the composed
//! lower-unitriangular change of sections.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::Field;
use crate::matrix::{self, Matrix};
use crate::module::{section_images_in_fiber, width_at, ModulePresentation, Section};
use crate::poly::HomogPoly;

/// The unique `λ` for which replacing `v_j` by `v_j + λ v_1` lowers
/// `dim span{v_2, .., v_u}`, if there is one.
///
/// `others` holds `v_2, .., v_u` and `j` is the 1-based index of the vector
/// being modified (`2 ≤ j ≤ u`).
pub fn unique_bad_lambda<F: Field>(
    field: &F,
    v1: &[F::Elem],
    others: &[Vec<F::Elem>],
    j: usize,
) -> Result<Option<F::Elem>, Error> {
    let n = v1.len();
    if let Some(v) = others.iter().find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: v.len() });
    }
    if j < 2 || j > others.len() + 1 {
        return Err(Error::InvalidArgument(alloc::format!(
            "index {j} outside 2..={}",
            others.len() + 1
        )));
    }
    let target = &others[j - 2];
    let rest: Vec<Vec<F::Elem>> = others
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != j - 2)
        .map(|(_, v)| v.clone())
        .collect();

    // Quotient by span(rest): rows of `proj` span the annihilator of `rest`.
    let rest_matrix = Matrix::from_columns(n, &rest)?;
    let proj_rows = matrix::left_kernel_basis(field, &rest_matrix);
    let proj = Matrix::from_rows(n, proj_rows)?;
    let vj = proj.mul_vec(field, target)?;
    if vj.iter().all(|x| field.is_zero(x)) {
        // v_j already lies in the span of the others.
        return Ok(None);
    }
    let w1 = proj.mul_vec(field, v1)?;
    let Some(k) = w1.iter().position(|x| !field.is_zero(x)) else {
        return Ok(None);
    };
    let lambda = field.neg(&field.div(&vj[k], &w1[k]).expect("nonzero"));
    let proportional = vj
        .iter()
        .zip(&w1)
        .all(|(a, b)| field.is_zero(&field.add(a, &field.mul(&lambda, b))));
    Ok(proportional.then_some(lambda))
}

/// `L = x0 + t x1 + t^2 x2 + ...` for the smallest `t = 0, 1, 2, ..` such
/// that `L` vanishes at none of the points.
pub fn find_nonvanishing_linear_form<F, P>(field: &F, points: &[P]) -> Result<HomogPoly<F::Elem>, Error>
where
    F: Field,
    P: AsRef<[F::Elem]>,
{
    let Some(first) = points.first() else {
        return Err(Error::TooFewPoints { required: 1, found: 0 });
    };
    let n = first.as_ref().len();
    if n == 0 {
        return Err(Error::ZeroPoint);
    }
    for p in points {
        let p = p.as_ref();
        if p.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: p.len() });
        }
        if p.iter().all(|c| field.is_zero(c)) {
            return Err(Error::ZeroPoint);
        }
    }
    // Each point rules out at most n - 1 values of t.
    let mut limit = (points.len() * n + 1) as u64;
    let p = field.characteristic();
    if p != 0 {
        limit = limit.min(p);
    }
    for t in 0..limit {
        let t = field.from_i64(t as i64);
        let coeffs: Vec<F::Elem> = (0..n as u32).map(|i| field.pow(&t, i)).collect();
        let l = HomogPoly::linear(field, &coeffs);
        let ok = points
            .iter()
            .all(|pt| !field.is_zero(&l.eval(field, pt.as_ref()).expect("checked length")));
        if ok {
            return Ok(l);
        }
    }
    Err(Error::FieldTooSmall { characteristic: p, points: points.len() })
}

/// One modification round inside [`shrink_once`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShrinkRound<E> {
    /// Index of the point that triggered the round.
    pub point: usize,
    /// 0-based index (in the input list) of the section that absorbed `s_1`.
    pub section: usize,
    pub lambda: E,
}

/// The data of one shrinking step: `s_j' = s_j + r_j s_1` with
/// `r_j = λ_j L^(a_j - a_1)` for `j = 2..u`. The dropped section is always
/// the first (lowest-degree) one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShrinkStep<E> {
    pub dehomogenizer: HomogPoly<E>,
    /// `λ_2, .., λ_u`.
    pub coefficients: Vec<E>,
    /// `r_2, .., r_u`.
    pub multipliers: Vec<HomogPoly<E>>,
    pub rounds: Vec<ShrinkRound<E>>,
}

/// Per-point check of a basicness claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointCertificate {
    pub point: usize,
    pub mu: usize,
    pub required: usize,
    pub width: usize,
}

impl PointCertificate {
    pub fn holds(&self) -> bool {
        self.width >= self.required
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShrinkOutcome<E> {
    pub step: ShrinkStep<E>,
    /// `s_2', .., s_u'`.
    pub sections: Vec<Section<E>>,
    /// Widths of the new sections, required to reach `min(u - 1, w_i)`.
    pub certificate: Vec<PointCertificate>,
}

fn check_sections<E: Clone + PartialEq>(
    m: &ModulePresentation<E>,
    sections: &[Section<E>],
) -> Result<(), Error> {
    for s in sections {
        s.validate(m)?;
    }
    if sections.windows(2).any(|w| w[0].degree() > w[1].degree()) {
        return Err(Error::UnsortedDegrees);
    }
    Ok(())
}

fn check_points<F: Field, P: AsRef<[F::Elem]>>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    points: &[P],
    weights: &[usize],
) -> Result<(), Error> {
    if points.len() != weights.len() {
        return Err(Error::DimensionMismatch { expected: points.len(), found: weights.len() });
    }
    for p in points {
        if p.as_ref().len() != m.num_vars() {
            return Err(Error::DimensionMismatch { expected: m.num_vars(), found: p.as_ref().len() });
        }
    }
    let ch = field.characteristic();
    if ch != 0 && ch <= points.len() as u64 {
        return Err(Error::FieldTooSmall { characteristic: ch, points: points.len() });
    }
    Ok(())
}

/// Fiber vectors of each section at each point, plus the hypothesis check.
fn fiber_vectors<F: Field, P: AsRef<[F::Elem]>>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    sections: &[Section<F::Elem>],
    points: &[P],
    weights: &[usize],
    l: &HomogPoly<F::Elem>,
) -> Result<Vec<Vec<Vec<F::Elem>>>, Error> {
    points
        .iter()
        .zip(weights)
        .enumerate()
        .map(|(i, (p, &w))| {
            let imgs = section_images_in_fiber(field, m, sections, p.as_ref(), l)?;
            if imgs.width < w {
                return Err(Error::HypothesisViolation { point: i, required: w, actual: imgs.width });
            }
            Ok((0..sections.len()).map(|k| imgs.images.column(k)).collect())
        })
        .collect()
}

fn span_dim<F: Field>(field: &F, dim: usize, vectors: &[Vec<F::Elem>]) -> usize {
    if vectors.is_empty() || dim == 0 {
        return 0;
    }
    field.rank(&Matrix::from_columns(dim, vectors).expect("uniform length"))
}

fn certify<F: Field, P: AsRef<[F::Elem]>>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    sections: &[Section<F::Elem>],
    points: &[P],
    required: impl Fn(usize) -> usize,
    l: &HomogPoly<F::Elem>,
) -> Result<Vec<PointCertificate>, Error> {
    points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let imgs = section_images_in_fiber(field, m, sections, p.as_ref(), l)?;
            Ok(PointCertificate { point: i, mu: imgs.mu, required: required(i), width: imgs.width })
        })
        .collect()
}

/// Drops `s_1` from sections `s_1..s_u` (ascending degrees) that are
/// `w_i`-basic at `p_i`, returning `s_2'..s_u'` that are
/// `min(u - 1, w_i)`-basic at every `p_i`.
pub fn shrink_once<F: Field, P: AsRef<[F::Elem]>>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    sections: &[Section<F::Elem>],
    points: &[P],
    weights: &[usize],
) -> Result<ShrinkOutcome<F::Elem>, Error> {
    let u = sections.len();
    if u == 0 {
        return Err(Error::InvalidArgument("need at least one section".into()));
    }
    check_sections(m, sections)?;
    check_points(field, m, points, weights)?;

    let l = if points.is_empty() {
        HomogPoly::variable(field, m.num_vars(), 0)
    } else {
        find_nonvanishing_linear_form(field, points)?
    };
    let vectors = fiber_vectors(field, m, sections, points, weights, &l)?;

    // coefficients[k] is the multiple of v_1 added to section k (k ≥ 1).
    let mut coefficients = vec![field.zero(); u];
    let mut rounds = Vec::new();
    let mut handled: Vec<usize> = Vec::new();

    let current = |vecs: &[Vec<F::Elem>], coeffs: &[F::Elem]| -> Vec<Vec<F::Elem>> {
        (1..u)
            .map(|k| {
                vecs[k]
                    .iter()
                    .zip(&vecs[0])
                    .map(|(a, b)| field.add(a, &field.mul(&coeffs[k], b)))
                    .collect()
            })
            .collect()
    };

    for (i, &w) in weights.iter().enumerate() {
        if w >= u {
            // Already u-basic: every unitriangular change keeps it so.
            continue;
        }
        let dim = vectors[i][0].len();
        let cur = current(&vectors[i], &coefficients);
        if span_dim(field, dim, &cur) >= w {
            handled.push(i);
            continue;
        }
        // Smallest l whose vector lies in the span of the later ones.
        let pos = (0..cur.len())
            .find(|&k| span_dim(field, dim, &cur[k + 1..]) == span_dim(field, dim, &cur[k..]))
            .expect("dependent family has a redundant member");

        let mut bad = Vec::new();
        for &h in &handled {
            let cur_h = current(&vectors[h], &coefficients);
            if let Some(lam) = unique_bad_lambda(field, &vectors[h][0], &cur_h, pos + 2)? {
                bad.push(lam);
            }
        }
        let lambda = smallest_avoiding(field, &bad, points.len())?;
        coefficients[pos + 1] = field.add(&coefficients[pos + 1], &lambda);
        rounds.push(ShrinkRound { point: i, section: pos + 1, lambda });
        handled.push(i);
    }

    let a1 = sections[0].degree();
    let mut multipliers = Vec::with_capacity(u - 1);
    let mut new_sections = Vec::with_capacity(u - 1);
    for k in 1..u {
        let exp = (sections[k].degree() - a1) as u32;
        let r = l.pow(field, exp).scale(field, &coefficients[k]);
        new_sections.push(sections[k].add_multiple(field, &r, &sections[0])?);
        multipliers.push(r);
    }
    coefficients.remove(0);

    let certificate = certify(field, m, &new_sections, points, |i| weights[i].min(u - 1), &l)?;
    debug_assert!(certificate.iter().all(PointCertificate::holds));
    Ok(ShrinkOutcome {
        step: ShrinkStep { dehomogenizer: l, coefficients, multipliers, rounds },
        sections: new_sections,
        certificate,
    })
}

/// Smallest positive integer, as a field element, not in `bad`.
fn smallest_avoiding<F: Field>(field: &F, bad: &[F::Elem], points: usize) -> Result<F::Elem, Error> {
    let ch = field.characteristic();
    let limit = if ch == 0 { bad.len() as u64 + 1 } else { ch - 1 };
    for n in 1..=limit {
        let c = field.from_i64(n as i64);
        if !bad.contains(&c) {
            return Ok(c);
        }
    }
    Err(Error::FieldTooSmall { characteristic: ch, points })
}

/// Lower-unitriangular change of sections `s_i' = s_i + Σ_{j<i} T_ij s_j`
/// with `T_ij` homogeneous of degree `a_i - a_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentTransform<E> {
    degrees: Vec<i64>,
    entries: Vec<Vec<HomogPoly<E>>>,
}

impl<E: Clone + PartialEq> UnipotentTransform<E> {
    pub fn identity<F: Field<Elem = E>>(field: &F, num_vars: usize, degrees: &[i64]) -> Self {
        let u = degrees.len();
        let entries = (0..u)
            .map(|i| {
                (0..u)
                    .map(|j| {
                        if i == j {
                            HomogPoly::one(field, num_vars)
                        } else {
                            HomogPoly::zero(num_vars, (degrees[i] - degrees[j]).max(0) as u32)
                        }
                    })
                    .collect()
            })
            .collect();
        Self { degrees: degrees.to_vec(), entries }
    }

    pub fn size(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn entry(&self, i: usize, j: usize) -> &HomogPoly<E> {
        &self.entries[i][j]
    }

    /// Diagonal ones, zeros above it, and entry degrees `a_i - a_j` below it.
    pub fn is_lower_unitriangular<F: Field<Elem = E>>(&self, field: &F) -> bool {
        let u = self.size();
        (0..u).all(|i| {
            (0..u).all(|j| {
                let e = &self.entries[i][j];
                match i.cmp(&j) {
                    core::cmp::Ordering::Equal => {
                        e.degree() == 0 && e.terms().count() == 1 && e.terms().all(|(_, c)| field.is_one(c))
                    }
                    core::cmp::Ordering::Less => e.is_zero(),
                    core::cmp::Ordering::Greater => {
                        e.is_zero() || i64::from(e.degree()) == self.degrees[i] - self.degrees[j]
                    }
                }
            })
        })
    }

    /// The transformed sections `s_i'` for every row.
    pub fn apply<F: Field<Elem = E>>(&self, field: &F, sections: &[Section<E>]) -> Result<Vec<Section<E>>, Error> {
        if sections.len() != self.size() {
            return Err(Error::DimensionMismatch { expected: self.size(), found: sections.len() });
        }
        (0..self.size())
            .map(|i| {
                let mut acc = sections[i].clone();
                for j in 0..i {
                    let r = &self.entries[i][j];
                    if !r.is_zero() {
                        acc = acc.add_multiple(field, r, &sections[j])?;
                    }
                }
                Ok(acc)
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicElements<E> {
    pub transform: UnipotentTransform<E>,
    /// The `t` surviving sections, in the top degrees `a_{u-t+1}..a_u`.
    pub sections: Vec<Section<E>>,
    pub steps: Vec<ShrinkStep<E>>,
    /// Widths of the surviving sections against `min(t, w_i)`.
    pub certificate: Vec<PointCertificate>,
}

/// Applies [`shrink_once`] `u - t` times. The input must be `w_i`-basic at
/// each `p_i`; the result is `min(t, w_i)`-basic there.
pub fn basic_elements<F: Field, P: AsRef<[F::Elem]>>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    sections: &[Section<F::Elem>],
    points: &[P],
    weights: &[usize],
    t: usize,
) -> Result<BasicElements<F::Elem>, Error> {
    let u = sections.len();
    if t == 0 || t > u {
        return Err(Error::InvalidArgument(alloc::format!("need 1 <= t <= {u}, got {t}")));
    }
    check_sections(m, sections)?;
    check_points(field, m, points, weights)?;
    let l = if points.is_empty() {
        HomogPoly::variable(field, m.num_vars(), 0)
    } else {
        find_nonvanishing_linear_form(field, points)?
    };
    fiber_vectors(field, m, sections, points, weights, &l)?;

    let degrees: Vec<i64> = sections.iter().map(Section::degree).collect();
    let mut transform = UnipotentTransform::identity(field, m.num_vars(), &degrees);
    // Row `k` of `transform` tracks the current version of section `k`.
    let mut current: Vec<Section<F::Elem>> = sections.to_vec();
    let mut steps = Vec::with_capacity(u - t);
    let mut w: Vec<usize> = weights.to_vec();

    for round in 0..u - t {
        let outcome = shrink_once(field, m, &current, points, &w)?;
        let dropped = round;
        for (k, r) in outcome.step.multipliers.iter().enumerate() {
            if r.is_zero() {
                continue;
            }
            let row = dropped + 1 + k;
            for j in 0..=dropped {
                let add = r.mul(field, &transform.entries[dropped][j])?;
                transform.entries[row][j] = transform.entries[row][j].add(field, &add)?;
            }
        }
        let remaining = current.len() - 1;
        current = outcome.sections;
        for wi in &mut w {
            *wi = (*wi).min(remaining);
        }
        steps.push(outcome.step);
    }

    let certificate = certify(field, m, &current, points, |i| weights[i].min(t), &l)?;
    Ok(BasicElements { transform, sections: current, steps, certificate })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SerreSection<E> {
    pub section: Section<E>,
    pub transform: UnipotentTransform<E>,
    /// Each entry requires width 1, i.e. `μ` drops by exactly one.
    pub certificate: Vec<PointCertificate>,
}

/// A single section whose quotient has `μ` exactly one less than `F` at
/// every listed point, from sections that generate each listed fiber.
pub fn serre_section<F: Field, P: AsRef<[F::Elem]>>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    sections: &[Section<F::Elem>],
    points: &[P],
) -> Result<SerreSection<F::Elem>, Error> {
    check_sections(m, sections)?;
    if sections.is_empty() {
        return Err(Error::InvalidArgument("need at least one section".into()));
    }
    let mut weights = Vec::with_capacity(points.len());
    for (i, p) in points.iter().enumerate() {
        let l = find_nonvanishing_linear_form(field, &[p.as_ref()])?;
        let imgs = section_images_in_fiber(field, m, sections, p.as_ref(), &l)?;
        if imgs.width < imgs.mu {
            return Err(Error::GenerationFailure { point: i, width: imgs.width, mu: imgs.mu });
        }
        if imgs.mu == 0 {
            return Err(Error::HypothesisViolation { point: i, required: 1, actual: 0 });
        }
        weights.push(imgs.mu);
    }
    let basic = basic_elements(field, m, sections, points, &weights, 1)?;
    let section = basic.sections.into_iter().next().expect("t = 1");
    let certificate = basic.certificate.into_iter().map(|c| PointCertificate { required: 1, ..c }).collect();
    Ok(SerreSection { section, transform: basic.transform, certificate })
}

/// Width of `sections` at each point, each computed with its own
/// dehomogenizer.
pub fn widths<F: Field, P: AsRef<[F::Elem]>>(
    field: &F,
    m: &ModulePresentation<F::Elem>,
    sections: &[Section<F::Elem>],
    points: &[P],
) -> Result<Vec<usize>, Error> {
    points
        .iter()
        .map(|p| {
            let l = find_nonvanishing_linear_form(field, &[p.as_ref()])?;
            width_at(field, m, sections, p.as_ref(), &l)
        })
        .collect()
}
