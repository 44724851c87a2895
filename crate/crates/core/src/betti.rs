//! Graded Betti numbers of `S/I_Z` for a reduced set of points `Z`.
//!
//! The degree-`e` piece of `S/I_Z` is identified with the image `V_e` of
//! the evaluation map `S_e → k^Z`. Under that identification multiplication
//! by `x_k` is the diagonal map `f ↦ (p_k f(p))_p`, so the Koszul complex
//! `S/I_Z ⊗ Λ^• k^n` becomes a complex of subspaces of `k^Z ⊗ Λ^•`, and
//! `β_{i,j} = dim Tor_i(S/I_Z, k)_j` is read off from ranks of its
//! differentials in each internal degree `j`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::Field;
use crate::matrix::{self, Matrix};
use crate::point::PointSet;
use crate::poly::{monomials, num_monomials, HomogPoly};

/// The `|Z| × dim S_d` matrix of monomial values at the points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationMatrix<E> {
    pub degree: u32,
    pub matrix: Matrix<E>,
}

pub fn evaluation_matrix<F: Field, P: AsRef<[F::Elem]>>(
    field: &F,
    num_vars: usize,
    points: &[P],
    degree: u32,
) -> EvaluationMatrix<F::Elem> {
    let monos = monomials(num_vars, degree);
    let rows = points
        .iter()
        .map(|p| {
            let p = p.as_ref();
            monos
                .iter()
                .map(|e| {
                    e.iter()
                        .zip(p)
                        .fold(field.one(), |acc, (&k, x)| field.mul(&acc, &field.pow(x, k)))
                })
                .collect()
        })
        .collect();
    EvaluationMatrix { degree, matrix: Matrix::from_rows(monos.len(), rows).expect("uniform") }
}

/// `HF(S/I_Z, d)`, the number of conditions imposed by `Z` on forms of degree `d`.
pub fn hilbert_function<F: Field>(field: &F, z: &PointSet<F::Elem>, d: i64) -> usize {
    if d < 0 {
        return 0;
    }
    let ev = evaluation_matrix(field, z.num_vars(), z.points(), d as u32);
    field.rank(&ev.matrix)
}

/// A basis of `(I_Z)_d`.
pub fn ideal_basis<F: Field>(field: &F, z: &PointSet<F::Elem>, d: u32) -> Vec<HomogPoly<F::Elem>> {
    let n = z.num_vars();
    let monos = monomials(n, d);
    let ev = evaluation_matrix(field, n, z.points(), d);
    matrix::kernel_basis(field, &ev.matrix)
        .into_iter()
        .map(|v| {
            HomogPoly::from_terms(field, n, d, monos.iter().cloned().zip(v)).expect("degree d terms")
        })
        .collect()
}

/// The least `d` with `HF(S/I_Z, d) = |Z|`.
pub fn stabilization_degree<F: Field>(field: &F, z: &PointSet<F::Elem>) -> i64 {
    let mut d = 0;
    while hilbert_function(field, z, d) < z.len() {
        d += 1;
    }
    d
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub num_vars: usize,
    /// Nonzero `β_{i,j}` only.
    pub entries: BTreeMap<(usize, i64), usize>,
    /// Internal degrees `j ≤ degree_cap` were computed.
    pub degree_cap: i64,
    /// Stabilization degree of the Hilbert function.
    pub sigma: i64,
    /// Degrees of the minimal generators of `I_Z`, with multiplicity.
    pub b_degrees: Vec<i64>,
    /// Degrees of the minimal first syzygies, with multiplicity.
    pub a_degrees: Vec<i64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, v)| v).sum()
    }

    /// `Σ_{i,j} (-1)^i β_{i,j} dim S_{d-j}`, which equals `HF(S/I_Z, d)`.
    pub fn hilbert_from_betti(&self, d: i64) -> i64 {
        self.entries
            .iter()
            .map(|(&(i, j), &b)| {
                let term = (b * num_monomials(self.num_vars, d - j)) as i64;
                if i % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum()
    }
}

fn wedge_basis(n: usize, i: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, i, &mut Vec::new(), &mut out);
    out
}

/// Koszul differential `d_i : V_e ⊗ Λ^i → k^Z ⊗ Λ^{i-1}` as a matrix.
fn koszul_differential<F: Field>(
    field: &F,
    points: &[Vec<F::Elem>],
    basis: &[Vec<F::Elem>],
    n: usize,
    i: usize,
) -> Matrix<F::Elem> {
    let z = points.len();
    let source = wedge_basis(n, i);
    let target = wedge_basis(n, i - 1);
    let target_index: BTreeMap<&[usize], usize> =
        target.iter().enumerate().map(|(k, s)| (s.as_slice(), k)).collect();
    let rows = z * target.len();
    let mut columns = Vec::with_capacity(basis.len() * source.len());
    for s in &source {
        for b in basis {
            let mut col = vec![field.zero(); rows];
            for (m, &var) in s.iter().enumerate() {
                let mut rest = s.clone();
                rest.remove(m);
                let block = target_index[rest.as_slice()] * z;
                for (q, p) in points.iter().enumerate() {
                    let mut v = field.mul(&p[var], &b[q]);
                    if m % 2 == 1 {
                        v = field.neg(&v);
                    }
                    col[block + q] = field.add(&col[block + q], &v);
                }
            }
            columns.push(col);
        }
    }
    Matrix::from_columns(rows, &columns).expect("uniform")
}

/// All nonzero graded Betti numbers of `S/I_Z`.
pub fn betti_table<F: Field>(field: &F, z: &PointSet<F::Elem>) -> Result<BettiTable, Error> {
    let n = z.num_vars();
    let sigma = stabilization_degree(field, z);
    let cap = sigma + n as i64;
    let points: Vec<Vec<F::Elem>> = z.points().iter().map(|p| p.coords().to_vec()).collect();

    // Bases of V_e ⊆ k^Z for 0 ≤ e ≤ cap.
    let spaces: Vec<Vec<Vec<F::Elem>>> = (0..=cap)
        .map(|e| {
            let ev = evaluation_matrix(field, n, &points, e as u32).matrix;
            matrix::independent_columns(field, &ev)
                .into_iter()
                .map(|c| ev.column(c))
                .collect()
        })
        .collect();
    let space = |e: i64| -> &[Vec<F::Elem>] {
        if e < 0 {
            &[]
        } else {
            &spaces[e as usize]
        }
    };
    let binom = |i: usize| wedge_basis(n, i).len();

    let mut entries = BTreeMap::new();
    for j in 0..=cap {
        // ranks[i] = rank of d_i : C_i → C_{i-1} in internal degree j.
        let mut ranks = vec![0usize; n + 2];
        for (i, r) in ranks.iter_mut().enumerate().take(n + 1).skip(1) {
            let basis = space(j - i as i64);
            if basis.is_empty() {
                continue;
            }
            *r = field.rank(&koszul_differential(field, &points, basis, n, i));
        }
        for i in 0..=n {
            let dim = space(j - i as i64).len() * binom(i);
            let beta = dim - ranks[i] - ranks[i + 1];
            if beta > 0 {
                entries.insert((i, j), beta);
            }
        }
    }

    for (&(i, j), &b) in &entries {
        if j - i as i64 > sigma + 1 {
            return Err(Error::Internal(alloc::format!(
                "beta_{{{i},{j}}} = {b} lies beyond the regularity band"
            )));
        }
    }

    let degrees = |i: usize| -> Vec<i64> {
        entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .flat_map(|(&(_, j), &b)| core::iter::repeat_n(j, b))
            .collect()
    };
    Ok(BettiTable {
        num_vars: n,
        b_degrees: degrees(1),
        a_degrees: degrees(2),
        entries,
        degree_cap: cap,
        sigma,
    })
}
