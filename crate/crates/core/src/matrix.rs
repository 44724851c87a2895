//! Dense matrices over an exact field.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::Field;

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Self { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, field.zero())
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<E>>) -> Result<Self, Error> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r);
        }
        Ok(Self { rows: n, cols, data })
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<E>]) -> Result<Self, Error> {
        let cols = columns.len();
        if let Some(c) = columns.iter().find(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch { expected: rows, found: c.len() });
        }
        let data = (0..rows)
            .flat_map(|i| columns.iter().map(move |c| c[i].clone()))
            .collect();
        Ok(Self { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let data = (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
            .map(|(i, j)| self[(i, j)].clone())
            .collect();
        Self { rows: self.cols, cols: self.rows, data }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self, Error> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch { expected: self.rows, found: other.rows });
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(self.row(i));
            data.extend_from_slice(other.row(i));
        }
        Ok(Self { rows: self.rows, cols, data })
    }

    pub fn select_rows(&self, keep: &[usize]) -> Self {
        let mut data = Vec::with_capacity(keep.len() * self.cols);
        for &i in keep {
            data.extend_from_slice(self.row(i));
        }
        Self { rows: keep.len(), cols: self.cols, data }
    }

    pub fn mul_vec<F: Field<Elem = E>>(&self, field: &F, v: &[E]) -> Result<Vec<E>, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b)))
            })
            .collect())
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Result<Self, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let t = field.mul(a, &other[(k, j)]);
                    out[(i, j)] = field.add(&out[(i, j)], &t);
                }
            }
        }
        Ok(out)
    }
}

impl<E> core::ops::Index<(usize, usize)> for Matrix<E> {
    type Output = E;

    fn index(&self, (i, j): (usize, usize)) -> &E {
        &self.data[i * self.cols + j]
    }
}

impl<E> core::ops::IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        &mut self.data[i * self.cols + j]
    }
}

/// Reduced row echelon form together with the pivot columns.
pub struct Echelon<E> {
    pub reduced: Matrix<E>,
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination to reduced row echelon form.
pub fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Echelon<F::Elem> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !field.is_zero(&a[(i, c)])) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = field.inv(&a[(r, c)]).expect("pivot is nonzero");
        for j in c..cols {
            a[(r, j)] = field.mul(&a[(r, j)], &inv);
        }
        for i in 0..rows {
            if i == r || field.is_zero(&a[(i, c)]) {
                continue;
            }
            let factor = a[(i, c)].clone();
            for j in c..cols {
                let t = field.mul(&factor, &a[(r, j)]);
                a[(i, j)] = field.sub(&a[(i, j)], &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { reduced: a, pivots }
}

/// Rank by plain Gaussian elimination over the field.
pub fn gauss_rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !field.is_zero(&a[(i, c)])) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = field.inv(&a[(r, c)]).expect("pivot is nonzero");
        for i in r + 1..rows {
            if field.is_zero(&a[(i, c)]) {
                continue;
            }
            let factor = field.mul(&a[(i, c)], &inv);
            for j in c..cols {
                let t = field.mul(&factor, &a[(r, j)]);
                a[(i, j)] = field.sub(&a[(i, j)], &t);
            }
        }
        r += 1;
    }
    r
}

/// Determinant of a square matrix by Gaussian elimination.
pub fn determinant<F: Field>(field: &F, m: &Matrix<F::Elem>) -> F::Elem {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    let mut a = m.clone();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !field.is_zero(&a[(i, c)])) else {
            return field.zero();
        };
        if p != c {
            for j in 0..n {
                a.data.swap(p * n + j, c * n + j);
            }
            det = field.neg(&det);
        }
        det = field.mul(&det, &a[(c, c)]);
        let inv = field.inv(&a[(c, c)]).expect("pivot is nonzero");
        for i in c + 1..n {
            if field.is_zero(&a[(i, c)]) {
                continue;
            }
            let factor = field.mul(&a[(i, c)], &inv);
            for j in c..n {
                let t = field.mul(&factor, &a[(c, j)]);
                a[(i, j)] = field.sub(&a[(i, j)], &t);
            }
        }
    }
    det
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    field.rank(m)
}

/// Basis of the right null space `{x : M x = 0}`, one vector per free column.
pub fn kernel_basis<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    let Echelon { reduced, pivots } = rref(field, m);
    let cols = m.cols;
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![field.zero(); cols];
            v[free] = field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = field.neg(&reduced[(r, free)]);
            }
            v
        })
        .collect()
}

/// Basis of the left null space `{y : y M = 0}`.
pub fn left_kernel_basis<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<Vec<F::Elem>> {
    kernel_basis(field, &m.transpose())
}

/// Some `x` with `M x = v`, or `None` when the system is inconsistent.
pub fn solve<F: Field>(
    field: &F,
    m: &Matrix<F::Elem>,
    v: &[F::Elem],
) -> Result<Option<Vec<F::Elem>>, Error> {
    if v.len() != m.rows {
        return Err(Error::DimensionMismatch { expected: m.rows, found: v.len() });
    }
    let columns = [v.to_vec()];
    let augmented = m.hstack(&Matrix::from_columns(m.rows, &columns)?)?;
    let Echelon { reduced, pivots } = rref(field, &augmented);
    if pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let mut x = vec![field.zero(); m.cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = reduced[(r, m.cols)].clone();
    }
    Ok(Some(x))
}

/// Indices of a maximal linearly independent subset of the columns, chosen
/// greedily from the left.
pub fn independent_columns<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<usize> {
    rref(field, m).pivots
}
