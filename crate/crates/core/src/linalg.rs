//! Exact linear algebra over finite fields: dense matrices, canonical
//! row-reduced subspaces, orthogonal complements and Frobenius-twisted kernels.
//!
//! Vectors are plain `Vec<Fq>` coordinate lists; every operation takes the
//! [`Field`] explicitly or through the subspace that carries it.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::field::{Field, Fq};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("quotient of subspaces requires the second to lie in the first")]
    NotASubspace,
    #[error("bilinear form is degenerate")]
    DegenerateForm { kernel: Vec<Fq> },
    #[error("twist {twist} is not a power of the characteristic {p}")]
    BadTwist { twist: u64, p: u64 },
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Fq>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Fq::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Fq::ONE);
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<Fq>]) -> Result<Matrix, LinalgError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(LinalgError::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Fq {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Fq) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fq] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Fq>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.mul_add(a, other.get(k, j), out.get(i, j));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Fq]) -> Result<Vec<Fq>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Fq::ZERO, |acc, (&a, &b)| f.mul_add(a, b, acc))
            })
            .collect())
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let (rows, pivots) = rref_rows(&self.field, self.cols, self.to_rows());
        let mut m = Matrix::from_rows(&self.field, self.cols, &rows).unwrap();
        m.rows = rows.len();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

/// Gauss-Jordan elimination; returns the nonzero RREF rows and their pivots.
fn rref_rows(f: &Field, cols: usize, mut rows: Vec<Vec<Fq>>) -> (Vec<Vec<Fq>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = f.inv(rows[r][c]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = f.neg(row[c]);
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x = f.mul_add(factor, y, *x);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// A subspace of `F^d` held as its canonical RREF basis, so that equal
/// subspaces compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<Fq>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            field: field.clone(),
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace::span(field, ambient, &Matrix::identity(field, ambient).to_rows()).unwrap()
    }

    pub fn span(
        field: &Field,
        ambient: usize,
        vectors: &[Vec<Fq>],
    ) -> Result<Subspace, LinalgError> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(LinalgError::DimensionMismatch {
                expected: ambient,
                got: v.len(),
            });
        }
        let (rows, pivots) = rref_rows(field, ambient, vectors.to_vec());
        Ok(Subspace {
            field: field.clone(),
            ambient,
            rows,
            pivots,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Fq>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the pivot columns.
    pub fn reduce(&self, v: &[Fq]) -> Vec<Fq> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if v[c].is_zero() {
                continue;
            }
            let factor = f.neg(v[c]);
            for (x, &y) in v.iter_mut().zip(row) {
                *x = f.mul_add(factor, y, *x);
            }
        }
        v
    }

    /// Coordinates of `v` modulo this subspace, on the non-pivot columns.
    pub fn quotient_coords(&self, v: &[Fq]) -> Vec<Fq> {
        let r = self.reduce(v);
        self.non_pivots().into_iter().map(|c| r[c]).collect()
    }

    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    pub fn contains(&self, v: &[Fq]) -> Result<bool, LinalgError> {
        self.check_len(v.len())?;
        Ok(self.reduce(v).iter().all(|x| x.is_zero()))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_len(other.ambient)?;
        Ok(other
            .rows
            .iter()
            .all(|r| self.reduce(r).iter().all(|x| x.is_zero())))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_len(other.ambient)?;
        let mut v = self.rows.clone();
        v.extend(other.rows.iter().cloned());
        Subspace::span(&self.field, self.ambient, &v)
    }

    /// Zassenhaus intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_len(other.ambient)?;
        let d = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for r in &self.rows {
            let mut x = r.clone();
            x.extend_from_slice(r);
            rows.push(x);
        }
        for r in &other.rows {
            let mut x = r.clone();
            x.extend(std::iter::repeat_n(Fq::ZERO, d));
            rows.push(x);
        }
        let (rows, pivots) = rref_rows(&self.field, 2 * d, rows);
        let inter: Vec<Vec<Fq>> = rows
            .into_iter()
            .zip(pivots)
            .filter(|&(_, c)| c >= d)
            .map(|(r, _)| r[d..].to_vec())
            .collect();
        Subspace::span(&self.field, d, &inter)
    }

    /// `dim self - dim other`, defined when `other` lies in `self`.
    pub fn quotient_dim(&self, other: &Subspace) -> Result<usize, LinalgError> {
        if !self.contains_subspace(other)? {
            return Err(LinalgError::NotASubspace);
        }
        Ok(self.dim() - other.dim())
    }

    fn check_len(&self, len: usize) -> Result<(), LinalgError> {
        if len == self.ambient {
            Ok(())
        } else {
            Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                got: len,
            })
        }
    }
}

/// `{x : m x = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let f = m.field();
    let (r, pivots) = m.rref();
    let mut is_pivot = vec![false; m.cols()];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..m.cols()).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Fq::ZERO; m.cols()];
        v[free] = Fq::ONE;
        for (i, &c) in pivots.iter().enumerate() {
            v[c] = f.neg(r.get(i, free));
        }
        basis.push(v);
    }
    Subspace::span(f, m.cols(), &basis).unwrap()
}

/// Column space of `m`.
pub fn image(m: &Matrix) -> Subspace {
    Subspace::span(m.field(), m.rows(), &m.transpose().to_rows()).unwrap()
}

/// Bilinear form given by its Gram matrix `G[i][j] = (b_i, b_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    pub gram: Matrix,
}

impl BilinearForm {
    pub fn eval(&self, x: &[Fq], y: &[Fq]) -> Fq {
        let f = self.gram.field();
        let gy = self.gram.mul_vec(y).expect("vector length matches form");
        x.iter()
            .zip(&gy)
            .fold(Fq::ZERO, |acc, (&a, &b)| f.mul_add(a, b, acc))
    }

    /// `Ok` if the Gram matrix is invertible, else a nonzero kernel vector.
    pub fn check_nondegenerate(&self) -> Result<(), LinalgError> {
        let k = kernel(&self.gram);
        match k.basis().first() {
            None => Ok(()),
            Some(v) => Err(LinalgError::DegenerateForm { kernel: v.clone() }),
        }
    }
}

/// `{x : (m, x) = 0 for all m in M}`.
pub fn orthogonal_complement(m: &Subspace, form: &BilinearForm) -> Result<Subspace, LinalgError> {
    let g = &form.gram;
    if g.rows() != m.ambient() || g.cols() != m.ambient() {
        return Err(LinalgError::DimensionMismatch {
            expected: m.ambient(),
            got: g.rows(),
        });
    }
    form.check_nondegenerate()?;
    if m.dim() == 0 {
        return Ok(Subspace::full(m.field(), m.ambient()));
    }
    let rows = Matrix::from_rows(m.field(), m.ambient(), m.basis())?;
    Ok(kernel(&rows.mul(g)?))
}

/// Coefficient vectors `c` with `sum c_i^twist * vectors[i] = 0`, where
/// `twist` is a power of the characteristic.
pub fn semilinear_kernel(
    field: &Field,
    vectors: &[Vec<Fq>],
    twist: u64,
) -> Result<Subspace, LinalgError> {
    let p = field.p();
    let mut n = 0u32;
    let mut t = twist;
    while t > 1 && t.is_multiple_of(p) {
        t /= p;
        n += 1;
    }
    if t != 1 {
        return Err(LinalgError::BadTwist { twist, p });
    }
    let s = vectors.len();
    let r = vectors.first().map_or(0, Vec::len);
    if let Some(v) = vectors.iter().find(|v| v.len() != r) {
        return Err(LinalgError::DimensionMismatch {
            expected: r,
            got: v.len(),
        });
    }
    // columns are the image vectors
    let mut m = Matrix::zeros(field, r, s);
    for (j, v) in vectors.iter().enumerate() {
        for (i, &x) in v.iter().enumerate() {
            m.set(i, j, x);
        }
    }
    let linear = kernel(&m);
    let rooted: Vec<Vec<Fq>> = linear
        .basis()
        .iter()
        .map(|v| v.iter().map(|&x| field.frobenius_inverse(x, n)).collect())
        .collect();
    Subspace::span(field, s, &rooted)
}

/// Incremental sparse row echelon, used for ranks of large sparse matrices.
#[derive(Debug, Clone)]
pub struct SparseEchelon {
    field: Field,
    pivots: BTreeMap<usize, Vec<(usize, Fq)>>,
}

impl SparseEchelon {
    pub fn new(field: &Field) -> SparseEchelon {
        SparseEchelon {
            field: field.clone(),
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row given as (column, value) pairs; returns whether the rank grew.
    pub fn insert(&mut self, row: Vec<(usize, Fq)>) -> bool {
        let f = self.field.clone();
        let mut row = normalize(&f, row);
        while let Some(&(c, v)) = row.first() {
            match self.pivots.get(&c) {
                Some(p) => {
                    row = axpy(&f, f.neg(v), p, &row);
                }
                None => {
                    let inv = f.inv(v).expect("leading entry is nonzero");
                    let scaled = row.into_iter().map(|(k, x)| (k, f.mul(x, inv))).collect();
                    self.pivots.insert(c, scaled);
                    return true;
                }
            }
        }
        false
    }
}

/// Rank of a sparse matrix given as rows of (column, value) pairs.
pub fn sparse_rank(field: &Field, rows: impl IntoIterator<Item = Vec<(usize, Fq)>>) -> usize {
    let mut e = SparseEchelon::new(field);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

fn normalize(f: &Field, mut row: Vec<(usize, Fq)>) -> Vec<(usize, Fq)> {
    row.sort_unstable_by_key(|&(c, _)| c);
    let mut out: Vec<(usize, Fq)> = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv = f.add(*lv, v),
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// `a * x + y` for sorted sparse rows.
fn axpy(f: &Field, a: Fq, x: &[(usize, Fq)], y: &[(usize, Fq)]) -> Vec<(usize, Fq)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        let (c, v) = if take_x {
            i += 1;
            (x[i - 1].0, f.mul(a, x[i - 1].1))
        } else if take_y {
            j += 1;
            y[j - 1]
        } else {
            i += 1;
            j += 1;
            (x[i - 1].0, f.mul_add(a, x[i - 1].1, y[j - 1].1))
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}
