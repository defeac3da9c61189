//! Dense exact matrices over a [`Field`].
//!
//! Elimination is deterministic: pivots are taken column by column, from the
//! first row with a nonzero entry. Kernels run on monomorphic element types
//! (packed `u32` for finite fields), with conversion at the boundary.

use std::fmt;

use thiserror::Error;

use crate::field::{with_arith, Arith, Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.name())?;
        for r in self.to_strings() {
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row-echelon form together with its rank and pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// A basis of a column space in reduced form: the basis restricted to
/// `pivot_rows` is the identity, so the coordinates of any vector of the span
/// are its entries at `pivot_rows`.
#[derive(Debug, Clone)]
pub struct ColumnBasis {
    pub basis: Matrix,
    pub pivot_rows: Vec<usize>,
}

impl ColumnBasis {
    pub fn dim(&self) -> usize {
        self.basis.cols
    }

    /// Coordinates of the columns of `m`, assumed to lie in the span.
    pub fn coordinates(&self, m: &Matrix) -> Matrix {
        m.select_rows(&self.pivot_rows)
    }

    /// Residue of the columns of `m` modulo the span, in the coordinates of
    /// the complement spanned by the non-pivot standard basis vectors.
    pub fn quotient_coordinates(&self, m: &Matrix) -> Matrix {
        let proj = self.basis.mul(&m.select_rows(&self.pivot_rows));
        let resid = m.sub(&proj);
        resid.select_rows(&self.complement_rows())
    }

    pub fn complement_rows(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.basis.rows];
        for &p in &self.pivot_rows {
            is_pivot[p] = true;
        }
        (0..self.basis.rows).filter(|&r| !is_pivot[r]).collect()
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        let proj = self.basis.mul(&m.select_rows(&self.pivot_rows));
        proj == *m
    }
}

pub(crate) fn rref_impl<A: Arith>(f: &A, d: &mut [A::E], rows: usize, cols: usize, pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    let mut prow: Vec<A::E> = Vec::with_capacity(cols);
    for c in 0..pivot_cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&d[i * cols + c])) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                d.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(&d[r * cols + c]);
        prow.clear();
        for j in 0..cols {
            let v = &d[r * cols + j];
            let nv = if j < c { v.clone() } else { f.mul(v, &inv) };
            prow.push(nv);
        }
        for j in c..cols {
            d[r * cols + j] = prow[j].clone();
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = d[i * cols + c].clone();
            if f.is_zero(&factor) {
                continue;
            }
            for j in c..cols {
                if f.is_zero(&prow[j]) {
                    continue;
                }
                let t = f.mul(&factor, &prow[j]);
                let cur = &mut d[i * cols + j];
                *cur = f.sub(cur, &t);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn matmul_impl<A: Arith>(f: &A, x: &[A::E], y: &[A::E], n: usize, k: usize, m: usize) -> Vec<A::E> {
    let mut out = vec![f.zero(); n * m];
    for i in 0..n {
        for l in 0..k {
            let a = &x[i * k + l];
            if f.is_zero(a) {
                continue;
            }
            let one = f.one();
            let is_one = *a == one;
            for j in 0..m {
                let b = &y[l * m + j];
                if f.is_zero(b) {
                    continue;
                }
                let cur = &mut out[i * m + j];
                *cur = if is_one {
                    f.add(cur, b)
                } else {
                    f.add(cur, &f.mul(a, b))
                };
            }
        }
    }
    out
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_vec(field: &Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Matrix, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Scalar>>) -> Result<Matrix, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Shape("ragged rows".into()));
        }
        Matrix::from_vec(field, r, c, rows.into_iter().flatten().collect())
    }

    /// Integer entries reduced into the field.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Matrix {
        let data = rows.iter().flat_map(|r| r.iter().map(|&x| field.from_int(x))).collect();
        let c = rows.first().map_or(0, |r| r.len());
        Matrix::from_vec(field, rows.len(), c, data).expect("rectangular input")
    }

    pub fn column_vector(field: &Field, v: Vec<Scalar>) -> Matrix {
        let n = v.len();
        Matrix::from_vec(field, n, 1, v).expect("length matches")
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    fn check_field(&self, other: &Matrix) -> Result<(), LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::FieldMismatch(self.field.name(), other.field.name()));
        }
        Ok(())
    }

    /// Matrix product. Panics on incompatible shapes or fields.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        assert!(self.field == other.field, "matrix product field mismatch");
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let data = with_arith!(self.field, f => {
            let x: Vec<_> = self.data.iter().map(|s| f.to_e(s)).collect();
            let y: Vec<_> = other.data.iter().map(|s| f.to_e(s)).collect();
            matmul_impl(f, &x, &y, n, k, m).into_iter().map(|e| f.from_e(e)).collect()
        });
        Matrix {
            field: self.field.clone(),
            rows: n,
            cols: m,
            data,
        }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let k = &self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = k.zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !k.is_zero(a) && !k.is_zero(x) {
                        acc = k.add(&acc, &k.mul(a, x));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix sum shape mismatch"
        );
        let k = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| k.add(a, b)).collect();
        Matrix {
            field: k.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "matrix difference shape mismatch"
        );
        let k = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| k.sub(a, b)).collect();
        Matrix {
            field: k.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let k = &self.field;
        Matrix {
            field: k.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| k.mul(a, c)).collect(),
        }
    }

    /// `self += c * other`, skipping zero work.
    pub fn add_scaled_assign(&mut self, c: &Scalar, other: &Matrix) {
        let k = self.field.clone();
        if k.is_zero(c) {
            return;
        }
        let one = k.is_one(c);
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if k.is_zero(b) {
                continue;
            }
            *a = if one { k.add(a, b) } else { k.add(a, &k.mul(c, b)) };
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(&self.field, self.rows)
    }

    /// Kronecker product with `e_i ⊗ f_j ↦ i·dim(b) + j`.
    pub fn kron(&self, b: &Matrix) -> Result<Matrix, LinalgError> {
        self.check_field(b)?;
        let (r, c) = (self.rows * b.rows, self.cols * b.cols);
        let k = &self.field;
        let mut out = Matrix::zeros(k, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if k.is_zero(a) {
                    continue;
                }
                let one = k.is_one(a);
                for p in 0..b.rows {
                    for q in 0..b.cols {
                        let x = b.get(p, q);
                        if k.is_zero(x) {
                            continue;
                        }
                        out.set(
                            i * b.rows + p,
                            j * b.cols + q,
                            if one { x.clone() } else { k.mul(a, x) },
                        );
                    }
                }
            }
        }
        Ok(out)
    }

    fn rref_with(&self, pivot_cols: usize) -> Rref {
        let (rows, cols) = (self.rows, self.cols);
        let (data, pivots) = with_arith!(self.field, f => {
            let mut d: Vec<_> = self.data.iter().map(|s| f.to_e(s)).collect();
            let piv = rref_impl(f, &mut d, rows, cols, pivot_cols);
            (d.into_iter().map(|e| f.from_e(e)).collect::<Vec<_>>(), piv)
        });
        Rref {
            matrix: Matrix {
                field: self.field.clone(),
                rows,
                cols,
                data,
            },
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rref(&self) -> Rref {
        self.rref_with(self.cols)
    }

    /// Rank without materializing the reduced matrix as scalars.
    pub fn rank(&self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        if rows == 0 || cols == 0 {
            return 0;
        }
        // eliminate on the shorter side
        if rows > cols {
            return self.transpose().rank();
        }
        with_arith!(self.field, f => {
            let mut d: Vec<_> = self.data.iter().map(|s| f.to_e(s)).collect();
            rref_impl(f, &mut d, rows, cols, cols).len()
        })
    }

    /// Basis of the null space as columns. The basis is the identity on the
    /// non-pivot (free) rows, listed by [`Matrix::kernel_free_rows`].
    pub fn kernel_basis(&self) -> Matrix {
        self.kernel_with_free_rows().0
    }

    pub fn kernel_free_rows(&self) -> Vec<usize> {
        self.kernel_with_free_rows().1
    }

    pub fn kernel_with_free_rows(&self) -> (Matrix, Vec<usize>) {
        let rr = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &rr.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let k = &self.field;
        let mut out = Matrix::zeros(k, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            out.set(fc, j, k.one());
            for (i, &pc) in rr.pivots.iter().enumerate() {
                let v = rr.matrix.get(i, fc);
                if !k.is_zero(v) {
                    out.set(pc, j, k.neg(v));
                }
            }
        }
        (out, free)
    }

    /// Solves `self · X = b`; `None` when inconsistent.
    pub fn solve_right(&self, b: &Matrix) -> Result<Option<Matrix>, LinalgError> {
        self.check_field(b)?;
        if self.rows != b.rows {
            return Err(LinalgError::Shape(format!(
                "{}x{} system with {}-row right-hand side",
                self.rows, self.cols, b.rows
            )));
        }
        let aug = self.hstack(b);
        let rr = aug.rref_with(self.cols);
        // inconsistent iff a zero row of the coefficient block has a nonzero rhs
        let k = &self.field;
        for i in rr.rank..self.rows {
            for j in 0..b.cols {
                if !k.is_zero(rr.matrix.get(i, self.cols + j)) {
                    return Ok(None);
                }
            }
        }
        let mut x = Matrix::zeros(k, self.cols, b.cols);
        for (i, &pc) in rr.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, rr.matrix.get(i, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve_right(&Matrix::identity(&self.field, self.rows)).ok()??;
        if self.mul(&x).is_identity() {
            Some(x)
        } else {
            None
        }
    }

    /// Reduced basis of the column space.
    pub fn column_basis(&self) -> ColumnBasis {
        let rr = self.transpose().rref();
        let basis = Matrix::from_fn(&self.field, self.rows, rr.rank, |i, j| rr.matrix.get(j, i).clone());
        ColumnBasis {
            basis,
            pivot_rows: rr.pivots,
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Matrix::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn hstack_all(field: &Field, rows: usize, parts: &[Matrix]) -> Matrix {
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.rows, rows, "hstack row mismatch");
            for i in 0..rows {
                for j in 0..m.cols {
                    out.set(i, off + j, m.get(i, j).clone());
                }
            }
            off += m.cols;
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn block_diag(field: &Field, blocks: &[&Matrix]) -> Matrix {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(field, r, c);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(ro + i, co + j, b.get(i, j).clone());
                }
            }
            ro += b.rows;
            co += b.cols;
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(&self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(&self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    /// Reinterprets the entries in a field containing this one's prime subfield.
    pub fn lift(&self, field: &Field) -> Result<Matrix, LinalgError> {
        if *field == self.field {
            return Ok(self.clone());
        }
        let data = self
            .data
            .iter()
            .map(|x| field.embed(&self.field, x))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| LinalgError::FieldMismatch(self.field.name(), field.name()))?;
        Ok(Matrix {
            field: field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.field.format(self.get(i, j))).collect())
            .collect()
    }

    pub fn from_strings(field: &Field, rows: &[Vec<String>]) -> Result<Matrix, crate::field::FieldError> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Matrix::from_rows(field, parsed).map_err(|e| crate::field::FieldError::Parse(e.to_string()))
    }

    /// Matrix power by repeated squaring.
    pub fn pow(&self, mut k: u32) -> Matrix {
        let mut acc = Matrix::identity(&self.field, self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }
}

/// Incrementally grown subspace of `k^n`, kept in semi-reduced echelon form.
#[derive(Clone)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            field: field.clone(),
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Remainder of `v` after reduction against the current basis.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let k = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p].clone();
            if k.is_zero(&c) {
                continue;
            }
            for (x, y) in v.iter_mut().zip(row) {
                if !k.is_zero(y) {
                    *x = k.sub(x, &k.mul(&c, y));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let k = self.field.clone();
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !k.is_zero(x)) else {
            return false;
        };
        let inv = k.inv(&r[p]).expect("nonzero pivot");
        let r: Vec<Scalar> = r.iter().map(|x| k.mul(x, &inv)).collect();
        self.rows.push(r);
        self.pivots.push(p);
        true
    }

    /// Basis vectors as the columns of a matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.ambient, self.rows.len(), |i, j| {
            self.rows[j][i].clone()
        })
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f2() -> Field {
        Field::prime(2).unwrap()
    }

    fn f5() -> Field {
        Field::prime(5).unwrap()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(&f2(), 3).rref().rank, 3);
        assert_eq!(Matrix::zeros(&f2(), 2, 5).rref().rank, 0);
        let q3 = Field::cyclotomic(3).unwrap();
        let z = q3.generator();
        let z2 = q3.mul(&z, &z);
        let m = Matrix::from_rows(&q3, vec![vec![q3.one(), z.clone()], vec![z2.clone(), q3.one()]]).unwrap();
        // row 2 = z^2 * row 1 since z^3 = 1
        assert_eq!(q3.mul(&z2, &z), q3.one());
        assert_eq!(m.rref().rank, 1);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::zeros(&f2(), 2, 2).kernel_basis().cols(), 2);
        assert_eq!(Matrix::identity(&f2(), 3).kernel_basis().cols(), 0);
        let x1 = Matrix::from_ints(&f2(), &[&[0, 0], &[1, 0]]);
        let k = x1.kernel_basis();
        assert_eq!(k, Matrix::from_ints(&f2(), &[&[0], &[1]]));
    }

    #[test]
    fn kron_examples() {
        let k = f2();
        assert_eq!(
            Matrix::identity(&k, 2).kron(&Matrix::identity(&k, 3)).unwrap(),
            Matrix::identity(&k, 6)
        );
        let a = Matrix::from_ints(&k, &[&[1, 1], &[0, 1]]);
        assert!(a.kron(&Matrix::zeros(&k, 2, 3)).unwrap().is_zero());
        let q = Field::cyclotomic(3).unwrap();
        assert!(matches!(
            a.kron(&Matrix::identity(&q, 1)),
            Err(LinalgError::FieldMismatch(..))
        ));
    }

    #[test]
    fn solve_examples() {
        let k = f2();
        let b = Matrix::from_ints(&k, &[&[1, 0], &[1, 1]]);
        assert_eq!(Matrix::identity(&k, 2).solve_right(&b).unwrap(), Some(b.clone()));
        assert_eq!(Matrix::zeros(&k, 2, 2).solve_right(&b).unwrap(), None);
        let a = Matrix::from_ints(&k, &[&[1, 1], &[0, 0]]);
        let rhs = Matrix::from_ints(&k, &[&[0], &[1]]);
        assert_eq!(a.solve_right(&rhs).unwrap(), None);
    }

    #[test]
    fn column_basis_coordinates() {
        let k = f5();
        let m = Matrix::from_ints(&k, &[&[1, 2, 3], &[2, 4, 1], &[0, 0, 1]]);
        let cb = m.column_basis();
        assert_eq!(cb.dim(), 2);
        assert!(cb.contains(&m));
        let back = cb.basis.mul(&cb.coordinates(&m));
        assert_eq!(back, m);
        let e = Matrix::column_vector(&k, vec![k.zero(), k.one(), k.zero()]);
        assert_eq!(cb.contains(&e), m.hstack(&e).rank() == 2);
    }

    #[test]
    fn subspace_matches_rank() {
        let k = f5();
        let m = Matrix::from_ints(&k, &[&[1, 2, 3, 4], &[2, 4, 1, 0], &[3, 1, 4, 4]]);
        let mut s = Subspace::new(&k, 4);
        for i in 0..3 {
            s.insert(&m.row(i));
        }
        assert_eq!(s.dim(), m.rank());
        for i in 0..3 {
            assert!(s.contains(&m.row(i)));
        }
    }

    fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(0i64..5, rows * cols).prop_map(move |v| {
            let k = Field::prime(5).unwrap();
            let data = v.into_iter().map(|x| k.from_int(x)).collect();
            Matrix::from_vec(&k, rows, cols, data).unwrap()
        })
    }

    proptest! {
        #[test]
        fn rank_nullity_and_transpose(m in arb_matrix(4, 6)) {
            let rr = m.rref();
            prop_assert_eq!(rr.rank, m.transpose().rank());
            let k = m.kernel_basis();
            prop_assert_eq!(k.cols() + rr.rank, m.cols());
            prop_assert!(m.mul(&k).is_zero());
            prop_assert_eq!(k.rank(), k.cols());
            let again = rr.matrix.rref();
            prop_assert_eq!(again.matrix, rr.matrix);
        }

        #[test]
        fn kron_rank_is_multiplicative(a in arb_matrix(3, 3), b in arb_matrix(3, 3)) {
            prop_assert_eq!(a.kron(&b).unwrap().rank(), a.rank() * b.rank());
        }

        #[test]
        fn kron_is_associative(a in arb_matrix(2, 2), b in arb_matrix(2, 3), c in arb_matrix(2, 1)) {
            let l = a.kron(&b).unwrap().kron(&c).unwrap();
            let r = a.kron(&b.kron(&c).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }

        #[test]
        fn product_rank_bound(a in arb_matrix(3, 4), b in arb_matrix(4, 3)) {
            let r = a.mul(&b).rank();
            prop_assert!(r <= a.rank().min(b.rank()));
        }

        #[test]
        fn solve_agrees_with_rank_test(a in arb_matrix(3, 3), b in arb_matrix(3, 1)) {
            let solvable = a.rank() == a.hstack(&b).rank();
            match a.solve_right(&b).unwrap() {
                Some(x) => { prop_assert!(solvable); prop_assert_eq!(a.mul(&x), b); }
                None => prop_assert!(!solvable),
            }
        }
    }
}
