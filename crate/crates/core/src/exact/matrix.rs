use std::fmt;

use thiserror::Error;

use super::{QComplex, Radical, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("direct sum of an empty sequence")]
    EmptyDirectSum,
    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    Dimension(usize, usize, usize, usize),
    #[error("matrix is singular")]
    Singular,
}

/// Dense row-major matrix over an exact ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Matrices over the Gaussian rationals.
pub type CMatrix = Matrix<QComplex>;
/// Matrices whose entries may carry square roots.
pub type RMatrix = Matrix<Radical>;

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.set(k, k, T::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(MatrixError::Dimension(r, c, 1, bad.len()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (k, e) in entries.into_iter().enumerate() {
            m.set(k, k, e);
        }
        m
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

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        let cols = self.cols;
        self.data.iter().enumerate().map(move |(k, v)| (k / cols, k % cols, v))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|v| s.mul_ref(v))
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::neg_ref)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn conj(&self) -> Self {
        self.map(Ring::conj)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, k| acc.add_ref(self.get(k, k)))
    }

    fn same_shape(&self, o: &Self) -> Result<(), MatrixError> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(MatrixError::Dimension(self.rows, self.cols, o.rows, o.cols));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, MatrixError> {
        self.same_shape(o)?;
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.add_ref(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, MatrixError> {
        self.same_shape(o)?;
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.sub_ref(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, MatrixError> {
        if self.cols != o.rows {
            return Err(MatrixError::Dimension(self.rows, self.cols, o.rows, o.cols));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = o.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * o.cols + c;
                    out.data[idx] = out.data[idx].add_ref(&a.mul_ref(b));
                }
            }
        }
        Ok(out)
    }

    /// Sum of matrices of one shape. Panics on mismatch; callers build operands of one shape.
    pub fn add(&self, o: &Self) -> Self {
        self.try_add(o).expect("matrix add shape")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.try_sub(o).expect("matrix sub shape")
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.try_mul(o).expect("matrix mul shape")
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, o: &Self) -> Result<Self, MatrixError> {
        self.try_mul(o)?.try_sub(&o.try_mul(self)?)
    }

    pub fn kron(&self, o: &Self) -> Self {
        Self::from_fn(self.rows * o.rows, self.cols * o.cols, |r, c| {
            self.get(r / o.rows, c / o.cols).mul_ref(o.get(r % o.rows, c % o.cols))
        })
    }

    pub fn direct_sum(blocks: &[Self]) -> Result<Self, MatrixError> {
        if blocks.is_empty() {
            return Err(MatrixError::EmptyDirectSum);
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for (r, c, v) in b.entries() {
                out.set(r0 + r, c0 + c, v.clone());
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        Ok(out)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }

    /// True when `self == s·I` for a scalar `s`.
    pub fn is_scalar_multiple_of_identity(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let d = self.get(0, 0);
        self.entries().all(|(r, c, v)| if r == c { v == d } else { v.is_zero() })
    }
}

impl CMatrix {
    /// Gauss-Jordan inverse over `Q(i)`.
    pub fn inverse(&self) -> Result<CMatrix, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::Dimension(self.rows, self.cols, self.cols, self.rows));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = CMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero()).ok_or(MatrixError::Singular)?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a.get(col, col).inv().ok_or(MatrixError::Singular)?;
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                a.axpy_row(r, col, &f);
                inv.axpy_row(r, col, &f);
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &QComplex) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            self.data[idx] = &self.data[idx] * s;
        }
    }

    // row[r] -= f * row[src]
    fn axpy_row(&mut self, r: usize, src: usize, f: &QComplex) {
        for c in 0..self.cols {
            let delta = f * self.get(src, c);
            let idx = r * self.cols + c;
            self.data[idx] = &self.data[idx] - &delta;
        }
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(QComplex::is_real)
    }

    pub fn is_imaginary(&self) -> bool {
        self.data.iter().all(QComplex::is_imaginary)
    }

    pub fn from_ints(rows: &[&[i64]]) -> CMatrix {
        CMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| QComplex::from_int(v)).collect()).collect())
            .expect("ragged integer literal")
    }
}

impl RMatrix {
    /// Drops to `Q(i)` when every entry is free of radicals.
    pub fn to_cmatrix(&self) -> Option<CMatrix> {
        let data = self.data.iter().map(Radical::to_qcomplex).collect::<Option<Vec<_>>>()?;
        Some(Matrix { rows: self.rows, cols: self.cols, data })
    }
}

impl From<&CMatrix> for RMatrix {
    fn from(m: &CMatrix) -> Self {
        m.map(|q| Radical::from_q(q.clone()))
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<T: Ring + fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{}", self.rows, self.cols, self)
    }
}
