//! Dense square matrices over an exact scalar.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense square matrix of size `n x n`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    /// Build from explicit rows; all rows must have the same length as the
    /// row count and the matrix must be nonempty.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::PreconditionViolated("empty matrix".into()));
        }
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::PreconditionViolated(format!(
                    "row length {} != dimension {}",
                    row.len(),
                    n
                )));
            }
            data.extend(row);
        }
        Ok(Self { n, data })
    }

    /// Build from an entry function.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        assert!(n >= 1, "dimension must be at least 1");
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Self { n, data }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn zeros(n: usize) -> Self {
        Self::from_fn(n, |_, _| S::zero())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        (0..self.n).map(move |i| self.row(i))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        Self::from_fn(n, |i, j| {
            let mut acc = S::zero();
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = other.get(k, j);
                if b.is_zero() {
                    continue;
                }
                acc = acc + a.clone() * b.clone();
            }
            acc
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        Self::from_fn(self.n, |i, j| self.get(i, j).clone() + other.get(i, j).clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        Self::from_fn(self.n, |i, j| self.get(i, j).clone() - other.get(i, j).clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_fn(self.n, |i, j| c.clone() * self.get(i, j).clone())
    }

    pub fn trace(&self) -> S {
        let mut acc = S::zero();
        for i in 0..self.n {
            acc = acc + self.get(i, i).clone();
        }
        acc
    }

    pub fn diagonal(&self) -> Vec<S> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Exact inverse of a lower triangular matrix by forward substitution.
    pub fn triangular_inverse(&self) -> Result<Self> {
        if !self.is_lower_triangular() {
            return Err(Error::NotTriangular);
        }
        if (0..self.n).any(|i| self.get(i, i).is_zero()) {
            return Err(Error::SingularMatrix);
        }
        let n = self.n;
        let mut inv: Matrix<S> = Matrix::zeros(n);
        // Solve L * col_j = e_j column by column.
        for j in 0..n {
            for i in j..n {
                let mut rhs = if i == j { S::one() } else { S::zero() };
                for k in j..i {
                    rhs = rhs - self.get(i, k).clone() * inv.get(k, j).clone();
                }
                inv.set(i, j, rhs / self.get(i, i).clone());
            }
        }
        Ok(inv)
    }

    /// Exact determinant by Gaussian elimination over the scalar field.
    pub fn determinant(&self) -> S {
        let rows: Vec<Vec<S>> = self.rows().map(|r| r.to_vec()).collect();
        det_rows(rows)
    }
}

/// Determinant of a square row list by exact Gaussian elimination.
pub fn det_rows<S: Scalar>(mut rows: Vec<Vec<S>>) -> S {
    let n = rows.len();
    let mut det = S::one();
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !rows[r][col].is_zero()) {
            Some(p) => p,
            None => return S::zero(),
        };
        if pivot != col {
            rows.swap(pivot, col);
            det = -det;
        }
        let p = rows[col][col].clone();
        det = det * p.clone();
        for r in col + 1..n {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone() / p.clone();
            for c in col..n {
                let sub = factor.clone() * rows[col][c].clone();
                rows[r][c] = rows[r][c].clone() - sub;
            }
        }
    }
    det
}

/// Rank of an arbitrary rectangular row list by exact Gaussian elimination.
pub fn rank_rows<S: Scalar>(mut rows: Vec<Vec<S>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let m = rows[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows.len() && col < m {
        match (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) {
            None => {
                col += 1;
                continue;
            }
            Some(p) => {
                rows.swap(p, rank);
                let pivot = rows[rank][col].clone();
                for r in rank + 1..rows.len() {
                    if rows[r][col].is_zero() {
                        continue;
                    }
                    let factor = rows[r][col].clone() / pivot.clone();
                    for c in col..m {
                        let sub = factor.clone() * rows[rank][c].clone();
                        rows[r][c] = rows[r][c].clone() - sub;
                    }
                }
                rank += 1;
                col += 1;
            }
        }
    }
    rank
}

/// Basis of the nullspace of the homogeneous system `rows * x = 0`, where
/// each row has `unknowns` entries. Returned vectors are exact.
pub fn nullspace_rows<S: Scalar>(rows: Vec<Vec<S>>, unknowns: usize) -> Vec<Vec<S>> {
    // Reduced row echelon form.
    let mut mat: Vec<Vec<S>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..unknowns {
        let pivot = match (rank..mat.len()).find(|&r| !mat[r][col].is_zero()) {
            Some(p) => p,
            None => continue,
        };
        mat.swap(pivot, rank);
        let p = mat[rank][col].clone();
        for c in 0..unknowns {
            mat[rank][c] = mat[rank][c].clone() / p.clone();
        }
        for r in 0..mat.len() {
            if r != rank && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for c in 0..unknowns {
                    let sub = factor.clone() * mat[rank][c].clone();
                    mat[r][c] = mat[r][c].clone() - sub;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let free: Vec<usize> = (0..unknowns).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &f in &free {
        let mut v = vec![S::zero(); unknowns];
        v[f] = S::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -mat[r][f].clone();
        }
        basis.push(v);
    }
    basis
}

/// Lower triangular matrix: entries above the diagonal are all zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangular<S>(Matrix<S>);

impl<S: Scalar> Triangular<S> {
    pub fn new(m: Matrix<S>) -> Result<Self> {
        if m.is_lower_triangular() {
            Ok(Self(m))
        } else {
            Err(Error::NotTriangular)
        }
    }

    /// Build from an entry function; values above the diagonal are ignored.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        Self(Matrix::from_fn(n, |i, j| if j <= i { f(i, j) } else { S::zero() }))
    }

    pub fn as_matrix(&self) -> &Matrix<S> {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix<S> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        self.0.get(i, j)
    }

    pub fn diagonal(&self) -> Vec<S> {
        self.0.diagonal()
    }

    /// Leading principal submatrix of size `m + 1`.
    pub fn leading(&self, m: usize) -> Self {
        assert!(m < self.dim());
        Self(Matrix::from_fn(m + 1, |i, j| self.get(i, j).clone()))
    }

    /// Row-reversal symmetry x_{i,i-j} = x_{i,j} for all i >= j.
    pub fn is_row_reversal_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..=i).all(|j| self.get(i, j) == self.get(i, i - j)))
    }
}
