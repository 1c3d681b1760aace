//! Pascal conjugation structure: the anti-identity G, the Pascal matrix P,
//! Q = P^{-1} G P, the spectrum/matrix maps, V_P membership, and the
//! finite-difference reconstruction.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Triangular};
use crate::scalar::{binomial, Scalar};

/// Prescribed signed-diagonal eigenvalue sequence (lambda_0, ..., lambda_n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum<S>(Vec<S>);

impl<S: Scalar> Spectrum<S> {
    pub fn new(values: Vec<S>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::PreconditionViolated("empty spectrum".into()));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[S] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Top index n (length is n + 1).
    pub fn top_index(&self) -> usize {
        self.0.len() - 1
    }

    /// diag(lambda_0, ..., lambda_n).
    pub fn diag_matrix(&self) -> Matrix<S> {
        let v = &self.0;
        Matrix::from_fn(v.len(), |i, j| if i == j { v[i].clone() } else { S::zero() })
    }

    /// The claimed anti-diagonal eigenvalues (-1)^i lambda_i.
    pub fn signed_values(&self) -> Vec<S> {
        self.0
            .iter()
            .enumerate()
            .map(|(i, v)| if i % 2 == 0 { v.clone() } else { -v.clone() })
            .collect()
    }
}

/// The anti-diagonal matrix G of size (n+1): entries 1 at (i, n-i). Self-inverse.
pub fn anti_identity<S: Scalar>(n: usize) -> Matrix<S> {
    Matrix::from_fn(n + 1, |i, j| if i + j == n { S::one() } else { S::zero() })
}

/// Lower triangular Pascal matrix, entries C(i, j).
pub fn pascal<S: Scalar>(n: usize) -> Triangular<S> {
    Triangular::from_fn(n + 1, |i, j| binomial(i, j))
}

/// Closed-form inverse of the Pascal matrix, entries (-1)^{i-j} C(i, j).
pub fn pascal_inverse<S: Scalar>(n: usize) -> Triangular<S> {
    Triangular::from_fn(n + 1, |i, j| {
        let b: S = binomial(i, j);
        if (i - j) % 2 == 0 {
            b
        } else {
            -b
        }
    })
}

/// Q = P^{-1} G P in closed form: Q_{ij} = (-1)^i C(n-i, j-i) for j >= i.
pub fn conjugate_q<S: Scalar>(n: usize) -> Matrix<S> {
    Matrix::from_fn(n + 1, |i, j| {
        if j < i {
            return S::zero();
        }
        let b: S = binomial(n - i, j - i);
        if i % 2 == 0 {
            b
        } else {
            -b
        }
    })
}

/// The map Pi: lambda -> P diag(lambda) P^{-1}; lower triangular with
/// diagonal lambda.
pub fn pi_map<S: Scalar>(lambda: &Spectrum<S>) -> Triangular<S> {
    let n = lambda.top_index();
    let p = pascal::<S>(n);
    let pinv = pascal_inverse::<S>(n);
    let product = p
        .as_matrix()
        .mul(&lambda.diag_matrix())
        .mul(pinv.as_matrix());
    Triangular::new(product).expect("P D P^{-1} is lower triangular")
}

/// The map Phi: the diagonal of a triangular matrix, in order.
pub fn phi_map<S: Scalar>(x: &Triangular<S>) -> Spectrum<S> {
    Spectrum::new(x.diagonal()).expect("matrix dimension is at least 1")
}

/// True iff P^{-1} x P is diagonal (exact check of all off-diagonal entries).
pub fn vp_membership<S: Scalar>(x: &Triangular<S>) -> bool {
    let n = x.dim() - 1;
    let conj = pascal_inverse::<S>(n)
        .as_matrix()
        .mul(x.as_matrix())
        .mul(pascal::<S>(n).as_matrix());
    conj.is_diagonal()
}

/// Independent reconstruction of Pi(lambda) by finite differences:
/// x_{ij} = C(i,j) (-1)^{i-j} (Delta^{i-j} lambda)_j.
pub fn reconstruct_by_differences<S: Scalar>(lambda: &Spectrum<S>) -> Triangular<S> {
    // Difference table: table[d][j] = (Delta^d lambda)_j.
    let n = lambda.top_index();
    let mut table: Vec<Vec<S>> = vec![lambda.values().to_vec()];
    for d in 1..=n {
        let prev = &table[d - 1];
        let next: Vec<S> = (0..prev.len() - 1)
            .map(|j| prev[j + 1].clone() - prev[j].clone())
            .collect();
        table.push(next);
    }
    Triangular::from_fn(n + 1, |i, j| {
        let d = i - j;
        let v = binomial::<S>(i, j) * table[d][j].clone();
        if d % 2 == 0 {
            v
        } else {
            -v
        }
    })
}
