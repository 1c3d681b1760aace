//! Exact characteristic polynomials via the Faddeev-LeVerrier recurrence.

use crate::matrix::Matrix;
use crate::poly::Polynomial;
use crate::scalar::{int, Scalar};

/// Monic characteristic polynomial det(lambda I - m), degree = dimension.
///
/// Faddeev-LeVerrier: M_0 = I, c_n = 1, and for k = 1..n
/// M_k = A M_{k-1} + c_{n-k+1} I adjustments folded in as
/// M <- A M, c_{n-k} = -tr(M)/k, M <- M + c_{n-k} I.
pub fn char_poly<S: Scalar>(m: &Matrix<S>) -> Polynomial<S> {
    let n = m.dim();
    let mut coeffs = vec![S::zero(); n + 1];
    coeffs[n] = S::one();
    let mut acc = Matrix::identity(n);
    for k in 1..=n {
        acc = m.mul(&acc);
        let c = -(acc.trace() / int::<S>(k as i64));
        coeffs[n - k] = c.clone();
        for i in 0..n {
            acc.set(i, i, acc.get(i, i).clone() + c.clone());
        }
    }
    Polynomial::new(coeffs)
}
