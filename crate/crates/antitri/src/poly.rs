//! Univariate polynomials over an exact scalar, ascending coefficient order.

use crate::scalar::{int, Scalar};

/// Polynomial with coefficients in ascending degree order. The zero
/// polynomial has an empty coefficient list; otherwise the leading
/// coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Self::new(vec![S::zero(), S::one()])
    }

    /// x - r.
    pub fn linear_root(r: S) -> Self {
        Self::new(vec![-r, S::one()])
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> S {
        self.coeffs.get(k).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &S) -> S {
        let mut acc = S::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| int::<S>(k as i64) * c.clone())
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Euclidean division: returns (quotient, remainder).
    pub fn divmod(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let d = divisor.degree().unwrap();
        let lead = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![S::zero(); rem.len() - d];
        for k in (d..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = rem[k].clone() / lead.clone();
            quot[k - d] = q.clone();
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k - d + j] = rem[k - d + j].clone() - q.clone() * b.clone();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divmod(divisor).1
    }

    /// Divide by the absolute value of the leading coefficient. Preserves
    /// signs everywhere, keeps remainder chains from blowing up.
    pub fn normalize_positive(&self) -> Self {
        match self.leading_coeff() {
            None => Self::zero(),
            Some(lc) => {
                let a = lc.abs();
                Self::new(self.coeffs.iter().map(|c| c.clone() / a.clone()).collect())
            }
        }
    }

    /// Monic multiple of gcd(self, other) by the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).normalize_positive();
            a = b;
            b = r;
        }
        match a.leading_coeff() {
            None => a,
            Some(lc) => {
                let lc = lc.clone();
                Self::new(a.coeffs.iter().map(|c| c.clone() / lc.clone()).collect())
            }
        }
    }

    /// Product of (x - r) over the given values.
    pub fn from_roots(roots: &[S]) -> Self {
        let mut acc = Self::constant(S::one());
        for r in roots {
            acc = acc.mul(&Self::linear_root(r.clone()));
        }
        acc
    }

    /// Apply a matrix-valued argument: p(M) with exact arithmetic.
    pub fn eval_matrix(&self, m: &crate::matrix::Matrix<S>) -> crate::matrix::Matrix<S> {
        let n = m.dim();
        let mut acc = crate::matrix::Matrix::zeros(n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                acc.set(i, i, acc.get(i, i).clone() + c.clone());
            }
        }
        acc
    }
}

/// Lagrange interpolation through exact sample points with distinct nodes.
pub fn interpolate<S: Scalar>(points: &[(S, S)]) -> Polynomial<S> {
    let mut acc = Polynomial::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = Polynomial::constant(S::one());
        let mut denom = S::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&Polynomial::linear_root(xj.clone()));
            denom = denom * (xi.clone() - xj.clone());
        }
        acc = acc.add(&basis.scale(&(yi.clone() / denom)));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio, Rat};

    fn p(coeffs: &[i64]) -> Polynomial<Rat> {
        Polynomial::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn arithmetic_and_eval() {
        let a = p(&[1, 2, 1]); // (x+1)^2
        let b = p(&[-1, 1]); // x-1
        assert_eq!(a.mul(&b), p(&[-1, -1, 1, 1]));
        assert_eq!(a.eval(&int(2)), int::<Rat>(9));
        assert_eq!(a.derivative(), p(&[2, 2]));
    }

    #[test]
    fn division_invariant() {
        let a = p(&[3, 0, -2, 1, 4]);
        let b = p(&[1, 2, 1]);
        let (q, r) = a.divmod(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < b.degree().unwrap());
    }

    #[test]
    fn gcd_of_shared_factor() {
        let a = p(&[-1, 1]).mul(&p(&[-2, 1]));
        let b = p(&[-1, 1]).mul(&p(&[3, 1]));
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let target = Polynomial::new(vec![ratio::<Rat>(1, 2), int(-3), int(1)]);
        let pts: Vec<(Rat, Rat)> = (0..3).map(|k| (int(k), target.eval(&int(k)))).collect();
        assert_eq!(interpolate(&pts), target);
    }
}
