//! Real-root counting for exact polynomials via Sturm sequences.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Interval endpoint: a finite rational or an infinity.
#[derive(Debug, Clone, PartialEq)]
pub enum Bound<S> {
    NegInf,
    Finite(S),
    PosInf,
}

impl<S: Scalar> Bound<S> {
    fn lt(&self, other: &Bound<S>) -> bool {
        match (self, other) {
            (Bound::NegInf, Bound::NegInf) | (Bound::PosInf, Bound::PosInf) => false,
            (Bound::NegInf, _) | (_, Bound::PosInf) => true,
            (Bound::PosInf, _) | (_, Bound::NegInf) => false,
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
        }
    }
}

fn sign<S: Scalar>(x: &S) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Signed-remainder chain p, p', -rem(...), each term rescaled by the
/// absolute value of its leading coefficient to bound coefficient growth.
fn sturm_chain<S: Scalar>(p: &Polynomial<S>) -> Vec<Polynomial<S>> {
    let mut chain = vec![p.normalize_positive()];
    let dp = p.derivative();
    if dp.is_zero() {
        return chain;
    }
    chain.push(dp.normalize_positive());
    loop {
        let k = chain.len();
        let r = chain[k - 2].rem(&chain[k - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg().normalize_positive());
    }
    chain
}

/// Sign of p at an extended point: at +/-infinity the leading term decides.
fn sign_at<S: Scalar>(p: &Polynomial<S>, x: &Bound<S>) -> i8 {
    match x {
        Bound::Finite(v) => sign(&p.eval(v)),
        Bound::PosInf => p.leading_coeff().map_or(0, sign),
        Bound::NegInf => match (p.degree(), p.leading_coeff()) {
            (Some(d), Some(lc)) => {
                let s = sign(lc);
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
            _ => 0,
        },
    }
}

/// Sign variations of the chain at a point, zeros skipped. With zeros
/// skipped, the count at a root of p equals the count just to its right,
/// so differences count roots in half-open intervals (lo, hi].
fn variations<S: Scalar>(chain: &[Polynomial<S>], x: &Bound<S>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in chain {
        let s = sign_at(p, x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of `p` in the half-open interval (lo, hi].
pub fn sturm_count<S: Scalar>(p: &Polynomial<S>, lo: &Bound<S>, hi: &Bound<S>) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !lo.lt(hi) {
        return Err(Error::PreconditionViolated("need lo < hi".into()));
    }
    if p.is_constant() {
        return Ok(0);
    }
    // Distinct roots only: work with the squarefree part.
    let sf = squarefree_part(p)?;
    let chain = sturm_chain(&sf);
    Ok(variations(&chain, lo) - variations(&chain, hi))
}

/// Number of distinct real roots of `p` over the whole line.
pub fn distinct_real_roots<S: Scalar>(p: &Polynomial<S>) -> Result<usize> {
    sturm_count(p, &Bound::NegInf, &Bound::PosInf)
}

/// True iff gcd(p, p') is constant, i.e. `p` has no repeated root.
pub fn squarefree_check<S: Scalar>(p: &Polynomial<S>) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(p.gcd(&p.derivative()).is_constant())
}

/// p divided by gcd(p, p'): same roots, all simple.
pub fn squarefree_part<S: Scalar>(p: &Polynomial<S>) -> Result<Polynomial<S>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(p.clone());
    }
    let g = p.gcd(&p.derivative());
    Ok(p.divmod(&g).0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio, Rat};
    use num_traits::Zero;

    fn factored(roots: &[Rat]) -> Polynomial<Rat> {
        Polynomial::from_roots(roots)
    }

    #[test]
    fn roots_plus_minus_one() {
        // x^2 - 1 on (-inf, 0] -> 1
        let p = Polynomial::new(vec![int::<Rat>(-1), int(0), int(1)]);
        assert_eq!(
            sturm_count(&p, &Bound::NegInf, &Bound::Finite(int(0))).unwrap(),
            1
        );
        assert_eq!(distinct_real_roots(&p).unwrap(), 2);
    }

    #[test]
    fn half_open_boundary() {
        // roots 1, -1/2, 1/3 known exactly from the factored form
        let p = factored(&[int(1), ratio(-1, 2), ratio(1, 3)]);
        let half = Bound::Finite(ratio(-1, 2));
        assert_eq!(sturm_count(&p, &Bound::NegInf, &half).unwrap(), 1);
        // open interval (-inf, -1/2): subtract the endpoint root
        let at_end = if p.eval(&ratio(-1, 2)).is_zero() { 1 } else { 0 };
        assert_eq!(sturm_count(&p, &Bound::NegInf, &half).unwrap() - at_end, 0);
    }

    #[test]
    fn squarefree_examples() {
        let distinct = factored(&[int(1), ratio(-1, 2)]);
        assert!(squarefree_check(&distinct).unwrap());
        let repeated = factored(&[int(1), int(1)]);
        assert!(!squarefree_check(&repeated).unwrap());
        // gcd(x^3 - x, 3x^2 - 1) is constant
        let p = Polynomial::new(vec![int::<Rat>(0), int(-1), int(0), int(1)]);
        assert!(squarefree_check(&p).unwrap());
    }

    #[test]
    fn repeated_roots_counted_once() {
        let p = factored(&[int(2), int(2), int(-3)]);
        assert_eq!(distinct_real_roots(&p).unwrap(), 2);
    }

    #[test]
    fn zero_polynomial_rejected() {
        let z = Polynomial::<Rat>::zero();
        assert_eq!(distinct_real_roots(&z), Err(Error::ZeroPolynomial));
        assert_eq!(squarefree_check(&z), Err(Error::ZeroPolynomial));
    }
}
