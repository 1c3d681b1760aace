//! Scalar abstraction for the exact linear algebra core.
//!
//! All core math is generic over [`Scalar`], a num-traits bundle that any
//! field-like numeric type satisfies. The crate is meant to be used with the
//! arbitrary-precision rational alias [`Rat`]; every identity checked here is
//! exact over that type.

use num_traits::{FromPrimitive, Num, Signed};

/// Arbitrary-precision rational number, the base field for all computation.
///
/// Canonical form (reduced fraction, positive denominator) is maintained by
/// `num-rational` on every operation.
pub type Rat = num_rational::BigRational;

/// Numeric bundle the core algorithms require: field arithmetic, signs,
/// ordering, and conversion from machine integers.
pub trait Scalar:
    Num + Signed + FromPrimitive + PartialOrd + Clone + std::fmt::Debug + std::fmt::Display
{
}

impl<T> Scalar for T where
    T: Num + Signed + FromPrimitive + PartialOrd + Clone + std::fmt::Debug + std::fmt::Display
{
}

/// Shorthand for embedding a machine integer into the scalar type.
pub fn int<S: Scalar>(k: i64) -> S {
    S::from_i64(k).expect("integer embeds into scalar")
}

/// The fraction p/q in the scalar type.
pub fn ratio<S: Scalar>(p: i64, q: i64) -> S {
    assert!(q != 0, "zero denominator");
    int::<S>(p) / int::<S>(q)
}

/// Binomial coefficient C(n, k) as a scalar, computed by the exact product
/// formula. Returns zero when k > n.
pub fn binomial<S: Scalar>(n: usize, k: usize) -> S {
    if k > n {
        return S::zero();
    }
    let k = k.min(n - k);
    let mut acc = S::one();
    for i in 0..k {
        acc = acc * int::<S>((n - i) as i64) / int::<S>((i + 1) as i64);
    }
    acc
}

/// Rising factorial (t)_i = t(t+1)...(t+i-1).
pub fn rising_factorial<S: Scalar>(t: &S, i: usize) -> S {
    let mut acc = S::one();
    for k in 0..i {
        acc = acc * (t.clone() + int::<S>(k as i64));
    }
    acc
}

/// Parse a rational from the "p/q" text form (q omitted when 1).
pub fn parse_rat(s: &str) -> Result<Rat, crate::Error> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| crate::Error::Parse(format!("bad rational {s:?}: {e}")))
}

/// Render a rational in the canonical "p/q" text form (q omitted when 1).
pub fn rat_to_string(r: &Rat) -> String {
    r.to_string()
}
