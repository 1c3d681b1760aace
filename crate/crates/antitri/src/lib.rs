//! Exact rational linear algebra for anti-triangular matrices whose
//! eigenvalues are read off the anti-diagonal: Pascal conjugation,
//! measure-mixture constructions, Hausdorff moment tests, uniqueness
//! certificates, and the spectral conditions for three-site particle-system
//! matrices.
//!
//! All arithmetic is exact; the core is generic over a num-traits scalar and
//! is used throughout with the arbitrary-precision rational alias [`Rat`].

pub mod charpoly;
pub mod eigenprop;
mod error;
pub mod io;
pub mod matrix;
pub mod moments;
pub mod particle;
pub mod pascal;
pub mod poly;
pub mod repro;
pub mod scalar;
pub mod sturm;

pub use charpoly::char_poly;
pub use error::{Error, Result};
pub use matrix::{Matrix, Triangular};
pub use pascal::Spectrum;
pub use poly::Polynomial;
pub use scalar::{Rat, Scalar};

/// Concrete matrix over the exact rational base field.
pub type Mat = Matrix<Rat>;
/// Concrete lower triangular matrix over the exact rational base field.
pub type Tri = Triangular<Rat>;
/// Concrete polynomial over the exact rational base field.
pub type Poly = Polynomial<Rat>;
/// Concrete spectrum over the exact rational base field.
pub type Spec = Spectrum<Rat>;
