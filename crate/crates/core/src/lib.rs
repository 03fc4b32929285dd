//! Exact computation with non-symmetric and m-symmetric Macdonald
//! polynomials, m-symmetric Schur functions and generalized (q,t)-Kostka
//! coefficients.
//!
//! All arithmetic is exact. Coefficients live in ℚ(q,t) ([`QTScalar`]);
//! polynomial operators are generic over any [`Coeff`] field so the same
//! code can also run at numeric values of `q` and `t`.

pub mod bases;
pub mod coeff;
pub mod combinatorics;
pub mod error;
pub mod kostka;
pub mod linalg;
pub mod macdonald;
pub mod polyring;
pub mod qt_field;
pub mod tableaux;

pub use coeff::{Coeff, Params};
pub use combinatorics::{Composition, MPartition, Partition};
pub use error::{Error, Result};
pub use qt_field::{QTPoly, QTScalar, TLaurent};

/// Polynomial in `x_1..x_N` over ℚ(q,t).
pub type QtPolynomial = polyring::XPolynomial<QTScalar>;
/// Polynomial in `x_1..x_N` over ℚ, for numeric `q`, `t`.
pub type RatPolynomial = polyring::XPolynomial<num_rational::BigRational>;
