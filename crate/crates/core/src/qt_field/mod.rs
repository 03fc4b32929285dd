//! Exact arithmetic in ℤ[q,t], ℚ(q,t) and ℚ[t, t⁻¹].

mod gcd;
mod laurent;
mod poly;
mod scalar;
mod text;

pub use gcd::gcd as gcd_bivariate;
pub use laurent::TLaurent;
pub use poly::QTPoly;
pub use scalar::QTScalar;
