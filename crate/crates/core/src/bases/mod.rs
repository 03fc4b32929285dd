//! Bases of m-symmetric functions and the conversions between them.
//!
//! Every expansion lives in one graded piece `R_m^d`. The `k` basis is the
//! canonical internal form: each other basis is related to it by a per-block
//! transition matrix, computed once at `N = m + d` variables.

mod block;
mod expansion;
mod ops;

pub use block::{monomial_coeffs, schur_poly, BasisBlock, BasisCache};
pub use expansion::{Basis, BasisExpansion};
pub use ops::{
    convert, from_monomials, include, inclusion_terms, plethysm, restrict_expansion, scalar_product, schur, schur_star, t_action,
    t_star, to_monomials, Direction,
};
