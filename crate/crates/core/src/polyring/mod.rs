//! Sparse polynomials in `x_1..x_N` and the Hecke-algebra operators acting on them.

mod ops;
mod xpoly;

pub use ops::{
    cherednik_Y, divide_by_difference, eigen_D, hecke_T, hecke_T_inverse, omega, phi_q, psi_N, restrict,
    symmetrize,
};
pub use xpoly::{Exponent, XPolynomial};
