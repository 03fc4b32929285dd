//! Skew tableaux, the word action of the symmetric group, charge, and the
//! coefficients `D_{ΛΩ}(t)` of the dual m-symmetric Schur functions.
//!
//! Letters are `i32`: `i > 0` is the ordinary letter `i`, `-i` is the barred
//! letter `ī`. The natural integer order then gives `1 < 2 < …` and
//! `1̄ > 2̄ > …`, so one validator serves both alphabets.

mod dcoeff;
mod enumerate;
mod shape;
mod word;

pub use dcoeff::{DTable, D_coeff};
pub use enumerate::{bij_b, enumerate_S, enumerate_Sbar, enumerate_ssyt};
pub use shape::{Alphabet, SkewShape, SkewTableau};
pub use word::{charge, charge_ab, charge_barred, charge_with, format_word, parse_word, sigma_action, sigma_bar, Reduction};

#[cfg(test)]
mod tests;
