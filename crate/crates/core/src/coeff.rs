//! Coefficient fields for polynomial arithmetic.
//!
//! Operators on [`XPolynomial`](crate::polyring::XPolynomial) are written
//! once over any exact field implementing [`Coeff`]. The symbolic field
//! ℚ(q,t) is the main instance; ℚ with numeric `q`, `t` is used for fast
//! spot checks of the same code paths.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{domain, Result};
use crate::qt_field::{QTPoly, QTScalar, TLaurent};

pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + Zero + One + 'static {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn checked_div(&self, rhs: &Self) -> Result<Self>;
    fn from_rational(r: &BigRational) -> Self;

    fn from_i64(c: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(c)))
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.add_ref(rhs);
    }

    /// Integer power, negative exponents allowed for non-zero bases.
    fn powi(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { Self::one().checked_div(self)? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul_ref(&base);
        }
        Ok(acc)
    }
}

impl Coeff for QTScalar {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        QTScalar::neg_ref(self)
    }
    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        QTScalar::checked_div(self, rhs)
    }
    fn from_rational(r: &BigRational) -> Self {
        QTScalar::from_rational(r)
    }
    fn powi(&self, e: i32) -> Result<Self> {
        self.pow(e)
    }
}

impl Coeff for BigRational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return domain("division by zero");
        }
        Ok(self / rhs)
    }
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
}

/// Values of the parameters `q` and `t` inside a coefficient field.
#[derive(Clone, Debug, PartialEq)]
pub struct Params<C> {
    pub q: C,
    pub t: C,
}

impl Params<QTScalar> {
    pub fn symbolic() -> Self {
        Params { q: QTScalar::q(), t: QTScalar::t() }
    }
}

impl Params<BigRational> {
    pub fn numeric(q0: BigRational, t0: BigRational) -> Self {
        Params { q: q0, t: t0 }
    }
}

impl<C: Coeff> Params<C> {
    /// `q^i t^j`.
    pub fn qt_pow(&self, i: i32, j: i32) -> C {
        self.q
            .powi(i)
            .and_then(|a| Ok(a.mul_ref(&self.t.powi(j)?)))
            .expect("q and t are invertible")
    }

    pub fn t_pow(&self, j: i32) -> C {
        self.qt_pow(0, j)
    }
}

impl<C: Coeff> Params<C> {
    /// Image of an integer polynomial in `q`, `t`.
    pub fn poly(&self, f: &QTPoly) -> C {
        let mut acc = C::zero();
        for (i, j, c) in f.terms() {
            let c = C::from_rational(&BigRational::from_integer(c.clone()));
            acc = acc.add_ref(&c.mul_ref(&self.qt_pow(*i as i32, *j as i32)));
        }
        acc
    }

    /// Image of a Laurent polynomial in `t`.
    pub fn laurent(&self, f: &TLaurent) -> C {
        let mut acc = C::zero();
        for (k, c) in f.terms() {
            acc = acc.add_ref(&C::from_rational(c).mul_ref(&self.t_pow(k)));
        }
        acc
    }

    /// Image of an element of ℚ(q,t); fails at a pole.
    pub fn scalar(&self, s: &QTScalar) -> Result<C> {
        self.poly(s.numer()).checked_div(&self.poly(s.denom()))
    }
}
