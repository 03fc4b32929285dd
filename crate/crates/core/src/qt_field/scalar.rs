use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::gcd::gcd;
use super::poly::QTPoly;
use crate::error::{domain, Result};

/// Element of ℚ(q,t) as a reduced fraction of polynomials in ℤ[q,t].
///
/// The numerator and denominator are coprime in ℤ[q,t] (integer content
/// included) and the leading coefficient of the denominator is positive,
/// so equal field elements have identical representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QTScalar {
    num: QTPoly,
    den: QTPoly,
}

impl Default for QTScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl QTScalar {
    pub fn from_poly(p: QTPoly) -> Self {
        QTScalar { num: p, den: QTPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(QTPoly::from(c))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::from_poly(QTPoly::constant(c))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        QTScalar {
            num: QTPoly::constant(r.numer().clone()),
            den: QTPoly::constant(r.denom().clone()),
        }
    }

    pub fn q() -> Self {
        Self::from_poly(QTPoly::q())
    }

    pub fn t() -> Self {
        Self::from_poly(QTPoly::t())
    }

    /// `q^i t^j` for arbitrary signed exponents.
    pub fn qt_pow(i: i32, j: i32) -> Self {
        Self::one().mul_qt_pow(i, j)
    }

    /// Reduces `num / den` to canonical form.
    pub fn new(num: QTPoly, den: QTPoly) -> Result<Self> {
        if den.is_zero() {
            return domain("zero denominator");
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QTPoly, den: QTPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if d.leading_coeff().is_negative() {
            n = -n;
            d = -d;
        }
        QTScalar { num: n, den: d }
    }

    pub fn numer(&self) -> &QTPoly {
        &self.num
    }

    pub fn denom(&self) -> &QTPoly {
        &self.den
    }

    /// The polynomial this scalar equals, if its denominator is 1.
    pub fn as_poly(&self) -> Option<&QTPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Multiplies by `q^i t^j`, cancelling against the denominator without a gcd.
    pub fn mul_qt_pow(&self, i: i32, j: i32) -> Self {
        if self.num.is_zero() {
            return self.clone();
        }
        let (mut num, mut den) = (self.num.clone(), self.den.clone());
        let mut apply = |e: i32, on_q: bool| {
            if e == 0 {
                return;
            }
            let k = e.unsigned_abs();
            let sel = |p: &QTPoly| if on_q { p.ord_q() } else { p.ord_t() };
            let pair = |x: u32| if on_q { (x, 0) } else { (0, x) };
            if e > 0 {
                let c = k.min(sel(&den));
                let (a, b) = pair(c);
                den = den.unshift(a, b);
                let (a, b) = pair(k - c);
                num = num.shift(a, b);
            } else {
                let c = k.min(sel(&num));
                let (a, b) = pair(c);
                num = num.unshift(a, b);
                let (a, b) = pair(k - c);
                den = den.shift(a, b);
            }
        };
        apply(i, true);
        apply(j, false);
        QTScalar { num, den }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return domain("division by zero");
        }
        let (mut n, mut d) = (self.den.clone(), self.num.clone());
        if d.leading_coeff().is_negative() {
            n = -n;
            d = -d;
        }
        Ok(QTScalar { num: n, den: d })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(QTScalar { num: base.num.pow(e.unsigned_abs()), den: base.den.pow(e.unsigned_abs()) })
    }

    pub fn eval(&self, q0: &BigRational, t0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q0, t0);
        if d.is_zero() {
            return domain(format!("pole at q={q0}, t={t0}"));
        }
        Ok(self.num.eval(q0, t0) / d)
    }

    /// Substitutes `q = q0`, keeping `t` symbolic.
    pub fn subs_q(&self, q0: &BigRational) -> Result<Self> {
        let (pn, dn) = self.num.subs_q(q0);
        let (pd, dd) = self.den.subs_q(q0);
        if pd.is_zero() {
            return domain(format!("pole at q={q0}"));
        }
        Ok(Self::reduce(pn.scale(&dd), pd.scale(&dn)))
    }

    pub fn swap_qt(&self) -> Self {
        Self::reduce(self.num.swap_qt(), self.den.swap_qt())
    }

    /// Multiplies by an integer, cancelling against the denominator's content.
    pub fn scale_int(&self, c: &BigInt) -> Self {
        if c.is_zero() || self.num.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        let g = c.gcd(&self.den.content());
        QTScalar { num: self.num.scale(&(c / &g)), den: self.den.div_scalar(&g) }
    }

    /// Divides by a non-zero integer.
    pub fn div_int(&self, c: &BigInt) -> Self {
        assert!(!c.is_zero(), "division by zero");
        if c.is_one() || self.num.is_zero() {
            return self.clone();
        }
        let g = c.gcd(&self.num.content());
        let (c1, n) = (c / &g, self.num.div_scalar(&g));
        if c1.is_negative() {
            QTScalar { num: -n, den: self.den.scale(&-c1) }
        } else {
            QTScalar { num: n, den: self.den.scale(&c1) }
        }
    }

    pub fn neg_ref(&self) -> Self {
        QTScalar { num: -&self.num, den: self.den.clone() }
    }
}

impl Zero for QTScalar {
    fn zero() -> Self {
        QTScalar { num: QTPoly::zero(), den: QTPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for QTScalar {
    fn one() -> Self {
        QTScalar { num: QTPoly::one(), den: QTPoly::one() }
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
}

impl<'a> Add<&'a QTScalar> for &'a QTScalar {
    type Output = QTScalar;
    fn add(self, rhs: &QTScalar) -> QTScalar {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let n = &self.num + &rhs.num;
            if self.den.is_one() {
                return QTScalar { num: n, den: QTPoly::one() };
            }
            return QTScalar::reduce(n, self.den.clone());
        }
        if self.den.is_one() {
            return QTScalar { num: &(&self.num * &rhs.den) + &rhs.num, den: rhs.den.clone() };
        }
        if rhs.den.is_one() {
            return QTScalar { num: &(&rhs.num * &self.den) + &self.num, den: self.den.clone() };
        }
        let g = gcd(&self.den, &rhs.den);
        if g.is_one() {
            let n = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if n.is_zero() {
                return QTScalar::zero();
            }
            return QTScalar { num: n, den: &self.den * &rhs.den };
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = rhs.den.div_exact(&g).expect("gcd divides");
        let n = &(&self.num * &d1) + &(&rhs.num * &b1);
        if n.is_zero() {
            return QTScalar::zero();
        }
        let g2 = gcd(&n, &g);
        let (n, gg) = if g2.is_one() {
            (n, g)
        } else {
            (n.div_exact(&g2).expect("gcd divides"), g.div_exact(&g2).expect("gcd divides"))
        };
        let d = &(&gg * &b1) * &d1;
        let (n, d) = if d.leading_coeff().is_negative() { (-n, -d) } else { (n, d) };
        QTScalar { num: n, den: d }
    }
}

impl<'a> Sub<&'a QTScalar> for &'a QTScalar {
    type Output = QTScalar;
    fn sub(self, rhs: &QTScalar) -> QTScalar {
        self + &rhs.neg_ref()
    }
}

impl<'a> Mul<&'a QTScalar> for &'a QTScalar {
    type Output = QTScalar;
    fn mul(self, rhs: &QTScalar) -> QTScalar {
        if self.num.is_zero() || rhs.num.is_zero() {
            return QTScalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QTScalar { num: &self.num * &rhs.num, den: QTPoly::one() };
        }
        for (m, other) in [(self, rhs), (rhs, self)] {
            if m.num.is_monomial() && m.den.is_monomial() {
                let (i, j, c) = m.num.leading().unwrap().clone();
                let (k, l, d) = m.den.leading().unwrap().clone();
                let s = other.mul_qt_pow(i as i32 - k as i32, j as i32 - l as i32);
                return s.scale_int(&c).div_int(&d);
            }
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let cut = |p: &QTPoly, g: &QTPoly| if g.is_one() { p.clone() } else { p.div_exact(g).expect("gcd divides") };
        let n = &cut(&self.num, &g1) * &cut(&rhs.num, &g2);
        let d = &cut(&self.den, &g2) * &cut(&rhs.den, &g1);
        let (n, d) = if d.leading_coeff().is_negative() { (-n, -d) } else { (n, d) };
        QTScalar { num: n, den: d }
    }
}

impl<'a> Div<&'a QTScalar> for &'a QTScalar {
    type Output = QTScalar;
    /// Panics on division by zero; use [`QTScalar::checked_div`] for a fallible form.
    fn div(self, rhs: &QTScalar) -> QTScalar {
        self.checked_div(rhs).expect("division by zero in QTScalar")
    }
}

impl Neg for &QTScalar {
    type Output = QTScalar;
    fn neg(self) -> QTScalar {
        self.neg_ref()
    }
}

impl Neg for QTScalar {
    type Output = QTScalar;
    fn neg(self) -> QTScalar {
        QTScalar { num: -self.num, den: self.den }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QTScalar> for QTScalar {
            type Output = QTScalar;
            fn $m(self, rhs: QTScalar) -> QTScalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<QTPoly> for QTScalar {
    fn from(p: QTPoly) -> Self {
        QTScalar::from_poly(p)
    }
}

impl From<i64> for QTScalar {
    fn from(c: i64) -> Self {
        QTScalar::from_int(c)
    }
}

impl fmt::Display for QTScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
