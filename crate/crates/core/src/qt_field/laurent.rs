use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::QTPoly;
use super::scalar::QTScalar;

/// Laurent polynomial in `t` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct TLaurent {
    terms: BTreeMap<i32, BigRational>,
}

impl TLaurent {
    pub fn zero() -> Self {
        TLaurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0)
    }

    pub fn monomial(c: BigRational, k: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        TLaurent { terms }
    }

    /// `t^k`.
    pub fn t_pow(k: i32) -> Self {
        Self::monomial(BigRational::one(), k)
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial(BigRational::from_integer(BigInt::from(c)), 0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigRational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: i32) -> BigRational {
        self.terms.get(&k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// True when all exponents are non-negative and coefficients are integers.
    pub fn is_integer_polynomial(&self) -> bool {
        self.terms.iter().all(|(k, c)| *k >= 0 && c.is_integer())
    }

    /// True when all coefficients are non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn shift(&self, k: i32) -> Self {
        TLaurent { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TLaurent { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    pub fn eval(&self, t0: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (k, c) in &self.terms {
            if *k < 0 && t0.is_zero() {
                return None;
            }
            acc += c * num_traits::pow::pow(
                if *k < 0 { t0.recip() } else { t0.clone() },
                k.unsigned_abs() as usize,
            );
        }
        Some(acc)
    }

    /// Embeds into ℚ(q,t).
    pub fn to_qt(&self) -> QTScalar {
        if self.terms.is_empty() {
            return QTScalar::zero();
        }
        let lo = self.min_degree().unwrap();
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let shift = (-lo).max(0);
        let num = QTPoly::from_terms(self.terms.iter().map(|(k, c)| {
            let v = (c * BigRational::from_integer(den.clone())).to_integer();
            (0, (k + shift) as u32, v)
        }));
        let d = QTPoly::monomial(den, 0, shift as u32);
        QTScalar::new(num, d).expect("non-zero denominator")
    }

    /// Recovers a Laurent polynomial in `t` from a scalar, if it is one.
    pub fn from_qt(s: &QTScalar) -> Option<Self> {
        let den = s.denom();
        if !den.is_monomial() || den.deg_q() != 0 || s.numer().deg_q() != 0 {
            return None;
        }
        let (_, dt, dc) = den.leading().unwrap().clone();
        let dc = BigRational::from_integer(dc);
        let mut terms = BTreeMap::new();
        for (_, j, c) in s.numer().terms() {
            terms.insert(*j as i32 - dt as i32, BigRational::from_integer(c.clone()) / &dc);
        }
        Some(TLaurent { terms })
    }
}

fn combine(a: &TLaurent, b: &TLaurent, sign: i32) -> TLaurent {
    let mut terms = a.terms.clone();
    for (k, c) in &b.terms {
        let e = terms.entry(*k).or_insert_with(BigRational::zero);
        if sign > 0 {
            *e += c;
        } else {
            *e -= c;
        }
        if e.is_zero() {
            terms.remove(k);
        }
    }
    TLaurent { terms }
}

impl<'a> Add<&'a TLaurent> for &'a TLaurent {
    type Output = TLaurent;
    fn add(self, rhs: &TLaurent) -> TLaurent {
        combine(self, rhs, 1)
    }
}

impl<'a> Sub<&'a TLaurent> for &'a TLaurent {
    type Output = TLaurent;
    fn sub(self, rhs: &TLaurent) -> TLaurent {
        combine(self, rhs, -1)
    }
}

impl<'a> Mul<&'a TLaurent> for &'a TLaurent {
    type Output = TLaurent;
    fn mul(self, rhs: &TLaurent) -> TLaurent {
        let mut terms: BTreeMap<i32, BigRational> = BTreeMap::new();
        for (i, x) in &self.terms {
            for (j, y) in &rhs.terms {
                *terms.entry(i + j).or_insert_with(BigRational::zero) += x * y;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        TLaurent { terms }
    }
}

impl Neg for &TLaurent {
    type Output = TLaurent;
    fn neg(self) -> TLaurent {
        TLaurent { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl fmt::Display for TLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (k, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let tpart = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if tpart.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{tpart}")?;
            } else {
                write!(f, "{a}*{tpart}")?;
            }
        }
        Ok(())
    }
}
