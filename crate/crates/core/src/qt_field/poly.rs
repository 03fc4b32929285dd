use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial in `q`, `t` with integer coefficients.
///
/// Terms are kept sorted strictly decreasing in the lexicographic order on
/// `(deg_q, deg_t)`, so the first term is the leading one.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QTPoly {
    terms: Vec<(u32, u32, BigInt)>,
}

#[inline]
fn key_cmp(a: (u32, u32), b: (u32, u32)) -> Ordering {
    a.cmp(&b)
}

impl QTPoly {
    pub fn zero() -> Self {
        QTPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: BigInt, dq: u32, dt: u32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            QTPoly { terms: vec![(dq, dt, c)] }
        }
    }

    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, BigInt)>>(it: I) -> Self {
        let mut map: BTreeMap<(u32, u32), BigInt> = BTreeMap::new();
        for (i, j, c) in it {
            *map.entry((i, j)).or_insert_with(BigInt::zero) += c;
        }
        let terms = map
            .into_iter()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|((i, j), c)| (i, j, c))
            .collect();
        QTPoly { terms }
    }

    /// Terms in canonical order (decreasing `(deg_q, deg_t)`).
    pub fn terms(&self) -> &[(u32, u32, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1 == 0 && self.terms[0].2.is_one()
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(0, 0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading(&self) -> Option<&(u32, u32, BigInt)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.terms.first().map(|t| t.2.clone()).unwrap_or_else(BigInt::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn deg_q(&self) -> u32 {
        self.terms.iter().map(|t| t.0).max().unwrap_or(0)
    }

    pub fn deg_t(&self) -> u32 {
        self.terms.iter().map(|t| t.1).max().unwrap_or(0)
    }

    pub fn ord_q(&self) -> u32 {
        self.terms.iter().map(|t| t.0).min().unwrap_or(0)
    }

    pub fn ord_t(&self) -> u32 {
        self.terms.iter().map(|t| t.1).min().unwrap_or(0)
    }

    /// Coefficient of `q^i t^j`.
    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.terms
            .binary_search_by(|t| key_cmp((i, j), (t.0, t.1)))
            .map(|k| self.terms[k].2.clone())
            .unwrap_or_else(|_| BigInt::zero())
    }

    /// Non-negative gcd of the integer coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, _, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QTPoly {
            terms: self.terms.iter().map(|(i, j, x)| (*i, *j, x * c)).collect(),
        }
    }

    /// Divides every coefficient by `c`; caller guarantees exactness.
    pub fn div_scalar(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        QTPoly {
            terms: self.terms.iter().map(|(i, j, x)| (*i, *j, x / c)).collect(),
        }
    }

    /// Multiplies by `q^i t^j`.
    pub fn shift(&self, i: u32, j: u32) -> Self {
        QTPoly {
            terms: self.terms.iter().map(|(a, b, c)| (a + i, b + j, c.clone())).collect(),
        }
    }

    /// Divides by `q^i t^j`; caller guarantees `i <= ord_q`, `j <= ord_t`.
    pub fn unshift(&self, i: u32, j: u32) -> Self {
        QTPoly {
            terms: self.terms.iter().map(|(a, b, c)| (a - i, b - j, c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// True when every coefficient is non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.iter().all(|t| !t.2.is_negative())
    }

    /// Exact quotient `self / b`, or `None` when `b` does not divide `self`.
    pub fn div_exact(&self, b: &QTPoly) -> Option<QTPoly> {
        if b.is_zero() {
            return None;
        }
        if let Some(c) = b.as_constant() {
            if c.is_one() {
                return Some(self.clone());
            }
            let mut terms = Vec::with_capacity(self.terms.len());
            for (i, j, x) in &self.terms {
                let (qq, r) = x.div_rem(&c);
                if !r.is_zero() {
                    return None;
                }
                terms.push((*i, *j, qq));
            }
            return Some(QTPoly { terms });
        }
        if b.is_monomial() {
            let (bi, bj, bc) = &b.terms[0];
            let mut terms = Vec::with_capacity(self.terms.len());
            for (i, j, x) in &self.terms {
                if i < bi || j < bj {
                    return None;
                }
                let (qq, r) = x.div_rem(bc);
                if !r.is_zero() {
                    return None;
                }
                terms.push((i - bi, j - bj, qq));
            }
            return Some(QTPoly { terms });
        }
        if self.deg_q() < b.deg_q() || self.deg_t() < b.deg_t() {
            return if self.is_zero() { Some(Self::zero()) } else { None };
        }
        let (bi, bj, bc) = b.terms[0].clone();
        let mut r = self.clone();
        let mut quot = Vec::new();
        while let Some((i, j, c)) = r.terms.first().cloned() {
            if i < bi || j < bj {
                return None;
            }
            let (qc, rem) = c.div_rem(&bc);
            if !rem.is_zero() {
                return None;
            }
            let (di, dj) = (i - bi, j - bj);
            let sub: Vec<(u32, u32, BigInt)> =
                b.terms.iter().map(|(x, y, z)| (x + di, y + dj, z * &qc)).collect();
            r = merge(&r.terms, &sub, true);
            quot.push((di, dj, qc));
        }
        Some(QTPoly { terms: quot })
    }

    pub fn eval(&self, q0: &BigRational, t0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (i, j, c) in &self.terms {
            let term = BigRational::from_integer(c.clone()) * pow_rat(q0, *i) * pow_rat(t0, *j);
            acc += term;
        }
        acc
    }

    /// Substitutes `q = q0`, returning `(p, d)` with `self(q0, t) = p(t) / d`.
    pub fn subs_q(&self, q0: &BigRational) -> (QTPoly, BigInt) {
        let mut by_t: BTreeMap<u32, BigRational> = BTreeMap::new();
        for (i, j, c) in &self.terms {
            let v = BigRational::from_integer(c.clone()) * pow_rat(q0, *i);
            *by_t.entry(*j).or_insert_with(BigRational::zero) += v;
        }
        let mut den = BigInt::one();
        for v in by_t.values() {
            den = den.lcm(v.denom());
        }
        let p = QTPoly::from_terms(
            by_t.into_iter()
                .map(|(j, v)| (0, j, (v * BigRational::from_integer(den.clone())).to_integer())),
        );
        (p, den)
    }

    /// Swaps the roles of `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        QTPoly::from_terms(self.terms.iter().map(|(i, j, c)| (*j, *i, c.clone())))
    }
}

pub(crate) fn pow_rat(x: &BigRational, e: u32) -> BigRational {
    num_traits::pow(x.clone(), e as usize)
}

/// Merges two canonical term lists; `negate_b` subtracts instead of adds.
fn merge(a: &[(u32, u32, BigInt)], b: &[(u32, u32, BigInt)], negate_b: bool) -> QTPoly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        let (ka, kb) = ((a[x].0, a[x].1), (b[y].0, b[y].1));
        match key_cmp(ka, kb) {
            Ordering::Greater => {
                out.push(a[x].clone());
                x += 1;
            }
            Ordering::Less => {
                let c = if negate_b { -&b[y].2 } else { b[y].2.clone() };
                out.push((kb.0, kb.1, c));
                y += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { &a[x].2 - &b[y].2 } else { &a[x].2 + &b[y].2 };
                if !c.is_zero() {
                    out.push((ka.0, ka.1, c));
                }
                x += 1;
                y += 1;
            }
        }
    }
    out.extend(a[x..].iter().cloned());
    for t in &b[y..] {
        let c = if negate_b { -&t.2 } else { t.2.clone() };
        out.push((t.0, t.1, c));
    }
    QTPoly { terms: out }
}

impl<'a> Add<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn add(self, rhs: &QTPoly) -> QTPoly {
        merge(&self.terms, &rhs.terms, false)
    }
}

impl<'a> Sub<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn sub(self, rhs: &QTPoly) -> QTPoly {
        merge(&self.terms, &rhs.terms, true)
    }
}

impl Neg for &QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        QTPoly {
            terms: self.terms.iter().map(|(i, j, c)| (*i, *j, -c)).collect(),
        }
    }
}

impl Neg for QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        -&self
    }
}

impl<'a> Mul<&'a QTPoly> for &'a QTPoly {
    type Output = QTPoly;
    fn mul(self, rhs: &QTPoly) -> QTPoly {
        if self.is_zero() || rhs.is_zero() {
            return QTPoly::zero();
        }
        if rhs.terms.len() == 1 {
            let (i, j, c) = &rhs.terms[0];
            return QTPoly {
                terms: self.terms.iter().map(|(a, b, x)| (a + i, b + j, x * c)).collect(),
            };
        }
        if self.terms.len() == 1 {
            return rhs * self;
        }
        let (oq, ot) = (self.ord_q() + rhs.ord_q(), self.ord_t() + rhs.ord_t());
        let dq = (self.deg_q() + rhs.deg_q() - oq) as usize + 1;
        let dt = (self.deg_t() + rhs.deg_t() - ot) as usize + 1;
        if dq * dt <= 1 << 14 {
            let mut dense = vec![BigInt::zero(); dq * dt];
            for (a, b, x) in &self.terms {
                for (c, d, y) in &rhs.terms {
                    let k = (a + c - oq) as usize * dt + (b + d - ot) as usize;
                    dense[k] += x * y;
                }
            }
            let mut terms = Vec::new();
            for k in (0..dense.len()).rev() {
                if !dense[k].is_zero() {
                    let c = std::mem::take(&mut dense[k]);
                    terms.push(((k / dt) as u32 + oq, (k % dt) as u32 + ot, c));
                }
            }
            QTPoly { terms }
        } else {
            QTPoly::from_terms(self.terms.iter().flat_map(|(a, b, x)| {
                rhs.terms.iter().map(move |(c, d, y)| (a + c, b + d, x * y))
            }))
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<QTPoly> for QTPoly {
            type Output = QTPoly;
            fn $m(self, rhs: QTPoly) -> QTPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<i64> for QTPoly {
    fn from(c: i64) -> Self {
        QTPoly::constant(BigInt::from(c))
    }
}
