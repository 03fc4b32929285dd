use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::coeff::Coeff;
use crate::error::{contract, Result};
use crate::qt_field::QTScalar;

/// Exponent vector of a monomial `x^α`.
pub type Exponent = Vec<u16>;

/// Polynomial in a fixed number of variables with coefficients in `C`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XPolynomial<C> {
    nvars: usize,
    terms: BTreeMap<Exponent, C>,
}

impl<C: Coeff> XPolynomial<C> {
    pub fn zero(nvars: usize) -> Self {
        XPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exp: Exponent, c: C) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    /// The variable `x_i` (1-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Self::monomial(e, C::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in increasing lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &C)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Exponent, C> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[u16]) -> C {
        self.terms.get(exp).cloned().unwrap_or_else(C::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().map(|&x| x as u32).sum()).max()
    }

    /// Adds `c x^exp` in place.
    pub fn add_term(&mut self, exp: Exponent, c: C) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add_ref(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let (mut big, small) = if self.len() >= rhs.len() { (self.clone(), rhs) } else { (rhs.clone(), self) };
        for (e, c) in &small.terms {
            big.add_term(e.clone(), c.clone());
        }
        big
    }

    pub fn add_assign(&mut self, rhs: &Self) {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg_ref())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        if c.is_one() {
            return self.clone();
        }
        self.map_coeffs(|x| x.mul_ref(c))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            for (f, d) in &rhs.terms {
                let g: Exponent = e.iter().zip(f).map(|(a, b)| a + b).collect();
                out.add_term(g, c.mul_ref(d));
            }
        }
        out
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> XPolynomial<D> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        XPolynomial { nvars: self.nvars, terms }
    }

    pub fn try_map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> Result<D>) -> Result<XPolynomial<D>> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = f(c)?;
            if !d.is_zero() {
                terms.insert(e.clone(), d);
            }
        }
        Ok(XPolynomial { nvars: self.nvars, terms })
    }

    /// Applies a map on exponents, merging collisions.
    pub fn map_exponents(&self, nvars: usize, f: impl Fn(&Exponent) -> Option<Exponent>) -> Self {
        let mut out = Self::zero(nvars);
        for (e, c) in &self.terms {
            if let Some(g) = f(e) {
                out.add_term(g, c.clone());
            }
        }
        out
    }

    /// `K_{i,i+1}`: exchanges `x_i` and `x_{i+1}` (1-based).
    pub fn swap_vars(&self, i: usize) -> Self {
        self.map_exponents(self.nvars, |e| {
            let mut g = e.clone();
            g.swap(i - 1, i);
            Some(g)
        })
    }

    pub fn is_symmetric_in(&self, i: usize) -> bool {
        self.terms.iter().all(|(e, c)| {
            let mut g = e.clone();
            g.swap(i - 1, i);
            self.terms.get(&g) == Some(c)
        })
    }

    /// Multiplies by `x_i` (1-based).
    pub fn mul_var(&self, i: usize) -> Self {
        self.map_exponents(self.nvars, |e| {
            let mut g = e.clone();
            g[i - 1] += 1;
            Some(g)
        })
    }

    /// Same polynomial in `nvars ≥ self.nvars` variables.
    pub fn embed(&self, nvars: usize) -> Result<Self> {
        if nvars < self.nvars {
            return contract(format!("cannot embed {} variables into {nvars}", self.nvars));
        }
        Ok(self.map_exponents(nvars, |e| {
            let mut g = e.clone();
            g.resize(nvars, 0);
            Some(g)
        }))
    }

    /// Sets `x_k = 0` (1-based) and renumbers the later variables down by one.
    pub fn set_var_zero(&self, k: usize) -> Self {
        self.map_exponents(self.nvars - 1, |e| {
            if e[k - 1] > 0 {
                None
            } else {
                let mut g = e.clone();
                g.remove(k - 1);
                Some(g)
            }
        })
    }
}

impl XPolynomial<QTScalar> {
    /// Evaluates all coefficients at rational `q`, `t`.
    pub fn eval_qt(&self, q0: &BigRational, t0: &BigRational) -> Result<XPolynomial<BigRational>> {
        self.try_map_coeffs(|c| c.eval(q0, t0))
    }
}

fn fmt_monomial(e: &[u16]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .map(|(i, &x)| if x == 1 { format!("x{}", i + 1) } else { format!("x{}^{x}", i + 1) })
        .collect();
    parts.join("*")
}

impl<C: Coeff> fmt::Display for XPolynomial<C> {
    /// Terms in decreasing lexicographic order of exponents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono = fmt_monomial(e);
                let cs = c.to_string();
                let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
                if mono.is_empty() {
                    cs
                } else if c.is_one() {
                    mono
                } else if c.neg_ref().is_one() {
                    format!("-{mono}")
                } else {
                    format!("{cs}*{mono}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize)]
struct TermRepr<'a, C> {
    exp: &'a Exponent,
    coeff: &'a C,
}

impl<C: Coeff + Serialize> Serialize for XPolynomial<C> {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermRepr<'_, C>> =
            self.terms.iter().rev().map(|(exp, coeff)| TermRepr { exp, coeff }).collect();
        let mut st = ser.serialize_struct("XPolynomial", 2)?;
        st.serialize_field("nvars", &self.nvars)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}
