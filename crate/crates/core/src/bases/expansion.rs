use std::collections::BTreeMap;

use num_traits::Zero;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::combinatorics::{enumerate_mpartitions, MPartition};
use crate::error::{contract, Error, Result};
use crate::qt_field::QTScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// `m_Λ = x^a m_λ(x_{m+1}, …)`.
    M,
    /// `p_Λ = x^a p_λ(x)`.
    P,
    /// `k_Λ = H_a(x_1..x_m; t) s_λ(x)`.
    K,
    /// m-symmetric Schur functions `s_Λ`.
    S,
    /// Dual m-symmetric Schur functions `s*_Λ`.
    Sstar,
    /// Monic m-symmetric Macdonald polynomials `P_Λ`.
    MacP,
    /// Integral forms `J_Λ`.
    MacJ,
    /// `P_Λ` at `q = 0`.
    HL,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::P => "p",
            Basis::K => "k",
            Basis::S => "s",
            Basis::Sstar => "s*",
            Basis::MacP => "P",
            Basis::MacJ => "J",
            Basis::HL => "HL",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "m" => Basis::M,
            "p" => Basis::P,
            "k" => Basis::K,
            "s" => Basis::S,
            "s*" | "sstar" => Basis::Sstar,
            "P" => Basis::MacP,
            "J" => Basis::MacJ,
            "HL" | "hl" => Basis::HL,
            _ => return Err(Error::Parse { token: s.to_string(), msg: "unknown basis".into() }),
        })
    }
}

/// Finite combination `Σ c_Λ b_Λ` of one basis, homogeneous of degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisExpansion {
    pub basis: Basis,
    pub m: usize,
    pub degree: u32,
    pub coeffs: BTreeMap<MPartition, QTScalar>,
}

impl BasisExpansion {
    pub fn zero(basis: Basis, m: usize, degree: u32) -> Self {
        BasisExpansion { basis, m, degree, coeffs: BTreeMap::new() }
    }

    /// The single basis element `b_Λ`.
    pub fn single(basis: Basis, l: &MPartition) -> Self {
        let mut e = Self::zero(basis, l.m(), l.degree());
        e.coeffs.insert(l.clone(), QTScalar::from_int(1));
        e
    }

    /// Builds an expansion from dense coefficients in canonical label order.
    pub fn from_dense(basis: Basis, m: usize, degree: u32, v: &[QTScalar]) -> Self {
        let labels = enumerate_mpartitions(m, degree);
        debug_assert_eq!(labels.len(), v.len());
        let coeffs = labels.into_iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(l, c)| (l, c.clone())).collect();
        BasisExpansion { basis, m, degree, coeffs }
    }

    /// Coefficients in canonical label order, zeros included.
    pub fn to_dense(&self) -> Vec<QTScalar> {
        enumerate_mpartitions(self.m, self.degree).iter().map(|l| self.coeff(l)).collect()
    }

    pub fn coeff(&self, l: &MPartition) -> QTScalar {
        self.coeffs.get(l).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn check_labels(&self) -> Result<()> {
        for l in self.coeffs.keys() {
            if l.m() != self.m || l.degree() != self.degree {
                return contract(format!("label {l} does not belong to m = {}, degree {}", self.m, self.degree));
            }
        }
        Ok(())
    }

    /// Non-zero terms in canonical label order.
    pub fn terms(&self) -> Vec<(MPartition, QTScalar)> {
        enumerate_mpartitions(self.m, self.degree)
            .into_iter()
            .filter_map(|l| self.coeffs.get(&l).map(|c| (l.clone(), c.clone())))
            .collect()
    }

    pub fn scale(&self, c: &QTScalar) -> Self {
        let coeffs = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.coeffs.iter().map(|(l, x)| (l.clone(), x * c)).collect()
        };
        BasisExpansion { coeffs, ..self.clone() }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if (self.basis, self.m, self.degree) != (rhs.basis, rhs.m, rhs.degree) {
            return contract("cannot add expansions in different bases or graded pieces");
        }
        let mut out = self.clone();
        for (l, c) in &rhs.coeffs {
            let s = &out.coeff(l) + c;
            if s.is_zero() {
                out.coeffs.remove(l);
            } else {
                out.coeffs.insert(l.clone(), s);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for BasisExpansion {
    /// One `coeff * basis[label]` line per term.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let lines: Vec<String> = terms.iter().map(|(l, c)| format!("{c} * {}[{l}]", self.basis)).collect();
        write!(f, "{}", lines.join("\n"))
    }
}

#[derive(Serialize)]
struct TermRepr<'a> {
    label: &'a MPartition,
    coeff: &'a QTScalar,
    text: String,
}

impl Serialize for BasisExpansion {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.terms();
        let reprs: Vec<TermRepr<'_>> =
            terms.iter().map(|(l, c)| TermRepr { label: l, coeff: c, text: c.to_string() }).collect();
        let mut st = ser.serialize_struct("BasisExpansion", 4)?;
        st.serialize_field("basis", self.basis.name())?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("terms", &reprs)?;
        st.end()
    }
}
