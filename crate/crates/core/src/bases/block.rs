use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::coeff::Params;
use crate::combinatorics::{enumerate_mpartitions, partitions_max_len, MPartition};
use crate::error::{domain, Result};
use crate::linalg::{inverse, Matrix};
use crate::macdonald::{hall_littlewood, MacdonaldCache};
use crate::polyring::XPolynomial;
use crate::qt_field::QTScalar;
use crate::tableaux::{enumerate_ssyt, DTable, SkewShape};
use crate::QtPolynomial;

/// Distinct rearrangements of `v`.
fn rearrangements(v: &[u32]) -> Vec<Vec<u32>> {
    let mut cur: Vec<u32> = v.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let n = cur.len();
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Monomial symmetric function `m_λ` in the variables `x_{start+1}, …, x_n`.
fn monomial_sym(lam: &[u32], start: usize, n: usize) -> QtPolynomial {
    let k = n - start;
    let mut out = XPolynomial::zero(n);
    if lam.len() > k {
        return out;
    }
    let mut padded = lam.to_vec();
    padded.resize(k, 0);
    for r in rearrangements(&padded) {
        let mut e = vec![0u16; start];
        e.extend(r.iter().map(|&x| x as u16));
        out.add_term(e, QTScalar::one());
    }
    out
}

/// Schur polynomial `s_λ(x_1, …, x_n)` via Kostka numbers.
pub fn schur_poly(lam: &[u32], n: usize) -> QtPolynomial {
    let d: u32 = lam.iter().sum();
    let shape = SkewShape { outer: lam.to_vec(), inner: Vec::new() };
    let mut out = XPolynomial::zero(n);
    for mu in partitions_max_len(d, n) {
        let k = enumerate_ssyt(&shape, &mu).len();
        if k > 0 {
            out.add_assign(&monomial_sym(&mu, 0, n).scale(&QTScalar::from_int(k as i64)));
        }
    }
    out
}

fn power_sum(k: u32, n: usize) -> QtPolynomial {
    let mut out = XPolynomial::zero(n);
    for i in 0..n {
        let mut e = vec![0u16; n];
        e[i] = k as u16;
        out.add_term(e, QTScalar::one());
    }
    out
}

fn x_pow(a: &[u32], n: usize) -> QtPolynomial {
    let mut e: Vec<u16> = a.iter().map(|&x| x as u16).collect();
    e.resize(n, 0);
    XPolynomial::monomial(e, QTScalar::one())
}

fn matrix_of(rows: &[QtPolynomial], labels: &[MPartition], m: usize) -> Matrix<QTScalar> {
    rows.iter().map(|f| monomial_coeffs(f, labels, m)).collect()
}

/// Coefficients of `m_Λ` in an m-symmetric polynomial, read off the monomials
/// `x^a x_{m+1}^{λ_1} x_{m+2}^{λ_2} ⋯`.
pub fn monomial_coeffs(f: &QtPolynomial, labels: &[MPartition], m: usize) -> Vec<QTScalar> {
    let n = f.nvars();
    labels
        .iter()
        .map(|l| {
            if m + l.lam.len() > n {
                return QTScalar::zero();
            }
            let mut e: Vec<u16> = l.a.iter().chain(&l.lam).map(|&x| x as u16).collect();
            e.resize(n, 0);
            f.coeff(&e)
        })
        .collect()
}

fn lazy<'a, T>(cell: &'a OnceLock<T>, f: impl FnOnce() -> Result<T>) -> Result<&'a T> {
    if let Some(v) = cell.get() {
        return Ok(v);
    }
    let v = f()?;
    let _ = cell.set(v);
    Ok(cell.get().expect("just set"))
}

/// Transition data for one graded piece `R_m^d`, realized in `N = m + d`
/// variables. Matrices act on row vectors: a coefficient vector `c` in basis
/// `B` has monomial-basis coefficients `c · BM`.
pub struct BasisBlock {
    pub m: usize,
    pub degree: u32,
    pub nvars: usize,
    pub labels: Vec<MPartition>,
    index: HashMap<MPartition, usize>,
    k: OnceLock<(Matrix<QTScalar>, Matrix<QTScalar>)>,
    p: OnceLock<(Matrix<QTScalar>, Matrix<QTScalar>)>,
    d: OnceLock<(Matrix<QTScalar>, Matrix<QTScalar>)>,
}

impl BasisBlock {
    fn new(m: usize, degree: u32) -> Self {
        let labels = enumerate_mpartitions(m, degree);
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        BasisBlock {
            m,
            degree,
            nvars: m + degree as usize,
            labels,
            index,
            k: OnceLock::new(),
            p: OnceLock::new(),
            d: OnceLock::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, l: &MPartition) -> Option<usize> {
        self.index.get(l).copied()
    }

    /// `m_Λ` in `n` variables.
    pub fn m_poly(l: &MPartition, n: usize) -> QtPolynomial {
        x_pow(&l.a, n).mul(&monomial_sym(&l.lam, l.m(), n))
    }

    /// `p_Λ` in `n` variables.
    pub fn p_poly(l: &MPartition, n: usize) -> QtPolynomial {
        l.lam.iter().fold(x_pow(&l.a, n), |acc, &k| acc.mul(&power_sum(k, n)))
    }

    /// `k_Λ` in `n` variables.
    pub fn k_poly(l: &MPartition, n: usize) -> Result<QtPolynomial> {
        let h = hall_littlewood(&Params::symbolic(), &l.a)?.embed(n)?;
        Ok(h.mul(&schur_poly(&l.lam, n)))
    }

    /// `(KM, KM⁻¹)`.
    pub fn k_matrices(&self) -> Result<&(Matrix<QTScalar>, Matrix<QTScalar>)> {
        lazy(&self.k, || {
            let rows: Vec<QtPolynomial> =
                self.labels.iter().map(|l| Self::k_poly(l, self.nvars)).collect::<Result<_>>()?;
            let km = matrix_of(&rows, &self.labels, self.m);
            let inv = inverse(&km)?;
            Ok((km, inv))
        })
    }

    /// `(PM, PM⁻¹)`.
    pub fn p_matrices(&self) -> Result<&(Matrix<QTScalar>, Matrix<QTScalar>)> {
        lazy(&self.p, || {
            let rows: Vec<QtPolynomial> = self.labels.iter().map(|l| Self::p_poly(l, self.nvars)).collect();
            let pm = matrix_of(&rows, &self.labels, self.m);
            let inv = inverse(&pm)?;
            Ok((pm, inv))
        })
    }

    /// `(D, D⁻¹)` over ℚ(t), rows `Λ`, columns `Ω`.
    pub fn d_matrices(&self, table: &DTable) -> Result<&(Matrix<QTScalar>, Matrix<QTScalar>)> {
        lazy(&self.d, || {
            let d: Matrix<QTScalar> = table
                .matrix(self.m, self.degree)?
                .iter()
                .map(|row| row.iter().map(|x| x.to_qt()).collect())
                .collect();
            let inv = inverse(&d)?;
            Ok((d, inv))
        })
    }
}

/// Shared per-block transition data plus the Macdonald and `D` memo tables.
pub struct BasisCache {
    blocks: RwLock<HashMap<(usize, u32), Arc<BasisBlock>>>,
    pub mac: MacdonaldCache<QTScalar>,
    pub dtable: DTable,
}

impl Default for BasisCache {
    fn default() -> Self {
        Self::new()
    }
}

impl BasisCache {
    pub fn new() -> Self {
        BasisCache { blocks: RwLock::new(HashMap::new()), mac: MacdonaldCache::symbolic(), dtable: DTable::new() }
    }

    pub fn global() -> &'static BasisCache {
        static CACHE: OnceLock<BasisCache> = OnceLock::new();
        CACHE.get_or_init(BasisCache::new)
    }

    pub fn block(&self, m: usize, degree: u32) -> Arc<BasisBlock> {
        if let Some(b) = self.blocks.read().expect("block lock").get(&(m, degree)) {
            return b.clone();
        }
        let b = Arc::new(BasisBlock::new(m, degree));
        self.blocks.write().expect("block lock").entry((m, degree)).or_insert(b).clone()
    }

    /// Monomial image of a Macdonald-type basis element in `n` variables.
    pub fn macdonald_poly(&self, basis: super::Basis, l: &MPartition, n: usize) -> Result<QtPolynomial> {
        use super::Basis;
        if n < l.m() + l.degree() as usize {
            return domain(format!("{l} needs at least {} variables", l.m() + l.degree() as usize));
        }
        match basis {
            Basis::MacP => self.mac.msym_P(l, n),
            Basis::MacJ => self.mac.integral_J(l, n),
            Basis::HL => self.mac.msym_P(l, n)?.try_map_coeffs(|c| c.subs_q(&num_rational::BigRational::zero())),
            _ => domain(format!("{basis} is not a Macdonald-type basis")),
        }
    }
}
