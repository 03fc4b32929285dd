use num_traits::{One, Zero};

use crate::combinatorics::MPartition;
use crate::error::{contract, domain, Result};
use crate::linalg::{inverse, Matrix};
use crate::polyring::XPolynomial;
use crate::qt_field::QTScalar;
use crate::QtPolynomial;

use super::block::{monomial_coeffs, BasisBlock, BasisCache};
use super::expansion::{Basis, BasisExpansion};

fn vec_mat(v: &[QTScalar], a: &Matrix<QTScalar>) -> Vec<QTScalar> {
    let cols = a.first().map_or(0, |r| r.len());
    let mut out = vec![QTScalar::zero(); cols];
    for (x, row) in v.iter().zip(a) {
        if x.is_zero() {
            continue;
        }
        for (o, y) in out.iter_mut().zip(row) {
            if !y.is_zero() {
                *o = &*o + &(x * y);
            }
        }
    }
    out
}

fn mat_vec(a: &Matrix<QTScalar>, v: &[QTScalar]) -> Vec<QTScalar> {
    a.iter()
        .map(|row| {
            row.iter().zip(v).filter(|(x, y)| !x.is_zero() && !y.is_zero()).fold(QTScalar::zero(), |s, (x, y)| &s + &(x * y))
        })
        .collect()
}

fn is_macdonald(b: Basis) -> bool {
    matches!(b, Basis::MacP | Basis::MacJ | Basis::HL)
}

fn macdonald_matrix(cache: &BasisCache, blk: &BasisBlock, basis: Basis) -> Result<Matrix<QTScalar>> {
    blk.labels
        .iter()
        .map(|l| Ok(monomial_coeffs(&cache.macdonald_poly(basis, l, blk.nvars.max(2))?, &blk.labels, blk.m)))
        .collect()
}

/// Monomial-basis coefficients, canonical order.
fn to_m_dense(cache: &BasisCache, e: &BasisExpansion) -> Result<Vec<QTScalar>> {
    e.check_labels()?;
    let blk = cache.block(e.m, e.degree);
    let v = e.to_dense();
    Ok(match e.basis {
        Basis::M => v,
        Basis::P => vec_mat(&v, &blk.p_matrices()?.0),
        Basis::K => vec_mat(&v, &blk.k_matrices()?.0),
        Basis::S | Basis::Sstar => vec_mat(&to_k_dense(cache, e)?, &blk.k_matrices()?.0),
        b => {
            let mut out = vec![QTScalar::zero(); blk.len()];
            for (l, c) in &e.coeffs {
                let row = monomial_coeffs(&cache.macdonald_poly(b, l, blk.nvars.max(2))?, &blk.labels, blk.m);
                for (o, y) in out.iter_mut().zip(&row) {
                    *o = &*o + &(c * y);
                }
            }
            out
        }
    })
}

/// `k`-basis coefficients, canonical order.
fn to_k_dense(cache: &BasisCache, e: &BasisExpansion) -> Result<Vec<QTScalar>> {
    e.check_labels()?;
    let blk = cache.block(e.m, e.degree);
    let v = e.to_dense();
    Ok(match e.basis {
        Basis::K => v,
        Basis::Sstar => vec_mat(&v, &blk.d_matrices(&cache.dtable)?.0),
        Basis::S => mat_vec(&blk.d_matrices(&cache.dtable)?.1, &v),
        _ => vec_mat(&to_m_dense(cache, e)?, &blk.k_matrices()?.1),
    })
}

fn from_k_dense(cache: &BasisCache, m: usize, degree: u32, c: &[QTScalar], basis: Basis) -> Result<BasisExpansion> {
    let blk = cache.block(m, degree);
    let v = match basis {
        Basis::K => c.to_vec(),
        Basis::Sstar => vec_mat(c, &blk.d_matrices(&cache.dtable)?.1),
        Basis::S => mat_vec(&blk.d_matrices(&cache.dtable)?.0, c),
        Basis::M => vec_mat(c, &blk.k_matrices()?.0),
        Basis::P => vec_mat(&vec_mat(c, &blk.k_matrices()?.0), &blk.p_matrices()?.1),
        b => {
            let bm = macdonald_matrix(cache, &blk, b)?;
            vec_mat(&vec_mat(c, &blk.k_matrices()?.0), &inverse(&bm)?)
        }
    };
    Ok(BasisExpansion::from_dense(basis, m, degree, &v))
}

/// Re-expresses `e` in `basis`.
pub fn convert(e: &BasisExpansion, basis: Basis) -> Result<BasisExpansion> {
    let cache = BasisCache::global();
    if e.basis == basis {
        e.check_labels()?;
        return Ok(e.clone());
    }
    if basis == Basis::M {
        let v = to_m_dense(cache, e)?;
        return Ok(BasisExpansion::from_dense(Basis::M, e.m, e.degree, &v));
    }
    if is_macdonald(e.basis) && basis == Basis::P {
        let blk = cache.block(e.m, e.degree);
        let v = vec_mat(&to_m_dense(cache, e)?, &blk.p_matrices()?.1);
        return Ok(BasisExpansion::from_dense(Basis::P, e.m, e.degree, &v));
    }
    from_k_dense(cache, e.m, e.degree, &to_k_dense(cache, e)?, basis)
}

/// The polynomial in `n_vars` variables represented by `e`.
pub fn to_monomials(e: &BasisExpansion, n_vars: usize) -> Result<QtPolynomial> {
    let need = e.m + e.degree as usize;
    if n_vars < need {
        return domain(format!("expansion in R_{}^{} needs N ≥ {need}, got {n_vars}", e.m, e.degree));
    }
    let cache = BasisCache::global();
    let v = to_m_dense(cache, e)?;
    let blk = cache.block(e.m, e.degree);
    let mut out = XPolynomial::zero(n_vars);
    for (l, c) in blk.labels.iter().zip(&v) {
        if !c.is_zero() {
            out.add_assign(&BasisBlock::m_poly(l, n_vars).scale(c));
        }
    }
    Ok(out)
}

/// Expands an m-symmetric homogeneous polynomial in `basis`.
pub fn from_monomials(f: &QtPolynomial, m: usize, basis: Basis) -> Result<BasisExpansion> {
    let n = f.nvars();
    let degrees: std::collections::BTreeSet<u32> =
        f.terms().map(|(e, _)| e.iter().map(|&x| x as u32).sum()).collect();
    if degrees.len() > 1 {
        return contract("from_monomials expects a homogeneous polynomial");
    }
    let d = degrees.into_iter().next().unwrap_or(0);
    if m > n || n < m + d as usize {
        return domain(format!("degree {d} with m = {m} needs N ≥ {}, got {n}", m + d as usize));
    }
    for i in m + 1..n {
        if !f.is_symmetric_in(i) {
            return contract(format!("polynomial is not symmetric in x{} and x{}", i, i + 1));
        }
    }
    let cache = BasisCache::global();
    let blk = cache.block(m, d);
    let v = monomial_coeffs(f, &blk.labels, m);
    let e = BasisExpansion::from_dense(Basis::M, m, d, &v);
    convert(&e, basis)
}

/// `s*_Λ = Σ_Ω D_{ΛΩ}(t) k_Ω`, in the `k` basis.
pub fn schur_star(l: &MPartition) -> Result<BasisExpansion> {
    let e = BasisExpansion::single(Basis::Sstar, l);
    convert(&e, Basis::K)
}

/// `s_Λ`, the dual basis of `s*` under `⟨·,·⟩_m`, in the `k` basis.
pub fn schur(l: &MPartition) -> Result<BasisExpansion> {
    let e = BasisExpansion::single(Basis::S, l);
    convert(&e, Basis::K)
}

/// `⟨f, g⟩_m`, the form making the `k` basis orthonormal.
pub fn scalar_product(f: &BasisExpansion, g: &BasisExpansion) -> Result<QTScalar> {
    if f.m != g.m {
        return contract(format!("scalar product of R_{} and R_{}", f.m, g.m));
    }
    if f.degree != g.degree {
        return Ok(QTScalar::zero());
    }
    let cache = BasisCache::global();
    let (a, b) = (to_k_dense(cache, f)?, to_k_dense(cache, g)?);
    Ok(a.iter().zip(&b).fold(QTScalar::zero(), |s, (x, y)| &s + &(x * y)))
}

fn hecke_on_k(i: usize, e: &BasisExpansion, adjoint: bool) -> Result<BasisExpansion> {
    if i == 0 || i >= e.m {
        return contract(format!("T_{i} needs 1 ≤ i < m = {}", e.m));
    }
    let k = convert(e, Basis::K)?;
    let t = QTScalar::t();
    let tm1 = &t - &QTScalar::one();
    let mut out = BasisExpansion::zero(Basis::K, e.m, e.degree);
    for (l, c) in &k.coeffs {
        let sl = l.swap_a(i);
        let (ai, aj) = (l.a[i - 1], l.a[i]);
        let terms: Vec<(MPartition, QTScalar)> = if ai == aj {
            vec![(l.clone(), t.clone())]
        } else if ai > aj {
            vec![(sl, if adjoint { t.clone() } else { QTScalar::one() })]
        } else {
            vec![(l.clone(), tm1.clone()), (sl, if adjoint { QTScalar::one() } else { t.clone() })]
        };
        for (lab, f) in terms {
            out = out.add(&BasisExpansion::single(Basis::K, &lab).scale(&(c * &f)))?;
        }
    }
    Ok(out)
}

/// `T*_i`, the adjoint of `T_i` under `⟨·,·⟩_m`; result in the `k` basis.
pub fn t_star(i: usize, e: &BasisExpansion) -> Result<BasisExpansion> {
    hecke_on_k(i, e, true)
}

/// `T_i` acting on the `k` basis; result in the `k` basis.
pub fn t_action(i: usize, e: &BasisExpansion) -> Result<BasisExpansion> {
    hecke_on_k(i, e, false)
}

/// Inclusion `R_m → R_{m+1}`: `k_Ω ↦ k_{Ω^0}`.
pub fn include(e: &BasisExpansion) -> Result<BasisExpansion> {
    let k = convert(e, Basis::K)?;
    let mut out = BasisExpansion::zero(Basis::K, e.m + 1, e.degree);
    for (l, c) in k.coeffs {
        out.coeffs.insert(l.with_zero(), c);
    }
    Ok(out)
}

/// Restriction `R_m → R_{m-1}` (`x_m = 0`): `k_Ω ↦ k_{Ω_-}` if `b_m = 0`, else 0.
pub fn restrict_expansion(e: &BasisExpansion) -> Result<BasisExpansion> {
    if e.m == 0 {
        return contract("restriction needs m ≥ 1");
    }
    let k = convert(e, Basis::K)?;
    let mut out = BasisExpansion::zero(Basis::K, e.m - 1, e.degree);
    for (l, c) in k.coeffs {
        if l.a[e.m - 1] == 0 {
            let mut a = l.a.clone();
            a.pop();
            out.coeffs.insert(MPartition { a, lam: l.lam }, c);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// `℘(p_Λ) = p_Λ / Π_i (1 - t^{λ_i})`, or its inverse; result in the `p` basis.
pub fn plethysm(e: &BasisExpansion, dir: Direction) -> Result<BasisExpansion> {
    let p = convert(e, Basis::P)?;
    let mut out = BasisExpansion::zero(Basis::P, e.m, e.degree);
    for (l, c) in p.coeffs {
        let factor = l.lam.iter().fold(QTScalar::one(), |acc, &k| &acc * &(&QTScalar::one() - &QTScalar::qt_pow(0, k as i32)));
        let v = match dir {
            Direction::Forward => c.checked_div(&factor)?,
            Direction::Inverse => &c * &factor,
        };
        out.coeffs.insert(l, v);
    }
    Ok(out)
}

/// The labels `Ω` with `i(s_Λ) = Σ_Ω s_Ω`: an `(m+1)`-circle added to any
/// symmetric row of the diagram of `Λ`, including a row of size 0.
pub fn inclusion_terms(l: &MPartition) -> Vec<MPartition> {
    let mut parts: Vec<u32> = l.lam.clone();
    parts.dedup();
    parts.push(0);
    parts
        .into_iter()
        .map(|c| {
            let mut a = l.a.clone();
            a.push(c);
            let mut lam = l.lam.clone();
            if let Some(pos) = lam.iter().position(|&x| x == c) {
                lam.remove(pos);
            }
            MPartition { a, lam }
        })
        .collect()
}
