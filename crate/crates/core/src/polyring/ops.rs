#![allow(non_snake_case)]

use std::collections::BTreeMap;

use crate::coeff::{Coeff, Params};
use crate::error::{contract, Error, Result};

use super::xpoly::{Exponent, XPolynomial};

fn check_index<C: Coeff>(f: &XPolynomial<C>, i: usize) -> Result<()> {
    if i == 0 || i >= f.nvars() {
        return contract(format!("operator index {i} out of range for {} variables", f.nvars()));
    }
    Ok(())
}

/// Splits `f` into blocks that are homogeneous of degree `n` in `(x_i, x_{i+1})`
/// with all other exponents fixed. Each block is keyed by its exponent with
/// position `i` holding `n` and position `i+1` zeroed, and stored as the
/// coefficient vector of `x_i^a x_{i+1}^{n-a}`, indexed by `a`.
fn blocks<C: Coeff>(f: &XPolynomial<C>, i: usize) -> BTreeMap<Exponent, Vec<C>> {
    let mut out: BTreeMap<Exponent, Vec<C>> = BTreeMap::new();
    for (e, c) in f.terms() {
        let (a, b) = (e[i - 1], e[i]);
        let n = (a + b) as usize;
        let mut key = e.clone();
        key[i - 1] = a + b;
        key[i] = 0;
        let v = out.entry(key).or_insert_with(|| vec![C::zero(); n + 1]);
        v[a as usize] = c.clone();
    }
    out
}

fn unblock<C: Coeff>(nvars: usize, i: usize, key: &Exponent, v: Vec<C>, out: &mut XPolynomial<C>) {
    debug_assert_eq!(out.nvars(), nvars);
    let n = key[i - 1] as usize;
    for (a, c) in v.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut e = key.clone();
        e[i - 1] = a as u16;
        e[i] = (n - a) as u16;
        out.add_term(e, c);
    }
}

/// Quotient of a homogeneous block by `u - v`, or `None` if the remainder is non-zero.
fn div_block<C: Coeff>(c: &[C]) -> Option<Vec<C>> {
    let n = c.len() - 1;
    if n == 0 {
        return if c[0].is_zero() { Some(Vec::new()) } else { None };
    }
    let mut d = Vec::with_capacity(n);
    let mut prev = C::zero();
    for ca in &c[..n] {
        prev = prev.sub_ref(ca);
        d.push(prev.clone());
    }
    if d[n - 1] == c[n] {
        Some(d)
    } else {
        None
    }
}

/// Exact quotient `f / (x_i - x_{i+1})`.
pub fn divide_by_difference<C: Coeff>(f: &XPolynomial<C>, i: usize) -> Result<XPolynomial<C>> {
    check_index(f, i)?;
    let mut out = XPolynomial::zero(f.nvars());
    for (key, v) in blocks(f, i) {
        let q = div_block(&v)
            .ok_or_else(|| Error::Internal(format!("x{} - x{} does not divide the polynomial", i, i + 1)))?;
        if q.is_empty() {
            continue;
        }
        let mut k = key.clone();
        k[i - 1] -= 1;
        unblock(f.nvars(), i, &k, q, &mut out);
    }
    Ok(out)
}

/// Hecke generator `T_i f = t f + (t x_i - x_{i+1}) (K_{i,i+1} f - f) / (x_i - x_{i+1})`.
pub fn hecke_T<C: Coeff>(p: &Params<C>, i: usize, f: &XPolynomial<C>) -> Result<XPolynomial<C>> {
    check_index(f, i)?;
    let t = &p.t;
    let mut out = XPolynomial::zero(f.nvars());
    for (key, c) in blocks(f, i) {
        let n = c.len() - 1;
        let diff: Vec<C> = (0..=n).map(|a| c[n - a].sub_ref(&c[a])).collect();
        let q = div_block(&diff).ok_or_else(|| {
            Error::Internal(format!("non-exact divided difference in T_{i}"))
        })?;
        let r: Vec<C> = (0..=n)
            .map(|a| {
                let mut s = t.mul_ref(&c[a]);
                if a >= 1 && a - 1 < q.len() {
                    s = s.add_ref(&t.mul_ref(&q[a - 1]));
                }
                if a < q.len() {
                    s = s.sub_ref(&q[a]);
                }
                s
            })
            .collect();
        unblock(f.nvars(), i, &key, r, &mut out);
    }
    Ok(out)
}

/// `T_i^{-1} = t^{-1} - 1 + t^{-1} T_i`.
pub fn hecke_T_inverse<C: Coeff>(p: &Params<C>, i: usize, f: &XPolynomial<C>) -> Result<XPolynomial<C>> {
    let tf = hecke_T(p, i, f)?;
    let t_inv = p.t_pow(-1);
    Ok(f.add(&tf).scale(&t_inv).sub(f))
}

/// `ω = K_{N-1,N} ⋯ K_{1,2} τ_1`: sends `x^α` to `q^{α_1} x^{(α_2, …, α_N, α_1)}`.
pub fn omega<C: Coeff>(p: &Params<C>, f: &XPolynomial<C>) -> Result<XPolynomial<C>> {
    let n = f.nvars();
    let mut out = XPolynomial::zero(n);
    if n == 0 {
        return Ok(f.clone());
    }
    for (e, c) in f.terms() {
        let mut g = e[1..].to_vec();
        g.push(e[0]);
        out.add_term(g, c.mul_ref(&p.q.powi(e[0] as i32)?));
    }
    Ok(out)
}

/// Cherednik operator `Y_i = t^{i-N} T_i ⋯ T_{N-1} ω T_1^{-1} ⋯ T_{i-1}^{-1}`.
pub fn cherednik_Y<C: Coeff>(p: &Params<C>, i: usize, f: &XPolynomial<C>) -> Result<XPolynomial<C>> {
    let n = f.nvars();
    if i == 0 || i > n {
        return contract(format!("Y_{i} undefined for {n} variables"));
    }
    let mut g = f.clone();
    for j in (1..i).rev() {
        g = hecke_T_inverse(p, j, &g)?;
    }
    g = omega(p, &g)?;
    for j in (i..n).rev() {
        g = hecke_T(p, j, &g)?;
    }
    Ok(g.scale(&p.t_pow(i as i32 - n as i32)))
}

/// `T_{k_last} ⋯ T_{k_first} f` applied in the order given.
fn chain<C: Coeff>(p: &Params<C>, f: &XPolynomial<C>, idx: impl Iterator<Item = usize>) -> Result<XPolynomial<C>> {
    let mut g = f.clone();
    for j in idx {
        g = hecke_T(p, j, &g)?;
    }
    Ok(g)
}

/// Sum of the partial chains `f + T_{j1} f + T_{j2} T_{j1} f + …`.
fn chain_sum<C: Coeff>(
    p: &Params<C>,
    f: &XPolynomial<C>,
    idx: impl Iterator<Item = usize>,
) -> Result<XPolynomial<C>> {
    let mut acc = f.clone();
    let mut h = f.clone();
    for j in idx {
        h = hecke_T(p, j, &h)?;
        acc.add_assign(&h);
    }
    Ok(acc)
}

/// t-symmetrizer `S^t_{m,N}` over `x_{m+1}, …, x_N`, as the product
/// `O_{m+1} ⋯ O_{N-1}` with `O_k = 1 + T_k + T_{k+1} T_k + … + T_{N-1} ⋯ T_k`.
pub fn symmetrize<C: Coeff>(p: &Params<C>, m: usize, f: &XPolynomial<C>) -> Result<XPolynomial<C>> {
    let n = f.nvars();
    if m >= n.max(1) {
        return contract(format!("symmetrize needs m < N, got m={m}, N={n}"));
    }
    let mut g = f.clone();
    for k in (m + 1..n).rev() {
        g = chain_sum(p, &g, k..n)?;
    }
    Ok(g)
}

/// Raising operator `Φ_q = t^{1-N} T_{N-1} ⋯ T_1 x_1`.
pub fn phi_q<C: Coeff>(p: &Params<C>, f: &XPolynomial<C>) -> Result<XPolynomial<C>> {
    let n = f.nvars();
    if n == 0 {
        return contract("Φ_q needs at least one variable");
    }
    let g = chain(p, &f.mul_var(1), 1..n)?;
    Ok(g.scale(&p.t_pow(1 - n as i32)))
}

/// `Ψ_N = (1-t)(1 + T_{N-1} + T_{N-2} T_{N-1} + … + T_m ⋯ T_{N-1}) Φ_q`.
pub fn psi_N<C: Coeff>(p: &Params<C>, f: &XPolynomial<C>, m: usize) -> Result<XPolynomial<C>> {
    let n = f.nvars();
    if m == 0 || m >= n {
        return contract(format!("Ψ_N needs 1 ≤ m < N, got m={m}, N={n}"));
    }
    let g = phi_q(p, f)?;
    let acc = chain_sum(p, &g, (m..n).rev())?;
    Ok(acc.scale(&C::one().sub_ref(&p.t)))
}

/// `D = Y_{m+1} + … + Y_N - Σ_{i=ℓ*+1}^{N} t^{1-i}`.
pub fn eigen_D<C: Coeff>(p: &Params<C>, f: &XPolynomial<C>, m: usize, lstar: usize) -> Result<XPolynomial<C>> {
    let n = f.nvars();
    if m > n || lstar > n {
        return contract(format!("D needs m, ℓ* ≤ N, got m={m}, ℓ*={lstar}, N={n}"));
    }
    let mut acc = XPolynomial::zero(n);
    for i in m + 1..=n {
        acc.add_assign(&cherednik_Y(p, i, f)?);
    }
    let mut shift = C::zero();
    for i in lstar + 1..=n {
        shift = shift.add_ref(&p.t_pow(1 - i as i32));
    }
    Ok(acc.sub(&f.scale(&shift)))
}

/// Restriction `R_{m+1} → R_m`: sets `x_{m+1} = 0` and relabels the later variables.
pub fn restrict<C: Coeff>(f: &XPolynomial<C>, m: usize) -> Result<XPolynomial<C>> {
    let n = f.nvars();
    if m >= n {
        return contract(format!("restriction needs m < N, got m={m}, N={n}"));
    }
    for i in m + 2..n {
        if !f.is_symmetric_in(i) {
            return contract(format!("input is not symmetric in x{} and x{}", i, i + 1));
        }
    }
    Ok(f.set_var_zero(m + 1))
}
