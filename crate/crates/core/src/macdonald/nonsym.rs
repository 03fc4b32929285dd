#![allow(non_snake_case)]

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::coeff::{Coeff, Params};
use crate::combinatorics::{compositions, eta_bar_in, Composition};
use crate::error::{contract, Error, Result};
use crate::linalg::{nullspace, Matrix};
use crate::polyring::{cherednik_Y, hecke_T, phi_q, XPolynomial};
use crate::qt_field::QTScalar;

/// Memo of `E_η`, keyed by `η` (the number of variables is `η.len()`).
///
/// Results are identical with the memo disabled. Concurrent readers are
/// allowed; two threads building the same entry write equal values.
pub struct MacdonaldCache<C: Coeff> {
    params: Params<C>,
    memo: bool,
    store: RwLock<HashMap<Composition, Arc<XPolynomial<C>>>>,
}

impl MacdonaldCache<QTScalar> {
    pub fn symbolic() -> Self {
        Self::new(Params::symbolic())
    }
}

impl<C: Coeff> MacdonaldCache<C> {
    pub fn new(params: Params<C>) -> Self {
        MacdonaldCache { params, memo: true, store: RwLock::new(HashMap::new()) }
    }

    pub fn without_memo(params: Params<C>) -> Self {
        MacdonaldCache { params, memo: false, store: RwLock::new(HashMap::new()) }
    }

    pub fn params(&self) -> &Params<C> {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.store.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `E_η` in `η.len()` variables.
    pub fn nonsym_E(&self, eta: &[u32]) -> Result<Arc<XPolynomial<C>>> {
        if eta.is_empty() {
            return contract("E_η needs at least one variable");
        }
        if self.memo {
            if let Some(e) = self.store.read().expect("cache lock").get(eta) {
                return Ok(Arc::clone(e));
            }
        }
        let e = Arc::new(self.build(eta)?);
        if self.memo {
            self.store.write().expect("cache lock").insert(eta.to_vec(), Arc::clone(&e));
        }
        Ok(e)
    }

    fn build(&self, eta: &[u32]) -> Result<XPolynomial<C>> {
        let n = eta.len();
        if eta.iter().all(|&v| v == 0) {
            return Ok(XPolynomial::one(n));
        }
        if eta[n - 1] > 0 {
            let (hat, e) = self.raise_step(eta);
            let prev = self.nonsym_E(&hat)?;
            return Ok(phi_q(&self.params, &prev)?.scale(&e));
        }
        let j = eta.iter().rposition(|&v| v > 0).expect("non-zero composition");
        let mut zeta = eta.to_vec();
        zeta.swap(j, j + 1);
        let prev = self.nonsym_E(&zeta)?;
        swap_step(&self.params, &zeta, j + 1, &prev)
    }

    /// `η̂ = (η_N - 1, η_1, …, η_{N-1})` and the factor `t^{N - r_η̂(1)}`.
    fn raise_step(&self, eta: &[u32]) -> (Composition, C) {
        raise_step(&self.params, eta)
    }
}

fn raise_step<C: Coeff>(p: &Params<C>, eta: &[u32]) -> (Composition, C) {
    let n = eta.len();
    let mut hat = Vec::with_capacity(n);
    hat.push(eta[n - 1] - 1);
    hat.extend_from_slice(&eta[..n - 1]);
    let r1 = crate::combinatorics::circle_rows(&hat)[0];
    (hat, p.t_pow(n as i32 - r1 as i32))
}

/// `E_{s_j ζ}` from `E_ζ` when `ζ_j < ζ_{j+1}` (`j` 1-based):
/// `E_{s_j ζ} = t^{-1} (T_j - (t-1)/(1 - δ^{-1})) E_ζ`, `δ = ζ̄_j / ζ̄_{j+1}`.
fn swap_step<C: Coeff>(p: &Params<C>, zeta: &[u32], j: usize, e: &XPolynomial<C>) -> Result<XPolynomial<C>> {
    debug_assert!(zeta[j - 1] < zeta[j]);
    let delta_inv = eta_bar_in(p, zeta, j + 1).checked_div(&eta_bar_in(p, zeta, j))?;
    let c = p.t.sub_ref(&C::one()).checked_div(&C::one().sub_ref(&delta_inv))?;
    let te = hecke_T(p, j, e)?;
    Ok(te.sub(&e.scale(&c)).scale(&p.t_pow(-1)))
}

/// `E_η` along a different path: undo the leftmost descent first and apply
/// the raising step only to weakly increasing compositions. Not memoized.
pub fn nonsym_E_alt<C: Coeff>(p: &Params<C>, eta: &[u32]) -> Result<XPolynomial<C>> {
    let n = eta.len();
    if n == 0 {
        return contract("E_η needs at least one variable");
    }
    if eta.iter().all(|&v| v == 0) {
        return Ok(XPolynomial::one(n));
    }
    if let Some(i) = (0..n - 1).find(|&i| eta[i] > eta[i + 1]) {
        let mut zeta = eta.to_vec();
        zeta.swap(i, i + 1);
        let prev = nonsym_E_alt(p, &zeta)?;
        return swap_step(p, &zeta, i + 1, &prev);
    }
    let (hat, e) = raise_step(p, eta);
    Ok(phi_q(p, &nonsym_E_alt(p, &hat)?)?.scale(&e))
}

/// `E_η` as the joint eigenvector of `Y_1, …, Y_N` on all monomials of
/// degree `|η|`, normalized so the coefficient of `x^η` is 1.
pub fn eigensolve_E<C: Coeff>(p: &Params<C>, eta: &[u32]) -> Result<XPolynomial<C>> {
    let n = eta.len();
    let d: u32 = eta.iter().sum();
    let basis = compositions(n, d);
    let exps: Vec<Vec<u16>> = basis.iter().map(|c| c.iter().map(|&v| v as u16).collect()).collect();
    let index: HashMap<&Vec<u16>, usize> = exps.iter().enumerate().map(|(k, e)| (e, k)).collect();
    let dim = basis.len();
    let mut rows: Matrix<C> = Vec::new();
    for i in 1..=n {
        let ev = eta_bar_in(p, eta, i);
        let mut block = vec![vec![C::zero(); dim]; dim];
        for (col, e) in exps.iter().enumerate() {
            let img = cherednik_Y(p, i, &XPolynomial::monomial(e.clone(), C::one()))?;
            for (g, c) in img.terms() {
                block[index[g]][col] = c.clone();
            }
            block[col][col] = block[col][col].sub_ref(&ev);
        }
        rows.extend(block);
    }
    let ns = nullspace(&rows)?;
    if ns.len() != 1 {
        return Err(Error::Internal(format!("joint eigenspace for {eta:?} has dimension {}", ns.len())));
    }
    let k = basis.iter().position(|c| c == eta).expect("η is in its own degree");
    let lead = ns[0][k].clone();
    let mut out = XPolynomial::zero(n);
    for (e, c) in exps.into_iter().zip(&ns[0]) {
        out.add_term(e, c.checked_div(&lead)?);
    }
    Ok(out)
}
