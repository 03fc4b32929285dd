#![allow(non_snake_case)]

use serde::Serialize;

use crate::coeff::{Coeff, Params};
use crate::combinatorics::{c_hook, diagram_of, u_norm, Composition, MPartition};
use crate::error::{domain, Result};
use crate::polyring::{cherednik_Y, eigen_D, hecke_T, symmetrize, XPolynomial};

use super::MacdonaldCache;

/// `η_{Λ,N} = (a_1, …, a_m, 0^n, λ_ℓ, …, λ_1)` with `n = N - m - ℓ(λ)`.
pub fn eta_of(l: &MPartition, n_vars: usize) -> Result<Composition> {
    let need = l.len();
    if n_vars < need || n_vars == 0 {
        return domain(format!("N = {n_vars} is too small for {l} (needs at least {})", need.max(1)));
    }
    let mut eta = l.a.clone();
    eta.extend(std::iter::repeat(0).take(n_vars - need));
    eta.extend(l.lam.iter().rev());
    Ok(eta)
}

impl<C: Coeff> MacdonaldCache<C> {
    /// `P_Λ = S^t_{m,N} E_{η_{Λ,N}} / u_{Λ,N}(t)` in `N` variables.
    pub fn msym_P(&self, l: &MPartition, n_vars: usize) -> Result<XPolynomial<C>> {
        let eta = eta_of(l, n_vars)?;
        let e = self.nonsym_E(&eta)?;
        let s = if l.m() < n_vars { symmetrize(self.params(), l.m(), &e)? } else { (*e).clone() };
        let u = self.params().laurent(&u_norm(l, n_vars)?);
        s.try_map_coeffs(|c| c.checked_div(&u))
    }

    /// `J_Λ = c_Λ(q,t) P_Λ`.
    pub fn integral_J(&self, l: &MPartition, n_vars: usize) -> Result<XPolynomial<C>> {
        Ok(self.msym_P(l, n_vars)?.scale(&self.params().poly(&c_hook(l))))
    }
}

/// Non-symmetric Hall–Littlewood polynomial `H_a` in `a.len()` variables:
/// `x^a` for dominant `a`, and `H_a = T_i H_{s_i a}` when `a_i < a_{i+1}`.
pub fn hall_littlewood<C: Coeff>(p: &Params<C>, a: &[u32]) -> Result<XPolynomial<C>> {
    match (0..a.len().saturating_sub(1)).find(|&i| a[i] < a[i + 1]) {
        None => Ok(XPolynomial::monomial(a.iter().map(|&v| v as u16).collect(), C::one())),
        Some(i) => {
            let mut b = a.to_vec();
            b.swap(i, i + 1);
            hecke_T(p, i + 1, &hall_littlewood(p, &b)?)
        }
    }
}

/// `ε^{(i)}_Λ = q^{a_i} t^{1 - r_Λ(i)}`, `1 ≤ i ≤ m`.
pub fn eigenvalue_Y<C: Coeff>(p: &Params<C>, l: &MPartition, i: usize) -> C {
    let r = diagram_of(l).row_of_circle(i).expect("circle label in range");
    p.qt_pow(l.a[i - 1] as i32, 1 - r as i32)
}

/// `ε^D_Λ`: sum of `q^{len} t^{1 - row}` over the rows without a circle.
pub fn eigenvalue_D<C: Coeff>(p: &Params<C>, l: &MPartition) -> C {
    let mut acc = C::zero();
    for (k, row) in diagram_of(l).rows.iter().enumerate() {
        if row.circle.is_none() {
            acc = acc.add_ref(&p.qt_pow(row.len as i32, -(k as i32)));
        }
    }
    acc
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenCheck {
    pub equation: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenReport {
    pub label: String,
    pub nvars: usize,
    pub checks: Vec<EigenCheck>,
}

impl EigenReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Checks `Y_i P_Λ = ε^{(i)}_Λ P_Λ` for `i ≤ m` and `D P_Λ = ε^D_Λ P_Λ`.
pub fn verify_eigen<C: Coeff>(cache: &MacdonaldCache<C>, l: &MPartition, n_vars: usize) -> Result<EigenReport> {
    let p = cache.params();
    let f = cache.msym_P(l, n_vars)?;
    let mut checks = Vec::new();
    for i in 1..=l.m() {
        let lhs = cherednik_Y(p, i, &f)?;
        checks.push(EigenCheck {
            equation: format!("Y_{i} P = eps_{i} P"),
            pass: lhs == f.scale(&eigenvalue_Y(p, l, i)),
        });
    }
    let lhs = eigen_D(p, &f, l.m(), l.len())?;
    checks.push(EigenCheck { equation: "D P = eps_D P".into(), pass: lhs == f.scale(&eigenvalue_D(p, l)) });
    Ok(EigenReport { label: l.to_string(), nvars: n_vars, checks })
}
