use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::bases::BasisCache;
use crate::combinatorics::{sort_partition, Composition, MPartition};
use crate::error::{domain, Error, Result};
use crate::linalg::Matrix;
use crate::qt_field::{QTPoly, QTScalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KostkaEntry {
    pub label: MPartition,
    pub value: QTPoly,
    pub nonnegative: bool,
}

/// `K_{ΩΛ}(q,t)` for a fixed `Λ`, defined by `℘(J_Λ) = Σ_Ω K_{ΩΛ} s_Ω`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KostkaTable {
    pub source: MPartition,
    /// Non-zero entries in canonical label order.
    pub entries: Vec<KostkaEntry>,
}

impl KostkaTable {
    pub fn get(&self, o: &MPartition) -> QTPoly {
        self.entries.iter().find(|e| &e.label == o).map(|e| e.value.clone()).unwrap_or_else(QTPoly::zero)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn row_times(v: &[QTScalar], a: &Matrix<QTScalar>) -> Vec<QTScalar> {
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

/// `k`-basis coefficients `c_Ω` of `℘(J_Λ)`, with `J_Λ` realized in `n` variables.
pub fn plethystic_k_coeffs(l: &MPartition, n: usize) -> Result<Vec<QTScalar>> {
    let (m, d) = (l.m(), l.degree());
    if n < m + d as usize {
        return domain(format!("{l} needs N ≥ {}, got {n}", m + d as usize));
    }
    let cache = BasisCache::global();
    let blk = cache.block(m, d);
    let j = cache.mac.integral_J(l, n.max(2))?;
    let in_m = crate::bases::monomial_coeffs(&j, &blk.labels, m);
    let (pm, pm_inv) = blk.p_matrices()?;
    let mut in_p = row_times(&in_m, pm_inv);
    for (c, o) in in_p.iter_mut().zip(&blk.labels) {
        let f = o.lam.iter().fold(QTScalar::one(), |acc, &k| &acc * &(&QTScalar::one() - &QTScalar::qt_pow(0, k as i32)));
        *c = c.checked_div(&f)?;
    }
    let in_m = row_times(&in_p, pm);
    Ok(row_times(&in_m, &blk.k_matrices()?.1))
}

/// `K_{ΓΛ} = Σ_Ω D_{ΓΩ}(t) c_Ω`, asserted to lie in `ℤ[q,t]`.
fn project(cache: &BasisCache, source: &MPartition, gamma: &MPartition, labels: &[MPartition], c: &[QTScalar]) -> Result<QTPoly> {
    let mut acc = QTScalar::zero();
    for (o, x) in labels.iter().zip(c) {
        if x.is_zero() {
            continue;
        }
        let dv = cache.dtable.get(gamma, o)?;
        if !dv.is_zero() {
            acc = &acc + &(x * &dv.to_qt());
        }
    }
    acc.as_poly()
        .cloned()
        .ok_or_else(|| Error::Internal(format!("K[{gamma}, {source}] = {acc} is not a polynomial")))
}

/// Kostka table with `J_Λ` realized in `n ≥ m + |Λ|` variables (uncached).
pub fn kostka_table_in(l: &MPartition, n: usize) -> Result<KostkaTable> {
    let cache = BasisCache::global();
    let blk = cache.block(l.m(), l.degree());
    let c = plethystic_k_coeffs(l, n)?;
    let mut entries = Vec::new();
    for g in &blk.labels {
        let value = project(cache, l, g, &blk.labels, &c)?;
        if !value.is_zero() {
            entries.push(KostkaEntry { label: g.clone(), nonnegative: value.is_nonnegative(), value });
        }
    }
    Ok(KostkaTable { source: l.clone(), entries })
}

/// Kostka table `Ω ↦ K_{ΩΛ}(q,t)`, memoized per process.
pub fn kostka_table(l: &MPartition) -> Result<Arc<KostkaTable>> {
    static CACHE: OnceLock<RwLock<HashMap<MPartition, Arc<KostkaTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().expect("kostka lock").get(l) {
        return Ok(t.clone());
    }
    let t = Arc::new(kostka_table_in(l, l.m() + l.degree() as usize)?);
    Ok(cache.write().expect("kostka lock").entry(l.clone()).or_insert(t).clone())
}

/// `Ω^ω = (ω_1, …, ω_ℓ; (ω_{ℓ+1}, …)^+)`.
fn omega_label(omega: &[u32], len: usize) -> MPartition {
    let mut a: Vec<u32> = omega.iter().take(len).copied().collect();
    a.resize(len, 0);
    let tail: Vec<u32> = omega.iter().skip(len).copied().filter(|&x| x > 0).collect();
    MPartition { a, lam: sort_partition(&tail) }
}

fn check_degrees(omega: &[u32], eta: &[u32]) -> Result<()> {
    let (dw, de): (u32, u32) = (omega.iter().sum(), eta.iter().sum());
    if dw != de {
        return domain(format!("|ω| = {dw} differs from |η| = {de}"));
    }
    Ok(())
}

/// `K_{ωη}(q,t) = K_{Ω^ω, (η;∅)}(q,t)` at `m = ℓ(η)`.
pub fn kostka_composition(omega: &[u32], eta: &[u32]) -> Result<QTPoly> {
    check_degrees(omega, eta)?;
    let source = MPartition { a: eta.to_vec(), lam: Vec::new() };
    Ok(kostka_table(&source)?.get(&omega_label(omega, eta.len())))
}

/// `℘(J_η) = Σ_ω K_{ωη} H_ω mod L_m`, as the map `ω ↦ K_{ωη}` over
/// compositions of length `m` (non-zero entries only).
#[allow(non_snake_case)]
pub fn expand_mod_Lm(eta: &[u32], m: usize) -> Result<BTreeMap<Composition, QTPoly>> {
    if m < eta.len() {
        return domain(format!("m = {m} is smaller than ℓ(η) = {}", eta.len()));
    }
    let mut a = eta.to_vec();
    a.resize(m, 0);
    let source = MPartition { a, lam: Vec::new() };
    let cache = BasisCache::global();
    let blk = cache.block(m, source.degree());
    let c = plethystic_k_coeffs(&source, m + source.degree() as usize)?;
    let mut out = BTreeMap::new();
    for g in blk.labels.iter().filter(|g| g.lam.is_empty()) {
        let v = project(cache, &source, g, &blk.labels, &c)?;
        if !v.is_zero() {
            out.insert(g.a.clone(), v);
        }
    }
    Ok(out)
}
