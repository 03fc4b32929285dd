#![allow(non_snake_case)]

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::combinatorics::{enumerate_mpartitions, MPartition};
use crate::error::{domain, Result};
use crate::qt_field::TLaurent;

use super::enumerate::enumerate_S;
use super::word::{charge_ab, Reduction};

/// Memo table for `D_{ΛΩ}(t)`. `order` picks which ascent of `a` the
/// recursion undoes first.
pub struct DTable {
    order: Reduction,
    store: RwLock<HashMap<(MPartition, MPartition), TLaurent>>,
}

impl Default for DTable {
    fn default() -> Self {
        Self::new()
    }
}

impl DTable {
    pub fn new() -> Self {
        Self::with_order(Reduction::Leftmost)
    }

    pub fn with_order(order: Reduction) -> Self {
        DTable { order, store: RwLock::new(HashMap::new()) }
    }

    /// Process-wide table used by [`D_coeff`].
    pub fn global() -> &'static DTable {
        static TABLE: OnceLock<DTable> = OnceLock::new();
        TABLE.get_or_init(DTable::new)
    }

    pub fn get(&self, l: &MPartition, o: &MPartition) -> Result<TLaurent> {
        if l.m() != o.m() || l.degree() != o.degree() {
            return domain(format!("D needs equal m and degree, got {l} and {o}"));
        }
        let key = (l.clone(), o.clone());
        if let Some(v) = self.store.read().expect("memo lock").get(&key) {
            return Ok(v.clone());
        }
        let v = self.compute(l, o)?;
        self.store.write().expect("memo lock").insert(key, v.clone());
        Ok(v)
    }

    fn compute(&self, l: &MPartition, o: &MPartition) -> Result<TLaurent> {
        let a = &l.a;
        let ascents: Vec<usize> = (0..a.len().saturating_sub(1)).filter(|&i| a[i] < a[i + 1]).collect();
        let pick = match self.order {
            Reduction::Leftmost => ascents.first(),
            Reduction::Rightmost => ascents.last(),
        };
        let Some(&i) = pick else {
            let mut sum = TLaurent::zero();
            for t in enumerate_S(l, o)? {
                sum = &sum + &TLaurent::t_pow(charge_ab(&l.a, &o.a, &t)? as i32);
            }
            return Ok(sum);
        };
        let lt = l.swap_a(i + 1);
        let (bi, bj) = (o.a[i], o.a[i + 1]);
        Ok(if bi > bj {
            &TLaurent::t_pow(-1) * &self.get(&lt, &o.swap_a(i + 1))?
        } else if bi < bj {
            let c = &TLaurent::one() - &TLaurent::t_pow(-1);
            &self.get(&lt, &o.swap_a(i + 1))? + &(&c * &self.get(&lt, o)?)
        } else {
            self.get(&lt, o)?
        })
    }

    /// `[D_{ΛΩ}]` with rows `Λ` and columns `Ω` in `enumerate_mpartitions(m, d)` order.
    pub fn matrix(&self, m: usize, d: u32) -> Result<Vec<Vec<TLaurent>>> {
        let all = enumerate_mpartitions(m, d);
        all.iter().map(|l| all.iter().map(|o| self.get(l, o)).collect()).collect()
    }

    pub fn len(&self) -> usize {
        self.store.read().expect("memo lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// `D_{ΛΩ}(t)`, the coefficient of `k_Ω` in `s*_Λ`.
pub fn D_coeff(l: &MPartition, o: &MPartition) -> Result<TLaurent> {
    DTable::global().get(l, o)
}
