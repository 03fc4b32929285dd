//! Compositions, partitions, m-partitions and their diagrams.

mod diagram;
mod enumerate;
mod hooks;
mod order;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{contract, Error, Result};

pub(crate) use diagram::circle_rows;
pub use diagram::{diagram_of, diagram_of_composition, eta_bar, eta_bar_in, CircleDiagram, Row};
pub use enumerate::{compositions, enumerate_mpartitions, partitions, partitions_max_len};
pub use hooks::{arm_leg, c_hook, count_syt, u_norm};
pub use order::{bruhat_less, dominance_leq, partition_dominates};

/// Weak composition: a finite sequence of non-negative integers.
pub type Composition = Vec<u32>;
/// Partition: weakly decreasing positive integers.
pub type Partition = Vec<u32>;

pub fn is_partition(p: &[u32]) -> bool {
    p.iter().all(|&x| x > 0) && p.windows(2).all(|w| w[0] >= w[1])
}

/// Sorts decreasingly and drops zeros.
pub fn sort_partition(v: &[u32]) -> Partition {
    let mut p: Vec<u32> = v.iter().copied().filter(|&x| x > 0).collect();
    p.sort_unstable_by(|a, b| b.cmp(a));
    p
}

/// Number of pairs `i < j` with `b_i < b_j`.
pub fn inv_count(b: &[u32]) -> usize {
    let mut n = 0;
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            if b[i] < b[j] {
                n += 1;
            }
        }
    }
    n
}

/// Multiplicities `n_λ(i)` of the distinct parts of a partition.
pub fn multiplicities(p: &[u32]) -> Vec<(u32, usize)> {
    let mut out: Vec<(u32, usize)> = Vec::new();
    for &x in p {
        match out.last_mut() {
            Some((v, k)) if *v == x => *k += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// An m-partition `(a; λ)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MPartition {
    pub a: Composition,
    pub lam: Partition,
}

impl MPartition {
    pub fn new(a: Composition, lam: Partition) -> Result<Self> {
        if !is_partition(&lam) {
            return contract(format!("{lam:?} is not a partition"));
        }
        Ok(MPartition { a, lam })
    }

    /// `(a; ∅)`.
    pub fn from_composition(a: &[u32]) -> Self {
        MPartition { a: a.to_vec(), lam: Vec::new() }
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    pub fn degree(&self) -> u32 {
        self.a.iter().sum::<u32>() + self.lam.iter().sum::<u32>()
    }

    /// `ℓ(Λ) = m + ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.a.len() + self.lam.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// True when `a` is weakly decreasing.
    pub fn is_dominant(&self) -> bool {
        self.a.windows(2).all(|w| w[0] >= w[1])
    }

    /// `Λ^{(i)} = (a + 1^i) ∪ λ`, zeros removed.
    pub fn lambda_upper(&self, i: usize) -> Result<Partition> {
        if i > self.m() {
            return contract(format!("lambda_upper index {i} exceeds m = {}", self.m()));
        }
        let mut v: Vec<u32> = self.lam.clone();
        for (k, &x) in self.a.iter().enumerate() {
            v.push(x + u32::from(k < i));
        }
        Ok(sort_partition(&v))
    }

    /// Exchanges `a_i` and `a_{i+1}` (1-based `i`).
    pub fn swap_a(&self, i: usize) -> Self {
        let mut a = self.a.clone();
        a.swap(i - 1, i);
        MPartition { a, lam: self.lam.clone() }
    }

    /// Appends a trailing zero to `a`.
    pub fn with_zero(&self) -> Self {
        let mut a = self.a.clone();
        a.push(0);
        MPartition { a, lam: self.lam.clone() }
    }
}

impl fmt::Display for MPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", join(&self.a), join(&self.lam))
    }
}

pub(crate) fn join(v: &[u32]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Parses a comma-separated list of non-negative integers; empty input is the empty list.
pub fn parse_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim().parse::<u32>().map_err(|_| Error::Parse {
                token: tok.trim().to_string(),
                msg: "expected a non-negative integer".into(),
            })
        })
        .collect()
}

impl FromStr for MPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (a, l) = s.split_once('|').ok_or_else(|| Error::Parse {
            token: s.to_string(),
            msg: "expected `a1,..,am|l1,l2,..`".into(),
        })?;
        let a = parse_list(a)?;
        let lam = parse_list(l)?;
        if !is_partition(&lam) {
            return Err(Error::Parse { token: l.to_string(), msg: "not a partition (positive, weakly decreasing)".into() });
        }
        Ok(MPartition { a, lam })
    }
}

impl Serialize for MPartition {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for MPartition {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests;
