use crate::combinatorics::{enumerate_mpartitions, partitions_max_len, MPartition};
use crate::error::Result;
use crate::qt_field::QTPoly;

use super::report::{equal, Bounds, Suite, VerificationReport};
use super::table::kostka_table;

fn k(omega: &MPartition, lam: &MPartition) -> Result<QTPoly> {
    Ok(kostka_table(lam)?.get(omega))
}

fn repro(l: &MPartition, extra: &MPartition) -> String {
    format!("msym kostka {l}; msym kostka {extra}")
}

pub(super) fn distinct(p: &[u32]) -> Vec<u32> {
    let mut v = p.to_vec();
    v.dedup();
    v
}

pub(super) fn without(p: &[u32], x: u32) -> Vec<u32> {
    let mut v = p.to_vec();
    if let Some(i) = v.iter().position(|&y| y == x) {
        v.remove(i);
    }
    v
}

fn appended(a: &[u32], x: u32) -> Vec<u32> {
    let mut v = a.to_vec();
    v.push(x);
    v
}

pub(super) fn prepended(x: u32, a: &[u32]) -> Vec<u32> {
    let mut v = vec![x];
    v.extend_from_slice(a);
    v
}

/// Relations (1)–(3): moving a symmetric entry to a new non-symmetric column.
fn column_relations(b: &Bounds) -> Result<[Suite; 3]> {
    let mut r1 = Suite::new("kostka relation 1", "");
    let mut r2 = Suite::new("kostka relation 2", "");
    let mut r3 = Suite::new("kostka relation 3", "");
    for (m, d) in b.blocks().filter(|&(m, _)| m < b.m_max) {
        let labels = enumerate_mpartitions(m, d);
        for l in &labels {
            let zero = l.with_zero();
            for o in &labels {
                let lhs = k(o, l)?;
                let rhs = k(&o.with_zero(), &zero)?;
                r2.check_with(format!("K[{o}, {l}]"), repro(l, &zero), Ok(equal(&lhs, &rhs)));
            }
            for lj in distinct(&l.lam) {
                let moved = MPartition { a: appended(&l.a, lj), lam: without(&l.lam, lj) };
                let below = l.a.iter().filter(|&&x| x < lj).count() as u32;
                let pre = QTPoly::monomial(1.into(), lj, below);
                for o in &labels {
                    let lhs = &pre * &k(o, l)?;
                    let rhs = k(&o.with_zero(), &moved)?;
                    r1.check_with(format!("K[{o}, {l}], λ_j = {lj}"), repro(l, &moved), Ok(equal(&lhs, &rhs)));
                }
            }
            if l.lam.is_empty() {
                for o in &labels {
                    for mj in distinct(&o.lam) {
                        let moved = MPartition { a: appended(&o.a, mj), lam: without(&o.lam, mj) };
                        let lhs = k(o, l)?;
                        let rhs = k(&moved, &zero)?;
                        r3.check_with(format!("K[{o}, {l}], μ_j = {mj}"), repro(l, &zero), Ok(equal(&lhs, &rhs)));
                    }
                }
            }
        }
    }
    Ok([r1, r2, r3])
}

/// Relations (4) and (5): adjacent non-symmetric columns.
fn swap_relations(b: &Bounds) -> Result<[Suite; 2]> {
    let mut r4 = Suite::new("kostka relation 4", "");
    let mut r5 = Suite::new("kostka relation 5", "");
    let t = QTPoly::t();
    for (m, d) in b.blocks() {
        let labels = enumerate_mpartitions(m, d);
        for l in &labels {
            for i in 1..m {
                for o in &labels {
                    if l.a[i - 1] == l.a[i] && o.a[i - 1] > o.a[i] {
                        let (lhs, rhs) = (k(o, l)?, k(&o.swap_a(i), l)?);
                        r4.check_with(format!("K[{o}, {l}], i = {i}"), repro(l, l), Ok(equal(&lhs, &rhs)));
                    }
                    if o.a[i - 1] == o.a[i] && l.a[i - 1] > l.a[i] {
                        let sl = l.swap_a(i);
                        let (lhs, rhs) = (&t * &k(o, l)?, k(o, &sl)?);
                        r5.check_with(format!("K[{o}, {l}], i = {i}"), repro(l, &sl), Ok(equal(&lhs, &rhs)));
                    }
                }
            }
        }
    }
    Ok([r4, r5])
}

/// `K_{μλ} = Σ_{μ_i} K_{(μ_i-1; μ∖μ_i), (λ_j-1; λ∖λ_j)}` over distinct parts `μ_i`.
fn one_circle_decomposition(b: &Bounds) -> Result<Suite> {
    let mut s = Suite::new("m=1 decomposition of classical coefficients", "");
    for d in 1..=b.d_max {
        let parts = partitions_max_len(d, d as usize);
        for lam in &parts {
            let l = MPartition { a: vec![], lam: lam.clone() };
            for lj in distinct(lam) {
                let src = MPartition { a: vec![lj - 1], lam: without(lam, lj) };
                for mu in &parts {
                    let o = MPartition { a: vec![], lam: mu.clone() };
                    let lhs = k(&o, &l)?;
                    let mut rhs = QTPoly::zero();
                    for mi in distinct(mu) {
                        let target = MPartition { a: vec![mi - 1], lam: without(mu, mi) };
                        rhs = &rhs + &k(&target, &src)?;
                    }
                    s.check_with(format!("K[{o}, {l}], λ_j = {lj}"), repro(&l, &src), Ok(equal(&lhs, &rhs)));
                }
            }
        }
    }
    Ok(s)
}

/// Relations (1)–(5) among the `K_{ΩΛ}` and the `m = 1` decomposition of the
/// classical coefficients. Relations that add a column need `m < m_max`.
pub fn verify_kostka_relations(bounds: Bounds) -> Result<VerificationReport> {
    let mut suites: Vec<Suite> = column_relations(&bounds)?.into_iter().collect();
    suites.extend(swap_relations(&bounds)?);
    suites.push(one_circle_decomposition(&bounds)?);
    Ok(VerificationReport { bounds, suites: suites.into_iter().map(Suite::finish).collect() })
}
