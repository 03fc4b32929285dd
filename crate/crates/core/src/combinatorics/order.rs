use crate::error::{domain, Result};

use super::{sort_partition, MPartition};

/// `μ ≤ λ` in dominance order (both partitions of the same size).
pub fn partition_dominates(lam: &[u32], mu: &[u32]) -> bool {
    let n = lam.len().max(mu.len());
    let (mut sl, mut sm) = (0u64, 0u64);
    for k in 0..n {
        sl += *lam.get(k).unwrap_or(&0) as u64;
        sm += *mu.get(k).unwrap_or(&0) as u64;
        if sm > sl {
            return false;
        }
    }
    sl == sm
}

/// `Ω ≤ Λ`: `Ω^{(i)} ≤ Λ^{(i)}` for every `i = 0..m`.
pub fn dominance_leq(omega: &MPartition, lam: &MPartition) -> Result<bool> {
    if omega.m() != lam.m() || omega.degree() != lam.degree() {
        return domain(format!("cannot compare {omega} and {lam}: different m or degree"));
    }
    for i in 0..=lam.m() {
        if !partition_dominates(&lam.lambda_upper(i)?, &omega.lambda_upper(i)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Position of each entry in the stable decreasing sort of `eta`; this is
/// the minimal-length permutation carrying `η⁺` to `η`.
fn sorting_permutation(eta: &[u32]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..eta.len()).collect();
    idx.sort_by(|&x, &y| eta[y].cmp(&eta[x]).then(x.cmp(&y)));
    let mut w = vec![0; eta.len()];
    for (rank, &pos) in idx.iter().enumerate() {
        w[pos] = rank;
    }
    w
}

/// Bruhat order `u ≤ v` via the tableau criterion.
fn bruhat_leq(u: &[usize], v: &[usize]) -> bool {
    for k in 1..u.len() {
        let mut a: Vec<usize> = u[..k].to_vec();
        let mut b: Vec<usize> = v[..k].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        if a.iter().zip(&b).any(|(x, y)| x > y) {
            return false;
        }
    }
    true
}

/// `ν ≺ η`: either `ν⁺ < η⁺` in dominance, or `ν⁺ = η⁺` and `w_η < w_ν`.
pub fn bruhat_less(nu: &[u32], eta: &[u32]) -> bool {
    if nu.len() != eta.len() || nu.iter().sum::<u32>() != eta.iter().sum::<u32>() {
        return false;
    }
    let (np, ep) = (sort_partition(nu), sort_partition(eta));
    if np != ep {
        return partition_dominates(&ep, &np);
    }
    if nu == eta {
        return false;
    }
    bruhat_leq(&sorting_permutation(eta), &sorting_permutation(nu))
}
