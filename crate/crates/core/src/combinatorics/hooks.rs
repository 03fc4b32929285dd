use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{domain, Result};
use crate::qt_field::{QTPoly, TLaurent};

use super::diagram::diagram_of;
use super::{multiplicities, MPartition};

/// Arm and leg of the square at `(row, col)` (1-based) in the diagram of `Λ`.
///
/// A circle ending the row adds one to the arm; in that case the leg also
/// counts the circles at the bottom of the column whose label is smaller.
pub fn arm_leg(l: &MPartition, cell: (usize, usize)) -> Result<(u32, u32)> {
    let d = diagram_of(l);
    let (row, col) = cell;
    if row == 0 || col == 0 || row > d.rows.len() || col as u32 > d.rows[row - 1].len {
        return domain(format!("cell ({row},{col}) is not a square of {l}"));
    }
    let r = d.rows[row - 1];
    let mut arm = r.len - col as u32;
    let mut leg = d.rows[row..].iter().filter(|s| s.len >= col as u32).count() as u32;
    if let Some(c) = r.circle {
        arm += 1;
        leg += d.circles_below_label(col as u32 - 1, c) as u32;
    }
    Ok((arm, leg))
}

/// `c_Λ(q,t) = Π_s (1 - q^{a(s)} t^{ℓ(s)+1})` over the squares of `Λ`.
pub fn c_hook(l: &MPartition) -> QTPoly {
    let d = diagram_of(l);
    let mut acc = QTPoly::one();
    for (k, r) in d.rows.iter().enumerate() {
        for col in 1..=r.len as usize {
            let (a, g) = arm_leg(l, (k + 1, col)).expect("square of the diagram");
            let factor = &QTPoly::one() - &QTPoly::monomial(BigInt::one(), a, g + 1);
            acc = &acc * &factor;
        }
    }
    acc
}

/// `[k]_{t^{-1}}!` as a Laurent polynomial in `t`.
fn bracket_factorial_inv_t(k: usize) -> TLaurent {
    let mut acc = TLaurent::one();
    for j in 1..=k as i32 {
        // [j]_{t^{-1}} = 1 + t^{-1} + ... + t^{-(j-1)}
        let mut b = TLaurent::zero();
        for e in 0..j {
            b = &b + &TLaurent::t_pow(-e);
        }
        acc = &acc * &b;
    }
    acc
}

/// `u_{Λ,N}(t) = [n]_{t^{-1}}! Π_i [n_λ(i)]_{t^{-1}}! t^{(N-m)(N-m-1)/2}`,
/// with `n = N - m - ℓ(λ)`.
pub fn u_norm(l: &MPartition, n_vars: usize) -> Result<TLaurent> {
    let (m, ll) = (l.m(), l.lam.len());
    if n_vars < m + ll {
        return domain(format!("N = {n_vars} is too small for {l} (needs at least {})", m + ll));
    }
    let n = n_vars - m - ll;
    let mut acc = bracket_factorial_inv_t(n);
    for (_, k) in multiplicities(&l.lam) {
        acc = &acc * &bracket_factorial_inv_t(k);
    }
    let e = ((n_vars - m) * (n_vars - m).saturating_sub(1) / 2) as i32;
    Ok(acc.shift(e))
}

/// Number of standard Young tableaux of shape `p` (hook length formula).
pub fn count_syt(p: &[u32]) -> BigInt {
    let p: Vec<u32> = super::sort_partition(p);
    let n: u32 = p.iter().sum();
    let mut num = BigRational::one();
    for k in 1..=n {
        num *= BigRational::from_integer(BigInt::from(k));
    }
    for (i, &row) in p.iter().enumerate() {
        for j in 0..row as usize {
            let arm = row as usize - j - 1;
            let leg = p[i + 1..].iter().filter(|&&x| x as usize > j).count();
            num /= BigRational::from_integer(BigInt::from(arm + leg + 1));
        }
    }
    num.to_integer()
}
