//! Dense exact linear algebra over a [`Coeff`] field.

use crate::coeff::Coeff;
use crate::error::{contract, Error, Result};

/// Row-major dense matrix.
pub type Matrix<C> = Vec<Vec<C>>;

pub fn identity<C: Coeff>(n: usize) -> Matrix<C> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { C::one() } else { C::zero() }).collect())
        .collect()
}

fn width<C>(a: &Matrix<C>) -> usize {
    a.first().map_or(0, |r| r.len())
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<C: Coeff>(a: &mut Matrix<C>) -> Result<Vec<usize>> {
    let (rows, cols) = (a.len(), width(a));
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = C::one().checked_div(&a[r][c])?;
        for x in a[r].iter_mut().skip(c) {
            *x = x.mul_ref(&inv);
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x = x.sub_ref(&f.mul_ref(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    Ok(pivots)
}

/// Solves `A X = B` for square invertible `A`.
pub fn solve<C: Coeff>(a: &Matrix<C>, b: &Matrix<C>) -> Result<Matrix<C>> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) || b.len() != n {
        return contract("solve needs a square system with matching right-hand side");
    }
    let k = width(b);
    let mut aug: Matrix<C> = a.iter().zip(b).map(|(r, s)| r.iter().chain(s).cloned().collect()).collect();
    let piv = rref(&mut aug)?;
    if piv.len() < n || piv[n - 1] != n - 1 {
        return Err(Error::Internal("singular matrix in exact solve".into()));
    }
    Ok(aug.into_iter().map(|r| r[n..n + k].to_vec()).collect())
}

pub fn inverse<C: Coeff>(a: &Matrix<C>) -> Result<Matrix<C>> {
    solve(a, &identity(a.len()))
}

/// Basis of the right null space of `a`.
pub fn nullspace<C: Coeff>(a: &Matrix<C>) -> Result<Vec<Vec<C>>> {
    let cols = width(a);
    let mut r = a.clone();
    let piv = rref(&mut r)?;
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    Ok(free
        .iter()
        .map(|&f| {
            let mut v = vec![C::zero(); cols];
            v[f] = C::one();
            for (row, &p) in piv.iter().enumerate() {
                v[p] = r[row][f].neg_ref();
            }
            v
        })
        .collect())
}

pub fn mat_mul<C: Coeff>(a: &Matrix<C>, b: &Matrix<C>) -> Matrix<C> {
    let (n, k) = (width(a), width(b));
    a.iter()
        .map(|row| {
            (0..k)
                .map(|j| {
                    let mut s = C::zero();
                    for l in 0..n {
                        if !row[l].is_zero() && !b[l][j].is_zero() {
                            s = s.add_ref(&row[l].mul_ref(&b[l][j]));
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_rational::BigRational;

    use num_traits::{One, Zero};

    use super::*;
    use crate::qt_field::QTScalar;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn inverse_round_trip() {
        let a = vec![vec![r(2), r(1), r(0)], vec![r(1), r(3), r(1)], vec![r(0), r(1), r(4)]];
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(3));
    }

    #[test]
    fn singular_is_an_error() {
        let a = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        assert!(inverse(&a).is_err());
        let ns = nullspace(&a).unwrap();
        assert_eq!(ns, vec![vec![r(-2), r(1)]]);
    }

    #[test]
    fn symbolic_solve() {
        let q = QTScalar::q();
        let t = QTScalar::t();
        let a = vec![vec![q.clone(), QTScalar::one()], vec![QTScalar::one(), t.clone()]];
        let b = vec![vec![QTScalar::one()], vec![QTScalar::zero()]];
        let x = solve(&a, &b).unwrap();
        assert_eq!(mat_mul(&a, &x), b);
    }
}
