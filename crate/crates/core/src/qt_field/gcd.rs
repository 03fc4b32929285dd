//! Greatest common divisors in ℤ[q,t].
//!
//! ℤ[q,t] is viewed as (ℤ[q])[t]. Contents are taken in ℤ[q] and the
//! primitive parts are reduced with a primitive pseudo-remainder sequence,
//! so coefficient growth stays bounded by the size of the true gcd.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::QTPoly;

/// Dense univariate polynomial in `q`, index = degree, no trailing zeros.
type UPoly = Vec<BigInt>;
/// Polynomial in `t` with coefficients in ℤ[q], index = degree in `t`.
type BPoly = Vec<UPoly>;

fn u_trim(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn u_content(p: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn u_div_scalar(p: &UPoly, c: &BigInt) -> UPoly {
    if c.is_one() {
        return p.clone();
    }
    p.iter().map(|x| x / c).collect()
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    u_trim(&mut out);
    out
}

/// `a*x - b*y*q^shift`.
fn u_comb(a: &UPoly, x: &UPoly, b: &UPoly, y: &UPoly, shift: usize) -> UPoly {
    let ax = u_mul(a, x);
    let by = u_mul(b, y);
    let n = ax.len().max(by.len() + shift);
    let mut out = vec![BigInt::zero(); n];
    for (i, c) in ax.into_iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in by.into_iter().enumerate() {
        out[i + shift] -= c;
    }
    u_trim(&mut out);
    out
}

fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = vec![b[db].clone()];
    while !r.is_empty() && r.len() - 1 >= db {
        let k = r.len() - 1 - db;
        let lr = vec![r[r.len() - 1].clone()];
        r = u_comb(&lb, &r, &lr, b, k);
    }
    r
}

fn u_prim(p: &UPoly) -> UPoly {
    let c = u_content(p);
    let mut out = u_div_scalar(p, &c);
    if out.last().is_some_and(|x| x.is_negative()) {
        for x in out.iter_mut() {
            *x = -&*x;
        }
    }
    out
}

/// Full gcd in ℤ[q] (integer content included), positive leading coefficient.
fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return u_normalize(b);
    }
    if b.is_empty() {
        return u_normalize(a);
    }
    let c = u_content(a).gcd(&u_content(b));
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let (mut x, mut y) = (u_prim(a), u_prim(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    loop {
        let r = u_prem(&x, &y);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            y = vec![BigInt::one()];
            break;
        }
        x = y;
        y = u_prim(&r);
    }
    y.iter().map(|v| v * &c).collect()
}

fn u_normalize(p: &UPoly) -> UPoly {
    if p.last().is_some_and(|x| x.is_negative()) {
        p.iter().map(|x| -x).collect()
    } else {
        p.clone()
    }
}

/// Exact division in ℤ[q]; caller guarantees `b | a`.
fn u_div_exact(a: &UPoly, b: &UPoly) -> UPoly {
    if b.len() == 1 {
        return u_div_scalar(a, &b[0]);
    }
    let mut r = a.clone();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return Vec::new();
    }
    let mut quot = vec![BigInt::zero(); r.len() - db];
    while !r.is_empty() && r.len() > db {
        let k = r.len() - 1 - db;
        let c = &r[r.len() - 1] / &b[db];
        for (j, y) in b.iter().enumerate() {
            r[j + k] -= &c * y;
        }
        quot[k] = c;
        u_trim(&mut r);
    }
    u_trim(&mut quot);
    quot
}

fn to_bpoly(p: &QTPoly) -> BPoly {
    let dt = p.deg_t() as usize;
    let mut out: BPoly = vec![Vec::new(); dt + 1];
    for (i, j, c) in p.terms() {
        let row = &mut out[*j as usize];
        if row.len() <= *i as usize {
            row.resize(*i as usize + 1, BigInt::zero());
        }
        row[*i as usize] = c.clone();
    }
    out
}

fn from_bpoly(v: &BPoly) -> QTPoly {
    QTPoly::from_terms(v.iter().enumerate().flat_map(|(j, row)| {
        row.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (i as u32, j as u32, c.clone()))
    }))
}

fn b_trim(p: &mut BPoly) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

fn b_content(p: &BPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in p {
        if c.is_empty() {
            continue;
        }
        g = u_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn b_prim(p: &BPoly) -> BPoly {
    let c = b_content(p);
    let mut out: BPoly = p.iter().map(|x| if x.is_empty() { Vec::new() } else { u_div_exact(x, &c) }).collect();
    b_trim(&mut out);
    out
}

fn b_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while !r.is_empty() && r.len() - 1 >= db {
        let k = r.len() - 1 - db;
        let lr = r[r.len() - 1].clone();
        let mut next: BPoly = vec![Vec::new(); r.len()];
        for (j, c) in r.iter().enumerate() {
            next[j] = u_mul(&lb, c);
        }
        for (j, c) in b.iter().enumerate() {
            let prod = u_mul(&lr, c);
            next[j + k] = u_comb(&vec![BigInt::one()], &next[j + k], &vec![BigInt::one()], &prod, 0);
        }
        b_trim(&mut next);
        r = next;
    }
    r
}

/// Sign-normalizes so the leading term in canonical order is positive.
pub(crate) fn normalize_sign(p: QTPoly) -> QTPoly {
    if p.leading_coeff().is_negative() {
        -p
    } else {
        p
    }
}

/// Greatest common divisor in ℤ[q,t] with positive leading coefficient.
/// `gcd(0, 0) = 0`.
pub fn gcd(a: &QTPoly, b: &QTPoly) -> QTPoly {
    if a.is_zero() {
        return normalize_sign(b.clone());
    }
    if b.is_zero() {
        return normalize_sign(a.clone());
    }
    let mq = a.ord_q().min(b.ord_q());
    let mt = a.ord_t().min(b.ord_t());
    let monomial_part = |g: QTPoly| g.shift(mq, mt);
    if a.is_monomial() || b.is_monomial() {
        let c = a.content().gcd(&b.content());
        return QTPoly::monomial(c, mq, mt);
    }
    let a1 = a.unshift(a.ord_q(), a.ord_t());
    let b1 = b.unshift(b.ord_q(), b.ord_t());
    if a1.is_monomial() || b1.is_monomial() {
        let c = a1.content().gcd(&b1.content());
        return monomial_part(QTPoly::constant(c));
    }
    if a1 == b1 || a1 == -&b1 {
        return monomial_part(normalize_sign(a1));
    }
    let (pa, pb) = (to_bpoly(&a1), to_bpoly(&b1));
    let (ca, cb) = (b_content(&pa), b_content(&pb));
    let c = u_gcd(&ca, &cb);
    let (mut x, mut y) = (b_prim(&pa), b_prim(&pb));
    let g = if x.len() == 1 || y.len() == 1 {
        vec![vec![BigInt::one()]]
    } else {
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        loop {
            let r = b_prem(&x, &y);
            if r.is_empty() {
                break y;
            }
            if r.len() == 1 {
                break vec![vec![BigInt::one()]];
            }
            x = y;
            y = b_prim(&r);
        }
    };
    let scaled: BPoly = g.iter().map(|row| u_mul(row, &c)).collect();
    monomial_part(normalize_sign(from_bpoly(&scaled)))
}
