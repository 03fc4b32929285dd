use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::*;
use crate::coeff::Params;
use crate::combinatorics::{
    bruhat_less, c_hook, compositions, dominance_leq, enumerate_mpartitions, eta_bar, sort_partition, MPartition,
};
use crate::polyring::{cherednik_Y, hecke_T, psi_N, restrict, symmetrize, XPolynomial};
use crate::qt_field::QTScalar;

type P = XPolynomial<QTScalar>;

fn s(x: &str) -> QTScalar {
    x.parse().unwrap()
}

fn mp(x: &str) -> MPartition {
    x.parse().unwrap()
}

fn exp(v: &[u32]) -> Vec<u16> {
    v.iter().map(|&x| x as u16).collect()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn nonsym_examples() {
    let c = MacdonaldCache::symbolic();
    assert_eq!(*c.nonsym_E(&[0, 0, 0]).unwrap(), P::one(3));
    assert_eq!(*c.nonsym_E(&[0, 1]).unwrap(), P::var(2, 2));
    let mut e10 = P::var(2, 1);
    e10.add_term(vec![0, 1], s("(q - q*t)/(1 - q*t)"));
    assert_eq!(*c.nonsym_E(&[1, 0]).unwrap(), e10);
    // T_1 E_{(0,1)} = ((t-1)/(1-δ^{-1})) E_{(0,1)} + t E_{(1,0)}
    let lhs = hecke_T(c.params(), 1, &c.nonsym_E(&[0, 1]).unwrap()).unwrap();
    let coef = s("(t - 1)/(1 - q*t)");
    let rhs = P::var(2, 2).scale(&coef).add(&e10.scale(&QTScalar::t()));
    assert_eq!(lhs, rhs);
}

#[test]
fn nonsym_matches_eigensolve() {
    let c = MacdonaldCache::symbolic();
    for n in 1..=3 {
        for d in 0..=2 {
            for eta in compositions(n, d) {
                assert_eq!(*c.nonsym_E(&eta).unwrap(), eigensolve_E(c.params(), &eta).unwrap(), "{eta:?}");
            }
        }
    }
}

#[test]
fn nonsym_path_independent_and_memo_transparent() {
    let p = Params::symbolic();
    let c = MacdonaldCache::symbolic();
    let plain = MacdonaldCache::without_memo(p.clone());
    for n in 1..=4 {
        for d in 0..=3 {
            for eta in compositions(n, d) {
                let e = c.nonsym_E(&eta).unwrap();
                assert_eq!(*e, nonsym_E_alt(&p, &eta).unwrap(), "{eta:?}");
                assert_eq!(*e, *plain.nonsym_E(&eta).unwrap(), "{eta:?}");
            }
        }
    }
    assert!(plain.is_empty());
    assert!(!c.is_empty());
}

#[test]
fn nonsym_triangular_and_eigen() {
    let c = MacdonaldCache::symbolic();
    for n in 1..=4 {
        for d in 0..=3 {
            for eta in compositions(n, d) {
                let e = c.nonsym_E(&eta).unwrap();
                assert!(e.coeff(&exp(&eta)).is_one(), "{eta:?} not monic");
                for (g, _) in e.terms() {
                    let nu: Vec<u32> = g.iter().map(|&v| v as u32).collect();
                    assert!(nu == eta || bruhat_less(&nu, &eta), "x^{nu:?} in E_{eta:?}");
                }
                if n <= 3 {
                    for i in 1..=n {
                        let y = cherednik_Y(c.params(), i, &e).unwrap();
                        assert_eq!(y, e.scale(&eta_bar(&eta, i)), "Y_{i} on E_{eta:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn nonsym_specialization_at_leading_zero() {
    let c = MacdonaldCache::symbolic();
    for n in 2..=4 {
        for d in 1..=3 {
            for eta in compositions(n, d) {
                // η_i = 0 with every later entry non-zero.
                let Some(i) = (0..n).rev().find(|&k| eta[k] == 0) else { continue };
                if eta[i + 1..].iter().any(|&v| v == 0) {
                    continue;
                }
                let e = c.nonsym_E(&eta).unwrap();
                let mut rest = eta.clone();
                rest.remove(i);
                assert_eq!(e.set_var_zero(i + 1), *c.nonsym_E(&rest).unwrap(), "{eta:?} at x{}", i + 1);
                for j in i + 2..=n {
                    assert!(e.set_var_zero(j).is_zero(), "{eta:?} at x{j}");
                }
            }
        }
    }
}

#[test]
fn symmetrized_swap_relation() {
    let c = MacdonaldCache::symbolic();
    let p = c.params();
    for n in 3..=4usize {
        for d in 1..=3 {
            for eta in compositions(n, d) {
                for m in 0..n.saturating_sub(2) {
                    for i in m + 2..n {
                        if eta[i - 1] <= eta[i] {
                            continue;
                        }
                        let a = &eta_bar(&eta, i) / &eta_bar(&eta, i + 1);
                        let one = QTScalar::one();
                        let t = QTScalar::t();
                        let f = &(&one - &(&t * &a)) / &(&t * &(&one - &a));
                        let mut sw = eta.clone();
                        sw.swap(i - 1, i);
                        let lhs = symmetrize(p, m + 1, &c.nonsym_E(&eta).unwrap()).unwrap();
                        let rhs = symmetrize(p, m + 1, &c.nonsym_E(&sw).unwrap()).unwrap().scale(&f);
                        assert_eq!(lhs, rhs, "{eta:?}, m+1={}, i={i}", m + 1);
                    }
                }
            }
        }
    }
}

fn m_lambda(n: usize, parts: &[u32]) -> P {
    let mut v: Vec<u32> = parts.to_vec();
    v.resize(n, 0);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = P::zero(n);
    permutations(&v, &mut seen);
    for e in seen {
        out.add_term(e, QTScalar::one());
    }
    out
}

fn permutations(v: &[u32], out: &mut std::collections::BTreeSet<Vec<u16>>) {
    fn rec(cur: &mut Vec<u32>, k: usize, out: &mut std::collections::BTreeSet<Vec<u16>>) {
        if k == cur.len() {
            out.insert(exp(cur));
            return;
        }
        for j in k..cur.len() {
            cur.swap(k, j);
            rec(cur, k + 1, out);
            cur.swap(k, j);
        }
    }
    rec(&mut v.to_vec(), 0, out);
}

#[test]
fn msym_examples() {
    let c = MacdonaldCache::symbolic();
    for n in 1..=3 {
        assert_eq!(c.msym_P(&mp("|1"), n).unwrap(), m_lambda(n, &[1]));
        let j = c.integral_J(&mp("|1"), n).unwrap();
        assert_eq!(j, m_lambda(n, &[1]).scale(&s("1 - t")));
    }
    let expected = m_lambda(2, &[2]).add(&m_lambda(2, &[1, 1]).scale(&s("(1 + q - t - q*t)/(1 - q*t)")));
    assert_eq!(c.msym_P(&mp("|2"), 2).unwrap(), expected);
    assert!(c.msym_P(&mp("1,0|2"), 2).is_err());
}

/// Reads the coefficient of `m_Ω` off an m-symmetric polynomial.
fn coeff_of(f: &P, o: &MPartition) -> QTScalar {
    let mut e = exp(&o.a);
    e.extend(exp(&o.lam));
    e.resize(f.nvars(), 0);
    f.coeff(&e)
}

#[test]
fn msym_unitriangular_and_eigen() {
    let c = MacdonaldCache::symbolic();
    for m in 0..=2 {
        for d in 0..=3 {
            let all = enumerate_mpartitions(m, d);
            let n = (m + d as usize).max(1);
            for l in &all {
                let f = c.msym_P(l, n).unwrap();
                assert!(coeff_of(&f, l).is_one(), "leading coefficient of P_{l}");
                for (g, _) in f.terms() {
                    let a: Vec<u32> = g[..m].iter().map(|&v| v as u32).collect();
                    let lam = sort_partition(&g[m..].iter().map(|&v| v as u32).collect::<Vec<_>>());
                    let o = MPartition::new(a, lam).unwrap();
                    assert!(dominance_leq(&o, l).unwrap(), "m_{o} appears in P_{l}");
                }
                let report = verify_eigen(&c, l, n).unwrap();
                assert!(report.all_pass(), "{report:?}");
                for i in 1..m {
                    if l.a[i - 1] == l.a[i] {
                        assert!(f.is_symmetric_in(i), "P_{l} in x{i}, x{}", i + 1);
                    }
                }
            }
        }
    }
}

#[test]
fn msym_stable_in_n() {
    let c = MacdonaldCache::symbolic();
    for m in 0..=2 {
        for d in 0..=3 {
            for l in enumerate_mpartitions(m, d) {
                let n = m + d as usize + 1;
                if n < 2 {
                    continue;
                }
                let big = c.msym_P(&l, n).unwrap();
                let cut = big.set_var_zero(n);
                if n - 1 >= l.len() && n - 1 > 0 {
                    assert_eq!(cut, c.msym_P(&l, n - 1).unwrap(), "P_{l} at N={n}");
                } else {
                    assert!(cut.is_zero());
                }
            }
        }
    }
}

#[test]
fn integral_form_restriction_and_inclusion() {
    let c = MacdonaldCache::symbolic();
    for m in 0..=1usize {
        for d in 0..=3 {
            for l in enumerate_mpartitions(m + 1, d) {
                let n = m + 1 + d as usize;
                if n < 2 {
                    continue;
                }
                let am = l.a[m];
                let mut lam = l.lam.clone();
                lam.push(am);
                let hat = MPartition::new(l.a[..m].to_vec(), sort_partition(&lam)).unwrap();
                let below = l.a[..m].iter().filter(|&&x| x < am).count() as i32;
                let lhs = restrict(&c.integral_J(&l, n).unwrap(), m).unwrap();
                let rhs = c.integral_J(&hat, n - 1).unwrap().scale(&QTScalar::qt_pow(am as i32, below));
                assert_eq!(lhs, rhs, "r(J_{l})");
            }
        }
    }
    for m in 1..=2 {
        for d in 0..=3 {
            for l in enumerate_mpartitions(m, d).into_iter().filter(|l| l.lam.is_empty()) {
                let n = m + 1 + d as usize;
                assert_eq!(c.integral_J(&l, n).unwrap(), c.integral_J(&l.with_zero(), n).unwrap(), "i(J_{l})");
                assert_eq!(c_hook(&l), c_hook(&l.with_zero()));
            }
        }
    }
}

#[test]
fn raising_identity_on_integral_forms() {
    let c = MacdonaldCache::symbolic();
    for m in 1..=2usize {
        for d in 0..=2 {
            for l in enumerate_mpartitions(m, d) {
                let n = m + d as usize + 1;
                let lhs = psi_N(c.params(), &c.integral_J(&l, n).unwrap(), m).unwrap();
                let mut lam = l.lam.clone();
                lam.push(l.a[0] + 1);
                let boxed = MPartition::new(l.a[1..].to_vec(), sort_partition(&lam)).unwrap();
                let k = l.a[1..].iter().filter(|&&x| x <= l.a[0]).count() as i32;
                let rhs = c.integral_J(&boxed, n).unwrap().scale(&QTScalar::qt_pow(0, -k));
                assert_eq!(lhs, rhs, "Ψ J_{l}");
            }
        }
    }
}

#[test]
fn hall_littlewood_examples() {
    let p = Params::symbolic();
    assert_eq!(hall_littlewood(&p, &[2, 1]).unwrap(), P::monomial(vec![2, 1], QTScalar::one()));
    assert_eq!(hall_littlewood(&p, &[0, 1]).unwrap(), P::var(2, 2));
    let at_one = Params::numeric(rat(3, 7), rat(1, 1));
    for n in 1..=3 {
        for d in 0..=3 {
            for a in compositions(n, d) {
                let h = hall_littlewood(&at_one, &a).unwrap();
                assert_eq!(h, XPolynomial::monomial(exp(&a), BigRational::one()), "H_{a:?}(t=1)");
                let hs = hall_littlewood(&p, &a).unwrap();
                assert_eq!(hs.eval_qt(&rat(3, 7), &rat(1, 1)).unwrap(), h);
            }
        }
    }
}

#[test]
fn numeric_parameters_agree_with_symbolic() {
    let sym = MacdonaldCache::symbolic();
    let (q0, t0) = (rat(2, 3), rat(5, 2));
    let num = MacdonaldCache::new(Params::numeric(q0.clone(), t0.clone()));
    for l in enumerate_mpartitions(1, 3) {
        let f = sym.msym_P(&l, 4).unwrap();
        assert_eq!(f.eval_qt(&q0, &t0).unwrap(), num.msym_P(&l, 4).unwrap(), "P_{l}");
    }
}
