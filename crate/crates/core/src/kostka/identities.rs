use std::collections::{BTreeSet, HashMap};

use num_traits::One;

use crate::bases::{
    convert, inclusion_terms, include, monomial_coeffs, restrict_expansion, scalar_product, schur_star,
    t_star, to_monomials, Basis, BasisCache, BasisExpansion,
};
use crate::coeff::Params;
use crate::combinatorics::{compositions, dominance_leq, enumerate_mpartitions, sort_partition, MPartition};
use crate::error::Result;
use crate::macdonald::verify_eigen;
use crate::polyring::{cherednik_Y, hecke_T, psi_N, restrict, Exponent, XPolynomial};
use crate::qt_field::{QTScalar, TLaurent};
use crate::tableaux::{charge_ab, enumerate_S, DTable, Reduction};
use crate::QtPolynomial;

use super::report::{equal, Bounds, Suite, VerificationReport};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
enum Op {
    T(usize),
    Y(usize),
}

/// Linear operators on a space of polynomials, memoized on monomials.
struct OpImages {
    params: Params<QTScalar>,
    images: HashMap<(Op, Exponent), QtPolynomial>,
}

impl OpImages {
    fn new() -> Self {
        OpImages { params: Params::symbolic(), images: HashMap::new() }
    }

    fn apply(&mut self, op: Op, f: &QtPolynomial) -> Result<QtPolynomial> {
        let mut out = XPolynomial::zero(f.nvars());
        for (e, c) in f.terms() {
            let key = (op, e.clone());
            if !self.images.contains_key(&key) {
                let mono = XPolynomial::monomial(e.clone(), QTScalar::one());
                let img = match op {
                    Op::T(i) => hecke_T(&self.params, i, &mono)?,
                    Op::Y(i) => cherednik_Y(&self.params, i, &mono)?,
                };
                self.images.insert(key.clone(), img);
            }
            out.add_assign(&self.images[&key].scale(c));
        }
        Ok(out)
    }
}

/// Monomial spaces `(N, d)` with `N = m + d ≥ 2`.
fn spaces(b: &Bounds) -> BTreeSet<(usize, u32)> {
    b.blocks().map(|(m, d)| (m + d as usize, d)).filter(|&(n, _)| n >= 2).collect()
}

fn monomials(n: usize, d: u32) -> Vec<QtPolynomial> {
    compositions(n, d)
        .into_iter()
        .map(|a| XPolynomial::monomial(a.iter().map(|&x| x as u16).collect(), QTScalar::one()))
        .collect()
}

fn hecke_relations(b: &Bounds, repro: &str) -> Result<Suite> {
    let mut s = Suite::new("hecke quadratic and braid relations", repro);
    let t = QTScalar::t();
    for (n, d) in spaces(b) {
        let mut ops = OpImages::new();
        for f in monomials(n, d) {
            for i in 1..n {
                let tf = ops.apply(Op::T(i), &f)?;
                let ttf = ops.apply(Op::T(i), &tf)?;
                let quad = ttf.add(&tf.scale(&(&QTScalar::one() - &t))).sub(&f.scale(&t));
                s.check(|| format!("(T_{i} - t)(T_{i} + 1) {f}, N={n}"), Ok(equal(&quad, &XPolynomial::zero(n))));
                for j in i + 1..n {
                    let tj = ops.apply(Op::T(j), &f)?;
                    let (lhs, rhs) = if j == i + 1 {
                        let a = ops.apply(Op::T(j), &tf)?;
                        let a = ops.apply(Op::T(i), &a)?;
                        let c = ops.apply(Op::T(i), &tj)?;
                        (a, ops.apply(Op::T(j), &c)?)
                    } else {
                        (ops.apply(Op::T(j), &tf)?, ops.apply(Op::T(i), &tj)?)
                    };
                    s.check(|| format!("T_{i}, T_{j} on {f}, N={n}"), Ok(equal(&lhs, &rhs)));
                }
            }
        }
    }
    Ok(s)
}

fn cherednik_relations(b: &Bounds, repro: &str) -> Result<(Suite, Suite)> {
    let mut comm = Suite::new("cherednik operators commute", repro);
    let mut mixed = Suite::new("hecke-cherednik relations", repro);
    let tm1 = &QTScalar::t() - &QTScalar::one();
    for (n, d) in spaces(b) {
        let mut ops = OpImages::new();
        for f in monomials(n, d) {
            let y: Vec<QtPolynomial> = (1..=n).map(|i| ops.apply(Op::Y(i), &f)).collect::<Result<_>>()?;
            for i in 1..=n {
                for j in i + 1..=n {
                    let lhs = ops.apply(Op::Y(i), &y[j - 1])?;
                    let rhs = ops.apply(Op::Y(j), &y[i - 1])?;
                    comm.check(|| format!("[Y_{i}, Y_{j}] {f}, N={n}"), Ok(equal(&lhs, &rhs)));
                }
            }
            for i in 1..n {
                let tf = ops.apply(Op::T(i), &f)?;
                // T_i Y_i = Y_{i+1} T_i + (t-1) Y_i
                let lhs = ops.apply(Op::T(i), &y[i - 1])?;
                let rhs = ops.apply(Op::Y(i + 1), &tf)?.add(&y[i - 1].scale(&tm1));
                mixed.check(|| format!("T_{i} Y_{i} on {f}, N={n}"), Ok(equal(&lhs, &rhs)));
                // Y_i T_i = T_i Y_{i+1} + (t-1) Y_i
                let lhs = ops.apply(Op::Y(i), &tf)?;
                let rhs = ops.apply(Op::T(i), &y[i])?.add(&y[i - 1].scale(&tm1));
                mixed.check(|| format!("Y_{i} T_{i} on {f}, N={n}"), Ok(equal(&lhs, &rhs)));
                for j in (1..=n).filter(|&j| j != i && j != i + 1) {
                    let lhs = ops.apply(Op::T(i), &y[j - 1])?;
                    let rhs = ops.apply(Op::Y(j), &tf)?;
                    mixed.check(|| format!("T_{i} Y_{j} on {f}, N={n}"), Ok(equal(&lhs, &rhs)));
                }
            }
        }
    }
    Ok((comm, mixed))
}

fn label_nvars(m: usize, d: u32) -> usize {
    (m + d as usize).max(1)
}

fn macdonald_suites(b: &Bounds, repro: &str) -> Result<Vec<Suite>> {
    let cache = BasisCache::global();
    let mut eigen = Suite::new("eigen-equations of P", repro);
    let mut tri = Suite::new("monomial unitriangularity of P", repro);
    let mut stable = Suite::new("N-stability of P", repro);
    for (m, d) in b.blocks() {
        let n = label_nvars(m, d);
        let labels = enumerate_mpartitions(m, d);
        for l in &labels {
            let report = verify_eigen(&cache.mac, l, n)?;
            let bad: Vec<&str> = report.checks.iter().filter(|c| !c.pass).map(|c| c.equation.as_str()).collect();
            eigen.check(|| format!("P[{l}], N={n}"), Ok((!bad.is_empty()).then(|| bad.join(", "))));

            let f = cache.mac.msym_P(l, n)?;
            let coeffs = monomial_coeffs(&f, &labels, m);
            let mut problems = Vec::new();
            for (o, c) in labels.iter().zip(&coeffs) {
                if o == l && !c.is_one() {
                    problems.push(format!("leading coefficient {c}"));
                } else if !num_traits::Zero::is_zero(c) && o != l && !dominance_leq(o, l)? {
                    problems.push(format!("m[{o}] has coefficient {c}"));
                }
            }
            let rebuilt = to_monomials(&BasisExpansion::from_dense(Basis::M, m, d, &coeffs), n)?;
            if rebuilt != f {
                problems.push("not spanned by the m basis".into());
            }
            tri.check(|| format!("P[{l}], N={n}"), Ok((!problems.is_empty()).then(|| problems.join("; "))));

            let big = cache.mac.msym_P(l, n + 1)?.set_var_zero(n + 1);
            stable.check(|| format!("P[{l}], N={n} vs N={}", n + 1), Ok(equal(&big, &f)));
        }
    }
    Ok(vec![eigen, tri, stable])
}

fn schur_suites(b: &Bounds, repro: &str) -> Result<Vec<Suite>> {
    let t = QTScalar::t();
    let params = Params::symbolic();
    let mut dual = Suite::new("duality of s and s*", repro);
    let mut tact = Suite::new("T_i on s", repro);
    let mut tstar = Suite::new("T*_i on s*", repro);
    for (m, d) in b.blocks() {
        let labels = enumerate_mpartitions(m, d);
        let n = label_nvars(m, d);
        for l in &labels {
            let sl = BasisExpansion::single(Basis::S, l);
            for o in &labels {
                let v = scalar_product(&sl, &BasisExpansion::single(Basis::Sstar, o))?;
                let want = if l == o { QTScalar::one() } else { QTScalar::default() };
                dual.check(|| format!("<s[{l}], s*[{o}]>"), Ok(equal(&v, &want)));
            }
            for i in 1..m {
                let sw = l.swap_a(i);
                let one = |x: &MPartition, c: &QTScalar| BasisExpansion::single(Basis::S, x).scale(c);
                let want = match l.a[i - 1].cmp(&l.a[i]) {
                    std::cmp::Ordering::Greater => one(&sw, &QTScalar::one()),
                    std::cmp::Ordering::Equal => one(l, &t),
                    std::cmp::Ordering::Less => one(l, &(&t - &QTScalar::one())).add(&one(&sw, &t))?,
                };
                let lhs = hecke_T(&params, i, &to_monomials(&sl, n)?)?;
                let rhs = to_monomials(&want, n)?;
                tact.check(|| format!("T_{i} s[{l}], N={n}"), Ok(equal(&lhs, &rhs)));

                let star = |x: &MPartition, c: &QTScalar| BasisExpansion::single(Basis::Sstar, x).scale(c);
                let want = match l.a[i - 1].cmp(&l.a[i]) {
                    std::cmp::Ordering::Greater => star(&sw, &t),
                    std::cmp::Ordering::Equal => star(l, &t),
                    std::cmp::Ordering::Less => star(l, &(&t - &QTScalar::one())).add(&star(&sw, &QTScalar::one()))?,
                };
                let lhs = t_star(i, &BasisExpansion::single(Basis::Sstar, l))?;
                tstar.check(|| format!("T*_{i} s*[{l}]"), Ok(equal(&lhs, &convert(&want, Basis::K)?)));
            }
        }
    }
    Ok(vec![dual, tact, tstar])
}

/// `s*_Λ` for dominant `Λ` straight from the tableau sum.
fn dominant_star(l: &MPartition) -> Result<BasisExpansion> {
    let mut out = BasisExpansion::zero(Basis::K, l.m(), l.degree());
    for o in enumerate_mpartitions(l.m(), l.degree()) {
        let mut acc = TLaurent::zero();
        for tab in enumerate_S(l, &o)? {
            acc = &acc + &TLaurent::t_pow(charge_ab(&l.a, &o.a, &tab)? as i32);
        }
        if !acc.is_zero() {
            out.coeffs.insert(o, acc.to_qt());
        }
    }
    Ok(out)
}

/// `s*_Λ` built by `s*_Λ = t^{-1} T*_i s*_{s_iΛ}` down to a dominant label.
fn star_by_operators(l: &MPartition) -> Result<BasisExpansion> {
    match (1..l.m()).find(|&i| l.a[i - 1] < l.a[i]) {
        None => dominant_star(l),
        Some(i) => Ok(t_star(i, &star_by_operators(&l.swap_a(i))?)?.scale(&QTScalar::qt_pow(0, -1))),
    }
}

fn d_recursion_suite(b: &Bounds, repro: &str) -> Result<Suite> {
    let mut s = Suite::new("D recursion vs tableau formula", repro);
    let right = DTable::with_order(Reduction::Rightmost);
    for (m, d) in b.blocks() {
        let labels = enumerate_mpartitions(m, d);
        for l in &labels {
            let via_ops = star_by_operators(l)?;
            s.check(|| format!("s*[{l}] by operators"), Ok(equal(&schur_star(l)?, &via_ops)));
            let mut diffs = Vec::new();
            for o in &labels {
                let (a, c) = (DTable::global().get(l, o)?, right.get(l, o)?);
                if a != c {
                    diffs.push(format!("D[{l}, {o}]: {} vs {}", a.to_qt(), c.to_qt()));
                }
            }
            s.check(|| format!("D[{l}, ·] reduction order"), Ok((!diffs.is_empty()).then(|| diffs.join("; "))));
        }
    }
    Ok(s)
}

fn hat(l: &MPartition) -> MPartition {
    let mut a = l.a.clone();
    let last = a.pop().expect("m ≥ 1");
    let mut lam = l.lam.clone();
    lam.push(last);
    MPartition { a, lam: sort_partition(&lam) }
}

fn inclusion_suites(b: &Bounds, repro: &str) -> Result<Vec<Suite>> {
    let cache = BasisCache::global();
    let mut schur = Suite::new("inclusion and restriction of s and s*", repro);
    let mut mac = Suite::new("restriction and inclusion of J", repro);
    for (m, d) in b.blocks().filter(|&(m, _)| m < b.m_max) {
        for l in enumerate_mpartitions(m, d) {
            let s = BasisExpansion::single(Basis::S, &l);
            let got = convert(&include(&s)?, Basis::S)?;
            let mut want = BasisExpansion::zero(Basis::S, m + 1, d);
            for o in inclusion_terms(&l) {
                want = want.add(&BasisExpansion::single(Basis::S, &o))?;
            }
            schur.check(|| format!("i(s[{l}])"), Ok(equal(&got, &want)));
            let got = convert(&include(&BasisExpansion::single(Basis::Sstar, &l))?, Basis::Sstar)?;
            let want = BasisExpansion::single(Basis::Sstar, &l.with_zero());
            schur.check(|| format!("i(s*[{l}])"), Ok(equal(&got, &want)));
            if l.lam.is_empty() {
                let n = m + 1 + d as usize;
                let lhs = cache.mac.integral_J(&l, n.max(2))?;
                let rhs = cache.mac.integral_J(&l.with_zero(), n.max(2))?;
                mac.check(|| format!("i(J[{l}]), N={n}"), Ok(equal(&lhs, &rhs)));
            }
        }
        for l in enumerate_mpartitions(m + 1, d) {
            let got = convert(&restrict_expansion(&BasisExpansion::single(Basis::Sstar, &l))?, Basis::Sstar)?;
            let want = BasisExpansion::single(Basis::Sstar, &hat(&l));
            schur.check(|| format!("r(s*[{l}])"), Ok(equal(&got, &want)));
            let got = convert(&restrict_expansion(&BasisExpansion::single(Basis::S, &l))?, Basis::S)?;
            let want = if l.a[m] > 0 {
                BasisExpansion::zero(Basis::S, m, d)
            } else {
                BasisExpansion::single(Basis::S, &MPartition { a: l.a[..m].to_vec(), lam: l.lam.clone() })
            };
            schur.check(|| format!("r(s[{l}])"), Ok(equal(&got, &want)));

            let n = m + 1 + d as usize;
            if n >= 2 {
                let am = l.a[m];
                let below = l.a[..m].iter().filter(|&&x| x < am).count() as i32;
                let lhs = restrict(&cache.mac.integral_J(&l, n)?, m)?;
                let rhs = cache.mac.integral_J(&hat(&l), n - 1)?.scale(&QTScalar::qt_pow(am as i32, below));
                mac.check(|| format!("r(J[{l}]), N={n}"), Ok(equal(&lhs, &rhs)));
            }
        }
    }
    Ok(vec![schur, mac])
}

fn psi_suite(b: &Bounds, repro: &str) -> Result<Suite> {
    let cache = BasisCache::global();
    let mut s = Suite::new("raising operator on J", repro);
    for (m, d) in b.blocks().filter(|&(m, _)| (1..=2).contains(&m)) {
        let n = (m + d as usize).max(m + 1);
        for l in enumerate_mpartitions(m, d) {
            let lhs = psi_N(cache.mac.params(), &cache.mac.integral_J(&l, n)?, m)?;
            let mut lam = l.lam.clone();
            lam.push(l.a[0] + 1);
            let boxed = MPartition { a: l.a[1..].to_vec(), lam: sort_partition(&lam) };
            let k = l.a[1..].iter().filter(|&&x| x <= l.a[0]).count() as i32;
            let rhs = cache.mac.integral_J(&boxed, n)?.scale(&QTScalar::qt_pow(0, -k));
            s.check(|| format!("Ψ J[{l}], N={n}"), Ok(equal(&lhs, &rhs)));
        }
    }
    Ok(s)
}

/// Operator and basis identities over every block within `bounds`.
pub fn verify_identities(bounds: Bounds) -> Result<VerificationReport> {
    let repro = format!("msym verify identities {}", bounds.cli_flags());
    let mut suites = vec![hecke_relations(&bounds, &repro)?];
    let (comm, mixed) = cherednik_relations(&bounds, &repro)?;
    suites.push(comm);
    suites.push(mixed);
    suites.extend(macdonald_suites(&bounds, &repro)?);
    suites.extend(schur_suites(&bounds, &repro)?);
    suites.push(d_recursion_suite(&bounds, &repro)?);
    suites.extend(inclusion_suites(&bounds, &repro)?);
    suites.push(psi_suite(&bounds, &repro)?);
    Ok(VerificationReport { bounds, suites: suites.into_iter().map(Suite::finish).collect() })
}
