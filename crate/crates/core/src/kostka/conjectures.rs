use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::combinatorics::{count_syt, diagram_of, enumerate_mpartitions, MPartition};
use crate::error::Result;
use crate::qt_field::QTScalar;

use super::relations::{distinct, prepended, without};
use super::report::{Bounds, Suite, SuiteResult};
use super::table::kostka_table;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub bounds: Bounds,
    pub checks: Vec<SuiteResult>,
    pub conjecture_violations: usize,
}

/// `Some(detail)` unless `x ∈ ℕ[q,t]`.
fn natural(x: &QTScalar) -> Option<String> {
    match x.as_poly() {
        Some(p) if p.is_nonnegative() => None,
        Some(p) => Some(format!("{p} has a negative coefficient")),
        None => Some(format!("{x} is not a polynomial")),
    }
}

fn both_natural(a: &QTScalar, b: &QTScalar) -> Option<String> {
    match (natural(a), natural(b)) {
        (None, None) => None,
        (x, y) => Some([x, y].into_iter().flatten().collect::<Vec<_>>().join("; ")),
    }
}

fn k(omega: &MPartition, lam: &MPartition) -> Result<QTScalar> {
    Ok(kostka_table(lam)?.get(omega).into())
}

fn repro(l: &MPartition) -> String {
    format!("msym kostka {l}")
}

/// `K ∈ ℕ[q,t]` and `K(1,1) = #SYT(μ ∪ b)`.
fn positivity(b: &Bounds, pos: &mut Suite, syt: &mut Suite) -> Result<()> {
    let one = BigRational::one();
    for (m, d) in b.blocks() {
        let labels = enumerate_mpartitions(m, d);
        for l in &labels {
            let tab = kostka_table(l)?;
            for o in &labels {
                let v = tab.get(o);
                let detail = (!v.is_nonnegative()).then(|| format!("K = {v}"));
                pos.check_with(format!("K[{o}, {l}]"), repro(l), Ok(detail));
                let mut shape = o.a.clone();
                shape.extend(&o.lam);
                let want = BigRational::from_integer(count_syt(&shape));
                let got = v.eval(&one, &one);
                let detail = (got != want).then(|| format!("K = {v}, K(1,1) = {got}, #SYT = {want}"));
                syt.check_with(format!("K[{o}, {l}]"), repro(l), Ok(detail));
            }
        }
    }
    Ok(())
}

/// `t^{#{k: λ_j ≤ a_k}} K_{ΩΛ} - Σ_{μ_i} t^{#{k: μ_i ≤ b_k}} K_{(μ_i-1, b; μ∖μ_i), (λ_j-1, a; λ∖λ_j)}`.
fn lower_degree(b: &Bounds, s: &mut Suite) -> Result<()> {
    for (m, d) in b.blocks() {
        let labels = enumerate_mpartitions(m, d);
        for l in labels.iter().filter(|l| !l.lam.is_empty()) {
            for lj in distinct(&l.lam) {
                let src = MPartition { a: prepended(lj - 1, &l.a), lam: without(&l.lam, lj) };
                let tl = l.a.iter().filter(|&&x| lj <= x).count() as i32;
                for o in &labels {
                    let mut acc = k(o, l)?.mul_qt_pow(0, tl);
                    for mi in distinct(&o.lam) {
                        let target = MPartition { a: prepended(mi - 1, &o.a), lam: without(&o.lam, mi) };
                        let tm = o.a.iter().filter(|&&x| mi <= x).count() as i32;
                        acc = &acc - &k(&target, &src)?.mul_qt_pow(0, tm);
                    }
                    let detail = natural(&acc).map(|e| format!("λ_j = {lj}: {e}"));
                    s.check_with(format!("K[{o}, {l}]"), format!("{}; {}", repro(l), repro(&src)), Ok(detail));
                }
            }
        }
    }
    Ok(())
}

/// Exchanging `b_i > b_{i+1}` at fixed `Λ`, with `A_i = ε^{(i)}_Λ / ε^{(i+1)}_Λ`.
fn exchange_omega(b: &Bounds, s: &mut Suite) -> Result<()> {
    let one = QTScalar::one();
    for (m, d) in b.blocks() {
        let labels = enumerate_mpartitions(m, d);
        for l in &labels {
            let diag = diagram_of(l);
            for i in 1..m {
                let (ri, rj) = (diag.row_of_circle(i), diag.row_of_circle(i + 1));
                let (Some(ri), Some(rj)) = (ri, rj) else { continue };
                let at = QTScalar::qt_pow(l.a[i - 1] as i32 - l.a[i] as i32, rj as i32 - ri as i32 - 1);
                if at == one {
                    continue;
                }
                for o in labels.iter().filter(|o| o.a[i - 1] > o.a[i]) {
                    let (kw, kt) = (k(o, l)?, k(&o.swap_a(i), l)?);
                    let first = (&(&at * &kw) - &kt).checked_div(&(&at - &one))?;
                    let second = (&kw - &kt).checked_div(&(&one - &at))?;
                    let detail = both_natural(&first, &second).map(|e| format!("i = {i}, A_i/t = {at}: {e}"));
                    s.check_with(format!("K[{o}, {l}]"), repro(l), Ok(detail));
                }
            }
        }
    }
    Ok(())
}

/// Exchanging columns `i, i+1` of both `Λ` (with `a_i > a_{i+1}`) and `Ω`.
fn exchange_both(b: &Bounds, s1: &mut Suite, s2: &mut Suite) -> Result<()> {
    let one = QTScalar::one();
    let t = QTScalar::t();
    let t2 = &t * &t;
    for (m, d) in b.blocks() {
        let labels = enumerate_mpartitions(m, d);
        for l in &labels {
            for i in (1..m).filter(|&i| l.a[i - 1] > l.a[i]) {
                let sl = l.swap_a(i);
                for o in labels.iter().filter(|o| o.a[i - 1] != o.a[i]) {
                    let (kw, kt) = (k(o, l)?, k(&o.swap_a(i), &sl)?);
                    let (c1, c2, suite) = if o.a[i - 1] > o.a[i] { (&t, &one, &mut *s1) } else { (&t2, &t, &mut *s2) };
                    let first = (&(c1 * &kw) - &kt).checked_div(&(&t - &one))?;
                    let second = (&(c2 * &kw) - &kt).checked_div(&(&one - &t))?;
                    let detail = both_natural(&first, &second).map(|e| format!("i = {i}: {e}"));
                    suite.check_with(format!("K[{o}, {l}]"), format!("{}; {}", repro(l), repro(&sl)), Ok(detail));
                }
            }
        }
    }
    Ok(())
}

/// Evaluates the positivity conjectures on every `Λ` within `bounds`.
/// Violations are findings, not errors.
pub fn check_conjectures(bounds: Bounds) -> Result<ConjectureReport> {
    let mut pos = Suite::new("positivity of K", "");
    let mut syt = Suite::new("K(1,1) counts standard tableaux", "");
    let mut lower = Suite::new("lower-degree difference is positive", "");
    let mut ex = Suite::new("exchange in Omega is positive", "");
    let mut both1 = Suite::new("exchange in both, same direction", "");
    let mut both2 = Suite::new("exchange in both, opposite direction", "");
    positivity(&bounds, &mut pos, &mut syt)?;
    lower_degree(&bounds, &mut lower)?;
    exchange_omega(&bounds, &mut ex)?;
    exchange_both(&bounds, &mut both1, &mut both2)?;
    let checks: Vec<SuiteResult> = [pos, syt, lower, ex, both1, both2].into_iter().map(Suite::finish).collect();
    let conjecture_violations = checks.iter().map(|c| c.failures.len()).sum();
    Ok(ConjectureReport { bounds, checks, conjecture_violations })
}
