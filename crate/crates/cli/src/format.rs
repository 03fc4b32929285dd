use msym::bases::BasisExpansion;
use msym::polyring::XPolynomial;
use msym::{MPartition, QTPoly, QTScalar};
use num_traits::{One, Signed};

fn sup(base: &str, e: u32) -> String {
    if e == 1 {
        base.to_string()
    } else {
        format!("{base}^{{{e}}}")
    }
}

pub fn latex_poly(p: &QTPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (n, (i, j, c)) in p.terms().iter().enumerate() {
        if c.is_negative() {
            out.push_str(if n == 0 { "-" } else { " - " });
        } else if n > 0 {
            out.push_str(" + ");
        }
        let a = c.abs();
        if !a.is_one() || (*i == 0 && *j == 0) {
            out.push_str(&a.to_string());
        }
        if *i > 0 {
            out.push_str(&sup("q", *i));
        }
        if *j > 0 {
            out.push_str(&sup("t", *j));
        }
    }
    out
}

pub fn latex_scalar(s: &QTScalar) -> String {
    match s.as_poly() {
        Some(p) => latex_poly(p),
        None => format!("\\frac{{{}}}{{{}}}", latex_poly(s.numer()), latex_poly(s.denom())),
    }
}

/// Wraps a coefficient in parentheses when it is not a single monomial.
fn latex_coeff(s: &QTScalar) -> String {
    if s.is_one() {
        return String::new();
    }
    let body = latex_scalar(s);
    match s.as_poly() {
        Some(p) if p.is_monomial() => body,
        _ => format!("\\left({body}\\right)"),
    }
}

pub fn latex_label(l: &MPartition) -> String {
    let join = |v: &[u32]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    let lam = if l.lam.is_empty() { "\\emptyset".to_string() } else { join(&l.lam) };
    format!("{};{}", join(&l.a), lam)
}

pub fn latex_xpoly(f: &XPolynomial<QTScalar>) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = f
        .terms()
        .rev()
        .map(|(e, c)| {
            let mono: String = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| sup(&format!("x_{{{}}}", i + 1), x as u32))
                .collect();
            if mono.is_empty() {
                latex_scalar(c)
            } else {
                format!("{}{mono}", latex_coeff(c))
            }
        })
        .collect();
    terms.join(" + ")
}

pub fn latex_basis_name(e: &BasisExpansion) -> &'static str {
    match e.basis.name() {
        "s*" => "s^*",
        "HL" => "P^{HL}",
        other => other,
    }
}

pub fn latex_expansion(e: &BasisExpansion) -> String {
    let terms = e.terms();
    if terms.is_empty() {
        return "0".into();
    }
    let name = latex_basis_name(e);
    terms
        .iter()
        .map(|(l, c)| format!("{}{name}_{{{}}}", latex_coeff(c), latex_label(l)))
        .collect::<Vec<_>>()
        .join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_forms() {
        let p: QTPoly = "q^2*t^3 + t".parse().unwrap();
        assert_eq!(latex_poly(&p), "q^{2}t^{3} + t");
        let l: MPartition = "1,0|".parse().unwrap();
        assert_eq!(latex_label(&l), "1,0;\\emptyset");
        let s = QTScalar::one().checked_div(&QTScalar::from_poly("1 - t".parse().unwrap())).unwrap();
        assert!(latex_scalar(&s).starts_with("\\frac{"));
    }
}
