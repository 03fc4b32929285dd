//! Text and JSON forms of [`QTPoly`] and [`QTScalar`].
//!
//! Text: terms in canonical order, e.g. `q^2*t^2 + 1`, `-3*q*t + t^4`;
//! fractions as `(num)/(den)`. JSON: a polynomial is a list of
//! `[coefficient, deg_q, deg_t]` triples with the coefficient as a decimal
//! string; a scalar is `{"num": [...], "den": [...]}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::QTPoly;
use super::scalar::QTScalar;
use crate::error::Error;

impl fmt::Display for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (i, j, c)) in self.terms().iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || (*i == 0 && *j == 0) {
                factors.push(a.to_string());
            }
            for (v, e) in [("q", *i), ("t", *j)] {
                match e {
                    0 => {}
                    1 => factors.push(v.to_string()),
                    _ => factors.push(format!("{v}^{e}")),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

fn parse_err(token: &str, msg: &str) -> Error {
    Error::Parse { token: token.to_string(), msg: msg.to_string() }
}

fn parse_term(tok: &str) -> Result<(u32, u32, BigInt), Error> {
    let mut coeff = BigInt::one();
    let (mut dq, mut dt) = (0u32, 0u32);
    for factor in tok.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(parse_err(tok, "empty factor"));
        }
        let (base, exp) = match factor.split_once('^') {
            Some((b, e)) => {
                let e: u32 = e.trim().parse().map_err(|_| parse_err(factor, "bad exponent"))?;
                (b.trim(), e)
            }
            None => (factor, 1),
        };
        match base {
            "q" => dq += exp,
            "t" => dt += exp,
            _ => {
                if exp != 1 {
                    return Err(parse_err(factor, "exponent on a constant"));
                }
                let c: BigInt = base.parse().map_err(|_| parse_err(factor, "expected integer, q or t"))?;
                coeff *= c;
            }
        }
    }
    Ok((dq, dt, coeff))
}

impl FromStr for QTPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(parse_err(s, "empty polynomial"));
        }
        let mut terms = Vec::new();
        let mut sign = BigInt::one();
        let mut cur = String::new();
        let mut flush = |cur: &mut String, sign: &BigInt| -> Result<(), Error> {
            let tok = cur.trim().to_string();
            if tok.is_empty() {
                return Err(parse_err(s, "dangling sign"));
            }
            let (i, j, c) = parse_term(&tok)?;
            terms.push((i, j, c * sign));
            cur.clear();
            Ok(())
        };
        for ch in s.chars() {
            match ch {
                '+' | '-' => {
                    if !cur.trim().is_empty() {
                        flush(&mut cur, &sign)?;
                    }
                    sign = if ch == '-' { -BigInt::one() } else { BigInt::one() };
                }
                _ => cur.push(ch),
            }
        }
        flush(&mut cur, &sign)?;
        Ok(QTPoly::from_terms(terms))
    }
}

impl FromStr for QTScalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            let (num, den) = rest
                .split_once(")/(")
                .ok_or_else(|| parse_err(s, "expected (num)/(den)"))?;
            let den = den.strip_suffix(')').ok_or_else(|| parse_err(s, "missing closing parenthesis"))?;
            let (n, d): (QTPoly, QTPoly) = (num.parse()?, den.parse()?);
            if d.is_zero() {
                return Err(parse_err(den, "zero denominator"));
            }
            return QTScalar::new(n, d);
        }
        Ok(QTScalar::from_poly(s.parse()?))
    }
}

type Triple = (String, u32, u32);

impl Serialize for QTPoly {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Triple> = self.terms().iter().map(|(i, j, c)| (c.to_string(), *i, *j)).collect();
        v.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for QTPoly {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let v: Vec<Triple> = Vec::deserialize(de)?;
        let mut terms = Vec::with_capacity(v.len());
        for (c, i, j) in v {
            let c: BigInt = c.parse().map_err(|_| D::Error::custom(format!("bad coefficient `{c}`")))?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficient"));
            }
            terms.push((i, j, c));
        }
        Ok(QTPoly::from_terms(terms))
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    num: QTPoly,
    den: QTPoly,
}

impl Serialize for QTScalar {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ScalarRepr { num: self.numer().clone(), den: self.denom().clone() }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for QTScalar {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let r = ScalarRepr::deserialize(de)?;
        QTScalar::new(r.num, r.den).map_err(D::Error::custom)
    }
}
