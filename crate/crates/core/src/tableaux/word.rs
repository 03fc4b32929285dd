use crate::combinatorics::{inv_count, MPartition};
use crate::error::{contract, Error, Result};

use super::enumerate::bij_b;
use super::shape::{Alphabet, SkewTableau};

/// `σ_i` on a word in ordinary letters: letters `i+1, i` that become adjacent
/// after earlier pairings are married; the unmarried subword `i^r (i+1)^s`
/// becomes `i^s (i+1)^r`.
pub fn sigma_action(i: u32, w: &[i32]) -> Vec<i32> {
    let (a, b) = (i as i32, i as i32 + 1);
    let mut open: Vec<usize> = Vec::new();
    let mut free_a: Vec<usize> = Vec::new();
    let mut paired = vec![false; w.len()];
    for (k, &x) in w.iter().enumerate() {
        if x == b {
            open.push(k);
        } else if x == a {
            if let Some(o) = open.pop() {
                paired[o] = true;
                paired[k] = true;
            } else {
                free_a.push(k);
            }
        }
    }
    let free: Vec<usize> = (0..w.len()).filter(|&k| !paired[k] && (w[k] == a || w[k] == b)).collect();
    let r = free_a.len();
    let s = free.len() - r;
    let mut out = w.to_vec();
    for (n, &k) in free.iter().enumerate() {
        out[k] = if n < s { a } else { b };
    }
    out
}

fn unbar(m: u32, w: &[i32]) -> Vec<i32> {
    w.iter().map(|&x| if x < 0 { m as i32 + 1 + x } else { x }).collect()
}

fn rebar(m: u32, w: &[i32]) -> Vec<i32> {
    w.iter().map(|&x| x - m as i32 - 1).collect()
}

/// `σ̄_i` on a word in `1̄, …, m̄`: exchanges `\overline{m-i}` and `\overline{m-i+1}`.
pub fn sigma_bar(i: u32, m: u32, w: &[i32]) -> Vec<i32> {
    rebar(m, &sigma_action(i, &unbar(m, w)))
}

/// Which ascent of the evaluation is straightened first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reduction {
    Leftmost,
    Rightmost,
}

fn evaluation(w: &[i32]) -> Vec<usize> {
    let k = w.iter().copied().max().unwrap_or(0).max(0) as usize;
    let mut v = vec![0; k];
    for &x in w {
        v[x as usize - 1] += 1;
    }
    v
}

fn charge_dominant(w: &[i32]) -> u32 {
    let n = w.len();
    let mut used = vec![false; n];
    let mut total = 0;
    let mut left = n;
    while left > 0 {
        let mut letter = 1;
        let mut pos = match (0..n).rev().find(|&k| !used[k] && w[k] == 1) {
            Some(p) => p,
            None => break,
        };
        let mut level = 0;
        loop {
            used[pos] = true;
            left -= 1;
            total += level;
            letter += 1;
            let found = (0..pos).rev().find(|&k| !used[k] && w[k] == letter);
            pos = match found {
                Some(p) => p,
                None => match (pos + 1..n).rev().find(|&k| !used[k] && w[k] == letter) {
                    Some(p) => {
                        level += 1;
                        p
                    }
                    None => break,
                },
            };
        }
    }
    total
}

/// Charge of a word in ordinary letters, straightening the evaluation with
/// `σ_i` in the given order.
pub fn charge_with(w: &[i32], order: Reduction) -> Result<u32> {
    if w.iter().any(|&x| x <= 0) {
        return contract("charge expects ordinary letters");
    }
    let mut w = w.to_vec();
    loop {
        let v = evaluation(&w);
        let ascents: Vec<usize> = (0..v.len().saturating_sub(1)).filter(|&i| v[i] < v[i + 1]).collect();
        let pick = match order {
            Reduction::Leftmost => ascents.first(),
            Reduction::Rightmost => ascents.last(),
        };
        match pick {
            Some(&i) => w = sigma_action(i as u32 + 1, &w),
            None => return Ok(charge_dominant(&w)),
        }
    }
}

/// Lascoux–Schützenberger charge.
pub fn charge(w: &[i32]) -> Result<u32> {
    charge_with(w, Reduction::Leftmost)
}

/// Charge of a word in `1̄, …, m̄`, computed through `ī ↦ m + 1 - i`.
pub fn charge_barred(w: &[i32], m: u32) -> Result<u32> {
    if w.iter().any(|&x| x >= 0 || -x > m as i32) {
        return contract(format!("charge_barred expects letters ~1..~{m}"));
    }
    charge(&unbar(m, w))
}

/// `charge_{a,b}(T) = Inv(b) + charge(T̄ u_a)` with `T̄ = 𝔟^{-1}(T)` and
/// `u_a = Π_i (ī)^{a_1 - a_i}`.
pub fn charge_ab(a: &[u32], b: &[u32], t: &SkewTableau) -> Result<u32> {
    if a.windows(2).any(|w| w[0] < w[1]) {
        return contract(format!("charge_ab needs dominant a, got {a:?}"));
    }
    if a.len() != b.len() || t.alphabet != Alphabet::Plain {
        return contract("charge_ab needs compositions of equal length and a tableau in ordinary letters");
    }
    let mut lam = t.shape.outer.clone();
    for x in a.iter().filter(|&&x| x > 0) {
        let k = lam.iter().position(|y| y == x).ok_or_else(|| Error::Contract("shape does not contain a".into()))?;
        lam.remove(k);
    }
    let l = MPartition::new(a.to_vec(), lam)?;
    let o = MPartition::new(b.to_vec(), t.shape.inner.clone())?;
    let bar = bij_b(t, &l, &o)?;
    let mut w = bar.reading_word();
    let a1 = a.first().copied().unwrap_or(0);
    for (i, &ai) in a.iter().enumerate() {
        w.extend(std::iter::repeat(-(i as i32 + 1)).take((a1 - ai) as usize));
    }
    Ok(inv_count(b) as u32 + charge_barred(&w, a.len() as u32)?)
}

/// Space-separated letters, barred letters as `~i`.
pub fn format_word(w: &[i32]) -> String {
    w.iter().map(|&x| if x < 0 { format!("~{}", -x) } else { x.to_string() }).collect::<Vec<_>>().join(" ")
}

/// Parses `1 2 ~3` or, for single-digit ordinary letters, `123`.
pub fn parse_word(s: &str) -> Result<Vec<i32>> {
    let s = s.trim();
    let tokens: Vec<String> = if !s.contains(char::is_whitespace) && s.chars().all(|c| c.is_ascii_digit()) {
        s.chars().map(String::from).collect()
    } else {
        s.split_whitespace().map(String::from).collect()
    };
    tokens
        .iter()
        .map(|tok| {
            let (neg, body) = match tok.strip_prefix('~') {
                Some(rest) => (true, rest),
                None => (false, tok.as_str()),
            };
            match body.parse::<i32>() {
                Ok(v) if v > 0 => Ok(if neg { -v } else { v }),
                _ => Err(Error::Parse { token: tok.clone(), msg: "expected a positive letter".into() }),
            }
        })
        .collect()
}
